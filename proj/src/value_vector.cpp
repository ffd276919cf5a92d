#include "nforge/value_vector.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "nforge/errors.hpp"

namespace nforge {

long ValueVector::total() const {
  return std::accumulate(c_.begin(), c_.end(), 0L);
}

ValueVector ValueVector::operator+(const ValueVector& o) const {
  ValueVector r(*this);
  for (int i = 0; i < branches(); ++i) r.c_[i] += o.c_[i];
  return r;
}

ValueVector ValueVector::operator-(const ValueVector& o) const {
  ValueVector r(*this);
  for (int i = 0; i < branches(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

std::string ValueVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

ValueVector unit_vector(int branches, int axis) {
  ValueVector e(branches, 0);
  e[axis] = 1;
  return e;
}

ValueVector componentwise_min(const ValueVector& a, const ValueVector& b) {
  ValueVector r(a);
  for (int i = 0; i < a.branches(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

ValueVector componentwise_max(const ValueVector& a, const ValueVector& b) {
  ValueVector r(a);
  for (int i = 0; i < a.branches(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool leq(const ValueVector& a, const ValueVector& b) {
  for (int i = 0; i < a.branches(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool lt(const ValueVector& a, const ValueVector& b) { return leq(a, b) && a != b; }

std::ostream& operator<<(std::ostream& os, const ValueVector& v) {
  if (v.branches() == 1) return os << v[0];
  os << '(';
  for (int i = 0; i < v.branches(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

void for_each_in_box(const ValueVector& lo, const ValueVector& hi,
                     const std::function<void(const ValueVector&)>& fn) {
  const int s = lo.branches();
  for (int i = 0; i < s; ++i)
    if (lo[i] > hi[i]) return;
  ValueVector cur(lo);
  while (true) {
    fn(cur);
    int i = s - 1;
    while (i >= 0) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (int j = i + 1; j < s; ++j) cur[j] = lo[j];
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
}

}  // namespace nforge
