#ifndef NFORGE_VALUE_VECTOR_HPP
#define NFORGE_VALUE_VECTOR_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace nforge {

/// Point of Z^s ordered componentwise.  Branch-wise valuation orders; the
/// partial order is a <= b iff a_i <= b_i for every i, and a < b means
/// a <= b and a != b.  Containers sort these lexicographically.
class ValueVector {
 public:
  ValueVector() = default;
  explicit ValueVector(int branches, long fill = 0) : c_(branches, fill) {}
  ValueVector(std::initializer_list<long> coords) : c_(coords) {}
  explicit ValueVector(std::vector<long> coords) : c_(std::move(coords)) {}

  int branches() const { return static_cast<int>(c_.size()); }
  long operator[](int i) const { return c_[i]; }
  long& operator[](int i) { return c_[i]; }
  const std::vector<long>& coords() const { return c_; }

  /// |a| = a_1 + ... + a_s.
  long total() const;

  ValueVector operator+(const ValueVector& o) const;
  ValueVector operator-(const ValueVector& o) const;

  bool operator==(const ValueVector& o) const { return c_ == o.c_; }
  bool operator!=(const ValueVector& o) const { return c_ != o.c_; }
  /// Lexicographic; used only to keep containers sorted deterministically.
  bool operator<(const ValueVector& o) const { return c_ < o.c_; }

  std::string str() const;

 private:
  std::vector<long> c_;
};

ValueVector unit_vector(int branches, int axis);
ValueVector componentwise_min(const ValueVector& a, const ValueVector& b);
ValueVector componentwise_max(const ValueVector& a, const ValueVector& b);

/// a <= b in the product order.
bool leq(const ValueVector& a, const ValueVector& b);
/// a <= b and a != b.
bool lt(const ValueVector& a, const ValueVector& b);

std::ostream& operator<<(std::ostream& os, const ValueVector& v);

/// Calls fn(v) for every lattice point lo <= v <= hi, lexicographic order.
/// Does nothing if the box is empty in some coordinate.
void for_each_in_box(const ValueVector& lo, const ValueVector& hi,
                     const std::function<void(const ValueVector&)>& fn);

}  // namespace nforge

#endif
