#include "nforge/valuation_engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "nforge/errors.hpp"
#include "nforge/linalg.hpp"
#include "nforge/semigroup_ops.hpp"

namespace nforge {

std::vector<Rat> expand_at(const Poly& f, const Rat& center, long order) {
  if (order < 0) fail(errc::invalid_argument, "expansion order must be >= 0");
  return f.expand_at(center, order);
}

namespace {

// Per-branch truncated series of one algebra element.
struct BranchSeries {
  std::vector<std::vector<Rat>> b;  // b[i][k]: coefficient of (t - c_i)^k

  std::vector<Rat> concat() const {
    std::vector<Rat> row;
    for (const auto& s : b) row.insert(row.end(), s.begin(), s.end());
    return row;
  }
};

BranchSeries expand_series(const Poly& p, const std::vector<Rat>& centers, long order) {
  BranchSeries out;
  for (const auto& c : centers) out.b.push_back(p.expand_at(c, order));
  return out;
}

// One local-ring generator: a component per branch together with the
// center it expands at.  Global generators expand one polynomial at every
// fiber center; prescribed multibranch generators expand each component
// in its own local parameter (center 0).
struct LocalElement {
  std::vector<std::pair<Poly, Rat>> comps;  // (polynomial, expansion center)

  BranchSeries expand(long order) const {
    BranchSeries out;
    for (const auto& [p, c] : comps) out.b.push_back(p.expand_at(c, order));
    return out;
  }
};

BranchSeries mul_series(const BranchSeries& x, const BranchSeries& y) {
  BranchSeries out;
  out.b.resize(x.b.size());
  for (size_t i = 0; i < x.b.size(); ++i) {
    const auto& a = x.b[i];
    const auto& b = y.b[i];
    const size_t n = a.size();
    out.b[i].assign(n, Rat(0));
    for (size_t j = 0; j < n; ++j) {
      if (a[j] == 0) continue;
      for (size_t k = 0; k + j < n; ++k)
        if (b[k] != 0) out.b[i][j + k] += a[j] * b[k];
    }
  }
  return out;
}

// Window image of the module sum_j q_j * k[local generators]: independent
// representative rows, found by closing the span of {1} under
// multiplication by the generators and then multiplying by the q_j.
struct SpanWindow {
  int s = 1;
  long order = 0;  // series truncated at (t-c)^order inclusive
  std::vector<std::vector<Rat>> rows;
};

SpanWindow span_window(const std::vector<LocalElement>& local_gens,
                       const std::vector<LocalElement>& module_gens,
                       const std::vector<Rat>& centers, long order) {
  SpanWindow out;
  out.s = static_cast<int>(centers.size());
  out.order = order;

  std::vector<BranchSeries> gen_series;
  for (const auto& g : local_gens) gen_series.push_back(g.expand(order));

  // Algebra closure from 1.
  std::vector<BranchSeries> reps;
  IncrementalRank alg_rank;
  std::vector<size_t> queue;
  auto try_add = [&](BranchSeries cand) {
    if (!alg_rank.add_column(cand.concat())) return;
    reps.push_back(std::move(cand));
    queue.push_back(reps.size() - 1);
  };
  try_add(expand_series(Poly(Rat(1)), centers, order));
  while (!queue.empty()) {
    const size_t idx = queue.back();
    queue.pop_back();
    for (const auto& g : gen_series) try_add(mul_series(reps[idx], g));
  }

  // Module rows.
  IncrementalRank mod_rank;
  for (const auto& q : module_gens) {
    const BranchSeries qs = q.expand(order);
    for (const auto& r : reps) {
      std::vector<Rat> row = mul_series(r, qs).concat();
      if (mod_rank.add_column(row)) out.rows.push_back(std::move(row));
    }
  }
  return out;
}

// Global polynomials as local elements: one expansion per fiber center.
std::vector<LocalElement> as_local_elements(const std::vector<Poly>& polys,
                                            const std::vector<Rat>& centers) {
  std::vector<LocalElement> out;
  for (const auto& p : polys) {
    LocalElement el;
    for (const auto& c : centers) el.comps.emplace_back(p, c);
    out.push_back(std::move(el));
  }
  return out;
}

// Prescribed per-branch generators: each component in its own parameter.
std::vector<LocalElement> as_local_elements(const std::vector<std::vector<Poly>>& tuples) {
  std::vector<LocalElement> out;
  for (const auto& comps : tuples) {
    LocalElement el;
    for (const auto& c : comps) el.comps.emplace_back(c, Rat(0));
    out.push_back(std::move(el));
  }
  return out;
}

std::vector<LocalElement> sheaf_local_elements(const SheafModel& F,
                                               const std::vector<Rat>& fiber) {
  return F.prescribed() ? as_local_elements(F.branch_generators)
                        : as_local_elements(F.generators, fiber);
}

// rank(A[:, P_a]) for every staircase P_a = union_i {branch i, positions
// < a_i}, a in [0, limit+1]^s, as a flat mixed-radix table.
struct RankTable {
  int s = 1;
  long side = 0;  // entries per axis = limit + 2
  std::vector<long> r;

  long& at(const ValueVector& a) {
    long idx = 0;
    for (int i = 0; i < s; ++i) idx = idx * side + a[i];
    return r[idx];
  }
  long at(const ValueVector& a) const { return const_cast<RankTable*>(this)->at(a); }
};

RankTable rank_table(const SpanWindow& span, long limit) {
  const int s = span.s;
  RankTable table;
  table.s = s;
  table.side = limit + 2;
  long cells = 1;
  for (int i = 0; i < s; ++i) cells *= table.side;
  table.r.assign(cells, 0);

  // Drop rows that vanish on the profiled columns.
  const long W = span.order + 1;
  std::vector<const std::vector<Rat>*> rows;
  for (const auto& r : span.rows) {
    bool nonzero = false;
    for (int i = 0; i < s && !nonzero; ++i)
      for (long k = 0; k <= limit + 1 && k < W && !nonzero; ++k)
        if (r[i * W + k] != 0) nonzero = true;
    if (nonzero) rows.push_back(&r);
  }
  const size_t nrows = rows.size();
  auto column = [&](int branch, long pos) {
    std::vector<Rat> col(nrows);
    for (size_t i = 0; i < nrows; ++i)
      col[i] = pos < W ? (*rows[i])[branch * W + pos] : Rat(0);
    return col;
  };

  // Iterate prefixes over the first s-1 axes, then walk the last axis
  // with an incremental column basis.
  ValueVector prefix(s, 0);
  std::function<void(int)> walk = [&](int axis) {
    if (axis == s - 1) {
      IncrementalRank inc;
      for (int i = 0; i < s - 1; ++i)
        for (long k = 0; k < prefix[i]; ++k) inc.add_column(column(i, k));
      ValueVector a = prefix;
      for (long k = 0; k <= limit + 1; ++k) {
        a[s - 1] = k;
        table.at(a) = inc.rank();
        if (k <= limit) inc.add_column(column(s - 1, k));
      }
      return;
    }
    for (long k = 0; k <= limit + 1; ++k) {
      prefix[axis] = k;
      walk(axis + 1);
    }
  };
  walk(0);
  return table;
}

struct ScanResult {
  bool settled = false;
  ValueVector lo, beta;
  std::vector<ValueVector> elements;  // achieved values in [lo, beta]
  bool operator==(const ScanResult& o) const {
    return lo == o.lo && beta == o.beta && elements == o.elements;
  }
};

ScanResult scan_values(const SpanWindow& span, long limit) {
  const int s = span.s;
  ScanResult res;
  const RankTable R = rank_table(span, limit);

  const ValueVector zero(s, 0);
  ValueVector hi(s, limit);
  std::set<ValueVector> achieved;
  for_each_in_box(zero, hi, [&](const ValueVector& a) {
    for (int i = 0; i < s; ++i) {
      ValueVector up = a + unit_vector(s, i);
      if (R.at(up) <= R.at(a)) return;
    }
    achieved.insert(a);
  });
  if (achieved.empty()) return res;

  ValueVector lo = *achieved.begin();
  for (const auto& a : achieved) lo = componentwise_min(lo, a);
  if (!achieved.count(lo)) return res;  // not fold-shaped yet

  // tail_ok[a]: every b >= a inside the box is achieved.
  std::map<ValueVector, bool> tail_ok;
  std::vector<ValueVector> cells;
  for_each_in_box(zero, hi, [&](const ValueVector& a) { cells.push_back(a); });
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    const ValueVector& a = *it;
    bool ok = achieved.count(a) > 0;
    for (int i = 0; i < s && ok; ++i) {
      if (a[i] == limit) continue;
      if (!tail_ok[a + unit_vector(s, i)]) ok = false;
    }
    tail_ok[a] = ok;
  }
  std::optional<ValueVector> beta;
  for (const auto& [a, ok] : tail_ok) {
    if (!ok) continue;
    beta = beta ? componentwise_min(*beta, a) : a;
  }
  if (!beta || !tail_ok[*beta]) return res;
  // Margin: the conductor must sit well inside the scanned box.
  for (int i = 0; i < s; ++i)
    if (2 * (*beta)[i] + 2 > limit) return res;

  res.settled = true;
  res.lo = lo;
  res.beta = *beta;
  for (const auto& a : achieved)
    if (leq(a, *beta)) res.elements.push_back(a);
  return res;
}

struct FiberSetup {
  std::vector<Rat> centers;
  std::vector<LocalElement> local_gens;  // fiber-normalized, vanishing at each center
  long max_order = 1;
};

FiberSetup fiber_setup(const CurveSpec& curve, const std::vector<Rat>& fiber) {
  if (fiber.empty()) fail(errc::invalid_argument, "empty fiber");
  bool declared = false;
  for (const auto& f : curve.singular_fibers)
    if (f == fiber) declared = true;
  if (!declared) fail(errc::invalid_argument, "fiber not declared in the curve");

  FiberSetup setup;
  setup.centers = fiber;

  if (curve.kind == CurveSpec::Kind::multibranch) {
    for (const auto& gen : curve.branch_generators) {
      if (gen.size() != fiber.size())
        fail(errc::invalid_argument, "generator component count differs from branch count");
      LocalElement el;
      for (const auto& comp : gen) {
        const long ord = comp.order_at(Rat(0));
        if (ord < 1)
          fail(errc::not_singular, "branch component " + comp.str() + " is a local unit");
        setup.max_order = std::max(setup.max_order, ord);
        el.comps.emplace_back(comp, Rat(0));
      }
      setup.local_gens.push_back(std::move(el));
    }
    if (setup.local_gens.empty()) fail(errc::not_singular, "no local generators");
    return setup;
  }

  for (const auto& g : curve.generator_polys()) {
    const Rat w = g.eval(fiber.front());
    for (const auto& c : fiber)
      if (g.eval(c) != w)
        fail(errc::invalid_argument, "fiber points disagree on generator " + g.str());
    Poly local = g - Poly(w);
    if (local.is_zero()) continue;
    LocalElement el;
    for (const auto& c : fiber) {
      const long ord = local.order_at(c);
      if (ord < 1)
        fail(errc::not_singular,
             "generator " + g.str() + " is a local unit at t = " + Rat(c).get_str());
      setup.max_order = std::max(setup.max_order, ord);
      el.comps.emplace_back(local, c);
    }
    setup.local_gens.push_back(std::move(el));
  }
  if (setup.local_gens.empty()) fail(errc::not_singular, "no nonconstant local generators");
  return setup;
}

ScanResult stabilized_scan_uncached(const FiberSetup& setup,
                                    const std::vector<LocalElement>& module_gens,
                                    long window_floor = 0) {
  long window = std::max({12L, 2 * setup.max_order + 4, window_floor});
  ScanResult prev;
  bool have_prev = false;
  int agreements = 0;
  for (int round = 0; round < 7; ++round) {
    const SpanWindow span = span_window(setup.local_gens, module_gens, setup.centers, window);
    const ScanResult cur = scan_values(span, window - 1);
    if (cur.settled) {
      if (have_prev && cur == prev) {
        ++agreements;
        if (agreements >= 2) return cur;  // unchanged through two consecutive growths
      } else {
        agreements = 0;
      }
      prev = cur;
      have_prev = true;
    } else {
      have_prev = false;
      agreements = 0;
    }
    window = window + (window + 1) / 2;
  }
  fail(errc::no_stabilization, "value-set scan did not stabilize within the window guard");
}

// Repeated pencil and section computations revisit the same fiber scans;
// the results are pure functions of (local generators, centers, module).
std::mutex scan_memo_mutex;
std::map<std::string, ScanResult> scan_memo;

std::string scan_key(const FiberSetup& setup, const std::vector<LocalElement>& module_gens) {
  std::ostringstream os;
  auto put = [&os](const LocalElement& g) {
    for (const auto& [p, c] : g.comps) os << p.str() << '@' << c.get_str() << ',';
    os << ';';
  };
  for (const auto& c : setup.centers) os << c.get_str() << ';';
  os << '|';
  for (const auto& g : setup.local_gens) put(g);
  os << '|';
  for (const auto& g : module_gens) put(g);
  return os.str();
}

ScanResult stabilized_scan(const FiberSetup& setup, const std::vector<LocalElement>& module_gens) {
  const std::string key = scan_key(setup, module_gens);
  {
    std::lock_guard<std::mutex> lock(scan_memo_mutex);
    auto it = scan_memo.find(key);
    if (it != scan_memo.end()) return it->second;
  }
  ScanResult res = stabilized_scan_uncached(setup, module_gens);
  std::lock_guard<std::mutex> lock(scan_memo_mutex);
  scan_memo.emplace(key, res);
  return res;
}

}  // namespace

namespace {

GoodSemigroup semigroup_from_scan(const ScanResult& scan, int s) {
  if (scan.lo != ValueVector(s, 0))
    fail(errc::invalid_argument, "local ring scan does not contain the units");
  if (scan.beta == ValueVector(s, 0))
    fail(errc::not_singular, "declared fiber is a smooth point of the model");
  return GoodSemigroup(s, scan.beta, scan.elements, "curve fiber");
}

}  // namespace

GoodSemigroup local_value_semigroup(const CurveSpec& curve, const std::vector<Rat>& fiber) {
  if (curve.kind == CurveSpec::Kind::monomial) {
    if (fiber.size() != 1 || fiber.front() != 0)
      fail(errc::invalid_argument, "monomial curves are singular over t = 0 only");
    return from_numerical_generators(curve.monomial_exponents);
  }
  const FiberSetup setup = fiber_setup(curve, fiber);
  const ScanResult scan = stabilized_scan(setup, as_local_elements({Poly(Rat(1))}, fiber));
  return semigroup_from_scan(scan, static_cast<int>(fiber.size()));
}

GoodSemigroup local_value_semigroup_deep(const CurveSpec& curve, const std::vector<Rat>& fiber,
                                         long window_floor) {
  if (curve.kind == CurveSpec::Kind::monomial) return local_value_semigroup(curve, fiber);
  const FiberSetup setup = fiber_setup(curve, fiber);
  const ScanResult scan =
      stabilized_scan_uncached(setup, as_local_elements({Poly(Rat(1))}, fiber), window_floor);
  return semigroup_from_scan(scan, static_cast<int>(fiber.size()));
}

IdealValueSet local_ideal_values(const CurveSpec& curve, const std::vector<Rat>& fiber,
                                 const std::vector<Poly>& sheaf_generators) {
  const GoodSemigroup S = local_value_semigroup(curve, fiber);
  if (curve.kind == CurveSpec::Kind::monomial) {
    // Monomial fast path: the module value set is the union of shifted
    // copies of S; no cancellations occur between distinct monomials.
    std::set<long> exps;
    for (const auto& f : sheaf_generators) {
      long nonzero = -1;
      for (long k = 0; k <= f.degree(); ++k)
        if (f.coeff(k) != 0) {
          if (nonzero >= 0)
            fail(errc::unsupported_model, "monomial sheaves need monomial generators");
          nonzero = k;
        }
      if (nonzero < 0) fail(errc::invalid_argument, "zero sheaf generator");
      exps.insert(nonzero);
    }
    const long beta = S.conductor()[0];
    const long lo = *exps.begin();
    std::set<long> vals{beta};
    for (long e : exps)
      for (long v = 0; e + v <= beta; ++v)
        if (S.contains(v)) vals.insert(e + v);
    std::vector<ValueVector> elements;
    for (long v : vals) elements.push_back(ValueVector{v});
    return IdealValueSet(S, make_boxed(ValueVector{lo}, S.conductor(), std::move(elements)));
  }
  const FiberSetup setup = fiber_setup(curve, fiber);
  const ScanResult scan = stabilized_scan(setup, as_local_elements(sheaf_generators, fiber));
  return IdealValueSet(S, make_boxed(scan.lo, scan.beta, scan.elements));
}

IdealValueSet local_ideal_values(const CurveSpec& curve, const std::vector<Rat>& fiber,
                                 const SheafModel& sheaf) {
  if (!sheaf.prescribed()) return local_ideal_values(curve, fiber, sheaf.generators);
  const GoodSemigroup S = local_value_semigroup(curve, fiber);
  const FiberSetup setup = fiber_setup(curve, fiber);
  const ScanResult scan = stabilized_scan(setup, as_local_elements(sheaf.branch_generators));
  return IdealValueSet(S, make_boxed(scan.lo, scan.beta, scan.elements));
}

DegreeTable sheaf_degree(const SheafModel& F) {
  DegreeTable table;
  for (const auto& fiber : F.curve.singular_fibers) {
    const GoodSemigroup S = local_value_semigroup(F.curve, fiber);
    const IdealValueSet E = local_ideal_values(F.curve, fiber, F);
    table.per_fiber.push_back(distance(E.boxed(), S.boxed()));
  }
  table.at_infinity = F.pole_at_infinity();
  table.total = table.at_infinity;
  for (long d : table.per_fiber) table.total += d;
  return table;
}

long h0_sheaf(const SheafModel& F) {
  const long M = F.pole_at_infinity();
  if (F.curve.kind == CurveSpec::Kind::monomial) {
    if (F.curve.singular_fibers.empty()) return M + 1;  // smooth rational model
    const IdealValueSet E = local_ideal_values(F.curve, F.curve.singular_fibers.front(),
                                               F.generators);
    long count = 0;
    for (long v = E.minimum()[0]; v <= M; ++v)
      if (E.contains(v)) ++count;
    return count;
  }

  // Sections are polynomials of degree <= M whose truncation lies in the
  // module window at every singular fiber.  h0 = (M+1) - rank(T mod V)
  // where T stacks the monomial rows and V the per-fiber span rows.
  std::vector<SpanWindow> spans;
  std::vector<std::vector<Rat>> centers_list;
  long total_cols = 0;
  std::vector<long> col_offset;
  for (const auto& fiber : F.curve.singular_fibers) {
    const FiberSetup setup = fiber_setup(F.curve, fiber);
    const auto module = sheaf_local_elements(F, fiber);
    // window: reuse the stabilized ideal scan to know a safe depth
    const ScanResult scan = stabilized_scan(setup, module);
    long deep = 0;
    for (int i = 0; i < scan.beta.branches(); ++i) deep = std::max(deep, scan.beta[i]);
    const long window = 2 * deep + 4;
    spans.push_back(span_window(setup.local_gens, module, fiber, window));
    centers_list.push_back(fiber);
    col_offset.push_back(total_cols);
    total_cols += static_cast<long>(fiber.size()) * (window + 1);
  }
  if (spans.empty()) return M + 1;

  RatMatrix mat;
  long v_rows = 0;
  for (size_t p = 0; p < spans.size(); ++p)
    for (const auto& r : spans[p].rows) {
      std::vector<Rat> row(total_cols, Rat(0));
      std::copy(r.begin(), r.end(), row.begin() + col_offset[p]);
      mat.push_back(std::move(row));
      ++v_rows;
    }
  const long v_rank = rank_rational(mat);

  for (long k = 0; k <= M; ++k) {
    const Poly mono = Poly::monomial(k);
    std::vector<Rat> row(total_cols, Rat(0));
    for (size_t p = 0; p < spans.size(); ++p) {
      const BranchSeries bs = expand_series(mono, centers_list[p], spans[p].order);
      const auto flat = bs.concat();
      std::copy(flat.begin(), flat.end(), row.begin() + col_offset[p]);
    }
    mat.push_back(std::move(row));
  }
  const long full_rank = rank_rational(mat);
  return (M + 1) - (full_rank - v_rank);
}

bool achieved_value_has_witness(const CurveSpec& curve, const std::vector<Rat>& fiber,
                                const ValueVector& a, int retries) {
  const FiberSetup setup = fiber_setup(curve, fiber);
  long window = 0;
  for (int i = 0; i < a.branches(); ++i) window = std::max(window, a[i]);
  window = 2 * window + 6;
  const SpanWindow span =
      span_window(setup.local_gens, as_local_elements({Poly(Rat(1))}, fiber), fiber, window);
  const long W = span.order + 1;
  const int s = span.s;

  // Basis of the subspace of rows vanishing below a: eliminate with the
  // constrained columns first; basis rows are those with leading entry
  // outside the constrained block.
  std::vector<long> cols;
  for (int i = 0; i < s; ++i)
    for (long k = 0; k < a[i]; ++k) cols.push_back(i * W + k);
  std::set<long> constrained(cols.begin(), cols.end());
  for (long c = 0; c < s * W; ++c)
    if (!constrained.count(c)) cols.push_back(c);

  RatMatrix m;
  for (const auto& r : span.rows) {
    std::vector<Rat> perm(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) perm[j] = r[cols[j]];
    m.push_back(std::move(perm));
  }
  // row echelon
  size_t row = 0;
  for (size_t col = 0; col < cols.size() && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols.size(); ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  std::vector<std::vector<Rat>> basis;
  for (size_t i = 0; i < row; ++i) {
    size_t lead = 0;
    while (lead < cols.size() && m[i][lead] == 0) ++lead;
    if (lead >= constrained.size()) basis.push_back(m[i]);
  }
  if (basis.empty()) return false;

  std::mt19937 rng(20240915);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<Rat> combo(cols.size(), Rat(0));
    for (const auto& b : basis) {
      const int c = attempt == 0 ? 1 : coef(rng);
      if (c == 0) continue;
      for (size_t j = 0; j < cols.size(); ++j) combo[j] += Rat(c) * b[j];
    }
    // leading orders per branch, in original column order
    std::vector<Rat> orig(s * W, Rat(0));
    for (size_t j = 0; j < cols.size(); ++j) orig[cols[j]] = combo[j];
    bool ok = true;
    for (int i = 0; i < s && ok; ++i) {
      long ord = -1;
      for (long k = 0; k < W; ++k)
        if (orig[i * W + k] != 0) {
          ord = k;
          break;
        }
      if (ord != a[i]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace nforge
