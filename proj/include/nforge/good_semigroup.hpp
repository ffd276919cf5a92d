#ifndef NFORGE_GOOD_SEMIGROUP_HPP
#define NFORGE_GOOD_SEMIGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "nforge/value_vector.hpp"

namespace nforge {

/// Finite truncation of a subset of N^s that is determined near its
/// conductor: membership of an arbitrary a >= lo is decided by folding,
/// a in E  iff  min(a, conductor) is a stored element.  Both good
/// semigroups and their relative ideals reduce to this view for the box
/// scans, chains and sumsets.
struct BoxedSet {
  ValueVector lo;         // componentwise minimum, an element
  ValueVector conductor;  // every a >= conductor belongs to the set
  std::vector<ValueVector> elements;  // sorted lex, all within [lo, conductor]

  int branches() const { return lo.branches(); }
  bool contains(const ValueVector& a) const;
  /// Same set re-truncated at a larger corner (fold-expanded).
  BoxedSet extended_to(const ValueVector& new_conductor) const;
};

BoxedSet make_boxed(const ValueVector& lo, const ValueVector& conductor,
                    std::vector<ValueVector> elements);

/// s-branch value semigroup represented by its finite truncation up to the
/// conductor.  Membership of arbitrary a in N^s follows the box rule:
/// a in S iff min(a, conductor) is a small element.
class GoodSemigroup {
 public:
  GoodSemigroup() = default;
  GoodSemigroup(int branches, ValueVector conductor, std::vector<ValueVector> small_elements,
                std::string provenance = "");

  int branches() const { return branches_; }
  const ValueVector& conductor() const { return conductor_; }  // beta
  ValueVector frobenius() const;                               // gamma = beta - (1,..,1)
  const std::vector<ValueVector>& small_elements() const { return small_; }
  const std::string& provenance() const { return provenance_; }

  bool contains(const ValueVector& a) const;
  bool contains(long a) const;  // numerical shorthand, branches()==1

  /// min(S \ {0}); componentwise minimum, proved to lie in S for local
  /// value semigroups.  Throws invalid_semigroup if it does not.
  ValueVector multiplicity() const;

  /// Number of saturated-chain steps from 0 to the conductor inside S.
  /// For s=1 this is |S inter [0,beta]| - 1.
  BoxedSet boxed() const;

  /// Numerical shorthand: sorted exponents of S inter [0, beta], s=1 only.
  std::vector<long> small_numbers() const;

  bool operator==(const GoodSemigroup& o) const {
    return branches_ == o.branches_ && conductor_ == o.conductor_ && small_ == o.small_;
  }

 private:
  int branches_ = 1;
  ValueVector conductor_{std::vector<long>{0}};
  std::vector<ValueVector> small_{ValueVector{std::vector<long>{0}}};
  std::string provenance_;
};

/// Numerical semigroup generated by gens, truncated at its conductor.
GoodSemigroup from_numerical_generators(const std::vector<long>& gens);

/// Relative ideal E over a good semigroup S (E + S contained in E), box
/// truncated like the semigroup itself.
class IdealValueSet {
 public:
  IdealValueSet() = default;
  IdealValueSet(GoodSemigroup base, BoxedSet box) : base_(std::move(base)), box_(std::move(box)) {}

  const GoodSemigroup& base() const { return base_; }
  int branches() const { return box_.branches(); }
  const ValueVector& minimum() const { return box_.lo; }
  const ValueVector& conductor() const { return box_.conductor; }
  const std::vector<ValueVector>& elements() const { return box_.elements; }
  const BoxedSet& boxed() const { return box_; }

  bool contains(const ValueVector& a) const { return box_.contains(a); }
  bool contains(long a) const { return contains(ValueVector{a}); }

  /// Elements strictly below the base conductor beta: {a in E : a <= beta, a != beta}.
  std::vector<ValueVector> strict_part() const;

  bool operator==(const IdealValueSet& o) const {
    return box_.lo == o.box_.lo && box_.conductor == o.box_.conductor &&
           box_.elements == o.box_.elements;
  }

 private:
  GoodSemigroup base_;
  BoxedSet box_;
};

/// The ambient N^s truncated at the base conductor, as an ideal (models
/// the normalization value set).
IdealValueSet full_box_ideal(const GoodSemigroup& S);

/// S itself viewed as an ideal over S.
IdealValueSet semigroup_as_ideal(const GoodSemigroup& S);

struct AxiomCheck {
  bool pass = true;
  std::string witness;  // empty when pass
};

/// Per-axiom report for the good-semigroup axioms, with a violating pair
/// as witness on failure.  Report-valued: never throws on bad input.
struct AxiomReport {
  AxiomCheck zero;        // 0 in S and beta in S
  AxiomCheck min_closure; // a,b in S => min(a,b) in S
  AxiomCheck e2;          // property (E2)
  AxiomCheck conductor;   // beta is a genuine, minimal conductor
  bool all_pass() const {
    return zero.pass && min_closure.pass && e2.pass && conductor.pass;
  }
  std::string summary() const;
};

AxiomReport validate(const GoodSemigroup& S);

/// Ideal axioms: E + S subset of E, min-closure and (E2) inside the box.
AxiomReport validate_ideal(const IdealValueSet& E);

}  // namespace nforge

#endif
