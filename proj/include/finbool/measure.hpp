#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "finbool/algebra.hpp"
#include "finbool/independence.hpp"
#include "finbool/mask.hpp"
#include "finbool/rational.hpp"

namespace finbool {

// Finitely additive probability measure on a finite algebra, given by one
// nonnegative weight per atom; weights sum to exactly 1.
class Measure {
 public:
  Measure(Algebra algebra, std::vector<Rational> atom_weights);
  static Measure uniform(Algebra algebra);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  Algebra algebra_;
  std::vector<Rational> weights_;
};

// Sum of the weights of the atoms inside a.  Requires a in the algebra.
Rational measure_of(const Measure& mu, const Mask& a);

struct ProductMeasureResult {
  bool independent = false;
  Mask missing_cell;  // valid iff !independent
  std::optional<Measure> measure;
};

// For an independent family of size k, the measure on the generated algebra
// giving every sign cell mass 2^-k; every generator then has mass 1/2.
ProductMeasureResult product_measure_on_independent(const SetFamily& f,
                                                    std::size_t member_cap = 16);

// Least mu(a_i xor a_j) over pairs i < j.  Needs at least two members, all
// in the algebra.
Rational min_pairwise_separation(const Measure& mu, const SetFamily& f);

struct SeparationProbe {
  bool separated = true;
  std::size_t offend_i = 0, offend_j = 0;  // first pair below eps, iff !separated
  MaxIndependentResult best;               // largest independent subfamily found
};

// Observational: reports whether the family is eps-separated under mu, and
// how much independence it carries either way.
SeparationProbe separated_independence_probe(const Measure& mu, const SetFamily& f,
                                             const Rational& eps);

// Largest atom weight: partitions into sets of measure < eps exist for every
// eps above this value and for none at or below it.
Rational nonatomic_threshold(const Measure& mu);

// Worst-case distance from a member of the full algebra to the subalgebra
// generated by `sub`: max over a of min over b of mu(a xor b).
Rational type_defect(const Measure& mu, const SetFamily& sub, std::size_t cap_log2 = 20);

// Worst-case mass unreachable from below: max over a of min over b <= a of
// mu(a - b), with b ranging over the subalgebra generated by `sub`.
Rational determination_defect(const Measure& mu, const SetFamily& sub,
                              std::size_t cap_log2 = 20);

struct AtomCheckResult {
  enum class Status { atom, in_algebra, violated, precondition_failed };
  Status status = Status::atom;
  // lower: union of atoms inside g; upper: union of atoms meeting g.
  Mask lower, upper;
  // Independent pair witnessing a precondition failure; indices address
  // g0's members, with g0.size() standing for g itself.
  std::vector<std::size_t> pair;
};

// When no two sets among g0 and g are independent, g either lies in the
// algebra generated by g0 or squeezes between lower and upper bounds that
// differ by exactly one atom.  `violated` would refute that and is reported,
// never repaired.
AtomCheckResult i1_atom_check(const SetFamily& g0, const Mask& g);

}  // namespace finbool
