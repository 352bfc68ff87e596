#include "finbool/measure.hpp"

#include <algorithm>
#include <bit>

#include "finbool/errors.hpp"

namespace finbool {

Measure::Measure(Algebra algebra, std::vector<Rational> atom_weights)
    : algebra_(std::move(algebra)), weights_(std::move(atom_weights)) {
  if (weights_.size() != algebra_.atoms().size())
    throw input_error("weight count " + std::to_string(weights_.size()) +
                      " does not match atom count " +
                      std::to_string(algebra_.atoms().size()));
  Rational total = 0;
  for (const Rational& w : weights_) {
    if (w < 0) throw input_error("negative atom weight");
    total += w;
  }
  if (total != 1) throw input_error("atom weights sum to " + rational_str(total));
}

Measure Measure::uniform(Algebra algebra) {
  std::size_t k = algebra.atoms().size();
  std::vector<Rational> w(k, Rational(1, k));
  return Measure(std::move(algebra), std::move(w));
}

Rational measure_of(const Measure& mu, const Mask& a) {
  if (!mu.algebra().contains(a))
    throw input_error("set is not a member of the measure's algebra");
  Rational total = 0;
  const auto& atoms = mu.algebra().atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i].subset_of(a)) total += mu.weights()[i];
  return total;
}

ProductMeasureResult product_measure_on_independent(const SetFamily& f,
                                                    std::size_t member_cap) {
  ProductMeasureResult out;
  IndependenceVerdict iv = is_independent(f, member_cap);
  out.independent = iv.independent;
  if (!iv.independent) {
    out.missing_cell = iv.missing_cell;
    return out;
  }
  Algebra alg = Algebra::generated_by(f);
  // Independence makes all 2^k sign cells nonempty, and the cells are
  // exactly the atoms of the generated algebra.
  if (alg.atoms().size() != (std::size_t{1} << f.size()))
    throw std::logic_error("independent family with collapsed cells");
  std::vector<Rational> w(alg.atoms().size(), half_power(f.size()));
  out.measure = Measure(std::move(alg), std::move(w));
  return out;
}

Rational min_pairwise_separation(const Measure& mu, const SetFamily& f) {
  if (f.size() < 2) throw input_error("separation needs at least two sets");
  std::optional<Rational> best;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      Rational d = measure_of(mu, f.members[i] ^ f.members[j]);
      if (!best || d < *best) best = d;
    }
  return *best;
}

SeparationProbe separated_independence_probe(const Measure& mu, const SetFamily& f,
                                             const Rational& eps) {
  if (f.size() < 2) throw input_error("separation needs at least two sets");
  SeparationProbe out;
  for (std::size_t i = 0; i < f.size() && out.separated; ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (measure_of(mu, f.members[i] ^ f.members[j]) < eps) {
        out.separated = false;
        out.offend_i = i;
        out.offend_j = j;
        break;
      }
    }
  out.best = max_independent(f);
  return out;
}

Rational nonatomic_threshold(const Measure& mu) {
  Rational best = 0;
  for (const Rational& w : mu.weights()) best = std::max(best, w);
  return best;
}

namespace {

// Elements of the subalgebra generated by `sub` inside mu's algebra,
// rendered as atom-index masks over mu's atoms; weights line up by index.
std::vector<std::uint64_t> subalgebra_atom_masks(const Measure& mu,
                                                 const SetFamily& sub,
                                                 std::size_t cap_log2) {
  for (const Mask& s : sub.members)
    if (!mu.algebra().contains(s))
      throw input_error("subfamily member outside the measure's algebra");
  if (mu.algebra().atoms().size() > 64)
    throw resource_error("defect computation limited to 64 atoms");
  Algebra gen = sub.members.empty()
                    ? Algebra::trivial(mu.algebra().ground())
                    : Algebra::generated_by(
                          SetFamily(mu.algebra().ground(), sub.members));
  std::vector<Mask> elems = gen.elements(cap_log2);
  std::vector<std::uint64_t> out;
  out.reserve(elems.size());
  const auto& atoms = mu.algebra().atoms();
  for (const Mask& e : elems) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i].subset_of(e)) bits |= std::uint64_t{1} << i;
    out.push_back(bits);
  }
  return out;
}

Rational weight_of_bits(const Measure& mu, std::uint64_t bits) {
  Rational total = 0;
  while (bits) {
    unsigned i = static_cast<unsigned>(std::countr_zero(bits));
    total += mu.weights()[i];
    bits &= bits - 1;
  }
  return total;
}

}  // namespace

Rational type_defect(const Measure& mu, const SetFamily& sub, std::size_t cap_log2) {
  std::vector<std::uint64_t> subs = subalgebra_atom_masks(mu, sub, cap_log2);
  const std::size_t n_atoms = mu.algebra().atoms().size();
  if (n_atoms > cap_log2)
    throw resource_error("full algebra enumeration capped at 2^" +
                         std::to_string(cap_log2));
  Rational worst = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n_atoms); ++a) {
    std::optional<Rational> close;
    for (std::uint64_t b : subs) {
      Rational d = weight_of_bits(mu, a ^ b);
      if (!close || d < *close) close = d;
    }
    worst = std::max(worst, *close);
  }
  return worst;
}

Rational determination_defect(const Measure& mu, const SetFamily& sub,
                              std::size_t cap_log2) {
  std::vector<std::uint64_t> subs = subalgebra_atom_masks(mu, sub, cap_log2);
  const std::size_t n_atoms = mu.algebra().atoms().size();
  if (n_atoms > cap_log2)
    throw resource_error("full algebra enumeration capped at 2^" +
                         std::to_string(cap_log2));
  Rational worst = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n_atoms); ++a) {
    std::optional<Rational> gap;
    for (std::uint64_t b : subs) {
      if ((b & ~a) != 0) continue;  // need b <= a
      Rational d = weight_of_bits(mu, a & ~b);
      if (!gap || d < *gap) gap = d;
    }
    // b = 0 is always an option, so gap is set.
    worst = std::max(worst, *gap);
  }
  return worst;
}

AtomCheckResult i1_atom_check(const SetFamily& g0, const Mask& g) {
  if (g.ground() != g0.ground) throw input_error("ground size mismatch");
  AtomCheckResult out;

  SetFamily combined = g0;
  combined.members.push_back(g);
  MaxIndependentResult pair = max_independent(combined, 2);
  if (pair.size >= 2) {
    out.status = AtomCheckResult::Status::precondition_failed;
    out.pair = pair.members;
    return out;
  }

  Algebra b = g0.members.empty() ? Algebra::trivial(g0.ground)
                                 : Algebra::generated_by(g0);
  if (b.contains(g)) {
    out.status = AtomCheckResult::Status::in_algebra;
    out.lower = g;
    out.upper = g;
    return out;
  }

  Mask lower(g0.ground), upper(g0.ground);
  for (const Mask& at : b.atoms()) {
    if (at.subset_of(g)) lower = lower | at;
    if (at.intersects(g)) upper = upper | at;
  }
  out.lower = lower;
  out.upper = upper;
  Mask gap = upper - lower;
  bool is_atom = std::find(b.atoms().begin(), b.atoms().end(), gap) != b.atoms().end();
  out.status = is_atom ? AtomCheckResult::Status::atom : AtomCheckResult::Status::violated;
  return out;
}

}  // namespace finbool
