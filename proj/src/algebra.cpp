#include "finbool/algebra.hpp"

#include <algorithm>

#include "finbool/errors.hpp"

namespace finbool {

namespace {

// Calls fn once per partition of {0,...,n-1}, passing block labels as a
// restricted growth string (labels[i] <= 1 + max of labels[0..i-1]).
template <typename Fn>
void for_each_partition(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> labels(n, 0);
  while (true) {
    fn(labels);
    std::size_t i = n;
    while (i-- > 1) {
      std::size_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, labels[j]);
      if (labels[i] <= cap) {
        ++labels[i];
        for (std::size_t j = i + 1; j < n; ++j) labels[j] = 0;
        break;
      }
      labels[i] = 0;
    }
    if (i == 0 || n <= 1) return;
  }
}

}  // namespace

Algebra Algebra::trivial(std::size_t ground) {
  if (ground == 0) throw input_error("ground size must be positive");
  Algebra a;
  a.ground_ = ground;
  a.atoms_.push_back(Mask::full(ground));
  return a;
}

Algebra Algebra::generated_by(const SetFamily& gens) {
  Algebra a = trivial(gens.ground);
  for (const Mask& g : gens.members) a = a.extended_by(g);
  return a;
}

Algebra Algebra::from_atoms(std::size_t ground, std::vector<Mask> atoms) {
  if (ground == 0) throw input_error("ground size must be positive");
  Mask seen(ground);
  for (const Mask& at : atoms) {
    if (at.ground() != ground) throw input_error("atom ground mismatch");
    if (at.none()) throw input_error("empty atom");
    if (at.intersects(seen)) throw input_error("atoms overlap");
    seen = seen | at;
  }
  if (!seen.all()) throw input_error("atoms do not cover the ground set");
  Algebra a;
  a.ground_ = ground;
  a.atoms_ = std::move(atoms);
  a.sort_atoms();
  return a;
}

bool Algebra::contains(const Mask& x) const {
  if (x.ground() != ground_)
    throw input_error("ground size mismatch in membership test");
  for (const Mask& at : atoms_)
    if (at.intersects(x) && !at.subset_of(x)) return false;
  return true;
}

Algebra Algebra::extended_by(const Mask& x) const {
  if (x.ground() != ground_)
    throw input_error("ground size mismatch in extension");
  Algebra r;
  r.ground_ = ground_;
  r.atoms_.reserve(atoms_.size() * 2);
  for (const Mask& at : atoms_) {
    Mask in = at & x;
    Mask out = at - x;
    if (!in.none()) r.atoms_.push_back(std::move(in));
    if (!out.none()) r.atoms_.push_back(std::move(out));
  }
  r.sort_atoms();
  return r;
}

std::vector<Mask> Algebra::elements(std::size_t cap_log2) const {
  if (atoms_.size() > cap_log2)
    throw resource_error("algebra has " + std::to_string(atoms_.size()) +
                         " atoms; element enumeration capped at 2^" +
                         std::to_string(cap_log2));
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << atoms_.size());
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << atoms_.size()); ++sel) {
    Mask m(ground_);
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if ((sel >> i) & 1) m = m | atoms_[i];
    out.push_back(std::move(m));
  }
  return out;
}

void Algebra::sort_atoms() {
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Mask& a, const Mask& b) { return a.lowest() < b.lowest(); });
}

std::vector<Mask> split_atoms(const Algebra& b, const Mask& x) {
  std::vector<Mask> out;
  for (const Mask& at : b.atoms())
    if (at.intersects(x) && !at.subset_of(x)) out.push_back(at);
  return out;
}

ExtensionVerdict minimal_extension(const Algebra& b, const Mask& x) {
  if (b.contains(x)) return {ExtensionKind::already_member, Mask()};
  std::vector<Mask> splits = split_atoms(b, x);
  if (splits.size() == 1) return {ExtensionKind::minimal, Mask()};
  // A member witnesses non-minimality iff it contains some split atom and
  // misses another.  Mask values add over disjoint atoms, so the least such
  // member is the single split atom of least value.
  Mask least = splits[0];
  for (const Mask& s : splits)
    if (s < least) least = s;
  return {ExtensionKind::not_minimal, least};
}

std::uint64_t count_intermediate_algebras(const Algebra& b, const Mask& x,
                                          std::size_t atom_cap) {
  if (b.contains(x)) throw input_error("x is already a member of the algebra");
  Algebra ext = b.extended_by(x);
  if (ext.atoms().size() > atom_cap)
    throw resource_error("extended algebra exceeds atom cap " +
                         std::to_string(atom_cap));

  // Candidate algebras between B and B(x) are exactly those whose atom
  // partition groups B(x)-atoms within each B-atom.  Enumerate the group
  // choices per B-atom, then verify each assembled candidate from scratch.
  std::vector<std::vector<Mask>> fine_by_coarse(b.atoms().size());
  for (const Mask& fa : ext.atoms()) {
    bool placed = false;
    for (std::size_t i = 0; i < b.atoms().size(); ++i) {
      if (fa.subset_of(b.atoms()[i])) {
        fine_by_coarse[i].push_back(fa);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::logic_error("extension atom escapes every base atom");
  }

  std::vector<std::vector<std::vector<Mask>>> groupings(b.atoms().size());
  for (std::size_t i = 0; i < b.atoms().size(); ++i) {
    const auto& fine = fine_by_coarse[i];
    for_each_partition(fine.size(), [&](const std::vector<std::size_t>& labels) {
      std::size_t blocks = 0;
      for (std::size_t l : labels) blocks = std::max(blocks, l + 1);
      std::vector<Mask> merged(blocks, Mask(b.ground()));
      for (std::size_t j = 0; j < fine.size(); ++j)
        merged[labels[j]] = merged[labels[j]] | fine[j];
      groupings[i].push_back(std::move(merged));
    });
  }

  std::uint64_t count = 0;
  std::vector<std::size_t> choice(b.atoms().size(), 0);
  while (true) {
    std::vector<Mask> atoms;
    for (std::size_t i = 0; i < b.atoms().size(); ++i)
      for (const Mask& blk : groupings[i][choice[i]]) atoms.push_back(blk);
    Algebra cand = Algebra::from_atoms(b.ground(), std::move(atoms));
    bool ok = true;
    for (const Mask& at : b.atoms())
      if (!cand.contains(at)) ok = false;
    for (const Mask& at : cand.atoms())
      if (!ext.contains(at)) ok = false;
    if (ok) ++count;

    std::size_t i = 0;
    while (i < choice.size() && choice[i] + 1 == groupings[i].size()) {
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) break;
    ++choice[i];
  }
  return count;
}

ChainVerdict verify_minimal_chain(const SetFamily& gens) {
  Algebra b = Algebra::trivial(gens.ground);
  for (std::size_t i = 0; i < gens.members.size(); ++i) {
    const Mask& g = gens.members[i];
    if (b.contains(g)) continue;
    ExtensionVerdict v = minimal_extension(b, g);
    if (v.kind == ExtensionKind::not_minimal)
      return {false, i, g, v.witness, b};
    b = b.extended_by(g);
  }
  return {true, 0, Mask(), Mask(), b};
}

}  // namespace finbool
