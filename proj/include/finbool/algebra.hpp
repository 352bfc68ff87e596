#pragma once

#include <cstdint>
#include <vector>

#include "finbool/mask.hpp"

namespace finbool {

// Finite Boolean algebra of subsets of {0,...,ground-1}, represented by its
// atom partition.  Atoms are pairwise disjoint, nonempty, cover the ground
// set, and are stored sorted by least element; that makes equality a plain
// list comparison.
class Algebra {
 public:
  static Algebra trivial(std::size_t ground);
  // Smallest algebra containing every member of the family.
  static Algebra generated_by(const SetFamily& gens);
  // Validates that `atoms` is a partition of the ground set.
  static Algebra from_atoms(std::size_t ground, std::vector<Mask> atoms);

  std::size_t ground() const { return ground_; }
  const std::vector<Mask>& atoms() const { return atoms_; }

  // x belongs to the algebra iff no atom is split by x.
  bool contains(const Mask& x) const;

  // Smallest algebra containing this one and x.
  Algebra extended_by(const Mask& x) const;

  // All members, as unions of atoms, in atom-subset counter order.
  // Throws resource_error when the atom count exceeds cap_log2.
  std::vector<Mask> elements(std::size_t cap_log2 = 20) const;

  bool operator==(const Algebra& o) const = default;

 private:
  Algebra() = default;
  std::size_t ground_ = 0;
  std::vector<Mask> atoms_;

  void sort_atoms();
};

enum class ExtensionKind { already_member, minimal, not_minimal };

struct ExtensionVerdict {
  ExtensionKind kind = ExtensionKind::already_member;
  // For not_minimal: the least b in the algebra with both x&b and x-b outside
  // it.  Default-constructed otherwise.
  Mask witness;
};

// Atoms of B that x cuts into two nonempty parts, in atom order.
std::vector<Mask> split_atoms(const Algebra& b, const Mask& x);

// Decides whether B(x) covers B minimally: no algebra lies strictly between.
ExtensionVerdict minimal_extension(const Algebra& b, const Mask& x);

// Number of algebras C with B <= C <= B(x), endpoints included.  Enumerates
// every partition sandwiched between the two atom partitions and verifies
// each candidate explicitly; deliberately does not reuse the split-atom
// criterion behind minimal_extension.  Requires x outside B.
std::uint64_t count_intermediate_algebras(const Algebra& b, const Mask& x,
                                          std::size_t atom_cap = 16);

struct ChainVerdict {
  bool ok = true;
  // Valid iff !ok: position of the first generator whose adjunction is not
  // minimal, that generator, and the minimal_extension witness for it.
  std::size_t fail_index = 0;
  Mask fail_generator;
  Mask witness;
  Algebra final_algebra = Algebra::trivial(1);
};

// Walks gens in order starting from the trivial algebra, skipping generators
// already present, and demands that every remaining adjunction be minimal.
ChainVerdict verify_minimal_chain(const SetFamily& gens);

}  // namespace finbool
