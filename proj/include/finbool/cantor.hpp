#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finbool/mask.hpp"
#include "finbool/rational.hpp"

namespace finbool {

// Basic clopen set of the product space {0,1}^m under the fair-coin product
// measure: the points agreeing with `values` on `domain`.  Everything here
// lives at a fixed truncation depth m; positions are 0-based.
struct Cylinder {
  std::uint32_t m = 0;
  Mask domain;  // constrained positions
  Mask values;  // bits at those positions; subset of domain

  bool operator==(const Cylinder& o) const = default;
};

Rational cylinder_measure(const Cylinder& c);  // 2^-(|domain|)
bool cylinders_disjoint(const Cylinder& a, const Cylinder& b);
std::optional<Cylinder> cylinder_intersection(const Cylinder& a, const Cylinder& b);

struct CylinderUnion {
  std::uint32_t m = 0;
  std::vector<Cylinder> cylinders;
};

// Positions reserved for relocation: the multiples of 3 below m.
std::vector<std::uint32_t> anchor_positions(std::uint32_t m);

// A target point x, a permutation of the anchor positions (phi[k] is the
// image of anchor 3k), and the truncation depth.
struct CantorParams {
  std::uint32_t m = 0;
  std::vector<std::uint32_t> phi;
  Mask x;

  CantorParams() = default;
  CantorParams(std::uint32_t depth, std::vector<std::uint32_t> anchor_map, Mask point);
};

// Stage-n cylinder: copies x on the non-anchor positions below 3n and on the
// images of the first n anchors, and flips x at the image of anchor 3n.
// Domain size is 3n+1.  Requires 3n < m.
Cylinder stage_cylinder(const CantorParams& params, std::uint32_t n);

// Stages 0..n_max together.  The cylinders are pairwise disjoint because
// stage k > n re-pins the position flipped at stage n back to x's value;
// this is re-verified on construction.
CylinderUnion stage_union(const CantorParams& params, std::uint32_t n_max);

struct ConvergenceResult {
  bool found = false;
  std::uint32_t index = 0;
};

// Least n0 <= n_max from which every stage cylinder fixes x's first k bits.
ConvergenceResult convergence_index(const CantorParams& params, std::uint32_t k,
                                    std::uint32_t n_max);

// Pairwise disjoint cylinders with the same union, obtained by carving each
// cylinder against its predecessors.
std::vector<Cylinder> disjoint_refinement(const CylinderUnion& u,
                                          std::size_t piece_cap = 1u << 20);

// Exact measure of the union, via the disjoint refinement.
Rational union_measure(const CylinderUnion& u);

// Same value by inclusion-exclusion over subsets of the cylinder list.
Rational union_measure_incl_excl(const CylinderUnion& u, std::size_t cylinder_cap = 24);

// Exact measure of (union of u) minus (union of v); depths must match.
Rational diff_measure(const CylinderUnion& u, const CylinderUnion& v);

// `count` parameter sets sharing their first p stages: identity on the first
// p anchors, with stage p flipping the distinct fresh anchor 3(p+j) for
// member j, the remaining anchors following in order, and x all zeros.
std::vector<CantorParams> separated_family(std::uint32_t p, std::uint32_t count,
                                           std::uint32_t m);

struct FamilyShapeCheck {
  bool ok = true;
  std::string what;  // first violated condition, iff !ok
};

// Conditions under which the separation bound applies: stages below p agree
// across the family, and the stage-p cylinders differ by exactly one fresh
// pinned position each, with distinct fresh positions and no value conflict.
FamilyShapeCheck check_family_shape(std::uint32_t p,
                                    const std::vector<CantorParams>& family);

struct SeparationVerdict {
  bool holds = true;
  Rational bound;                             // (5/7) * 2^-(3p+2)
  std::vector<std::vector<Rational>> matrix;  // mu(A_i - A_j), zero diagonal
  std::size_t fail_i = 0, fail_j = 0;         // first entry below bound, iff !holds
};

// Builds each member's stage union up to n_max and checks every off-diagonal
// difference measure against the bound.
SeparationVerdict verify_separation_bound(std::uint32_t p,
                                          const std::vector<CantorParams>& family,
                                          std::uint32_t n_max);

// Exploratory plumbing: reads the point's bits as a little-endian integer,
// reduces modulo t! (t = anchor count), and Lehmer-decodes a permutation of
// the anchors.  Returned in the same anchor-map form as CantorParams::phi.
std::vector<std::uint32_t> permutation_from_point(const Mask& x, std::uint32_t m);

}  // namespace finbool
