// Independent reference implementations used only by the tests: slow, direct
// enumerations against which the library's cleverer routes are compared.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "finbool/algebra.hpp"
#include "finbool/cantor.hpp"
#include "finbool/errors.hpp"
#include "finbool/independence.hpp"
#include "finbool/mask.hpp"
#include "finbool/rational.hpp"

namespace oracles {

inline bool cylinder_has_point(const finbool::Cylinder& c, std::uint64_t x) {
  for (std::size_t pos : c.domain.elements())
    if ((((x >> pos) & 1) != 0) != c.values.test(pos)) return false;
  return true;
}

inline bool union_has_point(const finbool::CylinderUnion& u, std::uint64_t x) {
  for (const finbool::Cylinder& c : u.cylinders)
    if (cylinder_has_point(c, x)) return true;
  return false;
}

// Measure of a union by enumerating every point of {0,1}^m.
inline finbool::Rational union_measure_by_points(const finbool::CylinderUnion& u) {
  if (u.m > 20) throw finbool::resource_error("point oracle capped at depth 20");
  finbool::BigInt hits = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << u.m); ++x)
    if (union_has_point(u, x)) ++hits;
  return finbool::Rational(hits, finbool::BigInt(1) << u.m);
}

inline finbool::Rational diff_measure_by_points(const finbool::CylinderUnion& u,
                                                const finbool::CylinderUnion& v) {
  if (u.m != v.m) throw finbool::input_error("depth mismatch");
  if (u.m > 20) throw finbool::resource_error("point oracle capped at depth 20");
  finbool::BigInt hits = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << u.m); ++x)
    if (union_has_point(u, x) && !union_has_point(v, x)) ++hits;
  return finbool::Rational(hits, finbool::BigInt(1) << u.m);
}

// Least empty sign cell (bit i of the result = sign of member i), found by
// plain ascending enumeration; nullopt when the family is independent.
inline std::optional<std::uint64_t> least_empty_cell(const finbool::SetFamily& f) {
  for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << f.size()); ++eps) {
    finbool::Mask cell = finbool::Mask::full(f.ground);
    for (std::size_t i = 0; i < f.size(); ++i)
      cell = cell & (((eps >> i) & 1) ? f.members[i] : ~f.members[i]);
    if (cell.none()) return eps;
  }
  return std::nullopt;
}

// Largest independent subfamily by testing every index subset in ascending
// packed order; returns its size and the least packed witness.
inline std::pair<std::size_t, std::uint64_t> max_independent_by_subsets(
    const finbool::SetFamily& f) {
  std::size_t best = 0;
  std::uint64_t best_code = 0;
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << f.size()); ++code) {
    std::vector<finbool::Mask> sub;
    for (std::size_t i = 0; i < f.size(); ++i)
      if ((code >> i) & 1) sub.push_back(f.members[i]);
    finbool::SetFamily g(f.ground, std::move(sub));
    if (least_empty_cell(g)) continue;
    std::size_t s = static_cast<std::size_t>(std::popcount(code));
    if (s > best) {
      best = s;
      best_code = code;
    }
  }
  return {best, best_code};
}

// Lexicographic successor of a restricted growth string; false when done.
inline bool next_rgs(std::vector<std::size_t>& labels) {
  const std::size_t n = labels.size();
  for (std::size_t i = n; i-- > 1;) {
    std::size_t cap = 0;
    for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, labels[j]);
    if (labels[i] <= cap) {
      ++labels[i];
      std::fill(labels.begin() + i + 1, labels.end(), 0);
      return true;
    }
    labels[i] = 0;
  }
  return false;
}

// Number of algebras between B and B(x), counted by enumerating every
// partition of the extension's atoms and testing the sandwich inclusions
// directly.
inline std::uint64_t count_intermediate_by_partitions(const finbool::Algebra& b,
                                                      const finbool::Mask& x) {
  using finbool::Algebra;
  using finbool::Mask;
  Algebra ext = b.extended_by(x);
  const std::vector<Mask>& fine = ext.atoms();
  if (fine.size() > 10)
    throw finbool::resource_error("partition oracle capped at 10 atoms");
  std::vector<std::size_t> labels(fine.size(), 0);
  std::uint64_t count = 0;
  do {
    std::size_t classes = 0;
    for (std::size_t l : labels) classes = std::max(classes, l + 1);
    std::vector<Mask> atoms(classes, Mask(ext.ground()));
    for (std::size_t i = 0; i < fine.size(); ++i)
      atoms[labels[i]] = atoms[labels[i]] | fine[i];
    Algebra cand = Algebra::from_atoms(ext.ground(), std::move(atoms));
    bool ok = true;
    for (const Mask& a : b.atoms())
      if (!cand.contains(a)) ok = false;
    for (const Mask& a : cand.atoms())
      if (!ext.contains(a)) ok = false;
    if (ok) ++count;
  } while (next_rgs(labels));
  return count;
}

}  // namespace oracles
