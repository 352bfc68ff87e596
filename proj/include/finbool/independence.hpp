#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "finbool/mask.hpp"

namespace finbool {

using BigInt = boost::multiprecision::cpp_int;

// Distinct 0/1 patterns over a fixed list of coordinates.  Pattern bit j is
// the value at coordinate j.  Construction sorts and deduplicates.
struct PatternFamily {
  std::size_t coords = 0;
  std::vector<Mask> patterns;

  PatternFamily() = default;
  PatternFamily(std::size_t coordinate_count, std::vector<Mask> pats);

  std::size_t size() const { return patterns.size(); }
};

struct IndependenceVerdict {
  bool independent = false;
  // For dependent families: the least sign vector (bit i = sign of member i)
  // whose cell is empty.
  Mask missing_cell;
};

// A family is independent when every choice of signs leaves a nonempty
// intersection of members and complements.
IndependenceVerdict is_independent(const SetFamily& f, std::size_t member_cap = 24);

// Membership pattern of each ground point across the family, deduplicated.
PatternFamily transpose(const SetFamily& f);

// Do the patterns restricted to S realize all 2^|S| sign vectors?
bool shattered(const PatternFamily& c, const Mask& s, std::size_t size_cap = 24);

// Largest size of a shattered coordinate set.  Requires at least one pattern.
std::size_t vc_dimension(const PatternFamily& c, std::uint64_t subset_budget = 1u << 22);

struct MaxIndependentResult {
  std::size_t size = 0;
  std::vector<std::size_t> members;  // least witness at the maximum size
};

// Largest independent subfamily, found by descending size with the distinct
// point-pattern count as an upper bound.  Subsets are explored in ascending
// little-endian order with dependent prefixes pruned (independence is
// hereditary), so the witness is the numerically least maximizer.  `cap`
// limits the reported size; `subset_budget` caps explored search nodes.
MaxIndependentResult max_independent(const SetFamily& f,
                                     std::optional<std::size_t> cap = {},
                                     std::uint64_t subset_budget = 1u << 22);

// Sum of binomial coefficients C(n_ground, i) for i < n.
BigInt sauer_bound(std::uint64_t n_ground, std::uint64_t n);

// Does s satisfy the threshold inequality sauer_bound(r*s, n) < 2^s?
bool threshold_holds_at(std::uint64_t n, std::uint64_t r, std::uint64_t s);

// Least s satisfying the threshold inequality.
std::uint64_t independence_threshold(std::uint64_t n, std::uint64_t r);

// For |C| distinct patterns, returns |C| distinct coordinate sets, each
// shattered by C.  Splits on the lowest non-constant coordinate: with
// C = C0 u C1 by that coordinate's value, the result is
// F(C0) u F(C1) u { S + pivot : S in both }.
std::vector<Mask> sauer_shelah_extract(const PatternFamily& c);

struct SweepOutcome {
  bool ok = true;
  std::uint64_t families = 0;  // families checked
  std::uint64_t fail_code = 0;  // bit p set = pattern p present, iff !ok
  std::string what;             // first violated fact, iff !ok
};

// Checks one pattern family over t coordinates, encoded by `code` (bit p set
// means the pattern with value bits p belongs to the family): the extraction
// must return |C| distinct shattered sets, and whenever |C| exceeds
// sauer_bound(t, n) both the extraction and a direct search must exhibit a
// shattered set of size n.
SweepOutcome sauer_family_check(std::uint32_t t, std::uint64_t code);

// sauer_family_check over every nonempty code; stops at the first failure.
// Requires 1 <= t <= 4 (2^(2^t) - 1 families).
SweepOutcome sauer_exhaustive_sweep(std::uint32_t t);

struct TransferResult {
  bool ok = false;
  Mask missing_cell;                 // valid iff !ok
  std::vector<std::size_t> picks;    // one ground point per output index
  SetFamily induced;                 // membership sets of the picks, ground = |A|
};

// From an independent family A of size 2^(n+1), picks one point out of each
// cell dictated by the binary digits of the member index, producing n+1
// sets over the index space that are independent by construction.
TransferResult dual_transfer(const SetFamily& a, std::size_t n);

}  // namespace finbool
