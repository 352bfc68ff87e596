#include "finbool/independence.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "finbool/errors.hpp"

namespace finbool {

namespace {

// Size-s subsets of [0,k) in colex order, which is ascending order of the
// packed mask value.  fn returns true to stop early.
template <typename Fn>
bool for_each_combination(std::size_t k, std::size_t s, Fn&& fn) {
  if (s > k) return false;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = 0;
    while (i < s) {
      std::size_t limit = (i + 1 < s) ? idx[i + 1] : k;
      if (idx[i] + 1 < limit) break;
      ++i;
    }
    if (i == s) return false;
    ++idx[i];
    for (std::size_t j = 0; j < i; ++j) idx[j] = j;
  }
}

}  // namespace

PatternFamily::PatternFamily(std::size_t coordinate_count, std::vector<Mask> pats)
    : coords(coordinate_count), patterns(std::move(pats)) {
  for (const Mask& p : patterns)
    if (p.ground() != coords)
      throw input_error("pattern width does not match coordinate count");
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
}

IndependenceVerdict is_independent(const SetFamily& f, std::size_t member_cap) {
  if (f.ground == 0) throw input_error("ground size must be positive");
  if (f.size() > member_cap)
    throw resource_error("family size " + std::to_string(f.size()) +
                         " exceeds independence cap " + std::to_string(member_cap));
  const std::size_t k = f.size();
  std::vector<Mask> comp;
  comp.reserve(k);
  for (const Mask& m : f.members) comp.push_back(~m);

  // Depth-first over sign vectors, member k-1 at the root, the 0-branch
  // first, so leaves appear in ascending packed order.  A prune at depth i
  // empties every completion; the all-zeros completion is the least.
  IndependenceVerdict out;
  std::vector<std::uint8_t> path(k, 0);
  struct Rec {
    const SetFamily& f;
    const std::vector<Mask>& comp;
    std::vector<std::uint8_t>& path;
    IndependenceVerdict& out;
    bool walk(std::size_t level, const Mask& acc) {
      if (level == 0) return true;
      std::size_t i = level - 1;
      for (int sign = 0; sign <= 1; ++sign) {
        path[i] = static_cast<std::uint8_t>(sign);
        Mask next = acc & (sign ? f.members[i] : comp[i]);
        if (next.none()) {
          Mask cell(f.size());
          for (std::size_t j = i; j < f.size(); ++j)
            if (path[j]) cell.set(j);
          out.missing_cell = std::move(cell);
          return false;
        }
        if (!walk(level - 1, next)) return false;
      }
      return true;
    }
  } rec{f, comp, path, out};
  out.independent = rec.walk(k, Mask::full(f.ground));
  return out;
}

PatternFamily transpose(const SetFamily& f) {
  if (f.ground == 0) throw input_error("ground size must be positive");
  std::vector<Mask> pats;
  pats.reserve(f.ground);
  for (std::size_t t = 0; t < f.ground; ++t) {
    Mask p(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f.members[i].test(t)) p.set(i);
    pats.push_back(std::move(p));
  }
  return PatternFamily(f.size(), std::move(pats));
}

bool shattered(const PatternFamily& c, const Mask& s, std::size_t size_cap) {
  if (s.ground() != c.coords)
    throw input_error("coordinate set width does not match pattern family");
  const std::vector<std::size_t> sel = s.elements();
  if (sel.size() > size_cap)
    throw resource_error("shattering check capped at " + std::to_string(size_cap) +
                         " coordinates");
  const std::size_t want = std::size_t{1} << sel.size();
  std::vector<bool> seen(want, false);
  std::size_t found = 0;
  for (const Mask& p : c.patterns) {
    std::size_t code = 0;
    for (std::size_t j = 0; j < sel.size(); ++j)
      if (p.test(sel[j])) code |= std::size_t{1} << j;
    if (!seen[code]) {
      seen[code] = true;
      if (++found == want) return true;
    }
  }
  return found == want;
}

std::size_t vc_dimension(const PatternFamily& c, std::uint64_t subset_budget) {
  if (c.patterns.empty()) throw input_error("pattern family is empty");
  const std::size_t max_d =
      static_cast<std::size_t>(std::bit_width(c.patterns.size()) - 1);
  std::uint64_t used = 0;
  std::size_t best = 0;
  for (std::size_t d = 1; d <= std::min(max_d, c.coords); ++d) {
    bool any = for_each_combination(c.coords, d, [&](const std::vector<std::size_t>& idx) {
      if (++used > subset_budget)
        throw resource_error("vc_dimension subset budget exhausted");
      Mask s(c.coords);
      for (std::size_t e : idx) s.set(e);
      return shattered(c, s);
    });
    if (!any) break;
    best = d;
  }
  return best;
}

namespace {

// Colex enumeration of size-s index subsets with dependent prefixes pruned:
// choosing the largest index first and recursing below it visits subsets in
// ascending little-endian order, and any subset containing a dependent
// partial choice can be skipped wholesale since subfamilies of independent
// families are independent.
struct ColexDfs {
  const SetFamily& f;
  const std::vector<Mask>& comp;
  std::uint64_t budget;
  std::uint64_t used = 0;
  std::vector<std::size_t> chosen;       // descending index order
  std::vector<std::vector<Mask>> cells;  // cells[t]: sign cells after t choices
  std::vector<std::size_t> witness;

  ColexDfs(const SetFamily& fam, const std::vector<Mask>& co, std::size_t s,
           std::uint64_t b)
      : f(fam), comp(co), budget(b) {
    cells.resize(s + 1);
    cells[0] = {Mask::full(f.ground)};
  }

  bool extend(std::size_t t, std::size_t i) {
    if (++used > budget)
      throw resource_error("max_independent search budget exhausted");
    std::vector<Mask>& next = cells[t + 1];
    next.clear();
    for (const Mask& c : cells[t]) {
      Mask lo = c & comp[i];
      if (lo.none()) return false;
      Mask hi = c & f.members[i];
      if (hi.none()) return false;
      next.push_back(std::move(lo));
      next.push_back(std::move(hi));
    }
    return true;
  }

  bool run(std::size_t need, std::size_t limit) {
    if (need == 0) {
      witness.assign(chosen.rbegin(), chosen.rend());
      return true;
    }
    for (std::size_t m = need - 1; m < limit; ++m) {
      if (extend(chosen.size(), m)) {
        chosen.push_back(m);
        if (run(need - 1, m)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

MaxIndependentResult max_independent(const SetFamily& f, std::optional<std::size_t> cap,
                                     std::uint64_t subset_budget) {
  if (f.ground == 0) throw input_error("ground size must be positive");
  // Any independent subfamily of size s needs 2^s distinct membership
  // patterns among the ground points, which bounds s from above.
  std::unordered_set<Mask, MaskHash> distinct;
  for (std::size_t t = 0; t < f.ground; ++t) {
    Mask p(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f.members[i].test(t)) p.set(i);
    distinct.insert(std::move(p));
  }
  std::size_t upper = static_cast<std::size_t>(std::bit_width(distinct.size()) - 1);
  upper = std::min(upper, f.size());
  if (cap) upper = std::min(upper, *cap);

  std::vector<Mask> comp;
  comp.reserve(f.size());
  for (const Mask& m : f.members) comp.push_back(~m);

  std::uint64_t used = 0;
  MaxIndependentResult best;
  for (std::size_t s = upper; s >= 1; --s) {
    ColexDfs dfs(f, comp, s, subset_budget);
    dfs.used = used;
    bool hit = dfs.run(s, f.size());
    used = dfs.used;
    if (hit) {
      best.size = s;
      best.members = std::move(dfs.witness);
      return best;
    }
  }
  return best;  // empty subfamily, vacuously independent
}

BigInt sauer_bound(std::uint64_t n_ground, std::uint64_t n) {
  BigInt total = 0;
  BigInt binom = 1;  // C(n_ground, 0)
  for (std::uint64_t i = 0; i < n; ++i) {
    total += binom;
    if (i >= n_ground) {
      binom = 0;  // C(n_ground, j) = 0 for every j > n_ground
      continue;
    }
    binom = binom * (n_ground - i) / (i + 1);
  }
  return total;
}

bool threshold_holds_at(std::uint64_t n, std::uint64_t r, std::uint64_t s) {
  return sauer_bound(r * s, n) < (BigInt(1) << s);
}

std::uint64_t independence_threshold(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) throw input_error("threshold arguments must be positive");
  for (std::uint64_t s = 1;; ++s) {
    if (threshold_holds_at(n, r, s)) return s;
    if (s > 1u << 20) throw resource_error("threshold search ran away");
  }
}

namespace {

std::vector<Mask> extract_rec(std::vector<Mask> pats, std::size_t coords) {
  // Lowest coordinate on which the patterns disagree.
  std::size_t pivot = coords;
  for (std::size_t t = 0; t < coords && pivot == coords; ++t) {
    std::size_t ones = 0;
    for (const Mask& p : pats)
      if (p.test(t)) ++ones;
    if (ones > 0 && ones < pats.size()) pivot = t;
  }
  if (pivot == coords) {
    // Patterns are distinct, so constant-everywhere means a single pattern.
    return {Mask(coords)};
  }
  std::vector<Mask> zero, one;
  for (Mask& p : pats) {
    if (p.test(pivot))
      one.push_back(std::move(p.set(pivot, false)));
    else
      zero.push_back(std::move(p));
  }
  std::vector<Mask> f0 = extract_rec(std::move(zero), coords);
  std::vector<Mask> f1 = extract_rec(std::move(one), coords);
  std::vector<Mask> both, merged;
  std::set_intersection(f0.begin(), f0.end(), f1.begin(), f1.end(),
                        std::back_inserter(both));
  std::set_union(f0.begin(), f0.end(), f1.begin(), f1.end(),
                 std::back_inserter(merged));
  for (Mask& s : both) merged.push_back(std::move(s.set(pivot)));
  std::sort(merged.begin(), merged.end());
  return merged;
}

}  // namespace

std::vector<Mask> sauer_shelah_extract(const PatternFamily& c) {
  if (c.patterns.empty()) throw input_error("pattern family is empty");
  return extract_rec(c.patterns, c.coords);
}

TransferResult dual_transfer(const SetFamily& a, std::size_t n) {
  const std::size_t want = std::size_t{1} << (n + 1);
  if (a.size() != want)
    throw input_error("dual transfer needs exactly " + std::to_string(want) +
                      " sets, got " + std::to_string(a.size()));
  IndependenceVerdict iv = is_independent(a);
  TransferResult out;
  if (!iv.independent) {
    out.ok = false;
    out.missing_cell = iv.missing_cell;
    return out;
  }
  out.ok = true;
  std::vector<Mask> induced;
  for (std::size_t i = 0; i < n + 1; ++i) {
    // Sign of member j is binary digit i of j; independence makes the cell
    // nonempty, and we take its least point.
    Mask cell = Mask::full(a.ground);
    for (std::size_t j = 0; j < a.size(); ++j)
      cell = cell & (((j >> i) & 1) ? a.members[j] : ~a.members[j]);
    std::size_t g = cell.lowest();
    out.picks.push_back(g);
    Mask hat(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.members[j].test(g)) hat.set(j);
    induced.push_back(std::move(hat));
  }
  out.induced = SetFamily(a.size(), std::move(induced));
  return out;
}

SweepOutcome sauer_family_check(std::uint32_t t, std::uint64_t code) {
  if (t == 0 || t > 4) throw input_error("coordinate count must be between 1 and 4");
  const std::size_t pattern_space = std::size_t{1} << t;
  if (code == 0 || code >= (std::uint64_t{1} << pattern_space))
    throw input_error("family code out of range");

  SweepOutcome out;
  out.families = 1;
  auto fail = [&](const char* what) {
    out.ok = false;
    out.fail_code = code;
    out.what = what;
    return out;
  };

  std::vector<Mask> pats;
  for (std::size_t p = 0; p < pattern_space; ++p)
    if ((code >> p) & 1) {
      Mask m(t);
      for (std::uint32_t j = 0; j < t; ++j)
        if ((p >> j) & 1) m.set(j);
      pats.push_back(std::move(m));
    }
  PatternFamily c(t, std::move(pats));

  std::vector<Mask> extracted = sauer_shelah_extract(c);
  if (extracted.size() != c.size())
    return fail("extraction count differs from family size");
  for (std::size_t i = 0; i + 1 < extracted.size(); ++i)
    if (!(extracted[i] < extracted[i + 1]))
      return fail("extraction sets not distinct");
  std::size_t max_size = 0;
  for (const Mask& s : extracted) {
    if (!shattered(c, s)) return fail("extracted set not shattered");
    max_size = std::max(max_size, s.count());
  }

  for (std::uint64_t n = 1; n <= t; ++n) {
    if (BigInt(c.size()) <= sauer_bound(t, n)) continue;
    if (max_size < n) return fail("extraction misses the guaranteed size");
    bool found = false;
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << t) && !found; ++sel) {
      if (static_cast<std::uint64_t>(std::popcount(sel)) != n) continue;
      Mask s(t);
      for (std::uint32_t j = 0; j < t; ++j)
        if ((sel >> j) & 1) s.set(j);
      found = shattered(c, s);
    }
    if (!found) return fail("no shattered set of the promised size");
  }
  return out;
}

SweepOutcome sauer_exhaustive_sweep(std::uint32_t t) {
  if (t == 0 || t > 4) throw input_error("coordinate count must be between 1 and 4");
  const std::size_t pattern_space = std::size_t{1} << t;
  SweepOutcome total;
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << pattern_space); ++code) {
    SweepOutcome one = sauer_family_check(t, code);
    if (!one.ok) {
      one.families += total.families;
      return one;
    }
    ++total.families;
  }
  return total;
}

}  // namespace finbool
