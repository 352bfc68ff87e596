#include "finbool/cantor.hpp"

#include <algorithm>
#include <bit>

#include "finbool/errors.hpp"

namespace finbool {

namespace {

void validate_cylinder(const Cylinder& c) {
  if (c.m == 0) throw input_error("truncation depth must be positive");
  if (c.domain.ground() != c.m || c.values.ground() != c.m)
    throw input_error("cylinder masks do not match depth m");
  if (!c.values.subset_of(c.domain))
    throw input_error("cylinder values outside its domain");
}

void validate_union(const CylinderUnion& u) {
  for (const Cylinder& c : u.cylinders) {
    validate_cylinder(c);
    if (c.m != u.m) throw input_error("cylinder depth differs from union depth");
  }
}

void check_same_depth(const Cylinder& a, const Cylinder& b) {
  if (a.m != b.m) throw input_error("cylinder depth mismatch");
}

// Pairwise disjoint pieces of r - q, appended to out.  Any point of r
// escaping q must disagree with q at a position q pins and r leaves free;
// peel those positions one by one.
void subtract_into(const Cylinder& r, const Cylinder& q, std::vector<Cylinder>& out) {
  if (cylinders_disjoint(r, q)) {
    out.push_back(r);
    return;
  }
  Cylinder cur = r;
  for (std::size_t pos : (q.domain - r.domain).elements()) {
    Cylinder piece = cur;
    piece.domain.set(pos);
    piece.values.set(pos, !q.values.test(pos));
    out.push_back(std::move(piece));
    cur.domain.set(pos);
    cur.values.set(pos, q.values.test(pos));
  }
  // cur is now inside q and is dropped.
}

}  // namespace

Rational cylinder_measure(const Cylinder& c) {
  validate_cylinder(c);
  return half_power(c.domain.count());
}

bool cylinders_disjoint(const Cylinder& a, const Cylinder& b) {
  check_same_depth(a, b);
  return ((a.values ^ b.values) & (a.domain & b.domain)).none() == false;
}

std::optional<Cylinder> cylinder_intersection(const Cylinder& a, const Cylinder& b) {
  if (cylinders_disjoint(a, b)) return std::nullopt;
  return Cylinder{a.m, a.domain | b.domain, a.values | b.values};
}

std::vector<std::uint32_t> anchor_positions(std::uint32_t m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < m; t += 3) out.push_back(t);
  return out;
}

CantorParams::CantorParams(std::uint32_t depth, std::vector<std::uint32_t> anchor_map,
                           Mask point)
    : m(depth), phi(std::move(anchor_map)), x(std::move(point)) {
  if (m == 0) throw input_error("truncation depth must be positive");
  if (x.ground() != m) throw input_error("point width does not match depth m");
  std::vector<std::uint32_t> anchors = anchor_positions(m);
  if (phi.size() != anchors.size())
    throw input_error("anchor map covers " + std::to_string(phi.size()) +
                      " anchors, expected " + std::to_string(anchors.size()));
  std::vector<bool> hit(anchors.size(), false);
  for (std::uint32_t v : phi) {
    if (v % 3 != 0 || v >= m) throw input_error("anchor map image " +
                                                std::to_string(v) + " is not an anchor");
    if (hit[v / 3]) throw input_error("anchor map repeats image " + std::to_string(v));
    hit[v / 3] = true;
  }
}

Cylinder stage_cylinder(const CantorParams& params, std::uint32_t n) {
  if (std::uint64_t{3} * n >= params.m)
    throw truncation_error("stage " + std::to_string(n) + " needs anchor " +
                           std::to_string(3 * n) + " below depth " +
                           std::to_string(params.m));
  Cylinder c{params.m, Mask(params.m), Mask(params.m)};
  for (std::uint32_t i = 0; i < 3 * n; ++i) {
    if (i % 3 == 0) continue;
    c.domain.set(i);
    c.values.set(i, params.x.test(i));
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint32_t pos = params.phi[j];
    c.domain.set(pos);
    c.values.set(pos, params.x.test(pos));
  }
  std::uint32_t flip = params.phi[n];
  c.domain.set(flip);
  c.values.set(flip, !params.x.test(flip));
  if (c.domain.count() != std::size_t{3} * n + 1)
    throw std::logic_error("stage domain size is off");
  return c;
}

CylinderUnion stage_union(const CantorParams& params, std::uint32_t n_max) {
  CylinderUnion u{params.m, {}};
  for (std::uint32_t n = 0; n <= n_max; ++n)
    u.cylinders.push_back(stage_cylinder(params, n));
  for (std::size_t i = 0; i < u.cylinders.size(); ++i)
    for (std::size_t j = i + 1; j < u.cylinders.size(); ++j)
      if (!cylinders_disjoint(u.cylinders[i], u.cylinders[j]))
        throw std::logic_error("stage cylinders " + std::to_string(i) + " and " +
                               std::to_string(j) + " are not disjoint");
  return u;
}

ConvergenceResult convergence_index(const CantorParams& params, std::uint32_t k,
                                    std::uint32_t n_max) {
  if (k > params.m)
    throw input_error("prefix length " + std::to_string(k) + " exceeds depth");
  auto fixes_prefix = [&](std::uint32_t n) {
    Cylinder c = stage_cylinder(params, n);
    for (std::uint32_t i = 0; i < k; ++i) {
      if (!c.domain.test(i)) return false;
      if (c.values.test(i) != params.x.test(i)) return false;
    }
    return true;
  };
  // Least start of an all-good suffix of 0..n_max.
  ConvergenceResult out;
  for (std::uint32_t n = n_max + 1; n-- > 0;) {
    if (!fixes_prefix(n)) return out;
    out.found = true;
    out.index = n;
  }
  return out;
}

std::vector<Cylinder> disjoint_refinement(const CylinderUnion& u, std::size_t piece_cap) {
  validate_union(u);
  std::vector<Cylinder> pieces;
  for (const Cylinder& c : u.cylinders) {
    std::vector<Cylinder> remainders{c};
    for (const Cylinder& q : pieces) {
      std::vector<Cylinder> next;
      for (const Cylinder& r : remainders) subtract_into(r, q, next);
      remainders = std::move(next);
      if (remainders.empty()) break;
    }
    if (pieces.size() + remainders.size() > piece_cap)
      throw resource_error("disjoint refinement exceeds " +
                           std::to_string(piece_cap) + " pieces");
    for (Cylinder& r : remainders) pieces.push_back(std::move(r));
  }
  return pieces;
}

Rational union_measure(const CylinderUnion& u) {
  Rational total = 0;
  for (const Cylinder& piece : disjoint_refinement(u)) total += cylinder_measure(piece);
  return total;
}

Rational union_measure_incl_excl(const CylinderUnion& u, std::size_t cylinder_cap) {
  validate_union(u);
  const std::size_t n = u.cylinders.size();
  if (n > cylinder_cap)
    throw resource_error("inclusion-exclusion capped at " +
                         std::to_string(cylinder_cap) + " cylinders");
  Rational total = 0;
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << n); ++sel) {
    std::optional<Cylinder> meet;
    for (std::size_t i = 0; i < n && (sel >> i); ++i) {
      if (!((sel >> i) & 1)) continue;
      if (!meet)
        meet = u.cylinders[i];
      else
        meet = cylinder_intersection(*meet, u.cylinders[i]);
      if (!meet) break;
    }
    if (!meet) continue;
    if (std::popcount(sel) % 2 == 1)
      total += cylinder_measure(*meet);
    else
      total -= cylinder_measure(*meet);
  }
  return total;
}

Rational diff_measure(const CylinderUnion& u, const CylinderUnion& v) {
  validate_union(u);
  validate_union(v);
  if (u.m != v.m) throw input_error("difference of unions at different depths");
  Rational total = 0;
  for (const Cylinder& piece : disjoint_refinement(u)) {
    std::vector<Cylinder> remainders{piece};
    for (const Cylinder& q : v.cylinders) {
      std::vector<Cylinder> next;
      for (const Cylinder& r : remainders) subtract_into(r, q, next);
      remainders = std::move(next);
      if (remainders.empty()) break;
    }
    for (const Cylinder& r : remainders) total += cylinder_measure(r);
  }
  return total;
}

std::vector<CantorParams> separated_family(std::uint32_t p, std::uint32_t count,
                                           std::uint32_t m) {
  if (count == 0) throw input_error("family must have at least one member");
  std::vector<std::uint32_t> anchors = anchor_positions(m);
  const std::uint64_t top_fresh = std::uint64_t{3} * (p + count - 1);
  if (top_fresh >= m)
    throw input_error("depth " + std::to_string(m) + " too small for stage " +
                      std::to_string(p) + " with " + std::to_string(count) +
                      " members");
  std::vector<CantorParams> family;
  for (std::uint32_t j = 0; j < count; ++j) {
    const std::uint32_t fresh = 3 * (p + j);
    std::vector<std::uint32_t> phi;
    phi.reserve(anchors.size());
    for (std::uint32_t i = 0; i < p; ++i) phi.push_back(3 * i);
    phi.push_back(fresh);
    // Remaining anchors keep their relative order.
    for (std::uint32_t a : anchors)
      if (a >= 3 * p && a != fresh) phi.push_back(a);
    family.emplace_back(m, std::move(phi), Mask(m));
  }
  return family;
}

FamilyShapeCheck check_family_shape(std::uint32_t p,
                                    const std::vector<CantorParams>& family) {
  if (family.size() < 2) return {true, ""};
  for (const CantorParams& params : family)
    if (params.m != family[0].m) return {false, "truncation depths differ"};
  for (std::uint32_t n = 0; n < p; ++n) {
    Cylinder first = stage_cylinder(family[0], n);
    for (std::size_t i = 1; i < family.size(); ++i)
      if (!(stage_cylinder(family[i], n) == first))
        return {false, "stage " + std::to_string(n) + " differs at member " +
                           std::to_string(i)};
  }
  std::vector<Cylinder> tops;
  for (const CantorParams& params : family) tops.push_back(stage_cylinder(params, p));
  for (std::size_t i = 0; i < tops.size(); ++i)
    for (std::size_t j = i + 1; j < tops.size(); ++j) {
      if ((tops[i].domain - tops[j].domain).count() != 1 ||
          (tops[j].domain - tops[i].domain).count() != 1)
        return {false, "stage " + std::to_string(p) + " domains of members " +
                           std::to_string(i) + "," + std::to_string(j) +
                           " do not differ by one fresh position each"};
      Mask common = tops[i].domain & tops[j].domain;
      if (((tops[i].values ^ tops[j].values) & common).none() == false)
        return {false, "stage " + std::to_string(p) + " values of members " +
                           std::to_string(i) + "," + std::to_string(j) + " conflict"};
    }
  return {true, ""};
}

SeparationVerdict verify_separation_bound(std::uint32_t p,
                                          const std::vector<CantorParams>& family,
                                          std::uint32_t n_max) {
  if (n_max < p) throw input_error("tail depth n_max below stage p");
  FamilyShapeCheck shape = check_family_shape(p, family);
  if (!shape.ok) throw input_error("family shape: " + shape.what);

  SeparationVerdict out;
  out.bound = Rational(5, boost::multiprecision::cpp_int(7) << (3 * p + 2));
  std::vector<CylinderUnion> unions;
  unions.reserve(family.size());
  for (const CantorParams& params : family)
    unions.push_back(stage_union(params, n_max));

  const std::size_t k = family.size();
  out.matrix.assign(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      out.matrix[i][j] = diff_measure(unions[i], unions[j]);
      if (out.holds && out.matrix[i][j] < out.bound) {
        out.holds = false;
        out.fail_i = i;
        out.fail_j = j;
      }
    }
  return out;
}

std::vector<std::uint32_t> permutation_from_point(const Mask& x, std::uint32_t m) {
  if (x.ground() != m) throw input_error("point width does not match depth m");
  std::vector<std::uint32_t> anchors = anchor_positions(m);
  const std::size_t t = anchors.size();
  if (t > 20) throw resource_error("permutation decoding limited to 20 anchors");

  boost::multiprecision::cpp_int code = 0;
  const auto& words = x.words();
  for (std::size_t i = words.size(); i-- > 0;) {
    code <<= 64;
    code |= words[i];
  }
  boost::multiprecision::cpp_int fact = 1;
  for (std::size_t i = 2; i <= t; ++i) fact *= i;
  code %= fact;

  std::vector<std::uint32_t> pool = anchors;
  std::vector<std::uint32_t> phi;
  phi.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    fact /= (t - i);
    boost::multiprecision::cpp_int digit = code / fact;
    code %= fact;
    std::size_t d = static_cast<std::size_t>(digit);
    phi.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return phi;
}

}  // namespace finbool
