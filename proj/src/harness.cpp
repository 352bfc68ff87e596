#include "finbool/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "finbool/cantor.hpp"
#include "finbool/errors.hpp"
#include "finbool/independence.hpp"
#include "finbool/json_io.hpp"
#include "finbool/measure.hpp"
#include "finbool/polynomial.hpp"

namespace finbool {

Mask random_mask(Rng& rng, std::size_t ground) {
  Mask m(ground);
  std::uint64_t buf = 0;
  int have = 0;
  for (std::size_t i = 0; i < ground; ++i) {
    if (have == 0) {
      buf = rng.next();
      have = 64;
    }
    if (buf & 1) m.set(i);
    buf >>= 1;
    --have;
  }
  return m;
}

Mask random_nonempty_proper(Rng& rng, std::size_t ground) {
  if (ground < 2) throw input_error("need at least two points");
  while (true) {
    Mask m = random_mask(rng, ground);
    if (!m.none() && !m.all()) return m;
  }
}

namespace {

void shuffle_masks(Rng& rng, std::vector<Mask>& v) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(i)]);
}

void laminar_rec(Rng& rng, const Mask& region, std::vector<Mask>& out,
                 std::size_t want) {
  if (out.size() >= want || region.none()) return;
  out.push_back(region);
  if (region.count() < 2) return;
  if (rng.below(5) == 0) return;
  std::vector<std::size_t> elems = region.elements();
  std::size_t ia = rng.below(elems.size());
  std::size_t ib = rng.below(elems.size() - 1);
  if (ib >= ia) ++ib;
  Mask a(region.ground()), b(region.ground());
  a.set(elems[ia]);
  b.set(elems[ib]);
  for (std::size_t e : elems)
    if (e != elems[ia] && e != elems[ib]) (rng.coin() ? a : b).set(e);
  laminar_rec(rng, a, out, want);
  laminar_rec(rng, b, out, want);
}

}  // namespace

SetFamily random_laminar_family(Rng& rng, std::size_t ground, std::size_t want) {
  std::vector<Mask> out;
  Mask root = rng.coin() ? Mask::full(ground) : random_nonempty_proper(rng, ground);
  laminar_rec(rng, root, out, std::max<std::size_t>(want, 1));
  shuffle_masks(rng, out);
  return SetFamily(ground, std::move(out));
}

SetFamily low_independence_family(Rng& rng, std::size_t ground, std::size_t want,
                                  std::size_t n) {
  if (n < 2) throw input_error("need n >= 2");
  const std::size_t layers = n - 1;
  std::vector<Mask> all;
  for (std::size_t l = 0; l < layers; ++l) {
    std::size_t part = std::max<std::size_t>(want / layers, 2);
    SetFamily lam = random_laminar_family(rng, ground, part);
    for (Mask& m : lam.members) all.push_back(std::move(m));
  }
  shuffle_masks(rng, all);
  return SetFamily(ground, std::move(all));
}

Algebra random_algebra(Rng& rng, std::size_t ground, std::size_t max_atoms) {
  std::size_t classes = 1 + rng.below(max_atoms);
  std::vector<Mask> atoms(classes, Mask(ground));
  for (std::size_t t = 0; t < ground; ++t) atoms[rng.below(classes)].set(t);
  std::vector<Mask> nonempty;
  for (Mask& a : atoms)
    if (!a.none()) nonempty.push_back(std::move(a));
  return Algebra::from_atoms(ground, std::move(nonempty));
}

std::vector<std::uint32_t> random_permutation(Rng& rng, std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  for (std::uint32_t i = n; i > 1; --i)
    std::swap(v[i - 1], v[rng.below(i)]);
  return v;
}

SetFamily random_independent_family(Rng& rng, std::size_t k, std::size_t extra) {
  if (k == 0 || k > 16) throw input_error("family size out of range");
  const std::size_t block = std::size_t{1} << k;
  const std::size_t ground = block + extra;
  std::vector<std::uint32_t> perm =
      random_permutation(rng, static_cast<std::uint32_t>(ground));
  std::vector<Mask> members;
  for (std::size_t i = 0; i < k; ++i) {
    Mask m(ground);
    for (std::size_t t = 0; t < block; ++t)
      if ((t >> i) & 1) m.set(perm[t]);
    for (std::size_t t = block; t < ground; ++t)
      if (rng.coin()) m.set(perm[t]);
    members.push_back(std::move(m));
  }
  return SetFamily(ground, std::move(members));
}

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
  Json details;
};

void require(bool cond, const char* what, Json context) {
  if (!cond) {
    Json d;
    d["violated"] = what;
    d["context"] = std::move(context);
    throw Failure{std::move(d)};
  }
}

// C01: pinned threshold values with minimality certificates.
void check_thresholds(Rng&, Profile, Json& details) {
  struct Row {
    std::uint64_t n, r, s;
  };
  const std::vector<Row> rows = {{1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1},
                                 {1, 5, 1}, {1, 6, 1}, {2, 1, 2}, {2, 2, 3},
                                 {3, 2, 7}};
  Json out = Json::array();
  for (const Row& row : rows) {
    std::uint64_t got = independence_threshold(row.n, row.r);
    Json ctx{{"n", row.n}, {"r", row.r}, {"expected", row.s}, {"got", got}};
    require(got == row.s, "threshold value", ctx);
    require(threshold_holds_at(row.n, row.r, row.s), "inequality at s", ctx);
    require(!threshold_holds_at(row.n, row.r, row.s - 1), "inequality must fail at s-1",
            ctx);
    out.push_back(std::move(ctx));
  }
  details["rows"] = std::move(out);
}

// C02: every pattern family over a small coordinate set respects the bound
// and yields a full extraction.
void check_sauer_sweep(Rng& rng, Profile profile, Json& details) {
  auto gate = [](const SweepOutcome& o, std::uint32_t t) {
    require(o.ok, "exhaustive shattering sweep",
            Json{{"t", t}, {"code", o.fail_code}, {"what", o.what}});
  };
  std::uint64_t families = 0;
  if (profile == Profile::full) {
    SweepOutcome o = sauer_exhaustive_sweep(4);
    gate(o, 4);
    families = o.families;
  } else {
    SweepOutcome o = sauer_exhaustive_sweep(3);
    gate(o, 3);
    families = o.families;
    for (int i = 0; i < 4000; ++i, ++families)
      gate(sauer_family_check(4, 1 + rng.below((std::uint64_t{1} << 16) - 1)), 4);
  }
  details["families"] = families;
}

// C03: polynomial images of families with bounded independence stay below
// the threshold.
void check_poly_harness(Rng& rng, Profile profile, Json& details) {
  const std::vector<std::string> poly_texts = {
      "(and x0 x1)", "(or x0 x1)",
      "(or (and x0 (not x1)) (and (not x0) x1))",  // symmetric difference
      "(or (and x0 x1) x2)"};
  const std::uint64_t trials = profile == Profile::full ? 1000 : 150;
  std::uint64_t done = 0;
  std::size_t max_image = 0;
  std::size_t cfg_index = 0;
  for (std::uint64_t n : {std::uint64_t{2}, std::uint64_t{3}}) {
    for (const std::string& text : poly_texts) {
      BooleanPolynomial poly = BooleanPolynomial::parse(text);
      Rng cfg = rng.substream(cfg_index++);
      for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Rng tr = cfg.substream(trial);
        std::size_t ground = 6 + tr.below(7);
        std::size_t want = 4 + tr.below(5);
        SetFamily f = low_independence_family(tr, ground, want, n);
        PolyBoundResult res = check_poly_bound(f, n, poly);
        Json ctx{{"n", n},
                 {"poly", text},
                 {"trial", trial},
                 {"family", family_to_json(f)}};
        require(res.status != PolyBoundResult::Status::precondition_failed,
                "generated family keeps independence below n", ctx);
        if (res.status == PolyBoundResult::Status::violated) {
          ctx["witness"] = res.image_best.members;
          ctx["image"] = family_to_json(res.image);
          require(false, "image independence under the threshold", ctx);
        }
        max_image = std::max(max_image, res.image.size());
        ++done;
      }
    }
  }
  details["trials"] = done;
  details["max_image_size"] = max_image;
}

// C04: the constructed families meet the exact separation bound.
void check_separation(Rng&, Profile, Json& details) {
  const std::vector<std::pair<std::uint32_t, std::string>> cases = {
      {0, "5/28"}, {1, "5/224"}};
  Json out = Json::array();
  for (const auto& [p, expected] : cases) {
    std::vector<CantorParams> family = separated_family(p, 5, 36);
    FamilyShapeCheck shape = check_family_shape(p, family);
    Json ctx{{"p", p}, {"expected_bound", expected}};
    require(shape.ok, "constructed family has the required shape", ctx);
    SeparationVerdict v = verify_separation_bound(p, family, 5);
    require(rational_str(v.bound) == expected, "pinned bound value", ctx);
    Json matrix = Json::array();
    Rational min_entry;
    bool first = true;
    for (std::size_t i = 0; i < v.matrix.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < v.matrix.size(); ++j) {
        row.push_back(rational_str(v.matrix[i][j]));
        if (i != j && (first || v.matrix[i][j] < min_entry)) {
          min_entry = v.matrix[i][j];
          first = false;
        }
      }
      matrix.push_back(std::move(row));
    }
    ctx["matrix"] = std::move(matrix);
    ctx["min_off_diagonal"] = rational_str(min_entry);
    require(v.holds, "all difference measures meet the bound", ctx);
    out.push_back(std::move(ctx));
  }
  details["cases"] = std::move(out);
}

// C05: stage cylinder sizes, measures, disjointness, and convergence.
void check_stage_facts(Rng& rng, Profile profile, Json& details) {
  const std::uint64_t count = profile == Profile::full ? 100 : 25;
  const std::uint32_t n_max = 8;
  for (std::uint64_t trial = 0; trial < count; ++trial) {
    Rng tr = rng.substream(trial);
    std::uint32_t m = 25 + static_cast<std::uint32_t>(tr.below(16));
    std::vector<std::uint32_t> anchors = anchor_positions(m);
    std::vector<std::uint32_t> order =
        random_permutation(tr, static_cast<std::uint32_t>(anchors.size()));
    std::vector<std::uint32_t> phi(anchors.size());
    for (std::size_t i = 0; i < anchors.size(); ++i) phi[i] = anchors[order[i]];
    CantorParams params(m, phi, random_mask(tr, m));
    Json ctx{{"trial", trial}, {"params", cantor_params_to_json(params)}};

    Rational expect_total = 0;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      Cylinder c = stage_cylinder(params, n);
      require(c.domain.count() == std::size_t{3} * n + 1, "stage domain size", ctx);
      require(cylinder_measure(c) == half_power(3 * n + 1), "stage measure", ctx);
      expect_total += half_power(3 * n + 1);
    }
    CylinderUnion u = stage_union(params, n_max);
    require(union_measure(u) == expect_total, "disjoint stages sum exactly", ctx);
    require(union_measure_incl_excl(u) == expect_total,
            "inclusion-exclusion agrees on stage union", ctx);

    for (std::uint32_t k :
         {std::uint32_t{0}, std::uint32_t{1}, static_cast<std::uint32_t>(tr.below(m)), m}) {
      ConvergenceResult conv = convergence_index(params, k, n_max);
      Json kctx = ctx;
      kctx["k"] = k;
      auto fixes = [&](std::uint32_t n) {
        Cylinder c = stage_cylinder(params, n);
        for (std::uint32_t i = 0; i < k; ++i)
          if (!c.domain.test(i) || c.values.test(i) != params.x.test(i)) return false;
        return true;
      };
      if (conv.found) {
        kctx["index"] = conv.index;
        for (std::uint32_t n = conv.index; n <= n_max; ++n)
          require(fixes(n), "stages from the index fix the prefix", kctx);
        if (conv.index > 0)
          require(!fixes(conv.index - 1), "index is minimal", kctx);
      } else {
        require(!fixes(n_max), "unreachable prefix means the last stage misses it",
                kctx);
      }
    }
  }
  details["params"] = count;
}

// C06: three independent routes agree on minimality.
void route_agreement(const Algebra& b, const Mask& x) {
  Json ctx{{"atoms", family_to_json(SetFamily(b.ground(), b.atoms()))},
           {"x", mask_to_json(x)}};
  ExtensionVerdict v1 = minimal_extension(b, x);
  if (b.contains(x)) {
    require(v1.kind == ExtensionKind::already_member, "member verdict", ctx);
    return;
  }
  require(v1.kind != ExtensionKind::already_member, "non-member verdict", ctx);

  // Quantifier route over all members, in ascending order.
  std::vector<Mask> elems = b.elements();
  std::sort(elems.begin(), elems.end());
  std::optional<Mask> w2;
  for (const Mask& e : elems) {
    if (!b.contains(x & e) && !b.contains(x - e)) {
      w2 = e;
      break;
    }
  }
  if (w2) {
    ctx["witness_quantifier"] = mask_to_json(*w2);
    require(v1.kind == ExtensionKind::not_minimal, "quantifier route agrees", ctx);
    ctx["witness_split"] = mask_to_json(v1.witness);
    require(v1.witness == *w2, "witnesses agree", ctx);
  } else {
    require(v1.kind == ExtensionKind::minimal, "quantifier route agrees", ctx);
  }

  // Counting route: minimal means exactly the two endpoint algebras.
  std::uint64_t count = count_intermediate_algebras(b, x);
  ctx["intermediate_count"] = count;
  require((count == 2) == (v1.kind == ExtensionKind::minimal), "counting route agrees",
          ctx);
}

// Partitions of {0,...,n-1} as restricted growth strings.
template <typename Fn>
void all_partitions(std::size_t n, Fn&& fn) {
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

void check_extension_routes(Rng& rng, Profile profile, Json& details) {
  std::uint64_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    all_partitions(n, [&](const std::vector<std::size_t>& labels) {
      std::size_t classes = 0;
      for (std::size_t l : labels) classes = std::max(classes, l + 1);
      std::vector<Mask> atoms(classes, Mask(n));
      for (std::size_t t = 0; t < n; ++t) atoms[labels[t]].set(t);
      Algebra b = Algebra::from_atoms(n, std::move(atoms));
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        Mask x(n);
        for (std::size_t t = 0; t < n; ++t)
          if ((code >> t) & 1) x.set(t);
        route_agreement(b, x);
        ++cases;
      }
    });
  }
  const std::uint64_t random_trials = profile == Profile::full ? 500 : 100;
  for (std::uint64_t trial = 0; trial < random_trials; ++trial) {
    Rng tr = rng.substream(trial);
    std::size_t ground = 6 + tr.below(11);
    Algebra b = random_algebra(tr, ground, 12);
    Mask x = random_mask(tr, ground);
    route_agreement(b, x);
    ++cases;
  }
  details["cases"] = cases;
}

// C07: laminar generators give minimal chains in any order.
void check_laminar_chains(Rng& rng, Profile profile, Json& details) {
  const std::uint64_t families = profile == Profile::full ? 500 : 100;
  const std::uint64_t perms = profile == Profile::full ? 5 : 3;
  for (std::uint64_t trial = 0; trial < families; ++trial) {
    Rng tr = rng.substream(trial);
    std::size_t ground = 4 + tr.below(13);
    SetFamily f = random_laminar_family(tr, ground, 3 + tr.below(8));
    for (std::uint64_t p = 0; p < perms; ++p) {
      std::vector<std::uint32_t> order =
          random_permutation(tr, static_cast<std::uint32_t>(f.size()));
      std::vector<Mask> shuffled;
      for (std::uint32_t i : order) shuffled.push_back(f.members[i]);
      SetFamily g(ground, std::move(shuffled));
      ChainVerdict v = verify_minimal_chain(g);
      Json ctx{{"trial", trial}, {"family", family_to_json(g)}};
      if (!v.ok) {
        ctx["index"] = v.fail_index;
        ctx["witness"] = mask_to_json(v.witness);
      }
      require(v.ok, "laminar chain is minimal", ctx);
    }
  }
  details["families"] = families;
  details["permutations_each"] = perms;
}

// C08: product measure values are exact.
void check_product_measure(Rng& rng, Profile profile, Json& details) {
  std::uint64_t cases = 0;
  for (std::size_t k = 1; k <= 10; ++k) {
    Rng tr = rng.substream(k);
    SetFamily f = random_independent_family(tr, k, tr.below(5));
    ProductMeasureResult res = product_measure_on_independent(f);
    Json ctx{{"k", k}};
    require(res.independent, "constructed family is independent", ctx);
    const Measure& mu = *res.measure;
    require(mu.algebra().atoms().size() == (std::size_t{1} << k),
            "one atom per sign cell", ctx);
    for (const Rational& w : mu.weights())
      require(w == half_power(k), "every cell weighs 2^-k", ctx);
    for (const Mask& a : f.members)
      require(measure_of(mu, a) == Rational(1, 2), "every generator weighs 1/2", ctx);
    if (k >= 2)
      require(min_pairwise_separation(mu, f) == Rational(1, 2),
              "pairwise separation is exactly 1/2", ctx);

    // Sign cells recomputed directly must be atoms of the right mass.
    const std::uint64_t cells = std::uint64_t{1} << k;
    const bool sample = profile == Profile::quick ? k > 5 : k > 6;
    const std::uint64_t probes = sample ? 64 : cells;
    for (std::uint64_t probe = 0; probe < probes; ++probe) {
      std::uint64_t eps = sample ? tr.below(cells) : probe;
      Mask cell = Mask::full(f.ground);
      for (std::size_t i = 0; i < k; ++i)
        cell = cell & (((eps >> i) & 1) ? f.members[i] : ~f.members[i]);
      require(!cell.none(), "sign cell nonempty", ctx);
      require(measure_of(mu, cell) == half_power(k), "sign cell measure", ctx);
      ++cases;
    }
  }
  details["cells_checked"] = cases;
}

// C09: the atom-gap alternative never reports a violation.
void check_atom_gap(Rng& rng, Profile profile, Json& details) {
  const std::uint64_t trials = profile == Profile::full ? 1000 : 250;
  std::uint64_t atoms = 0, members = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng tr = rng.substream(trial);
    std::size_t ground = 6 + tr.below(7);
    SetFamily lam = random_laminar_family(tr, ground, 5 + tr.below(5));
    Mask g = lam.members.back();
    SetFamily g0(ground, std::vector<Mask>(lam.members.begin(), lam.members.end() - 1));
    AtomCheckResult res = i1_atom_check(g0, g);
    Json ctx{{"trial", trial}, {"g0", family_to_json(g0)}, {"g", mask_to_json(g)}};
    require(res.status != AtomCheckResult::Status::precondition_failed,
            "laminar family has no independent pair", ctx);
    require(res.status != AtomCheckResult::Status::violated,
            "gap between the bounds is a single atom", ctx);
    if (res.status == AtomCheckResult::Status::atom) {
      require(res.lower.subset_of(g) && g.subset_of(res.upper),
              "bounds really bracket g", ctx);
      ++atoms;
    } else {
      Algebra b = g0.members.empty() ? Algebra::trivial(ground)
                                     : Algebra::generated_by(g0);
      require(b.contains(g), "membership verdict is genuine", ctx);
      ++members;
    }
  }
  details["trials"] = trials;
  details["atom_verdicts"] = atoms;
  details["member_verdicts"] = members;
}

// C10: picking one point per digit cell transfers independence to the index
// space.
void check_transfer(Rng& rng, Profile profile, Json& details) {
  const std::uint64_t trials = profile == Profile::full ? 200 : 50;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng tr = rng.substream(trial);
    std::size_t n = tr.below(3);
    std::size_t size = std::size_t{1} << (n + 1);
    SetFamily f = random_independent_family(tr, size, tr.below(40));
    TransferResult res = dual_transfer(f, n);
    Json ctx{{"trial", trial}, {"n", n}};
    require(res.ok, "independent input passes the gate", ctx);
    require(is_independent(res.induced).independent, "induced family independent",
            ctx);
    for (std::size_t i = 0; i < res.induced.size(); ++i) {
      Mask expect(size);
      for (std::size_t j = 0; j < size; ++j)
        if ((j >> i) & 1) expect.set(j);
      require(res.induced.members[i] == expect, "induced sets follow the digits", ctx);
    }
  }

  // Exhaustive tiny grounds for the two-set case.
  std::uint64_t pairs = 0;
  for (std::size_t ground = 1; ground <= 5; ++ground) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << ground); ++a)
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << ground); ++b) {
        Mask ma(ground), mb(ground);
        for (std::size_t t = 0; t < ground; ++t) {
          if ((a >> t) & 1) ma.set(t);
          if ((b >> t) & 1) mb.set(t);
        }
        SetFamily f(ground, {ma, mb});
        IndependenceVerdict iv = is_independent(f);
        TransferResult res = dual_transfer(f, 0);
        Json ctx{{"ground", ground}, {"a", mask_to_json(ma)}, {"b", mask_to_json(mb)}};
        require(res.ok == iv.independent, "gate matches independence", ctx);
        if (res.ok) {
          require(res.induced.members[0] == Mask::of(2, {1}),
                  "two-set transfer yields the digit set", ctx);
        } else {
          // The reported missing cell must really be empty.
          Mask cell = Mask::full(ground);
          cell = cell & (res.missing_cell.test(0) ? ma : ~ma);
          cell = cell & (res.missing_cell.test(1) ? mb : ~mb);
          require(cell.none(), "missing cell is genuinely empty", ctx);
        }
        ++pairs;
      }
  }
  details["trials"] = trials;
  details["exhaustive_pairs"] = pairs;
  (void)profile;
}

// C11: maximum independent subfamily size equals the VC dimension of the
// transpose.
void check_duality(Rng& rng, Profile profile, Json& details) {
  const std::uint64_t trials = profile == Profile::full ? 1000 : 250;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng tr = rng.substream(trial);
    std::size_t ground = 4 + tr.below(13);
    std::size_t k = 1 + tr.below(12);
    std::vector<Mask> members;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t kind = tr.below(8);
      if (kind == 0)
        members.push_back(Mask(ground));
      else if (kind == 1)
        members.push_back(Mask::full(ground));
      else
        members.push_back(random_mask(tr, ground));
    }
    SetFamily f(ground, std::move(members));
    MaxIndependentResult mi = max_independent(f);
    std::size_t vc = vc_dimension(transpose(f));
    Json ctx{{"trial", trial},
             {"family", family_to_json(f)},
             {"max_independent", mi.size},
             {"vc_dimension", vc}};
    require(mi.size == vc, "duality of independence and shattering", ctx);
    if (mi.size > 0) {
      std::vector<Mask> sub;
      for (std::size_t i : mi.members) sub.push_back(f.members[i]);
      require(is_independent(SetFamily(ground, std::move(sub))).independent,
              "witness subfamily independent", ctx);
    }
  }
  details["trials"] = trials;
}

}  // namespace

std::vector<CheckResult> run_acceptance(std::uint64_t seed, Profile profile) {
  struct Entry {
    const char* id;
    const char* name;
    std::function<void(Rng&, Profile, Json&)> fn;
  };
  const std::vector<Entry> table = {
      {"C01", "independence threshold table", check_thresholds},
      {"C02", "exhaustive shattering sweep", check_sauer_sweep},
      {"C03", "polynomial image threshold harness", check_poly_harness},
      {"C04", "cylinder family separation bound", check_separation},
      {"C05", "stage cylinder facts", check_stage_facts},
      {"C06", "minimal extension route agreement", check_extension_routes},
      {"C07", "laminar chain minimality", check_laminar_chains},
      {"C08", "product measure exactness", check_product_measure},
      {"C09", "atom gap alternative", check_atom_gap},
      {"C10", "independence transfer to index sets", check_transfer},
      {"C11", "independence and shattering duality", check_duality},
  };
  Rng master(seed);
  std::vector<CheckResult> results;
  for (std::size_t i = 0; i < table.size(); ++i) {
    CheckResult r;
    r.id = table[i].id;
    r.name = table[i].name;
    r.details["profile"] = profile == Profile::full ? "full" : "quick";
    Rng sub = master.substream(i);
    auto start = Clock::now();
    try {
      table[i].fn(sub, profile, r.details);
      r.status = CheckStatus::pass;
    } catch (const Failure& f) {
      r.status = CheckStatus::fail;
      r.details["failure"] = f.details;
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.details["exception"] = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace finbool
