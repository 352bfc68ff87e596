#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "finbool/errors.hpp"
#include "finbool/harness.hpp"
#include "finbool/measure.hpp"
#include "finbool/rational.hpp"
#include "finbool/rng.hpp"
#include "oracles.hpp"

using namespace finbool;

namespace {

Algebra discrete(std::size_t ground) {
  std::vector<Mask> atoms;
  for (std::size_t i = 0; i < ground; ++i) atoms.push_back(Mask::of(ground, {i}));
  return Algebra::from_atoms(ground, std::move(atoms));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("5/28") == Rational(5, 28));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(rational_str(Rational(10, 4)) == "5/2");
  CHECK(rational_str(Rational(8, 4)) == "2");
  CHECK(rational_str(Rational(0)) == "0");
  CHECK(half_power(3) == Rational(1, 8));
  CHECK(half_power(0) == Rational(1));
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("a/b"), input_error);
  CHECK_THROWS_AS(parse_rational(""), input_error);
}

TEST_CASE("measure construction validates its weights") {
  Algebra d = discrete(3);
  CHECK_THROWS_AS(Measure(d, {Rational(1, 2), Rational(1, 2)}), input_error);
  CHECK_THROWS_AS(Measure(d, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}),
                  input_error);
  CHECK_THROWS_AS(Measure(d, {Rational(1, 2), Rational(-1, 4), Rational(3, 4)}),
                  input_error);
  Measure ok(d, {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  CHECK(ok.weights().size() == 3);
  Measure u = Measure::uniform(discrete(4));
  CHECK(u.weights().front() == Rational(1, 4));
}

TEST_CASE("measure of members, and rejection of non-members") {
  Algebra b = Algebra::from_atoms(4, {Mask::of(4, {0, 1}), Mask::of(4, {2, 3})});
  Measure mu(b, {Rational(1, 3), Rational(2, 3)});
  CHECK(measure_of(mu, Mask::of(4, {0, 1})) == Rational(1, 3));
  CHECK(measure_of(mu, Mask::full(4)) == Rational(1));
  CHECK(measure_of(mu, Mask(4)) == Rational(0));
  CHECK_THROWS_AS(measure_of(mu, Mask::of(4, {0})), input_error);

  Measure quarters = Measure::uniform(discrete(4));
  CHECK(measure_of(quarters, Mask::of(4, {1, 3})) == Rational(1, 2));

  Measure skew(discrete(3), {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  CHECK(measure_of(skew, Mask::of(3, {2})) == Rational(1, 4));
}

TEST_CASE("measures are exactly additive on disjoint members") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    Rng tr = rng.substream(trial);
    std::size_t ground = 3 + tr.below(8);
    Algebra b = random_algebra(tr, ground, 8);
    const std::size_t k = b.atoms().size();
    std::vector<std::uint64_t> raw(k);
    std::uint64_t total = 0;
    for (auto& w : raw) total += (w = 1 + tr.below(9));
    std::vector<Rational> weights;
    for (std::uint64_t w : raw) weights.emplace_back(w, total);
    Measure mu(b, std::move(weights));

    // Split the atoms three ways; the first two parts are disjoint members.
    Mask a(ground), c(ground);
    for (const Mask& atom : b.atoms()) {
      std::uint64_t where = tr.below(3);
      if (where == 0)
        a = a | atom;
      else if (where == 1)
        c = c | atom;
    }
    CHECK(measure_of(mu, a | c) == measure_of(mu, a) + measure_of(mu, c));
  }
}

TEST_CASE("product measure on an independent pair") {
  SetFamily f(4, {Mask::of(4, {0, 1}), Mask::of(4, {0, 2})});
  ProductMeasureResult r = product_measure_on_independent(f);
  REQUIRE(r.independent);
  const Measure& mu = *r.measure;
  CHECK(mu.algebra().atoms().size() == 4);
  for (const Rational& w : mu.weights()) CHECK(w == Rational(1, 4));
  for (const Mask& a : f.members) CHECK(measure_of(mu, a) == Rational(1, 2));
  CHECK(measure_of(mu, f.members[0] & f.members[1]) == Rational(1, 4));
  CHECK(measure_of(mu, f.members[0] ^ f.members[1]) == Rational(1, 2));
  CHECK(min_pairwise_separation(mu, f) == Rational(1, 2));
  CHECK(nonatomic_threshold(mu) == Rational(1, 4));

  // A single proper set gets measure exactly one half.
  SetFamily single(3, {Mask::of(3, {0, 2})});
  ProductMeasureResult s = product_measure_on_independent(single);
  REQUIRE(s.independent);
  CHECK(measure_of(*s.measure, Mask::of(3, {0, 2})) == Rational(1, 2));

  SetFamily dep(3, {Mask::of(3, {0}), Mask::of(3, {0})});
  CHECK(!product_measure_on_independent(dep).independent);
}

TEST_CASE("pairwise separation needs two members and finds the minimum") {
  Algebra d = discrete(4);
  Measure mu = Measure::uniform(d);
  SetFamily f(4, {Mask::of(4, {0, 1}), Mask::of(4, {1, 2}), Mask::of(4, {1})});
  // Symmetric differences: {0,2} (1/2), {0} (1/4), {2} (1/4).
  CHECK(min_pairwise_separation(mu, f) == Rational(1, 4));
  CHECK_THROWS_AS(min_pairwise_separation(mu, SetFamily(4, {Mask::of(4, {0})})),
                  input_error);

  // Two distinct points of weight 1/4 each.
  SetFamily points(4, {Mask::of(4, {0}), Mask::of(4, {1})});
  CHECK(min_pairwise_separation(mu, points) == Rational(1, 2));

  // Duplicates collapse the minimum to zero.
  SetFamily dup(4, {Mask::of(4, {0}), Mask::of(4, {0})});
  CHECK(min_pairwise_separation(mu, dup) == Rational(0));
}

TEST_CASE("separation probe reports the first offending pair") {
  Algebra d = discrete(4);
  Measure mu = Measure::uniform(d);
  SetFamily f(4, {Mask::of(4, {0, 1}), Mask::of(4, {1, 2}), Mask::of(4, {1})});
  SeparationProbe ok = separated_independence_probe(mu, f, Rational(1, 4));
  CHECK(ok.separated);
  SeparationProbe bad = separated_independence_probe(mu, f, Rational(1, 2));
  REQUIRE(!bad.separated);
  CHECK(bad.offend_i == 0);
  CHECK(bad.offend_j == 2);  // mu({0,1} xor {1}) = 1/4 < 1/2... checked in order
  CHECK(bad.best.size >= 1);

  // A chain stays separated but has no independent pair.
  SetFamily chain(4, {Mask::of(4, {0}), Mask::of(4, {0, 1}), Mask::of(4, {0, 1, 2})});
  SeparationProbe probe = separated_independence_probe(mu, chain, Rational(1, 4));
  REQUIRE(probe.separated);
  CHECK(probe.best.size == 1);

  // Zero separation is vacuous; the report is still produced.
  SetFamily dup(4, {Mask::of(4, {0}), Mask::of(4, {0})});
  SeparationProbe vac = separated_independence_probe(mu, dup, Rational(0));
  CHECK(vac.separated);
  CHECK(vac.best.size == 1);
}

TEST_CASE("nonatomic threshold is the heaviest atom, and optimally so") {
  CHECK(nonatomic_threshold(Measure::uniform(discrete(8))) == Rational(1, 8));
  CHECK(nonatomic_threshold(Measure(discrete(2), {Rational(1, 2), Rational(1, 2)})) ==
        Rational(1, 2));
  Measure skew(discrete(3), {Rational(3, 4), Rational(1, 8), Rational(1, 8)});
  CHECK(nonatomic_threshold(skew) == Rational(3, 4));

  // Over every partition of the algebra, the lightest achievable heaviest
  // part is exactly the threshold (attained by the atom partition).
  Measure mu(discrete(4),
             {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 8)});
  Rational best_max(1);
  std::vector<std::size_t> labels(4, 0);
  do {
    std::size_t groups = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<Mask> parts(groups, Mask(4));
    for (std::size_t i = 0; i < 4; ++i) parts[labels[i]].set(i);
    Rational worst(0);
    for (const Mask& p : parts) worst = std::max(worst, measure_of(mu, p));
    best_max = std::min(best_max, worst);
  } while (oracles::next_rgs(labels));
  CHECK(best_max == nonatomic_threshold(mu));
}

TEST_CASE("subalgebra defects on a hand-built case") {
  Measure mu = Measure::uniform(discrete(4));
  SetFamily half(4, {Mask::of(4, {0, 1})});
  CHECK(type_defect(mu, half) == Rational(1, 2));
  CHECK(determination_defect(mu, half) == Rational(1, 2));

  // Against the trivial subalgebra the best approximant of the light atom
  // is the empty set; inner approximation of the heavy atom also only has
  // the empty set available.
  Measure skew(discrete(2), {Rational(1, 4), Rational(3, 4)});
  CHECK(type_defect(skew, SetFamily(2, {})) == Rational(1, 4));
  CHECK(determination_defect(skew, SetFamily(2, {})) == Rational(3, 4));

  // The full algebra approximates itself perfectly.
  SetFamily fine(4, {Mask::of(4, {0}), Mask::of(4, {1}), Mask::of(4, {2})});
  CHECK(type_defect(mu, fine) == Rational(0));
  CHECK(determination_defect(mu, fine) == Rational(0));

  // Generators outside the algebra are rejected.
  Algebra coarse = Algebra::from_atoms(4, {Mask::of(4, {0, 1}), Mask::of(4, {2, 3})});
  Measure nu = Measure::uniform(coarse);
  CHECK_THROWS_AS(type_defect(nu, SetFamily(4, {Mask::of(4, {0})})), input_error);
}

TEST_CASE("defects shrink when generators are added") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Rng tr = rng.substream(trial);
    std::size_t ground = 4 + tr.below(5);
    Measure mu = Measure::uniform(discrete(ground));
    std::vector<Mask> gens{random_nonempty_proper(tr, ground)};
    SetFamily small(ground, gens);
    gens.push_back(random_nonempty_proper(tr, ground));
    SetFamily large(ground, gens);
    CHECK(type_defect(mu, large) <= type_defect(mu, small));
    CHECK(determination_defect(mu, large) <= determination_defect(mu, small));
    CHECK(type_defect(mu, small) <= determination_defect(mu, small));
  }
}

TEST_CASE("atom gap alternative on hand-built inputs") {
  SetFamily g0(4, {Mask::of(4, {0, 1})});
  AtomCheckResult atom = i1_atom_check(g0, Mask::of(4, {0}));
  REQUIRE(atom.status == AtomCheckResult::Status::atom);
  CHECK(atom.lower == Mask(4));
  CHECK(atom.upper == Mask::of(4, {0, 1}));

  AtomCheckResult member = i1_atom_check(g0, Mask::of(4, {2, 3}));
  CHECK(member.status == AtomCheckResult::Status::in_algebra);

  AtomCheckResult pre = i1_atom_check(g0, Mask::of(4, {1, 2}));
  REQUIRE(pre.status == AtomCheckResult::Status::precondition_failed);
  CHECK(pre.pair == std::vector<std::size_t>{0, 1});  // index 1 stands for g
}

TEST_CASE("atom gap alternative never reports violation on laminar input") {
  Rng rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    Rng tr = rng.substream(trial);
    SetFamily lam = random_laminar_family(tr, 5 + tr.below(6), 6);
    Mask g = lam.members.back();
    SetFamily g0(lam.ground,
                 std::vector<Mask>(lam.members.begin(), lam.members.end() - 1));
    AtomCheckResult r = i1_atom_check(g0, g);
    CHECK(r.status != AtomCheckResult::Status::violated);
    CHECK(r.status != AtomCheckResult::Status::precondition_failed);
  }
}
