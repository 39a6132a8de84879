#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "admkit/rootsystem.hpp"

using namespace admkit;

namespace {

Root root_a1(int a, long n) { return Root{{a}, n, false, 1}; }

bool contains(const std::vector<Root>& v, const Root& r) {
    return std::find(v.begin(), v.end(), r) != v.end();
}

// k*Lambda0 with k = base + tau for an irrational tau.
WeightExt irrational_vacuum(const CartanData& cd, const Rat& base_level) {
    Weight base = cd.scale(cd.lambda0_weight(), base_level);
    return WeightExt{base, cd.lambda0_weight()};
}

}  // namespace

TEST_CASE("positive roots: finite types") {
    auto a1 = CartanData::finite_type('A', 1);
    auto r1 = a1.positive_roots(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == Root{{1}, 0, false, 1});

    auto a2 = CartanData::finite_type('A', 2);
    auto r2 = a2.positive_roots(2);
    REQUIRE(r2.size() == 3);
    CHECK(contains(r2, Root{{1, 0}, 0, false, 1}));
    CHECK(contains(r2, Root{{0, 1}, 0, false, 1}));
    CHECK(contains(r2, Root{{1, 1}, 0, false, 1}));

    // Root counts exercise the closure across the series.
    CHECK(CartanData::finite_type('A', 3).positive_roots(10).size() == 6);
    CHECK(CartanData::finite_type('B', 2).positive_roots(10).size() == 4);
    CHECK(CartanData::finite_type('C', 3).positive_roots(10).size() == 9);
    CHECK(CartanData::finite_type('D', 4).positive_roots(10).size() == 12);
    CHECK(CartanData::finite_type('G', 2).positive_roots(10).size() == 6);
    CHECK(CartanData::finite_type('F', 4).positive_roots(20).size() == 24);
    CHECK(CartanData::finite_type('E', 6).positive_roots(20).size() == 36);
}

TEST_CASE("positive roots: affine sl2 under ht(alpha) = ht(delta - alpha) = 1") {
    auto cd = CartanData::affine_untwisted('A', 1);
    auto r = cd.positive_roots(3);
    // Heights: alpha (1), delta-alpha (1), delta (2), alpha+delta (3), 2delta-alpha (3).
    REQUIRE(r.size() == 5);
    CHECK(contains(r, root_a1(1, 0)));
    CHECK(contains(r, root_a1(-1, 1)));
    CHECK(contains(r, Root{{0}, 1, true, 1}));
    CHECK(contains(r, root_a1(1, 1)));
    CHECK(contains(r, root_a1(-1, 2)));

    auto r4 = cd.positive_roots(4);
    CHECK(r4.size() == 6);  // adds 2delta at height 4
    CHECK(contains(r4, Root{{0}, 2, true, 1}));
}

TEST_CASE("invariant form and coroot pairings") {
    auto cd = CartanData::affine_untwisted('A', 1);
    Weight delta = cd.delta_weight();
    CHECK(cd.form(delta, delta) == 0);
    CHECK(cd.form(cd.rho(), delta) == cd.dual_coxeter());
    CHECK(cd.dual_coxeter() == 2);

    auto a1 = CartanData::finite_type('A', 1);
    Weight lam = a1.weight_from_pairings({rat(3)});
    CHECK(a1.coroot_pairing(lam, Root{{1}, 0, false, 1}) == 3);

    CHECK_THROWS_AS(cd.coroot_pairing(delta, Root{{0}, 1, true, 1}), std::domain_error);
}

TEST_CASE("dual Coxeter numbers of the affinizations") {
    CHECK(CartanData::affine_untwisted('A', 2).dual_coxeter() == 3);
    CHECK(CartanData::affine_untwisted('C', 2).dual_coxeter() == 3);
    CHECK(CartanData::affine_untwisted('G', 2).dual_coxeter() == 4);
    CHECK(CartanData::affine_untwisted('E', 8).dual_coxeter() == 30);
    CHECK(CartanData::affine_untwisted('A', 1).rdual() == 1);
    CHECK(CartanData::affine_untwisted('G', 2).rdual() == 3);
    CHECK(CartanData::affine_untwisted('C', 2).rdual() == 2);
}

TEST_CASE("dot reflection") {
    auto a1 = CartanData::finite_type('A', 1);
    Root alpha{{1}, 0, false, 1};
    Weight lam = a1.weight_from_pairings({rat(3)});
    Weight refl = a1.dot_reflect(lam, alpha);
    CHECK(a1.coroot_pairing(refl, alpha) == -5);

    Weight fixed = a1.weight_from_pairings({rat(-1)});  // <lam+rho, av> = 0
    CHECK(a1.dot_reflect(fixed, alpha) == fixed);

    // Involution, finite and affine.
    CHECK(a1.dot_reflect(refl, alpha) == lam);
    auto aff = CartanData::affine_untwisted('A', 1);
    Weight mu = aff.affine_weight({rat(1, 3)}, rat(-1, 2), rat(2));
    for (const auto& r : aff.positive_roots(6)) {
        if (r.imaginary) continue;
        CHECK(aff.dot_reflect(aff.dot_reflect(mu, r), r) == mu);
    }
}

TEST_CASE("integral subsystem") {
    auto aff = CartanData::affine_untwisted('A', 1);

    // Integer level k >= -1 (q = 1): simple system {alpha, delta - alpha}.
    Weight lam = aff.scale(aff.lambda0_weight(), rat(2));
    auto sub = integral_subsystem(aff, lam, 8);
    REQUIRE(sub.simple_system.size() == 2);
    CHECK(contains(sub.simple_system, root_a1(1, 0)));
    CHECK(contains(sub.simple_system, root_a1(-1, 1)));
    CHECK(sub.periodicity == 1);

    // k + 2 = 1/2: members at even delta shifts, simple system {alpha, 2delta-alpha}.
    Weight half = aff.scale(aff.lambda0_weight(), rat(-3, 2));
    auto sub2 = integral_subsystem(aff, half, 8);
    REQUIRE(sub2.simple_system.size() == 2);
    CHECK(contains(sub2.simple_system, root_a1(1, 0)));
    CHECK(contains(sub2.simple_system, root_a1(-1, 2)));
    CHECK(sub2.periodicity == 2);

    // Irrational level: only the finite root stays integral.
    auto sub3 = integral_subsystem(aff, irrational_vacuum(aff, rat(0)), 8);
    REQUIRE(sub3.simple_system.size() == 1);
    CHECK(sub3.simple_system[0] == root_a1(1, 0));
    CHECK_FALSE(sub3.periodicity.has_value());

    // sl3 dominant integral.
    auto a2 = CartanData::finite_type('A', 2);
    Weight dom = a2.weight_from_pairings({rat(1), rat(2)});
    auto sub4 = integral_subsystem(a2, dom, 8);
    CHECK(sub4.positive_members.size() == 3);
    REQUIRE(sub4.simple_system.size() == 2);

    // Critical level rejected.
    Weight crit = aff.scale(aff.lambda0_weight(), rat(-2));
    CHECK_THROWS_AS(integral_subsystem(aff, crit, 8), std::domain_error);
}

TEST_CASE("subsystem properties Pi2 and Pi3, and orbit invariance") {
    auto aff = CartanData::affine_untwisted('A', 1);
    const long H = 12;
    std::vector<Weight> samples = {
        aff.affine_weight({rat(1)}, rat(1), rat(0)),
        aff.affine_weight({rat(1, 2)}, rat(-1, 2), rat(0)),
        aff.affine_weight({rat(-5, 3)}, rat(1, 3), rat(0)),
    };
    for (const auto& lam : samples) {
        auto sub = integral_subsystem(aff, lam, H);
        REQUIRE(sub.simple_system.size() <= 2);

        // Pi2: every member decomposes over the simple system.
        Weight s0 = aff.root_weight(sub.simple_system[0]);
        Weight s1 = sub.simple_system.size() > 1 ? aff.root_weight(sub.simple_system[1])
                                                 : aff.zero_weight();
        for (const auto& m : sub.positive_members) {
            Weight target = aff.root_weight(m);
            bool found = false;
            for (int i = 0; i <= 2 * H && !found; ++i)
                for (int j = 0; j <= 2 * H && !found; ++j)
                    if (aff.add(aff.scale(s0, rat(i)), aff.scale(s1, rat(j))) == target)
                        found = true;
            CHECK(found);
        }

        // Pi3: reflection in a simple member permutes the other members,
        // modulo the cutoff boundary.
        for (const auto& alpha : sub.simple_system) {
            for (const auto& beta : sub.positive_members) {
                if (beta == alpha) continue;
                Rat pairing = aff.coroot_pairing(aff.root_weight(beta), alpha);
                Weight image = aff.sub(aff.root_weight(beta),
                                       aff.scale(aff.root_weight(alpha), pairing));
                Rat a2x = image.coords[0];  // coefficient of the finite simple root
                REQUIRE(is_integer(a2x));
                REQUIRE(is_integer(image.coords[2]));
                long ai = a2x.get_num().get_si();
                long di = image.coords[2].get_num().get_si();
                long ht = 2 * di + ai;
                if (ht > H) continue;
                Root img{{static_cast<int>(ai)}, di, false, 1};
                CHECK(contains(sub.positive_members, img));
            }
        }

        // Delta(w.lambda) = Delta(lambda) for reflections in members.
        for (const auto& alpha : sub.simple_system) {
            Weight refl = aff.dot_reflect(lam, alpha);
            auto sub_r = integral_subsystem(aff, refl, H);
            CHECK(sub_r.positive_members == sub.positive_members);
        }
    }
}

TEST_CASE("classify") {
    auto aff = CartanData::affine_untwisted('A', 1);

    auto rep = classify(aff, aff.lambda0_weight(), 12);
    CHECK(rep.non_critical.value);
    CHECK(rep.dominant.value);
    CHECK(rep.shifted_regular.value);
    CHECK(rep.rational.value);
    CHECK(rep.weakly_admissible.value);
    CHECK(rep.kw_admissible.value);

    // k = -2 + 1/2: weakly admissible but not KW (p = 1 < 2).
    auto rep2 = classify(aff, aff.scale(aff.lambda0_weight(), rat(-3, 2)), 12);
    CHECK(rep2.weakly_admissible.value);
    CHECK_FALSE(rep2.kw_admissible.value);
    CHECK_FALSE(rep2.dominant.value);
    CHECK(rep2.rational.value);

    // Irrational k: not rational.
    auto rep3 = classify(aff, irrational_vacuum(aff, rat(0)), 12);
    CHECK(rep3.non_critical.value);
    CHECK(rep3.weakly_admissible.value);
    CHECK_FALSE(rep3.rational.value);
    CHECK_FALSE(rep3.kw_admissible.value);

    // KW implies weakly admissible, rational, shifted-regular on samples.
    std::vector<WeightExt> samples;
    for (int x = 0; x <= 3; ++x)
        for (int num = -3; num <= 4; ++num)
            samples.push_back(
                WeightExt::rational(aff.affine_weight({rat(x)}, rat(num, 2), rat(0))));
    samples.push_back(irrational_vacuum(aff, rat(1, 2)));
    for (const auto& lam : samples) {
        auto r = classify(aff, lam, 12);
        if (r.kw_admissible.value) {
            CHECK(r.weakly_admissible.value);
            CHECK(r.rational.value);
            CHECK(r.shifted_regular.value);
        }
        if (!r.weakly_admissible.value) CHECK(r.weakly_admissible.witness.has_value());
    }
}

TEST_CASE("selfext_dim") {
    auto a1 = CartanData::finite_type('A', 1);
    CHECK(selfext_dim(a1, a1.weight_from_pairings({rat(2)}), 10) == 0);
    auto a2 = CartanData::finite_type('A', 2);
    CHECK(selfext_dim(a2, a2.weight_from_pairings({rat(1), rat(3)}), 10) == 0);

    auto aff = CartanData::affine_untwisted('A', 1);
    CHECK(selfext_dim(aff, aff.affine_weight({rat(1)}, rat(3), rat(0)), 12) == 1);
    CHECK(selfext_dim(aff, irrational_vacuum(aff, rat(0)), 12) == 2);

    // Precondition violations name the failed predicate.
    Weight bad = aff.affine_weight({rat(-2)}, rat(1), rat(0));  // <lam+rho,av> = -1
    CHECK_THROWS_WITH_AS(static_cast<void>(selfext_dim(aff, bad, 12)),
                         "selfext_dim: weight is not weakly admissible", std::domain_error);
}

TEST_CASE("upsilon_bounds") {
    auto a1 = CartanData::finite_type('A', 1);
    CHECK(upsilon_bounds(a1, a1.weight_from_pairings({rat(2)}), 10) ==
          std::pair<long, long>{0, 0});

    auto aff = CartanData::affine_untwisted('A', 1);
    // Vacuum at k = p/q - 2 with p >= 2: both bounds 1.
    CHECK(upsilon_bounds(aff, aff.scale(aff.lambda0_weight(), rat(3, 2) - rat(2)), 14) ==
          std::pair<long, long>{1, 1});
    CHECK(upsilon_bounds(aff, aff.scale(aff.lambda0_weight(), rat(1)), 14) ==
          std::pair<long, long>{1, 1});
    // Irrational k: both bounds 2.
    CHECK(upsilon_bounds(aff, irrational_vacuum(aff, rat(0)), 14) ==
          std::pair<long, long>{2, 2});

    CHECK_THROWS_AS(upsilon_bounds(aff, aff.scale(aff.lambda0_weight(), rat(-2)), 10),
                    std::domain_error);
}

TEST_CASE("json loader") {
    auto cd = CartanData::from_json(R"({"series":"A","rank":1,"kind":"affine-untwisted"})");
    CHECK(cd.kind() == AlgebraKind::AffineUntwisted);
    CHECK(cd.dual_coxeter() == 2);

    auto cd2 = CartanData::from_json(R"({"gcm":[[2,-1],[-1,2]],"tau":[],"kind":"finite"})");
    CHECK(cd2.positive_roots(5).size() == 3);

    CHECK_THROWS(CartanData::from_json(R"({"gcm":[[2,-1]],"kind":"finite"})"));
}
