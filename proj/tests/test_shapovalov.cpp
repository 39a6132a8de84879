#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "admkit/shapovalov.hpp"

using namespace admkit;

namespace {

GenId F(long n) { return 4 * n + 0; }
GenId H(long n) { return 4 * n + 1; }
GenId E(long n) { return 4 * n + 2; }

MultiPoly hc_var(const AlgebraEngine& eng, const std::string& v) {
    return MultiPoly::variable(eng.cartan_vars(), v);
}

// Fixed generic rational level for the Virasoro tests: k0 = -3/5 (k0+2 = 7/5),
// c(k0) = 11/35, h_{1,1} = 0, h_{1,2} = 1/28, h_{2,1} = 11/20.
const Rat kC0 = rat(11, 35);
const Rat kH12 = rat(1, 28);
const Rat kH21 = rat(11, 20);

}  // namespace

TEST_CASE("pbw bases match the spec orders") {
    auto vir = AlgebraEngine::virasoro();
    auto b2 = vir.pbw_basis(depth_x2(4));  // level 2
    REQUIRE(b2.size() == 2);
    CHECK(b2[0] == Word{-4});      // L_{-2}
    CHECK(b2[1] == Word{-2, -2});  // L_{-1} L_{-1}

    auto ns = AlgebraEngine::neveu_schwarz();
    auto b32 = ns.pbw_basis(depth_x2(3));  // level 3/2
    REQUIRE(b32.size() == 2);
    CHECK(b32[0] == Word{-3});      // G_{-3/2}
    CHECK(b32[1] == Word{-2, -1});  // L_{-1} G_{-1/2}

    auto aff = AlgebraEngine::affine_sl2();
    auto ba = aff.pbw_basis({1, 0});
    REQUIRE(ba.size() == 1);
    CHECK(ba[0] == Word{F(0)});
}

TEST_CASE("pbw cardinalities equal the partition functions") {
    auto vir = AlgebraEngine::virasoro(24);
    for (long n = 0; n <= 12; ++n)
        CHECK(vir.pbw_basis(depth_x2(2 * n)).size() == vir_partition(n));

    auto ns = AlgebraEngine::neveu_schwarz(16);
    for (long n2 = 0; n2 <= 15; ++n2)
        CHECK(ns.pbw_basis(depth_x2(n2)).size() == ns_partition_x2(n2));

    auto aff = AlgebraEngine::affine_sl2(8);
    for (long b = 0; b <= 6; ++b)
        for (long a = -b; a + b <= 6; ++a)
            CHECK(aff.pbw_basis({a, b}).size() == affine_sl2_partition(a, b));

    CHECK_THROWS_AS(vir.pbw_basis(depth_x2(60)), CutoffError);
}

TEST_CASE("Harish-Chandra projection pins") {
    auto aff = AlgebraEngine::affine_sl2();
    MultiPoly a = hc_var(aff, "a");
    CHECK(aff.hc({E(0), F(0)}) == a);
    CHECK(aff.hc({E(0), E(0), F(0), F(0)}) == a * a * rat(2) - a * rat(2));

    auto vir = AlgebraEngine::virasoro();
    CHECK(vir.hc({2, -2}) == hc_var(vir, "h") * rat(2));

    // Words ending in a lone positive or negative generator project to zero.
    CHECK(vir.hc({-2}).is_zero());
    CHECK(vir.hc({2}).is_zero());
}

TEST_CASE("shapovalov matrices are symmetric for the even algebras") {
    for (auto eng : {AlgebraEngine::virasoro(), AlgebraEngine::neveu_schwarz()}) {
        for (Depth nu : eng.depths_up_to(eng.id() == EngineId::Virasoro ? 6 : 5)) {
            auto m = eng.shapovalov_matrix(nu);
            for (size_t i = 0; i < m.entries.size(); ++i)
                for (size_t j = 0; j < i; ++j) CHECK(m.entries[i][j] == m.entries[j][i]);
        }
    }
}

TEST_CASE("determinants at the smallest depths") {
    auto vir = AlgebraEngine::virasoro();
    MultiPoly h = hc_var(vir, "h");
    CHECK(vir.shapovalov_det(depth_x2(2)).equals_up_to_scalar(h));

    // Level 2: zero set {h_{1,1}, h_{1,2}, h_{2,1}} at c = c(k0), each simple.
    MultiPoly d2 = vir.shapovalov_det(depth_x2(4));
    CHECK(d2.degree_in("h") == 3);
    for (const Rat& root : {rat(0), kH12, kH21})
        CHECK(d2.eval({{"h", root}, {"c", kC0}}) == 0);
    CHECK(d2.eval({{"h", rat(5)}, {"c", kC0}}) != 0);

    auto ns = AlgebraEngine::neveu_schwarz();
    CHECK(ns.shapovalov_det(depth_x2(1)).equals_up_to_scalar(hc_var(ns, "h")));

    auto aff = AlgebraEngine::affine_sl2();
    CHECK(aff.shapovalov_det({1, 0}).equals_up_to_scalar(hc_var(aff, "a")));
}

TEST_CASE("maximal submodule dims") {
    auto vir = AlgebraEngine::virasoro();

    // Generic weight: irreducible up to level 4.
    auto generic = vir.maximal_submodule_dims({{"h", rat(5)}, {"c", kC0}}, 8);
    for (const auto& [nu, corank] : generic.table) CHECK(corank == 0);

    // h = h_{1,1} = 0: singular vector L_{-1} v, corank 1 at levels 1 and 2.
    auto border = vir.maximal_submodule_dims({{"h", rat(0)}, {"c", kC0}}, 4);
    CHECK(border.table.at(depth_x2(2)) == 1);
    CHECK(border.table.at(depth_x2(4)) == 1);

    // Affine sl2, dominant integral level 1, x = 0: singular vectors f v at
    // depth alpha and e_{-1}^2 v at depth 2(delta - alpha).
    auto aff = AlgebraEngine::affine_sl2();
    auto dims = aff.maximal_submodule_dims({{"a", rat(0)}, {"K", rat(1)}}, 4);
    CHECK(dims.table.at({1, 0}) == 1);
    CHECK(dims.table.at({-2, 2}) == 1);
    CHECK(dims.table.at({-1, 1}) == 0);
}

TEST_CASE("jantzen layer dims") {
    auto vir = AlgebraEngine::virasoro();
    Assignment lam{{"h", kH12}, {"c", kC0}};
    Assignment mu_h{{"h", rat(1)}, {"c", rat(0)}};
    Assignment zero{{"h", rat(0)}, {"c", rat(0)}};

    // Invertible matrix: no layers.
    CHECK(vir.jantzen_layer_dims({{"h", rat(5)}, {"c", kC0}}, mu_h, zero, depth_x2(4))
              .empty());

    // Transverse direction: single layer of dimension 1 at level 2.
    CHECK(vir.jantzen_layer_dims(lam, mu_h, zero, depth_x2(4)) == std::vector<long>{1});

    // Tangent direction along the reducibility curve through (h_{1,2}, c(k0)):
    // mu = (dh12/dk, dc/dk) at k0 = -3/5; the layer persists to the second
    // step once a generic second-order term is added.
    Assignment tangent{{"h", rat(-75, 196)}, {"c", rat(-144, 49)}};
    Assignment mu2{{"h", rat(1)}, {"c", rat(0)}};
    CHECK(vir.jantzen_layer_dims(lam, tangent, mu2, depth_x2(4)) ==
          std::vector<long>{1, 1});

    // Degenerate deformation rejected.
    CHECK_THROWS_AS(vir.jantzen_layer_dims(lam, zero, zero, depth_x2(4)),
                    std::domain_error);
}

TEST_CASE("sum formula") {
    auto vir = AlgebraEngine::virasoro();
    Assignment mu_h{{"h", rat(1)}, {"c", rat(0)}};
    Assignment zero{{"h", rat(0)}, {"c", rat(0)}};
    for (const Rat& h : {rat(0), kH12, kH21, rat(7, 3)}) {
        for (Depth nu : vir.depths_up_to(8)) {
            auto rep = vir.sum_formula_check({{"h", h}, {"c", kC0}}, mu_h, zero, nu);
            CHECK(rep.equal);
        }
    }

    auto aff = AlgebraEngine::affine_sl2();
    Assignment rho_dir{{"a", rat(1)}, {"K", rat(2)}};  // shift along rho
    Assignment azero{{"a", rat(0)}, {"K", rat(0)}};
    for (Depth nu : aff.depths_up_to(3)) {
        auto rep =
            aff.sum_formula_check({{"a", rat(1)}, {"K", rat(2)}}, rho_dir, azero, nu);
        CHECK(rep.equal);
    }
}

TEST_CASE("jantzen layers weakly decrease") {
    auto vir = AlgebraEngine::virasoro();
    Assignment mu_h{{"h", rat(1)}, {"c", rat(0)}};
    Assignment zero{{"h", rat(0)}, {"c", rat(0)}};
    for (const Rat& h : {rat(0), kH12, kH21}) {
        for (Depth nu : vir.depths_up_to(8)) {
            auto layers = vir.jantzen_layer_dims({{"h", h}, {"c", kC0}}, mu_h, zero, nu);
            for (size_t i = 1; i < layers.size(); ++i) CHECK(layers[i] <= layers[i - 1]);
        }
    }
}

TEST_CASE("selfext jantzen test") {
    auto vir = AlgebraEngine::virasoro();
    Assignment lam{{"h", kH12}, {"c", kC0}};
    Assignment mu_h{{"h", rat(1)}, {"c", rat(0)}};
    Assignment zero{{"h", rat(0)}, {"c", rat(0)}};

    auto res = vir.selfext_jantzen_test(lam, mu_h, zero, 8);
    REQUIRE(std::holds_alternative<NotInImage>(res));
    CHECK(std::get<NotInImage>(res).witness == depth_x2(4));

    // Generic irreducible weight: every direction stays consistent.
    auto res2 = vir.selfext_jantzen_test({{"h", rat(5)}, {"c", kC0}}, mu_h, zero, 8);
    CHECK(std::holds_alternative<ConsistentUpTo>(res2));

    // Tangent direction with a generic second-order correction: consistent.
    Assignment tangent{{"h", rat(-75, 196)}, {"c", rat(-144, 49)}};
    auto res3 = vir.selfext_jantzen_test(lam, tangent, {{"h", rat(1)}, {"c", rat(0)}}, 8);
    CHECK(std::holds_alternative<ConsistentUpTo>(res3));

    // Affine sl2, lambda_{1,1} at p=3, q=1 (k=1, x=0), direction dual to the
    // finite coroot: first reducible depth is alpha.
    auto aff = AlgebraEngine::affine_sl2();
    auto res4 = aff.selfext_jantzen_test({{"a", rat(0)}, {"K", rat(1)}},
                                         {{"a", rat(1)}, {"K", rat(0)}},
                                         {{"a", rat(0)}, {"K", rat(0)}}, 2);
    REQUIRE(std::holds_alternative<NotInImage>(res4));
    CHECK(std::get<NotInImage>(res4).witness == Depth{1, 0});
}
