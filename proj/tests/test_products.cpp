#include <catch_amalgamated.hpp>

#include "suite.hpp"

using namespace strtop;
using namespace testing_support;

TEST_CASE("cup unit", "[cup]") {
    Rationals Q;
    auto F = cp_model(Q, 2);
    const auto& A = F.algebra();
    std::mt19937_64 rng(default_seed);
    for (int i = 0; i < 50; ++i) {
        auto f = random_cochain(A, rng, std::uniform_int_distribution<int>(-6, 4)(rng), 3);
        REQUIRE(cup(A, f, unit_cochain(A)) == f);
        REQUIRE(cup(A, unit_cochain(A), f) == f);
    }
}

TEST_CASE("cup is associative on arity-1 cochains over CP2", "[cup]") {
    Rationals Q;
    auto F = cp_model(Q, 2);
    const auto& A = F.algebra();
    std::vector<CochainKey> ones;
    for (int k = -8; k <= 8; ++k)
        for (const auto& c : cochain_basis(A, k, 1))
            if (c.inputs.size() == 1) ones.push_back(c);
    REQUIRE(ones.size() == 6);
    std::mt19937_64 rng(default_seed);
    auto rnd = [&] {
        CochainTensor<Rational> f;
        for (int i = 0; i < 3; ++i) f.add(pick(rng, ones), Q.from_int(std::uniform_int_distribution<int>(-4, 4)(rng)));
        return f;
    };
    for (int i = 0; i < 100; ++i) {
        auto f = rnd(), g = rnd(), h = rnd();
        REQUIRE(cup(A, cup(A, f, g), h) == cup(A, f, cup(A, g, h)));
    }
}

TEST_CASE("cup suite", "[cup]") {
    SuiteWindow w{3, -8, 8};
    Rationals Q;
    for (const auto& [name, F] : standard_models(Q)) {
        auto t = check_cup(F.algebra(), w);
        INFO(name << ": " << t.first);
        REQUIRE(t.ok());
    }
    auto t = check_cup(s7d(Q).algebra(), w);
    INFO(t.first);
    REQUIRE(t.ok());
}

TEST_CASE("cup refuses to overflow", "[cup]") {
    Rationals Q;
    auto F = sphere_model(Q, 2);
    const auto& A = F.algebra();
    CochainTensor<Rational> f(CochainKey{{A.find("v")}, A.unit()}, 1);
    REQUIRE_THROWS_AS(cup(A, f, f, 1), WindowOverflow);
    REQUIRE(cup(A, f, f, 1, Overflow::Drop).empty());
    REQUIRE(cup(A, f, f, 2).size() == 1);
}

TEST_CASE("star product examples", "[star]") {
    Rationals Q;
    auto F = sphere_model(Q, 3);
    const auto& A = F.algebra();
    int v = A.find("v");
    HochschildElement<Rational> one(ChainWord{{}, A.unit()}, 1);
    REQUIRE(gh_star(F, one, one) == HochschildElement<Rational>(ChainWord{{v}, A.unit()}, -1));

    // b·e ≠ 0 forces e = 1, and then a·f = v² = 0
    HochschildElement<Rational> vv(ChainWord{{v}, v}, 1);
    REQUIRE(gh_star(F, vv, vv).empty());

    REQUIRE_THROWS_AS(gh_star(FrobeniusAlgebra<Rationals>(sphere_model(Q, 3).algebra(), F.pairing_rows(), 0), one, one),
                      PreconditionError);
}

TEST_CASE("star Leibniz rule and its length-zero defect", "[star]") {
    SuiteWindow w{3, -6, 10};
    for (const auto& [name, F] : standard_models(Rationals{})) {
        auto t = check_star_leibniz(F, w);
        INFO(name << ": " << t.first);
        REQUIRE(t.ok());
    }
    auto t = check_star_leibniz(s7d(Rationals{}), w);
    INFO(t.first);
    REQUIRE(t.ok());

    Rationals Q;
    auto F = cp_model(Q, 2);
    const auto& A = F.algebra();
    std::mt19937_64 rng(default_seed);
    HochschildElement<Rational> one(ChainWord{{}, A.unit()}, 1);
    for (int i = 0; i < 40; ++i) {
        auto beta = random_chain(A, rng, std::uniform_int_distribution<int>(0, 8)(rng), 3);
        REQUIRE(leibniz_defect(F, one, beta) == leibniz_correction(F, one, beta));
    }
}

TEST_CASE("gamma", "[tate]") {
    Rationals Q;
    auto S2 = sphere_model(Q, 2);
    auto one = [&](const auto& F) { return F.algebra().basis(F.algebra().unit()); };
    REQUIRE(gamma(S2, one(S2)) == Vec<Rational>(S2.algebra().find("v"), 2));
    REQUIRE(gamma(sphere_model(Q, 3), one(sphere_model(Q, 3))).empty());
    auto CP2 = cp_model(Q, 2);
    REQUIRE(gamma(CP2, one(CP2)) == Vec<Rational>(CP2.algebra().find("x2"), 3));
    REQUIRE(gamma(S2, S2.algebra().basis(S2.algebra().find("v"))).empty());
    for (const auto& [name, F] : standard_models(Q)) REQUIRE(gamma(F, one(F)) == euler_class(F));
    auto D = s7d(Q);
    REQUIRE(gamma(D, one(D)) == euler_class(D));
}

TEST_CASE("Tate pairing examples", "[tate]") {
    Rationals Q;
    auto F = sphere_model(Q, 3);
    const auto& A = F.algebra();
    TateElement<Rational> x{unit_cochain(A), {}}, y{{}, HochschildElement<Rational>(ChainWord{{}, A.find("v")}, 1)};
    REQUIRE(tate_pairing(F, x, y) == Rational(1));
    REQUIRE(tate_pairing(F, y, y).is_zero());
    TateElement<Rational> z{{}, HochschildElement<Rational>(ChainWord{{A.find("v")}, A.unit()}, 1)};
    REQUIRE(tate_pairing(F, y, z).is_zero());
}

TEST_CASE("Tate differential and pairing compatibility", "[tate]") {
    SuiteWindow w{3, -6, 8};
    Rationals Q;
    for (const auto& [name, F] : standard_models(Q)) {
        auto t = check_tate(F, w);
        INFO(name << ": " << t.first);
        REQUIRE(t.ok());
    }
    auto t = check_tate(s7d(Q), w);
    INFO(t.first);
    REQUIRE(t.ok());
    for (const auto& [name, F] : standard_models(prime_field(7))) REQUIRE(check_tate(F, w).ok());
}

TEST_CASE("Hochschild homology of S3 matches the dual cochain side", "[homology]") {
    Rationals Q;
    auto F = sphere_model(Q, 3);
    const auto& A = F.algebra();
    const int L = 6, n = 3;
    auto ch = homology(hochschild_chain_complex(A, L), WindowInfo{L, -2, L - 1});
    auto co = homology(hochschild_cochain_complex(A, L), WindowInfo{L, n - L + 1, n + 2});
    for (int k = -2; k <= L - 1; ++k) {
        INFO("degree " << k);
        REQUIRE(ch.at(k).dim() == co.at(n - k).dim());
    }
    // H*(S³) with d = 0: HH_* is A ⊗ k[v̄] in chain degrees 0, 2, 3, 4, 5, ...
    std::vector<std::size_t> dims;
    for (int k = 0; k <= 5; ++k) dims.push_back(ch.at(k).dim());
    REQUIRE(dims == std::vector<std::size_t>{1, 0, 1, 1, 1, 1});
}

TEST_CASE("homology refuses windows beyond the exact region", "[homology]") {
    Rationals Q;
    auto F = sphere_model(Q, 3);
    REQUIRE_THROWS_AS(homology(hochschild_chain_complex(F.algebra(), 4), WindowInfo{4, 0, 4}), WindowOverflow);
    REQUIRE_THROWS_AS(homology(hochschild_cochain_complex(F.algebra(), 4), WindowInfo{4, -2, 3}), WindowOverflow);
    REQUIRE_THROWS_AS(homology(hochschild_chain_complex(sphere_model(Q, 1).algebra(), 4), WindowInfo{4, 0, 1}),
                      WindowOverflow);
}

TEST_CASE("Tate homology of S3 splits", "[homology]") {
    Rationals Q;
    auto F = sphere_model(Q, 3);
    const auto& A = F.algebra();
    const int L = 6, n = 3;
    auto tate = homology(tate_complex(F, L), WindowInfo{L, -2, 7});
    auto co = homology(hochschild_cochain_complex(A, L), WindowInfo{L, -2, 7});
    auto ch = homology(hochschild_chain_complex(A, L), WindowInfo{L, -2 - n + 1, 7 - n + 1});
    for (int k = -2; k <= 7; ++k) {
        INFO("degree " << k);
        REQUIRE(tate.at(k).dim() == co.at(k).dim() + ch.at(k - n + 1).dim());
    }
}

TEST_CASE("Tate homology of S2 does not split", "[homology]") {
    Rationals Q;
    auto F = sphere_model(Q, 2);
    const int L = 6;
    auto tate = homology(tate_complex(F, L), WindowInfo{L, -2, 6});
    auto co = homology(hochschild_cochain_complex(F.algebra(), L), WindowInfo{L, -2, 6});
    auto ch = homology(hochschild_chain_complex(F.algebra(), L), WindowInfo{L, -3, 5});
    std::size_t total = 0, split = 0;
    for (int k = -2; k <= 6; ++k) {
        total += tate.at(k).dim();
        split += co.at(k).dim() + ch.at(k - 1).dim();
    }
    REQUIRE(total < split);
}

TEST_CASE("Tate product is graded commutative on pure-sector classes", "[homology]") {
    Rationals Q;
    auto r2 = tate_commutativity(sphere_model(Q, 2), 6, -3, 6);
    INFO((r2.failures.empty() ? std::string() : r2.failures.front()));
    REQUIRE(r2.pairs_checked > 0);
    REQUIRE(r2.failures.empty());
    auto r3 = tate_commutativity(sphere_model(Q, 3), 6, -2, 7);
    INFO((r3.failures.empty() ? std::string() : r3.failures.front()));
    REQUIRE(r3.pairs_checked > 0);
    REQUIRE(r3.failures.empty());
}

TEST_CASE("reduced star product is associative on homology", "[homology]") {
    Rationals Q;
    auto F = sphere_model(Q, 3);
    const auto& A = F.algebra();
    const int L = 12, n = 3;
    auto t = homology(hochschild_chain_complex(A, L, true), WindowInfo{L, 0, L - 1});
    std::vector<std::pair<int, HochschildElement<Rational>>> classes;
    for (const auto& [k, h] : t.degrees)
        for (const auto& r : h.representatives) classes.push_back({k, r});
    REQUIRE(classes.size() >= 4);
    int checked = 0;
    for (const auto& [k1, x] : classes)
        for (const auto& [k2, y] : classes)
            for (const auto& [k3, z] : classes) {
                int k = k1 + k2 + k3 + 2 * (n - 1);
                if (!t.has_degree(k)) continue;
                auto diff = gh_star(F, gh_star(F, x, y), z) - gh_star(F, x, gh_star(F, y, z));
                REQUIRE(chain_differential(A, diff).empty());
                REQUIRE(t.is_boundary(k, diff));
                ++checked;
            }
    REQUIRE(checked > 0);
}

TEST_CASE("induced products do not depend on representatives", "[homology]") {
    Rationals Q;
    auto F = cp_model(Q, 2);
    const auto& A = F.algebra();
    const int L = 5;
    auto C = hochschild_cochain_complex(A, L);
    auto t = homology(C, WindowInfo{L, 0, 4});
    std::function<CochainTensor<Rational>(const CochainTensor<Rational>&, const CochainTensor<Rational>&)> op =
        [&](const auto& f, const auto& g) { return cup(A, f, g); };
    auto table = induced_product(t, op);
    REQUIRE_FALSE(table.empty());

    std::mt19937_64 rng(default_seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int perturbed = 0;
    for (const auto& [k1, h1] : t.degrees)
        for (const auto& [k2, h2] : t.degrees) {
            if (!t.has_degree(k1 + k2)) continue;
            for (std::size_t i = 0; i < h1.dim(); ++i)
                for (std::size_t j = 0; j < h2.dim(); ++j) {
                    auto x = h1.representatives[i], y = h2.representatives[j];
                    for (int r = 0; r < 2; ++r) {
                        auto bx = C.basis(k1 - 1), by = C.basis(k2 - 1);
                        if (!bx.empty()) x += cochain_differential(A, CochainTensor<Rational>(pick(rng, bx), Q.from_int(coeff(rng))));
                        if (!by.empty()) y += cochain_differential(A, CochainTensor<Rational>(pick(rng, by), Q.from_int(coeff(rng))));
                    }
                    REQUIRE(t.coordinates(k1 + k2, cup(A, x, y)) == table.at({k1, int(i), k2, int(j)}));
                    ++perturbed;
                }
        }
    REQUIRE(perturbed > 0);
}
