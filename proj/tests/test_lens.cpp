#include <catch_amalgamated.hpp>

#include "strtop/lens.hpp"

using namespace strtop;

namespace {

LensH1Class beta(int p, std::initializer_list<std::tuple<int, int, int>> terms) {
    LensH1Class x(p);
    for (const auto& [k, kp, c] : terms) x.add(k, kp, c);
    return x;
}

}  // namespace

TEST_CASE("lens space parameters", "[lens]") {
    REQUIRE(LensSpace(7, 9).q == 2);
    REQUIRE(LensSpace(7, 2).q_inverse() == 4);
    REQUIRE_THROWS_AS(LensSpace(1, 1), Error);
    REQUIRE_THROWS_AS(LensSpace(6, 3), Error);
    REQUIRE_THROWS_AS(LensSpace(7, 0), Error);
}

TEST_CASE("rho products sum the indices", "[lens]") {
    REQUIRE(rho_product(RhoClass(1, 0), RhoClass(0, 1)) == RhoClass(1, 1));
    REQUIRE(rho_product(RhoClass(0, 0), RhoClass(3, 2, 5)) == RhoClass(3, 2, 5));
    REQUIRE(rho_product(rho_product(RhoClass(1, 0), RhoClass(1, 0)), RhoClass(1, 0)) == RhoClass(3, 0));
    RhoClass x(1, 2, 3), y(0, 1, -1);
    x.add(4, 0, 2);
    y.add(2, 2, 1);
    REQUIRE(rho_product(x, y) == rho_product(y, x));
    REQUIRE(rho_product(rho_product(x, y), x) == rho_product(x, rho_product(y, x)));
    REQUIRE_THROWS_AS(RhoClass(-1, 0), Error);
}

TEST_CASE("H1 classes reduce mod p and drop zero indices", "[lens]") {
    LensH1Class x(7);
    x.add(8, 3, 9);
    REQUIRE(x.coeff(1, 3) == 2);
    x.add(7, 1, 1);
    x.add(2, 14, 1);
    REQUIRE(x.terms().size() == 1);
    x.add(1, 3, 5);
    REQUIRE(x.empty());
    REQUIRE(beta(7, {{1, 1, 5}, {4, 5, 4}}).str() == "5b[1,1] + 4b[4,5]");
}

TEST_CASE("coproduct on the paper's lens spaces", "[lens]") {
    REQUIRE(rho_coproduct(LensSpace(7, 1), 1, 0).empty());
    REQUIRE(rho_coproduct(LensSpace(7, 2), 2, 0) == beta(7, {{1, 1, 5}, {4, 5, 4}, {5, 4, 4}}));
    REQUIRE(rho_coproduct(LensSpace(7, 2), 2, 1) ==
            beta(7, {{1, 1, 2}, {4, 5, 1}, {5, 4, 1}, {3, 6, 4}, {6, 3, 4}}));
}

TEST_CASE("coproduct of rho_{1,0} has the closed form", "[lens]") {
    for (int p = 2; p <= 23; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LensSpace L(p, q);
            const int qi = L.q_inverse();
            LensH1Class expected(p);
            for (int t = 1; t < q; ++t) expected.add(static_cast<long long>(t) * qi, 1 - static_cast<long long>(t) * qi, qi);
            REQUIRE(rho_coproduct(L, 1, 0) == expected);
        }
}

TEST_CASE("coproduct never contains zero indices", "[lens]") {
    for (int p : {5, 7, 12})
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int l = 0; l < 2 * p; ++l)
                for (int m = 0; m < 3; ++m) {
                    auto x = rho_coproduct(LensSpace(p, q), l, m);
                    for (const auto& [k, c] : x.terms()) {
                        REQUIRE(k.first % p != 0);
                        REQUIRE(k.second % p != 0);
                        REQUIRE(c != 0);
                    }
                }
        }
    REQUIRE_THROWS_AS(rho_coproduct(LensSpace(7, 2), -1, 0), Error);
}

TEST_CASE("beta prime conversion", "[lens]") {
    REQUIRE(beta_prime_convert(LensSpace(7, 1), 3, 5) == beta(7, {{3, 5, 1}}));
    REQUIRE(beta_prime_convert(LensSpace(7, 2), 1, 1) == beta(7, {{4, 4, 4}}));
    // β_{k,k'} = qβ'_{qk,qk'} undoes the conversion
    for (int q = 1; q < 7; ++q) {
        LensSpace L(7, q);
        for (int k = 1; k < 7; ++k)
            for (int kp = 1; kp < 7; ++kp) {
                LensH1Class back(7);
                auto conv = beta_prime_convert(L, static_cast<long long>(q) * k, static_cast<long long>(q) * kp);
                for (const auto& [key, c] : conv.terms())
                    back.add(key.first, key.second, static_cast<long long>(c) * q);
                REQUIRE(back == beta(7, {{k, kp, 1}}));
            }
    }
}

TEST_CASE("transfer", "[lens]") {
    auto x = rho_coproduct(LensSpace(7, 2), 2, 1);
    REQUIRE(transfer(1, x) == x);
    REQUIRE(transfer(2, beta(7, {{1, 1, 1}})) == beta(7, {{2, 2, 2}}));
    for (int l = 1; l < 7; ++l)
        for (int lp = 1; lp < 7; ++lp) REQUIRE(transfer(l, transfer(lp, x)) == transfer(l * lp, x));
    // inverse up to the coefficient product
    LensH1Class scaled(7);
    scaled.add(x, 2 * 4);
    REQUIRE(transfer(4, transfer(2, x)) == scaled);
    REQUIRE_THROWS_AS(transfer(3, LensH1Class(6)), Error);
    REQUIRE(transfer(3, LensH1Class(7)).empty());
}

TEST_CASE("homotopy equivalence degrees", "[lens]") {
    REQUIRE(homotopy_equiv_degrees(7, 1, 2) == std::vector<int>{2, 5});
    REQUIRE(homotopy_equiv_degrees(5, 1, 2).empty());
    for (int p : {5, 7, 11})
        for (int q = 1; q < p; ++q) {
            auto d = homotopy_equiv_degrees(p, q, q);
            REQUIRE(d.front() == 1);
            REQUIRE(d.back() == p - 1);
        }
    // −1 is a square mod 5 but not mod 7
    REQUIRE(homotopy_equiv_degrees(5, 1, 2, -1).empty());
    REQUIRE(homotopy_equiv_degrees(7, 1, 3).empty());
    REQUIRE(homotopy_equiv_degrees(7, 1, 3, -1) == std::vector<int>{3, 4});
}

TEST_CASE("homeomorphism criterion", "[lens]") {
    REQUIRE_FALSE(homeomorphic(7, 1, 2));
    REQUIRE(homeomorphic(7, 2, 4));  // 2·4 ≡ 1
    REQUIRE_FALSE(homeomorphic(7, 1, 3));
    REQUIRE(homeomorphic(7, 3, 5));
    for (int q = 1; q < 11; ++q) REQUIRE(homeomorphic(11, q, q));
    REQUIRE(homeomorphic(5, 1, 4));
    REQUIRE_FALSE(orientation_preserving_homeomorphic(5, 1, 4));
}

TEST_CASE("invariance search", "[lens]") {
    auto r = coproduct_invariance_search(7, 1, 2);
    REQUIRE_FALSE(r.witness);
    REQUIRE_FALSE(r.vacuous);
    auto one = coproduct_invariance_search(7, 1, 2, Degrees::One);
    REQUIRE_FALSE(one.witness);
    REQUIRE(one.degrees_tried == std::vector<int>{2, 5});

    for (int q = 1; q < 7; ++q) {
        auto s = coproduct_invariance_search(7, q, q);
        REQUIRE(s.witness);
        REQUIRE(s.witness->l == 1);
        REQUIRE(s.witness->degree == 1);
    }
    REQUIRE(coproduct_invariance_search(7, 3, 5).witness);

    // (5,1,4) is homeomorphic only through an orientation-reversing map
    auto rev = coproduct_invariance_search(5, 1, 4);
    REQUIRE(rev.witness);
    REQUIRE(rev.witness->degree == -1);
    REQUIRE_FALSE(coproduct_invariance_search(5, 1, 4, Degrees::One).witness);

    auto vac = coproduct_invariance_search(5, 1, 2);
    REQUIRE(vac.vacuous);
    REQUIRE_FALSE(vac.witness);
    auto odd = coproduct_invariance_search(7, 1, 3);
    REQUIRE(odd.degrees_tried == std::vector<int>{-3, -4});
    REQUIRE_FALSE(odd.witness);
}

TEST_CASE("scan over small p", "[lens]") {
    for (int pm : {2, 3, 4}) {
        auto r = thm_lens_scan(pm);
        REQUIRE(r.counterexamples.empty());
        REQUIRE(r.witnesses == r.pairs);
        REQUIRE(r.non_preserving.empty());
    }
    auto r = thm_lens_scan(7);
    REQUIRE(r.counterexamples.empty());
    bool flagged = false;
    for (const auto& e : r.non_preserving) flagged = flagged || (e.p == 7 && e.q1 == 1 && e.q2 == 2);
    REQUIRE(flagged);
    REQUIRE_THROWS_AS(thm_lens_scan(1), Error);
}

TEST_CASE("scan is independent of the thread count", "[lens]") {
    auto a = thm_lens_scan(23, 1), b = thm_lens_scan(23, 4);
    REQUIRE(a.pairs == b.pairs);
    REQUIRE(a.witnesses == b.witnesses);
    REQUIRE(a.vacuous == b.vacuous);
    REQUIRE(a.counterexamples.size() == b.counterexamples.size());
    REQUIRE(a.non_preserving.size() == b.non_preserving.size());
    for (std::size_t i = 0; i < a.non_preserving.size(); ++i) {
        REQUIRE(a.non_preserving[i].p == b.non_preserving[i].p);
        REQUIRE(a.non_preserving[i].q1 == b.non_preserving[i].q1);
        REQUIRE(a.non_preserving[i].q2 == b.non_preserving[i].q2);
    }
}
