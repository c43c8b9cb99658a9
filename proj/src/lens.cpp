#include "strtop/lens.hpp"

#include <thread>

namespace strtop {

RhoClass rho_product(const RhoClass& x, const RhoClass& y) {
    RhoClass out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add(a.first + b.first, a.second + b.second, ca * cb);
    return out;
}

LensH1Class beta_prime_convert(const LensSpace& L, long long a, long long b) {
    LensH1Class out(L.p);
    long long qi = L.q_inverse();
    out.add(qi * (a % L.p), qi * (b % L.p), qi);
    return out;
}

LensH1Class rho_coproduct(const LensSpace& L, int l, int m) {
    if (l < 0 || m < 0) throw Error("rho indices must be non-negative");
    const int p = L.p;
    LensH1Class out(p);
    for (int t = 1; t < l; ++t)
        if (t % p != 0 && (l - t) % p != 0) out.add(t, l - t, 1);
    const long long top = static_cast<long long>(L.q) * l + static_cast<long long>(p) * m;
    for (long long t = 1; t < top; ++t)
        if (t % p != 0 && (top - t) % p != 0) out.add(beta_prime_convert(L, t, top - t));
    return out;
}

LensH1Class transfer(int l, const LensH1Class& x) {
    const int p = x.p();
    if (std::gcd(((l % p) + p) % p, p) != 1) throw Error("transfer degree must be a unit mod p");
    LensH1Class out(p);
    for (const auto& [k, v] : x.terms())
        out.add(static_cast<long long>(l) * k.first, static_cast<long long>(l) * k.second, static_cast<long long>(l) * v);
    return out;
}

std::vector<int> homotopy_equiv_degrees(int p, int q1, int q2, int sign) {
    std::vector<int> out;
    for (long long l = 1; l < p; ++l)
        if (((l * l * q2 - sign * q1) % p + p) % p == 0) out.push_back(static_cast<int>(l));
    return out;
}

bool homeomorphic(int p, int q1, int q2) {
    auto z = [p](long long x) { return ((x % p) + p) % p == 0; };
    long long a = q1, b = q2;
    return z(a * b - 1) || z(a * b + 1) || z(a - b) || z(a + b);
}

bool orientation_preserving_homeomorphic(int p, int q1, int q2) {
    auto z = [p](long long x) { return ((x % p) + p) % p == 0; };
    long long a = q1, b = q2;
    return z(a * b - 1) || z(a - b);
}

InvarianceResult coproduct_invariance_search(int p, int q1, int q2, Degrees deg) {
    LensSpace L1(p, q1), L2(p, q2);
    InvarianceResult res;
    const LensH1Class src = rho_coproduct(L1, 1, 0);
    std::vector<int> signs{1};
    if (deg == Degrees::Both) signs.push_back(-1);
    for (int s : signs)
        for (int l : homotopy_equiv_degrees(p, L1.q, L2.q, s)) {
            res.degrees_tried.push_back(s * l);
            const LensH1Class target = transfer(l, src);
            const LensH1Class c0 = rho_coproduct(L2, l, 0), c1 = rho_coproduct(L2, l, 1);
            for (int a = 0; a < p; ++a) {
                LensH1Class img(p);
                img.add(c0, 1 - a);
                img.add(c1, a);
                if (img == target) {
                    res.witness = LensWitness{s, l, a};
                    return res;
                }
            }
        }
    res.vacuous = res.degrees_tried.empty();
    return res;
}

namespace {

void scan_prime_range(int p, LensScanReport& rep) {
    for (int q1 = 1; q1 < p; ++q1) {
        if (std::gcd(p, q1) != 1) continue;
        for (int q2 = 1; q2 < p; ++q2) {
            if (std::gcd(p, q2) != 1) continue;
            int a = q1, b = q2;
            if (b == 1) std::swap(a, b);
            ++rep.pairs;
            auto res = coproduct_invariance_search(p, a, b, Degrees::Both);
            bool h = homeomorphic(p, a, b);
            if (res.vacuous) ++rep.vacuous;
            if (res.witness) ++rep.witnesses;
            else if (!res.vacuous) rep.non_preserving.push_back({p, a, b, std::nullopt, h});
            if (res.witness.has_value() != h) rep.counterexamples.push_back({p, a, b, res.witness, h});

            auto one = coproduct_invariance_search(p, a, b, Degrees::One);
            if (one.witness.has_value() != orientation_preserving_homeomorphic(p, a, b))
                ++rep.degree_one_counterexamples;
            if (h && !orientation_preserving_homeomorphic(p, a, b)) ++rep.orientation_reversal_only;
        }
    }
}

}  // namespace

LensScanReport thm_lens_scan(int p_max, unsigned threads) {
    if (p_max < 2) throw Error("scan needs p_max >= 2");
    threads = std::max(1u, threads);
    std::vector<LensScanReport> parts(p_max + 1);
    auto work = [&](unsigned id) {
        // largest p first keeps the threads balanced
        for (int p = p_max - static_cast<int>(id); p >= 2; p -= static_cast<int>(threads)) scan_prime_range(p, parts[p]);
    };
    if (threads == 1) work(0);
    else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i);
        for (auto& t : pool) t.join();
    }
    LensScanReport rep;
    rep.p_max = p_max;
    for (int p = 2; p <= p_max; ++p) {
        const auto& r = parts[p];
        rep.pairs += r.pairs;
        rep.witnesses += r.witnesses;
        rep.vacuous += r.vacuous;
        rep.degree_one_counterexamples += r.degree_one_counterexamples;
        rep.orientation_reversal_only += r.orientation_reversal_only;
        rep.counterexamples.insert(rep.counterexamples.end(), r.counterexamples.begin(), r.counterexamples.end());
        rep.non_preserving.insert(rep.non_preserving.end(), r.non_preserving.begin(), r.non_preserving.end());
    }
    return rep;
}

}  // namespace strtop
