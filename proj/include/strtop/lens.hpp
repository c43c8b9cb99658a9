#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace strtop {

struct LensSpace {
    int p = 2;
    int q = 1;

    LensSpace(int p_, int q_) : p(p_), q(q_) {
        if (p < 2) throw Error("lens space needs p >= 2");
        q = ((q % p) + p) % p;
        if (q == 0 || std::gcd(p, q) != 1) throw Error("lens space needs q coprime to p");
    }
    int q_inverse() const { return inverse_mod(q, p); }

    static int inverse_mod(int a, int p) {
        a = ((a % p) + p) % p;
        for (int x = 1; x < p; ++x)
            if (static_cast<long long>(a) * x % p == 1) return x;
        throw Error(std::to_string(a) + " is not a unit mod " + std::to_string(p));
    }
};

// formal ℤ-combination of ρ_{ℓ,m}
class RhoClass {
public:
    using Key = std::pair<int, int>;
    RhoClass() = default;
    RhoClass(int l, int m, long long c = 1) {
        if (l < 0 || m < 0) throw Error("rho indices must be non-negative");
        add(l, m, c);
    }
    void add(int l, int m, long long c) {
        auto& v = terms_[{l, m}];
        v += c;
        if (v == 0) terms_.erase({l, m});
    }
    const std::map<Key, long long>& terms() const { return terms_; }
    bool operator==(const RhoClass&) const = default;

private:
    std::map<Key, long long> terms_;
};

RhoClass rho_product(const RhoClass& x, const RhoClass& y);

// Σ c·β_{k,k'} with k, k' ∈ 1..p-1 and c ∈ ℤ/p
class LensH1Class {
public:
    using Key = std::pair<int, int>;
    explicit LensH1Class(int p = 2) : p_(p) {}

    int p() const { return p_; }
    // symbols with an index ≡ 0 vanish
    void add(long long k, long long kp, long long c) {
        int a = reduce(k), b = reduce(kp);
        if (a == 0 || b == 0) return;
        int v = (coeff(a, b) + reduce(c)) % p_;
        if (v == 0) terms_.erase({a, b});
        else terms_[{a, b}] = v;
    }
    void add(const LensH1Class& o, long long c = 1) {
        check(o);
        for (const auto& [k, v] : o.terms_) add(k.first, k.second, c * v);
    }
    int coeff(int k, int kp) const {
        auto it = terms_.find({reduce(k), reduce(kp)});
        return it == terms_.end() ? 0 : it->second;
    }
    const std::map<Key, int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    bool operator==(const LensH1Class& o) const { return p_ == o.p_ && terms_ == o.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, v] : terms_) {
            if (!s.empty()) s += " + ";
            if (v != 1) s += std::to_string(v);
            s += "b[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
        }
        return s;
    }

private:
    int reduce(long long x) const { return static_cast<int>(((x % p_) + p_) % p_); }
    void check(const LensH1Class& o) const {
        if (o.p_ != p_) throw Error("lens classes over different p");
    }
    int p_;
    std::map<Key, int> terms_;
};

// β'_{a,b} = q'·β_{q'a, q'b}
LensH1Class beta_prime_convert(const LensSpace& L, long long a, long long b);

// ∨ρ_{ℓ,m} = Σ_{0<t<ℓ} β_{t,ℓ−t} + Σ_{0<t<qℓ+pm} β'_{t,qℓ+pm−t}, dropping terms with an index ≡ 0
LensH1Class rho_coproduct(const LensSpace& L, int l, int m);

// β_{k,k'} ↦ ℓ·β̄_{ℓk,ℓk'}
LensH1Class transfer(int l, const LensH1Class& x);

// ℓ ∈ 1..p-1 with ℓ²q₂ ≡ sign·q₁ (sign = +1: degree-1 equivalences, −1: degree −1)
std::vector<int> homotopy_equiv_degrees(int p, int q1, int q2, int sign = 1);

// q₁q₂ ≡ ±1 or q₁ ≡ ±q₂
bool homeomorphic(int p, int q1, int q2);
// q₁q₂ ≡ 1 or q₁ ≡ q₂
bool orientation_preserving_homeomorphic(int p, int q1, int q2);

struct LensWitness {
    int degree = 1;  // ±1
    int l = 0;
    int a = 0;
    bool operator==(const LensWitness&) const = default;
};

enum class Degrees { One, Both };

struct InvarianceResult {
    bool vacuous = false;  // no homotopy equivalence of the analyzed form
    std::optional<LensWitness> witness;
    std::vector<int> degrees_tried;
};

// f(ρ_{0,1}) = aρ_{ℓ,0} + (1−a)ρ_{ℓ,1}: look for ℓ, a with ∨((1−a)ρ_{ℓ,0} + aρ_{ℓ,1}) = transfer(ℓ, ∨ρ_{1,0})
InvarianceResult coproduct_invariance_search(int p, int q1, int q2, Degrees deg = Degrees::Both);

struct LensScanEntry {
    int p, q1, q2;
    std::optional<LensWitness> witness;
    bool homeomorphic;
};

struct LensScanReport {
    int p_max = 0;
    long long pairs = 0;
    long long witnesses = 0;
    long long vacuous = 0;
    std::vector<LensScanEntry> counterexamples;  // witness exists ≠ homeomorphic
    std::vector<LensScanEntry> non_preserving;   // no witness although a homotopy equivalence exists
    // degree-1-only search against the orientation-preserving criterion
    long long degree_one_counterexamples = 0;
    long long orientation_reversal_only = 0;  // homeomorphic only through an orientation-reversing map
};

// every p ≤ p_max and coprime (q₁,q₂), q₂ = 1 swapped to q₁
LensScanReport thm_lens_scan(int p_max, unsigned threads = 1);

}  // namespace strtop
