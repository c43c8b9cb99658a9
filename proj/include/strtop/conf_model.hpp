#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tate.hpp"

namespace strtop {

// U_A = A ⊕ A·ϑ, |ϑ| = n-1, ϑ² = 0, dϑ = e.  Basis: A, then a·ϑ.
template <Field F>
struct UAAlgebra {
    DgAlgebra<F> algebra;
    int base_dim = 0;
    int theta(int a) const { return base_dim + a; }
    bool is_theta(int i) const { return i >= base_dim; }
};

// F_A = A⊗A ⊕ (A⊗1)·ω, |ω| = n-1, ω² = 0, dω = Δ(1). Basis: pairs (a,b) at a*N+b, then (a⊗1)ω.
template <Field F>
struct FAAlgebra {
    DgAlgebra<F> algebra;
    int base_dim = 0;
    int pair(int a, int b) const { return a * base_dim + b; }
    int omega(int a) const { return base_dim * base_dim + a; }
    bool is_omega(int i) const { return i >= base_dim * base_dim; }
};

namespace detail {

template <Field F>
void require_commutative(const FrobeniusAlgebra<F>& A) {
    if (!A.algebra().commutative()) throw PreconditionError("configuration models need a commutative algebra");
}

inline std::string with_symbol(const std::string& a, const std::string& sym) { return a == "1" ? sym : a + "*" + sym; }

}  // namespace detail

template <Field F>
UAAlgebra<F> build_UA(const FrobeniusAlgebra<F>& A) {
    using K = typename F::value_type;
    detail::require_commutative(A);
    const auto& alg = A.algebra();
    const int N = alg.dim(), n = A.dimension();
    UAAlgebra<F> U;
    U.base_dim = N;
    GradedSpace s;
    for (int a = 0; a < N; ++a) s.push(alg.label(a), alg.degree(a));
    for (int a = 0; a < N; ++a) s.push(detail::with_symbol(alg.label(a), "theta"), alg.degree(a) + n - 1);
    const int M = 2 * N;
    std::vector<Vec<K>> mul(M * M), d(M);
    auto shift = [&](const Vec<K>& v) {
        Vec<K> r;
        for (const auto& [i, c] : v) r.add(U.theta(i), c);
        return r;
    };
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            mul[a * M + b] = alg.mul(a, b);
            mul[a * M + U.theta(b)] = shift(alg.mul(a, b));
            mul[U.theta(a) * M + b] =
                shift(alg.mul(a, b)).scaled(alg.sign(static_cast<long long>(alg.degree(b)) * (n - 1)));
        }
    Vec<K> e = euler_class(A);
    for (int a = 0; a < N; ++a) {
        d[a] = alg.d(a);
        d[U.theta(a)] = shift(alg.d(a));
        d[U.theta(a)].add(alg.mul(alg.basis(a), e), alg.sign(alg.degree(a)));
    }
    U.algebra = DgAlgebra<F>(alg.field(), s, alg.unit(), std::move(mul), std::move(d));
    return U;
}

template <Field F>
FAAlgebra<F> build_FA(const FrobeniusAlgebra<F>& A) {
    using K = typename F::value_type;
    detail::require_commutative(A);
    const auto& alg = A.algebra();
    const int N = alg.dim(), n = A.dimension();
    FAAlgebra<F> FA;
    FA.base_dim = N;
    DgAlgebra<F> T = tensor_dga(alg, alg);
    GradedSpace s = T.space();
    for (int a = 0; a < N; ++a) s.push(detail::with_symbol(tensor_label(alg.label(a), "1"), "omega"), alg.degree(a) + n - 1);
    const int M = N * N + N;
    std::vector<Vec<K>> mul(static_cast<std::size_t>(M) * M), d(M);

    // (x⊗y)ω -> (xy⊗1)ω
    auto to_omega = [&](const Vec<K>& tensor_part) {
        Vec<K> r;
        for (const auto& [p, c] : tensor_part)
            for (const auto& [x, cx] : alg.mul(p / N, p % N)) r.add(FA.omega(x), c * cx);
        return r;
    };
    for (int i = 0; i < N * N; ++i)
        for (int j = 0; j < N * N; ++j) mul[static_cast<std::size_t>(i) * M + j] = T.mul(i, j);
    for (int p = 0; p < N * N; ++p) {
        int a = p / N, b = p % N;
        for (int c = 0; c < N; ++c) {
            // (a⊗b)·(c⊗1)ω and (c⊗1)ω·(a⊗b)
            mul[static_cast<std::size_t>(p) * M + FA.omega(c)] = to_omega(T.mul(p, FA.pair(c, alg.unit())));
            auto sg = alg.sign(static_cast<long long>(alg.degree(a) + alg.degree(b)) * (n - 1));
            mul[static_cast<std::size_t>(FA.omega(c)) * M + p] = to_omega(T.mul(FA.pair(c, alg.unit()), p)).scaled(sg);
        }
    }
    // dω = Δ(1), written in the pair basis
    Vec<K> delta1;
    for (const auto& [ef, c] : A.diagonal()) delta1.add(FA.pair(ef.first, ef.second), c);
    for (int p = 0; p < N * N; ++p) d[p] = T.d(p);
    for (int a = 0; a < N; ++a) {
        Vec<K> da;
        for (const auto& [x, c] : alg.d(a)) da.add(FA.omega(x), c);
        d[FA.omega(a)] = da;
        d[FA.omega(a)].add(T.mul(T.basis(FA.pair(a, alg.unit())), delta1), alg.sign(alg.degree(a)));
    }
    FA.algebra = DgAlgebra<F>(alg.field(), s, T.unit(), std::move(mul), std::move(d));
    return FA;
}

// the dg algebra map F_A -> U_A: a⊗b ↦ ab, ω ↦ ϑ
template <Field F>
GradedMap<F> fa_to_ua(const FAAlgebra<F>& FA, const UAAlgebra<F>& U) {
    using K = typename F::value_type;
    const int N = FA.base_dim;
    const auto& alg = U.algebra;
    std::vector<Vec<K>> cols(FA.algebra.dim());
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) cols[FA.pair(a, b)] = alg.mul(a, b);
    for (int a = 0; a < N; ++a) cols[FA.omega(a)] = Vec<K>(U.theta(a), alg.one());
    return GradedMap<F>(FA.algebra.space(), U.algebra.space(), 0, std::move(cols));
}

// checks f(dx) = d f(x) and f(xy) = f(x) f(y) on basis elements and pairs, f(1) = 1
template <Field F>
Report check_dga_map(const GradedMap<F>& f, const DgAlgebra<F>& S, const DgAlgebra<F>& T) {
    Report rep;
    if (!(f(S.unit_elem()) == T.unit_elem())) rep.push_back({"unit", {S.label(S.unit())}, "f(1) != 1"});
    for (int i = 0; i < S.dim(); ++i)
        if (!(f(S.d(S.basis(i))) == T.d(f(S.basis(i))))) rep.push_back({"chain map", {S.label(i)}, "f(dx) != d f(x)"});
    for (int i = 0; i < S.dim(); ++i)
        for (int j = 0; j < S.dim(); ++j)
            if (!(f(S.mul(i, j)) == T.mul(f(S.basis(i)), f(S.basis(j)))))
                rep.push_back({"multiplicative", {S.label(i), S.label(j)}, "f(xy) != f(x)f(y)"});
    return rep;
}

// element (x, s·y) of cone(P -> Q): x ∈ P^k, y ∈ Q^{k-1}
template <class K>
struct ConeElement {
    Vec<K> source;
    Vec<K> target;
    bool operator==(const ConeElement&) const = default;
    bool empty() const { return source.empty() && target.empty(); }
    ConeElement operator-(const ConeElement& o) const { return {source - o.source, target - o.target}; }
    ConeElement operator+(const ConeElement& o) const { return {source + o.source, target + o.target}; }
};

// D(x, y) = (dx, f(x) − dy)
template <Field F>
ConeElement<typename F::value_type> cone_d(const GradedMap<F>& f, const DgAlgebra<F>& P, const DgAlgebra<F>& Q,
                                           const ConeElement<typename F::value_type>& c) {
    ConeElement<typename F::value_type> out{P.d(c.source), f(c.source)};
    out.target -= Q.d(c.target);
    return out;
}

// inclusion A -> U_A and A⊗A -> F_A
template <Field F>
GradedMap<F> ua_inclusion(const FrobeniusAlgebra<F>& A, const UAAlgebra<F>& U) {
    std::vector<Vec<typename F::value_type>> cols;
    for (int a = 0; a < A.dim(); ++a) cols.push_back(U.algebra.basis(a));
    return GradedMap<F>(A.algebra().space(), U.algebra.space(), 0, std::move(cols));
}

template <Field F>
GradedMap<F> fa_inclusion(const FrobeniusAlgebra<F>& A, const FAAlgebra<F>& FA) {
    DgAlgebra<F> T = tensor_dga(A.algebra(), A.algebra());
    std::vector<Vec<typename F::value_type>> cols;
    for (int p = 0; p < T.dim(); ++p) cols.push_back(FA.algebra.basis(p));
    return GradedMap<F>(T.space(), FA.algebra.space(), 0, std::move(cols));
}

// the pieces of the two cones, built once
template <Field F>
struct ConfModels {
    FrobeniusAlgebra<F> A;
    DgAlgebra<F> AA;  // A⊗A
    UAAlgebra<F> U;
    FAAlgebra<F> FA;
    GradedMap<F> to_U;   // A -> U_A
    GradedMap<F> to_FA;  // A⊗A -> F_A
    GradedMap<F> fa_ua;  // F_A -> U_A

    explicit ConfModels(const FrobeniusAlgebra<F>& a)
        : A(a),
          AA(tensor_dga(a.algebra(), a.algebra())),
          U(build_UA(a)),
          FA(build_FA(a)),
          to_U(ua_inclusion(a, U)),
          to_FA(fa_inclusion(a, FA)),
          fa_ua(fa_to_ua(FA, U)) {}

    using K = typename F::value_type;
    using Cone = ConeElement<K>;

    Cone d_U(const Cone& c) const { return cone_d(to_U, A.algebra(), U.algebra, c); }
    Cone d_FA(const Cone& c) const { return cone_d(to_FA, AA, FA.algebra, c); }

    // τ = (e, ϑ)
    Cone thom_class() const { return {euler_class(A), U.algebra.basis(U.theta(A.algebra().unit()))}; }

    // split y ∈ U_A into (y₀, z) with y = y₀ + zϑ
    std::pair<Vec<K>, Vec<K>> split(const Vec<K>& y) const {
        Vec<K> y0, z;
        for (const auto& [i, c] : y) {
            if (U.is_theta(i)) z.add(i - U.base_dim, c);
            else y0.add(i, c);
        }
        return {y0, z};
    }

    // (z⊗1)Δ(1) in the A⊗A basis
    Vec<K> left_delta(const Vec<K>& z) const {
        Vec<K> out;
        const int N = A.dim();
        for (const auto& [zi, cz] : z) {
            TensorElem<K> t = A.tensor_mul(A.left(A.algebra().basis(zi)), A.diagonal());
            for (const auto& [ab, c] : t) out.add(ab.first * N + ab.second, cz * c);
        }
        return out;
    }

    // φ(x, y + zϑ) = ((−1)^{|z|}(z⊗1)Δ(1), (z⊗1)ω)
    Cone phi(const Cone& c) const {
        const auto& alg = A.algebra();
        auto [y0, z] = split(c.target);
        Cone out;
        for (const auto& [zi, cz] : z) {
            Vec<K> one(zi, cz);
            out.source.add(left_delta(one), alg.sign(alg.degree(zi)));
            out.target.add(FA.omega(zi), cz);
        }
        return out;
    }

    // m̂ = (m, F_A -> U_A)
    Cone mhat(const Cone& c) const {
        Vec<K> x;
        const int N = A.dim();
        for (const auto& [p, cp] : c.source) x.add(A.algebra().mul(p / N, p % N), cp);
        return {x, fa_ua(c.target)};
    }

    // h(x, y + zϑ) = (y, 0)
    Cone homotopy_h(const Cone& c) const {
        auto [y0, z] = split(c.target);
        return {y0, {}};
    }

    // A⊗A acts on cone(A -> U_A) through m, and on cone(A⊗A -> F_A) directly: r·(x,y) = (rx, (−1)^{|r|} ry)
    Cone act_U(int a, int b, const Cone& c) const {
        const auto& alg = A.algebra();
        Vec<K> r = alg.mul(a, b);
        auto sg = alg.sign(alg.degree(a) + alg.degree(b));
        return {alg.mul(r, c.source), U.algebra.mul(to_U(r), c.target).scaled(sg)};
    }
    Cone act_FA(int a, int b, const Cone& c) const {
        const auto& alg = A.algebra();
        int p = a * A.dim() + b;
        auto sg = alg.sign(alg.degree(a) + alg.degree(b));
        return {AA.mul(AA.basis(p), c.source), FA.algebra.mul(FA.algebra.basis(p), c.target).scaled(sg)};
    }

    // basis of cone(A -> U_A): (a, 0) and (0, u)
    std::vector<Cone> cone_U_basis() const {
        std::vector<Cone> out;
        for (int a = 0; a < A.dim(); ++a) out.push_back({A.algebra().basis(a), {}});
        for (int u = 0; u < U.algebra.dim(); ++u) out.push_back({{}, U.algebra.basis(u)});
        return out;
    }
    std::vector<Cone> cone_FA_basis() const {
        std::vector<Cone> out;
        for (int p = 0; p < AA.dim(); ++p) out.push_back({AA.basis(p), {}});
        for (int u = 0; u < FA.algebra.dim(); ++u) out.push_back({{}, FA.algebra.basis(u)});
        return out;
    }
};

// cut, cap with τ, apply φ, project to A⊗A, interleave: α = (ā; a), β = (b̄; b) ↦ Σ ±(ā, x̄, b̄; y)
template <Field F>
HochschildElement<typename F::value_type> geometric_coproduct_pipeline(
    const ConfModels<F>& M, const HochschildElement<typename F::value_type>& alpha,
    const HochschildElement<typename F::value_type>& beta) {
    using K = typename F::value_type;
    const auto& A = M.A;
    const auto& alg = A.algebra();
    const int N = A.dim();
    for (const auto* x : {&alpha, &beta})
        for (const auto& [w, c] : *x) {
            detail::check_word(alg, w.bar, w.module);
            if (w.bar.empty()) throw PreconditionError("pipeline inputs must lie in the relative complex (m >= 1)");
        }
    HochschildElement<K> out;
    for (const auto& [wa, ca] : alpha)
        for (const auto& [wb, cb] : beta) {
            const long long sb = shifted_degree(alg, wb.bar);
            // cut: (ā) ⊗ (b̄) ⊗ a_{p+1} b_{q+1}
            K cut_sign = alg.sign(alg.degree(wa.module) * sb);
            Vec<K> z = alg.mul(wa.module, wb.module);
            for (const auto& [zi, cz] : z) {
                // z·τ = (z e, (−1)^{|z|} zϑ)
                typename ConfModels<F>::Cone zt{alg.mul(alg.basis(zi), euler_class(A)),
                                                M.U.algebra.mul(M.U.algebra.basis(zi), M.thom_class().target)
                                                    .scaled(alg.sign(alg.degree(zi)))};
                auto c = M.phi(zt);
                // project the cone onto A⊗A and interleave
                for (const auto& [p, cp] : c.source) {
                    int x = p / N, y = p % N;
                    if (x == alg.unit()) continue;
                    std::vector<int> w = wa.bar;
                    w.push_back(x);
                    w.insert(w.end(), wb.bar.begin(), wb.bar.end());
                    K s = alg.sign(static_cast<long long>(alg.degree(x)) * sb);
                    out.add({w, y}, s * cut_sign * ca * cb * cz * cp);
                }
            }
        }
    return out;
}

// sign of pipeline/∗ per output word, grouped by stratum
struct PipelineSignReport {
    // (p, q, |α|, |β|)
    std::map<std::array<int, 4>, std::set<int>> coarse;
    // (p, q, |α|, |β|, |a_{p+1}|, |b_{q+1}|, |y|)
    std::map<std::array<int, 7>, std::set<int>> fine;
    long long pairs = 0, words = 0, mismatches = 0;  // mismatch: word missing on one side or ratio not ±1

    static bool constant(const auto& m) {
        for (const auto& [k, v] : m)
            if (v.size() > 1) return false;
        return true;
    }
    bool coarse_constant() const { return constant(coarse); }
    bool fine_constant() const { return constant(fine); }
};

template <Field F>
PipelineSignReport pipeline_sign_report(const ConfModels<F>& M,
                                        const std::vector<HochschildElement<typename F::value_type>>& words) {
    const auto& alg = M.A.algebra();
    PipelineSignReport rep;
    for (const auto& a : words)
        for (const auto& b : words) {
            if (a.size() != 1 || b.size() != 1) throw PreconditionError("sign report takes single words");
            const auto& wa = a.begin()->first;
            const auto& wb = b.begin()->first;
            auto P = geometric_coproduct_pipeline(M, a, b);
            auto S = gh_star(M.A, b, a);
            ++rep.pairs;
            if (P.size() != S.size()) ++rep.mismatches;
            int p = static_cast<int>(wa.bar.size()), q = static_cast<int>(wb.bar.size());
            int da = chain_degree(alg, wa), db = chain_degree(alg, wb);
            for (const auto& [w, c] : P) {
                ++rep.words;
                auto s = S.coeff(w);
                int sign;
                if (s == c) sign = 1;
                else if (s == -c) sign = -1;
                else {
                    ++rep.mismatches;
                    continue;
                }
                rep.coarse[{p, q, da, db}].insert(sign);
                rep.fine[{p, q, da, db, alg.degree(wa.module), alg.degree(wb.module), alg.degree(w.module)}].insert(sign);
            }
        }
    return rep;
}

}  // namespace strtop
