#pragma once

#include <climits>
#include <string>
#include <vector>

#include "hochschild.hpp"

namespace strtop {

// (f ∪ g)(ā₁…ā_{m+n}) = (-1)^{|g| ε_m} f(ā₁…ā_m) g(ā_{m+1}…ā_{m+n})
template <Field F>
CochainTensor<typename F::value_type> cup(const DgAlgebra<F>& A, const CochainTensor<typename F::value_type>& f,
                                          const CochainTensor<typename F::value_type>& g, int L = INT_MAX,
                                          Overflow policy = Overflow::Throw) {
    using K = typename F::value_type;
    CochainTensor<K> out;
    for (const auto& [kf, cf] : f)
        for (const auto& [kg, cg] : g) {
            if (kf.inputs.size() + kg.inputs.size() > static_cast<std::size_t>(L)) {
                if (policy == Overflow::Throw)
                    throw WindowOverflow("cup product arity exceeds L = " + std::to_string(L));
                continue;
            }
            long long e = static_cast<long long>(cochain_degree(A, kg)) * shifted_degree(A, kf.inputs);
            std::vector<int> w = kf.inputs;
            w.insert(w.end(), kg.inputs.begin(), kg.inputs.end());
            for (const auto& [o, c] : A.mul(kf.output, kg.output)) out.add({w, o}, A.sign(e) * cf * cg * c);
        }
    return out;
}

// unit cochain () -> 1
template <Field F>
CochainTensor<typename F::value_type> unit_cochain(const DgAlgebra<F>& A) {
    return CochainTensor<typename F::value_type>(CochainKey{{}, A.unit()}, A.one());
}

namespace detail {

template <Field F>
void require_star(const FrobeniusAlgebra<F>& A) {
    if (!A.algebra().connected()) throw PreconditionError("the Goresky-Hingston product needs a connected algebra");
    if (A.dimension() <= 0) throw PreconditionError("the Goresky-Hingston product needs n > 0");
}

}  // namespace detail

// α∗β = Σ_i (-1)^{η_i} (b̄₁…b̄_q, (b_{q+1}e_i)‾, ā₁…ā_p; a_{p+1}f_i)
template <Field F>
HochschildElement<typename F::value_type> gh_star(const FrobeniusAlgebra<F>& A,
                                                  const HochschildElement<typename F::value_type>& alpha,
                                                  const HochschildElement<typename F::value_type>& beta) {
    using K = typename F::value_type;
    detail::require_star(A);
    const auto& alg = A.algebra();
    const long long n = A.dimension();
    const auto& D = A.diagonal();
    HochschildElement<K> out;
    for (const auto& [wa, ca] : alpha) {
        detail::check_word(alg, wa.bar, wa.module);
        const long long da = chain_degree(alg, wa);
        for (const auto& [wb, cb] : beta) {
            detail::check_word(alg, wb.bar, wb.module);
            const long long db = chain_degree(alg, wb);
            for (const auto& [ef, c] : D) {
                auto [e, f] = ef;
                long long eta = da * alg.degree(f) + alg.degree(wb.module) + (da + n - 1) * (db + n - 1);
                K coef = alg.sign(eta) * ca * cb * c;
                const auto& be = alg.mul(wb.module, e);
                const auto& af = alg.mul(wa.module, f);
                for (const auto& [x, cx] : be) {
                    if (x == alg.unit()) continue;
                    std::vector<int> w = wb.bar;
                    w.push_back(x);
                    w.insert(w.end(), wa.bar.begin(), wa.bar.end());
                    for (const auto& [y, cy] : af) out.add({w, y}, coef * cx * cy);
                }
            }
        }
    }
    return out;
}

// ∂(α∗β) − ∂α∗β − (−1)^{|α|+n−1} α∗∂β, for homogeneous α
template <Field F>
HochschildElement<typename F::value_type> leibniz_defect(const FrobeniusAlgebra<F>& A,
                                                         const HochschildElement<typename F::value_type>& alpha,
                                                         const HochschildElement<typename F::value_type>& beta) {
    const auto& alg = A.algebra();
    auto out = chain_differential(alg, gh_star(A, alpha, beta));
    out -= gh_star(A, chain_differential(alg, alpha), beta);
    for (const auto& [wa, ca] : alpha) {
        HochschildElement<typename F::value_type> a1(wa, ca);
        out.add(gh_star(A, a1, chain_differential(alg, beta)),
                -alg.sign(chain_degree(alg, wa) + A.dimension() - 1));
    }
    return out;
}

// The correction terms carried by length-zero inputs:
//   α = (; a₁):  Σ_i (-1)^{η_i + |β| − 1 − |b_{q+1}|} (b̄₁…b̄_q; b_{q+1} e_i a₁ f_i)
//   β = (; b₁):  Σ_i (-1)^{η_i + |e_i||f_i| + |f_i||α|} (ā₁…ā_p; a_{p+1} f_i b₁ e_i)
template <Field F>
HochschildElement<typename F::value_type> leibniz_correction(const FrobeniusAlgebra<F>& A,
                                                             const HochschildElement<typename F::value_type>& alpha,
                                                             const HochschildElement<typename F::value_type>& beta) {
    using K = typename F::value_type;
    detail::require_star(A);
    const auto& alg = A.algebra();
    const long long n = A.dimension();
    HochschildElement<K> out;
    for (const auto& [wa, ca] : alpha)
        for (const auto& [wb, cb] : beta) {
            const long long da = chain_degree(alg, wa), db = chain_degree(alg, wb);
            for (const auto& [ef, c] : A.diagonal()) {
                auto [e, f] = ef;
                const long long de = alg.degree(e), df = alg.degree(f);
                long long eta = da * df + alg.degree(wb.module) + (da + n - 1) * (db + n - 1);
                if (wa.bar.empty()) {
                    auto v = alg.mul(alg.mul(alg.mul(wb.module, e), alg.basis(wa.module)), alg.basis(f));
                    long long s = eta + db - 1 - alg.degree(wb.module);
                    for (const auto& [y, cy] : v) out.add({wb.bar, y}, alg.sign(s) * ca * cb * c * cy);
                }
                if (wb.bar.empty()) {
                    auto v = alg.mul(alg.mul(alg.mul(wa.module, f), alg.basis(wb.module)), alg.basis(e));
                    long long s = eta + de * df + df * da;
                    for (const auto& [y, cy] : v) out.add({wa.bar, y}, alg.sign(s) * ca * cb * c * cy);
                }
            }
        }
    return out;
}

}  // namespace strtop
