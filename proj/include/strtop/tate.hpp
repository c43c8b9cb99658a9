#pragma once

#include <climits>

#include "products.hpp"

namespace strtop {

// γ(a) = Σ_i (-1)^{|f_i||a|} e_i a f_i
template <Field F>
Vec<typename F::value_type> gamma(const FrobeniusAlgebra<F>& A, const Vec<typename F::value_type>& a) {
    using K = typename F::value_type;
    const auto& alg = A.algebra();
    Vec<K> out;
    for (const auto& [i, ca] : a)
        for (const auto& [ef, c] : A.diagonal()) {
            auto [e, f] = ef;
            K s = alg.sign(static_cast<long long>(alg.degree(f)) * alg.degree(i)) * ca * c;
            out.add(alg.mul(alg.mul(alg.basis(e), alg.basis(i)), alg.basis(f)), s);
        }
    return out;
}

// element of 𝒟^k = C^k ⊕ C_{k-n+1}
template <class K>
struct TateElement {
    CochainTensor<K> cochain;
    HochschildElement<K> chain;

    bool operator==(const TateElement&) const = default;
    bool empty() const { return cochain.empty() && chain.empty(); }
    TateElement& operator+=(const TateElement& o) {
        cochain += o.cochain;
        chain += o.chain;
        return *this;
    }
    TateElement scaled(const K& c) const { return {cochain.scaled(c), chain.scaled(c)}; }
};

// degree in 𝒟 of a chain word
template <Field F>
int tate_degree(const FrobeniusAlgebra<F>& A, const ChainWord& w) {
    return chain_degree(A.algebra(), w) + A.dimension() - 1;
}

// the arity-0 cochain (-1)^{n|a|} γ(a) for every length-0 word (; a) of α
template <Field F>
CochainTensor<typename F::value_type> gamma_tilde(const FrobeniusAlgebra<F>& A,
                                                  const HochschildElement<typename F::value_type>& alpha) {
    CochainTensor<typename F::value_type> out;
    for (const auto& [w, c] : alpha) {
        if (!w.bar.empty()) continue;
        const auto& alg = A.algebra();
        auto sg = alg.sign(static_cast<long long>(A.dimension()) * alg.degree(w.module));
        for (const auto& [o, co] : gamma(A, alg.basis(w.module))) out.add(CochainKey{{}, o}, sg * c * co);
    }
    return out;
}

// δ(f, α) = (δf + γ̃(α), −∂α)
template <Field F>
TateElement<typename F::value_type> tate_differential(const FrobeniusAlgebra<F>& A,
                                                      const TateElement<typename F::value_type>& x,
                                                      int L = INT_MAX, Overflow policy = Overflow::Throw) {
    const auto& alg = A.algebra();
    TateElement<typename F::value_type> out;
    out.cochain = cochain_differential(alg, x.cochain, L, policy);
    out.cochain += gamma_tilde(A, x.chain);
    out.chain = chain_differential(alg, x.chain).scaled(-alg.one());
    return out;
}

// graded-symmetric pairing: <x,y> = <f_x, α_y> + (-1)^{n-1} <f_y, α_x>
template <Field F>
typename F::value_type tate_pairing(const FrobeniusAlgebra<F>& A, const TateElement<typename F::value_type>& x,
                                    const TateElement<typename F::value_type>& y) {
    return duality_pair(A, x.cochain, y.chain) +
           A.algebra().sign(A.dimension() - 1) * duality_pair(A, y.cochain, x.chain);
}

}  // namespace strtop
