#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <functional>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "frobenius.hpp"

namespace strtop {

// (ā₁,…,ā_m; a_{m+1})
struct ChainWord {
    std::vector<int> bar;
    int module = 0;
    auto operator<=>(const ChainWord&) const = default;
};

// a basis entry of a cochain: the value on (ā₁,…,ā_m) has component `output`
struct CochainKey {
    std::vector<int> inputs;
    int output = 0;
    auto operator<=>(const CochainKey&) const = default;
};

template <class K>
using HochschildElement = Sparse<ChainWord, K>;
template <class K>
using CochainTensor = Sparse<CochainKey, K>;

struct WindowOverflow : Error {
    using Error::Error;
};

// raised when an operation's algebraic precondition fails (non-connected, non-commutative, ...)
struct PreconditionError : Error {
    using Error::Error;
};

struct TruncationWindow {
    int L = 4;
    int k_min = 0;
    int k_max = 0;

    void check() const {
        if (L < 0) throw Error("window: L must be nonnegative");
        if (k_min > k_max) throw Error("window: empty degree range");
    }
};

enum class Overflow { Throw, Drop };

template <Field F>
int shifted_degree(const DgAlgebra<F>& A, const std::vector<int>& w) {
    int s = 0;
    for (int a : w) s += A.degree(a) - 1;
    return s;
}

template <Field F>
int chain_degree(const DgAlgebra<F>& A, const ChainWord& w) {
    return shifted_degree(A, w.bar) + A.degree(w.module);
}

template <Field F>
int cochain_degree(const DgAlgebra<F>& A, const CochainKey& k) {
    return A.degree(k.output) - shifted_degree(A, k.inputs);
}

// drop words with the unit in a shifted slot
template <Field F, class Key, class K>
Sparse<Key, K> normalize(const DgAlgebra<F>& A, const Sparse<Key, K>& x) {
    Sparse<Key, K> out;
    for (const auto& [w, c] : x) {
        const std::vector<int>* bar;
        if constexpr (std::is_same_v<Key, ChainWord>) bar = &w.bar;
        else bar = &w.inputs;
        bool ok = true;
        for (int a : *bar) ok = ok && a != A.unit();
        if (ok) out.add(w, c);
    }
    return out;
}

namespace detail {

template <Field F>
void check_word(const DgAlgebra<F>& A, const std::vector<int>& bar, int mod) {
    for (int a : bar) {
        if (a < 0 || a >= A.dim()) throw ShapeError("word references unknown basis element");
        if (a == A.unit()) throw ShapeError("word is not normalized: unit in a shifted slot");
    }
    if (mod < 0 || mod >= A.dim()) throw ShapeError("word references unknown basis element");
}

// ε_i = |a_1| + ... + |a_i| - i
template <Field F>
long long eps(const DgAlgebra<F>& A, const std::vector<int>& w, int i) {
    long long s = 0;
    for (int j = 0; j < i; ++j) s += A.degree(w[j]) - 1;
    return s;
}

template <class T>
std::vector<T> splice(const std::vector<T>& w, int from, int to, std::initializer_list<T> mid) {
    std::vector<T> out(w.begin(), w.begin() + from);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + to, w.end());
    return out;
}

}  // namespace detail

template <Field F>
HochschildElement<typename F::value_type> chain_differential(const DgAlgebra<F>& A,
                                                             const HochschildElement<typename F::value_type>& x) {
    using K = typename F::value_type;
    HochschildElement<K> out;
    for (const auto& [w, c] : x) {
        detail::check_word(A, w.bar, w.module);
        const auto& b = w.bar;
        const int m = static_cast<int>(b.size());
        auto put_bar = [&](int from, int to, const Vec<K>& v, K coef) {
            for (const auto& [e, ce] : v) {
                if (e == A.unit()) continue;
                out.add({detail::splice(b, from, to, {e}), w.module}, coef * ce);
            }
        };
        // vertical
        for (int i = 1; i <= m; ++i) put_bar(i - 1, i, A.d(b[i - 1]), -(A.sign(detail::eps(A, b, i - 1)) * c));
        for (const auto& [e, ce] : A.d(w.module)) out.add({b, e}, A.sign(detail::eps(A, b, m)) * c * ce);
        // horizontal
        for (int i = 1; i < m; ++i) put_bar(i - 1, i + 1, A.mul(b[i - 1], b[i]), A.sign(detail::eps(A, b, i)) * c);
        if (m >= 1) {
            std::vector<int> head(b.begin(), b.end() - 1), tail(b.begin() + 1, b.end());
            for (const auto& [e, ce] : A.mul(b[m - 1], w.module))
                out.add({head, e}, -(A.sign(detail::eps(A, b, m - 1)) * c * ce));
            long long s = A.degree(w.module) - m + 1;
            for (int i = 1; i < m; ++i) s += A.degree(b[i]);
            for (const auto& [e, ce] : A.mul(w.module, b[0])) out.add({tail, e}, A.sign(s * A.degree(b[0])) * c * ce);
        }
    }
    return out;
}

// value f(ā₁,…,ā_m) as an element of A
template <class K>
Vec<K> evaluate(const CochainTensor<K>& f, const std::vector<int>& w) {
    Vec<K> out;
    for (auto it = f.lower_bound(CochainKey{w, INT_MIN}); it != f.end() && it->first.inputs == w; ++it)
        out.add(it->first.output, it->second);
    return out;
}

namespace detail {

// tables used to pull cochain entries back along d and μ
template <Field F>
struct PullbackTables {
    using K = typename F::value_type;
    std::vector<std::vector<std::pair<int, K>>> d_pre;                  // b -> (u, coeff of b in du)
    std::vector<std::vector<std::tuple<int, int, K>>> mul_pre;          // b -> (x, y, coeff of b in xy)

    explicit PullbackTables(const DgAlgebra<F>& A) : d_pre(A.dim()), mul_pre(A.dim()) {
        for (int u : A.bar())
            for (const auto& [b, c] : A.d(u)) d_pre[b].push_back({u, c});
        for (int x : A.bar())
            for (int y : A.bar())
                for (const auto& [b, c] : A.mul(x, y)) mul_pre[b].push_back({x, y, c});
    }
};

}  // namespace detail

template <Field F>
CochainTensor<typename F::value_type> cochain_differential(const DgAlgebra<F>& A,
                                                           const CochainTensor<typename F::value_type>& f,
                                                           int L = INT_MAX, Overflow policy = Overflow::Throw) {
    using K = typename F::value_type;
    detail::PullbackTables<F> T(A);
    CochainTensor<K> out;
    for (const auto& [key, c] : f) {
        detail::check_word(A, key.inputs, key.output);
        const auto& w = key.inputs;
        const int m = static_cast<int>(w.size());
        const long long k = cochain_degree(A, key);

        // vertical: d∘f and f∘(d on inputs)
        for (const auto& [o, co] : A.d(key.output)) out.add({w, o}, c * co);
        for (int i = 1; i <= m; ++i)
            for (const auto& [u, cu] : T.d_pre[w[i - 1]])
                out.add({detail::splice(w, i - 1, i, {u}), key.output}, A.sign(k + detail::eps(A, w, i - 1)) * c * cu);

        if (m + 1 > L) {
            if (policy == Overflow::Throw)
                throw WindowOverflow("cochain differential raises arity to " + std::to_string(m + 1) +
                                     " beyond L = " + std::to_string(L));
            continue;
        }
        // horizontal
        for (int a : A.bar()) {
            std::vector<int> u = detail::splice(w, 0, 0, {a});
            for (const auto& [o, co] : A.mul(a, key.output))
                out.add({u, o}, -(A.sign((A.degree(a) - 1) * k) * c * co));
        }
        for (int i = 1; i <= m; ++i)
            for (const auto& [x, y, cb] : T.mul_pre[w[i - 1]]) {
                long long e = k + detail::eps(A, w, i - 1) + A.degree(x) - 1;
                out.add({detail::splice(w, i - 1, i, {x, y}), key.output}, -(A.sign(e) * c * cb));
            }
        for (int a : A.bar()) {
            std::vector<int> u = w;
            u.push_back(a);
            for (const auto& [o, co] : A.mul(key.output, a))
                out.add({u, o}, A.sign(k + detail::eps(A, w, m)) * c * co);
        }
    }
    return out;
}

// <f, x> = Σ <f(ā₁…ā_m), a_{m+1}>
template <Field F>
typename F::value_type duality_pair(const FrobeniusAlgebra<F>& A, const CochainTensor<typename F::value_type>& f,
                                    const HochschildElement<typename F::value_type>& x) {
    auto s = A.algebra().zero();
    for (const auto& [w, c] : x) {
        auto v = evaluate(f, w.bar);
        if (!v.empty()) s += c * A.pair(v, A.algebra().basis(w.module));
    }
    return s;
}

// the cochain that pairs with basis chains as the dual basis: <dualize(x), y> = Σ x_w y_w
template <Field F>
CochainTensor<typename F::value_type> dualize(const FrobeniusAlgebra<F>& A,
                                              const HochschildElement<typename F::value_type>& x) {
    using K = typename F::value_type;
    CochainTensor<K> out;
    const int N = A.dim();
    for (const auto& [w, c] : x) {
        std::vector<K> phi(N, A.algebra().zero());
        phi[w.module] = A.algebra().one();
        for (const auto& [o, co] : A.rho_inverse(phi)) out.add({w.bar, o}, c * co);
    }
    return out;
}

// Connes' operator: rotate the module factor into the bar and put the unit in the module slot
template <Field F>
HochschildElement<typename F::value_type> connes_B(const DgAlgebra<F>& A,
                                                   const HochschildElement<typename F::value_type>& x) {
    using K = typename F::value_type;
    HochschildElement<K> out;
    for (const auto& [w, c] : x) {
        detail::check_word(A, w.bar, w.module);
        if (w.module == A.unit()) continue;
        std::vector<int> full = w.bar;
        full.push_back(w.module);
        const int m = static_cast<int>(w.bar.size());
        const long long em = detail::eps(A, w.bar, m);
        long long total = detail::eps(A, full, m + 1);
        long long left = 0;
        for (int j = 0; j <= m; ++j) {
            long long right = total - left;
            std::vector<int> rot(full.begin() + j, full.end());
            rot.insert(rot.end(), full.begin(), full.begin() + j);
            out.add({rot, A.unit()}, A.sign(left * right + em) * c);
            left += A.degree(full[j]) - 1;
        }
    }
    return out;
}

// kills the C_{0,0} = A^0 component
template <Field F>
HochschildElement<typename F::value_type> reduced(const DgAlgebra<F>& A,
                                                  const HochschildElement<typename F::value_type>& x) {
    if (!A.connected()) throw PreconditionError("reduced complex needs a connected algebra");
    HochschildElement<typename F::value_type> out;
    for (const auto& [w, c] : x)
        if (!(w.bar.empty() && A.degree(w.module) == 0)) out.add(w, c);
    return out;
}

// keeps word length m >= 1
template <Field F>
HochschildElement<typename F::value_type> relative(const DgAlgebra<F>& A,
                                                   const HochschildElement<typename F::value_type>& x) {
    if (!A.commutative()) throw PreconditionError("relative complex needs a commutative algebra");
    HochschildElement<typename F::value_type> out;
    for (const auto& [w, c] : x)
        if (!w.bar.empty()) out.add(w, c);
    return out;
}

namespace detail {

// words over Ā of length m with shifted degree `target`
template <Field F>
void words_of_degree(const DgAlgebra<F>& A, int m, int target, const std::function<void(const std::vector<int>&)>& emit) {
    if (A.bar().empty()) {
        if (m == 0 && target == 0) emit({});
        return;
    }
    int lo = INT_MAX, hi = INT_MIN;
    for (int a : A.bar()) lo = std::min(lo, A.degree(a) - 1), hi = std::max(hi, A.degree(a) - 1);
    std::vector<int> w;
    std::function<void(int)> rec = [&](int remaining) {
        int r = m - static_cast<int>(w.size());
        if (static_cast<long long>(r) * lo > remaining || static_cast<long long>(r) * hi < remaining) return;
        if (r == 0) {
            emit(w);
            return;
        }
        for (int a : A.bar()) {
            w.push_back(a);
            rec(remaining - (A.degree(a) - 1));
            w.pop_back();
        }
    };
    rec(target);
}

}  // namespace detail

// basis of C_k restricted to word length <= L, in canonical order
template <Field F>
std::vector<ChainWord> chain_basis(const DgAlgebra<F>& A, int k, int L) {
    std::vector<ChainWord> out;
    for (int m = 0; m <= L; ++m)
        for (int mod = 0; mod < A.dim(); ++mod)
            detail::words_of_degree(A, m, k - A.degree(mod), [&](const std::vector<int>& w) { out.push_back({w, mod}); });
    std::sort(out.begin(), out.end());
    return out;
}

// basis of C^k restricted to arity <= L
template <Field F>
std::vector<CochainKey> cochain_basis(const DgAlgebra<F>& A, int k, int L) {
    std::vector<CochainKey> out;
    for (int m = 0; m <= L; ++m)
        for (int o = 0; o < A.dim(); ++o)
            detail::words_of_degree(A, m, A.degree(o) - k, [&](const std::vector<int>& w) { out.push_back({w, o}); });
    std::sort(out.begin(), out.end());
    return out;
}

// chain basis of fixed length m (bidegree (-m, k))
template <Field F>
std::vector<ChainWord> chain_block(const DgAlgebra<F>& A, int m, int k) {
    std::vector<ChainWord> out;
    for (int mod = 0; mod < A.dim(); ++mod)
        detail::words_of_degree(A, m, k - A.degree(mod), [&](const std::vector<int>& w) { out.push_back({w, mod}); });
    std::sort(out.begin(), out.end());
    return out;
}

template <Field F>
std::vector<CochainKey> cochain_block(const DgAlgebra<F>& A, int m, int k) {
    std::vector<CochainKey> out;
    for (int o = 0; o < A.dim(); ++o)
        detail::words_of_degree(A, m, A.degree(o) - k, [&](const std::vector<int>& w) { out.push_back({w, o}); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace strtop
