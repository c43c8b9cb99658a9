#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dga.hpp"

namespace strtop {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Gauss-Jordan inverse; nullopt if singular
template <Field F>
std::optional<Matrix<typename F::value_type>> invert(const F& field, Matrix<typename F::value_type> a) {
    using K = typename F::value_type;
    const int n = static_cast<int>(a.size());
    Matrix<K> inv(n, std::vector<K>(n, field.zero()));
    for (int i = 0; i < n; ++i) inv[i][i] = field.one();
    for (int c = 0; c < n; ++c) {
        int r = c;
        while (r < n && a[r][c].is_zero()) ++r;
        if (r == n) return std::nullopt;
        std::swap(a[r], a[c]);
        std::swap(inv[r], inv[c]);
        K pv = field.one() / a[c][c];
        for (int j = 0; j < n; ++j) {
            a[c][j] = a[c][j] * pv;
            inv[c][j] = inv[c][j] * pv;
        }
        for (int r2 = 0; r2 < n; ++r2) {
            if (r2 == c || a[r2][c].is_zero()) continue;
            K f = a[r2][c];
            for (int j = 0; j < n; ++j) {
                a[r2][j] = a[r2][j] - f * a[c][j];
                inv[r2][j] = inv[r2][j] - f * inv[c][j];
            }
        }
    }
    return inv;
}

// elements of A⊗A, keyed by basis pairs
template <class K>
using TensorElem = Sparse<std::pair<int, int>, K>;

template <Field F>
class FrobeniusAlgebra {
public:
    using K = typename F::value_type;
    using Elem = Vec<K>;
    using Tensor = TensorElem<K>;

    FrobeniusAlgebra() = default;

    // pairing[i] holds the row j -> <i, j>
    FrobeniusAlgebra(DgAlgebra<F> algebra, std::vector<Elem> pairing, int n)
        : alg_(std::move(algebra)), pair_(std::move(pairing)), n_(n) {
        const int N = alg_.dim();
        if (n_ < 0) throw ShapeError("Frobenius dimension must be nonnegative");
        if (static_cast<int>(pair_.size()) != N) throw ShapeError("pairing has wrong number of rows");
        for (const auto& row : pair_)
            for (const auto& [j, c] : row)
                if (j < 0 || j >= N) throw ShapeError("pairing references unknown basis index");
        Matrix<K> g(N, std::vector<K>(N, alg_.zero()));
        for (int i = 0; i < N; ++i)
            for (const auto& [j, c] : pair_[i]) g[j][i] = c;  // transpose
        gt_inv_ = invert(alg_.field(), g);
        if (gt_inv_) {
            for (int u = 0; u < N; ++u)
                for (int v = 0; v < N; ++v)
                    diag_.add({u, v}, alg_.sign(alg_.degree(u)) * (*gt_inv_)[u][v]);
        }
    }

    const DgAlgebra<F>& algebra() const { return alg_; }
    const F& field() const { return alg_.field(); }
    int dimension() const { return n_; }
    int dim() const { return alg_.dim(); }
    const std::vector<Elem>& pairing_rows() const { return pair_; }

    K pair(int i, int j) const { return pair_[i].coeff(j); }
    K pair(const Elem& x, const Elem& y) const {
        K s = alg_.zero();
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) s += a * b * pair(i, j);
        return s;
    }

    bool nondegenerate() const { return gt_inv_.has_value(); }

    // Δ(1) = Σ e_i ⊗ f_i
    const Tensor& diagonal() const {
        require_nondegenerate();
        return diag_;
    }

    // Δ(a) from <a, xy> = Σ c_uv (-1)^{n|u| + (|v|-n)|x|} <u,x><v,y>
    Tensor coproduct(int a) const {
        require_nondegenerate();
        const int N = dim();
        Matrix<K> P(N, std::vector<K>(N, alg_.zero()));
        for (int x = 0; x < N; ++x)
            for (int y = 0; y < N; ++y) P[x][y] = pair(alg_.basis(a), alg_.mul(x, y));
        // c = (G^T)^{-1} P G^{-1} up to the sign
        const Matrix<K>& A = *gt_inv_;
        Matrix<K> tmp(N, std::vector<K>(N, alg_.zero()));
        for (int u = 0; u < N; ++u)
            for (int x = 0; x < N; ++x) {
                if (A[u][x].is_zero()) continue;
                for (int y = 0; y < N; ++y) tmp[u][y] += A[u][x] * P[x][y];
            }
        Tensor out;
        for (int u = 0; u < N; ++u)
            for (int y = 0; y < N; ++y) {
                if (tmp[u][y].is_zero()) continue;
                for (int v = 0; v < N; ++v) {
                    // G^{-1}[y][v] = (G^T)^{-1}[v][y]
                    if (A[v][y].is_zero()) continue;
                    int x_deg = n_ - alg_.degree(u);
                    long long e = static_cast<long long>(n_) * alg_.degree(u) +
                                  static_cast<long long>(alg_.degree(v) - n_) * x_deg;
                    out.add({u, v}, alg_.sign(e) * tmp[u][y] * A[v][y]);
                }
            }
        return out;
    }
    Tensor coproduct(const Elem& a) const {
        Tensor out;
        for (const auto& [i, c] : a) out.add(coproduct(i), c);
        return out;
    }

    // ρ^{-1}(φ) for the functional φ given by its values on the basis
    Elem rho_inverse(const std::vector<K>& values) const {
        require_nondegenerate();
        Elem out;
        const int N = dim();
        // <x, b> = φ(b) means G^T x = φ
        for (int b = 0; b < N; ++b)
            for (int i = 0; i < N; ++i) out.add(i, values[b] * (*gt_inv_)[i][b]);
        return out;
    }

    // tensor algebra helpers on A⊗A
    Tensor tensor_mul(const Tensor& x, const Tensor& y) const {
        Tensor out;
        for (const auto& [ab, c1] : x)
            for (const auto& [cd, c2] : y) {
                auto [a, b] = ab;
                auto [c, d] = cd;
                K sg = alg_.sign(static_cast<long long>(alg_.degree(b)) * alg_.degree(c));
                for (const auto& [r, c3] : alg_.mul(a, c))
                    for (const auto& [t, c4] : alg_.mul(b, d)) out.add({r, t}, sg * c1 * c2 * c3 * c4);
            }
        return out;
    }
    Tensor tensor_d(const Tensor& x) const {
        Tensor out;
        for (const auto& [ab, c] : x) {
            auto [a, b] = ab;
            for (const auto& [r, c1] : alg_.d(a)) out.add({r, b}, c * c1);
            for (const auto& [t, c2] : alg_.d(b)) out.add({a, t}, alg_.sign(alg_.degree(a)) * c * c2);
        }
        return out;
    }
    Tensor left(const Elem& a) const {
        Tensor t;
        for (const auto& [i, c] : a) t.add({i, alg_.unit()}, c);
        return t;
    }
    Tensor right(const Elem& b) const {
        Tensor t;
        for (const auto& [i, c] : b) t.add({alg_.unit(), i}, c);
        return t;
    }
    Elem multiply_out(const Tensor& t) const {
        Elem out;
        for (const auto& [ab, c] : t) out.add(alg_.mul(ab.first, ab.second), c);
        return out;
    }

private:
    void require_nondegenerate() const {
        if (!gt_inv_) throw Error("pairing is degenerate: rho is not invertible");
    }

    DgAlgebra<F> alg_;
    std::vector<Elem> pair_;
    int n_ = 0;
    std::optional<Matrix<K>> gt_inv_;
    Tensor diag_;
};

template <Field F>
Report validate_frobenius(const FrobeniusAlgebra<F>& A) {
    Report rep;
    const auto& alg = A.algebra();
    const int N = A.dim(), n = A.dimension();
    auto lab = [&](int i) { return alg.label(i); };

    for (int i = 0; i < N; ++i)
        for (const auto& [j, c] : A.pairing_rows()[i])
            if (alg.degree(i) + alg.degree(j) != n)
                rep.push_back({"(1) degree", {lab(i), lab(j)}, "pairing nonzero outside A^i x A^{n-i}"});

    // (2) each block A^k x A^{n-k} must be square and invertible
    int lo = alg.space().min_degree(), hi = alg.space().max_degree();
    for (int k = lo; k <= hi; ++k) {
        std::vector<int> rows, cols;
        for (int i = 0; i < N; ++i) {
            if (alg.degree(i) == k) rows.push_back(i);
            if (alg.degree(i) == n - k) cols.push_back(i);
        }
        if (rows.empty() && cols.empty()) continue;
        bool ok = rows.size() == cols.size();
        if (ok) {
            Matrix<typename F::value_type> m(rows.size(), std::vector<typename F::value_type>(cols.size()));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = A.pair(rows[r], cols[c]);
            ok = invert(alg.field(), m).has_value();
        }
        if (!ok) {
            std::vector<std::string> w;
            for (int i : rows) w.push_back(lab(i));
            rep.push_back({"(2) nondegenerate", w, "rho not invertible in degree " + std::to_string(k)});
        }
    }

    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                if (!(A.pair(alg.mul(a, b), alg.basis(c)) == A.pair(alg.basis(a), alg.mul(b, c))))
                    rep.push_back({"(3) invariance", {lab(a), lab(b), lab(c)}, "<ab,c> != <a,bc>"});

    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            auto l = A.pair(alg.d(alg.basis(a)), alg.basis(b));
            auto r = A.pair(alg.basis(a), alg.d(alg.basis(b)));
            if (!(l == -(alg.sign(alg.degree(a)) * r)))
                rep.push_back({"(4) d-compatibility", {lab(a), lab(b)}, "<da,b> != -(-1)^|a| <a,db>"});
        }

    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (!(A.pair(a, b) == alg.sign(static_cast<long long>(alg.degree(a)) * alg.degree(b)) * A.pair(b, a)))
                rep.push_back({"symmetry", {lab(a), lab(b)}, "<a,b> != (-1)^{|a||b|}<b,a>"});
    return rep;
}

template <Field F>
Vec<typename F::value_type> euler_class(const FrobeniusAlgebra<F>& A) {
    return A.multiply_out(A.diagonal());
}

// coefficient of the top class in the Euler class, when the top degree is one-dimensional
template <Field F>
typename F::value_type euler_characteristic(const FrobeniusAlgebra<F>& A) {
    auto e = euler_class(A);
    const auto& alg = A.algebra();
    int top = -1;
    for (int i = 0; i < alg.dim(); ++i)
        if (alg.degree(i) == A.dimension()) {
            if (top >= 0) throw Error("top degree is not one-dimensional");
            top = i;
        }
    if (top < 0) throw Error("no top class");
    // normalize so that <1, top> = 1
    return e.coeff(top) * A.pair(alg.unit(), top);
}

template <Field F>
FrobeniusAlgebra<F> sphere_model(const F& field, int n) {
    using K = typename F::value_type;
    if (n < 1) throw Error("sphere_model: n must be at least 1");
    GradedSpace s({{"1", 0}, {"v", n}});
    std::vector<Vec<K>> mul(4);
    mul[0] = Vec<K>(0, field.one());
    mul[1] = Vec<K>(1, field.one());
    mul[2] = Vec<K>(1, field.one());
    DgAlgebra<F> alg(field, s, 0, std::move(mul), {{}, {}});
    return FrobeniusAlgebra<F>(std::move(alg), {Vec<K>(1, field.one()), Vec<K>(0, field.one())}, n);
}

inline std::string cp_label(int i) {
    if (i == 0) return "1";
    if (i == 1) return "x";
    return "x" + std::to_string(i);
}

// H*(CP^m) = K[x]/(x^{m+1}), |x| = 2
template <Field F>
FrobeniusAlgebra<F> cp_model(const F& field, int m) {
    using K = typename F::value_type;
    if (m < 1) throw Error("cp_model: m must be at least 1");
    GradedSpace s;
    for (int i = 0; i <= m; ++i) s.push(cp_label(i), 2 * i);
    const int N = m + 1;
    std::vector<Vec<K>> mul(N * N), d(N), pairing(N);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) mul[i * N + j] = Vec<K>(i + j, field.one());
    for (int i = 0; i <= m; ++i) pairing[i] = Vec<K>(m - i, field.one());
    return FrobeniusAlgebra<F>(DgAlgebra<F>(field, s, 0, std::move(mul), std::move(d)), std::move(pairing), 2 * m);
}

// signed product pairing <a⊗b, c⊗d> = (-1)^{|b||c|} <a,c><b,d>
template <Field F>
FrobeniusAlgebra<F> product_model(const FrobeniusAlgebra<F>& A, const FrobeniusAlgebra<F>& B) {
    using K = typename F::value_type;
    DgAlgebra<F> T = tensor_dga(A.algebra(), B.algebra());
    const int na = A.dim(), nb = B.dim();
    std::vector<Vec<K>> pairing(na * nb);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (const auto& [c, x] : A.pairing_rows()[a])
                for (const auto& [d, y] : B.pairing_rows()[b]) {
                    long long e = static_cast<long long>(B.algebra().degree(b)) * A.algebra().degree(c);
                    pairing[a * nb + b].add(c * nb + d, T.sign(e) * x * y);
                }
    return FrobeniusAlgebra<F>(std::move(T), std::move(pairing), A.dimension() + B.dimension());
}

}  // namespace strtop
