#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graded.hpp"

namespace strtop {

struct Violation {
    std::string axiom;
    std::vector<std::string> witness;
    std::string detail;
};

using Report = std::vector<Violation>;

template <Field F>
class DgAlgebra {
public:
    using field_type = F;
    using K = typename F::value_type;
    using Elem = Vec<K>;

    DgAlgebra() = default;

    // mul is row-major over basis pairs (N*N entries); d has one entry per basis element
    DgAlgebra(F field, GradedSpace space, int unit, std::vector<Elem> mul, std::vector<Elem> d)
        : field_(std::move(field)), space_(std::move(space)), unit_(unit), mul_(std::move(mul)), d_(std::move(d)) {
        const int n = space_.size();
        if (unit_ < 0 || unit_ >= n) throw ShapeError("unit is not a basis element");
        if (space_.degree(unit_) != 0) throw ShapeError("unit must have degree 0");
        if (static_cast<int>(mul_.size()) != n * n) throw ShapeError("multiplication table has wrong size");
        if (static_cast<int>(d_.size()) != n) throw ShapeError("differential table has wrong size");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) check_entry(mul_[i * n + j], space_.degree(i) + space_.degree(j));
        for (int i = 0; i < n; ++i) check_entry(d_[i], space_.degree(i) + 1);
        for (int i = 0; i < n; ++i)
            if (i != unit_) bar_.push_back(i);
    }

    const F& field() const { return field_; }
    const GradedSpace& space() const { return space_; }
    int dim() const { return space_.size(); }
    int degree(int i) const { return space_.degree(i); }
    const std::string& label(int i) const { return space_.label(i); }
    int find(const std::string& label) const { return space_.find(label); }
    int unit() const { return unit_; }
    // basis of the augmentation quotient Ā
    const std::vector<int>& bar() const { return bar_; }

    K zero() const { return field_.zero(); }
    K one() const { return field_.one(); }
    K sign(long long e) const { return parity_sign(field_, e); }

    Elem basis(int i) const { return Elem(i, field_.one()); }
    Elem basis(const std::string& label) const { return basis(find(label)); }
    Elem unit_elem() const { return basis(unit_); }

    const Elem& mul(int i, int j) const { return mul_.at(static_cast<std::size_t>(i) * dim() + j); }
    const Elem& d(int i) const { return d_.at(i); }

    Elem mul(const Elem& x, const Elem& y) const {
        Elem out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) out.add(mul(i, j), a * b);
        return out;
    }
    Elem d(const Elem& x) const {
        Elem out;
        for (const auto& [i, a] : x) out.add(d_[i], a);
        return out;
    }

    // drop the unit component (projection A -> Ā on the basis)
    Elem bar_part(Elem x) const {
        x.erase(unit_);
        return x;
    }

    bool has_zero_differential() const {
        for (const auto& e : d_)
            if (!e.empty()) return false;
        return true;
    }
    bool connected() const {
        for (int i = 0; i < dim(); ++i) {
            if (degree(i) < 0) return false;
            if (degree(i) == 0 && i != unit_) return false;
        }
        return true;
    }
    bool simply_connected() const {
        if (!connected()) return false;
        for (int i = 0; i < dim(); ++i)
            if (degree(i) == 1) return false;
        return true;
    }
    bool commutative() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (!(mul(i, j) == mul(j, i).scaled(sign(static_cast<long long>(degree(i)) * degree(j))))) return false;
        return true;
    }

    const std::vector<Elem>& mul_table() const { return mul_; }
    const std::vector<Elem>& d_table() const { return d_; }

    bool operator==(const DgAlgebra& o) const {
        return field_ == o.field_ && space_ == o.space_ && unit_ == o.unit_ && mul_ == o.mul_ && d_ == o.d_;
    }

private:
    void check_entry(const Elem& e, int deg) const {
        for (const auto& [k, c] : e) {
            if (k < 0 || k >= space_.size()) throw ShapeError("table entry references unknown basis index");
            if (space_.degree(k) != deg)
                throw ShapeError("table entry " + space_.label(k) + " has degree " + std::to_string(space_.degree(k)) +
                                 ", expected " + std::to_string(deg));
        }
    }

    F field_{};
    GradedSpace space_;
    int unit_ = 0;
    std::vector<Elem> mul_;
    std::vector<Elem> d_;
    std::vector<int> bar_;
};

template <Field F>
Report validate_dga(const DgAlgebra<F>& A) {
    using Elem = typename DgAlgebra<F>::Elem;
    Report rep;
    const int n = A.dim();
    auto lab = [&](int i) { return A.label(i); };

    for (int i = 0; i < n; ++i)
        if (!A.d(A.d(A.basis(i))).empty()) rep.push_back({"d^2=0", {lab(i)}, "d(d(x)) != 0"});

    for (int i = 0; i < n; ++i) {
        if (!(A.mul(A.unit(), i) == A.basis(i))) rep.push_back({"unit", {lab(i)}, "1*x != x"});
        if (!(A.mul(i, A.unit()) == A.basis(i))) rep.push_back({"unit", {lab(i)}, "x*1 != x"});
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem lhs = A.d(A.mul(i, j));
            Elem rhs = A.mul(A.d(A.basis(i)), A.basis(j));
            rhs.add(A.mul(A.basis(i), A.d(A.basis(j))), A.sign(A.degree(i)));
            if (!(lhs == rhs)) rep.push_back({"Leibniz", {lab(i), lab(j)}, "d(xy) != d(x)y + (-1)^|x| x d(y)"});
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Elem l = A.mul(A.mul(i, j), A.basis(k));
                Elem r = A.mul(A.basis(i), A.mul(j, k));
                if (!(l == r)) rep.push_back({"associativity", {lab(i), lab(j), lab(k)}, "(xy)z != x(yz)"});
            }
    return rep;
}

template <Field F>
DgAlgebra<F> ground_algebra(const F& field) {
    GradedSpace s({{"1", 0}});
    return DgAlgebra<F>(field, s, 0, {Vec<typename F::value_type>(0, field.one())}, {{}});
}

inline std::string tensor_label(const std::string& a, const std::string& b) { return a + "|" + b; }

// A ⊗ B with (a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd and d = d⊗id + id⊗d; basis index i*dim(B)+j
template <Field F>
DgAlgebra<F> tensor_dga(const DgAlgebra<F>& A, const DgAlgebra<F>& B) {
    using Elem = typename DgAlgebra<F>::Elem;
    if (!(A.field() == B.field())) throw FieldMismatch("tensor_dga: " + A.field().name() + " vs " + B.field().name());
    const int na = A.dim(), nb = B.dim();
    auto idx = [nb](int i, int j) { return i * nb + j; };
    GradedSpace s;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) s.push(tensor_label(A.label(i), B.label(j)), A.degree(i) + B.degree(j));

    const int n = na * nb;
    std::vector<Elem> mul(static_cast<std::size_t>(n) * n), d(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l) {
                    auto sg = A.sign(static_cast<long long>(B.degree(j)) * A.degree(k));
                    Elem& out = mul[static_cast<std::size_t>(idx(i, j)) * n + idx(k, l)];
                    for (const auto& [r, c1] : A.mul(i, k))
                        for (const auto& [t, c2] : B.mul(j, l)) out.add(idx(r, t), sg * c1 * c2);
                }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            Elem& out = d[idx(i, j)];
            for (const auto& [r, c] : A.d(i)) out.add(idx(r, j), c);
            for (const auto& [t, c] : B.d(j)) out.add(idx(i, t), A.sign(A.degree(i)) * c);
        }
    return DgAlgebra<F>(A.field(), s, idx(A.unit(), B.unit()), std::move(mul), std::move(d));
}

}  // namespace strtop
