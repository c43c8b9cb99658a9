#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "sparse.hpp"

namespace strtop {

// malformed tables, unknown labels, inconsistent dimensions
struct ShapeError : Error {
    using Error::Error;
};

class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(const std::vector<std::pair<std::string, int>>& basis) {
        for (const auto& [label, deg] : basis) push(label, deg);
    }

    int push(const std::string& label, int degree) {
        if (index_.count(label)) throw ShapeError("duplicate basis label '" + label + "'");
        int i = size();
        labels_.push_back(label);
        degrees_.push_back(degree);
        index_.emplace(label, i);
        return i;
    }

    int size() const { return static_cast<int>(labels_.size()); }
    int degree(int i) const { return degrees_.at(i); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& degrees() const { return degrees_; }

    int find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw ShapeError("unknown basis label '" + label + "'");
        return it->second;
    }
    bool contains(const std::string& label) const { return index_.count(label) > 0; }

    int min_degree() const {
        int m = 0;
        for (int d : degrees_) m = std::min(m, d);
        return m;
    }
    int max_degree() const {
        int m = 0;
        for (int d : degrees_) m = std::max(m, d);
        return m;
    }
    int dim_in_degree(int k) const {
        int c = 0;
        for (int d : degrees_) c += (d == k);
        return c;
    }

    bool operator==(const GradedSpace& o) const { return labels_ == o.labels_ && degrees_ == o.degrees_; }

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::map<std::string, int> index_;
};

// degree of a homogeneous vector, or `fallback` if v is zero; throws if inhomogeneous
template <class K>
int homogeneous_degree(const GradedSpace& s, const Vec<K>& v, int fallback = 0) {
    bool first = true;
    int deg = fallback;
    for (const auto& [i, c] : v) {
        if (first) deg = s.degree(i), first = false;
        else if (s.degree(i) != deg) throw ShapeError("inhomogeneous element");
    }
    return deg;
}

template <Field F>
class GradedMap {
public:
    using K = typename F::value_type;

    GradedMap(GradedSpace source, GradedSpace target, int degree, std::vector<Vec<K>> columns)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree), cols_(std::move(columns)) {
        if (static_cast<int>(cols_.size()) != source_.size()) throw ShapeError("map has wrong number of columns");
        for (int i = 0; i < source_.size(); ++i)
            for (const auto& [j, c] : cols_[i]) {
                if (j < 0 || j >= target_.size()) throw ShapeError("map column out of range");
                if (target_.degree(j) != source_.degree(i) + degree_)
                    throw ShapeError("map " + source_.label(i) + " -> " + target_.label(j) + " breaks degree");
            }
    }

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int degree() const { return degree_; }
    const Vec<K>& column(int i) const { return cols_.at(i); }

    Vec<K> operator()(const Vec<K>& x) const {
        Vec<K> out;
        for (const auto& [i, c] : x) out.add(cols_.at(i), c);
        return out;
    }

    // this ∘ g
    GradedMap compose(const GradedMap& g) const {
        if (!(g.target_ == source_)) throw ShapeError("composition of incompatible maps");
        std::vector<Vec<K>> cols;
        for (int i = 0; i < g.source_.size(); ++i) cols.push_back((*this)(g.cols_[i]));
        return GradedMap(g.source_, target_, g.degree_ + degree_, std::move(cols));
    }

    // the block V^k -> W^{k+deg} as column vectors
    std::vector<Vec<K>> block(int k) const {
        std::vector<Vec<K>> out;
        for (int i = 0; i < source_.size(); ++i)
            if (source_.degree(i) == k) out.push_back(cols_[i]);
        return out;
    }

    bool operator==(const GradedMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_ && cols_ == o.cols_;
    }

private:
    GradedSpace source_, target_;
    int degree_;
    std::vector<Vec<K>> cols_;
};

// Sign of reordering x_0..x_{n-1} into x_{perm[0]},...,x_{perm[n-1]}.
inline int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
    if (perm.size() != degrees.size()) throw ShapeError("permutation and degree list differ in length");
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw ShapeError("not a permutation");
        seen[p] = true;
    }
    long long e = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) e += static_cast<long long>(degrees[perm[i]]) * degrees[perm[j]];
    return parity(e);
}

template <Field F>
typename F::value_type koszul_sign(const F& field, const std::vector<int>& perm, const std::vector<int>& degrees) {
    return koszul_sign(perm, degrees) > 0 ? field.one() : -field.one();
}

}  // namespace strtop
