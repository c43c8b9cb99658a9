#pragma once

#include <climits>
#include <map>
#include <utility>
#include <vector>

namespace strtop {

// finitely supported linear combination; zero coefficients are never stored
template <class Key, class K>
class Sparse {
public:
    using map_type = std::map<Key, K>;
    using const_iterator = typename map_type::const_iterator;

    Sparse() = default;
    Sparse(const Key& k, const K& c) { add(k, c); }

    void add(const Key& k, const K& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = m_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }
    void add(const Sparse& o, const K& c) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.m_) add(k, v * c);
    }
    void add(const Sparse& o) {
        for (const auto& [k, v] : o.m_) add(k, v);
    }

    Sparse scaled(const K& c) const {
        Sparse r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : m_) r.m_.emplace(k, v * c);
        return r;
    }

    K coeff(const Key& k) const {
        auto it = m_.find(k);
        return it == m_.end() ? K{} : it->second;
    }

    bool empty() const { return m_.empty(); }
    std::size_t size() const { return m_.size(); }
    const_iterator begin() const { return m_.begin(); }
    const_iterator end() const { return m_.end(); }
    const_iterator lower_bound(const Key& k) const { return m_.lower_bound(k); }
    const map_type& terms() const { return m_; }
    void erase(const Key& k) { m_.erase(k); }

    bool operator==(const Sparse& o) const { return m_ == o.m_; }

    Sparse operator+(const Sparse& o) const { Sparse r = *this; r.add(o); return r; }
    Sparse operator-(const Sparse& o) const {
        Sparse r = *this;
        for (const auto& [k, v] : o.m_) r.add(k, -v);
        return r;
    }
    Sparse& operator+=(const Sparse& o) { add(o); return *this; }
    Sparse& operator-=(const Sparse& o) { return *this = *this - o; }

private:
    map_type m_;
};

template <class K>
using Vec = Sparse<int, K>;

// Row echelon form over a field, with an optional tag vector carried along each row.
// Pivot of a row is its smallest index.
template <class K>
class Echelon {
public:
    // reduces v in place and accumulates the combination of row tags used
    void reduce(Vec<K>& v, Vec<K>& tag) const {
        int cursor = INT_MIN;
        while (true) {
            auto it = v.lower_bound(cursor);
            while (it != v.end() && !rows_.count(it->first)) ++it;
            if (it == v.end()) break;
            int k = it->first;
            K c = it->second;
            const auto& row = rows_.at(k);
            v.add(row.first, -c);
            tag.add(row.second, c);
            if (k == INT_MAX) break;
            cursor = k + 1;
        }
    }
    void reduce(Vec<K>& v) const {
        Vec<K> t;
        reduce(v, t);
    }

    // inserts v; returns false (and leaves `tag` holding tag - combination) if dependent
    bool insert(Vec<K> v, Vec<K>& tag) {
        Vec<K> used;
        reduce(v, used);
        tag -= used;
        if (v.empty()) return false;
        K inv = K(v.begin()->second);
        inv = one_like(inv) / inv;
        rows_.emplace(v.begin()->first, std::make_pair(v.scaled(inv), tag.scaled(inv)));
        return true;
    }
    bool insert(Vec<K> v) {
        Vec<K> t;
        return insert(std::move(v), t);
    }

    bool contains(Vec<K> v) const {
        reduce(v);
        return v.empty();
    }

    std::size_t rank() const { return rows_.size(); }

private:
    static K one_like(const K& x) {
        // x / x is the unit of whichever field x lives in
        return x / x;
    }
    std::map<int, std::pair<Vec<K>, Vec<K>>> rows_;
};

// kernel of the linear map whose j-th column is cols[j]
template <class K>
std::vector<Vec<K>> kernel_basis(const std::vector<Vec<K>>& cols, const K& one) {
    Echelon<K> e;
    std::vector<Vec<K>> ker;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        Vec<K> tag(j, one);
        if (!e.insert(cols[j], tag)) ker.push_back(tag);
    }
    return ker;
}

template <class K>
std::size_t rank_of(const std::vector<Vec<K>>& cols) {
    Echelon<K> e;
    for (const auto& c : cols) e.insert(c);
    return e.rank();
}

}  // namespace strtop
