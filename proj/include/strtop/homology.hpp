#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tate.hpp"

namespace strtop {

// A cochain complex (differential of degree +1) given degree by degree.
template <class Key, class K>
struct ComplexDescriptor {
    std::string name;
    std::function<std::vector<Key>(int)> basis;
    std::function<Sparse<Key, K>(const Key&)> differential;
    // true when basis(k) is the complete degree-k part (no truncation loss)
    std::function<bool(int)> complete;
    K one;
};

template <class Key, class K>
struct HomologyDegree {
    int degree = 0;
    std::vector<Key> basis;
    std::map<Key, int> index;
    std::vector<Sparse<Key, K>> representatives;
    Echelon<K> cycles_mod_boundaries;  // rows: boundaries (empty tag), then reps (tag = class coordinates)
    Echelon<K> boundaries;

    std::size_t dim() const { return representatives.size(); }
};

struct WindowInfo {
    int L = 0;
    int k_min = 0, k_max = 0;
};

template <class Key, class K>
class HomologyClassTable {
public:
    WindowInfo window;
    std::map<int, HomologyDegree<Key, K>> degrees;

    bool has_degree(int k) const { return degrees.count(k) > 0; }
    const HomologyDegree<Key, K>& at(int k) const {
        auto it = degrees.find(k);
        if (it == degrees.end()) throw WindowOverflow("degree " + std::to_string(k) + " outside computed window");
        return it->second;
    }

    Vec<K> to_vec(const HomologyDegree<Key, K>& h, const Sparse<Key, K>& x) const {
        Vec<K> v;
        for (const auto& [key, c] : x) {
            auto it = h.index.find(key);
            if (it == h.index.end()) throw WindowOverflow("element leaves the computed basis");
            v.add(it->second, c);
        }
        return v;
    }

    // coordinates of the class of a cycle in the representative basis
    Vec<K> coordinates(int k, const Sparse<Key, K>& cycle) const {
        const auto& h = at(k);
        Vec<K> v = to_vec(h, cycle), tag;
        h.cycles_mod_boundaries.reduce(v, tag);
        if (!v.empty()) throw Error("element is not a cycle");
        return tag;
    }

    bool is_boundary(int k, const Sparse<Key, K>& x) const {
        const auto& h = at(k);
        return h.boundaries.contains(to_vec(h, x));
    }
};

template <class Key, class K>
HomologyClassTable<Key, K> homology(const ComplexDescriptor<Key, K>& C, const WindowInfo& w) {
    if (w.k_min > w.k_max) throw Error("window: empty degree range");
    for (int k = w.k_min - 1; k <= w.k_max + 1; ++k)
        if (!C.complete(k))
            throw WindowOverflow(C.name + ": degree " + std::to_string(k) + " is truncated at L = " +
                                 std::to_string(w.L) + "; homology in [" + std::to_string(w.k_min) + ", " +
                                 std::to_string(w.k_max) + "] would not be exact");

    std::map<int, std::vector<Key>> bases;
    std::map<int, std::map<Key, int>> idx;
    for (int k = w.k_min - 1; k <= w.k_max + 1; ++k) {
        bases[k] = C.basis(k);
        for (int i = 0; i < static_cast<int>(bases[k].size()); ++i) idx[k][bases[k][i]] = i;
    }
    auto columns = [&](int k) {
        std::vector<Vec<K>> cols;
        for (const auto& b : bases[k]) {
            Vec<K> v;
            for (const auto& [key, c] : C.differential(b)) {
                auto it = idx[k + 1].find(key);
                if (it == idx[k + 1].end()) throw WindowOverflow(C.name + ": differential leaves the basis");
                v.add(it->second, c);
            }
            cols.push_back(std::move(v));
        }
        return cols;
    };

    HomologyClassTable<Key, K> table;
    table.window = w;
    for (int k = w.k_min; k <= w.k_max; ++k) {
        HomologyDegree<Key, K> h;
        h.degree = k;
        h.basis = bases[k];
        h.index = idx[k];
        for (const auto& c : columns(k - 1)) {
            h.boundaries.insert(c);
            h.cycles_mod_boundaries.insert(c);
        }
        for (const auto& z : kernel_basis(columns(k), C.one)) {
            Vec<K> tag(static_cast<int>(h.representatives.size()), C.one);
            if (!h.cycles_mod_boundaries.insert(z, tag)) continue;
            Sparse<Key, K> rep;
            for (const auto& [i, c] : z) rep.add(h.basis[i], c);
            h.representatives.push_back(std::move(rep));
        }
        table.degrees.emplace(k, std::move(h));
    }
    return table;
}

// structure constants (k1, i, k2, j) -> coordinates of [x_i][x_j] in degree k1 + k2 + shift
template <class Key, class K>
using ProductTable = std::map<std::tuple<int, int, int, int>, Vec<K>>;

template <class Key, class K>
ProductTable<Key, K> induced_product(const HomologyClassTable<Key, K>& t,
                                     const std::function<Sparse<Key, K>(const Sparse<Key, K>&, const Sparse<Key, K>&)>& op,
                                     int shift = 0) {
    ProductTable<Key, K> out;
    for (const auto& [k1, h1] : t.degrees)
        for (const auto& [k2, h2] : t.degrees) {
            int k = k1 + k2 + shift;
            if (!t.has_degree(k)) continue;
            for (int i = 0; i < static_cast<int>(h1.dim()); ++i)
                for (int j = 0; j < static_cast<int>(h2.dim()); ++j)
                    out[{k1, i, k2, j}] = t.coordinates(k, op(h1.representatives[i], h2.representatives[j]));
        }
    return out;
}

// ---- descriptors ----

template <Field F>
ComplexDescriptor<ChainWord, typename F::value_type> hochschild_chain_complex(const DgAlgebra<F>& A, int L,
                                                                              bool reduced_only = false) {
    using K = typename F::value_type;
    if (reduced_only && !A.connected()) throw PreconditionError("reduced complex needs a connected algebra");
    ComplexDescriptor<ChainWord, K> C;
    C.name = reduced_only ? "reduced Hochschild chains" : "Hochschild chains";
    C.one = A.one();
    C.basis = [&A, L, reduced_only](int k) {
        auto b = chain_basis(A, k, L);
        if (reduced_only)
            std::erase_if(b, [&](const ChainWord& w) { return w.bar.empty() && A.degree(w.module) == 0; });
        return b;
    };
    C.differential = [&A](const ChainWord& w) {
        return chain_differential(A, HochschildElement<K>(w, A.one()));
    };
    // each shifted factor has degree >= 1, so a degree-k word has length <= k
    bool sc = A.simply_connected();
    C.complete = [sc, L](int k) { return sc && k <= L; };
    return C;
}

template <Field F>
ComplexDescriptor<CochainKey, typename F::value_type> hochschild_cochain_complex(const DgAlgebra<F>& A, int L) {
    using K = typename F::value_type;
    ComplexDescriptor<CochainKey, K> C;
    C.name = "Hochschild cochains";
    C.one = A.one();
    C.basis = [&A, L](int k) { return cochain_basis(A, k, L); };
    C.differential = [&A](const CochainKey& key) {
        return cochain_differential(A, CochainTensor<K>(key, A.one()));
    };
    bool sc = A.simply_connected();
    int top = A.space().max_degree();
    C.complete = [sc, top, L](int k) { return sc && top - k <= L; };
    return C;
}

using TateKey = std::variant<CochainKey, ChainWord>;

template <class K>
TateElement<K> to_tate(const Sparse<TateKey, K>& x) {
    TateElement<K> t;
    for (const auto& [key, c] : x) {
        if (std::holds_alternative<CochainKey>(key)) t.cochain.add(std::get<CochainKey>(key), c);
        else t.chain.add(std::get<ChainWord>(key), c);
    }
    return t;
}

template <class K>
Sparse<TateKey, K> from_tate(const TateElement<K>& t) {
    Sparse<TateKey, K> x;
    for (const auto& [key, c] : t.cochain) x.add(TateKey(key), c);
    for (const auto& [key, c] : t.chain) x.add(TateKey(key), c);
    return x;
}

template <Field F>
ComplexDescriptor<TateKey, typename F::value_type> tate_complex(const FrobeniusAlgebra<F>& A, int L) {
    using K = typename F::value_type;
    ComplexDescriptor<TateKey, K> C;
    C.name = "Tate-Hochschild complex";
    C.one = A.algebra().one();
    const int n = A.dimension();
    C.basis = [&A, L, n](int k) {
        std::vector<TateKey> out;
        for (auto& c : cochain_basis(A.algebra(), k, L)) out.emplace_back(c);
        for (auto& w : chain_basis(A.algebra(), k - n + 1, L)) out.emplace_back(w);
        return out;
    };
    C.differential = [&A](const TateKey& key) {
        return from_tate(tate_differential(A, to_tate(Sparse<TateKey, K>(key, A.algebra().one()))));
    };
    bool sc = A.algebra().simply_connected();
    int top = A.algebra().space().max_degree();
    C.complete = [sc, top, L, n](int k) { return sc && top - k <= L && k - n + 1 <= L; };
    return C;
}

}  // namespace strtop

namespace strtop {

// cycles of 𝒟 supported in one sector, reduced to a set of independent homology classes
template <Field F>
std::vector<std::pair<int, Sparse<TateKey, typename F::value_type>>> pure_sector_classes(
    const FrobeniusAlgebra<F>& A, const ComplexDescriptor<TateKey, typename F::value_type>& C,
    const HomologyClassTable<TateKey, typename F::value_type>& t, bool chain_sector) {
    using K = typename F::value_type;
    std::vector<std::pair<int, Sparse<TateKey, K>>> out;
    for (const auto& [k, h] : t.degrees) {
        std::vector<TateKey> keys;
        for (const auto& b : h.basis)
            if (std::holds_alternative<ChainWord>(b) == chain_sector) keys.push_back(b);
        auto next = C.basis(k + 1);
        std::map<TateKey, int> nidx;
        for (int i = 0; i < static_cast<int>(next.size()); ++i) nidx[next[i]] = i;
        std::vector<Vec<K>> cols;
        for (const auto& b : keys) {
            Vec<K> v;
            for (const auto& [key, c] : C.differential(b)) v.add(nidx.at(key), c);
            cols.push_back(std::move(v));
        }
        Echelon<K> seen;
        for (const auto& z : kernel_basis(cols, C.one)) {
            Sparse<TateKey, K> cyc;
            for (const auto& [i, c] : z) cyc.add(keys[i], c);
            if (seen.insert(t.coordinates(k, cyc))) out.push_back({k, cyc});
        }
    }
    (void)A;
    return out;
}

struct CommutativityReport {
    int pairs_checked = 0;
    std::vector<std::string> failures;
};

// x⋆y = (-1)^{|x||y|} y⋆x on pure-sector classes: cup on cochains, ∗ on chains
template <Field F>
CommutativityReport tate_commutativity(const FrobeniusAlgebra<F>& A, int L, int k_min, int k_max) {
    using K = typename F::value_type;
    auto C = tate_complex(A, L);
    auto t = homology(C, WindowInfo{L, k_min, k_max});
    CommutativityReport rep;
    for (bool chain_sector : {false, true}) {
        auto classes = pure_sector_classes(A, C, t, chain_sector);
        auto prod = [&](const Sparse<TateKey, K>& x, const Sparse<TateKey, K>& y) {
            auto tx = to_tate(x), ty = to_tate(y);
            TateElement<K> r;
            if (chain_sector) r.chain = gh_star(A, tx.chain, ty.chain);
            else r.cochain = cup(A.algebra(), tx.cochain, ty.cochain);
            return from_tate(r);
        };
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i; j < classes.size(); ++j) {
                auto [k1, x] = classes[i];
                auto [k2, y] = classes[j];
                if (!t.has_degree(k1 + k2)) continue;
                auto diff = prod(x, y);
                diff.add(prod(y, x), -A.algebra().sign(static_cast<long long>(k1) * k2));
                ++rep.pairs_checked;
                if (!t.is_boundary(k1 + k2, diff))
                    rep.failures.push_back(std::string(chain_sector ? "chain" : "cochain") + " classes in degrees " +
                                           std::to_string(k1) + ", " + std::to_string(k2));
            }
    }
    return rep;
}

}  // namespace strtop
