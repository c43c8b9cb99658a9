#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dga.hpp"

namespace strtop {

// A∞ structure on a finite graded space; m[q-1] is m_q evaluated on basis tuples.
template <Field F>
struct AInfinityStructure {
    using K = typename F::value_type;
    using Op = std::function<Vec<K>(const std::vector<int>&)>;

    F field;
    GradedSpace space;
    std::vector<std::optional<Op>> m;

    static Op zero_op() {
        return [](const std::vector<int>&) { return Vec<K>{}; };
    }
};

struct AInfinityReport {
    bool ok = true;
    int arity = 0;
    std::vector<std::string> witness;
};

template <Field F>
AInfinityReport validate_a_infinity(const AInfinityStructure<F>& S, int N) {
    using K = typename F::value_type;
    if (N < 1) throw Error("arity bound must be positive");
    if (static_cast<int>(S.m.size()) < N) throw Error("m_" + std::to_string(S.m.size() + 1) + " not supplied");
    for (int q = 0; q < N; ++q)
        if (!S.m[q]) throw Error("m_" + std::to_string(q + 1) + " not supplied");

    const int dim = S.space.size();
    auto call = [&](int q, const std::vector<int>& args) { return (*S.m[q - 1])(args); };

    for (int n = 1; n <= N; ++n) {
        std::vector<int> t(n, 0);
        if (dim == 0) break;
        while (true) {
            Vec<K> total;
            for (int q = 1; q <= n; ++q)
                for (int p = 0; p + q <= n; ++p) {
                    int r = n - p - q;
                    long long e = p + static_cast<long long>(q) * r;
                    for (int i = 0; i < p; ++i) e += static_cast<long long>(2 - q) * S.space.degree(t[i]);
                    K sg = parity_sign(S.field, e);
                    Vec<K> inner = call(q, std::vector<int>(t.begin() + p, t.begin() + p + q));
                    for (const auto& [b, c] : inner) {
                        std::vector<int> args(t.begin(), t.begin() + p);
                        args.push_back(b);
                        args.insert(args.end(), t.begin() + p + q, t.end());
                        total.add(call(p + 1 + r, args), sg * c);
                    }
                }
            if (!total.empty()) {
                AInfinityReport rep{false, n, {}};
                for (int x : t) rep.witness.push_back(S.space.label(x));
                return rep;
            }
            int pos = n - 1;
            while (pos >= 0 && ++t[pos] == dim) t[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return {};
}

// (d, μ, 0, 0, ...) viewed as an A∞ structure
template <Field F>
AInfinityStructure<F> as_a_infinity(const DgAlgebra<F>& A, int N) {
    using S = AInfinityStructure<F>;
    S s{A.field(), A.space(), {}};
    s.m.push_back([&A](const std::vector<int>& x) { return A.d(x[0]); });
    if (N >= 2) s.m.push_back([&A](const std::vector<int>& x) { return A.mul(x[0], x[1]); });
    for (int q = 3; q <= N; ++q) s.m.push_back(S::zero_op());
    return s;
}

}  // namespace strtop
