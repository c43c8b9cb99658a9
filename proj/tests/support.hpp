#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "strtop/conf_model.hpp"
#include "strtop/homology.hpp"
#include "strtop/spec_io.hpp"

namespace testing_support {

using namespace strtop;

inline constexpr std::uint64_t default_seed = 20240611;

#ifndef STRTOP_SOURCE_DIR
#define STRTOP_SOURCE_DIR "."
#endif

inline std::string model_path(const std::string& name) { return std::string(STRTOP_SOURCE_DIR) + "/models/" + name + ".json"; }

// 1, a (3), b (4), ab (7) with da = b: a 7-dimensional model with nonzero differential
template <Field F>
FrobeniusAlgebra<F> s7d(const F& field) {
    using K = typename F::value_type;
    GradedSpace s({{"1", 0}, {"a", 3}, {"b", 4}, {"ab", 7}});
    std::vector<Vec<K>> mul(16), d(4), pairing(4);
    const K one = field.one();
    for (int i = 0; i < 4; ++i) {
        mul[i] = Vec<K>(i, one);
        mul[i * 4] = Vec<K>(i, one);
    }
    mul[1 * 4 + 2] = Vec<K>(3, one);
    mul[2 * 4 + 1] = Vec<K>(3, one);
    d[1] = Vec<K>(2, one);
    pairing[0] = Vec<K>(3, one);
    pairing[3] = Vec<K>(0, one);
    pairing[1] = Vec<K>(2, one);
    pairing[2] = Vec<K>(1, one);
    return FrobeniusAlgebra<F>(DgAlgebra<F>(field, s, 0, mul, d), pairing, 7);
}

template <Field F>
struct NamedModel {
    std::string name;
    FrobeniusAlgebra<F> A;
};

// S², S³, CP², S³×S³
template <Field F>
std::vector<NamedModel<F>> standard_models(const F& field) {
    return {{"S2", sphere_model(field, 2)},
            {"S3", sphere_model(field, 3)},
            {"CP2", cp_model(field, 2)},
            {"S3xS3", product_model(sphere_model(field, 3), sphere_model(field, 3))}};
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// homogeneous random chain: a few basis words of one degree with small coefficients
template <Field F>
HochschildElement<typename F::value_type> random_chain(const DgAlgebra<F>& A, std::mt19937_64& rng, int k, int L,
                                                       int terms = 3) {
    HochschildElement<typename F::value_type> x;
    auto basis = chain_basis(A, k, L);
    if (basis.empty()) return x;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < terms; ++i) x.add(pick(rng, basis), A.field().from_int(coeff(rng)));
    return x;
}

template <Field F>
CochainTensor<typename F::value_type> random_cochain(const DgAlgebra<F>& A, std::mt19937_64& rng, int k, int L,
                                                     int terms = 3) {
    CochainTensor<typename F::value_type> f;
    auto basis = cochain_basis(A, k, L);
    if (basis.empty()) return f;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < terms; ++i) f.add(pick(rng, basis), A.field().from_int(coeff(rng)));
    return f;
}

// 1, x, y, xy (x, y of degree 2) with yx = 0
template <Field F>
DgAlgebra<F> noncommutative(const F& field) {
    using K = typename F::value_type;
    GradedSpace s({{"1", 0}, {"x", 2}, {"y", 2}, {"xy", 4}});
    std::vector<Vec<K>> mul(16), d(4);
    for (int i = 0; i < 4; ++i) {
        mul[i] = Vec<K>(i, field.one());
        mul[i * 4] = Vec<K>(i, field.one());
    }
    mul[1 * 4 + 2] = Vec<K>(3, field.one());
    return DgAlgebra<F>(field, s, 0, mul, d);
}

// 1, e with e² = e: not connected
template <Field F>
DgAlgebra<F> idempotent(const F& field) {
    using K = typename F::value_type;
    GradedSpace s({{"1", 0}, {"e", 0}});
    std::vector<Vec<K>> mul{Vec<K>(0, field.one()), Vec<K>(1, field.one()), Vec<K>(1, field.one()), Vec<K>(1, field.one())};
    return DgAlgebra<F>(field, s, 0, mul, std::vector<Vec<K>>(2));
}

}  // namespace testing_support
