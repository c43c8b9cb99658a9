#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tate.hpp"

namespace strtop {

using json = nlohmann::ordered_json;

struct SpecError : Error {
    using Error::Error;
};

using AnyField = std::variant<Rationals, PrimeField>;

inline AnyField parse_field(const std::string& s) {
    if (s == "Q") return Rationals{};
    if (s.rfind("Fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(s.substr(3));
        } catch (const std::exception&) {
            throw SpecError("bad field '" + s + "'");
        }
        return prime_field(p);
    }
    throw SpecError("unknown field '" + s + "' (expected Q or Fp:<p>)");
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecError(path + ": " + e.what());
    }
}

// coefficients: "num/den" strings over Q, residues over Fp
template <Field F>
typename F::value_type coeff_from_json(const F& field, const json& j) {
    if (j.is_number_integer()) return field.from_int(j.get<long long>());
    if (j.is_string()) return field.parse(j.get<std::string>());
    throw SpecError("coefficient must be an integer or a string, got " + j.dump());
}

inline json coeff_to_json(const Rational& c) { return c.str(); }
inline json coeff_to_json(const Mod& c) { return c.value(); }

namespace detail {

inline const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <Field F>
int label_index(const DgAlgebra<F>& A, const json& j) {
    if (!j.is_string()) throw SpecError("basis label must be a string, got " + j.dump());
    const auto s = j.get<std::string>();
    if (!A.space().contains(s)) throw SpecError("unknown basis label '" + s + "'");
    return A.find(s);
}

inline int label_index(const GradedSpace& s, const json& j) {
    if (!j.is_string()) throw SpecError("basis label must be a string, got " + j.dump());
    const auto l = j.get<std::string>();
    if (!s.contains(l)) throw SpecError("unknown basis label '" + l + "'");
    return s.find(l);
}

template <Field F>
Vec<typename F::value_type> sparse_from_json(const F& field, const GradedSpace& s, const json& arr) {
    Vec<typename F::value_type> v;
    if (!arr.is_array()) throw SpecError("expected an array of {label, coeff}");
    for (const auto& t : arr) v.add(label_index(s, member(t, "label")), coeff_from_json(field, member(t, "coeff")));
    return v;
}

template <class K>
json sparse_to_json(const GradedSpace& s, const Vec<K>& v) {
    json arr = json::array();
    for (const auto& [i, c] : v) arr.push_back({{"label", s.label(i)}, {"coeff", coeff_to_json(c)}});
    return arr;
}

}  // namespace detail

template <Field F>
DgAlgebra<F> dga_from_spec(const json& j, const F& field) {
    using K = typename F::value_type;
    GradedSpace s;
    for (const auto& b : detail::member(j, "basis")) {
        const auto& l = detail::member(b, "label");
        const auto& d = detail::member(b, "degree");
        if (!l.is_string() || !d.is_number_integer()) throw SpecError("basis entries are {label: string, degree: int}");
        if (s.contains(l.get<std::string>())) throw SpecError("duplicate basis label '" + l.get<std::string>() + "'");
        s.push(l.get<std::string>(), d.get<int>());
    }
    const int N = s.size();
    if (N == 0) throw SpecError("empty basis");
    const int unit = detail::label_index(s, detail::member(j, "unit"));
    std::vector<Vec<K>> mul(static_cast<std::size_t>(N) * N), d(N);
    if (j.contains("mul"))
        for (const auto& e : j.at("mul")) {
            int l = detail::label_index(s, detail::member(e, "left"));
            int r = detail::label_index(s, detail::member(e, "right"));
            mul[static_cast<std::size_t>(l) * N + r] = detail::sparse_from_json(field, s, detail::member(e, "result"));
        }
    // products with the unit may be left out
    for (int i = 0; i < N; ++i) {
        if (mul[static_cast<std::size_t>(unit) * N + i].empty()) mul[static_cast<std::size_t>(unit) * N + i] = Vec<K>(i, field.one());
        if (mul[static_cast<std::size_t>(i) * N + unit].empty()) mul[static_cast<std::size_t>(i) * N + unit] = Vec<K>(i, field.one());
    }
    if (j.contains("d"))
        for (const auto& e : j.at("d"))
            d[detail::label_index(s, detail::member(e, "source"))] =
                detail::sparse_from_json(field, s, detail::member(e, "result"));
    try {
        return DgAlgebra<F>(field, s, unit, std::move(mul), std::move(d));
    } catch (const ShapeError& e) {
        throw SpecError(e.what());
    }
}

template <Field F>
FrobeniusAlgebra<F> frobenius_from_spec(const json& j, const F& field) {
    using K = typename F::value_type;
    DgAlgebra<F> A = dga_from_spec(j, field);
    if (!j.contains("pairing")) throw SpecError("spec has no pairing");
    std::vector<Vec<K>> rows(A.dim());
    std::optional<int> n;
    for (const auto& e : j.at("pairing")) {
        int l = detail::label_index(A, detail::member(e, "left"));
        int r = detail::label_index(A, detail::member(e, "right"));
        K c = coeff_from_json(field, detail::member(e, "value"));
        rows[l].add(r, c);
        if (!c.is_zero()) n = A.degree(l) + A.degree(r);
    }
    if (j.contains("dimension")) {
        if (!j.at("dimension").is_number_integer()) throw SpecError("dimension must be an integer");
        n = j.at("dimension").get<int>();
    }
    if (!n) throw SpecError("cannot infer the Frobenius dimension from a zero pairing");
    try {
        return FrobeniusAlgebra<F>(std::move(A), std::move(rows), *n);
    } catch (const ShapeError& e) {
        throw SpecError(e.what());
    }
}

template <Field F>
json dga_to_spec(const DgAlgebra<F>& A) {
    const auto& s = A.space();
    json j;
    j["field"] = A.field().name();
    j["basis"] = json::array();
    for (int i = 0; i < A.dim(); ++i) j["basis"].push_back({{"label", A.label(i)}, {"degree", A.degree(i)}});
    j["unit"] = A.label(A.unit());
    j["mul"] = json::array();
    for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b) {
            if (a == A.unit() || b == A.unit()) continue;
            const auto& v = A.mul(a, b);
            if (!v.empty())
                j["mul"].push_back({{"left", A.label(a)}, {"right", A.label(b)}, {"result", detail::sparse_to_json(s, v)}});
        }
    j["d"] = json::array();
    for (int a = 0; a < A.dim(); ++a)
        if (!A.d(a).empty()) j["d"].push_back({{"source", A.label(a)}, {"result", detail::sparse_to_json(s, A.d(a))}});
    return j;
}

template <Field F>
json to_spec(const FrobeniusAlgebra<F>& FA) {
    json j = dga_to_spec(FA.algebra());
    const auto& A = FA.algebra();
    j["pairing"] = json::array();
    for (int a = 0; a < A.dim(); ++a)
        for (const auto& [b, c] : FA.pairing_rows()[a])
            j["pairing"].push_back({{"left", A.label(a)}, {"right", A.label(b)}, {"value", coeff_to_json(c)}});
    j["dimension"] = FA.dimension();
    return j;
}

// calls fn(field) with the field named in the spec, or with override when it is nonempty
template <class Fn>
decltype(auto) with_spec_field(const json& j, const std::string& override_field, Fn&& fn) {
    std::string name = override_field;
    if (name.empty()) {
        const auto& f = detail::member(j, "field");
        if (!f.is_string()) throw SpecError("field must be a string");
        name = f.get<std::string>();
    }
    return std::visit(std::forward<Fn>(fn), parse_field(name));
}

template <Field F>
FrobeniusAlgebra<F> from_spec_file(const std::string& path, const F& field) {
    return frobenius_from_spec(read_json_file(path), field);
}

template <Field F>
json chain_to_json(const DgAlgebra<F>& A, const HochschildElement<typename F::value_type>& x) {
    json arr = json::array();
    for (const auto& [w, c] : x) {
        json word = json::array();
        for (int i : w.bar) word.push_back(A.label(i));
        arr.push_back({{"word", word}, {"module", A.label(w.module)}, {"coeff", coeff_to_json(c)}});
    }
    return arr;
}

template <Field F>
HochschildElement<typename F::value_type> chain_from_json(const DgAlgebra<F>& A, const json& arr) {
    HochschildElement<typename F::value_type> x;
    if (!arr.is_array()) throw SpecError("chain must be an array of {word, module, coeff}");
    for (const auto& t : arr) {
        ChainWord w;
        if (!detail::member(t, "word").is_array()) throw SpecError("word must be an array of labels");
        for (const auto& l : detail::member(t, "word")) w.bar.push_back(detail::label_index(A, l));
        w.module = detail::label_index(A, detail::member(t, "module"));
        x.add(w, coeff_from_json(A.field(), detail::member(t, "coeff")));
    }
    return x;
}

template <Field F>
json cochain_to_json(const DgAlgebra<F>& A, const CochainTensor<typename F::value_type>& f) {
    json arr = json::array();
    for (const auto& [k, c] : f) {
        json in = json::array();
        for (int i : k.inputs) in.push_back(A.label(i));
        arr.push_back({{"inputs", in}, {"output", A.label(k.output)}, {"coeff", coeff_to_json(c)}});
    }
    return arr;
}

template <Field F>
CochainTensor<typename F::value_type> cochain_from_json(const DgAlgebra<F>& A, const json& arr) {
    CochainTensor<typename F::value_type> f;
    if (!arr.is_array()) throw SpecError("cochain must be an array of {inputs, output, coeff}");
    for (const auto& t : arr) {
        CochainKey k;
        if (!detail::member(t, "inputs").is_array()) throw SpecError("inputs must be an array of labels");
        for (const auto& l : detail::member(t, "inputs")) k.inputs.push_back(detail::label_index(A, l));
        k.output = detail::label_index(A, detail::member(t, "output"));
        f.add(k, coeff_from_json(A.field(), detail::member(t, "coeff")));
    }
    return f;
}

template <Field F>
json element_to_json(const DgAlgebra<F>& A, const Vec<typename F::value_type>& v) {
    return detail::sparse_to_json(A.space(), v);
}

template <Field F>
Vec<typename F::value_type> element_from_json(const DgAlgebra<F>& A, const json& arr) {
    return detail::sparse_from_json(A.field(), A.space(), arr);
}

}  // namespace strtop
