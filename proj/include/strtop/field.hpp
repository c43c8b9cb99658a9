#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace strtop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raised when two objects over different fields are combined
struct FieldMismatch : Error {
    using Error::Error;
};

class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(static_cast<long>(n)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    const mpq_class& raw() const { return v_; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    bool operator==(const Rational& o) const { return v_ == o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

// residue mod a machine-word prime; the modulus travels with the value
class Mod {
public:
    Mod() = default;
    Mod(std::uint64_t v, std::uint64_t p) : v_(p ? v % p : 0), p_(p) {}

    bool is_zero() const { return v_ == 0; }
    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Mod operator+(const Mod& o) const { std::uint64_t p = pick(o); return {add(v_, o.v_, p), p}; }
    Mod operator-(const Mod& o) const { std::uint64_t p = pick(o); return {add(v_, p - o.v_, p), p}; }
    Mod operator*(const Mod& o) const {
        std::uint64_t p = pick(o);
        if (p == 0) return {};
        return {static_cast<std::uint64_t>((unsigned __int128)v_ * o.v_ % p), p};
    }
    Mod operator/(const Mod& o) const { return *this * o.inverse(); }
    Mod operator-() const { return {v_ ? p_ - v_ : 0, p_}; }
    Mod& operator+=(const Mod& o) { return *this = *this + o; }
    Mod& operator-=(const Mod& o) { return *this = *this - o; }
    Mod& operator*=(const Mod& o) { return *this = *this * o; }
    bool operator==(const Mod& o) const { return v_ == o.v_; }

    Mod inverse() const {
        if (v_ == 0) throw Error("division by zero");
        // p prime, so a^(p-2)
        std::uint64_t r = 1, b = v_, e = p_ - 2;
        while (e) {
            if (e & 1) r = (unsigned __int128)r * b % p_;
            b = (unsigned __int128)b * b % p_;
            e >>= 1;
        }
        return {r, p_};
    }

    std::string str() const { return std::to_string(v_); }

private:
    std::uint64_t pick(const Mod& o) const {
        // a default-constructed Mod has modulus 0 and acts as zero
        if (p_ && o.p_ && p_ != o.p_) throw FieldMismatch("mixing residues of different primes");
        return p_ ? p_ : o.p_;
    }
    static std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        if (p == 0) return 0;
        return static_cast<std::uint64_t>(((unsigned __int128)a + b) % p);
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

namespace detail {
inline mpq_class parse_q(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("bad coefficient '" + s + "'");
    q.canonicalize();
    return q;
}
}  // namespace detail

struct Rationals {
    using value_type = Rational;

    value_type zero() const { return {}; }
    value_type one() const { return 1; }
    value_type from_int(long long n) const { return n; }
    value_type parse(const std::string& s) const { return Rational(detail::parse_q(s)); }
    std::string name() const { return "Q"; }
    std::uint64_t characteristic() const { return 0; }
    bool operator==(const Rationals&) const = default;
};

struct PrimeField {
    using value_type = Mod;

    std::uint64_t p = 2;

    value_type zero() const { return {0, p}; }
    value_type one() const { return {1, p}; }
    value_type from_int(long long n) const {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return {static_cast<std::uint64_t>(r), p};
    }
    // accepts residues and fractions "a/b"
    value_type parse(const std::string& s) const {
        mpq_class q = detail::parse_q(s);
        mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
        mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p));
        if (num < 0) num += static_cast<unsigned long>(p);
        if (den == 0) throw Error("coefficient '" + s + "' has denominator divisible by " + std::to_string(p));
        return value_type(num.get_ui(), p) / value_type(den.get_ui(), p);
    }
    std::string name() const { return "Fp:" + std::to_string(p); }
    std::uint64_t characteristic() const { return p; }
    bool operator==(const PrimeField&) const = default;
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, const std::string& s) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(1) } -> std::same_as<typename F::value_type>;
    { f.parse(s) } -> std::same_as<typename F::value_type>;
    { f.name() } -> std::same_as<std::string>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
    { a * a };
    { a + a };
    { a - a };
    { a / a };
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline PrimeField prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw Error("Fp:" + std::to_string(p) + " is not a prime field");
    if (p >= (1ull << 62)) throw Error("prime too large");
    return PrimeField{p};
}

// (-1)^e as a field element
template <Field F>
typename F::value_type parity_sign(const F& field, long long e) {
    return (e % 2 == 0) ? field.one() : -field.one();
}

inline int parity(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace strtop
