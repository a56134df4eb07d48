#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace smckit {

using Rational = mpq_class;

class Scalar;

/// Ground field: a prime field F_p or the rationals.
///
/// Every Scalar remembers which field it lives in, so values from two
/// different fields can never be mixed silently.
class Field {
public:
    static constexpr std::uint32_t kDefaultPrime = 32003;

    Field() : p_(kDefaultPrime) {}

    static Field prime(std::uint32_t p);
    static Field rationals() { return Field(0u); }

    bool is_rational() const { return p_ == 0; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_fraction(long long num, long long den) const;
    /// Parses "3", "-7", "2/5".
    Scalar parse(const std::string& text) const;

    /// Uniform element of F_p, or an integer in [-kRationalSampleBound, kRationalSampleBound].
    Scalar random(std::mt19937_64& rng) const;
    /// Size of the set random() samples from (used for Schwartz-Zippel bounds).
    double sample_size() const;

    std::string name() const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    static constexpr long kRationalSampleBound = 1000;

private:
    friend class Scalar;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class Scalar {
public:
    struct ModP {
        std::uint32_t value;
        std::uint32_t p;
        bool operator==(const ModP& o) const { return value == o.value && p == o.p; }
    };

    Scalar(ModP v) : v_(v) {}
    Scalar(Rational q) : v_(std::move(q)) {}

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// F_p values print as the representative in (-p/2, p/2].
    std::string str() const;

private:
    std::variant<ModP, Rational> v_;
};

} // namespace smckit
