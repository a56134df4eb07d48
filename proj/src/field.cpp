#include "smckit/field.hpp"

#include "smckit/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace smckit {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p)
{
    // a^(p-2) mod p
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(long long v, std::uint32_t p)
{
    long long r = v % static_cast<long long>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

void require_same(const Scalar::ModP& a, const Scalar::ModP& b)
{
    if (a.p != b.p)
        throw std::logic_error("scalar arithmetic across different prime fields");
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p) || p > 2147483647u)
        throw InputError("field characteristic " + std::to_string(p) + " is not a supported prime");
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const
{
    if (is_rational())
        return Scalar(Rational(static_cast<long>(v)));
    return Scalar(Scalar::ModP{reduce(v, p_), p_});
}

Scalar Field::from_fraction(long long num, long long den) const
{
    if (den == 0)
        throw InputError("zero denominator");
    if (is_rational()) {
        Rational q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return Scalar(q);
    }
    return from_int(num) / from_int(den);
}

Scalar Field::parse(const std::string& text) const
{
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        long long v = 0;
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw InputError("bad scalar literal '" + text + "'");
        return v;
    };
    std::string_view sv(text);
    if (slash == std::string::npos)
        return from_int(parse_int(sv));
    return from_fraction(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

Scalar Field::random(std::mt19937_64& rng) const
{
    if (is_rational()) {
        std::uniform_int_distribution<long> dist(-kRationalSampleBound, kRationalSampleBound);
        return Scalar(Rational(dist(rng)));
    }
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return Scalar(Scalar::ModP{dist(rng), p_});
}

double Field::sample_size() const
{
    return is_rational() ? 2.0 * kRationalSampleBound + 1.0 : static_cast<double>(p_);
}

std::string Field::name() const
{
    return is_rational() ? std::string("rationals") : "F_" + std::to_string(p_);
}

Field Scalar::field() const
{
    if (auto m = std::get_if<ModP>(&v_))
        return Field(m->p);
    return Field::rationals();
}

bool Scalar::is_zero() const
{
    if (auto m = std::get_if<ModP>(&v_))
        return m->value == 0;
    return sgn(std::get<Rational>(v_)) == 0;
}

bool Scalar::is_one() const
{
    if (auto m = std::get_if<ModP>(&v_))
        return m->value == 1;
    return std::get<Rational>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    if (auto a = std::get_if<ModP>(&v_)) {
        const auto& b = std::get<ModP>(o.v_);
        require_same(*a, b);
        std::uint64_t s = std::uint64_t(a->value) + b.value;
        return Scalar(ModP{static_cast<std::uint32_t>(s % a->p), a->p});
    }
    return Scalar(Rational(std::get<Rational>(v_) + std::get<Rational>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const
{
    if (auto a = std::get_if<ModP>(&v_)) {
        const auto& b = std::get<ModP>(o.v_);
        require_same(*a, b);
        std::uint64_t s = std::uint64_t(a->value) + a->p - b.value;
        return Scalar(ModP{static_cast<std::uint32_t>(s % a->p), a->p});
    }
    return Scalar(Rational(std::get<Rational>(v_) - std::get<Rational>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const
{
    if (auto a = std::get_if<ModP>(&v_)) {
        const auto& b = std::get<ModP>(o.v_);
        require_same(*a, b);
        std::uint64_t s = std::uint64_t(a->value) * b.value;
        return Scalar(ModP{static_cast<std::uint32_t>(s % a->p), a->p});
    }
    return Scalar(Rational(std::get<Rational>(v_) * std::get<Rational>(o.v_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const
{
    if (auto a = std::get_if<ModP>(&v_))
        return Scalar(ModP{a->value == 0 ? 0 : a->p - a->value, a->p});
    return Scalar(Rational(-std::get<Rational>(v_)));
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    if (auto a = std::get_if<ModP>(&v_))
        return Scalar(ModP{mod_inverse(a->value, a->p), a->p});
    return Scalar(Rational(1 / std::get<Rational>(v_)));
}

bool Scalar::operator==(const Scalar& o) const
{
    if (v_.index() != o.v_.index())
        return false;
    if (auto a = std::get_if<ModP>(&v_))
        return *a == std::get<ModP>(o.v_);
    return std::get<Rational>(v_) == std::get<Rational>(o.v_);
}

std::string Scalar::str() const
{
    if (auto a = std::get_if<ModP>(&v_)) {
        long long v = a->value;
        if (v > a->p / 2)
            v -= a->p;
        return std::to_string(v);
    }
    return std::get<Rational>(v_).get_str();
}

} // namespace smckit
