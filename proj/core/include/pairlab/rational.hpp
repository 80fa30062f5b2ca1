#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace pairlab {

/// Arbitrary-precision rational in canonical form (gcd(num, den) = 1, den > 0).
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& v) : q_(v) {}
    explicit Rational(mpq_class q);

    /// Accepts "p" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text);

    const mpq_class& get() const noexcept { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    mpz_class floor() const;
    Rational abs() const;
    Rational inverse() const;

    /// "p" for integers, otherwise "p/q".
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Rational extended by the two infinities.
class ExtendedRational {
public:
    enum class Kind { NegInfinity, Finite, PosInfinity };

    ExtendedRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
    template <std::integral T>
    ExtendedRational(T v) : ExtendedRational(Rational(v)) {}  // NOLINT

    static ExtendedRational neg_infinity() { return ExtendedRational(Kind::NegInfinity); }
    static ExtendedRational pos_infinity() { return ExtendedRational(Kind::PosInfinity); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// Throws InvariantError on an infinity.
    const Rational& value() const;

    /// "-inf", "inf", or the rational string.
    std::string str() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

    friend std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.str(); }

private:
    explicit ExtendedRational(Kind k) : kind_(k) {}

    Kind kind_;
    Rational value_;
};

/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace pairlab

