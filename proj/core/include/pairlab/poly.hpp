#pragma once

#include "pairlab/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pairlab {

/// Exponents of a monomial x1^e1 * ... * xn^en.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    explicit ExponentVector(std::vector<unsigned> e) : e_(std::move(e)) {}
    ExponentVector(std::initializer_list<unsigned> e) : e_(e) {}

    std::size_t size() const noexcept { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    std::span<const unsigned> entries() const noexcept { return e_; }

    unsigned long degree() const noexcept;
    bool is_zero() const noexcept { return degree() == 0; }

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<unsigned> e_;
};

/// Canonical term order: total degree ascending, then lexicographically
/// descending (x1^2 before x1*x2 before x2^2).
struct GradedOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Nonnegative rational weights w(x_i), one per variable.
using WeightVector = std::vector<Rational>;

/// Polynomial in n variables with exact rational coefficients. Zero
/// coefficients are never stored; the zero polynomial has no terms.
class SparsePoly {
public:
    using Terms = std::map<ExponentVector, Rational, GradedOrder>;

    explicit SparsePoly(std::size_t n) : n_(n) {}

    static SparsePoly constant(std::size_t n, const Rational& c);
    static SparsePoly monomial(const ExponentVector& e, const Rational& c = 1);
    /// The variable x_{i+1} (0-based index i).
    static SparsePoly variable(std::size_t n, std::size_t i);

    std::size_t nvars() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const ExponentVector& e) const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    unsigned long degree() const;
    std::vector<ExponentVector> support() const;

    /// Adds c * x^e, dropping the term if the result cancels.
    void add_term(const ExponentVector& e, const Rational& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const Rational& c, const SparsePoly& p);
    SparsePoly operator-() const;
    SparsePoly pow(unsigned k) const;

    /// Replaces x_{i+1} by `value` (a polynomial in the same variables).
    SparsePoly substitute(std::size_t i, const SparsePoly& value) const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    void check_same_ring(const SparsePoly& o) const;

    std::size_t n_;
    Terms terms_;
};

/// Minimum of <w, m> over the support of f. Throws ZeroPolynomialError.
Rational weighted_multiplicity(const SparsePoly& f, std::span<const Rational> w);

/// Order of vanishing at the origin (lowest total degree in the support).
unsigned long multiplicity(const SparsePoly& f);

/// The part of f of total degree <= d.
SparsePoly truncate(const SparsePoly& f, unsigned long d);

/// Canonical text: terms in GradedOrder, variables x1..xn, `p/q*` coefficients.
std::string to_string(const SparsePoly& f);

/// Parses the polynomial grammar documented in README.md. Variables are
/// x1..xn; for n <= 3 the aliases x, y, z stand for x1, x2, x3. The zero
/// polynomial parses successfully; check `is_zero()` on the result.
SparsePoly parse_poly(std::string_view text, std::size_t n);

}  // namespace pairlab
