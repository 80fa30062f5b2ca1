#include "pairlab/error.hpp"
#include "pairlab/poly.hpp"
#include "pairlab/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pairlab;

namespace {

Rational q(long p, long r = 1) { return Rational(p) / Rational(r); }

SparsePoly P(const char* text, std::size_t n) { return parse_poly(text, n); }

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return q(num(rng), den(rng));
}

SparsePoly random_poly(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<unsigned> exp(0, 5);
    std::uniform_int_distribution<int> count(1, 6);
    SparsePoly f(n);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        ExponentVector e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = exp(rng);
        f.add_term(e, random_rational(rng));
    }
    return f;
}

}  // namespace

TEST(Rational, CanonicalForm) {
    const Rational r(mpz_class(6), mpz_class(-4));
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(4).str(), "4");
    EXPECT_EQ(Rational::parse(" -10/4 ").str(), "-5/2");
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
}

TEST(Rational, ParseErrors) {
    EXPECT_THROW(Rational::parse("1/0"), InputError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse("1/"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, FloorRoundsTowardNegativeInfinity) {
    EXPECT_EQ(q(9, 2).floor(), 4);
    EXPECT_EQ(q(-9, 2).floor(), -5);
    EXPECT_EQ(q(11, 1).floor(), 11);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
        }
    }
}

TEST(ExtendedRational, SentinelsOrderAroundFiniteValues) {
    const auto lo = ExtendedRational::neg_infinity();
    const auto hi = ExtendedRational::pos_infinity();
    const ExtendedRational mid = q(-1000000);
    EXPECT_LT(lo, mid);
    EXPECT_LT(mid, hi);
    EXPECT_LT(lo, hi);
    EXPECT_EQ(lo, ExtendedRational::neg_infinity());
    EXPECT_EQ(hi.str(), "inf");
    EXPECT_EQ(lo.str(), "-inf");
    EXPECT_THROW((void)hi.value(), InvariantError);
}

TEST(ParsePoly, SumOfPowers) {
    const SparsePoly f = P("x1^2 + x2^3", 2);
    ASSERT_EQ(f.terms().size(), 2u);
    EXPECT_EQ(f.coefficient({2, 0}), Rational(1));
    EXPECT_EQ(f.coefficient({0, 3}), Rational(1));
}

TEST(ParsePoly, AliasesAndImplicitCoefficients) {
    const SparsePoly f = P("x^2 + 2*x*y^2 + y^4", 2);
    ASSERT_EQ(f.terms().size(), 3u);
    EXPECT_EQ(f.coefficient({2, 0}), Rational(1));
    EXPECT_EQ(f.coefficient({1, 2}), Rational(2));
    EXPECT_EQ(f.coefficient({0, 4}), Rational(1));
}

TEST(ParsePoly, ZeroExponentIsTheUnit) {
    const SparsePoly f = P("x1^0", 1);
    ASSERT_EQ(f.terms().size(), 1u);
    EXPECT_EQ(f.constant_term(), Rational(1));
}

TEST(ParsePoly, RationalCoefficientsAndCancellation) {
    const SparsePoly f = P("-3/4*x*y + 1/4*x*y + 2/3 - x^2 + x^2", 2);
    EXPECT_EQ(f.coefficient({1, 1}), q(-1, 2));
    EXPECT_EQ(f.constant_term(), q(2, 3));
    EXPECT_EQ(f.terms().size(), 2u);
}

TEST(ParsePoly, ZeroPolynomialIsAcceptedAndFlagged) {
    const SparsePoly f = P("x - x", 1);
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(to_string(f), "0");
    EXPECT_THROW(multiplicity(f), ZeroPolynomialError);
    EXPECT_THROW(weighted_multiplicity(f, std::vector<Rational>{1}), ZeroPolynomialError);
}

TEST(ParsePoly, SyntaxErrorsCarryPosition) {
    try {
        (void)P("x^2 + + y", 2);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
    }
    EXPECT_THROW(P("x^", 1), ParseError);
    EXPECT_THROW(P("", 1), ParseError);
    EXPECT_THROW(P("x1 x2", 2), ParseError);
    EXPECT_THROW(P("2/0*x", 1), ParseError);
    EXPECT_THROW(P("w", 1), ParseError);
}

TEST(ParsePoly, VariableOutOfRange) {
    EXPECT_THROW(P("x3", 2), InputError);
    EXPECT_THROW(P("x0", 2), InputError);
    EXPECT_THROW(P("z", 2), InputError);
    EXPECT_THROW(P("x", 4), InputError);  // aliases only for n <= 3
    EXPECT_NO_THROW(P("x4", 4));
}

TEST(ParsePoly, CanonicalPrinter) {
    EXPECT_EQ(to_string(P("y^3 + x^2", 2)), "x1^2 + x2^3");
    EXPECT_EQ(to_string(P("y^2 + x*y + x^2 - 5", 2)), "-5 + x1^2 + x1*x2 + x2^2");
    EXPECT_EQ(to_string(P("-1/2*x1*x3^2 + x2", 3)), "x2 - 1/2*x1*x3^2");
}

TEST(ParsePoly, PrintParseRoundTrip) {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + i % 4;
        const SparsePoly f = random_poly(rng, n);
        const std::string text = to_string(f);
        const SparsePoly g = parse_poly(text, n);
        EXPECT_EQ(f, g) << text;
        EXPECT_EQ(to_string(g), text);
    }
}

TEST(WeightedMultiplicity, Examples) {
    const SparsePoly cusp = P("x^2 + y^3", 2);
    EXPECT_EQ(weighted_multiplicity(cusp, std::vector<Rational>{q(1, 2), q(1, 3)}), Rational(1));
    EXPECT_EQ(weighted_multiplicity(cusp, std::vector<Rational>{1, 1}), Rational(2));
    // min(1 + 1/2, 4 * 1/2)
    EXPECT_EQ(weighted_multiplicity(P("x*y + y^4", 2), std::vector<Rational>{1, q(1, 2)}), q(3, 2));
    EXPECT_THROW(weighted_multiplicity(cusp, std::vector<Rational>{1}), InputError);
}

TEST(Multiplicity, Examples) {
    EXPECT_EQ(multiplicity(P("x^2 + y^3", 2)), 2u);
    EXPECT_EQ(multiplicity(P("5", 2)), 0u);
    EXPECT_EQ(multiplicity(P("x^2*y^3", 2)), 5u);
}

TEST(Multiplicity, EqualsAllOnesWeightedMultiplicity) {
    std::mt19937 rng(3);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + i % 3;
        const SparsePoly f = random_poly(rng, n);
        if (f.is_zero()) continue;
        EXPECT_EQ(weighted_multiplicity(f, std::vector<Rational>(n, Rational(1))), Rational(multiplicity(f)));
    }
}

TEST(Truncate, Examples) {
    const SparsePoly cusp = P("x^2 + y^3", 2);
    EXPECT_EQ(truncate(cusp, 2), P("x^2", 2));
    EXPECT_EQ(truncate(cusp, 3), cusp);
    EXPECT_TRUE(truncate(cusp, 1).is_zero());

    // (y + x^2 + x^3)^2 expanded, then filtered to degree <= 3.
    const SparsePoly base = P("y + x^2 + x^3", 2);
    EXPECT_EQ(truncate(base.pow(2), 3), P("y^2 + 2*x^2*y", 2));
}

TEST(Truncate, IdempotentAndFullDegreeIsIdentity) {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        const SparsePoly f = random_poly(rng, 1 + i % 3);
        const unsigned long d = static_cast<unsigned long>(i % 9);
        EXPECT_EQ(truncate(truncate(f, d), d), truncate(f, d));
        EXPECT_EQ(truncate(f, f.degree()), f);
    }
}

TEST(SparsePoly, ArithmeticAndSubstitution) {
    const SparsePoly f = P("x + y^2", 2);
    EXPECT_EQ(f.pow(2), P("x^2 + 2*x*y^2 + y^4", 2));
    EXPECT_EQ(f * f - f.pow(2), SparsePoly(2));
    // x -> x - y^2 turns (x + y^2)^2 into x^2.
    EXPECT_EQ(f.pow(2).substitute(0, P("x - y^2", 2)), P("x^2", 2));
    EXPECT_EQ(f.pow(0), P("1", 2));
}
