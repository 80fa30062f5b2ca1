#include "oracles.hpp"

#include "pairlab/error.hpp"
#include "pairlab/newton_lp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pairlab;
using pairlab::testing::vertex_enum_oracle;

namespace {

Rational q(long p, long r = 1) { return Rational(p) / Rational(r); }

WeightLP lp_of(std::size_t n, std::vector<ExponentVector> support) { return WeightLP{n, std::move(support)}; }

WeightLP random_lp(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<unsigned> exp(0, 6);
    WeightLP lp{dim(rng), {}};
    const int k = count(rng);
    while (static_cast<int>(lp.constraints.size()) < k) {
        ExponentVector m(lp.n);
        for (std::size_t i = 0; i < lp.n; ++i) m[i] = exp(rng);
        if (!m.is_zero()) lp.constraints.push_back(m);
    }
    return lp;
}

Rational dot(const WeightVector& w, const ExponentVector& m) {
    Rational s;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * Rational(m[i]);
    return s;
}

void expect_certified(const WeightLP& lp, const LPResult& r) {
    ASSERT_EQ(r.optimal_w.size(), lp.n);
    Rational sum;
    for (const auto& wi : r.optimal_w) {
        EXPECT_GE(wi, Rational(0));
        sum += wi;
    }
    EXPECT_EQ(sum, r.value);
    for (std::size_t j = 0; j < lp.constraints.size(); ++j) {
        const Rational v = dot(r.optimal_w, lp.constraints[j]);
        EXPECT_GE(v, Rational(1));
        EXPECT_EQ(r.active.contains(j), v == Rational(1)) << "constraint " << j;
    }
}

}  // namespace

TEST(LpMinimize, Examples) {
    const LPResult cusp = lp_minimize(lp_of(2, {{2, 0}, {0, 3}}));
    EXPECT_EQ(cusp.value, q(5, 6));
    EXPECT_EQ(cusp.optimal_w, (WeightVector{q(1, 2), q(1, 3)}));
    EXPECT_EQ(cusp.active, (std::set<std::size_t>{0, 1}));

    for (unsigned d = 1; d <= 9; ++d) {
        const LPResult r = lp_minimize(lp_of(1, {{d}}));
        EXPECT_EQ(r.value, q(1, d));
        EXPECT_EQ(r.optimal_w, WeightVector{q(1, d)});
    }

    const LPResult quad = lp_minimize(lp_of(2, {{2, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(quad.value, q(1));
    EXPECT_EQ(quad.optimal_w, (WeightVector{q(1, 2), q(1, 2)}));
    expect_certified(lp_of(2, {{2, 0}, {1, 1}, {0, 2}}), quad);
}

TEST(LpMinimize, ZeroConstraintIsInfeasible) {
    EXPECT_THROW(lp_minimize(lp_of(2, {{1, 0}, {0, 0}})), InputError);
}

TEST(VertexOracle, Examples) {
    EXPECT_EQ(vertex_enum_oracle(lp_of(2, {{2, 0}, {0, 3}})).value, q(5, 6));
    // f = x + y: the LP value is 2; only the capped bound is 1.
    EXPECT_EQ(vertex_enum_oracle(lp_of(2, {{1, 0}, {0, 1}})).value, q(2));
    // f = x^3 + xy + y^3: the xy constraint alone forces w1 + w2 >= 1.
    const LPResult r = vertex_enum_oracle(lp_of(2, {{3, 0}, {1, 1}, {0, 3}}));
    EXPECT_EQ(r.value, q(1));
    EXPECT_EQ(lp_minimize(lp_of(2, {{3, 0}, {1, 1}, {0, 3}})).value, q(1));
    EXPECT_THROW(vertex_enum_oracle(lp_of(4, {{1, 1, 1, 1}})), InputError);
}

TEST(LpMinimize, MatchesVertexOracleOnRandomSupports) {
    std::mt19937 rng(2024);
    for (int it = 0; it < 300; ++it) {
        const WeightLP lp = random_lp(rng);
        const LPResult r = lp_minimize(lp);
        ASSERT_EQ(r.value, vertex_enum_oracle(lp).value);
        expect_certified(lp, r);
    }
}

TEST(LpMinimize, ScalingSupportDividesValue) {
    std::mt19937 rng(99);
    for (int it = 0; it < 100; ++it) {
        const WeightLP lp = random_lp(rng);
        const Rational base = lp_minimize(lp).value;
        for (unsigned k = 2; k <= 4; ++k) {
            WeightLP scaled = lp;
            for (auto& m : scaled.constraints)
                for (std::size_t i = 0; i < m.size(); ++i) m[i] *= k;
            ASSERT_EQ(lp_minimize(scaled).value * Rational(k), base);
        }
    }
}

TEST(WeightLpFor, RejectsZeroAndUnits) {
    EXPECT_THROW(weight_lp_for(SparsePoly(2)), ZeroPolynomialError);
    EXPECT_THROW(weight_lp_for(parse_poly("1 + x", 2)), UnitAtOriginError);
    EXPECT_THROW(lct_newton_bound(parse_poly("3", 1)), UnitAtOriginError);
    const WeightLP lp = weight_lp_for(parse_poly("x^2 + y^3", 2));
    EXPECT_EQ(lp.n, 2u);
    EXPECT_EQ(lp.constraints, (std::vector<ExponentVector>{{2, 0}, {0, 3}}));
}

TEST(NewtonBound, Examples) {
    const NewtonBound cusp = lct_newton_bound(parse_poly("x^2 + y^3", 2));
    EXPECT_EQ(cusp.bound, q(5, 6));
    EXPECT_EQ(cusp.certificate, (WeightVector{q(1, 2), q(1, 3)}));
    EXPECT_EQ(cusp.exactness, Exactness::ExactIfNondegenerate);
    EXPECT_STREQ(to_string(cusp.exactness), "EXACT_IF_NONDEGENERATE");

    EXPECT_EQ(lct_newton_bound(parse_poly("x^2*y^3", 2)).bound, q(1, 3));
    EXPECT_EQ(lct_newton_bound(parse_poly("x + y", 2)).bound, q(1));
    EXPECT_EQ(lct_newton_bound(parse_poly("x^2 + y^2 + z^2", 3)).bound, q(1));
}

TEST(NewtonBound, DegenerateSquareExceedsThreshold) {
    // (x + y^2)^2 has c0 = 1/2, but its Newton polygon only sees the three
    // monomials, all tight at w = (1/2, 1/4).
    const NewtonBound b = lct_newton_bound(parse_poly("x^2 + 2*x*y^2 + y^4", 2));
    EXPECT_EQ(b.bound, q(3, 4));
    EXPECT_EQ(b.certificate, (WeightVector{q(1, 2), q(1, 4)}));
    EXPECT_GT(b.bound, q(1, 2));
}

TEST(NewtonBound, WithinTangentConeBounds) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int it = 0; it < 200; ++it) {
        const WeightLP lp = random_lp(rng);
        SparsePoly f(lp.n);
        for (const auto& m : lp.constraints) {
            const int c = coeff(rng);
            f.add_term(m, Rational(c == 0 ? 1 : c));
        }
        if (f.is_zero()) continue;
        const Rational d(multiplicity(f));
        const NewtonBound b = lct_newton_bound(f);
        ASSERT_GT(b.bound, Rational(0));
        ASSERT_LE(b.bound, Rational(1));
        ASSERT_GE(b.bound, Rational(1) / d) << to_string(f);
        ASSERT_LE(b.bound, min(Rational(1), Rational(static_cast<long>(lp.n)) / d)) << to_string(f);
    }
}

TEST(NewtonBound, MonomialSumsMatchClosedForm) {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<long> b(n, 2);
        while (true) {
            SparsePoly f(n);
            Rational s;
            for (std::size_t i = 0; i < n; ++i) {
                ExponentVector e(n);
                e[i] = static_cast<unsigned>(b[i]);
                f.add_term(e, 1);
                s += Rational(1) / Rational(b[i]);
            }
            ASSERT_EQ(lct_newton_bound(f).bound, min(Rational(1), s)) << to_string(f);
            std::size_t i = 0;
            while (i < n && b[i] == 6) b[i++] = 2;
            if (i == n) break;
            ++b[i];
        }
    }
}
