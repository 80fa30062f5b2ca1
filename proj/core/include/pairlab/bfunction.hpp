#pragma once

#include "pairlab/rational.hpp"
#include "pairlab/snc.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace pairlab {

/// sum q_alpha t^alpha with every alpha = k / L.
struct SpectrumPoly {
    std::uint64_t L = 1;
    /// k -> q_{k/L}, all positive.
    std::map<std::uint64_t, mpz_class> coeffs;

    Rational exponent(std::uint64_t k) const { return Rational(mpz_class(k), mpz_class(L)); }
    /// (alpha, q_alpha) in ascending alpha.
    std::vector<std::pair<Rational, mpz_class>> terms() const;
    /// q_alpha, or 0 when alpha is not an exponent.
    mpz_class multiplicity(const Rational& alpha) const;
    mpz_class total_mass() const;
};

/// Roots of the (reduced or full) Bernstein-Sato polynomial, ascending.
struct BPolyRoots {
    std::vector<Rational> roots;
    bool reduced = true;
};

/// Expands prod_i (t^{a_i} - t) / (1 - t^{a_i}) for a weighted homogeneous
/// isolated singularity of degree 1 with weights a_i in (0, 1/2].
/// Throws InputError when the quotient is not a polynomial with nonnegative
/// coefficients, which means the weights violate those hypotheses.
SpectrumPoly yano_spectrum(std::span<const Rational> weights);

/// prod over distinct exponents alpha of (s + alpha).
BPolyRoots reduced_bpoly(const SpectrumPoly& spectrum);

/// Largest root of b_f = (s + 1) * reduced b_f.
Rational largest_root_full(const BPolyRoots& b);

/// Largest root of b_f for sum z_i^{m_i} equals -min{1, sum 1/m_i}.
bool check_lct_relation(std::span<const long> exponents);

/// { -(a_i + e) / b_i : entries i, 0 <= e <= e_max }. Every root of b_f has
/// this form for some e when the entries come from a log resolution (with
/// the strict transform included as a = 0, b = 1).
std::set<Rational> candidate_roots(const ResolutionData& res, long e_max);

/// [["p/q", multiplicity], ...] with ascending exponents.
std::string to_json_text(const SpectrumPoly& spectrum);

}  // namespace pairlab
