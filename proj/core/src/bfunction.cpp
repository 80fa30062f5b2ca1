#include "pairlab/bfunction.hpp"

#include "pairlab/error.hpp"
#include "pairlab/lct.hpp"

#include <json.hpp>

#include <numeric>
#include <optional>

namespace pairlab {

std::vector<std::pair<Rational, mpz_class>> SpectrumPoly::terms() const {
    std::vector<std::pair<Rational, mpz_class>> out;
    out.reserve(coeffs.size());
    for (const auto& [k, q] : coeffs) out.emplace_back(exponent(k), q);
    return out;
}

mpz_class SpectrumPoly::multiplicity(const Rational& alpha) const {
    const Rational scaled = alpha * Rational(mpz_class(L));
    if (!scaled.is_integer() || scaled.sign() <= 0) return 0;
    const auto it = coeffs.find(scaled.num().get_ui());
    return it == coeffs.end() ? mpz_class(0) : it->second;
}

mpz_class SpectrumPoly::total_mass() const {
    mpz_class s = 0;
    for (const auto& [k, q] : coeffs) s += q;
    return s;
}

namespace {

// Dense univariate integer polynomial, index = degree.
using UPoly = std::vector<mpz_class>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly multiply(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Exact division by a divisor whose leading coefficient is +-1.
UPoly divide_exact(UPoly num, const UPoly& den) {
    trim(num);
    const mpz_class& lead = den.back();
    if (lead != 1 && lead != -1) throw InvariantError("yano: divisor is not monic up to sign");
    if (num.size() < den.size()) {
        if (!num.empty()) throw InputError("yano product is not a finite sum for these weights");
        return {};
    }
    UPoly q(num.size() - den.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class c = num[k + den.size() - 1] * lead;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw InputError("yano product is not a finite sum for these weights");
    trim(q);
    return q;
}

}  // namespace

SpectrumPoly yano_spectrum(std::span<const Rational> weights) {
    if (weights.empty()) throw InputError("yano spectrum needs at least one weight");
    const Rational half = Rational(1) / Rational(2);
    std::uint64_t L = 1;
    for (const auto& a : weights) {
        if (a.sign() <= 0 || a > half) throw InputError("weights must lie in (0, 1/2], got " + a.str());
        if (!a.den().fits_ulong_p()) throw InputError("weight denominator too large");
        L = std::lcm(L, static_cast<std::uint64_t>(a.den().get_ui()));
        if (L > (1ULL << 20)) throw InputError("common denominator of weights too large");
    }

    // Substitute u = t^{1/L}: the factor for weight k/L is (u^k - u^L) / (1 - u^k).
    UPoly num{1};
    UPoly den{1};
    for (const auto& a : weights) {
        const std::size_t k = (a * Rational(mpz_class(L))).num().get_ui();
        UPoly n(L + 1, 0);
        n[k] = 1;
        n[L] = -1;
        UPoly d(k + 1, 0);
        d[0] = 1;
        d[k] = -1;
        num = multiply(num, n);
        den = multiply(den, d);
    }
    const UPoly q = divide_exact(std::move(num), den);

    SpectrumPoly s;
    s.L = L;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] == 0) continue;
        if (q[k] < 0) throw InputError("yano expansion has a negative coefficient: weights violate the hypotheses");
        s.coeffs.emplace(k, q[k]);
    }
    if (s.coeffs.empty()) throw InputError("yano expansion is empty");
    return s;
}

BPolyRoots reduced_bpoly(const SpectrumPoly& spectrum) {
    if (spectrum.coeffs.empty()) throw InputError("empty spectrum");
    BPolyRoots b;
    for (auto it = spectrum.coeffs.rbegin(); it != spectrum.coeffs.rend(); ++it) {
        b.roots.push_back(-spectrum.exponent(it->first));
    }
    b.reduced = true;
    return b;
}

Rational largest_root_full(const BPolyRoots& b) {
    std::optional<Rational> best;
    if (b.reduced) best = Rational(-1);
    for (const auto& r : b.roots) {
        if (!best || r > *best) best = r;
    }
    if (!best) throw InputError("full b-polynomial without roots");
    return *best;
}

bool check_lct_relation(std::span<const long> exponents) {
    std::vector<Rational> weights;
    for (long m : exponents) {
        if (m < 2) throw InputError("exponents must be >= 2");
        weights.push_back(Rational(m).inverse());
    }
    const Rational root = largest_root_full(reduced_bpoly(yano_spectrum(weights)));
    const ExtendedRational lct = lct_monomial_sum(exponents).value;
    return lct.is_finite() && root == -lct.value();
}

std::set<Rational> candidate_roots(const ResolutionData& res, long e_max) {
    if (e_max < 0) throw InputError("e_max must be >= 0");
    std::set<Rational> out;
    for (std::size_t i = 0; i < res.entries.size(); ++i) {
        const auto& entry = res.entries[i];
        if (entry.b.sign() <= 0) {
            throw InputError("candidate roots need positive multiplicities (entry " + std::to_string(i) + ")");
        }
        for (long e = 0; e <= e_max; ++e) out.insert(-(entry.a + Rational(e)) / entry.b);
    }
    return out;
}

std::string to_json_text(const SpectrumPoly& spectrum) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& [k, q] : spectrum.coeffs) {
        if (!q.fits_ulong_p()) throw InvariantError("spectrum multiplicity too large to serialize");
        doc.push_back({spectrum.exponent(k).str(), q.get_ui()});
    }
    return doc.dump();
}

}  // namespace pairlab
