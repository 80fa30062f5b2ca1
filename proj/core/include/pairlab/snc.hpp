#pragma once

#include "pairlab/poly.hpp"
#include "pairlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pairlab {

/// Boundary D = sum d_i D_i on a smooth ambient space with normal crossing
/// support, recorded as coefficients plus the pairs of components that meet.
/// Only pairwise incidence is kept; the closed formulas never look at triples.
class SncPairConfig {
public:
    using Meet = std::pair<std::size_t, std::size_t>;

    SncPairConfig() = default;
    /// Pairs are normalized to (min, max). Throws InputError on self-pairs or
    /// indices out of range.
    SncPairConfig(std::vector<Rational> coeffs, const std::vector<Meet>& meets);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const std::set<Meet>& meets() const noexcept { return meets_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    friend bool operator==(const SncPairConfig&, const SncPairConfig&) = default;

private:
    std::vector<Rational> coeffs_;
    std::set<Meet> meets_;
};

enum class SingKind { Terminal, Canonical, Klt, Plt, Lc, NotLc };

/// Every class the pair belongs to. plt and canonical are incomparable, so
/// `strongest` is only a summary (order: terminal, canonical, klt, plt, lc).
struct SingClass {
    bool is_terminal = false;
    bool is_canonical = false;
    bool is_klt = false;
    bool is_plt = false;
    bool is_lc = false;

    SingKind strongest() const noexcept;
};

const char* to_string(SingKind k) noexcept;

SingClass classify(const SncPairConfig& config);

/// min{1, 1 - d_i, 1 - d_i - d_j : D_i meets D_j}, or -inf once some d_i > 1.
ExtendedRational discrep_snc(const SncPairConfig& config);

/// min{0, -d_i}, or -inf once some d_i > 1.
ExtendedRational totaldiscrep_snc(const SncPairConfig& config);

/// Discrepancy of the toric valuation with positive integer weights `w` over
/// (C^n, sum d_i {x_i = 0} + c (f = 0)):
///   (sum w_i) - 1 - sum d_i w_i - c * w(f).
/// `f` may be the zero polynomial only when c = 0.
Rational monomial_valuation_discrepancy(std::span<const Rational> w,
                                        std::span<const Rational> hyperplane_coeffs,
                                        const Rational& c, const SparsePoly& f);

/// Pulls the boundary back along a degree-r cyclic cover totally ramified
/// over `component`: d becomes r*d - (r - 1). Other data is unchanged.
SncPairConfig cyclic_cover_transform(const SncPairConfig& config, std::size_t component, unsigned r);

/// One divisor on a log resolution. `a` is the discrepancy with the boundary
/// convention where a non-exceptional divisor carries a = -(its coefficient);
/// `b` is the multiplicity of the pulled-back divisor along it.
struct ResolutionEntry {
    Rational a;
    Rational b;
    bool exceptional = true;

    friend bool operator==(const ResolutionEntry&, const ResolutionEntry&) = default;
};

struct ResolutionData {
    std::vector<ResolutionEntry> entries;

    friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

/// Index of the entry minimizing (a + 1)/b over b > 0, if any.
std::optional<std::size_t> lct_minimizing_entry(const ResolutionData& res);

/// min over b > 0 of (a + 1)/b; +inf when every b is 0 (the zero divisor).
/// Exact when the resolution is log smooth, otherwise an upper bound.
ExtendedRational lct_from_resolution(const ResolutionData& res);

// Structured text formats:
//   config:     {"coeffs": ["1/2","1/2"], "meets": [[0,1]]}
//   resolution: {"entries": [{"a":"1","b":"2","exceptional":true}, ...]}
SncPairConfig parse_snc_config(std::string_view json_text);
std::string to_json_text(const SncPairConfig& config);
ResolutionData parse_resolution(std::string_view json_text);
std::string to_json_text(const ResolutionData& res);

}  // namespace pairlab
