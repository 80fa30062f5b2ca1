#include "pairlab/snc.hpp"

#include "pairlab/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace pairlab {

SncPairConfig::SncPairConfig(std::vector<Rational> coeffs, const std::vector<Meet>& meets)
    : coeffs_(std::move(coeffs)) {
    for (auto [i, j] : meets) {
        if (i == j) throw InputError("self-intersection pair {" + std::to_string(i) + "," + std::to_string(i) + "}");
        if (i >= coeffs_.size() || j >= coeffs_.size()) {
            throw InputError("meet index out of range: {" + std::to_string(i) + "," + std::to_string(j) + "}");
        }
        meets_.emplace(std::min(i, j), std::max(i, j));
    }
}

SingKind SingClass::strongest() const noexcept {
    if (is_terminal) return SingKind::Terminal;
    if (is_canonical) return SingKind::Canonical;
    if (is_klt) return SingKind::Klt;
    if (is_plt) return SingKind::Plt;
    if (is_lc) return SingKind::Lc;
    return SingKind::NotLc;
}

const char* to_string(SingKind k) noexcept {
    switch (k) {
        case SingKind::Terminal: return "TERMINAL";
        case SingKind::Canonical: return "CANONICAL";
        case SingKind::Klt: return "KLT";
        case SingKind::Plt: return "PLT";
        case SingKind::Lc: return "LC";
        case SingKind::NotLc: return "NOT_LC";
    }
    return "NOT_LC";
}

SingClass classify(const SncPairConfig& config) {
    const Rational one(1);
    const Rational two(2);
    const auto& d = config.coeffs();

    bool all_lt_one = true;
    bool all_le_one = true;
    for (const auto& di : d) {
        all_lt_one = all_lt_one && di < one;
        all_le_one = all_le_one && di <= one;
    }
    bool pairs_lt_one = true;
    bool pairs_le_one = true;
    bool pairs_lt_two = true;
    for (auto [i, j] : config.meets()) {
        const Rational s = d[i] + d[j];
        pairs_lt_one = pairs_lt_one && s < one;
        pairs_le_one = pairs_le_one && s <= one;
        pairs_lt_two = pairs_lt_two && s < two;
    }

    SingClass c;
    c.is_terminal = all_lt_one && pairs_lt_one;
    c.is_canonical = all_le_one && pairs_le_one;
    c.is_klt = all_lt_one;
    c.is_plt = all_le_one && pairs_lt_two;
    c.is_lc = all_le_one;
    return c;
}

namespace {

bool has_coefficient_above_one(const SncPairConfig& config) {
    return std::any_of(config.coeffs().begin(), config.coeffs().end(),
                       [](const Rational& d) { return d > Rational(1); });
}

}  // namespace

ExtendedRational discrep_snc(const SncPairConfig& config) {
    if (has_coefficient_above_one(config)) return ExtendedRational::neg_infinity();
    const auto& d = config.coeffs();
    Rational best(1);
    for (const auto& di : d) best = min(best, Rational(1) - di);
    for (auto [i, j] : config.meets()) best = min(best, Rational(1) - d[i] - d[j]);
    return best;
}

ExtendedRational totaldiscrep_snc(const SncPairConfig& config) {
    if (has_coefficient_above_one(config)) return ExtendedRational::neg_infinity();
    Rational best(0);
    for (const auto& di : config.coeffs()) best = min(best, -di);
    return best;
}

Rational monomial_valuation_discrepancy(std::span<const Rational> w,
                                        std::span<const Rational> hyperplane_coeffs,
                                        const Rational& c, const SparsePoly& f) {
    if (hyperplane_coeffs.size() != w.size()) {
        throw InputError("hyperplane coefficient count must match the weight vector");
    }
    bool any_positive = false;
    for (const auto& wi : w) {
        if (wi.sign() < 0 || !wi.is_integer()) throw InputError("valuation weights must be nonnegative integers");
        any_positive = any_positive || wi.sign() > 0;
    }
    if (!any_positive) throw InputError("valuation weight vector is zero");

    Rational a(-1);
    for (std::size_t i = 0; i < w.size(); ++i) a += w[i] - hyperplane_coeffs[i] * w[i];
    if (!c.is_zero()) {
        if (f.nvars() != w.size()) throw InputError("polynomial variable count must match the weight vector");
        a -= c * weighted_multiplicity(f, w);
    }
    return a;
}

SncPairConfig cyclic_cover_transform(const SncPairConfig& config, std::size_t component, unsigned r) {
    if (component >= config.size()) throw InputError("cover component index out of range");
    if (r == 0) throw InputError("cover degree must be positive");
    std::vector<Rational> coeffs = config.coeffs();
    coeffs[component] = Rational(r) * coeffs[component] - Rational(r - 1);
    const std::vector<SncPairConfig::Meet> meets(config.meets().begin(), config.meets().end());
    return SncPairConfig(std::move(coeffs), meets);
}

std::optional<std::size_t> lct_minimizing_entry(const ResolutionData& res) {
    if (res.entries.empty()) throw InputError("resolution data has no entries");
    std::optional<std::size_t> best;
    Rational best_value;
    for (std::size_t i = 0; i < res.entries.size(); ++i) {
        const auto& e = res.entries[i];
        if (e.b.sign() < 0) throw InputError("negative pullback multiplicity in resolution entry " + std::to_string(i));
        if (e.b.is_zero()) continue;
        const Rational v = (e.a + Rational(1)) / e.b;
        if (!best || v < best_value) {
            best = i;
            best_value = v;
        }
    }
    return best;
}

ExtendedRational lct_from_resolution(const ResolutionData& res) {
    const auto best = lct_minimizing_entry(res);
    if (!best) return ExtendedRational::pos_infinity();
    const auto& e = res.entries[*best];
    return (e.a + Rational(1)) / e.b;
}

namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
}

Rational rational_field(const json& v, const char* what) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw InputError(std::string(what) + " must be an exact rational string \"p/q\" or an integer");
}

}  // namespace

SncPairConfig parse_snc_config(std::string_view json_text) {
    const json doc = parse_document(json_text);
    if (!doc.is_object() || !doc.contains("coeffs") || !doc.at("coeffs").is_array()) {
        throw InputError("config document needs a \"coeffs\" array");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : doc.at("coeffs")) coeffs.push_back(rational_field(c, "coefficient"));
    std::vector<SncPairConfig::Meet> meets;
    if (doc.contains("meets")) {
        if (!doc.at("meets").is_array()) throw InputError("\"meets\" must be an array of index pairs");
        for (const auto& m : doc.at("meets")) {
            if (!m.is_array() || m.size() != 2 || !m[0].is_number_unsigned() || !m[1].is_number_unsigned()) {
                throw InputError("each meet must be a pair of nonnegative indices");
            }
            meets.emplace_back(m[0].get<std::size_t>(), m[1].get<std::size_t>());
        }
    }
    return SncPairConfig(std::move(coeffs), meets);
}

std::string to_json_text(const SncPairConfig& config) {
    json doc;
    doc["coeffs"] = json::array();
    for (const auto& c : config.coeffs()) doc["coeffs"].push_back(c.str());
    doc["meets"] = json::array();
    for (auto [i, j] : config.meets()) doc["meets"].push_back({i, j});
    return doc.dump();
}

ResolutionData parse_resolution(std::string_view json_text) {
    const json doc = parse_document(json_text);
    if (!doc.is_object() || !doc.contains("entries") || !doc.at("entries").is_array()) {
        throw InputError("resolution document needs an \"entries\" array");
    }
    ResolutionData res;
    for (const auto& e : doc.at("entries")) {
        if (!e.is_object() || !e.contains("a") || !e.contains("b")) {
            throw InputError("each resolution entry needs \"a\" and \"b\"");
        }
        ResolutionEntry entry{rational_field(e.at("a"), "a"), rational_field(e.at("b"), "b"), true};
        if (e.contains("exceptional")) {
            if (!e.at("exceptional").is_boolean()) throw InputError("\"exceptional\" must be a boolean");
            entry.exceptional = e.at("exceptional").get<bool>();
        }
        res.entries.push_back(std::move(entry));
    }
    return res;
}

std::string to_json_text(const ResolutionData& res) {
    json doc;
    doc["entries"] = json::array();
    for (const auto& e : res.entries) {
        doc["entries"].push_back({{"a", e.a.str()}, {"b", e.b.str()}, {"exceptional", e.exceptional}});
    }
    return doc.dump();
}

}  // namespace pairlab
