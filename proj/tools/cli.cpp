#include "cli.hpp"

#include "pairlab/pairlab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace pairlab::cli {

namespace {

using nlohmann::json;

json rationals(std::span<const Rational> v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Largest x<k> index, or the x/y/z alias position; at least 1.
std::size_t infer_nvars(const std::string& text) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            std::size_t k = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                k = k * 10 + static_cast<std::size_t>(text[j] - '0');
                if (k > 4096) throw InputError("variable index too large");
                ++j;
            }
            n = std::max(n, k);
            i = j - 1;
        } else if (c == 'x' || c == 'y' || c == 'z') {
            n = std::max(n, static_cast<std::size_t>(c - 'x') + 1);
        }
    }
    return n;
}

SparsePoly read_poly(const std::string& text, std::size_t nvars, std::ostream& err) {
    SparsePoly f = parse_poly(text, nvars == 0 ? infer_nvars(text) : nvars);
    if (f.is_zero()) err << "warning: input is the zero polynomial\n";
    return f;
}

json threshold_json(const ThresholdResult& r) {
    json j{{"value", r.value.str()}, {"method", to_string(r.method)}, {"status", to_string(r.status)}};
    if (!r.weights.empty()) j["certificate"] = rationals(r.weights);
    if (r.entry) j["entry"] = *r.entry;
    return j;
}

json class_json(const SingClass& c) {
    return json{{"class", to_string(c.strongest())}, {"is_terminal", c.is_terminal},
                {"is_canonical", c.is_canonical},    {"is_klt", c.is_klt},
                {"is_plt", c.is_plt},                {"is_lc", c.is_lc}};
}

json witness_json(const std::vector<long>& w) { return json(w); }

std::string fn_table(const std::vector<FnElement>& elements) {
    std::ostringstream os;
    os << "value\twitness\n";
    for (const auto& e : elements) {
        os << e.value.str() << "\t";
        for (std::size_t i = 0; i < e.witness.size(); ++i) os << (i ? "," : "") << e.witness[i];
        os << "\n";
    }
    return os.str();
}

// Output of one invocation: a JSON document, or preformatted text.
struct Output {
    Output() = default;
    Output(json d) : doc(std::move(d)) {}  // NOLINT(google-explicit-constructor)

    json doc;
    std::string text;
    int code = kOk;
};

class Dispatcher {
public:
    Dispatcher(std::ostream& err) : err_(err) { build(); }

    int run(const std::vector<std::string>& args, std::ostream& out) {
        if (int code = check_command_path(args); code != kOk) return code;
        std::vector<std::string> argv_store{"pairlab"};
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : argv_store) argv.push_back(a.c_str());
        try {
            app_.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app_.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out << app_.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << "\n";
            return kMalformedInput;
        }
        if (!action_) {
            err_ << "error: no command given\n" << app_.help();
            return kUnknownCommand;
        }
        try {
            Output o = action_();
            if (!o.text.empty()) {
                out << o.text;
            } else {
                out << o.doc.dump() << "\n";
            }
            return o.code;
        } catch (const InputError& e) {
            err_ << "error: " << e.what() << "\n";
            return kMalformedInput;
        } catch (const InvariantError& e) {
            err_ << "internal error: " << e.what() << "\n";
            return kInternalError;
        } catch (const std::exception& e) {
            err_ << "internal error: " << e.what() << "\n";
            return kInternalError;
        }
    }

private:
    // Unknown or missing subcommands exit with 2 rather than CLI11's generic parse error.
    int check_command_path(const std::vector<std::string>& args) {
        const CLI::App* cur = &app_;
        for (const auto& tok : args) {
            if (tok == "-h" || tok == "--help" || tok == "--help-all") return kOk;
            if (!tok.empty() && tok[0] == '-') break;
            if (cur->get_subcommands({}).empty()) return kOk;
            const CLI::App* next = cur->get_subcommand_no_throw(tok);
            if (next == nullptr) {
                if (cur->get_require_subcommand_min() == 0) return kOk;
                err_ << "error: unknown command '" << tok << "'\n";
                return kUnknownCommand;
            }
            cur = next;
        }
        if (cur->get_require_subcommand_min() > 0) {
            err_ << "error: missing command\n" << cur->help();
            return kUnknownCommand;
        }
        return kOk;
    }

    template <class F>
    void on(CLI::App* sub, F&& f) {
        sub->callback([this, f = std::forward<F>(f)]() { action_ = f; });
    }

    void build();
    void build_poly();
    void build_lct();
    void build_snc();
    void build_bfun();
    void build_acc();
    void build_bounds();
    Output bounds_report(bool have_dim);

    std::ostream& err_;
    CLI::App app_{"Exact singularity invariants of pairs", "pairlab"};
    std::function<Output()> action_;

    // Option storage, shared across subcommands.
    std::string poly_text_;
    std::string file_;
    std::size_t nvars_ = 0;
    std::vector<std::string> weights_;
    std::vector<std::string> coeffs_;
    std::vector<long> ints_a_;
    std::vector<long> ints_b_;
    long m_ = 0;
    long n_ = 0;
    long d_ = 0;
    long k_ = 0;
    long terms_ = 10;
    long first_b_ = 1;
    std::string r1_;
    std::string r2_;
    std::string r3_;
    std::string r4_;
    bool flag_ = false;
    std::size_t component_ = 0;
    unsigned degree_ = 1;
    std::string format_ = "json";
    std::string dir_;
    std::string form_;
};

void Dispatcher::build() {
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all", "Show help for all subcommands");
    build_poly();
    build_lct();
    build_snc();
    build_bfun();
    build_acc();
    build_bounds();

    auto* corpus = app_.add_subcommand("corpus", "Golden example corpus")->require_subcommand(1);
    auto* verify = corpus->add_subcommand("verify", "Run every golden case and report pass/fail");
    verify->add_option("--dir", dir_, "Corpus directory (default: $PAIRLAB_CORPUS_DIR or the build-time path)");
    on(verify, [this]() {
        std::ostringstream os;
        const int code = verify_corpus(dir_.empty() ? default_corpus_dir() : dir_, os, err_);
        Output o;
        o.text = os.str();
        o.code = code;
        return o;
    });
}

void Dispatcher::build_poly() {
    auto* poly = app_.add_subcommand("poly", "Polynomial utilities")->require_subcommand(1);

    auto* parse = poly->add_subcommand("parse", "Parse and print in canonical form");
    parse->add_option("poly", poly_text_)->required();
    parse->add_option("--nvars", nvars_, "Variable count (default: inferred)");
    on(parse, [this]() {
        const SparsePoly f = read_poly(poly_text_, nvars_, err_);
        json terms = json::array();
        for (const auto& [e, c] : f.terms()) {
            terms.push_back({{"exponent", std::vector<unsigned>(e.entries().begin(), e.entries().end())},
                             {"coeff", c.str()}});
        }
        return Output{json{{"canonical", to_string(f)}, {"nvars", f.nvars()}, {"terms", terms}, {"zero", f.is_zero()}}};
    });

    auto* wmult = poly->add_subcommand("wmult", "Weighted multiplicity min <w, m> over the support");
    wmult->add_option("poly", poly_text_)->required();
    wmult->add_option("--weights", weights_)->required();
    wmult->add_option("--nvars", nvars_);
    on(wmult, [this]() {
        const SparsePoly f = read_poly(poly_text_, nvars_, err_);
        return Output{json{{"weighted_multiplicity", weighted_multiplicity(f, parse_rationals(weights_)).str()}}};
    });

    auto* mult = poly->add_subcommand("mult", "Multiplicity at the origin");
    mult->add_option("poly", poly_text_)->required();
    mult->add_option("--nvars", nvars_);
    on(mult, [this]() {
        return Output{json{{"multiplicity", multiplicity(read_poly(poly_text_, nvars_, err_))}}};
    });

    auto* trunc = poly->add_subcommand("truncate", "Degree <= d part");
    trunc->add_option("poly", poly_text_)->required();
    trunc->add_option("--degree", d_)->required()->check(CLI::NonNegativeNumber);
    trunc->add_option("--nvars", nvars_);
    on(trunc, [this]() {
        const SparsePoly f = read_poly(poly_text_, nvars_, err_);
        return Output{json{{"truncation", to_string(truncate(f, static_cast<unsigned long>(d_)))}}};
    });
}

void Dispatcher::build_lct() {
    auto* lct = app_.add_subcommand("lct", "Log canonical thresholds")->require_subcommand(1);

    auto* newton = lct->add_subcommand("newton", "Newton-polyhedron bound via the exact weight LP");
    newton->add_option("poly", poly_text_)->required();
    newton->add_option("--nvars", nvars_);
    on(newton, [this]() {
        const NewtonBound nb = lct_newton_bound(read_poly(poly_text_, nvars_, err_));
        return Output{json{{"bound", nb.bound.str()},
                           {"certificate", rationals(nb.certificate)},
                           {"exactness", to_string(nb.exactness)}}};
    });

    auto* formula = lct->add_subcommand("formula", "Closed-form thresholds")->require_subcommand(1);

    auto* msum = formula->add_subcommand("monomial-sum", "c0(sum x_i^b_i) = min{1, sum 1/b_i}");
    msum->add_option("--b", ints_b_)->required();
    on(msum, [this]() { return Output{threshold_json(lct_monomial_sum(ints_b_))}; });

    auto* prod = formula->add_subcommand("product-form", "c0((prod x_i^a_i)(sum x_i^b_i))");
    prod->add_option("--a", ints_a_)->required();
    prod->add_option("--b", ints_b_)->required();
    on(prod, [this]() { return Output{threshold_json(lct_product_form(ints_a_, ints_b_))}; });

    auto* weighted = formula->add_subcommand("weighted", "min{1, sum w_i / w(f)}");
    weighted->add_option("poly", poly_text_)->required();
    weighted->add_option("--weights", weights_)->required();
    weighted->add_flag("--nondegenerate", flag_, "Assert an isolated weighted leading part");
    weighted->add_option("--nvars", nvars_);
    on(weighted, [this]() {
        const SparsePoly f = read_poly(poly_text_, nvars_, err_);
        return Output{threshold_json(lct_weighted_homogeneous(f, parse_rationals(weights_), flag_))};
    });

    auto* branch = formula->add_subcommand("branch", "Irreducible plane branch: 1/m + 1/n");
    branch->add_option("--m", m_, "Multiplicity")->required();
    branch->add_option("--n", n_, "Numerator of the first Puiseux exponent n/m")->required();
    on(branch, [this]() { return Output{threshold_json(lct_plane_branch(m_, n_))}; });

    auto* resolution = lct->add_subcommand("resolution", "min (a+1)/b over resolution data");
    resolution->add_option("file", file_)->required();
    on(resolution, [this]() { return Output{threshold_json(lct_resolution(parse_resolution(read_file(file_))))}; });

    auto* cone = lct->add_subcommand("tangent-cone", "Multiplicity bounds 1/d <= c0 <= min{1, n/d}");
    cone->add_option("poly", poly_text_)->required();
    cone->add_flag("--tc-lc", flag_, "Assert (P^{n-1}, (n/d) P(T0 D)) is lc");
    cone->add_option("--nvars", nvars_);
    on(cone, [this]() {
        const auto r = lct_tangent_cone_bounds(read_poly(poly_text_, nvars_, err_), flag_);
        if (const auto* iv = std::get_if<BoundInterval>(&r)) {
            return Output{json{{"lower", iv->lower.str()}, {"upper", iv->upper.str()}}};
        }
        return Output{threshold_json(std::get<ThresholdResult>(r))};
    });

    auto* dsum = lct->add_subcommand("direct-sum", "c0(f(x) + g(y)) = min{1, c0(f) + c0(g)}");
    dsum->add_option("--c1", r1_)->required();
    dsum->add_option("--c2", r2_)->required();
    on(dsum, [this]() {
        return Output{json{{"value", lct_direct_sum(Rational::parse(r1_), Rational::parse(r2_)).str()}}};
    });

    auto* combine = lct->add_subcommand("combine", "Check c0(f+g) <= c0(f)+c0(g) and c0(fg) <= min");
    combine->add_option("--cf", r1_)->required();
    combine->add_option("--cg", r2_)->required();
    combine->add_option("--sum", r3_)->required();
    combine->add_option("--product", r4_)->required();
    on(combine, [this]() {
        const bool holds = check_combination_inequalities(Rational::parse(r1_), Rational::parse(r2_),
                                                          Rational::parse(r3_), Rational::parse(r4_));
        Output o{json{{"holds", holds}}};
        o.code = holds ? kOk : kCheckFailed;
        return o;
    });

    auto* tb = lct->add_subcommand("truncation-bound", "|c0(f) - c0(f_<=d)| <= n/(d+1)");
    tb->add_option("--n", n_)->required();
    tb->add_option("--d", d_)->required();
    on(tb, [this]() { return Output{json{{"bound", truncation_bound(n_, d_).str()}}}; });

    auto* psi = lct->add_subcommand("psi", "Quasiadjunction constant floor(m (c0 + 1))");
    psi->add_option("--c0", r1_)->required();
    psi->add_option("--m", m_)->required();
    on(psi, [this]() {
        return Output{json{{"psi", quasiadjunction_psi(Rational::parse(r1_), m_).get_si()}}};
    });
}

void Dispatcher::build_snc() {
    auto* classify_cmd = app_.add_subcommand("classify", "Singularity classes of an SNC pair");
    classify_cmd->add_option("config", file_)->required();
    on(classify_cmd, [this]() { return Output{class_json(classify(parse_snc_config(read_file(file_))))}; });

    auto* discrep_cmd = app_.add_subcommand("discrep", "discrep and totaldiscrep of an SNC pair");
    discrep_cmd->add_option("config", file_)->required();
    on(discrep_cmd, [this]() {
        const SncPairConfig c = parse_snc_config(read_file(file_));
        return Output{json{{"discrep", discrep_snc(c).str()}, {"totaldiscrep", totaldiscrep_snc(c).str()}}};
    });

    auto* valuation = app_.add_subcommand("valuation", "Discrepancy of a monomial valuation");
    valuation->add_option("--weights", weights_, "Positive integer weights")->required();
    valuation->add_option("--coeffs", coeffs_, "Coefficients of the coordinate hyperplanes (default 0)");
    valuation->add_option("--c", r1_, "Coefficient of (f = 0)");
    valuation->add_option("--poly", poly_text_);
    on(valuation, [this]() {
        const auto w = parse_rationals(weights_);
        std::vector<Rational> d = coeffs_.empty() ? std::vector<Rational>(w.size()) : parse_rationals(coeffs_);
        const Rational c = r1_.empty() ? Rational(0) : Rational::parse(r1_);
        if (!c.is_zero() && poly_text_.empty()) throw InputError("--c needs --poly");
        const SparsePoly f = poly_text_.empty() ? SparsePoly(w.size()) : parse_poly(poly_text_, w.size());
        return Output{json{{"discrepancy", monomial_valuation_discrepancy(w, d, c, f).str()}}};
    });

    auto* cover = app_.add_subcommand("cover", "Boundary pulled back along a cyclic cover");
    cover->add_option("config", file_)->required();
    cover->add_option("--component", component_)->required();
    cover->add_option("--degree", degree_)->required();
    on(cover, [this]() {
        const SncPairConfig c = cyclic_cover_transform(parse_snc_config(read_file(file_)), component_, degree_);
        return Output{json::parse(to_json_text(c))};
    });
}

void Dispatcher::build_bfun() {
    auto* bfun = app_.add_subcommand("bfun", "Bernstein-Sato data")->require_subcommand(1);

    auto* yano = bfun->add_subcommand("yano", "Spectrum and reduced b-function roots from weights");
    yano->add_option("--weights", weights_)->required();
    on(yano, [this]() {
        const SpectrumPoly s = yano_spectrum(parse_rationals(weights_));
        const BPolyRoots b = reduced_bpoly(s);
        return Output{json{{"spectrum", json::parse(to_json_text(s))},
                           {"reduced_roots", rationals(b.roots)},
                           {"largest_root", largest_root_full(b).str()}}};
    });

    auto* check = bfun->add_subcommand("check-lct", "Largest root of b_f vs -lct for sum z_i^m_i");
    check->add_option("--exponents", ints_a_)->required();
    on(check, [this]() {
        std::vector<Rational> w;
        for (long m : ints_a_) {
            if (m < 2) throw InputError("exponents must be >= 2");
            w.push_back(Rational(m).inverse());
        }
        const Rational root = largest_root_full(reduced_bpoly(yano_spectrum(w)));
        const bool holds = check_lct_relation(ints_a_);
        Output o{json{{"holds", holds}, {"largest_root", root.str()},
                      {"lct", lct_monomial_sum(ints_a_).value.str()}}};
        o.code = holds ? kOk : kCheckFailed;
        return o;
    });

    auto* cand = bfun->add_subcommand("candidates", "Candidate roots -(a_i + e)/b_i from resolution data");
    cand->add_option("file", file_)->required();
    cand->add_option("--emax", k_)->required();
    on(cand, [this]() {
        const auto roots = candidate_roots(parse_resolution(read_file(file_)), k_);
        return Output{json{{"candidates", rationals(std::vector<Rational>(roots.begin(), roots.end()))}}};
    });
}

void Dispatcher::build_acc() {
    auto* acc = app_.add_subcommand("acc", "Threshold sets and chain conditions")->require_subcommand(1);

    auto* enumf = acc->add_subcommand("enum-f", "Elements of F_n above theta");
    enumf->add_option("--n", n_)->required();
    enumf->add_option("--theta", r1_)->required();
    enumf->add_option("--format", format_)->check(CLI::IsMember({"json", "table"}));
    on(enumf, [this]() {
        const auto elements = enumerate_fn_above(static_cast<int>(n_), Rational::parse(r1_));
        Output o;
        if (format_ == "table") {
            o.text = fn_table(elements);
            return o;
        }
        json list = json::array();
        for (const auto& e : elements) list.push_back({{"value", e.value.str()}, {"witness", witness_json(e.witness)}});
        o.doc = json{{"elements", list}};
        return o;
    });

    auto* chain = acc->add_subcommand("chain-g", "Strictly increasing chain in G_n");
    chain->add_option("--a", ints_a_)->required();
    chain->add_option("--b", ints_b_, "b_1 .. b_{n-1}");
    chain->add_option("--terms", terms_);
    chain->add_option("--first-b", first_b_);
    chain->add_option("--format", format_)->check(CLI::IsMember({"json", "table"}));
    on(chain, [this]() {
        Output o;
        try {
            const GnChain c = gn_increasing_chain(ints_a_, ints_b_, static_cast<int>(terms_), first_b_);
            if (format_ == "table") {
                std::ostringstream os;
                os << "b_n\tvalue\n";
                for (const auto& e : c.elements) os << e.b.back() << "\t" << e.value.str() << "\n";
                os << "limit\t" << c.limit.str() << "\n";
                o.text = os.str();
                return o;
            }
            json list = json::array();
            for (const auto& e : c.elements) list.push_back({{"b_n", e.b.back()}, {"value", e.value.str()}});
            o.doc = json{{"chain", list}, {"limit", c.limit.str()}};
        } catch (const ChainConditionError& e) {
            err_ << "error: " << e.what() << "\n";
            o.doc = json{{"error", "condition violated"}, {"lhs", e.lhs().str()}, {"rhs", e.rhs().str()}};
            o.code = kMalformedInput;
        }
        return o;
    });

    auto* syl = acc->add_subcommand("sylvester", "a_1 = 2, a_{k+1} = a_1...a_k + 1");
    syl->add_option("--k", k_)->required();
    on(syl, [this]() {
        json seq = json::array();
        for (const auto& a : sylvester_sequence(static_cast<int>(k_))) seq.push_back(a.get_str());
        return Output{json{{"sequence", seq}}};
    });

    auto* delta = acc->add_subcommand("delta", "delta'(n) candidate and max of F_n below 1");
    delta->add_option("--n", n_)->required();
    on(delta, [this]() {
        const int n = static_cast<int>(n_);
        return Output{json{{"delta_prime", delta_prime_candidate(n).str()},
                           {"max_below_one", max_fn_below_one(n).str()}}};
    });

    auto* accum = acc->add_subcommand("accumulate", "Chain in F_n decreasing to an element of F_{n-1}");
    accum->add_option("--witness", ints_b_, "b_1 .. b_{n-1} of the target")->required();
    accum->add_option("--terms", terms_);
    on(accum, [this]() {
        const int n = static_cast<int>(ints_b_.size()) + 1;
        const FnElement target{unit_fraction_sum(ints_b_), ints_b_};
        const AccumulationChain c = accumulation_witness(n, target, static_cast<int>(terms_));
        json list = json::array();
        for (const auto& e : c.elements) list.push_back({{"value", e.value.str()}, {"witness", witness_json(e.witness)}});
        return Output{json{{"chain", list}, {"first_b", c.first_b}, {"limit", c.limit.str()}}};
    });
}

void Dispatcher::build_bounds() {
    auto* bounds = app_.add_subcommand("bounds", "Effective global generation / point separation bounds");
    bounds->add_option("--dim", n_, "Dimension n");
    bounds->add_flag("--certify", flag_, "Include the certifying inequalities");
    auto* check = bounds->add_subcommand("check", "Check sum k/c(k) <= 1 (linear) or sum 2^{1/k} k/c(k) <= 1 (root)");
    check->add_option("--form", form_)->required()->check(CLI::IsMember({"linear", "root"}));
    check->add_option("--c", coeffs_, "c(1) .. c(n)")->required();
    on(check, [this]() {
        const auto c = parse_rationals(coeffs_);
        Output o;
        if (form_ == "linear") {
            const bool holds = verify_condition_58(c);
            o.doc = json{{"holds", holds}};
            o.code = holds ? kOk : kCheckFailed;
            return o;
        }
        const Condition59 r = verify_condition_59(c);
        o.doc = json{{"holds", r.holds}, {"majorant", r.majorant.str()}};
        o.code = r.holds ? kOk : kCheckFailed;
        return o;
    });
    // Parent callbacks run after the subcommand's; keep the `check` action.
    bounds->callback([this, bounds, check]() {
        if (check->parsed()) return;
        action_ = [this, bounds]() { return bounds_report(bounds->count("--dim") != 0); };
    });
}

Output Dispatcher::bounds_report(bool have_dim) {
    if (!have_dim) throw InputError("bounds needs --dim");
    if (n_ < 1) throw InputError("dimension must be >= 1");
    const BoundReport r = fujita_type_bounds(static_cast<std::uint64_t>(n_));
    json j{{"m_free", r.m_free}, {"m_separate", r.m_separate}};
    if (flag_) {
        j["free_certified"] = r.free_certified;
        j["separate_certified"] = r.separate_certified;
    }
    return Output{j};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Dispatcher d(err);
    return d.run(args, out);
}

}  // namespace pairlab::cli
