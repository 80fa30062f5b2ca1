#include "pairlab/poly.hpp"

#include "pairlab/error.hpp"

#include <algorithm>
#include <numeric>

namespace pairlab {

unsigned long ExponentVector::degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), 0UL);
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw InvariantError("exponent vectors of different length");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool GradedOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db;
    return b < a;
}

SparsePoly SparsePoly::constant(std::size_t n, const Rational& c) {
    SparsePoly p(n);
    p.add_term(ExponentVector(n), c);
    return p;
}

SparsePoly SparsePoly::monomial(const ExponentVector& e, const Rational& c) {
    SparsePoly p(e.size());
    p.add_term(e, c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t n, std::size_t i) {
    if (i >= n) throw InputError("variable index out of range");
    ExponentVector e(n);
    e[i] = 1;
    return monomial(e);
}

Rational SparsePoly::coefficient(const ExponentVector& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::constant_term() const { return coefficient(ExponentVector(n_)); }

unsigned long SparsePoly::degree() const {
    // GradedOrder puts the highest degree last.
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::vector<ExponentVector> SparsePoly::support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

void SparsePoly::add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != n_) throw InvariantError("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SparsePoly::check_same_ring(const SparsePoly& o) const {
    if (o.n_ != n_) throw InvariantError("polynomials in different variable counts");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_same_ring(b);
    SparsePoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) {
    SparsePoly r(p.n_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : p.terms_) r.terms_.emplace(e, c * v);
    return r;
}

SparsePoly SparsePoly::operator-() const { return Rational(-1) * *this; }

SparsePoly SparsePoly::pow(unsigned k) const {
    SparsePoly result = constant(n_, 1);
    SparsePoly base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

SparsePoly SparsePoly::substitute(std::size_t i, const SparsePoly& value) const {
    if (i >= n_) throw InputError("variable index out of range");
    check_same_ring(value);
    SparsePoly r(n_);
    std::map<unsigned, SparsePoly> powers;
    for (const auto& [e, c] : terms_) {
        const unsigned k = e[i];
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
        ExponentVector rest = e;
        rest[i] = 0;
        r += SparsePoly::monomial(rest, c) * it->second;
    }
    return r;
}

Rational weighted_multiplicity(const SparsePoly& f, std::span<const Rational> w) {
    if (f.is_zero()) throw ZeroPolynomialError();
    if (w.size() != f.nvars()) throw InputError("weight vector length does not match variable count");
    bool first = true;
    Rational best;
    for (const auto& [e, c] : f.terms()) {
        Rational v;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) v += w[i] * Rational(e[i]);
        }
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

unsigned long multiplicity(const SparsePoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    return f.terms().begin()->first.degree();
}

SparsePoly truncate(const SparsePoly& f, unsigned long d) {
    SparsePoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e.degree() > d) break;
        r.add_term(e, c);
    }
    return r;
}

std::string to_string(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            mag = c.abs();
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace pairlab
