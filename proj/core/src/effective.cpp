#include "pairlab/effective.hpp"

#include "pairlab/error.hpp"

#include <vector>

namespace pairlab {

namespace {

void require_positive(std::span<const Rational> c) {
    if (c.empty()) throw InputError("need at least one c(k)");
    for (const auto& v : c) {
        if (v.sign() <= 0) throw InputError("c(k) must be positive");
    }
}

std::vector<Rational> constant_sequence(std::uint64_t n, const mpz_class& value) {
    return std::vector<Rational>(n, Rational(value));
}

}  // namespace

bool verify_condition_58(std::span<const Rational> c) {
    require_positive(c);
    Rational s;
    for (std::size_t k = 1; k <= c.size(); ++k) s += Rational(k) / c[k - 1];
    return s <= Rational(1);
}

Condition59 verify_condition_59(std::span<const Rational> c) {
    require_positive(c);
    Condition59 r;
    for (std::size_t k = 1; k <= c.size(); ++k) r.majorant += Rational(k + 1) / c[k - 1];
    r.holds = r.majorant <= Rational(1);
    return r;
}

BoundReport fujita_type_bounds(std::uint64_t n) {
    if (n < 1) throw InputError("dimension must be >= 1");
    if (n > (1ULL << 20)) throw InputError("dimension too large");
    const mpz_class free_c = binomial(n + 1, 2);
    const mpz_class separate_c = binomial(n + 2, 2);
    BoundReport r;
    r.n = n;
    r.m_free = free_c.get_ui() + 1;
    r.m_separate = separate_c.get_ui();
    r.free_certified = verify_condition_58(constant_sequence(n, free_c));
    r.separate_certified = verify_condition_59(constant_sequence(n, separate_c)).holds;
    return r;
}

}  // namespace pairlab
