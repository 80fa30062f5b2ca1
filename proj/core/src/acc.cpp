#include "pairlab/acc.hpp"

#include "pairlab/error.hpp"

#include <algorithm>
#include <map>

namespace pairlab {

Rational unit_fraction_sum(const std::vector<long>& witness) {
    Rational s;
    for (long b : witness) {
        if (b < 1) throw InputError("unit fraction denominators must be >= 1");
        s += Rational(b).inverse();
    }
    return s;
}

std::vector<mpz_class> sylvester_sequence(int k) {
    if (k < 1 || k > 8) throw InputError("sylvester sequence length must be in [1, 8]");
    std::vector<mpz_class> a{2};
    mpz_class product = 2;
    while (static_cast<int>(a.size()) < k) {
        a.push_back(product + 1);
        product *= a.back();
    }
    return a;
}

Rational delta_prime_candidate(int n) {
    if (n < 1 || n > 7) throw InputError("delta' candidate needs 1 <= n <= 7");
    const auto a = sylvester_sequence(n + 1);
    return Rational(mpz_class(1), a.back() - 1);
}

namespace {

class FnEnumerator {
public:
    FnEnumerator(int n, Rational theta) : n_(n), theta_(std::move(theta)) {}

    std::vector<FnElement> run() {
        std::vector<long> witness;
        descend(n_, 1, Rational(0), witness);
        std::vector<FnElement> out;
        out.reserve(found_.size());
        for (auto it = found_.rbegin(); it != found_.rend(); ++it) out.push_back({it->first, it->second});
        return out;
    }

private:
    void descend(int remaining, long min_b, const Rational& partial, std::vector<long>& witness) {
        if (remaining == 0) {
            if (partial > theta_ && partial <= Rational(1)) found_.try_emplace(partial, witness);
            return;
        }
        if (partial >= Rational(1)) return;
        if (partial >= theta_) {
            throw InputError("F_" + std::to_string(n_) + " ∩ (" + theta_.str() +
                             ", 1] is infinite: theta is at or below an accumulation point");
        }
        // `remaining` terms, each at most 1/b, must push the sum past theta.
        const Rational needed = theta_ - partial;
        const Rational cap = Rational(remaining) / needed;
        // With more terms to come, 1/b must stay below 1 - partial.
        long b = min_b;
        if (remaining > 1) {
            const mpz_class lo = (Rational(1) - partial).inverse().floor() + 1;
            if (lo > b) b = lo.get_si();
        }
        for (; Rational(b) < cap; ++b) {
            witness.push_back(b);
            descend(remaining - 1, b, partial + Rational(b).inverse(), witness);
            witness.pop_back();
        }
    }

    int n_;
    Rational theta_;
    std::map<Rational, std::vector<long>> found_;
};

}  // namespace

std::vector<FnElement> enumerate_fn_above(int n, const Rational& theta) {
    if (n < 1 || n > 4) throw InputError("enumeration supports 1 <= n <= 4");
    if (theta.sign() <= 0 || theta >= Rational(1)) throw InputError("theta must lie in (0, 1)");
    return FnEnumerator(n, theta).run();
}

Rational max_fn_below_one(int n) {
    const Rational candidate = Rational(1) - delta_prime_candidate(n);
    if (n <= 3) {
        const Rational below = n == 1 ? Rational(0) : max_fn_below_one(n - 1);
        const Rational theta = (below + candidate) / Rational(2);
        const auto elements = enumerate_fn_above(n, theta);
        const auto it = std::find_if(elements.begin(), elements.end(),
                                     [](const FnElement& e) { return e.value < Rational(1); });
        if (it == elements.end() || it->value != candidate) {
            throw InvariantError("enumeration disagrees with max F_" + std::to_string(n) + " = " + candidate.str());
        }
    }
    return candidate;
}

ChainConditionError::ChainConditionError(Rational lhs, Rational rhs)
    : InputError("chain is not increasing: limit " + lhs.str() + " must exceed 1/a_n = " + rhs.str()),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

GnChain gn_increasing_chain(const std::vector<long>& a, const std::vector<long>& b_prefix, int K, long first_b) {
    if (a.empty() || b_prefix.size() + 1 != a.size()) throw InputError("need n values of a and n-1 prefix values of b");
    if (K < 2) throw InputError("chain length must be >= 2");
    if (first_b < 1) throw InputError("first b_n must be >= 1");
    for (long x : a) {
        if (x < 1) throw InputError("a_i must be >= 1");
    }
    const Rational inv_sum = unit_fraction_sum(b_prefix);
    Rational ratio_sum;
    for (std::size_t i = 0; i < b_prefix.size(); ++i) ratio_sum += Rational(a[i]) / Rational(b_prefix[i]);
    const Rational limit = inv_sum / (Rational(1) + ratio_sum);
    const Rational last_a = Rational(a.back());
    if (!(limit > last_a.inverse())) throw ChainConditionError(limit, last_a.inverse());

    GnChain chain{{}, limit};
    for (int k = 0; k < K; ++k) {
        const long bn = first_b + k;
        const Rational inv = Rational(bn).inverse();
        GnElement e{(inv_sum + inv) / (Rational(1) + ratio_sum + last_a * inv), a, b_prefix};
        e.b.push_back(bn);
        if (!chain.elements.empty() && !(chain.elements.back().value < e.value)) {
            throw InvariantError("G_n chain failed to increase");
        }
        if (!(e.value < limit)) throw InvariantError("G_n chain reached its limit");
        chain.elements.push_back(std::move(e));
    }
    return chain;
}

AccumulationChain accumulation_witness(int n, const FnElement& target, int K) {
    if (n < 2) throw InputError("accumulation witness needs n >= 2");
    if (K < 1) throw InputError("chain length must be >= 1");
    if (static_cast<int>(target.witness.size()) != n - 1) {
        throw InputError("target witness must have n-1 entries");
    }
    if (unit_fraction_sum(target.witness) != target.value) throw InputError("target witness does not match its value");
    if (target.value >= Rational(1)) throw InputError("target value must be < 1 to leave room for 1/B");

    // ceil(1 / (1 - value))
    const long first_b = -(-(Rational(1) - target.value).inverse()).floor().get_si();
    AccumulationChain chain{{}, first_b, target.value};
    for (int k = 0; k < K; ++k) {
        const long b = first_b + k;
        FnElement e{target.value + Rational(b).inverse(), target.witness};
        e.witness.push_back(b);
        std::sort(e.witness.begin(), e.witness.end());
        if (e.value > Rational(1)) throw InvariantError("accumulation chain left (0, 1]");
        chain.elements.push_back(std::move(e));
    }
    return chain;
}

}  // namespace pairlab
