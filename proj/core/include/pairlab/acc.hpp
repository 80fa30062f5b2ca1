#pragma once

#include "pairlab/error.hpp"
#include "pairlab/rational.hpp"

#include <cstddef>
#include <vector>

namespace pairlab {

/// An element sum 1/b_i of F_n = { sum_{i=1}^n 1/b_i : b_i >= 1 } ∩ (0, 1].
/// The witness is kept sorted ascending.
struct FnElement {
    Rational value;
    std::vector<long> witness;
};

/// (sum 1/b_i) / (1 + sum a_i/b_i), an element of G_n.
struct GnElement {
    Rational value;
    std::vector<long> a;
    std::vector<long> b;
};

/// sum 1/b_i for a witness; throws on entries < 1.
Rational unit_fraction_sum(const std::vector<long>& witness);

/// a_1 = 2, a_{k+1} = a_1 ... a_k + 1, for 1 <= k <= 8.
std::vector<mpz_class> sylvester_sequence(int k);

/// 1/(a_{n+1} - 1), the conjectural delta'(n), for 1 <= n <= 7.
Rational delta_prime_candidate(int n);

/// Every element of F_n ∩ (theta, 1], one canonical witness each, sorted
/// descending. 1 <= n <= 4 and 0 < theta < 1. The set is finite only when
/// theta lies above every accumulation point below 1; otherwise InputError.
std::vector<FnElement> enumerate_fn_above(int n, const Rational& theta);

/// Largest element of F_n ∩ [0, 1): 1 - 1/(a_{n+1} - 1), for 1 <= n <= 7.
/// For n <= 3 the value is also confirmed by enumeration.
Rational max_fn_below_one(int n);

/// Raised when the increasing-chain condition fails; carries both sides of
///   (sum_{i<n} 1/b_i) / (1 + sum_{i<n} a_i/b_i) > 1/a_n.
class ChainConditionError : public InputError {
public:
    ChainConditionError(Rational lhs, Rational rhs);
    const Rational& lhs() const noexcept { return lhs_; }
    const Rational& rhs() const noexcept { return rhs_; }

private:
    Rational lhs_;
    Rational rhs_;
};

struct GnChain {
    std::vector<GnElement> elements;
    /// Limit of the chain as b_n grows.
    Rational limit;
};

/// Fixes a and b_1..b_{n-1} and runs b_n = first_b, first_b + 1, ... for K
/// terms. The values increase strictly towards `limit`, so G_n has no ACC.
GnChain gn_increasing_chain(const std::vector<long>& a, const std::vector<long>& b_prefix, int K,
                            long first_b = 1);

struct AccumulationChain {
    std::vector<FnElement> elements;
    long first_b = 0;
    /// The target value, recovered by dropping the 1/B term.
    Rational limit;
};

/// target + 1/B for B = B0, B0 + 1, ... (K terms), B0 minimal with the sum
/// <= 1: a strictly decreasing sequence in F_n converging to target.value.
/// `target` must be an element of F_{n-1} with value < 1.
AccumulationChain accumulation_witness(int n, const FnElement& target, int K);

}  // namespace pairlab
