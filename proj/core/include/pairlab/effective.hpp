#pragma once

#include "pairlab/rational.hpp"

#include <cstdint>
#include <span>

namespace pairlab {

/// For a smooth projective Y of dimension n and L ample:
/// K_Y + mL is globally generated for m >= m_free = C(n+1, 2) + 1 and
/// separates points for m >= m_separate = C(n+2, 2).
struct BoundReport {
    std::uint64_t n = 0;
    std::uint64_t m_free = 0;
    std::uint64_t m_separate = 0;
    /// sum k/c(k) <= 1 holds for c(k) = C(n+1, 2).
    bool free_certified = false;
    /// The rational majorant of sum 2^{1/k} k/c(k) is <= 1 for c(k) = C(n+2, 2).
    bool separate_certified = false;
};

BoundReport fujita_type_bounds(std::uint64_t n);

/// sum_{k=1}^{n} k / c(k) <= 1, with c indexed from k = 1.
bool verify_condition_58(std::span<const Rational> c);

struct Condition59 {
    bool holds = false;
    /// sum (1 + 1/k) k / c(k), an upper bound for sum 2^{1/k} k / c(k).
    Rational majorant;
};

/// Certifies sum 2^{1/k} k / c(k) <= 1 through 2^{1/k} <= 1 + 1/k. A false
/// `holds` means only that the majorant exceeds 1.
Condition59 verify_condition_59(std::span<const Rational> c);

}  // namespace pairlab
