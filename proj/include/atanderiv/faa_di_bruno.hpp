#pragma once

/**
 * @file faa_di_bruno.hpp
 * @brief Higher-order chain rule for f(g(x)), generic and specialized to
 *        g(x) = a + x^2.
 */

#include <vector>

#include "atanderiv/exact.hpp"

namespace atanderiv {

/// Multiplicities (l_1, ..., l_n) with sum_i i * l_i = n.  Entry j holds l_{j+1}.
struct PartitionVector {
    std::vector<unsigned> multiplicities;

    unsigned order() const { return static_cast<unsigned>(multiplicities.size()); }
    /// l_1 + ... + l_n, the derivative order of the outer function.
    unsigned block_count() const;
    /// sum_i i * l_i
    unsigned weight() const;

    friend bool operator==(PartitionVector const&, PartitionVector const&) = default;
    friend auto operator<=>(PartitionVector const&, PartitionVector const&) = default;
};

/// Values f(point), f'(point), ..., f^(n)(point).
struct DerivativeJet {
    BigRational point;
    std::vector<BigRational> values;

    /// Highest derivative order present (values.size() - 1).
    long order() const { return static_cast<long>(values.size()) - 1; }
};

/// Every partition vector of n, lexicographically ascending in (l_1, ..., l_n).
/// Requires n >= 1.
std::vector<PartitionVector> enumerate_partitions(unsigned n);

/**
 * n-th derivative of f o g at x0, summed over all partition vectors of n:
 *
 *   sum  n! / (l_1! ... l_n!) * f^(l_1+...+l_n)(g(x0)) * prod_i (g^(i)(x0) / i!)^l_i
 *
 * g_jet is taken at x0 and f_jet at g(x0); both need order >= n and
 * f_jet.point must equal g_jet.values[0].  Violations throw std::invalid_argument.
 */
BigRational faa_di_bruno(unsigned n, DerivativeJet const& f_jet, DerivativeJet const& g_jet);

/**
 * n-th derivative of h(x) = f(a + x^2):
 *
 *   sum_{k=0}^{n/2} n! / (k! (n-2k)!) * (2x)^(n-2k) * f^(n-k)(a + x^2)
 *
 * f_jet is the jet at a + x^2; only its order is checked (a is implicit).
 */
BigRational special_chain_rule(unsigned n, BigRational const& x, DerivativeJet const& f_jet);

/// Closed-form coefficient n! / (k! (n-2k)!) of (2x)^(n-2k) f^(n-k).
BigInt special_chain_coefficient(unsigned n, unsigned k);

/**
 * Coefficients c_0..c_{n/2} of (2x)^(n-2k) f^(n-k) in h^(n), built only by
 * differentiating the order-(n-1) expression term by term, starting from
 * h' = (2x) f' at n = 1.  The derivative of (2x)^(n-2k) moves
 * 2 (n-2k) c_k into slot k+1; the derivative of f^(n-k) keeps c_k in slot k.
 */
std::vector<BigRational> recurrence_coefficients(unsigned n);

}  // namespace atanderiv
