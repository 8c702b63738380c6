// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "complexity.hpp"

#include <cmath>
#include <cstddef>

#include "errors.hpp"

namespace chaincx {

namespace {

const double kLn2 = std::log(2.0);

bool valid_probability(double p) {
    return std::isfinite(p) && p >= 0.0 && p <= 1.0;
}

} // namespace

double pade_log1m(double x) {
    if (!std::isfinite(x) || x < 0.0 || x >= 1.0)
        throw_domain("pade_log1m: x must lie in [0, 1)");
    return -x * (6.0 - x) / (6.0 - 4.0 * x);
}

double neg_p_log2_p(double p) {
    if (!valid_probability(p))
        throw_domain("neg_p_log2_p: p must lie in [0, 1]");
    if (p == 0.0)
        return 0.0;
    return -p * std::log2(p);
}

double stable_one_minus_term(double p) {
    if (!valid_probability(p))
        throw_domain("stable_one_minus_term: p must lie in [0, 1]");
    if (p == 0.0)
        return 0.0;
    // For p >= 1/2 the subtraction 1-p is exact (Sterbenz), so the term is
    // just -q*log2(q) on the complement.
    if (p >= 0.5)
        return neg_p_log2_p(1.0 - p);
    if (p < kSmallProbability)
        return (1.0 - p) * (-pade_log1m(p)) / kLn2;
    return -(1.0 - p) * std::log2(1.0 - p);
}

ComplexityValue binary_shannon_entropy(double p) {
    if (!valid_probability(p))
        throw_domain("binary_shannon_entropy: p must lie in [0, 1]");
    if (p > 0.5)
        p = 1.0 - p; // exact; makes symmetry hold bit-for-bit
    return ComplexityValue{neg_p_log2_p(p) + stable_one_minus_term(p)};
}

ComplexityValue statistical_complexity(const EpsilonMachine& machine) {
    const std::size_t n = machine.occupancy.size();
    if (n == 0)
        throw_validation("statistical_complexity: machine has no states");
    if (!machine.states.empty() && machine.states.size() != n)
        throw_validation("statistical_complexity: state labels and occupancy sizes differ");

    double sum = 0.0;
    for (double p : machine.occupancy) {
        if (!std::isfinite(p) || p < 0.0)
            throw_validation("statistical_complexity: occupancy entries must be finite and non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kOccupancyTolerance)
        throw_validation("statistical_complexity: occupancy does not sum to 1");

    double bits = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = machine.occupancy[i] / sum;
        if (p <= 0.5) {
            bits += neg_p_log2_p(p);
            continue;
        }
        // Rebuild the complement from the other entries: (1.0, 3.9e-22)
        // would otherwise lose the tiny term to rounding. At most one
        // entry can exceed 1/2.
        double complement = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i)
                complement += machine.occupancy[j] / sum;
        }
        bits += stable_one_minus_term(complement);
    }
    return ComplexityValue{bits};
}

} // namespace chaincx
