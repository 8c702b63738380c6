// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_COMPLEXITY_HPP
#define CHAINCX_COMPLEXITY_HPP

#include <string>
#include <vector>

namespace chaincx {

/// Finite-state machine with a stationary state-occupancy distribution.
/// The blockchain models use two states (mining/broadcasting for PoW,
/// targeting/broadcasting for PoS), but any number of states is accepted.
struct EpsilonMachine {
    std::vector<std::string> states;
    std::vector<double> occupancy; // one probability per state, sums to 1
};

/// Statistical complexity in bits. Always within [0, log2(state count)].
struct ComplexityValue {
    double bits = 0.0;
};

// Occupancy vectors whose sum differs from 1 by at most this are
// renormalized; anything further off is rejected as a caller bug.
inline constexpr double kOccupancyTolerance = 1e-12;

// Below this the (1-p)*log2(1-p) term is evaluated through the Pade
// rearrangement instead of the direct formula, which would round 1-p to 1.
inline constexpr double kSmallProbability = 1e-3;

/// Pade approximant of ln(1-x): -x(6-x)/(6-4x). Domain [0, 1); the
/// approximation is only accurate for x much smaller than 1.
double pade_log1m(double x);

/// -(1-p)*log2(1-p), evaluated without catastrophic rounding for tiny p.
/// Relative error stays below 1e-6 down to p ~ 1e-300.
double stable_one_minus_term(double p);

/// -p*log2(p) with the 0*log(0) = 0 convention (also 0 at p = 1).
double neg_p_log2_p(double p);

/// Entropy of a two-state machine with occupancy (1-p, p), in bits.
/// C = -((1-p)log2(1-p) + p*log2(p)). Finite and exact at p in {0, 1}.
ComplexityValue binary_shannon_entropy(double p);

/// C = -sum_i p_i log2 p_i over the machine's occupancy. Reduces to
/// binary_shannon_entropy bit-for-bit on two-state machines. A state with
/// occupancy above 1/2 has its term computed from the sum of the remaining
/// occupancies, so machines like (1.0, 3.9e-22) keep the tiny complement.
ComplexityValue statistical_complexity(const EpsilonMachine& machine);

} // namespace chaincx

#endif // CHAINCX_COMPLEXITY_HPP
