#pragma once

#include "unc/distribution.hpp"
#include "unc/quantum.hpp"

// Closed forms that circulate with algebra slips, kept so the errata suite can
// show each one disagreeing with the generic construction.
namespace unc::uncorrected {

/// log2(4n^2 / (n+1)^((n+1)/n)) + H(p) + (2/n) sum ((n p_i + 1)/2) log2((n p_i + 1)/2).
/// Exceeds the induced Jensen-Shannon uncertainty by exactly 2 log2 n.
double js_uncertainty(const ProbabilityDistribution& p);

/// 1 - sum p_i^2. Not what the Hellinger distance induces.
double hellinger_uncertainty(const ProbabilityDistribution& p);

/// (1 - n^beta - sum p_i^(1-beta)) / (n^beta (beta - 1)); equals 1/(1-beta) at certain distributions.
double down_tsallis(double beta, const ProbabilityDistribution& p);

/// ((alpha - 1)/alpha) * Renyi_alpha(p): negative for alpha in (0, 1).
double down_renyi_rescaling(double alpha, const ProbabilityDistribution& p);

/// (1/sqrt d)(Tr sqrt rho - 1): half of what the Bures and Hellinger distances induce.
double bures_uncertainty(const DensityMatrix& rho);

/// (1/(1-beta)) (Tr sigma^((1-beta)/2) rho^beta sigma^((1-beta)/2) - 1): the opposite
/// sign of the quantum Tsallis divergence, negative between distinct states.
double gen_tsallis_distance(double beta, const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace unc::uncorrected
