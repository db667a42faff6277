#pragma once

#include "frame.hpp"

namespace frameineq {

/// Renyi entropy of order alpha (nats) of the l2-normalized sequence:
///   R_alpha(a) = ln( sum_n |a_n/||a||_2|^{2 alpha} ) / (1 - alpha).
/// Limit cases: alpha = 0 -> ln ||a||_0 (numerical support), alpha = 1 ->
/// Shannon entropy, alpha = inf -> -2 ln ||a~||_inf. Rejects the zero
/// sequence and alpha < 0.
double renyi_entropy(const CoefficientSeq& a, double alpha);

/// Shannon entropy -sum |a~_n|^2 ln |a~_n|^2 with 0 ln 0 := 0.
double shannon_entropy(const CoefficientSeq& a);

/// Conjugate exponent map beta = alpha (r-2) / (r - 2 alpha) for r in [1,2)
/// and alpha in [r/2, 1]; beta = +inf at alpha = r/2 and beta = 1 at
/// alpha = 1. Out-of-domain parameters are rejected.
double beta_conjugate(double alpha, double r);

}  // namespace frameineq
