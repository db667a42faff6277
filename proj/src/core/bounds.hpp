#pragma once

#include <span>

#include "coherence.hpp"
#include "frame.hpp"

namespace frameineq {

/// Right-hand-side constants for a frame pair at a given r, with canonical
/// duals:
///   rho   = sqrt(B_V / A_U)
///   sigma = sqrt(B_U B_V / (A_U A_V)) >= 1 (equals 1 iff both frames tight)
///   mu_r_uv = mu_r(Ud, V), mu_r_vu = mu_r(Vd, U)
///   nu_r = mu_r(Ud, V) / rho(U,V)^r, nu_r_vu its mirrored counterpart.
struct BoundConstants {
    double r = 1.0;
    double rho = 0.0;
    double sigma = 0.0;
    double nu_r = 0.0;
    double nu_r_vu = 0.0;
    double mu_r_uv = 0.0;
    double mu_r_vu = 0.0;
};

BoundConstants bound_constants(const Frame& U, const Frame& V, double r);

/// Refined support bound: ||Ux||_0 * ||Vx||_0 >= product = 1/mu*^2 and
/// ||Ux||_0 + ||Vx||_0 >= sum = 2/mu*.
struct SupportBound {
    double product = 0.0;
    double sum = 0.0;
    double r_opt = 1.0;
};

SupportBound support_bound(const Frame& U, const Frame& V);

/// Support bound with caller-supplied dual frames (validated).
SupportBound support_bound_with_duals(const Frame& U, const Frame& Udual, const Frame& V, const Frame& Vdual);

/// Cyclic K-frame extension: product of support sizes >= 1/prod_k mu*_k and
/// their sum >= K * (prod_k mu*_k)^{-1/K}, mu*_k taken over the pair
/// (frame k, frame k+1 mod K).
struct KFrameBound {
    double product = 0.0;
    double sum = 0.0;
};

KFrameBound k_frame_bound(std::span<const Frame> frames);

/// Right-hand side of the entropic inequality
///   (2-r) R_alpha(Ux) + r R_beta(Vx) >= -2 ln nu_r - (2 r beta/(beta-1)) ln sigma,
/// with beta = beta_conjugate(alpha, r). The beta = inf factor is its limit
/// 2r; for beta = 1 (alpha = 1) with sigma > 1 the bound is -inf
/// (non-informative) and is reported as such rather than raised.
struct EntropicRhs {
    double beta = 1.0;
    double rhs = 0.0;
    bool informative = true;  ///< false iff rhs is -inf
};

EntropicRhs entropic_rhs(const Frame& U, const Frame& V, double r, double alpha);

/// Shannon bound for tight frames: S(Ux) + S(Vx) >= -2 ln mu*. Throws
/// not_tight unless both frames are tight within 1e-9.
double tight_shannon_bound(const Frame& U, const Frame& V);

/// Multiplicative constant C in ||Ux||_p ||Vx||_p >= C ||Ux||_2 ||Vx||_2 for
/// p in [r, 2]:
///   C = (mu_r(Ud,V) mu_r(Vd,U))^{1/2 - 1/p} * sigma^{-(1-r/2)(1 + ((r-p)/p)(1-r/2))}.
double lp_bound(const Frame& U, const Frame& V, double p, double r);

/// Weakened support bound sigma^{-r} / (mu_r(Ud,V) mu_r(Vd,U)); coincides
/// with the Theorem-1 bound at the same r iff sigma = 1.
double weak_support_bound(const Frame& U, const Frame& V, double r);

}  // namespace frameineq
