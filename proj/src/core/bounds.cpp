#include "bounds.hpp"

#include <cmath>
#include <limits>

#include "entropy.hpp"

namespace frameineq {

namespace {

constexpr double kSigmaUnitTol = 1e-10;

struct PairBounds {
    FrameBounds u;
    FrameBounds v;
    double rho() const { return std::sqrt(v.upper / u.lower); }
    double rho_rev() const { return std::sqrt(u.upper / v.lower); }
    double sigma() const { return std::sqrt(u.upper * v.upper / (u.lower * v.lower)); }
};

PairBounds pair_bounds(const Frame& U, const Frame& V) { return {frame_bounds(U), frame_bounds(V)}; }

}  // namespace

BoundConstants bound_constants(const Frame& U, const Frame& V, double r) {
    if (!(r >= 1.0 && r <= 2.0)) fail(Errc::domain, "bound_constants: r must lie in [1,2]");
    const PairBounds pb = pair_bounds(U, V);
    const Frame ud = canonical_dual(U);
    const Frame vd = canonical_dual(V);
    BoundConstants c;
    c.r = r;
    c.rho = pb.rho();
    c.sigma = pb.sigma();
    c.mu_r_uv = coherence_r(ud, V, r);
    c.mu_r_vu = coherence_r(vd, U, r);
    c.nu_r = c.mu_r_uv / std::pow(c.rho, r);
    c.nu_r_vu = c.mu_r_vu / std::pow(pb.rho_rev(), r);
    return c;
}

SupportBound support_bound(const Frame& U, const Frame& V) {
    const MuStarResult ms = mu_star(U, V);
    return {1.0 / (ms.value * ms.value), 2.0 / ms.value, ms.r_opt};
}

SupportBound support_bound_with_duals(const Frame& U, const Frame& Udual, const Frame& V, const Frame& Vdual) {
    const MuStarResult ms = mu_star_with_duals(Udual, V, Vdual, U);
    return {1.0 / (ms.value * ms.value), 2.0 / ms.value, ms.r_opt};
}

KFrameBound k_frame_bound(std::span<const Frame> frames) {
    const std::size_t k = frames.size();
    if (k < 2) fail(Errc::invalid_argument, "k_frame_bound: K >= 2 frames required");
    for (const Frame& f : frames) {
        if (f.dim() != frames[0].dim()) fail(Errc::dimension_mismatch, "k_frame_bound: frames must share dim");
    }
    double log_prod = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const MuStarResult ms = mu_star(frames[i], frames[(i + 1) % k]);
        log_prod += std::log(ms.value);
    }
    return {std::exp(-log_prod), static_cast<double>(k) * std::exp(-log_prod / static_cast<double>(k))};
}

EntropicRhs entropic_rhs(const Frame& U, const Frame& V, double r, double alpha) {
    const double beta = beta_conjugate(alpha, r);  // validates r and alpha
    const BoundConstants c = bound_constants(U, V, r);
    EntropicRhs out;
    out.beta = beta;
    const double log_sigma = std::log(c.sigma);
    if (std::isinf(beta)) {
        out.rhs = -2.0 * std::log(c.nu_r) - 2.0 * r * log_sigma;
    } else if (beta == 1.0) {
        if (c.sigma > 1.0 + kSigmaUnitTol) {
            out.rhs = -std::numeric_limits<double>::infinity();
            out.informative = false;
        } else {
            out.rhs = -2.0 * std::log(c.nu_r);
        }
    } else {
        out.rhs = -2.0 * std::log(c.nu_r) - 2.0 * r * beta / (beta - 1.0) * log_sigma;
    }
    return out;
}

double tight_shannon_bound(const Frame& U, const Frame& V) {
    if (!is_tight(U) || !is_tight(V)) fail(Errc::not_tight, "tight_shannon_bound: both frames must be tight");
    return -2.0 * std::log(mu_star(U, V).value);
}

double lp_bound(const Frame& U, const Frame& V, double p, double r) {
    if (!(r >= 1.0 && r < 2.0)) fail(Errc::domain, "lp_bound: r must lie in [1,2)");
    if (!(p >= r && p <= 2.0)) fail(Errc::domain, "lp_bound: p must lie in [r,2]");
    const BoundConstants c = bound_constants(U, V, r);
    const double mu_exp = 0.5 - 1.0 / p;
    const double sigma_exp = -(1.0 - r / 2.0) * (1.0 + (r - p) / p * (1.0 - r / 2.0));
    return std::pow(c.mu_r_uv * c.mu_r_vu, mu_exp) * std::pow(c.sigma, sigma_exp);
}

double weak_support_bound(const Frame& U, const Frame& V, double r) {
    if (!(r >= 1.0 && r < 2.0)) fail(Errc::domain, "weak_support_bound: r must lie in [1,2)");
    const BoundConstants c = bound_constants(U, V, r);
    return std::pow(c.sigma, -r) / (c.mu_r_uv * c.mu_r_vu);
}

}  // namespace frameineq
