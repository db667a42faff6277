#include "coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace frameineq {

namespace {

/// Golden-section refinement of f over [a, b]; returns the best point probed.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, double dr_tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > dr_tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

RMat abs_gram_of(const Frame& A, const Frame& B) { return cross_gram(A, B).cwiseAbs(); }

MuStarResult minimize_geomean(const RMat& g_uv, const RMat& g_vu) {
    const auto f = [&](double r) { return std::sqrt(coherence_r_abs(g_uv, r) * coherence_r_abs(g_vu, r)); };
    constexpr int kGridPoints = 201;
    double best_r = 1.0;
    double best_v = f(1.0);
    for (int i = 1; i < kGridPoints; ++i) {
        const double r = 1.0 + static_cast<double>(i) / (kGridPoints - 1);
        const double v = f(r);
        if (v < best_v) {
            best_v = v;
            best_r = r;
        }
    }
    const double cell = 1.0 / (kGridPoints - 1);
    const double lo = std::max(1.0, best_r - cell);
    const double hi = std::min(2.0, best_r + cell);
    const auto [r_ref, v_ref] = golden_min(f, lo, hi, 1e-6);
    if (v_ref < best_v) return {v_ref, r_ref};
    return {best_v, best_r};
}

}  // namespace

CMat cross_gram(const Frame& U, const Frame& V) {
    if (U.dim() != V.dim()) fail(Errc::dimension_mismatch, "cross_gram: frames must share dim");
    return U.vectors() * V.vectors().adjoint();
}

double coherence_r_abs(const RMat& abs_gram, double r) {
    if (!(r >= 1.0 && r <= 2.0)) fail(Errc::domain, "coherence_r: r must lie in [1,2]");
    if (r == 1.0) return abs_gram.maxCoeff();
    const double rp = r / (r - 1.0);
    double best = 0.0;
    for (Index l = 0; l < abs_gram.cols(); ++l) {
        const double m = abs_gram.col(l).maxCoeff();
        if (!(m > 0.0)) continue;
        // (sum |g|^{r'})^{r/r'} = m^r * (sum (|g|/m)^{r'})^{r-1}; the scaled
        // form avoids underflow for r close to 1 (huge r').
        double s = 0.0;
        for (Index k = 0; k < abs_gram.rows(); ++k) {
            const double t = abs_gram(k, l) / m;
            if (t > 0.0) s += std::pow(t, rp);
        }
        best = std::max(best, std::pow(m, r) * std::pow(s, r - 1.0));
    }
    return best;
}

double coherence_r(const Frame& U, const Frame& V, double r) { return coherence_r_abs(abs_gram_of(U, V), r); }

MuStarResult mu_star(const Frame& U, const Frame& V) {
    const Frame ud = canonical_dual(U);
    const Frame vd = canonical_dual(V);
    return minimize_geomean(abs_gram_of(ud, V), abs_gram_of(vd, U));
}

MuStarResult mu_star_with_duals(const Frame& Udual, const Frame& V, const Frame& Vdual, const Frame& U) {
    if (!is_dual_pair(U, Udual) || !is_dual_pair(V, Vdual))
        fail(Errc::invalid_argument, "mu_star_with_duals: supplied frames fail the dual reconstruction identity");
    return minimize_geomean(abs_gram_of(Udual, V), abs_gram_of(Vdual, U));
}

CoherenceCurve coherence_curve(const Frame& U, const Frame& V, double r_min, double r_max, int count) {
    if (!(r_min >= 1.0 && r_max <= 2.0 && r_min <= r_max)) fail(Errc::domain, "coherence_curve: grid must lie in [1,2]");
    if (count < 1) fail(Errc::invalid_argument, "coherence_curve: count >= 1 required");
    const Frame ud = canonical_dual(U);
    const Frame vd = canonical_dual(V);
    const RMat g_uv = abs_gram_of(ud, V);
    const RMat g_vu = abs_gram_of(vd, U);

    CoherenceCurve curve;
    curve.r_grid.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double r = count == 1 ? r_min : r_min + (r_max - r_min) * static_cast<double>(i) / (count - 1);
        const double a = coherence_r_abs(g_uv, r);
        const double b = coherence_r_abs(g_vu, r);
        curve.r_grid.push_back(r);
        curve.mu_uv.push_back(a);
        curve.mu_vu.push_back(b);
        curve.geomean.push_back(std::sqrt(a * b));
    }
    const MuStarResult ms = minimize_geomean(g_uv, g_vu);
    curve.mu_star_value = ms.value;
    curve.r_opt = ms.r_opt;
    return curve;
}

PropMurReport prop_mur_condition(const Frame& U, const Frame& V, double tie_tol) {
    if (!(tie_tol > 0.0)) fail(Errc::invalid_argument, "prop_mur_condition: tie_tol > 0 required");
    const RMat g = abs_gram_of(U, V);
    PropMurReport report;
    report.s.resize(g.cols());
    report.n.resize(g.cols());
    for (Index l = 0; l < g.cols(); ++l) {
        const double s = g.col(l).maxCoeff();
        Index ties = 0;
        for (Index k = 0; k < g.rows(); ++k) {
            if (g(k, l) >= s * (1.0 - tie_tol)) ++ties;
        }
        report.s[l] = s;
        report.n[l] = ties;
        report.max_nl_sl = std::max(report.max_nl_sl, static_cast<double>(ties) * s);
    }
    report.predicted_improvement = report.max_nl_sl < 1.0;
    return report;
}

double slope_at_two(const Frame& U, const Frame& V) {
    const RMat g = abs_gram_of(U, V);
    double min_entropy = std::numeric_limits<double>::infinity();
    for (Index l = 0; l < g.cols(); ++l) {
        double e = 0.0;
        for (Index k = 0; k < g.rows(); ++k) {
            const double p = g(k, l) * g(k, l);
            if (p > 0.0) e -= p * std::log(p);
        }
        min_entropy = std::min(min_entropy, e);
    }
    return 0.5 * min_entropy;
}

}  // namespace frameineq
