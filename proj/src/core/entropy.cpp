#include "entropy.hpp"

#include <cmath>
#include <limits>

namespace frameineq {

double renyi_entropy(const CoefficientSeq& a, double alpha) {
    if (!(alpha >= 0.0)) fail(Errc::domain, "renyi_entropy: alpha >= 0 required");
    const double n2 = a.values.norm();
    if (!(n2 > 0.0)) fail(Errc::zero_signal, "renyi_entropy: zero sequence");
    if (alpha == 0.0) {
        return std::log(static_cast<double>(a.l0()));
    }
    if (alpha == 1.0) return shannon_entropy(a);
    const RVec mags = a.values.cwiseAbs() / n2;
    const double m = mags.maxCoeff();
    if (std::isinf(alpha)) return -2.0 * std::log(m);
    // ln sum |a~|^{2 alpha} = 2 alpha ln m + ln sum (|a~|/m)^{2 alpha}
    double s = 0.0;
    for (Index k = 0; k < mags.size(); ++k) {
        const double t = mags[k] / m;
        if (t > 0.0) s += std::pow(t, 2.0 * alpha);
    }
    return (2.0 * alpha * std::log(m) + std::log(s)) / (1.0 - alpha);
}

double shannon_entropy(const CoefficientSeq& a) {
    const double n2 = a.values.norm();
    if (!(n2 > 0.0)) fail(Errc::zero_signal, "shannon_entropy: zero sequence");
    double h = 0.0;
    for (Index k = 0; k < a.values.size(); ++k) {
        const double t = std::norm(a.values[k] / n2);
        if (t > 0.0) h -= t * std::log(t);
    }
    return h;
}

double beta_conjugate(double alpha, double r) {
    if (!(r >= 1.0 && r < 2.0)) fail(Errc::domain, "beta_conjugate: r must lie in [1,2)");
    if (!(alpha >= r / 2.0 && alpha <= 1.0)) fail(Errc::domain, "beta_conjugate: alpha must lie in [r/2, 1]");
    if (alpha == r / 2.0) return std::numeric_limits<double>::infinity();
    return alpha * (r - 2.0) / (r - 2.0 * alpha);
}

}  // namespace frameineq
