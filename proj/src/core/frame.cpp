#include "frame.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace frameineq {

namespace {

Eigen::SelfAdjointEigenSolver<CMat> solve_frame_operator(const CMat& S) {
    Eigen::SelfAdjointEigenSolver<CMat> es(S);
    if (es.info() != Eigen::Success) fail(Errc::not_a_frame, "frame operator eigendecomposition failed");
    return es;
}

}  // namespace

Frame::Frame(CMat vectors, std::string label) : vectors_(std::move(vectors)), label_(std::move(label)) {
    const Index m = vectors_.rows();
    const Index n = vectors_.cols();
    if (n < 1 || m < n) fail(Errc::not_a_frame, "frame needs M >= N >= 1 vectors");
    for (Index k = 0; k < m; ++k) {
        if (!(vectors_.row(k).norm() > 0.0)) fail(Errc::not_a_frame, "frame vector " + std::to_string(k) + " has zero norm");
    }
    const CMat S = vectors_.transpose() * vectors_.conjugate();
    const auto es = solve_frame_operator(S);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 1e-12 * hi)) fail(Errc::not_a_frame, "vectors do not span the space: not a frame");
}

std::vector<Index> CoefficientSeq::support() const {
    std::vector<Index> idx;
    if (values.size() == 0) return idx;
    const double cutoff = support_tol * values.cwiseAbs().maxCoeff();
    for (Index k = 0; k < values.size(); ++k) {
        if (std::abs(values[k]) > cutoff) idx.push_back(k);
    }
    return idx;
}

Index CoefficientSeq::l0() const { return static_cast<Index>(support().size()); }

double CoefficientSeq::lp_norm(double p) const {
    if (!(p > 0.0)) fail(Errc::invalid_argument, "lp_norm needs p > 0");
    if (std::isinf(p)) return linf_norm();
    if (p == 2.0) return values.norm();
    double acc = 0.0;
    for (Index k = 0; k < values.size(); ++k) acc += std::pow(std::abs(values[k]), p);
    return std::pow(acc, 1.0 / p);
}

CVec CoefficientSeq::normalized() const {
    const double n2 = values.norm();
    if (!(n2 > 0.0)) fail(Errc::zero_signal, "cannot normalize the zero sequence");
    return values / n2;
}

CoefficientSeq analyze(const Frame& frame, const CVec& x, double support_tol) {
    if (x.size() != frame.dim()) fail(Errc::dimension_mismatch, "analyze: signal length != frame dim");
    return CoefficientSeq{frame.vectors().conjugate() * x, support_tol};
}

CVec synthesize(const Frame& frame, const CVec& coeffs) {
    if (coeffs.size() != frame.size()) fail(Errc::dimension_mismatch, "synthesize: coefficient length != frame size");
    return frame.vectors().transpose() * coeffs;
}

CMat frame_operator(const Frame& frame) {
    return frame.vectors().transpose() * frame.vectors().conjugate();
}

FrameBounds frame_bounds(const Frame& frame) {
    const auto es = solve_frame_operator(frame_operator(frame));
    return FrameBounds{es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

Frame canonical_dual(const Frame& frame, double cond_cap) {
    const auto es = solve_frame_operator(frame_operator(frame));
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > cond_cap) fail(Errc::ill_conditioned, "frame operator condition number exceeds cap");
    const CMat Sinv = es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
    // dual_k = S^{-1} u_k, i.e. rows F_dual = F * conj(S^{-1}).
    return Frame(frame.vectors() * Sinv.conjugate(), frame.label().empty() ? "" : frame.label() + "~");
}

bool is_tight(const Frame& frame, double tol) {
    const FrameBounds b = frame_bounds(frame);
    return (b.upper - b.lower) / b.upper < tol;
}

bool is_dual_pair(const Frame& frame, const Frame& dual, double tol) {
    if (frame.dim() != dual.dim() || frame.size() != dual.size()) return false;
    std::mt19937_64 eng(0x5eedu);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int probe = 0; probe < 8; ++probe) {
        CVec x(frame.dim());
        for (Index i = 0; i < x.size(); ++i) x[i] = Complex(gauss(eng), gauss(eng));
        x /= x.norm();
        const CVec rec = synthesize(dual, analyze(frame, x).values);
        if ((rec - x).norm() > tol) return false;
    }
    return true;
}

CMat change_of_frame(const Frame& U, const Frame& V) {
    if (U.dim() != V.dim()) fail(Errc::dimension_mismatch, "change_of_frame: frames must share dim");
    const Frame Ud = canonical_dual(U);
    // T[l, k] = <dual_u_k, v_l>
    return (Ud.vectors() * V.vectors().adjoint()).transpose();
}

}  // namespace frameineq
