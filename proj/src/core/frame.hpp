#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

namespace frameineq {

/// Spectral bounds A <= B of the frame operator S = sum_k u_k u_k^H.
struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// A finite frame for C^N: M >= N complex vectors, stored as the rows of an
/// M x N matrix, that span the ambient space. Immutable after construction.
///
/// Inner-product convention used throughout: <x,u> = sum_i x_i * conj(u_i)
/// (linear in the first argument).
class Frame {
  public:
    /// Validates M >= N >= 1, strictly positive row norms, and full rank
    /// (lambda_min(S) > 1e-12 * lambda_max(S), else "not a frame").
    explicit Frame(CMat vectors, std::string label = {});

    Index dim() const { return vectors_.cols(); }
    Index size() const { return vectors_.rows(); }
    const CMat& vectors() const { return vectors_; }
    const std::string& label() const { return label_; }

    /// k-th frame vector as a column vector.
    CVec vector(Index k) const { return vectors_.row(k).transpose(); }

  private:
    CMat vectors_;
    std::string label_;
};

/// Analysis coefficients a = Ux together with the relative support threshold.
struct CoefficientSeq {
    CVec values;
    double support_tol = kDefaultSupportTol;

    /// Indices k with |a_k| > support_tol * max_j |a_j|.
    std::vector<Index> support() const;

    /// Numerical support size ||a||_0.
    Index l0() const;

    /// ||a||_p for p in (0, inf); p = 2 and p = inf have shortcuts below.
    double lp_norm(double p) const;
    double l2_norm() const { return values.norm(); }
    double linf_norm() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }

    /// a / ||a||_2; throws zero_signal on the zero sequence.
    CVec normalized() const;
};

/// a_k = <x, u_k> for every k. Throws on dimension mismatch.
CoefficientSeq analyze(const Frame& frame, const CVec& x, double support_tol = kDefaultSupportTol);

/// sum_k c_k u_k (the adjoint-side synthesis map).
CVec synthesize(const Frame& frame, const CVec& coeffs);

/// Frame operator S = sum_k u_k u_k^H (N x N Hermitian positive definite).
CMat frame_operator(const Frame& frame);

/// Extreme eigenvalues of S via a symmetric eigensolver.
FrameBounds frame_bounds(const Frame& frame);

/// Canonical dual frame, dual vectors S^{-1} u_k. Refuses frames whose
/// operator condition number exceeds cond_cap.
Frame canonical_dual(const Frame& frame, double cond_cap = kDefaultConditionCap);

/// (B - A)/B within tol?
bool is_tight(const Frame& frame, double tol = kTightnessTol);

/// True when x = sum_k <x,u_k> dual_k holds for a batch of random probes.
bool is_dual_pair(const Frame& frame, const Frame& dual, double tol = 1e-10);

/// Change-of-frame operator T with T(Ux) = Vx, realized through the canonical
/// dual of U: T[l, k] = <dual_u_k, v_l>. Shape M_V x M_U.
CMat change_of_frame(const Frame& U, const Frame& V);

}  // namespace frameineq
