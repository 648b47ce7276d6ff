#pragma once

#include "padic_hlp/analysis.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace padic_hlp {

struct WindowTooShallowError : std::domain_error {
    explicit WindowTooShallowError(const std::string& what) : std::domain_error(what) {}
};

/// l^q norm of a coordinate vector, 1 <= q < inf.
double lq_norm(const std::vector<double>& u, double q);

/// Certified lower bound on sup ||Mu||_r / ||u||_q for an entrywise
/// nonnegative matrix, 1 <= q, r < inf.
///
/// q = 1 and r = 1 have closed forms (max column r-norm, resp.
/// ||M^T 1||_{q'}) which are the exact truncated norms. Otherwise the
/// nonlinear power iteration is used: u <- Psi_q(M^T Phi_r(M u)), where
/// Phi_r raises entrywise to r-1 and Psi_q to 1/(q-1). The quotient
/// sequence is non-decreasing for nonnegative matrices, so every iterate
/// is a valid lower bound; for q = r = 2 this is power iteration on M^T M.
/// `converged == false` means max_iter was hit; `lower` is still valid.
struct PowerIterationResult {
    double lower;
    int iterations;
    bool converged;
    std::vector<double> quotient_history;
};
PowerIterationResult matrix_norm_lower(const CoordinateMatrix& M, double q, double r, double tol,
                                       int max_iter);

/// Lower bound on ||H||: columns over `cols` (the support of the test
/// functions), rows extended beyond `cols` far enough that the output
/// tail outside them is certified negligible. Supports infinite q/r via
/// the exact sup-coordinate norms.
struct OperatorLowerBound {
    double value;
    ValuationWindow rows;
    int iterations;
    bool converged;
};
OperatorLowerBound operator_norm_lower(const KernelParams& k, const SpaceParams& s,
                                       const PrimeBase& base, ValuationWindow cols, double tol,
                                       int max_iter);

struct ExtremalPoint {
    double epsilon;
    double ratio;
};

/// Lower bounds from the normalized power family supported on |x| >= 1:
/// for each eps builds the family over the window, applies H and returns
/// ||H f_eps||_{r,beta} / ||f_eps||_{q,alpha}. Needs a bounded q = r
/// regime. Throws WindowTooShallowError when the geometric tail budget at
/// some eps exceeds 10% of the running ratio.
std::vector<ExtremalPoint> extremal_ratio_sweep(const KernelParams& k, const SpaceParams& s,
                                                const PrimeBase& base,
                                                const std::vector<double>& eps_schedule,
                                                ValuationWindow window);

/// Schedule eps = 2^-1 .. 2^-12 with per-eps window depth
/// max(40, ceil(8/eps)) on the support side.
std::vector<double> default_eps_schedule();
long long default_sweep_depth(double epsilon);

/// Growth of truncated-norm lower bounds across increasing windows.
/// Confirmed when last/first >= threshold; Inconclusive otherwise
/// (reported, never asserted).
struct GrowthReport {
    enum class Outcome { confirmed, inconclusive };
    Outcome outcome;
    double growth;
    double threshold;
    std::vector<std::pair<ValuationWindow, double>> window_ratios;
    bool confirmed() const { return outcome == Outcome::confirmed; }
};
GrowthReport divergence_witness(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                                const std::vector<ValuationWindow>& windows,
                                double threshold = 4.0);

struct MatrixLowerInfo {
    double value;
    ValuationWindow cols;
    ValuationWindow rows;
    int iterations;
    double tol;
    bool converged;
};

/// Everything known about one parameter point: verdict, closed form when
/// one exists, optimized Schur upper bound, truncated-matrix and extremal
/// lower bounds, or a divergence witness for unbounded regimes.
struct NormReport {
    Verdict verdict;
    std::optional<double> closed_form;
    std::optional<SchurCertificate> schur;
    std::optional<MatrixLowerInfo> matrix_lower;
    std::vector<ExtremalPoint> extremal_lowers;
    std::optional<GrowthReport> divergence;
};

NormReport estimate_norm(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                         ValuationWindow window, double tol);

/// Restricted variant used by sweeps: caps the extremal schedule length
/// (0 keeps the full default schedule).
NormReport estimate_norm(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                         ValuationWindow window, double tol, std::size_t max_extremal_points);

}  // namespace padic_hlp
