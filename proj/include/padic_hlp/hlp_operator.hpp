#pragma once

#include "padic_hlp/radial.hpp"
#include "padic_hlp/scalar.hpp"

#include <vector>

namespace padic_hlp {

/// Exponents of the kernel |x|^mu |y|^nu / max(|x|,|y|)^lambda.
struct KernelParams {
    Scalar lambda;
    Scalar mu;
    Scalar nu;
};

/// The exponent/weight data of a mapping L^q_alpha -> L^r_beta. alpha and
/// beta are ignored when the matching exponent is infinite (the sup space
/// carries no weight).
struct SpaceParams {
    ExtendedExponent q;
    ExtendedExponent r;
    Scalar alpha;
    Scalar beta;
};

/// Kernel value at |x| = xnorm, |y| = ynorm (both positive powers of p).
double kernel_eval(double xnorm, double ynorm, const KernelParams& k);

/// H f on the requested output window, by sphere-decomposed Haar sums:
/// (Hf)(p^m) = (1-1/p) sum_gamma p^gamma k(p^gamma, p^m) phi_gamma.
/// `overflow` flags non-finite partial terms (grossly divergent
/// parameters); consult the boundedness table before trusting values.
struct HlpImage {
    RadialFunction value;
    bool overflow;
};
HlpImage apply_hlp(const KernelParams& k, const RadialFunction& f, ValuationWindow out_window);

/// Dense matrix acting on isometric sequence coordinates; rows are indexed
/// by the output window, columns by the input window.
class CoordinateMatrix {
public:
    CoordinateMatrix(ValuationWindow rows, ValuationWindow cols)
        : rows_(rows), cols_(cols), a_(rows.size() * cols.size(), 0.0) {}

    const ValuationWindow& row_window() const { return rows_; }
    const ValuationWindow& col_window() const { return cols_; }
    std::size_t num_rows() const { return rows_.size(); }
    std::size_t num_cols() const { return cols_.size(); }

    double& at(std::size_t i, std::size_t j) { return a_[i * num_cols() + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * num_cols() + j]; }

    std::vector<double> apply(const std::vector<double>& u) const;
    std::vector<double> apply_transpose(const std::vector<double>& v) const;

private:
    ValuationWindow rows_;
    ValuationWindow cols_;
    std::vector<double> a_;
};

/// Matrix of H in isometric coordinates:
///   M[m,gamma] = ((1-1/p) p^{m(beta+1)})^{1/r} k(p^gamma, p^m)
///                * p^gamma (1-1/p) * ((1-1/p) p^{gamma(alpha+1)})^{-1/q},
/// so that ||M u||_r = ||Hf||_{r,beta} for the f with coordinates u.
/// Entries are assembled in log space; 1/q and 1/r read as 0 for infinite
/// exponents (sup coordinates). Under exact balance with q = r the matrix
/// is Toeplitz with decay exponents A1 = mu+1-(alpha+1)/q on the lower
/// side and B1 = nu+(beta+1)/q on the upper side.
CoordinateMatrix build_matrix(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                              ValuationWindow window);
CoordinateMatrix build_matrix(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                              ValuationWindow rows, ValuationWindow cols);

/// Kernel of the adjoint with respect to the |y|^alpha-weighted pairing:
/// (lambda, mu, nu) -> (lambda, nu, mu - alpha).
KernelParams adjoint_params(const KernelParams& k, const Scalar& alpha);

/// sup over p-power norms of |x|^a |y|^{-b} / max(|x|,|y|)^lambda, finite
/// whenever lambda = a - b with a >= 0, b <= 0. Searched on a valuation
/// grid; `bounded` is false when those sufficient conditions fail (no
/// claim is made then).
struct KernelSupBound {
    bool bounded;
    double value;
};
KernelSupBound kernel_sup_bound(double a, double b, double lambda, const PrimeBase& base,
                                long long grid_radius = 20);

}  // namespace padic_hlp
