#pragma once

#include "padic_hlp/hlp_operator.hpp"

#include <string>
#include <vector>

namespace padic_hlp {

struct NotAvailableError : std::domain_error {
    explicit NotAvailableError(const std::string& what) : std::domain_error(what) {}
};
struct WrongRegimeError : std::domain_error {
    explicit WrongRegimeError(const std::string& what) : std::domain_error(what) {}
};
struct InfeasibleFreeParamsError : std::domain_error {
    explicit InfeasibleFreeParamsError(const std::string& what) : std::domain_error(what) {}
};

/// I(y) = int |x|^a / max(|x|,|y|)^lambda dx over Q_p^*. Converges iff
/// a > -1 (origin side) and lambda - a - 1 > 0 (infinity side), with
///   I(y) = (1-1/p)[1 + 1/(p^{a+1}-1) + 1/(p^{lambda-a-1}-1)] |y|^{a+1-lambda}.
struct IntegralI {
    enum class Status { converges, diverges_origin, diverges_infinity };
    Status status;
    double value;  // meaningful only when converges
    bool converges() const { return status == Status::converges; }
};
IntegralI closed_form_I(double a, double lambda, double ynorm, const PrimeBase& base);

enum class BoundednessStatus { bounded, unbounded, out_of_paper_scope };

/// Which line of the decision table decided.
enum class Citation {
    theorem1,      // 1 <= q <= r < inf, q < r
    theorem2,      // q = 1, r = inf (closed endpoints)
    theorem3,      // 1 < q < inf, r = inf
    theorem4,      // q = r < inf, sharp constant available
    theorem5,      // q = r = inf
    boundary_alpha_upper,  // balance holds, alpha+1 = q(mu+1): unbounded
    boundary_alpha_lower,  // balance holds, alpha+1 = q(mu+1-lambda): unbounded
    remark1,       // r = 1 < q < inf
    remark2,       // r < q = inf
    remark3,       // 1 < r < q < inf
    out_of_scope
};
std::string citation_label(Citation c);

struct Condition {
    std::string name;
    std::string relation;  // the requirement, e.g. "-r*nu < beta+1"
    bool satisfied;
};

/// Boundedness decision with the balance residual
/// tau = mu+nu+1+(beta+1)/r-(alpha+1)/q-lambda ((beta+1)/r and (alpha+1)/q
/// read as 0 for infinite exponents). tau_exact records whether tau was
/// evaluated in exact rational arithmetic.
struct Verdict {
    BoundednessStatus status;
    double tau;
    bool tau_exact;
    std::vector<Condition> conditions;
    Citation citation;
    bool bounded() const { return status == BoundednessStatus::bounded; }
};

/// Float inputs accept |tau| <= kBalanceTolerance * max(1,|lambda|) as
/// balanced; exact inputs are compared exactly.
inline constexpr double kBalanceTolerance = 1e-9;

Verdict check_boundedness(const KernelParams& k, const SpaceParams& s, const PrimeBase& base);

/// Sharp operator norm. q = r finite:
///   (1-1/p)[1 + 1/(p^{A1}-1) + 1/(p^{B1}-1)],
/// A1 = mu+1-(alpha+1)/q, B1 = nu+(beta+1)/q. q = r = inf uses exponents
/// nu+1 and lambda-nu-1. Throws NotAvailableError for bounded q < r (only
/// bounds exist there) and domain_error when not bounded at all.
double sharp_norm(const KernelParams& k, const SpaceParams& s, const PrimeBase& base);

/// The same value itemized for reporting.
struct SharpNormTerms {
    double prefactor;    // 1 - 1/p
    double exponent_a;   // A1, or nu+1 in the sup case
    double exponent_b;   // B1, or lambda-nu-1
    double term_a;       // 1/(p^{exponent_a}-1)
    double term_b;
    double value;
};
SharpNormTerms sharp_norm_terms(const KernelParams& k, const SpaceParams& s, const PrimeBase& base);

/// Exact endpoint norms via row/column integrals. Supported regimes:
/// r = 1 (row route; computed for q = 1, certified +inf for q > 1) and
/// q = inf (column route; finite only when r = inf and the sup-case
/// conditions hold). finite == false certifies unboundedness.
struct EndpointNorm {
    bool finite;
    double value;  // +inf when !finite
    std::string note;
};
EndpointNorm exact_norm_endpoint(const KernelParams& k, const SpaceParams& s, const PrimeBase& base);

/// Certificate of a kernel-splitting upper bound ||H|| <= bound.
/// Case I (q > 1): Hoelder split with exponents (s,t), auxiliary power A;
/// bound = C1^{1/q'} C2^{1/r}. Case II (q = 1): sup-lemma with (s,D);
/// bound = C3 C4^{1/r}.
struct SchurCertificate {
    enum class Mode { case_one, case_two };
    Mode mode;
    double s, t;   // conjugate pair of the split
    double shift;  // A (case I) or D (case II)
    double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    double bound;
};

/// Evaluates the certificate at the given free parameters: t and A for
/// Case I, s and D for Case II. Throws InfeasibleFreeParamsError when the
/// parameters leave their admissible open windows.
SchurCertificate schur_upper_bound(const KernelParams& k, const SpaceParams& s,
                                   const PrimeBase& base, double t_or_s, double a_or_d);

/// Grid search plus golden-section refinement over the feasible region,
/// clamped inward of the open boundaries by a relative margin of 1e-6.
/// For q = r the minimum is the sharp constant, attained at t = q,
/// A = -(alpha+1)/(q q').
SchurCertificate optimize_schur_bound(const KernelParams& k, const SpaceParams& s,
                                      const PrimeBase& base, int grid_resolution = 32);

/// The r < q divergence rate of the normalized family:
/// (1-1/p)^{1/r-1/q} (p^eps-1)^{1/q} / (p^{(r/q) eps}-1)^{1/r} -> inf
/// as eps -> 0 whenever r < q.
double unboundedness_growth_factor(const PrimeBase& base, double q, double r, double epsilon);

}  // namespace padic_hlp
