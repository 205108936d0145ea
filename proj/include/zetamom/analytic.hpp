#ifndef ZETAMOM_ANALYTIC_HPP
#define ZETAMOM_ANALYTIC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zetamom {

using Complex = std::complex<double>;

// Controls the Euler-Maclaurin truncation. The oracle profile doubles the
// main-sum length and the Bernoulli correction order but keeps double
// precision; heights up to the ceiling are comfortably within reach.
struct PrecisionProfile {
    double term_factor = 1.4;    // main sum length ~ term_factor*|t|/(2pi)
    int extra_terms = 10;
    int min_terms = 20;
    int bernoulli_order = 25;    // number of B_{2r} correction terms
    double t_ceiling = 1e5;
    double tolerance = 1e-9;
    std::string name = "standard";

    static PrecisionProfile standard();
    static PrecisionProfile oracle();
};

// One nontrivial zero height, bracketed by a sign change of Z.
struct Zero {
    std::int64_t index = 0;  // 1-based ordinal within the table
    double gamma = 0.0;
    double width = 0.0;      // half-width of the final bracketing interval
};

struct ZeroTable {
    double t_lo = 0.0;
    double t_max = 0.0;
    std::vector<Zero> zeros;
    double rvm_main = 0.0;       // Riemann-von Mangoldt main term over (t_lo, t_max]
    std::int64_t count_check = 0;  // count minus rounded main term

    // Zeros with t_lo < gamma <= t.
    std::int64_t count_below(double t) const;
};

// Riemann-von Mangoldt main term (T/2pi) log(T/(2 pi e)) for T > 0.
double rvm_main_term(double T);

Complex zeta(Complex s, const PrecisionProfile& profile = PrecisionProfile::standard());
Complex zeta_prime(Complex s, const PrecisionProfile& profile = PrecisionProfile::standard());

// chi(s) = 2^s pi^(s-1) Gamma(1-s) sin(pi s/2), evaluated through logs so
// large |Im s| does not overflow.
Complex chi(Complex s);

// (chi'/chi)(s) on the strip -1 <= Re s <= 2, |Im s| >= 1.
Complex chi_log_deriv(Complex s);

// Riemann-Siegel theta and Hardy Z. Z(t) = Re(e^{i theta(t)} zeta(1/2+it));
// the imaginary part is an evaluation residual.
double rs_theta(double t);
double hardy_z(double t, const PrecisionProfile& profile = PrecisionProfile::standard());
// Z together with the residual imaginary part, for reality checks.
std::pair<double, double> hardy_z_full(double t, const PrecisionProfile& profile = PrecisionProfile::standard());

// All zeros in (t_lo, t_hi], each refined by bisection to half-width <= tol.
// Throws MissedZeroError if the count check stays outside slack after the
// rescan retries.
ZeroTable find_zeros(double t_lo, double t_hi, double tol,
                     const PrecisionProfile& profile = PrecisionProfile::standard());

// Complex log-gamma (Lanczos, reflection for Re z < 1/2) and digamma.
// Exposed for the chi/theta oracles in tests.
Complex log_gamma(Complex z);
Complex digamma(Complex z);

}  // namespace zetamom

#endif
