#ifndef ZETAMOM_MOLLIFIER_HPP
#define ZETAMOM_MOLLIFIER_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "zetamom/analytic.hpp"
#include "zetamom/arith.hpp"

namespace zetamom {

// Block scheme: alpha_j = ratio^{j-1}/(loglog T)^2, prime intervals
// I_j = (T^{alpha_{j-1}}, T^{alpha_j}], truncation thresholds
// ell_j = e^2 k alpha_j^{-3/4} (polynomial degree = ceil(ell_j)).
struct BlockScheme {
    double T = 0.0;
    double k = 0.0;
    int M = 1;
    double ratio = 20.0;
    std::vector<double> alphas;        // alphas[0] = 0, goes through alpha_J
    int J = 1;
    std::vector<std::pair<double, double>> intervals;  // intervals[j-1] = I_j
    std::vector<double> ell;           // ell[j-1] = e^2 k alpha_j^{-3/4}
    std::vector<int> orders;           // orders[j-1] = ceil(ell_j)
    double length_exponent = 0.0;      // 40 e^2 k 10^{-M/4}
    bool degenerate = false;           // J = 1 because alpha_1 > 10^{-M}
};

struct DirichletPolynomial {
    std::map<std::uint64_t, Complex> coeffs;
    std::uint64_t max_frequency = 1;

    Complex evaluate(Complex s) const;
};

struct MollifierCoefficients {
    double alpha = 0.0;
    std::map<std::uint64_t, double> coeffs;  // n -> a_alpha(n)
    std::uint64_t max_frequency = 1;

    Complex evaluate(Complex s) const;
};

BlockScheme build_scheme(double T, double k, int M = 1, double ratio = 20.0);

// E_ell(x) = sum_{j=0}^{ceil(ell)} x^j/j!
Complex truncated_exp(double ell, Complex x);

// P_j(s) = sum_{p in I_j} p^{-s}
Complex eval_prime_sum(const BlockScheme& scheme, int j, Complex s,
                       const ArithmeticTable& table);

// N_j(s, alpha) = E_{ell_j}(alpha P_j(s))
Complex eval_factor(const BlockScheme& scheme, int j, double alpha, Complex s,
                    const ArithmeticTable& table);

// N(s, alpha) = prod_j N_j(s, alpha)
Complex eval_mollifier(const BlockScheme& scheme, double alpha, Complex s,
                       const ArithmeticTable& table);

// Q_j(s, k) = (64 max(2, k+3/2) P_j(s) / ceil(ell_j))^{ceil(ell_j)}
Complex eval_tail(const BlockScheme& scheme, int j, double k, Complex s,
                  const ArithmeticTable& table);

// r_k = 2 + ceil(1/k) for 0 < k <= 1/2, 1 + ceil(2k/(2k-1)) for k > 1/2
int r_exponent(double k);

// Exact coefficient map of N(s, alpha). Desk guard: <= 10^7 stored terms and
// frequencies below 2^63, else SupportSizeError.
MollifierCoefficients expand_coefficients(const BlockScheme& scheme, double alpha,
                                          const ArithmeticTable& table);

// Product over blocks of the diagonal block sums
//   sum_{Omega(n_j)<=order} k^{2 Omega}/(n_j g^2(n_j))
//   + (64 max(2,k+3/2)/order)^{2 r_k order} ((r_k order)!)^2
//     sum_{Omega(n_j)=r_k order} 1/(n_j g^2(n_j)),
// computed blockwise in log space.
double diagonal_upper(const BlockScheme& scheme, double k, const ArithmeticTable& table);
// Natural log of the same product, for regimes where the value overflows.
double diagonal_upper_log(const BlockScheme& scheme, double k, const ArithmeticTable& table);

}  // namespace zetamom

#endif
