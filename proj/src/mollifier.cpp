#include "zetamom/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zetamom/errors.hpp"

namespace zetamom {

namespace {

constexpr std::uint64_t kSupportGuard = 10'000'000;  // max stored terms
constexpr double kFreqGuard = 9.0e18;                // stay under 2^63

double log_sum_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

void check_block(const BlockScheme& scheme, int j) {
    if (j < 1 || j > scheme.J)
        throw Error("block index out of range");
}

}  // namespace

Complex DirichletPolynomial::evaluate(Complex s) const {
    Complex sum = 0.0;
    for (const auto& [n, c] : coeffs)
        sum += c * std::exp(-s * std::log(static_cast<double>(n)));
    return sum;
}

Complex MollifierCoefficients::evaluate(Complex s) const {
    Complex sum = 0.0;
    for (const auto& [n, c] : coeffs)
        sum += c * std::exp(-s * std::log(static_cast<double>(n)));
    return sum;
}

BlockScheme build_scheme(double T, double k, int M, double ratio) {
    if (!(T >= 16.0) || !(k > 0.0) || M < 1 || !(ratio > 1.0))
        throw Error("build_scheme: need T >= 16, k > 0, M >= 1, ratio > 1");
    BlockScheme s;
    s.T = T;
    s.k = k;
    s.M = M;
    s.ratio = ratio;

    const double llT = std::log(std::log(T));
    const double threshold = std::pow(10.0, -M);
    const double e2k = std::numbers::e * std::numbers::e * k;

    // J = 1 + max{j : alpha_j <= 10^{-M}}, with J = 1 on the empty set.
    double a1 = 1.0 / (llT * llT);
    int J = 1;
    if (a1 <= threshold) {
        double a = a1;
        int j = 1;
        while (a * ratio <= threshold) {
            a *= ratio;
            ++j;
        }
        J = 1 + j;
    } else {
        s.degenerate = true;
    }
    s.J = J;

    s.alphas.push_back(0.0);
    for (int j = 1; j <= J; ++j)
        s.alphas.push_back(std::pow(ratio, j - 1) / (llT * llT));
    for (int j = 1; j <= J; ++j) {
        double lo = std::pow(T, s.alphas[j - 1]);
        double hi = std::pow(T, s.alphas[j]);
        s.intervals.emplace_back(lo, hi);
        double ell = e2k * std::pow(s.alphas[j], -0.75);
        s.ell.push_back(ell);
        s.orders.push_back(static_cast<int>(std::ceil(ell)));
    }
    s.length_exponent = 40.0 * e2k * std::pow(10.0, -M / 4.0);
    return s;
}

Complex truncated_exp(double ell, Complex x) {
    if (ell < 0.0) throw Error("truncated_exp: ell must be >= 0");
    int degree = static_cast<int>(std::ceil(ell));
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int j = 1; j <= degree; ++j) {
        term *= x / static_cast<double>(j);
        sum += term;
    }
    return sum;
}

Complex eval_prime_sum(const BlockScheme& scheme, int j, Complex s,
                       const ArithmeticTable& table) {
    check_block(scheme, j);
    auto [lo, hi] = scheme.intervals[j - 1];
    Complex sum = 0.0;
    for (std::uint32_t p : table.primes_in(lo, hi))
        sum += std::exp(-s * std::log(static_cast<double>(p)));
    return sum;
}

Complex eval_factor(const BlockScheme& scheme, int j, double alpha, Complex s,
                    const ArithmeticTable& table) {
    check_block(scheme, j);
    return truncated_exp(scheme.ell[j - 1], alpha * eval_prime_sum(scheme, j, s, table));
}

Complex eval_mollifier(const BlockScheme& scheme, double alpha, Complex s,
                       const ArithmeticTable& table) {
    Complex prod = 1.0;
    for (int j = 1; j <= scheme.J; ++j)
        prod *= eval_factor(scheme, j, alpha, s, table);
    return prod;
}

int r_exponent(double k) {
    if (!(k > 0.0)) throw Error("r_exponent: k must be positive");
    if (k <= 0.5) return 2 + static_cast<int>(std::ceil(1.0 / k));
    return 1 + static_cast<int>(std::ceil(2.0 * k / (2.0 * k - 1.0)));
}

Complex eval_tail(const BlockScheme& scheme, int j, double k, Complex s,
                  const ArithmeticTable& table) {
    check_block(scheme, j);
    int K = scheme.orders[j - 1];
    Complex base = 64.0 * std::max(2.0, k + 1.5) * eval_prime_sum(scheme, j, s, table) /
                   static_cast<double>(K);
    Complex pw = 1.0;
    for (int i = 0; i < K; ++i) pw *= base;
    return pw;
}

namespace {

// All n composed of primes in the block with Omega(n) <= order, with
// coefficient alpha^{Omega}/g(n). DFS over the prime list.
void expand_block(const std::vector<std::uint32_t>& primes, std::size_t idx,
                  int remaining, std::uint64_t n, double coef, double alpha,
                  std::map<std::uint64_t, double>& out) {
    out[n] += coef;
    if (out.size() > kSupportGuard)
        throw SupportSizeError("expand_coefficients: support guard exceeded");
    if (remaining == 0) return;
    for (std::size_t i = idx; i < primes.size(); ++i) {
        double p = static_cast<double>(primes[i]);
        std::uint64_t m = n;
        double c = coef;
        for (int e = 1; e <= remaining; ++e) {
            if (static_cast<double>(m) * p > kFreqGuard)
                throw SupportSizeError("expand_coefficients: frequency exceeds 2^63 guard");
            m *= primes[i];
            c *= alpha / static_cast<double>(e);  // alpha^e / e! accumulates
            expand_block(primes, i + 1, remaining - e, m, c, alpha, out);
        }
    }
}

}  // namespace

MollifierCoefficients expand_coefficients(const BlockScheme& scheme, double alpha,
                                          const ArithmeticTable& table) {
    MollifierCoefficients mc;
    mc.alpha = alpha;
    std::map<std::uint64_t, double> acc{{1, 1.0}};
    for (int j = 1; j <= scheme.J; ++j) {
        auto [lo, hi] = scheme.intervals[j - 1];
        auto primes = table.primes_in(lo, hi);
        std::map<std::uint64_t, double> block;
        expand_block(primes, 0, scheme.orders[j - 1], 1, 1.0, alpha, block);
        if (j == 1) {
            acc = std::move(block);
            continue;
        }
        std::map<std::uint64_t, double> next;
        for (const auto& [m, cm] : acc)
            for (const auto& [n, cn] : block) {
                if (static_cast<double>(m) * static_cast<double>(n) > kFreqGuard)
                    throw SupportSizeError("expand_coefficients: frequency exceeds 2^63 guard");
                next[m * n] += cm * cn;
                if (next.size() > kSupportGuard)
                    throw SupportSizeError("expand_coefficients: support guard exceeded");
            }
        acc = std::move(next);
    }
    mc.coeffs = std::move(acc);
    mc.max_frequency = mc.coeffs.empty() ? 1 : mc.coeffs.rbegin()->first;
    return mc;
}

namespace {

// log of sum over multisets of block primes with Omega(n) constrained, of
// x^{Omega} / (n prod (m_p!)^2). exact_weight < 0 means Omega <= max_weight.
// This is sum |coef|^2 / n for the relevant polynomial powers: the Dirichlet
// coefficient of E(x^{1/2} P_j)^... carries 1/(m_p!) per prime, cf. the
// expansion a_alpha(n) = alpha^Omega prod 1/m_p!.
double block_dp_log(const std::vector<std::uint32_t>& primes, int max_weight,
                    int exact_weight, double log_x) {
    const double ninf = -std::numeric_limits<double>::infinity();
    std::vector<double> dp(max_weight + 1, ninf);
    dp[0] = 0.0;
    std::vector<double> log_fact(max_weight + 1, 0.0);
    for (int m = 1; m <= max_weight; ++m)
        log_fact[m] = log_fact[m - 1] + std::log(static_cast<double>(m));
    for (std::uint32_t p : primes) {
        double lp = std::log(static_cast<double>(p));
        std::vector<double> next = dp;
        for (int w = 0; w < max_weight; ++w) {
            if (dp[w] == ninf) continue;
            for (int m = 1; w + m <= max_weight; ++m) {
                double c = dp[w] + m * log_x - 2.0 * log_fact[m] - m * lp;
                next[w + m] = log_sum_exp(next[w + m], c);
            }
        }
        dp = std::move(next);
    }
    if (exact_weight >= 0) return dp[exact_weight];
    double total = ninf;
    for (double v : dp) total = log_sum_exp(total, v);
    return total;
}

}  // namespace

double diagonal_upper_log(const BlockScheme& scheme, double k, const ArithmeticTable& table) {
    if (!(k > 0.0)) throw Error("diagonal_upper: k must be positive");
    int rk = r_exponent(k);
    double log_prod = 0.0;
    for (int j = 1; j <= scheme.J; ++j) {
        auto [lo, hi] = scheme.intervals[j - 1];
        auto primes = table.primes_in(lo, hi);
        int K = scheme.orders[j - 1];
        int R = rk * K;
        double log_sum1 = block_dp_log(primes, K, -1, 2.0 * std::log(k));
        double log_sum2 = block_dp_log(primes, R, R, 0.0);
        double log_tail = 2.0 * R * std::log(64.0 * std::max(2.0, k + 1.5) / K) +
                          2.0 * std::lgamma(static_cast<double>(R) + 1.0);
        log_prod += log_sum_exp(log_sum1, log_tail + log_sum2);
    }
    return log_prod;
}

double diagonal_upper(const BlockScheme& scheme, double k, const ArithmeticTable& table) {
    return std::exp(diagonal_upper_log(scheme, k, table));
}

}  // namespace zetamom
