#ifndef ZETAMOM_RANDOM_MODEL_HPP
#define ZETAMOM_RANDOM_MODEL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "zetamom/arith.hpp"
#include "zetamom/moments.hpp"

namespace zetamom {

// One realization of the i.i.d. unit-circle phases; reproducible from
// (seed, sample index) via a counter-based generator, independent of how
// samples are scheduled.
struct PhaseSample {
    std::map<std::uint32_t, double> phases;  // prime -> theta in [0, 2pi)
    std::uint64_t seed = 0;
    std::int64_t sample_index = 0;

    double theta(std::uint32_t p) const;
};

struct McConfig {
    std::int64_t n_samples = 100'000;
    std::uint64_t seed = 1;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t n_samples = 0;
};

// Counter-based uniform phase in [0, 2pi) keyed by (seed, prime, sample).
double phase_at(std::uint64_t seed, std::uint32_t prime, std::int64_t sample_index);

PhaseSample draw_sample(const std::vector<std::uint32_t>& primes, std::uint64_t seed,
                        std::int64_t sample_index);

// E[(Re X_p)^m]: binom(2h, h) 2^{-m} for m = 2h, zero for odd m.
double moment_re_xp(int m);

// Series evaluation of I_0, relative accuracy 1e-14; |z| <= 700.
double bessel_i0(double z);

// Closed-form expectation products over block l of the scheme:
//   weighted: prod_{p in I_l} I0(2 w_j(p)/sqrt p + 2(k-1)/sqrt p)
//   plain (weights == nullptr): prod_{p in I_l} I0(2(k-1)/sqrt p)
double expectation_product(const BlockScheme& scheme, const ArithmeticTable& table,
                           const GSumWeights* weights, double k, int l);

// Monte Carlo estimate of E[f(X)] with deterministic pairwise reduction.
McEstimate mc_expectation(const std::function<double(const PhaseSample&)>& f,
                          const std::vector<std::uint32_t>& primes, const McConfig& config);

// Re P(X) = sum cos(theta_p)/sqrt p over the given primes.
double re_prime_sum_model(const PhaseSample& x, const std::vector<std::uint32_t>& primes);

// G_{l,j}(X) = Re sum_{n in I_l} w_j(n)/sqrt n X_n; squares use
// Re X_{p^2} = cos(2 theta_p) by complete multiplicativity.
double g_sum_model(const PhaseSample& x, const GSumWeights& weights,
                   const BlockScheme& scheme, int l);

struct MomentBound {
    double value = 0.0;      // E[(2 Re P(X))^{2m}], exact or MC
    double bound = 0.0;      // (2m)!/(2^{2m} m!) (sum 4/p)^m
    bool exact = false;
    double std_error = 0.0;  // zero when exact
};

// Exact multinomial expansion when the term count is <= 10^4, MC otherwise.
MomentBound multinomial_moment_bound(const std::vector<std::uint32_t>& primes, int m,
                                     const McConfig& config = McConfig{});

struct StirlingBounds {
    double lower = 0.0;   // (n/e)^n
    double upper = 0.0;   // n (n/e)^n
    double log_lower = 0.0;
    double log_upper = 0.0;
    double log_factorial = 0.0;
    bool upper_holds = false;  // the upper bound fails numerically for n <= 6
};

StirlingBounds stirling_bounds(int n);

}  // namespace zetamom

#endif
