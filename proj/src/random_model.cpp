#include "zetamom/random_model.hpp"

#include <cmath>
#include <numbers>

#include "zetamom/errors.hpp"
#include "zetamom/reduce.hpp"

namespace zetamom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace

double phase_at(std::uint64_t seed, std::uint32_t prime, std::int64_t sample_index) {
    std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ prime) ^
                                 static_cast<std::uint64_t>(sample_index));
    double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    return kTwoPi * u;
}

double PhaseSample::theta(std::uint32_t p) const {
    auto it = phases.find(p);
    if (it == phases.end()) throw Error("PhaseSample: prime has no phase");
    return it->second;
}

PhaseSample draw_sample(const std::vector<std::uint32_t>& primes, std::uint64_t seed,
                        std::int64_t sample_index) {
    PhaseSample s;
    s.seed = seed;
    s.sample_index = sample_index;
    for (std::uint32_t p : primes) s.phases[p] = phase_at(seed, p, sample_index);
    return s;
}

double moment_re_xp(int m) {
    if (m < 0) throw Error("moment_re_xp: m must be >= 0");
    if (m % 2 == 1) return 0.0;
    int h = m / 2;
    return binomial(2 * h, h) * std::pow(2.0, -m);
}

double bessel_i0(double z) {
    if (std::abs(z) > 700.0) throw Error("bessel_i0: |z| > 700 overflow guard");
    double q = 0.25 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 10000; ++n) {
        term *= q / (static_cast<double>(n) * n);
        sum += term;
        if (term < 1e-14 * sum) break;
    }
    return sum;
}

double expectation_product(const BlockScheme& scheme, const ArithmeticTable& table,
                           const GSumWeights* weights, double k, int l) {
    if (l < 1 || l > scheme.J) throw Error("expectation_product: block index out of range");
    auto [lo, hi] = scheme.intervals[l - 1];
    double prod = 1.0;
    for (std::uint32_t p : table.primes_in(lo, hi)) {
        double sq = std::sqrt(static_cast<double>(p));
        double w = 0.0;
        if (weights) {
            auto it = weights->weights.find(p);
            if (it != weights->weights.end()) w = it->second;
        }
        prod *= bessel_i0(2.0 * w / sq + 2.0 * (k - 1.0) / sq);
    }
    return prod;
}

McEstimate mc_expectation(const std::function<double(const PhaseSample&)>& f,
                          const std::vector<std::uint32_t>& primes, const McConfig& config) {
    if (config.n_samples < 2) throw Error("mc_expectation: need n_samples >= 2");
    std::vector<double> values;
    values.reserve(config.n_samples);
    for (std::int64_t i = 0; i < config.n_samples; ++i)
        values.push_back(f(draw_sample(primes, config.seed, i)));

    McEstimate e;
    e.n_samples = config.n_samples;
    double n = static_cast<double>(config.n_samples);
    e.mean = pairwise_sum(values) / n;
    std::vector<double> sq;
    sq.reserve(values.size());
    for (double v : values) sq.push_back((v - e.mean) * (v - e.mean));
    double var = pairwise_sum(sq) / (n - 1.0);
    e.std_error = std::sqrt(var / n);
    return e;
}

double re_prime_sum_model(const PhaseSample& x, const std::vector<std::uint32_t>& primes) {
    double s = 0.0;
    for (std::uint32_t p : primes)
        s += std::cos(x.theta(p)) / std::sqrt(static_cast<double>(p));
    return s;
}

double g_sum_model(const PhaseSample& x, const GSumWeights& weights,
                   const BlockScheme& scheme, int l) {
    if (l < 1 || l > scheme.J) throw Error("g_sum_model: block index out of range");
    auto [lo, hi] = scheme.intervals[l - 1];
    double sum = 0.0;
    for (const auto& [n, w] : weights.weights) {
        double dn = static_cast<double>(n);
        if (dn <= lo || dn > hi) continue;
        std::uint64_t root = static_cast<std::uint64_t>(std::llround(std::sqrt(dn)));
        bool is_square = root * root == n;
        double th = is_square ? 2.0 * x.theta(static_cast<std::uint32_t>(root))
                              : x.theta(static_cast<std::uint32_t>(n));
        sum += w / std::sqrt(dn) * std::cos(th);
    }
    return sum;
}

namespace {

double exact_even_moment(const std::vector<std::uint32_t>& primes, int m) {
    // 2^{-2m} sum over m_1+...+m_s = m of multinom(2m; 2m_i) prod binom(2m_i, m_i)(4/p_i)^{m_i}
    std::size_t s = primes.size();
    double total = 0.0;
    std::vector<int> parts(s, 0);
    double lg2m = std::lgamma(2.0 * m + 1.0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i + 1 == s) {
            parts[i] = remaining;
            double log_multinom = lg2m;
            double prod = 1.0;
            for (std::size_t q = 0; q < s; ++q) {
                log_multinom -= std::lgamma(2.0 * parts[q] + 1.0);
                prod *= binomial(2 * parts[q], parts[q]) *
                        std::pow(4.0 / primes[q], parts[q]);
            }
            total += std::exp(log_multinom) * prod;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            parts[i] = v;
            rec(i + 1, remaining - v);
        }
    };
    rec(0, m);
    return std::pow(2.0, -2.0 * m) * total;
}

}  // namespace

MomentBound multinomial_moment_bound(const std::vector<std::uint32_t>& primes, int m,
                                     const McConfig& config) {
    if (m < 1 || primes.empty()) throw Error("multinomial_moment_bound: need m >= 1 and primes");
    MomentBound r;
    double inv_sum = 0.0;
    for (std::uint32_t p : primes) inv_sum += 4.0 / static_cast<double>(p);
    r.bound = std::exp(std::lgamma(2.0 * m + 1.0) - std::lgamma(m + 1.0)) *
              std::pow(2.0, -2.0 * m) * std::pow(inv_sum, m);

    double term_count = binomial(m + static_cast<int>(primes.size()) - 1,
                                 static_cast<int>(primes.size()) - 1);
    if (term_count <= 1e4) {
        r.value = exact_even_moment(primes, m);
        r.exact = true;
    } else {
        auto f = [&](const PhaseSample& x) {
            return std::pow(2.0 * re_prime_sum_model(x, primes), 2.0 * m);
        };
        McEstimate e = mc_expectation(f, primes, config);
        r.value = e.mean;
        r.std_error = e.std_error;
    }
    return r;
}

StirlingBounds stirling_bounds(int n) {
    if (n < 1) throw Error("stirling_bounds: n must be >= 1");
    StirlingBounds b;
    double dn = n;
    b.log_lower = dn * (std::log(dn) - 1.0);
    b.log_upper = std::log(dn) + b.log_lower;
    b.log_factorial = std::lgamma(dn + 1.0);
    b.lower = std::exp(b.log_lower);
    b.upper = std::exp(b.log_upper);
    b.upper_holds = b.log_upper >= b.log_factorial;
    return b;
}

}  // namespace zetamom
