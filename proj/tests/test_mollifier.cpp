#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "zetamom/errors.hpp"
#include "zetamom/mollifier.hpp"

using namespace zetamom;
using doctest::Approx;

namespace {

constexpr double kE = std::numbers::e;

const ArithmeticTable& table() {
    static ArithmeticTable t(1000);
    return t;
}

// T with loglog T = 4 exactly (up to rounding); blocks far beyond any sieve.
double big_T() { return std::exp(std::exp(4.0)); }

// A genuinely multi-block scheme whose prime intervals stay tiny: with
// ratio = 1.1 and T ~ 3e10, alpha_1 ~ 0.0987 <= 0.1 < alpha_2, so J = 2 and
// I_1 = (1, ~10.8], I_2 = (~10.8, ~13.7].
BlockScheme small_two_block(double k) { return build_scheme(3e10, k, 1, 1.1); }

// Single hand-built block over the primes {2, 3, 5}.
BlockScheme hand_block(double k, int order) {
    BlockScheme s;
    s.T = 2000.0;
    s.k = k;
    s.J = 1;
    s.alphas = {0.0, 0.25};
    s.intervals = {{1.0, 6.0}};
    s.ell = {static_cast<double>(order)};
    s.orders = {order};
    return s;
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

TEST_CASE("build_scheme structural examples") {
    // loglog T = 4, M = 1, ratio = 20: alpha_1 = 1/16 <= 0.1, alpha_2 = 1.25.
    auto s = build_scheme(big_T(), 1.0, 1, 20.0);
    CHECK(s.J == 2);
    CHECK_FALSE(s.degenerate);
    REQUIRE(s.alphas.size() == 3);
    CHECK(s.alphas[0] == 0.0);
    CHECK(s.alphas[1] == Approx(0.0625).epsilon(1e-9));
    CHECK(s.alphas[2] == Approx(1.25).epsilon(1e-9));
    // intervals tile (1, T^{alpha_J}]
    CHECK(s.intervals[0].first == Approx(1.0));
    CHECK(s.intervals[0].second == Approx(s.intervals[1].first));
    CHECK(s.orders[0] == static_cast<int>(std::ceil(s.ell[0])));
    CHECK(s.ell[0] == Approx(kE * kE * 1.0 * std::pow(s.alphas[1], -0.75)));
    CHECK(s.length_exponent == Approx(40.0 * kE * kE * std::pow(10.0, -0.25)));

    // M = 3: alpha_1 = 0.0625 > 1e-3, empty max set, degenerate.
    auto d = build_scheme(big_T(), 1.0, 3, 20.0);
    CHECK(d.J == 1);
    CHECK(d.degenerate);

    // desk-scale T is degenerate at M = 1 too
    auto t2000 = build_scheme(2000.0, 1.0, 1, 20.0);
    CHECK(t2000.degenerate);
    CHECK(t2000.J == 1);
    CHECK(t2000.intervals[0].second < 7.0);  // primes {2, 3, 5}

    CHECK_THROWS_AS(build_scheme(10.0, 1.0, 1, 20.0), Error);
    CHECK_THROWS_AS(build_scheme(2000.0, 0.0, 1, 20.0), Error);
    CHECK_THROWS_AS(build_scheme(2000.0, 1.0, 0, 20.0), Error);
    CHECK_THROWS_AS(build_scheme(2000.0, 1.0, 1, 1.0), Error);
}

TEST_CASE("support length bound sum alpha_j order_j") {
    for (double k : {0.3, 1.0, 1.5}) {
        auto s = build_scheme(big_T(), k, 1, 20.0);
        REQUIRE_FALSE(s.degenerate);
        double sum = 0.0;
        for (int j = 1; j <= s.J; ++j) sum += s.alphas[j] * s.orders[j - 1];
        CHECK(sum <= s.length_exponent);
        auto s2 = small_two_block(k);
        REQUIRE(s2.J == 2);
        sum = 0.0;
        for (int j = 1; j <= s2.J; ++j) sum += s2.alphas[j] * s2.orders[j - 1];
        CHECK(sum <= s2.length_exponent);
    }
}

TEST_CASE("truncated_exp values") {
    CHECK(truncated_exp(1.0, {2.0, 0.0}) == Complex{3.0, 0.0});
    CHECK(truncated_exp(2.5, {1.0, 0.0}).real() == Approx(8.0 / 3.0).epsilon(1e-15));
    CHECK(truncated_exp(0.0, {123.0, 4.0}) == Complex{1.0, 0.0});
    CHECK_THROWS_AS(truncated_exp(-1.0, {0.0, 0.0}), Error);
    // high degree converges to exp
    for (double x : {-2.0, 0.5, 2.0})
        CHECK(std::abs(truncated_exp(40.0, {x, 1.0}) - std::exp(Complex{x, 1.0})) < 1e-12);
}

TEST_CASE("truncation bound |E_K(z) - e^z| <= |z|^K/K! <= (ae/20)^K") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> kk(1, 40);
    std::uniform_real_distribution<double> ua(1e-6, 2.0), uu(0.0, 1.0),
        uth(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 300; ++trial) {
        int K = kk(rng);
        double a = ua(rng);
        double r = uu(rng) * a * K / 20.0;
        Complex z = std::polar(r, uth(rng));

        // tail series = E_K(z) - e^z exactly; summed directly so tiny
        // magnitudes are not lost to cancellation
        Complex term = 1.0;
        for (int i = 1; i <= K; ++i) term *= z / static_cast<double>(i);
        Complex tail = 0.0;
        for (int i = K + 1; i <= K + 400; ++i) {
            term *= z / static_cast<double>(i);
            tail += term;
            if (std::abs(term) < 1e-300) break;
        }
        double log_bound1 = K * std::log(std::max(r, 1e-300)) - std::lgamma(K + 1.0);
        double log_bound2 = K * std::log(a * kE / 20.0);
        CHECK(std::log(std::max(std::abs(tail), 1e-300)) <= log_bound1 + 1e-9);
        CHECK(log_bound1 <= log_bound2 + 1e-9);

        // and the implementation reproduces E_K(z) = e^z - tail
        Complex e = truncated_exp(static_cast<double>(K), z);
        CHECK(std::abs(e - (std::exp(z) - tail)) <= 1e-12 * std::exp(std::abs(z)));
    }
    // K = 10, a = 1, z at 0.4 of the admissible radius aK/20
    Complex z{0.2, 0.0};
    CHECK(std::abs(truncated_exp(10.0, z) - std::exp(z)) <= std::pow(kE / 20.0, 10.0));
}

TEST_CASE("r_exponent branches") {
    CHECK(r_exponent(0.5) == 4);
    CHECK(r_exponent(0.3) == 6);
    CHECK(r_exponent(1.0) == 3);
    CHECK(r_exponent(1.5) == 3);
    CHECK(r_exponent(2.0) == 3);
    CHECK_THROWS_AS(r_exponent(0.0), Error);
}

TEST_CASE("eval_prime_sum") {
    BlockScheme s = hand_block(1.0, 2);
    s.J = 2;
    s.intervals = {{2.0, 4.0}, {13.0, 16.0}};
    s.ell = {2.0, 2.0};
    s.orders = {2, 2};
    CHECK(eval_prime_sum(s, 1, {1.0, 0.0}, table()) == Complex{1.0 / 3.0, 0.0});
    CHECK(eval_prime_sum(s, 2, {1.0, 0.0}, table()) == Complex{0.0, 0.0});  // no primes
    CHECK_THROWS_AS(eval_prime_sum(s, 3, {1.0, 0.0}, table()), Error);

    s.intervals[0] = {2.0, 10.0};
    double expect = 1.0 / std::sqrt(3.0) + 1.0 / std::sqrt(5.0) + 1.0 / std::sqrt(7.0);
    CHECK(eval_prime_sum(s, 1, {0.5, 0.0}, table()).real() == Approx(expect).epsilon(1e-14));

    auto t2000 = build_scheme(2000.0, 1.0, 1, 20.0);
    CHECK(eval_prime_sum(t2000, 1, {0.0, 0.0}, table()).real() == Approx(3.0));  // {2,3,5}
}

TEST_CASE("eval_factor and eval_mollifier") {
    // single-prime block {3}, order 1: N_1 = 1 + alpha 3^{-s}
    BlockScheme s = hand_block(1.0, 1);
    s.intervals = {{2.0, 4.0}};
    s.ell = {1.0};
    s.orders = {1};
    Complex at{0.5, 3.0};
    Complex expect = 1.0 + std::exp(-at * std::log(3.0));
    CHECK(std::abs(eval_factor(s, 1, 1.0, at, table()) - expect) < 1e-14);

    // mollifier = product of factors
    auto two = small_two_block(1.0);
    Complex prod = eval_factor(two, 1, 0.7, at, table()) * eval_factor(two, 2, 0.7, at, table());
    CHECK(std::abs(eval_mollifier(two, 0.7, at, table()) - prod) < 1e-12 * std::abs(prod));
}

TEST_CASE("eval_tail") {
    BlockScheme s = hand_block(1.0, 2);
    s.intervals = {{13.0, 16.0}};  // empty
    CHECK(eval_tail(s, 1, 1.0, {0.5, 0.0}, table()) == Complex{0.0, 0.0});

    auto t2000 = build_scheme(2000.0, 1.0, 1, 20.0);
    Complex at{0.5, 7.0};
    Complex p = eval_prime_sum(t2000, 1, at, table());
    int K = t2000.orders[0];
    Complex base = 64.0 * 2.5 * p / static_cast<double>(K);
    Complex expect = std::pow(base, static_cast<double>(K));
    Complex got = eval_tail(t2000, 1, 1.0, at, table());
    CHECK(std::abs(got - expect) < 1e-9 * std::abs(expect));
}

TEST_CASE("expand_coefficients hand cases") {
    // one block {3}, order 2, alpha = 1: a(3) = 1, a(9) = 1/2
    BlockScheme s = hand_block(1.0, 2);
    s.intervals = {{2.0, 4.0}};
    auto mc = expand_coefficients(s, 1.0, table());
    REQUIRE(mc.coeffs.size() == 3);
    CHECK(mc.coeffs.at(1) == 1.0);
    CHECK(mc.coeffs.at(3) == 1.0);
    CHECK(mc.coeffs.at(9) == Approx(0.5));
    CHECK(mc.max_frequency == 9);

    // two blocks {3} order 2, {5} order 1: coefficients multiply across blocks
    BlockScheme two = hand_block(1.0, 2);
    two.J = 2;
    two.intervals = {{2.0, 4.0}, {4.0, 6.0}};
    two.ell = {2.0, 1.0};
    two.orders = {2, 1};
    double alpha = 0.7;
    auto m2 = expand_coefficients(two, alpha, table());
    REQUIRE(m2.coeffs.size() == 6);
    CHECK(m2.coeffs.at(5) == Approx(alpha));
    CHECK(m2.coeffs.at(15) == Approx(alpha * alpha));
    CHECK(m2.coeffs.at(45) == Approx(alpha * alpha * alpha / 2.0));
    CHECK(m2.coeffs.at(15) == Approx(m2.coeffs.at(3) * m2.coeffs.at(5)));
}

TEST_CASE("expansion support and coefficient bound") {
    auto scheme = build_scheme(2000.0, 1.0, 1, 20.0);
    double alpha = 1.0;
    auto mc = expand_coefficients(scheme, alpha, table());
    CHECK(mc.coeffs.size() > 100);
    int order = scheme.orders[0];
    for (const auto& [n, c] : mc.coeffs) {
        // factor over the block primes only
        std::uint64_t m = n;
        int big_omega = 0, omega = 0;
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
            if (m % p == 0) ++omega;
            while (m % p == 0) {
                m /= p;
                ++big_omega;
            }
        }
        CHECK(m == 1);  // composed of block primes
        CHECK(big_omega <= order);
        CHECK(c <= std::exp(std::abs(alpha) * omega) * (1.0 + 1e-12));  // eq bound
    }
    // max frequency respects the length bound (compare in logs)
    CHECK(std::log(static_cast<double>(mc.max_frequency)) <=
          scheme.length_exponent * std::log(scheme.T));
}

TEST_CASE("two-path consistency: expand then evaluate equals factor product") {
    auto scheme = build_scheme(2000.0, 1.0, 1, 20.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> tt(0.0, 50.0);
    for (double alpha : {1.0, -0.7, 0.5}) {
        auto mc = expand_coefficients(scheme, alpha, table());
        for (int i = 0; i < 70; ++i) {
            Complex s{0.5, tt(rng)};
            Complex direct = eval_mollifier(scheme, alpha, s, table());
            Complex expanded = mc.evaluate(s);
            CHECK(std::abs(direct - expanded) <= 1e-9 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("submultiplicativity of a_{k-1} for k > 1") {
    // alpha = k - 1 = 0.5; the k = 1 scheme keeps frequencies under 2^63
    auto scheme = build_scheme(2000.0, 1.0, 1, 20.0);
    auto mc = expand_coefficients(scheme, 0.5, table());
    std::vector<std::pair<std::uint64_t, double>> entries(mc.coeffs.begin(), mc.coeffs.end());
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    int checked = 0;
    while (checked < 1000) {
        auto [m, am] = entries[pick(rng)];
        auto [n, an] = entries[pick(rng)];
        if (m > mc.max_frequency / n) continue;
        auto it = mc.coeffs.find(m * n);
        if (it == mc.coeffs.end()) continue;
        CHECK(it->second <= am * an * (1.0 + 1e-12));
        ++checked;
    }
}

TEST_CASE("expansion guards") {
    // order so large that frequencies pass 2^63
    BlockScheme s = hand_block(1.0, 200);
    CHECK_THROWS_AS(expand_coefficients(s, 1.0, table()), SupportSizeError);
}

namespace {

// est0 / est0' right-hand side and left-hand side at s = 1/2 + it.
void check_lemma_pointwise(const BlockScheme& scheme, double k, int j, double t,
                           const ArithmeticTable& tab) {
    Complex s{0.5, t};
    double ell = scheme.ell[j - 1];
    double eps = std::exp(-ell);
    double nk = std::abs(eval_factor(scheme, j, k, s, tab));
    double nk1 = std::abs(eval_factor(scheme, j, k - 1.0, s, tab));
    double q = std::abs(eval_tail(scheme, j, k, s, tab));
    int rk = r_exponent(k);
    double lhs, first;
    if (k <= 0.5) {
        lhs = std::pow(nk, 2.0 / k) * nk1 * nk1;
        first = nk * nk * std::pow(1.0 + eps, 2.0 / k + 2.0) * std::pow(1.0 - eps, -2.0);
    } else {
        lhs = std::pow(nk1 * nk, 2.0 * k / (2.0 * k - 1.0));
        first = nk * nk * std::pow(1.0 + eps, 2.0 * k / (2.0 * k - 1.0)) *
                std::pow(1.0 - eps, -2.0);
    }
    double rhs = first + std::pow(q, 2.0 * rk);
    CHECK(lhs <= rhs * (1.0 + 1e-12));
}

}  // namespace

TEST_CASE("lemma pointwise inequalities est0 and est0'") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> tt(0.0, 1000.0);
    for (double k : {0.3, 1.5}) {
        auto deg = build_scheme(2000.0, k, 1, 20.0);
        auto two = small_two_block(k);
        REQUIRE(two.J == 2);
        for (int i = 0; i < 1000; ++i) {
            double t = tt(rng);
            check_lemma_pointwise(deg, k, 1, t, table());
            check_lemma_pointwise(two, k, 1, t, table());
            check_lemma_pointwise(two, k, 2, t, table());
        }
    }
}

TEST_CASE("block prime-sum control") {
    auto two = small_two_block(1.0);
    REQUIRE(two.J == 2);
    double sum = 0.0;
    for (std::uint32_t p : table().primes_in(two.intervals[1].first, two.intervals[1].second))
        sum += 1.0 / p;
    CHECK(sum > 0.0);
    CHECK(sum <= 10.0);
}

TEST_CASE("diagonal upper bound against a hand enumeration") {
    // single block {2,3,5}, order 2, k = 1: r_k = 3, R = 6.
    BlockScheme s = hand_block(1.0, 2);
    double k = 1.0;
    const std::uint64_t P[3] = {2, 3, 5};
    double fact[7] = {1, 1, 2, 6, 24, 120, 720};
    // sum over Omega <= 2 of k^{2 Omega} / (n prod (m_p!)^2)
    double sum1 = 0.0;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
            for (int c = 0; a + b + c <= 2; ++c) {
                double n = static_cast<double>(pow_u64(P[0], a) * pow_u64(P[1], b) *
                                               pow_u64(P[2], c));
                sum1 += std::pow(k, 2.0 * (a + b + c)) /
                        (n * fact[a] * fact[a] * fact[b] * fact[b] * fact[c] * fact[c]);
            }
    // sum over Omega = 6 of 1 / (n prod (m_p!)^2)
    double sum2 = 0.0;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b) {
            int c = 6 - a - b;
            double n = static_cast<double>(pow_u64(P[0], a) * pow_u64(P[1], b) *
                                           pow_u64(P[2], c));
            sum2 += 1.0 / (n * fact[a] * fact[a] * fact[b] * fact[b] * fact[c] * fact[c]);
        }
    double tail_coef = std::pow(64.0 * 2.5 / 2.0, 12.0) * 720.0 * 720.0;
    double expect = sum1 + tail_coef * sum2;
    double got = diagonal_upper(s, k, table());
    CHECK(got == Approx(expect).epsilon(1e-9));
    CHECK(diagonal_upper_log(s, k, table()) == Approx(std::log(expect)).epsilon(1e-9));
}

TEST_CASE("diagonal upper bound is finite and positive for built schemes") {
    for (double k : {0.3, 1.0, 1.5}) {
        auto scheme = build_scheme(2000.0, k, 1, 20.0);
        double lg = diagonal_upper_log(scheme, k, table());
        CHECK(std::isfinite(lg));
        auto two = small_two_block(k);
        CHECK(std::isfinite(diagonal_upper_log(two, k, table())));
    }
}
