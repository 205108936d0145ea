#include "zetamom/arith.hpp"

#include <algorithm>
#include <cmath>

#include "zetamom/errors.hpp"

namespace zetamom {

ArithmeticTable::ArithmeticTable(std::uint32_t limit) : limit_(limit) {
    spf_.assign(limit_ + 1, 0);
    for (std::uint64_t i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            primes_.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i; j <= limit_; j += i)
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

bool ArithmeticTable::is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    if (n > limit_) throw SieveLimitError("is_prime: n beyond sieve limit");
    return spf_[n] == n;
}

FactoredInteger ArithmeticTable::factor(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw SieveLimitError("factor: n beyond sieve limit");
    FactoredInteger f;
    f.n = n;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    return f;
}

std::vector<std::uint32_t> ArithmeticTable::primes_in(double lo, double hi) const {
    if (hi > static_cast<double>(limit_))
        throw SieveLimitError("primes_in: interval reaches past the sieve limit");
    std::vector<std::uint32_t> out;
    auto it = std::upper_bound(primes_.begin(), primes_.end(), lo,
                               [](double v, std::uint32_t p) { return v < static_cast<double>(p); });
    for (; it != primes_.end() && static_cast<double>(*it) <= hi; ++it) out.push_back(*it);
    return out;
}

double ArithmeticTable::von_mangoldt(std::uint64_t n) const {
    if (n < 2) return 0.0;
    auto f = factor(n);
    if (f.factors.size() != 1) return 0.0;
    return std::log(static_cast<double>(f.factors[0].first));
}

double ArithmeticTable::von_mangoldt_rational(std::uint64_t a, std::uint64_t b) const {
    if (b == 0) throw Error("von_mangoldt_rational: zero denominator");
    if (a % b != 0) return 0.0;  // Lambda vanishes off the integers
    return von_mangoldt(a / b);
}

double ArithmeticTable::lambda2(std::uint64_t n) const {
    // Lambda_2 = Lambda*log + Lambda conv Lambda, closed form per factorization:
    //   Lambda_2(p^i)     = (2i-1) (log p)^2
    //   Lambda_2(p^i q^j) = 2 log p log q
    //   zero when omega(n) >= 3 or n = 1
    if (n < 2) return 0.0;
    auto f = factor(n);
    if (f.factors.size() == 1) {
        double lp = std::log(static_cast<double>(f.factors[0].first));
        return (2.0 * f.factors[0].second - 1.0) * lp * lp;
    }
    if (f.factors.size() == 2) {
        double lp = std::log(static_cast<double>(f.factors[0].first));
        double lq = std::log(static_cast<double>(f.factors[1].first));
        return 2.0 * lp * lq;
    }
    return 0.0;
}

double ArithmeticTable::lambda_script_l(std::uint64_t n, double script_L) const {
    if (n < 2) return 0.0;
    if (is_prime(n)) return std::log(static_cast<double>(n));
    auto f = factor(n);
    if (f.factors.size() == 1 && f.factors[0].second == 2 &&
        static_cast<double>(n) <= script_L)
        return std::log(static_cast<double>(f.factors[0].first));
    return 0.0;
}

double ArithmeticTable::g_mult(std::uint64_t n) const {
    double g = 1.0;
    for (auto [p, e] : factor(n).factors) {
        double fact = 1.0;
        for (int i = 2; i <= e; ++i) fact *= i;
        g /= fact;
    }
    return g;
}

std::pair<int, int> ArithmeticTable::omega_pair(std::uint64_t n) const {
    int omega = 0, big_omega = 0;
    for (auto [p, e] : factor(n).factors) {
        ++omega;
        big_omega += e;
    }
    return {omega, big_omega};
}

double ArithmeticTable::mertens_prime_sum(double x) const {
    if (x < 2.0) throw Error("mertens_prime_sum: need x >= 2");
    if (x > static_cast<double>(limit_))
        throw SieveLimitError("mertens_prime_sum: x beyond sieve limit");
    double s = 0.0;
    for (std::uint32_t p : primes_) {
        if (static_cast<double>(p) > x) break;
        s += 1.0 / static_cast<double>(p);
    }
    return s;
}

CoeffMap dirichlet_convolve(const CoeffMap& f, const CoeffMap& g, std::uint64_t limit) {
    CoeffMap out;
    for (const auto& [m, fm] : f) {
        if (m == 0 || m > limit) continue;
        for (const auto& [n, gn] : g) {
            if (n == 0 || n > limit / m) break;
            out[m * n] += fm * gn;
        }
    }
    return out;
}

}  // namespace zetamom
