#ifndef ZETAMOM_ARITH_HPP
#define ZETAMOM_ARITH_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace zetamom {

struct FactoredInteger {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;  // (prime, exponent), primes increasing
};

// Smallest-prime-factor sieve; queries on a built table are read-only.
class ArithmeticTable {
public:
    explicit ArithmeticTable(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    bool is_prime(std::uint64_t n) const;

    FactoredInteger factor(std::uint64_t n) const;

    // Primes p with lo < p <= hi. Throws SieveLimitError if hi > limit.
    std::vector<std::uint32_t> primes_in(double lo, double hi) const;

    double von_mangoldt(std::uint64_t n) const;
    // Lambda extended by zero off the integers.
    double von_mangoldt_rational(std::uint64_t a, std::uint64_t b) const;
    // Lambda_2 via Lambda*log + Lambda(*)Lambda; supported on omega(n) <= 2.
    double lambda2(std::uint64_t n) const;
    // Lambda(n) for n = p, or n = p^2 with n <= script_L; zero otherwise.
    double lambda_script_l(std::uint64_t n, double script_L) const;
    // Multiplicative g with g(p^r) = 1/r!; exact in double for every
    // exponent below the factorial overflow.
    double g_mult(std::uint64_t n) const;
    std::pair<int, int> omega_pair(std::uint64_t n) const;  // (omega, Omega)
    // Exact sum of 1/p over p <= x, in increasing-p order.
    double mertens_prime_sum(double x) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

using CoeffMap = std::map<std::uint64_t, double>;

// f*g(k) = sum_{mn=k} f(m) g(n), exact up to limit.
CoeffMap dirichlet_convolve(const CoeffMap& f, const CoeffMap& g, std::uint64_t limit);

}  // namespace zetamom

#endif
