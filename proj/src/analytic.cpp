#include "zetamom/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zetamom/errors.hpp"

namespace zetamom {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};

// B_{2r}/(2r)! = (-1)^{r+1} 2 zeta(2r) / (2 pi)^{2r}. Computing the
// coefficient through zeta(2r) avoids carrying huge Bernoulli numerators.
double bernoulli_coef(int r) {
    static std::vector<double> cache;  // cache[r-1]
    while (static_cast<int>(cache.size()) < r) {
        int rr = static_cast<int>(cache.size()) + 1;
        double s = 2.0 * rr;
        double z = 1.0;
        for (int n = 2; n < 64; ++n) {
            double term = std::pow(static_cast<double>(n), -s);
            z += term;
            if (term < 1e-18) break;
        }
        // Euler-Maclaurin tail beyond n = 64, accurate to ~1e-14 at s = 2.
        double M = 64.0;
        z += std::pow(M, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(M, -s) +
             s * std::pow(M, -s - 1.0) / 12.0 -
             s * (s + 1.0) * (s + 2.0) * std::pow(M, -s - 3.0) / 720.0;
        double sign = (rr % 2 == 1) ? 1.0 : -1.0;
        cache.push_back(sign * 2.0 * z * std::pow(kTwoPi, -2.0 * rr));
    }
    return cache[r - 1];
}

struct LnTable {
    std::vector<double> ln;     // ln[n]
    std::vector<double> rsqrt;  // n^{-1/2}
    void ensure(int n) {
        if (static_cast<int>(ln.size()) > n) return;
        std::size_t old = ln.size();
        if (old == 0) {
            ln.assign(2, 0.0);
            rsqrt.assign(2, 1.0);
            old = 2;
        }
        ln.resize(n + 1);
        rsqrt.resize(n + 1);
        for (std::size_t m = old; m <= static_cast<std::size_t>(n); ++m) {
            ln[m] = std::log(static_cast<double>(m));
            rsqrt[m] = 1.0 / std::sqrt(static_cast<double>(m));
        }
    }
};

thread_local LnTable tl_table;

int main_sum_length(double t, const PrecisionProfile& p) {
    double n = p.term_factor * std::abs(t) / kTwoPi;
    return std::max(p.min_terms, static_cast<int>(std::ceil(n)) + p.extra_terms);
}

void check_domain(Complex s, const PrecisionProfile& p) {
    if (s == Complex{1.0, 0.0})
        throw PoleError("zeta: pole at s = 1");
    if (std::abs(s.imag()) > p.t_ceiling)
        throw CeilingError("zeta: |Im s| above the configured ceiling");
}

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex log_gamma_core(Complex z) {
    z -= 1.0;
    Complex x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    Complex t = z + 7.5;
    return 0.5 * std::log(kTwoPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(z) up to a multiple of 2 pi i, stable for large |Im z|.
Complex log_sin(Complex z) {
    Complex log2i = std::log(Complex{0.0, 2.0});
    if (z.imag() >= 0.0) {
        // sin z = e^{-iz} (e^{2iz} - 1) / (2i), |e^{2iz}| <= 1
        return -kI * z + std::log(std::exp(2.0 * kI * z) - 1.0) - log2i;
    }
    // sin z = e^{iz} (1 - e^{-2iz}) / (2i), |e^{-2iz}| < 1
    return kI * z + std::log(1.0 - std::exp(-2.0 * kI * z)) - log2i;
}

Complex cot(Complex z) {
    if (z.imag() >= 0.0) {
        Complex w = std::exp(2.0 * kI * z);
        return kI * (w + 1.0) / (w - 1.0);
    }
    Complex u = std::exp(-2.0 * kI * z);
    return kI * (1.0 + u) / (1.0 - u);
}

}  // namespace

PrecisionProfile PrecisionProfile::standard() { return PrecisionProfile{}; }

PrecisionProfile PrecisionProfile::oracle() {
    PrecisionProfile p;
    p.term_factor = 2.6;
    p.extra_terms = 20;
    p.min_terms = 40;
    p.bernoulli_order = 20;
    p.tolerance = 1e-12;
    p.name = "oracle";
    return p;
}

double rvm_main_term(double T) {
    if (T <= 0.0) return 0.0;
    return (T / kTwoPi) * std::log(T / (kTwoPi * std::numbers::e));
}

std::int64_t ZeroTable::count_below(double t) const {
    std::int64_t c = 0;
    for (const auto& z : zeros) {
        if (z.gamma > t) break;
        ++c;
    }
    return c;
}

Complex log_gamma(Complex z) {
    if (z.real() < 0.5) {
        // Reflection; the branch is only determined up to 2 pi i, which is
        // fine for every consumer here (exp or Im on Re z > 0).
        return std::log(kPi) - log_sin(kPi * z) - log_gamma_core(1.0 - z);
    }
    return log_gamma_core(z);
}

Complex digamma(Complex z) {
    if (z.real() < 0.5)
        return digamma(1.0 - z) - kPi * cot(kPi * z);
    Complex acc = 0.0;
    while (std::abs(z) < 12.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic series: log z - 1/(2z) - sum B_{2n} / (2n z^{2n}).
    static const double b2n_over_2n[7] = {
        1.0 / 12.0,  -1.0 / 120.0,  1.0 / 252.0,   -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
    Complex inv2 = 1.0 / (z * z);
    Complex term = inv2;
    Complex sum = std::log(z) - 0.5 / z;
    for (int n = 0; n < 7; ++n) {
        sum -= b2n_over_2n[n] * term;
        term *= inv2;
    }
    return acc + sum;
}

Complex zeta(Complex s, const PrecisionProfile& profile) {
    check_domain(s, profile);
    int N = main_sum_length(s.imag(), profile);
    tl_table.ensure(N);
    const double sigma = s.real();
    const double t = s.imag();

    double re = 0.0, im = 0.0;
    if (sigma == 0.5) {
        for (int n = 1; n < N; ++n) {
            double a = tl_table.rsqrt[n];
            double phi = -t * tl_table.ln[n];
            re += a * std::cos(phi);
            im += a * std::sin(phi);
        }
    } else {
        for (int n = 1; n < N; ++n) {
            double a = std::exp(-sigma * tl_table.ln[n]);
            double phi = -t * tl_table.ln[n];
            re += a * std::cos(phi);
            im += a * std::sin(phi);
        }
    }
    Complex sum{re, im};

    const double lnN = tl_table.ln[N];
    Complex Nms = std::exp(-s * lnN);       // N^{-s}
    sum += static_cast<double>(N) * Nms / (s - 1.0);  // N^{1-s}/(s-1)
    sum += 0.5 * Nms;

    Complex rising = s;                  // (s)(s+1)...(s+2r-2)
    Complex Npow = Nms / static_cast<double>(N);  // N^{-s-2r+1}, r = 1
    const double invN2 = 1.0 / (static_cast<double>(N) * N);
    for (int r = 1; r <= profile.bernoulli_order; ++r) {
        sum += bernoulli_coef(r) * rising * Npow;
        rising *= (s + static_cast<double>(2 * r - 1)) * (s + static_cast<double>(2 * r));
        Npow *= invN2;
    }
    return sum;
}

Complex zeta_prime(Complex s, const PrecisionProfile& profile) {
    check_domain(s, profile);
    int N = main_sum_length(s.imag(), profile);
    tl_table.ensure(N);
    const double sigma = s.real();
    const double t = s.imag();

    double re = 0.0, im = 0.0;
    for (int n = 2; n < N; ++n) {
        double L = tl_table.ln[n];
        double a = -L * std::exp(-sigma * L);
        double phi = -t * L;
        re += a * std::cos(phi);
        im += a * std::sin(phi);
    }
    Complex sum{re, im};

    const double lnN = tl_table.ln[N];
    Complex Nms = std::exp(-s * lnN);
    Complex N1ms = static_cast<double>(N) * Nms;
    sum += -lnN * N1ms / (s - 1.0) - N1ms / ((s - 1.0) * (s - 1.0));
    sum += -0.5 * lnN * Nms;

    Complex rising = s;
    Complex rising_deriv = 1.0;          // d/ds of the Pochhammer product
    Complex Npow = Nms / static_cast<double>(N);
    const double invN2 = 1.0 / (static_cast<double>(N) * N);
    for (int r = 1; r <= profile.bernoulli_order; ++r) {
        sum += bernoulli_coef(r) * Npow * (rising_deriv - rising * lnN);
        Complex f1 = s + static_cast<double>(2 * r - 1);
        Complex f2 = s + static_cast<double>(2 * r);
        rising_deriv = rising_deriv * f1 * f2 + rising * (f1 + f2);
        rising *= f1 * f2;
        Npow *= invN2;
    }
    return sum;
}

Complex chi(Complex s) {
    // log chi = s log 2 + (s-1) log pi + lgamma(1-s) + log sin(pi s/2)
    Complex lg = (1.0 - s).real() < 0.5
                     ? std::log(kPi) - log_sin(kPi * (1.0 - s)) - log_gamma_core(s)
                     : log_gamma_core(1.0 - s);
    Complex logchi = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + lg + log_sin(kPi * s / 2.0);
    return std::exp(logchi);
}

Complex chi_log_deriv(Complex s) {
    if (s.real() < -1.0 || s.real() > 2.0 || std::abs(s.imag()) < 1.0)
        throw Error("chi_log_deriv: s outside the strip -1 <= Re s <= 2, |Im s| >= 1");
    return std::log(2.0) + std::log(kPi) - digamma(1.0 - s) + 0.5 * kPi * cot(kPi * s / 2.0);
}

double rs_theta(double t) {
    return log_gamma(Complex{0.25, 0.5 * t}).imag() - 0.5 * t * std::log(kPi);
}

std::pair<double, double> hardy_z_full(double t, const PrecisionProfile& profile) {
    Complex z = zeta(Complex{0.5, t}, profile);
    double th = rs_theta(t);
    Complex v = std::polar(1.0, th) * z;
    return {v.real(), v.imag()};
}

double hardy_z(double t, const PrecisionProfile& profile) {
    return hardy_z_full(t, profile).first;
}

namespace {

double scan_step(double t, double base) {
    double x = std::max(t, 20.0) / kTwoPi;
    double gap = kTwoPi / std::log(x);
    return std::min(base, 0.25 * gap);
}

Zero refine(double a, double b, double za, double zb, double tol,
            const PrecisionProfile& profile) {
    (void)zb;
    while (0.5 * (b - a) > tol) {
        double mid = 0.5 * (a + b);
        double zm = hardy_z(mid, profile);
        if ((za < 0.0) == (zm < 0.0)) {
            a = mid;
            za = zm;
        } else {
            b = mid;
        }
    }
    Zero z;
    z.gamma = 0.5 * (a + b);
    z.width = 0.5 * (b - a);
    return z;
}

std::vector<Zero> scan_range(double t_lo, double t_hi, double tol, double base_step,
                             const PrecisionProfile& profile) {
    std::vector<Zero> out;
    double t = std::max(t_lo, 1e-12);
    double zt = hardy_z(t, profile);
    while (t < t_hi) {
        double next = std::min(t + scan_step(t, base_step), t_hi);
        double zn = hardy_z(next, profile);
        if ((zt < 0.0) != (zn < 0.0) || zn == 0.0)
            out.push_back(refine(t, next, zt, zn, tol, profile));
        t = next;
        zt = zn;
    }
    // keep strictly inside (t_lo, t_hi]
    std::erase_if(out, [&](const Zero& z) { return z.gamma <= t_lo || z.gamma > t_hi; });
    return out;
}

}  // namespace

ZeroTable find_zeros(double t_lo, double t_hi, double tol, const PrecisionProfile& profile) {
    if (!(0.0 <= t_lo && t_lo < t_hi) || t_hi > profile.t_ceiling || tol <= 0.0)
        throw Error("find_zeros: need 0 <= t_lo < t_hi <= ceiling and tol > 0");

    ZeroTable table;
    table.t_lo = t_lo;
    table.t_max = t_hi;
    table.rvm_main = rvm_main_term(t_hi) - rvm_main_term(t_lo);
    double slack = 2.0 * std::log(std::max(t_hi, 2.0));

    double base_step = 0.05;
    for (int attempt = 0;; ++attempt) {
        table.zeros = scan_range(t_lo, t_hi, tol, base_step, profile);
        std::int64_t count = static_cast<std::int64_t>(table.zeros.size());
        std::int64_t expected = static_cast<std::int64_t>(std::llround(table.rvm_main));
        table.count_check = count - expected;
        if (std::abs(static_cast<double>(count) - table.rvm_main) <= slack) break;
        if (attempt >= 3)
            throw MissedZeroError("find_zeros: count check failed after rescans");
        base_step *= 0.5;
    }
    for (std::size_t i = 0; i < table.zeros.size(); ++i)
        table.zeros[i].index = static_cast<std::int64_t>(i) + 1;
    return table;
}

}  // namespace zetamom
