#include "zetamom/moments.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "zetamom/errors.hpp"
#include "zetamom/reduce.hpp"

namespace zetamom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_full_table(const ZeroTable& zeros) {
    if (zeros.t_lo != 0.0) throw CoverageError("zero table must start at t = 0");
    if (zeros.zeros.empty()) throw Error("empty zero table");
}

double weight_value(MvtWeight g, double t) {
    switch (g) {
        case MvtWeight::One: return 1.0;
        case MvtWeight::Log: return std::log(t / kTwoPi);
        case MvtWeight::LogSquared: {
            double L = std::log(t / kTwoPi);
            return L * L;
        }
    }
    return 0.0;
}

double weight_deriv_abs(MvtWeight g, double t) {
    switch (g) {
        case MvtWeight::One: return 0.0;
        case MvtWeight::Log: return 1.0 / t;
        case MvtWeight::LogSquared: return 2.0 * std::abs(std::log(t / kTwoPi)) / t;
    }
    return 0.0;
}

template <typename F>
Complex simpson(const F& f, double a, double b, Complex fa, Complex fm, Complex fb) {
    (void)f;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
Complex adaptive_simpson(const F& f, double a, double b, Complex fa, Complex fm, Complex fb,
                         Complex whole, double tol, int depth) {
    if (depth > 40) throw QuadratureError("adaptive Simpson recursion limit");
    double m = 0.5 * (a + b);
    Complex flm = f(0.5 * (a + m));
    Complex frm = f(0.5 * (m + b));
    Complex left = simpson(f, a, m, fa, flm, fm);
    Complex right = simpson(f, m, b, fm, frm, fb);
    Complex delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

template <typename F>
Complex integrate(const F& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    Complex whole = simpson(f, a, b, fa, fm, fb);
    double scale = std::max(std::abs(whole), 1.0);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, rel_tol * scale, 0);
}

}  // namespace

MomentReport compute_moment(const ZeroTable& zeros, double k, const PrecisionProfile& profile) {
    if (k < 0.0) throw Error("compute_moment: k must be >= 0");
    require_full_table(zeros);
    auto start = std::chrono::steady_clock::now();

    MomentReport r;
    r.T = zeros.t_max;
    r.k = k;
    r.n_zeros = static_cast<std::int64_t>(zeros.zeros.size());

    std::vector<double> terms;
    terms.reserve(zeros.zeros.size());
    for (const auto& z : zeros.zeros) {
        if (k == 0.0) {
            terms.push_back(1.0);
            continue;
        }
        Complex zp = zeta_prime(Complex{0.5, z.gamma}, profile);
        terms.push_back(std::pow(std::abs(zp), 2.0 * k));
    }
    r.j_k = pairwise_sum(terms) / static_cast<double>(terms.size());
    r.normalizer = std::pow(std::log(r.T), k * (k + 2.0));
    r.ratio = r.j_k / r.normalizer;
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

LandauCheck landau_sum(std::uint64_t a, std::uint64_t b, double T,
                       const ZeroTable& zeros, const ArithmeticTable& table) {
    if (a < 1 || b < 1) throw Error("landau_sum: a, b must be >= 1");
    if (zeros.t_lo > T || zeros.t_max < 2.0 * T)
        throw CoverageError("landau_sum: zero table does not span (T, 2T]");

    LandauCheck c;
    c.a = a;
    c.b = b;
    c.T = T;
    double lr = std::log(static_cast<double>(a) / static_cast<double>(b));
    std::vector<Complex> terms;
    std::int64_t count = 0;
    for (const auto& z : zeros.zeros) {
        if (z.gamma <= T || z.gamma > 2.0 * T) continue;
        terms.push_back(std::polar(1.0, z.gamma * lr));
        ++count;
    }
    c.lhs = pairwise_sum(terms);
    double logT = std::log(T);
    c.error_envelope = std::sqrt(static_cast<double>(a) * b) * logT * logT;
    if (a == b) {
        c.lhs = Complex(static_cast<double>(count), 0.0);  // exact by definition
        c.main_term = c.lhs;
        c.error_envelope = 0.0;
    } else if (a > b) {
        double lam = table.von_mangoldt_rational(a, b);
        c.main_term = -(T / kTwoPi) * lam / std::sqrt(static_cast<double>(a) / b);
    } else {
        double lam = table.von_mangoldt_rational(b, a);
        c.main_term = -(T / kTwoPi) * lam / std::sqrt(static_cast<double>(b) / a);
    }
    return c;
}

MvtResult mvt_check(const ComplexSeq& a_seq, const ComplexSeq& b_seq,
                    MvtWeight g, double T1, double T2) {
    if (g != MvtWeight::One && T1 <= 0.0)
        throw Error("mvt_check: log weights need T1 > 0");
    auto dirichlet = [](const ComplexSeq& seq, double t, double sign) {
        Complex s = 0.0;
        for (const auto& [n, c] : seq)
            s += c * std::polar(1.0, sign * t * std::log(static_cast<double>(n)));
        return s;
    };
    auto integrand = [&](double t) {
        return weight_value(g, t) * dirichlet(a_seq, t, -1.0) * dirichlet(b_seq, t, 1.0);
    };

    MvtResult r;
    r.lhs = integrate(integrand, T1, T2, 1e-8);

    Complex diag = 0.0;
    for (const auto& [n, c] : a_seq) {
        auto it = b_seq.find(n);
        if (it != b_seq.end()) diag += c * it->second;
    }
    Complex g_int = integrate([&](double t) { return Complex(weight_value(g, t), 0.0); },
                              T1, T2, 1e-10);
    r.main = g_int * diag;

    double g_var = std::abs(integrate(
        [&](double t) { return Complex(weight_deriv_abs(g, t), 0.0); }, T1, T2, 1e-10));
    double na = 0.0, nb = 0.0;
    for (const auto& [n, c] : a_seq) na += static_cast<double>(n) * std::norm(c);
    for (const auto& [n, c] : b_seq) nb += static_cast<double>(n) * std::norm(c);
    r.error_envelope = (std::abs(weight_value(g, T1)) + std::abs(weight_value(g, T2)) + g_var) *
                       std::sqrt(na) * std::sqrt(nb);
    return r;
}

namespace {

struct ZeroFactors {
    Complex zp;   // zeta'(rho)
    Complex nk1;  // N(rho, k-1)
    Complex nk;   // N(rho, k)
};

std::vector<ZeroFactors> per_zero_factors(const ZeroTable& zeros, const BlockScheme& scheme,
                                          double k, const ArithmeticTable& table,
                                          const PrecisionProfile& profile) {
    std::vector<ZeroFactors> out;
    out.reserve(zeros.zeros.size());
    for (const auto& z : zeros.zeros) {
        Complex rho{0.5, z.gamma};
        ZeroFactors f;
        f.zp = zeta_prime(rho, profile);
        f.nk1 = eval_mollifier(scheme, k - 1.0, rho, table);
        f.nk = eval_mollifier(scheme, k, rho, table);
        out.push_back(f);
    }
    return out;
}

}  // namespace

HolderCheck holder_chain(const ZeroTable& zeros, const BlockScheme& scheme, double k,
                         const ArithmeticTable& table, const PrecisionProfile& profile) {
    if (!(k > 0.0)) throw Error("holder_chain: k must be positive");
    require_full_table(zeros);
    auto factors = per_zero_factors(zeros, scheme, k, table, profile);

    std::vector<Complex> lhs_terms;
    std::vector<double> s1, s2, s3;
    for (const auto& f : factors) {
        // N(1-rho, k) = N(conj rho, k) = conj N(rho, k): real coefficients.
        lhs_terms.push_back(f.zp * f.nk1 * std::conj(f.nk));
        double azp = std::abs(f.zp);
        s1.push_back(std::pow(azp, 2.0 * k));
        if (k <= 0.5) {
            s2.push_back(azp * azp * std::norm(f.nk1));
            s3.push_back(std::pow(std::abs(f.nk), 2.0 / k) * std::norm(f.nk1));
        } else {
            s2.push_back(std::pow(std::abs(f.nk1 * f.nk), 2.0 * k / (2.0 * k - 1.0)));
        }
    }

    HolderCheck h;
    h.k = k;
    h.T = zeros.t_max;
    h.lhs = std::abs(pairwise_sum(lhs_terms));
    if (k <= 0.5) {
        h.factor1 = std::pow(pairwise_sum(s1), 0.5);
        h.factor2 = std::pow(pairwise_sum(s2), (1.0 - k) / 2.0);
        h.factor3 = std::pow(pairwise_sum(s3), k / 2.0);
    } else {
        h.factor1 = std::pow(pairwise_sum(s1), 1.0 / (2.0 * k));
        h.factor2 = std::pow(pairwise_sum(s2), (2.0 * k - 1.0) / (2.0 * k));
        h.factor3 = 1.0;
    }
    h.slack = h.lhs / (h.factor1 * h.factor2 * h.factor3);
    return h;
}

TwistedSum twisted_sum(const ZeroTable& zeros, const BlockScheme& scheme, double k,
                       const ArithmeticTable& table, const PrecisionProfile& profile) {
    require_full_table(zeros);
    auto factors = per_zero_factors(zeros, scheme, k, table, profile);
    std::vector<Complex> terms;
    for (const auto& f : factors) terms.push_back(f.zp * f.nk1 * std::conj(f.nk));
    TwistedSum ts;
    ts.sum = pairwise_sum(terms);
    double T = zeros.t_max;
    ts.trend_ratio = std::abs(ts.sum) / (T * std::pow(std::log(T), k * k + 2.0));
    return ts;
}

GSumWeights build_g_weights(const BlockScheme& scheme, int j, const ArithmeticTable& table) {
    if (j < 1 || j > scheme.J) throw Error("build_g_weights: block index out of range");
    GSumWeights w;
    w.j = j;
    w.script_L = std::log(scheme.T / kTwoPi);
    const double aj_logT = scheme.alphas[j] * std::log(scheme.T);  // log T^{alpha_j}
    const double hi = scheme.intervals[j - 1].second;              // T^{alpha_j}
    auto add = [&](std::uint64_t n) {
        double lam = table.lambda_script_l(n, w.script_L);
        if (lam == 0.0) return;
        double ln_n = std::log(static_cast<double>(n));
        double v = lam / (std::exp(ln_n / aj_logT) * ln_n) * (aj_logT - ln_n) / aj_logT;
        w.weights[n] = v;
    };
    for (std::uint32_t p : table.primes_in(1.0, hi)) add(p);
    // squares p^2 <= scriptL (all below T^{alpha_j} at any sane scheme)
    for (std::uint32_t p : table.primes_in(1.0, std::sqrt(std::max(w.script_L, 0.0)))) {
        std::uint64_t n = static_cast<std::uint64_t>(p) * p;
        if (static_cast<double>(n) <= hi) add(n);
    }
    return w;
}

double g_sum(const GSumWeights& weights, const BlockScheme& scheme, int l, double t) {
    if (l < 1 || l > scheme.J) throw Error("g_sum: block index out of range");
    auto [lo, hi] = scheme.intervals[l - 1];
    double sum = 0.0;
    for (const auto& [n, w] : weights.weights) {
        double dn = static_cast<double>(n);
        if (dn <= lo || dn > hi) continue;
        sum += w / std::sqrt(dn) * std::cos(t * std::log(dn));
    }
    return sum;
}

std::vector<std::vector<double>> classify_zeros(const ZeroTable& zeros,
                                                const BlockScheme& scheme,
                                                const ArithmeticTable& table) {
    const double T = scheme.T;
    if (zeros.t_lo > T || zeros.t_max < 2.0 * T)
        throw CoverageError("classify_zeros: zero table does not span (T, 2T]");

    std::vector<GSumWeights> wj;
    for (int j = 1; j <= scheme.J; ++j) wj.push_back(build_g_weights(scheme, j, table));

    std::vector<std::vector<double>> parts(scheme.J + 1);
    for (const auto& z : zeros.zeros) {
        if (z.gamma <= T || z.gamma > 2.0 * T) continue;
        // largest j with |G_{m,l}| <= alpha_m^{-3/4} for all m <= j, m <= l <= J
        int cls = 0;
        for (int m = 1; m <= scheme.J; ++m) {
            bool ok = true;
            double thr = std::pow(scheme.alphas[m], -0.75);
            for (int l = m; l <= scheme.J && ok; ++l)
                if (std::abs(g_sum(wj[l - 1], scheme, m, z.gamma)) > thr) ok = false;
            if (!ok) break;
            cls = m;
        }
        parts[cls].push_back(z.gamma);
    }
    return parts;
}

}  // namespace zetamom
