#ifndef ZETAMOM_MOMENTS_HPP
#define ZETAMOM_MOMENTS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "zetamom/analytic.hpp"
#include "zetamom/arith.hpp"
#include "zetamom/mollifier.hpp"

namespace zetamom {

struct MomentReport {
    double T = 0.0;
    double k = 0.0;
    std::int64_t n_zeros = 0;
    double j_k = 0.0;
    double normalizer = 0.0;  // (log T)^{k(k+2)}
    double ratio = 0.0;       // j_k / normalizer
    std::int64_t runtime_ms = 0;
};

struct LandauCheck {
    std::uint64_t a = 1, b = 1;
    double T = 0.0;
    Complex lhs = 0.0;        // sum over T < gamma <= 2T of (a/b)^{i gamma}
    Complex main_term = 0.0;
    double error_envelope = 0.0;  // sqrt(ab) (log T)^2
};

struct HolderCheck {
    double k = 0.0;
    double T = 0.0;
    double lhs = 0.0;  // |sum zeta'(rho) N(rho,k-1) N(1-rho,k)|
    double factor1 = 0.0, factor2 = 0.0, factor3 = 1.0;
    double slack = 0.0;  // lhs / (f1 f2 f3)
};

struct TwistedSum {
    Complex sum = 0.0;
    double trend_ratio = 0.0;  // |sum| / (T (log T)^{k^2+2})
};

enum class MvtWeight { One, Log, LogSquared };  // 1, log(t/2pi), log^2(t/2pi)

struct MvtResult {
    Complex lhs = 0.0;   // integral of g(t) A(t) conj-side B(t)
    Complex main = 0.0;  // (integral of g) * sum a_n b_n
    double error_envelope = 0.0;
};

// Weights w_j(n) of the random-model section, built from Lambda_scriptL with
// scriptL = log(T/2pi). Support: n = p <= T^{alpha_j}, or n = p^2 <= scriptL.
struct GSumWeights {
    int j = 0;
    double script_L = 0.0;
    std::map<std::uint64_t, double> weights;
};

MomentReport compute_moment(const ZeroTable& zeros, double k,
                            const PrecisionProfile& profile = PrecisionProfile::standard());

LandauCheck landau_sum(std::uint64_t a, std::uint64_t b, double T,
                       const ZeroTable& zeros, const ArithmeticTable& table);

using ComplexSeq = std::map<std::uint64_t, Complex>;

MvtResult mvt_check(const ComplexSeq& a_seq, const ComplexSeq& b_seq,
                    MvtWeight g, double T1, double T2);

HolderCheck holder_chain(const ZeroTable& zeros, const BlockScheme& scheme, double k,
                         const ArithmeticTable& table,
                         const PrecisionProfile& profile = PrecisionProfile::standard());

TwistedSum twisted_sum(const ZeroTable& zeros, const BlockScheme& scheme, double k,
                       const ArithmeticTable& table,
                       const PrecisionProfile& profile = PrecisionProfile::standard());

GSumWeights build_g_weights(const BlockScheme& scheme, int j, const ArithmeticTable& table);

// G_{l,j}(t) = Re sum_{n in I_l} w_j(n)/sqrt(n) n^{-it}
double g_sum(const GSumWeights& weights, const BlockScheme& scheme, int l, double t);

// Partition of the zeros in (T, 2T] into S(0), ..., S(J); entry j holds the
// gammas classified into S(j). Exhaustive and disjoint by construction.
std::vector<std::vector<double>> classify_zeros(const ZeroTable& zeros,
                                                const BlockScheme& scheme,
                                                const ArithmeticTable& table);

}  // namespace zetamom

#endif
