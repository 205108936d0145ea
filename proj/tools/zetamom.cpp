// zetamom command-line driver: zero tables, discrete moments, Landau sums,
// mollifier expansions, Holder diagnostics, random-model checks, zero
// classification, dyadic sweeps, and run manifests.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "zetamom/analytic.hpp"
#include "zetamom/arith.hpp"
#include "zetamom/errors.hpp"
#include "zetamom/io.hpp"
#include "zetamom/mollifier.hpp"
#include "zetamom/moments.hpp"
#include "zetamom/random_model.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace zetamom;

namespace {

constexpr const char* kVersion = "zetamom-0.1.0";

std::string iso_now() {
    auto t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct Common {
    std::string output_dir;
    std::uint32_t sieve_limit = 100000;
    std::string profile = "standard";
    std::uint64_t seed = 1;
    std::int64_t n_samples = 100000;
    std::string format = "csv";
    int threads = 1;
    double tol = 1e-9;
};

PrecisionProfile profile_of(const std::string& name) {
    if (name == "standard") return PrecisionProfile::standard();
    if (name == "oracle") return PrecisionProfile::oracle();
    throw ConfigError("unknown precision profile: " + name);
}

// Tracks artifacts so a failing run leaves nothing half-written behind.
class Artifacts {
public:
    explicit Artifacts(const fs::path& dir) : dir_(dir) { fs::create_directories(dir_); }

    std::ofstream open(const std::string& name) {
        fs::path p = dir_ / name;
        written_.push_back(p);
        std::ofstream os(p);
        if (!os) throw Error("cannot open output file: " + p.string());
        return os;
    }

    const std::vector<fs::path>& files() const { return written_; }

    void discard_all() {
        std::error_code ec;
        for (const auto& p : written_) fs::remove(p, ec);
        written_.clear();
    }

    const fs::path& dir() const { return dir_; }

private:
    fs::path dir_;
    std::vector<fs::path> written_;
};

struct RunContext {
    Common common;
    json params;                         // subcommand parameters for the manifest
    std::vector<std::string> warnings;
    std::map<std::string, std::int64_t> stage_ms;
    std::map<double, ZeroTable> zero_cache;

    const ZeroTable& zeros_to(double T) {
        auto it = zero_cache.find(T);
        if (it != zero_cache.end()) return it->second;
        auto start = std::chrono::steady_clock::now();
        auto table = find_zeros(0.0, T, common.tol, profile_of(common.profile));
        stage_ms["zeros"] += std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        return zero_cache.emplace(T, std::move(table)).first->second;
    }
};

void write_manifest(Artifacts& art, RunContext& ctx, const std::string& command,
                    const std::string& started) {
    json m;
    m["version"] = kVersion;
    m["command"] = command;
    m["started"] = started;
    m["finished"] = iso_now();
    m["config"] = {{"output_dir", art.dir().string()},
                   {"sieve_limit", ctx.common.sieve_limit},
                   {"profile", ctx.common.profile},
                   {"seed", ctx.common.seed},
                   {"n_samples", ctx.common.n_samples},
                   {"format", ctx.common.format},
                   {"threads", ctx.common.threads},
                   {"tol", ctx.common.tol}};
    m["params"] = ctx.params;
    m["warnings"] = ctx.warnings;
    m["stage_ms"] = ctx.stage_ms;
    std::vector<std::string> outputs;
    for (const auto& p : art.files()) outputs.push_back(p.filename().string());
    m["outputs"] = outputs;
    auto os = art.open("manifest.json");
    os << m.dump(2) << '\n';
}

std::pair<std::uint64_t, std::uint64_t> parse_pair(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw ConfigError("landau pair must look like a/b: " + s);
    try {
        std::uint64_t a = std::stoull(s.substr(0, slash));
        std::uint64_t b = std::stoull(s.substr(slash + 1));
        if (a < 1 || b < 1) throw ConfigError("landau pair entries must be >= 1");
        return {a, b};
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("landau pair must be integral: " + s);
    }
}

// ---- subcommand bodies ------------------------------------------------------

void run_zeros(Artifacts& art, RunContext& ctx, double t_lo, double t_max) {
    const auto& table = ctx.zero_cache.empty() && t_lo == 0.0
                            ? ctx.zeros_to(t_max)
                            : find_zeros(t_lo, t_max, ctx.common.tol,
                                         profile_of(ctx.common.profile));
    auto os = art.open("zeros.csv");
    write_zero_csv(os, table);
    auto side = art.open("zeros.json");
    write_zero_sidecar(side, table, ctx.common.profile);
}

void run_moments(Artifacts& art, RunContext& ctx, const std::vector<double>& ts,
                 const std::vector<double>& ks) {
    auto os = art.open("moments.csv");
    write_moment_header(os);
    for (double T : ts) {
        const auto& zt = ctx.zeros_to(T);
        for (double k : ks) write_moment_row(os, compute_moment(zt, k, profile_of(ctx.common.profile)));
    }
}

void run_landau(Artifacts& art, RunContext& ctx, double T,
                const std::vector<std::string>& pairs) {
    ArithmeticTable sieve(ctx.common.sieve_limit);
    const auto& zt = ctx.zeros_to(2.0 * T);
    auto os = art.open("landau.csv");
    write_landau_header(os);
    for (const auto& ps : pairs) {
        auto [a, b] = parse_pair(ps);
        write_landau_row(os, landau_sum(a, b, T, zt, sieve));
    }
}

void run_mollifier(Artifacts& art, RunContext& ctx, double T, double k, int M,
                   double ratio, double alpha) {
    ArithmeticTable sieve(ctx.common.sieve_limit);
    auto scheme = build_scheme(T, k, M, ratio);
    if (scheme.degenerate) ctx.warnings.push_back("degenerate scheme: J = 1");
    auto mc = expand_coefficients(scheme, alpha, sieve);
    auto os = art.open("coefficients.csv");
    write_coefficients_csv(os, mc);
    ctx.params["J"] = scheme.J;
    ctx.params["orders"] = scheme.orders;
    ctx.params["max_frequency"] = mc.max_frequency;
}

void run_holder(Artifacts& art, RunContext& ctx, const std::vector<double>& ts,
                const std::vector<double>& ks, int M, double ratio) {
    ArithmeticTable sieve(ctx.common.sieve_limit);
    auto os = art.open("holder.csv");
    write_holder_header(os);
    for (double T : ts) {
        const auto& zt = ctx.zeros_to(T);
        for (double k : ks) {
            auto scheme = build_scheme(T, k, M, ratio);
            write_holder_row(os, holder_chain(zt, scheme, k, sieve,
                                              profile_of(ctx.common.profile)));
        }
    }
}

void run_random_model(Artifacts& art, RunContext& ctx, double T, double k, int M,
                      double ratio) {
    ArithmeticTable sieve(ctx.common.sieve_limit);
    auto scheme = build_scheme(T, k, M, ratio);
    if (scheme.degenerate) ctx.warnings.push_back("degenerate scheme: J = 1");
    McConfig cfg{ctx.common.n_samples, ctx.common.seed};
    auto os = art.open("random_model.csv");
    os << "block,closed_form,mc_mean,mc_std_error,z_score\n" << std::setprecision(15);
    for (int l = 1; l <= scheme.J; ++l) {
        auto [lo, hi] = scheme.intervals[l - 1];
        auto primes = sieve.primes_in(lo, hi);
        double closed = expectation_product(scheme, sieve, nullptr, k, l);
        auto f = [&](const PhaseSample& x) {
            return std::exp(2.0 * (k - 1.0) * re_prime_sum_model(x, primes));
        };
        auto est = mc_expectation(f, primes, cfg);
        double zscore = est.std_error > 0.0 ? (est.mean - closed) / est.std_error : 0.0;
        os << l << ',' << closed << ',' << est.mean << ',' << est.std_error << ','
           << zscore << '\n';
    }
}

void run_classify(Artifacts& art, RunContext& ctx, double T, double k, int M,
                  double ratio) {
    ArithmeticTable sieve(ctx.common.sieve_limit);
    auto scheme = build_scheme(T, k, M, ratio);
    if (scheme.degenerate) ctx.warnings.push_back("degenerate scheme: J = 1");
    const auto& zt = ctx.zeros_to(2.0 * T);
    auto parts = classify_zeros(zt, scheme, sieve);
    auto os = art.open("classify.csv");
    write_classify_csv(os, parts);
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    ctx.params["n_gamma"] = total;
    ctx.params["s0_frequency"] =
        total ? static_cast<double>(parts[0].size()) / static_cast<double>(total) : 0.0;
}

void run_report(Artifacts& art, const std::string& input_dir) {
    auto os = art.open("merged.csv");
    os << "source,row\n";
    if (!fs::exists(input_dir)) return;  // vacuous merge
    std::vector<fs::path> csvs;
    for (const auto& e : fs::recursive_directory_iterator(input_dir))
        if (e.is_regular_file() && e.path().extension() == ".csv" &&
            e.path().filename() != "merged.csv")
            csvs.push_back(e.path());
    std::sort(csvs.begin(), csvs.end());
    for (const auto& p : csvs) {
        std::ifstream is(p);
        std::string line;
        bool header = true;
        while (std::getline(is, line)) {
            if (header) {  // skip each file's header row
                header = false;
                continue;
            }
            os << p.filename().string() << ",\"" << line << "\"\n";
        }
    }
}

void run_sweep(Artifacts& art, RunContext& ctx, const std::vector<double>& ts,
               const std::vector<double>& ks) {
    if (ts.size() < 3) throw ConfigError("sweep needs at least 3 T values");
    auto mos = art.open("moments.csv");
    write_moment_header(mos);
    std::map<double, std::vector<MomentReport>> by_k;
    for (double T : ts) {
        const auto& zt = ctx.zeros_to(T);
        for (double k : ks) {
            auto r = compute_moment(zt, k, profile_of(ctx.common.profile));
            write_moment_row(mos, r);
            by_k[k].push_back(r);
        }
    }
    auto os = art.open("sweep.csv");
    os << "k,exponent,intercept,max_residual\n" << std::setprecision(15);
    for (const auto& [k, rows] : by_k) {
        // least squares: log j_k = intercept + exponent * log log T
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double n = static_cast<double>(rows.size());
        for (const auto& r : rows) {
            double x = std::log(std::log(r.T));
            double y = std::log(r.j_k);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double denom = n * sxx - sx * sx;
        double slope = (n * sxy - sx * sy) / denom;
        double inter = (sy - slope * sx) / n;
        double max_resid = 0.0;
        for (const auto& r : rows) {
            double x = std::log(std::log(r.T));
            double y = std::log(r.j_k);
            max_resid = std::max(max_resid, std::abs(y - (inter + slope * x)));
        }
        os << k << ',' << slope << ',' << inter << ',' << max_resid << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale moments of zeta' at the nontrivial zeros"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config")->configurable(false);
    app.allow_config_extras(false);

    Common common;
    const char* env_dir = std::getenv("ZETAMOM_OUTPUT_DIR");
    common.output_dir = env_dir ? env_dir : ".";
    app.add_option("--output-dir", common.output_dir, "artifact directory")
        ->capture_default_str();
    app.add_option("--sieve-limit", common.sieve_limit)->check(CLI::PositiveNumber);
    app.add_option("--profile", common.profile)
        ->check(CLI::IsMember({"standard", "oracle"}));
    app.add_option("--seed", common.seed);
    app.add_option("--n-samples", common.n_samples)->check(CLI::PositiveNumber);
    app.add_option("--format", common.format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", common.threads)->check(CLI::PositiveNumber);
    app.add_option("--tol", common.tol, "zero bisection tolerance")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    // zeros
    double t_lo = 0.0, t_max = 100.0, T = 1000.0;
    std::vector<double> ts{1000.0}, ks{1.0};
    std::vector<std::string> pairs{"2/1"};
    int M = 1;
    double ratio = 20.0, k_single = 1.0, alpha = 1.0;
    std::string input_dir = ".";

    auto* sc_zeros = app.add_subcommand("zeros", "tabulate zeros of Z(t)");
    sc_zeros->add_option("--t-lo", t_lo)->check(CLI::NonNegativeNumber);
    sc_zeros->add_option("--t-max", t_max)->required()->check(CLI::PositiveNumber);

    auto* sc_moments = app.add_subcommand("moments", "discrete moments J_k(T)");
    sc_moments->add_option("--t", ts)->required();
    sc_moments->add_option("--k", ks)->required();

    auto* sc_landau = app.add_subcommand("landau", "Landau sums over (T, 2T]");
    sc_landau->add_option("--t", T)->required()->check(CLI::PositiveNumber);
    sc_landau->add_option("--pair", pairs, "ratio a/b, repeatable");

    auto* sc_moll = app.add_subcommand("mollifier", "expand mollifier coefficients");
    sc_moll->add_option("--t", T)->required()->check(CLI::PositiveNumber);
    sc_moll->add_option("--k", k_single)->check(CLI::PositiveNumber);
    sc_moll->add_option("--m", M)->check(CLI::PositiveNumber);
    sc_moll->add_option("--ratio", ratio);
    sc_moll->add_option("--alpha", alpha);

    auto* sc_holder = app.add_subcommand("holder", "Holder chain diagnostics");
    sc_holder->add_option("--t", ts)->required();
    sc_holder->add_option("--k", ks)->required();
    sc_holder->add_option("--m", M)->check(CLI::PositiveNumber);
    sc_holder->add_option("--ratio", ratio);

    auto* sc_random = app.add_subcommand("random-model", "Euler-product model checks");
    sc_random->add_option("--t", T)->required()->check(CLI::PositiveNumber);
    sc_random->add_option("--k", k_single)->check(CLI::PositiveNumber);
    sc_random->add_option("--m", M)->check(CLI::PositiveNumber);
    sc_random->add_option("--ratio", ratio);

    auto* sc_classify = app.add_subcommand("classify", "partition zeros into S(j)");
    sc_classify->add_option("--t", T)->required()->check(CLI::PositiveNumber);
    sc_classify->add_option("--k", k_single)->check(CLI::PositiveNumber);
    sc_classify->add_option("--m", M)->check(CLI::PositiveNumber);
    sc_classify->add_option("--ratio", ratio);

    auto* sc_report = app.add_subcommand("report", "merge artifact tables");
    sc_report->add_option("--input-dir", input_dir);

    auto* sc_sweep = app.add_subcommand("sweep", "dyadic growth-exponent fit");
    sc_sweep->add_option("--t", ts)->required();
    sc_sweep->add_option("--k", ks)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunContext ctx;
    ctx.common = common;
    std::string started = iso_now();
    Artifacts art(common.output_dir);
    auto t0 = std::chrono::steady_clock::now();
    std::string command;
    try {
        if (sc_zeros->parsed()) {
            command = "zeros";
            ctx.params = {{"t_lo", t_lo}, {"t_max", t_max}};
            run_zeros(art, ctx, t_lo, t_max);
        } else if (sc_moments->parsed()) {
            command = "moments";
            ctx.params = {{"t", ts}, {"k", ks}};
            run_moments(art, ctx, ts, ks);
        } else if (sc_landau->parsed()) {
            command = "landau";
            ctx.params = {{"t", T}, {"pairs", pairs}};
            run_landau(art, ctx, T, pairs);
        } else if (sc_moll->parsed()) {
            command = "mollifier";
            ctx.params = {{"t", T}, {"k", k_single}, {"m", M}, {"ratio", ratio},
                          {"alpha", alpha}};
            run_mollifier(art, ctx, T, k_single, M, ratio, alpha);
        } else if (sc_holder->parsed()) {
            command = "holder";
            ctx.params = {{"t", ts}, {"k", ks}, {"m", M}, {"ratio", ratio}};
            run_holder(art, ctx, ts, ks, M, ratio);
        } else if (sc_random->parsed()) {
            command = "random-model";
            ctx.params = {{"t", T}, {"k", k_single}, {"m", M}, {"ratio", ratio}};
            run_random_model(art, ctx, T, k_single, M, ratio);
        } else if (sc_classify->parsed()) {
            command = "classify";
            ctx.params = {{"t", T}, {"k", k_single}, {"m", M}, {"ratio", ratio}};
            run_classify(art, ctx, T, k_single, M, ratio);
        } else if (sc_report->parsed()) {
            command = "report";
            ctx.params = {{"input_dir", input_dir}};
            run_report(art, input_dir);
        } else if (sc_sweep->parsed()) {
            command = "sweep";
            ctx.params = {{"t", ts}, {"k", ks}};
            run_sweep(art, ctx, ts, ks);
        }
    } catch (const ConfigError& e) {
        art.discard_all();
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        art.discard_all();
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    ctx.stage_ms["total"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
    write_manifest(art, ctx, command, started);
    return 0;
}
