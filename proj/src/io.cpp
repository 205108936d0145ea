#include "zetamom/io.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>

#include "zetamom/errors.hpp"

namespace zetamom {

namespace {
std::ostream& prec(std::ostream& os) { return os << std::setprecision(15); }
}  // namespace

void write_zero_csv(std::ostream& os, const ZeroTable& table) {
    os << "index,gamma,width\n";
    prec(os);
    for (const auto& z : table.zeros)
        os << z.index << ',' << z.gamma << ',' << z.width << '\n';
}

void write_zero_sidecar(std::ostream& os, const ZeroTable& table, const std::string& profile) {
    nlohmann::json j;
    j["t_max"] = table.t_max;
    j["count"] = table.zeros.size();
    j["rvm_main"] = table.rvm_main;
    j["discrepancy"] = table.count_check;
    j["profile"] = profile;
    os << j.dump(2) << '\n';
}

void write_moment_header(std::ostream& os) { os << "T,k,n_zeros,j_k,normalizer,ratio\n"; }

void write_moment_row(std::ostream& os, const MomentReport& r) {
    prec(os) << r.T << ',' << r.k << ',' << r.n_zeros << ',' << r.j_k << ','
             << r.normalizer << ',' << r.ratio << '\n';
}

void write_landau_header(std::ostream& os) { os << "a,b,T,lhs_re,lhs_im,main_re,envelope\n"; }

void write_landau_row(std::ostream& os, const LandauCheck& c) {
    prec(os) << c.a << ',' << c.b << ',' << c.T << ',' << c.lhs.real() << ','
             << c.lhs.imag() << ',' << c.main_term.real() << ',' << c.error_envelope << '\n';
}

void write_holder_header(std::ostream& os) { os << "k,T,lhs,f1,f2,f3,slack\n"; }

void write_holder_row(std::ostream& os, const HolderCheck& h) {
    prec(os) << h.k << ',' << h.T << ',' << h.lhs << ',' << h.factor1 << ','
             << h.factor2 << ',' << h.factor3 << ',' << h.slack << '\n';
}

void write_classify_csv(std::ostream& os, const std::vector<std::vector<double>>& parts) {
    os << "j,count\n";
    for (std::size_t j = 0; j < parts.size(); ++j)
        os << j << ',' << parts[j].size() << '\n';
}

void write_coefficients_csv(std::ostream& os, const MollifierCoefficients& mc) {
    os << "n,a_alpha_n\n";
    prec(os);
    for (const auto& [n, c] : mc.coeffs) os << n << ',' << c << '\n';
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError("not a number: " + s);
    }
    if (pos != s.size()) throw ConfigError("trailing characters in number: " + s);
    return v;
}

}  // namespace zetamom
