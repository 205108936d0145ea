#ifndef ZETAMOM_IO_HPP
#define ZETAMOM_IO_HPP

#include <filesystem>
#include <ostream>
#include <string>

#include "zetamom/analytic.hpp"
#include "zetamom/moments.hpp"
#include "zetamom/mollifier.hpp"

namespace zetamom {

// CSV columns: index,gamma,width. The sidecar JSON records
// {t_max, count, rvm_main, discrepancy, profile}.
void write_zero_csv(std::ostream& os, const ZeroTable& table);
void write_zero_sidecar(std::ostream& os, const ZeroTable& table, const std::string& profile);

// moments CSV: T,k,n_zeros,j_k,normalizer,ratio
void write_moment_header(std::ostream& os);
void write_moment_row(std::ostream& os, const MomentReport& r);

// landau CSV: a,b,T,lhs_re,lhs_im,main_re,envelope
void write_landau_header(std::ostream& os);
void write_landau_row(std::ostream& os, const LandauCheck& c);

// holder CSV: k,T,lhs,f1,f2,f3,slack
void write_holder_header(std::ostream& os);
void write_holder_row(std::ostream& os, const HolderCheck& h);

// classify CSV: j,count
void write_classify_csv(std::ostream& os, const std::vector<std::vector<double>>& parts);

// mollifier coefficient dump: n,a_alpha_n
void write_coefficients_csv(std::ostream& os, const MollifierCoefficients& mc);

double parse_double(const std::string& s);

}  // namespace zetamom

#endif
