// csv.hpp — Column-contracted CSV writers for kernels, rates, trajectories and sweeps
//
// Numbers are written with std::to_chars (shortest round-trip form, '.' as the
// decimal separator, independent of the global locale). Rows end in "\n".

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polaronix/dynamics.hpp"
#include "polaronix/nonmarkov.hpp"
#include "polaronix/rates.hpp"
#include "polaronix/spectral.hpp"

namespace polaronix::csv {

inline const std::vector<std::string> kKernelColumns{"t", "phi_c", "phi_s"};
inline const std::vector<std::string> kRateColumns{"t",      "gamma_plus", "gamma_minus", "zeta",       "gamma0",
                                                   "gamma1", "gamma2",     "int_gamma0",  "int_gamma1", "int_gamma2"};
inline const std::vector<std::string> kTrajectoryColumns{"t",         "rho_ss", "rho_tt",   "re_rho_st",
                                                         "im_rho_st", "p_diff", "coherence"};
inline const std::vector<std::string> kSweepColumns{"s", "s_prime", "alpha", "beta", "nm", "horizon", "valid"};
inline const std::vector<std::string> kHoppingColumns{"s", "s_prime", "alpha", "beta", "jtilde_ratio"};

// Shortest decimal that parses back to the same double; "nan", "inf", "-inf" otherwise.
std::string format_number(double v);

void write_kernels(std::ostream& os, const spectral::KernelTable& kernels);
void write_rates(std::ostream& os, const rates::RateTable& rates);
void write_trajectory(std::ostream& os, const dynamics::Trajectory& traj);
void write_sweep(std::ostream& os, const nonmarkov::SweepResult& result);
void write_hopping(std::ostream& os, const nonmarkov::SweepResult& result);

// Opens `path` for writing (creating parent directories) and hands the stream to `writer`.
// Throws polaronix::Error if the file cannot be written.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

// Minimal reader for the files above: header names and numeric rows.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(std::string_view name) const;  // throws Error if absent
};

Table read(std::istream& is);
Table read_file(const std::filesystem::path& path);

} // namespace polaronix::csv
