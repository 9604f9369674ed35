// csv.cpp — CSV formatting and parsing

#include "polaronix/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "polaronix/errors.hpp"

namespace polaronix::csv {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace {

void header(std::ostream& os, const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
}

void row(std::ostream& os, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) os << ',';
        os << format_number(v);
        first = false;
    }
    os << '\n';
}

} // namespace

void write_kernels(std::ostream& os, const spectral::KernelTable& kernels) {
    header(os, kKernelColumns);
    for (std::size_t i = 0; i < kernels.lag_grid.size(); ++i) {
        row(os, {kernels.lag_grid.at(i), kernels.phi_c[i], kernels.phi_s[i]});
    }
}

void write_rates(std::ostream& os, const rates::RateTable& r) {
    header(os, kRateColumns);
    for (std::size_t i = 0; i < r.time_grid.size(); ++i) {
        row(os, {r.time_grid.at(i), r.gamma_plus[i], r.gamma_minus[i], r.zeta[i], r.gamma0[i], r.gamma1[i],
                 r.gamma2[i], r.int_gamma0[i], r.int_gamma1[i], r.int_gamma2[i]});
    }
}

void write_trajectory(std::ostream& os, const dynamics::Trajectory& traj) {
    header(os, kTrajectoryColumns);
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const auto& st = traj.states[i];
        row(os, {traj.time_grid.at(i), st.rho_ss, st.rho_tt, st.rho_st.real(), st.rho_st.imag(), traj.p_diff[i],
                 traj.coherence[i]});
    }
}

void write_sweep(std::ostream& os, const nonmarkov::SweepResult& res) {
    header(os, kSweepColumns);
    for (std::size_t ia = 0; ia < res.alpha_grid.size(); ++ia) {
        for (std::size_t ib = 0; ib < res.beta_grid.size(); ++ib) {
            const std::size_t c = res.cell(ia, ib);
            row(os, {res.s, res.s_prime, res.alpha_grid[ia], res.beta_grid[ib], res.nm_values[c], res.horizon,
                     res.valid[c] ? 1.0 : 0.0});
        }
    }
}

void write_hopping(std::ostream& os, const nonmarkov::SweepResult& res) {
    header(os, kHoppingColumns);
    for (std::size_t ia = 0; ia < res.alpha_grid.size(); ++ia) {
        for (std::size_t ib = 0; ib < res.beta_grid.size(); ++ib) {
            row(os, {res.s, res.s_prime, res.alpha_grid[ia], res.beta_grid[ib], res.hopping_ratio[res.cell(ia, ib)]});
        }
    }
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    writer(os);
    os.flush();
    if (!os) throw IoError("failed writing " + path.string());
}

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw Error("CSV has no column named '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& text) {
    if (text == "nan") return std::nan("");
    if (text == "inf") return HUGE_VAL;
    if (text == "-inf") return -HUGE_VAL;
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw Error("CSV cell '" + text + "' is not a number");
    }
    return v;
}

} // namespace

Table read(std::istream& is) {
    Table t;
    std::string line;
    if (!std::getline(is, line)) throw Error("CSV is empty");
    t.header = split(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != t.header.size()) throw Error("CSV row width does not match the header");
        std::vector<double> values;
        values.reserve(cells.size());
        for (const auto& c : cells) values.push_back(parse_number(c));
        t.rows.push_back(std::move(values));
    }
    return t;
}

Table read_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path.string());
    return read(is);
}

} // namespace polaronix::csv
