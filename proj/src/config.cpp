// config.cpp — INI run configuration

#include "polaronix/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "polaronix/csv.hpp"
#include "polaronix/errors.hpp"

namespace polaronix::config {

namespace {

namespace pt = boost::property_tree;

double parse_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(key + ": '" + text + "' is not a number");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw ConfigError(key + ": '" + text + "' is not a number");
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e7) {
        throw ConfigError(key + " must be a positive integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

using Setter = std::function<void(RunConfig&, const std::string& key, const std::string& text)>;

template <class Section>
Setter real(Section RunConfig::*section, double Section::*field) {
    return [=](RunConfig& c, const std::string& key, const std::string& text) {
        c.*section.*field = parse_double(key, text);
    };
}

const std::map<std::string, std::map<std::string, Setter>>& schema() {
    static const std::map<std::string, std::map<std::string, Setter>> s{
        {"model",
         {{"J", real(&RunConfig::model, &ModelSection::hopping)},
          {"omega", real(&RunConfig::model, &ModelSection::uv_cutoff)},
          {"omega_min", real(&RunConfig::model, &ModelSection::ir_cutoff)}}},
        {"bath1",
         {{"coupling", real(&RunConfig::bath1, &BathSection::coupling)},
          {"exponent", real(&RunConfig::bath1, &BathSection::exponent)}}},
        {"bath2",
         {{"coupling", real(&RunConfig::bath2, &BathSection::coupling)},
          {"exponent", real(&RunConfig::bath2, &BathSection::exponent)}}},
        {"grid", {{"dt", real(&RunConfig::grid, &GridSection::dt)}, {"t_max", real(&RunConfig::grid, &GridSection::t_max)}}},
        {"initial_state",
         {{"rho_ss", [](RunConfig& c, const std::string& k, const std::string& t) { c.initial.rho_ss = parse_double(k, t); }},
          {"rho_tt", [](RunConfig& c, const std::string& k, const std::string& t) { c.initial.rho_tt = parse_double(k, t); }},
          {"re_rho_st",
           [](RunConfig& c, const std::string& k, const std::string& t) { c.initial.rho_st.real(parse_double(k, t)); }},
          {"im_rho_st",
           [](RunConfig& c, const std::string& k, const std::string& t) { c.initial.rho_st.imag(parse_double(k, t)); }}}},
        {"sweep",
         {{"alpha_min", [](RunConfig& c, const std::string& k, const std::string& t) { c.sweep.alpha.min = parse_double(k, t); }},
          {"alpha_max", [](RunConfig& c, const std::string& k, const std::string& t) { c.sweep.alpha.max = parse_double(k, t); }},
          {"alpha_n", [](RunConfig& c, const std::string& k, const std::string& t) { c.sweep.alpha.count = parse_count(k, t); }},
          {"beta_min", [](RunConfig& c, const std::string& k, const std::string& t) { c.sweep.beta.min = parse_double(k, t); }},
          {"beta_max", [](RunConfig& c, const std::string& k, const std::string& t) { c.sweep.beta.max = parse_double(k, t); }},
          {"beta_n", [](RunConfig& c, const std::string& k, const std::string& t) { c.sweep.beta.count = parse_count(k, t); }},
          {"horizon", real(&RunConfig::sweep, &SweepSection::horizon)}}},
        {"output",
         {{"dir", [](RunConfig& c, const std::string&, const std::string& t) { c.output.dir = t; }},
          {"prefix", [](RunConfig& c, const std::string&, const std::string& t) { c.output.prefix = t; }}}},
    };
    return s;
}

void check_finite(const char* name, double v) {
    if (!std::isfinite(v)) throw ConfigError(std::string(name) + " must be finite");
}

void check_axis(const char* name, const AxisSpec& a) {
    check_finite(name, a.min);
    check_finite(name, a.max);
    if (a.min < 0.0) throw ConfigError(std::string("sweep.") + name + "_min must be >= 0");
    if (a.max < a.min) throw ConfigError(std::string("sweep.") + name + "_max must be >= " + name + "_min");
    if (a.count == 0) throw ConfigError(std::string("sweep.") + name + "_n must be >= 1");
}

void check_horizon(const char* name, double dt, double horizon) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ConfigError(std::string(name) + " must be finite and > 0");
    try {
        (void)UniformGrid::covering(dt, horizon);
    } catch (const GridError& e) {
        throw ConfigError(std::string(name) + ": " + e.what());
    }
}

} // namespace

void RunConfig::validate() const {
    check_finite("model.J", model.hopping);
    if (!(model.hopping > 0.0)) throw ConfigError("model.J must be > 0");
    model_params().validate();
    if (!(grid.dt > 0.0) || !std::isfinite(grid.dt)) throw ConfigError("grid.dt must be finite and > 0");
    check_horizon("grid.t_max", grid.dt, grid.t_max);
    initial.validate();
    check_axis("alpha", sweep.alpha);
    check_axis("beta", sweep.beta);
    check_horizon("sweep.horizon", grid.dt, sweep.horizon);
}

spectral::ModelParams RunConfig::model_params() const {
    return {model.hopping,
            {bath1.coupling, bath1.exponent, model.uv_cutoff, model.ir_cutoff},
            {bath2.coupling, bath2.exponent, model.uv_cutoff, model.ir_cutoff}};
}

UniformGrid RunConfig::time_grid() const { return UniformGrid::covering(grid.dt, grid.t_max); }

nonmarkov::SweepSpec RunConfig::sweep_spec(unsigned workers) const {
    nonmarkov::SweepSpec spec;
    spec.s = bath1.exponent;
    spec.s_prime = bath2.exponent;
    spec.alpha_grid = nonmarkov::linspace(sweep.alpha.min, sweep.alpha.max, sweep.alpha.count);
    spec.beta_grid = nonmarkov::linspace(sweep.beta.min, sweep.beta.max, sweep.beta.count);
    spec.horizon = sweep.horizon;
    spec.meta = {grid.dt, model.ir_cutoff, model.uv_cutoff, model.hopping};
    spec.initial = initial;
    spec.workers = workers;
    return spec;
}

RunConfig parse(std::istream& is) {
    // The INI reader only knows whole-line comments; trailing "; ..." or
    // "# ..." after whitespace is dropped here. Line numbers are preserved.
    std::stringstream stripped;
    for (std::string line; std::getline(is, line);) {
        for (std::size_t i = 1; i < line.size(); ++i) {
            if ((line[i] == ';' || line[i] == '#') && (line[i - 1] == ' ' || line[i - 1] == '\t')) {
                line.erase(i);
                break;
            }
        }
        stripped << line << '\n';
    }
    pt::ptree tree;
    try {
        pt::read_ini(stripped, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("malformed config: " + e.message() + " (line " + std::to_string(e.line()) + ")");
    }
    RunConfig cfg;
    for (const auto& [section, body] : tree) {
        const auto sec = schema().find(section);
        if (sec == schema().end()) {
            if (body.empty() && !body.data().empty()) {
                throw ConfigError("config key '" + section + "' must be inside a section");
            }
            throw ConfigError("unknown config section [" + section + "]");
        }
        for (const auto& [key, node] : body) {
            const auto setter = sec->second.find(key);
            if (setter == sec->second.end()) throw ConfigError("unknown config key " + section + "." + key);
            setter->second(cfg, section + "." + key, node.get_value<std::string>());
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot read config file " + path.string());
    return parse(is);
}

std::string to_ini(const RunConfig& c) {
    using csv::format_number;
    std::ostringstream os;
    os << "[model]\nJ = " << format_number(c.model.hopping) << "\nomega = " << format_number(c.model.uv_cutoff)
       << "\nomega_min = " << format_number(c.model.ir_cutoff) << "\n\n";
    os << "[bath1]\ncoupling = " << format_number(c.bath1.coupling)
       << "\nexponent = " << format_number(c.bath1.exponent) << "\n\n";
    os << "[bath2]\ncoupling = " << format_number(c.bath2.coupling)
       << "\nexponent = " << format_number(c.bath2.exponent) << "\n\n";
    os << "[grid]\ndt = " << format_number(c.grid.dt) << "\nt_max = " << format_number(c.grid.t_max) << "\n\n";
    os << "[initial_state]\nrho_ss = " << format_number(c.initial.rho_ss)
       << "\nrho_tt = " << format_number(c.initial.rho_tt)
       << "\nre_rho_st = " << format_number(c.initial.rho_st.real())
       << "\nim_rho_st = " << format_number(c.initial.rho_st.imag()) << "\n\n";
    os << "[sweep]\nalpha_min = " << format_number(c.sweep.alpha.min)
       << "\nalpha_max = " << format_number(c.sweep.alpha.max) << "\nalpha_n = " << c.sweep.alpha.count
       << "\nbeta_min = " << format_number(c.sweep.beta.min) << "\nbeta_max = " << format_number(c.sweep.beta.max)
       << "\nbeta_n = " << c.sweep.beta.count << "\nhorizon = " << format_number(c.sweep.horizon) << "\n\n";
    os << "[output]\ndir = " << c.output.dir.generic_string() << "\nprefix = " << c.output.prefix << "\n";
    return os.str();
}

} // namespace polaronix::config
