#include "fockbridge_cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fockbridge::cli {

using nlohmann::ordered_json;

namespace {

std::string_view to_string(StatisticsChoice s) {
  switch (s) {
    case StatisticsChoice::Bose: return "bose";
    case StatisticsChoice::Fermi: return "fermi";
    case StatisticsChoice::Both: return "both";
  }
  return "both";
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

class Reader {
 public:
  Reader(const ordered_json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) field_error(path_.empty() ? "<root>" : path_, "expected an object");
  }

  // unknown keys are errors, so a typo never silently falls back to a default
  void done() const {
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.count(key)) field_error(join(key), "unknown field");
    }
  }

  template <class F>
  void get(const std::string& key, F&& read) {
    seen_.insert(key);
    auto it = node_.find(key);
    if (it != node_.end()) read(*it, join(key));
  }

  void integer(const std::string& key, int& out) {
    get(key, [&](const ordered_json& v, const std::string& f) {
      if (!v.is_number_integer()) field_error(f, "expected an integer");
      out = v.get<int>();
    });
  }

  void number(const std::string& key, double& out) {
    get(key, [&](const ordered_json& v, const std::string& f) {
      if (!v.is_number()) field_error(f, "expected a number");
      out = v.get<double>();
    });
  }

  std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  const ordered_json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

void check_lattice(const RunConfig& c) {
  LatticeSpec s = c.lattice(Statistics::Bose);
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config lattice: ") + e.what());
  }
  if (c.n_max < 0) field_error("n_max", "must be >= 0");
  if (!(c.quadrature.cutoff_multiple >= 20.0)) field_error("quadrature.cutoff_multiple", "must be >= 20");
  if (c.quadrature.nodes < 3 || c.quadrature.nodes % 2 == 0) field_error("quadrature.nodes", "must be odd and >= 3");
  if (c.antiparticles.modes < 3 || c.antiparticles.modes % 2 == 0) field_error("antiparticles.modes", "must be odd and >= 3");
  if (c.antiparticles.n_max < 1) field_error("antiparticles.n_max", "must be >= 1");
  if (!(c.antiparticles.box_length > 0.0)) field_error("antiparticles.box_length", "must be > 0");
}

}  // namespace

LatticeSpec RunConfig::lattice(Statistics s) const {
  LatticeSpec spec;
  spec.mode_count = modes;
  spec.box_length = box_length;
  spec.mass = mass;
  spec.hbar = hbar;
  spec.statistics = s;
  spec.n_max = n_max;
  return spec;
}

std::vector<Statistics> RunConfig::statistics_list() const {
  switch (statistics) {
    case StatisticsChoice::Bose: return {Statistics::Bose};
    case StatisticsChoice::Fermi: return {Statistics::Fermi};
    case StatisticsChoice::Both: break;
  }
  return {Statistics::Bose, Statistics::Fermi};
}

RunConfig parse_config(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  RunConfig c;
  {
    Reader r(root, "");
    r.get("lattice", [&](const ordered_json& v, const std::string& f) {
      Reader l(v, f);
      l.integer("modes", c.modes);
      l.number("box_length", c.box_length);
      l.number("mass", c.mass);
      l.number("hbar", c.hbar);
      l.done();
    });
    r.integer("n_max", c.n_max);
    r.get("statistics", [&](const ordered_json& v, const std::string& f) {
      const std::string s = v.is_string() ? v.get<std::string>() : "";
      if (s == "bose") c.statistics = StatisticsChoice::Bose;
      else if (s == "fermi") c.statistics = StatisticsChoice::Fermi;
      else if (s == "both") c.statistics = StatisticsChoice::Both;
      else field_error(f, "expected \"bose\", \"fermi\" or \"both\"");
    });
    r.get("quadrature", [&](const ordered_json& v, const std::string& f) {
      Reader q(v, f);
      q.number("cutoff_multiple", c.quadrature.cutoff_multiple);
      q.integer("nodes", c.quadrature.nodes);
      q.done();
    });
    r.get("antiparticles", [&](const ordered_json& v, const std::string& f) {
      Reader a(v, f);
      a.integer("modes", c.antiparticles.modes);
      a.number("box_length", c.antiparticles.box_length);
      a.integer("n_max", c.antiparticles.n_max);
      a.number("charge", c.antiparticles.charge);
      a.done();
    });
    r.get("rapidities", [&](const ordered_json& v, const std::string& f) {
      if (!v.is_array()) field_error(f, "expected an array of numbers");
      c.rapidities.clear();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) field_error(f + "[" + std::to_string(i) + "]", "expected a number");
        c.rapidities.push_back(v[i].get<double>());
      }
    });
    r.get("tolerances", [&](const ordered_json& v, const std::string& f) {
      if (!v.is_object()) field_error(f, "expected an object of check name -> number");
      for (const auto& [name, tol] : v.items()) {
        if (!tol.is_number() || tol.get<double>() < 0.0) field_error(f + "." + name, "expected a number >= 0");
        c.tolerances[name] = tol.get<double>();
      }
    });
    r.get("output", [&](const ordered_json& v, const std::string& f) {
      if (!v.is_string()) field_error(f, "expected a string");
      c.output = v.get<std::string>();
    });
    r.get("seed", [&](const ordered_json& v, const std::string& f) {
      if (!v.is_number_unsigned()) field_error(f, "expected a non-negative integer");
      c.seed = v.get<std::uint64_t>();
    });
    r.done();
  }
  check_lattice(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string dump_config(const RunConfig& c) {
  ordered_json j;
  j["lattice"] = {{"modes", c.modes}, {"box_length", c.box_length}, {"mass", c.mass}, {"hbar", c.hbar}};
  j["n_max"] = c.n_max;
  j["statistics"] = to_string(c.statistics);
  j["quadrature"] = {{"cutoff_multiple", c.quadrature.cutoff_multiple}, {"nodes", c.quadrature.nodes}};
  j["antiparticles"] = {{"modes", c.antiparticles.modes},
                        {"box_length", c.antiparticles.box_length},
                        {"n_max", c.antiparticles.n_max},
                        {"charge", c.antiparticles.charge}};
  j["rapidities"] = c.rapidities;
  j["tolerances"] = ordered_json::object();
  for (const auto& [k, v] : c.tolerances) j["tolerances"][k] = v;
  j["output"] = c.output;
  j["seed"] = c.seed;
  return j.dump(2) + "\n";
}

}  // namespace fockbridge::cli
