#include "esdg/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace esdg {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw std::runtime_error("config: bad boolean for " + key + ": " + v);
}

double parse_num(const std::string& v, const std::string& key) {
  size_t pos = 0;
  double r;
  try {
    r = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad number for " + key + ": " + v);
  }
  if (pos != v.size())
    throw std::runtime_error("config: bad number for " + key + ": " + v);
  return r;
}

int parse_int(const std::string& v, const std::string& key) {
  const double d = parse_num(v, key);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw std::runtime_error("config: expected integer for " + key + ": " + v);
  return i;
}

}  // namespace

Config parse_config_text(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               " is not key = value: " + t);
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               " has empty key or value");
    if (key == "problem")
      cfg.problem = val;
    else if (key == "k")
      cfg.k = parse_int(val, key);
    else if (key == "nx")
      cfg.nx = parse_int(val, key);
    else if (key == "ny")
      cfg.ny = parse_int(val, key);
    else if (key == "cfl")
      cfg.cfl = parse_num(val, key);
    else if (key == "t_end")
      cfg.t_end = parse_num(val, key);
    else if (key == "limiter.enabled")
      cfg.limiter_enabled = parse_bool(val, key);
    else if (key == "limiter.c0")
      cfg.limiter_c0 = parse_num(val, key);
    else if (key == "gamma")
      cfg.gamma = parse_num(val, key);
    else if (key == "output.dir")
      cfg.output_dir = val;
    else if (key == "output.every_n_steps")
      cfg.output_every_n_steps = parse_int(val, key);
    else if (key == "seed")
      cfg.seed = static_cast<unsigned long>(parse_num(val, key));
    else
      throw std::runtime_error("config: unknown key: " + key);
  }
  if (cfg.k < 0 || cfg.k > 6)
    throw std::runtime_error("config: k must be in [0,6]");
  if (cfg.nx < 1 || cfg.ny < 1)
    throw std::runtime_error("config: mesh dimensions must be positive");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0))
    throw std::runtime_error("config: cfl must be in (0,1]");
  if (cfg.limiter_c0 && *cfg.limiter_c0 <= 0.0)
    throw std::runtime_error("config: limiter.c0 must be positive");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace esdg
