#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cf/error.hpp"

namespace cfcli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& text, const std::string& key) {
  const std::string s = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw cf::ParameterError("bad value '" + text + "' for " + key);
  }
  return value;
}

}  // namespace

template <class T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (trim(item).empty()) throw cf::ParameterError("empty entry in list '" + text + "'");
    out.push_back(parse_number<T>(item, "list"));
  }
  return out;
}

template std::vector<int> parse_list<int>(const std::string&);
template std::vector<double> parse_list<double>(const std::string&);

cf::DomainKind parse_domain(const std::string& name) {
  if (name == "surface") return cf::DomainKind::Surface;
  if (name == "solid") return cf::DomainKind::Solid;
  throw cf::ParameterError("domain must be 'surface' or 'solid', got '" + name + "'");
}

std::string domain_name(cf::DomainKind kind) { return kind == cf::DomainKind::Surface ? "surface" : "solid"; }

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "domain") {
    cfg.dom.kind = parse_domain(trim(value));
  } else if (key == "d") {
    cfg.dom.d = parse_number<int>(value, key);
  } else if (key == "rho") {
    cfg.dom.rho = parse_number<double>(value, key);
  } else if (key == "beta") {
    cfg.w.beta = parse_number<double>(value, key);
  } else if (key == "gamma") {
    cfg.w.gamma = parse_number<double>(value, key);
  } else if (key == "mu") {
    cfg.w.mu = parse_number<double>(value, key);
  } else if (key == "tol_quadrature") {
    cfg.tol_quadrature = parse_number<double>(value, key);
  } else if (key == "tol_cubature") {
    cfg.tol_cubature = parse_number<double>(value, key);
  } else if (key == "tol_parseval") {
    cfg.tol_parseval = parse_number<double>(value, key);
  } else if (key == "n_list") {
    cfg.n_list = parse_list<int>(value);
  } else if (key == "eps_list") {
    cfg.eps_list = parse_list<double>(value);
  } else if (key == "theta_list") {
    cfg.theta_list = parse_list<double>(value);
  } else if (key == "out_dir") {
    cfg.out_dir = trim(value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, key);
  } else {
    throw cf::ParameterError("unknown config key '" + key + "'");
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw cf::ParameterError("line " + std::to_string(lineno) + ": expected key = value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw cf::ParameterError("cannot read config " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tol_quadrature > 0.0) || !(cfg.tol_cubature > 0.0) || !(cfg.tol_parseval > 0.0)) {
    throw cf::ParameterError("tolerances must be positive");
  }
  cf::validate(cfg.dom, cfg.w);
}

}  // namespace cfcli
