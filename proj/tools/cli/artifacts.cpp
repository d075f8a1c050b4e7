#include "cli/artifacts.hpp"

#include <fstream>
#include <sstream>

#include "cf/error.hpp"

namespace cf {

using nlohmann::json;

void to_json(json& j, const Domain& v) {
  j = json{{"kind", v.kind == DomainKind::Surface ? "surface" : "solid"}, {"d", v.d}, {"rho", v.rho}};
}

void from_json(const json& j, Domain& v) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "surface" && kind != "solid") throw ParameterError("unknown domain kind '" + kind + "'");
  v.kind = kind == "surface" ? DomainKind::Surface : DomainKind::Solid;
  j.at("d").get_to(v.d);
  j.at("rho").get_to(v.rho);
}

void to_json(json& j, const Weight& v) { j = json{{"beta", v.beta}, {"gamma", v.gamma}, {"mu", v.mu}}; }

void from_json(const json& j, Weight& v) {
  j.at("beta").get_to(v.beta);
  j.at("gamma").get_to(v.gamma);
  j.at("mu").get_to(v.mu);
}

void to_json(json& j, const Point& v) {
  j = json{{"x", std::vector<double>(v.coords().begin(), v.coords().end())}, {"t", v.t}};
}

void from_json(const json& j, Point& v) {
  const auto x = j.at("x").get<std::vector<double>>();
  if (x.size() > static_cast<std::size_t>(kMaxDim)) throw ParameterError("point dimension too large");
  v = Point(x, j.at("t").get<double>());
}

namespace {

json band_json(const Band& b) {
  return json{{"t", b.t}, {"tminus", b.tminus}, {"tplus", b.tplus}, {"epsj", b.epsj}};
}

Band band_from(const json& j) {
  Band b;
  j.at("t").get_to(b.t);
  j.at("tminus").get_to(b.tminus);
  j.at("tplus").get_to(b.tplus);
  j.at("epsj").get_to(b.epsj);
  return b;
}

// Cells as flat arrays keep large node sets compact.
json node_json(const Node& n) {
  const Cell& c = n.geometry;
  return json{{"p", n.p},
              {"band", n.band},
              {"cell", n.cell},
              {"geometry", {c.tlo, c.thi, c.alo, c.ahi, c.rlo, c.rhi}},
              {"sheet", c.sheet}};
}

Node node_from(const json& j) {
  Node n;
  j.at("p").get_to(n.p);
  j.at("band").get_to(n.band);
  j.at("cell").get_to(n.cell);
  const auto g = j.at("geometry").get<std::vector<double>>();
  if (g.size() != 6) throw ParameterError("cell geometry needs 6 numbers");
  n.geometry = Cell{g[0], g[1], g[2], g[3], g[4], g[5], j.at("sheet").get<int>()};
  return n;
}

}  // namespace

void to_json(json& j, const SeparatedSet& v) {
  json bands = json::array(), nodes = json::array();
  for (const auto& b : v.bands) bands.push_back(band_json(b));
  for (const auto& n : v.nodes) nodes.push_back(node_json(n));
  j = json{{"domain", v.dom},   {"epsilon", v.epsilon}, {"N", v.N},
           {"bands", bands},    {"nodes", nodes},       {"evenly_symmetric", v.evenly_symmetric}};
}

void from_json(const json& j, SeparatedSet& v) {
  j.at("domain").get_to(v.dom);
  j.at("epsilon").get_to(v.epsilon);
  j.at("N").get_to(v.N);
  v.bands.clear();
  v.nodes.clear();
  for (const auto& b : j.at("bands")) v.bands.push_back(band_from(b));
  for (const auto& n : j.at("nodes")) v.nodes.push_back(node_from(n));
  j.at("evenly_symmetric").get_to(v.evenly_symmetric);
}

void to_json(json& j, const CubatureRule& v) {
  j = json{{"domain", v.dom}, {"weight", v.w},     {"degree", v.degree}, {"delta", v.delta},
           {"residual", v.residual}, {"nodes", v.nodes}, {"lambda", v.lambda}};
}

void from_json(const json& j, CubatureRule& v) {
  j.at("domain").get_to(v.dom);
  j.at("weight").get_to(v.w);
  j.at("degree").get_to(v.degree);
  j.at("delta").get_to(v.delta);
  j.at("residual").get_to(v.residual);
  j.at("nodes").get_to(v.nodes);
  j.at("lambda").get_to(v.lambda);
  if (v.lambda.size() != v.nodes.size()) throw ParameterError("weight count does not match node count");
}

void to_json(json& j, const Frame& v) {
  json levels = json::array();
  for (const auto& l : v.levels) levels.push_back(json{{"j", l.j}, {"rule", l.rule}});
  j = json{{"domain", v.dom}, {"weight", v.w}, {"J", v.J}, {"delta", v.delta}, {"levels", levels}};
}

void from_json(const json& j, Frame& v) {
  j.at("domain").get_to(v.dom);
  j.at("weight").get_to(v.w);
  j.at("J").get_to(v.J);
  j.at("delta").get_to(v.delta);
  v.levels.clear();
  for (const auto& l : j.at("levels")) v.levels.push_back({l.at("j").get<int>(), l.at("rule").get<CubatureRule>()});
  if (v.levels.size() != static_cast<std::size_t>(v.J) + 1) throw ParameterError("frame level count does not match J");
}

}  // namespace cf

namespace cfcli {

void atomic_write(const std::filesystem::path& file, const std::string& text) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw cf::Error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw cf::Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json read_json(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw cf::ParameterError("cannot read " + file.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw cf::ParameterError(file.string() + ": " + e.what());
  }
}

template <class T>
T load_artifact(const std::filesystem::path& file, const std::string& kind) {
  const auto j = read_json(file);
  if (j.value("kind", std::string{}) != kind) {
    throw cf::ParameterError(file.string() + " does not hold a " + kind + " artifact");
  }
  try {
    return j.at("data").get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw cf::ParameterError(file.string() + ": " + e.what());
  }
}

template cf::SeparatedSet load_artifact<cf::SeparatedSet>(const std::filesystem::path&, const std::string&);
template cf::CubatureRule load_artifact<cf::CubatureRule>(const std::filesystem::path&, const std::string&);
template cf::Frame load_artifact<cf::Frame>(const std::filesystem::path&, const std::string&);

}  // namespace cfcli
