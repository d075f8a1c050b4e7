/// \file artifacts.hpp
/// \brief JSON persistence of node sets, cubature rules and frames.
#pragma once

#include <filesystem>
#include <string>

#include "cf/frames.hpp"
#include "json.hpp"

namespace cf {

void to_json(nlohmann::json& j, const Domain& v);
void from_json(const nlohmann::json& j, Domain& v);
void to_json(nlohmann::json& j, const Weight& v);
void from_json(const nlohmann::json& j, Weight& v);
void to_json(nlohmann::json& j, const Point& v);
void from_json(const nlohmann::json& j, Point& v);
void to_json(nlohmann::json& j, const SeparatedSet& v);
void from_json(const nlohmann::json& j, SeparatedSet& v);
void to_json(nlohmann::json& j, const CubatureRule& v);
void from_json(const nlohmann::json& j, CubatureRule& v);
void to_json(nlohmann::json& j, const Frame& v);
void from_json(const nlohmann::json& j, Frame& v);

}  // namespace cf

namespace cfcli {

/// Writes to a sibling temporary file and renames it over the target.
void atomic_write(const std::filesystem::path& file, const std::string& text);

/// Pretty-printed with a trailing newline; key order is fixed, so equal
/// values give equal bytes.
std::string dump(const nlohmann::json& j);

nlohmann::json read_json(const std::filesystem::path& file);

/// Artifacts carry {"kind": ..., "version": 1, "data": ...}.
template <class T>
void save_artifact(const std::filesystem::path& file, const std::string& kind, const T& value) {
  atomic_write(file, dump(nlohmann::json{{"kind", kind}, {"version", 1}, {"data", value}}));
}

/// Throws cf::ParameterError when the file holds a different kind.
template <class T>
T load_artifact(const std::filesystem::path& file, const std::string& kind);

extern template cf::SeparatedSet load_artifact<cf::SeparatedSet>(const std::filesystem::path&, const std::string&);
extern template cf::CubatureRule load_artifact<cf::CubatureRule>(const std::filesystem::path&, const std::string&);
extern template cf::Frame load_artifact<cf::Frame>(const std::filesystem::path&, const std::string&);

}  // namespace cfcli
