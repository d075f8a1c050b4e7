/// \file config.hpp
/// \brief Run configuration from a flat key=value file plus command-line overrides.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cf/geometry.hpp"

namespace cfcli {

struct RunConfig {
  cf::Domain dom;
  cf::Weight w;
  double tol_quadrature = 1e-12;
  double tol_cubature = 1e-10;
  double tol_parseval = 1e-6;
  std::vector<int> n_list;
  std::vector<double> eps_list;
  std::vector<double> theta_list;
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 20240601;
};

/// Parses `key = value` lines; '#' starts a comment. Throws cf::ParameterError
/// on unknown keys or malformed values.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& file);

/// Applies one key=value pair, as read from a file or a flag.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Rejects non-positive tolerances and invalid domain/weight parameters.
void validate(const RunConfig& cfg);

cf::DomainKind parse_domain(const std::string& name);
std::string domain_name(cf::DomainKind kind);

template <class T>
std::vector<T> parse_list(const std::string& text);

}  // namespace cfcli
