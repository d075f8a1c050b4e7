/// \file commands.hpp
/// \brief Subcommand bodies of the conicf driver. Each returns the process exit
/// status: 0 success, 3 verification failure; errors propagate as exceptions.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace cfcli {

inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitVerify = 3;

struct PointsOptions {
  double eps = 0.2;
  int probes = 0;
  std::filesystem::path out = "points.json";
};

struct CubatureOptions {
  int n = 8;
  double delta = 1.0;
  std::filesystem::path out = "cubature.json";
};

struct KernelOptions {
  int n = 16;
  std::string cutoff = "typeA";
  std::string center;
  int grid = 200;
  std::filesystem::path out = "kernel.csv";
};

struct FrameOptions {
  int J = 3;
  double delta = 1.0;
  std::filesystem::path out = "frame.json";
};

struct ApproxOptions {
  std::string function = "analytic";
  int N = 128;
  std::vector<int> n_list = {2, 4, 8, 16, 32};
  double r = 2.0;
  std::filesystem::path out = "approx.csv";
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<std::filesystem::path> frame;
  int trials = 20;
};

struct ReportOptions {
  std::filesystem::path dir = ".";
  std::optional<std::filesystem::path> out;
};

int run_points(const RunConfig& cfg, const PointsOptions& o);
int run_cubature(const RunConfig& cfg, const CubatureOptions& o);
int run_kernel(const RunConfig& cfg, const KernelOptions& o);
int run_frame(const RunConfig& cfg, const FrameOptions& o);
int run_approx(const RunConfig& cfg, const ApproxOptions& o);
int run_verify(const RunConfig& cfg, const VerifyOptions& o);
int run_report(const ReportOptions& o);

/// Kernel commands need beta = 0 on the surface and 1/2 in the solid; fills
/// that in unless the caller set beta explicitly.
cf::Weight kernel_weight(const RunConfig& cfg, bool beta_given);

/// Centre "x1,...,xd,t" parsed and checked against the domain.
cf::Point parse_point(const cf::Domain& dom, const std::string& text);

/// Points along a path from the centre across its sheet, moving in angle and height.
std::vector<cf::Point> kernel_path(const cf::Domain& dom, const cf::Point& centre, int grid);

}  // namespace cfcli
