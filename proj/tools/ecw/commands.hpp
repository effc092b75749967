#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ecw/config.hpp"

namespace ecw::cli {

enum class Format { Csv, Json };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct EnumerateOptions {
  std::string family;
  std::uint64_t height = 0;
  std::string out_path;  // empty: standard output
  Format format = Format::Csv;
};

struct DescentOptions {
  std::string a;
  std::string b;
};

struct WatkinsOptions {
  std::string family;
  std::uint64_t height = 0;
  unsigned M = 0;
  std::string summary_path;  // optional JSON summary alongside CSV
  Format format = Format::Csv;
};

struct StatsOptions {
  std::string experiment;
  std::vector<std::uint64_t> heights;
  unsigned ell = 5;
  double safety = 2.0;
  unsigned precision = 30;
  std::string poly;
  std::uint64_t pmax = 1000;
  bool square = false;
  std::vector<std::string> exclude;
  std::string family = "e5";
  bool cross_check = false;
  Format format = Format::Csv;
};

struct VerifyOptions {
  std::string dataset;
  unsigned M = 0;
};

/// Each returns the process exit code: 0 success, 1 mathematical
/// inconsistency. Usage problems throw UsageError.
int cmd_enumerate(const EnumerateOptions& o, const Config& cfg, Streams io);
int cmd_descent(const DescentOptions& o, const Config& cfg, Streams io);
int cmd_descent3(const DescentOptions& o, const Config& cfg, Streams io);
int cmd_watkins(const WatkinsOptions& o, const Config& cfg, Streams io);
int cmd_stats(const StatsOptions& o, const Config& cfg, Streams io);
int cmd_verify(const VerifyOptions& o, const Config& cfg, Streams io);

extern const std::vector<std::string> kFamilies;
extern const std::vector<std::string> kExperiments;

}  // namespace ecw::cli
