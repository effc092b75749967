#pragma once

// Watkins and M-Watkins verdicts from descent rank bounds and the
// omega(N) - 2 lower bound for nu_2 of the modular degree.

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecw/config.hpp"
#include "ecw/families.hpp"

namespace ecw {

/// omega(N) - 2. Throws PreconditionError unless E(Q)[2] = Z/2.
int surrogate_nu2_lower(const ShortWeierstrass& E, const Config& cfg = {});

enum class Verdict { Proven, Inconclusive };
std::string to_string(Verdict v);

/// rank bound + M <= omega(N) - 2 for the minimised short model of E_{a,b}.
Verdict m_watkins_surrogate(const E2Param& p, unsigned M, const Config& cfg = {});
/// Same test for a short model, moving a 2-torsion point to x = 0 first.
Verdict m_watkins_surrogate(const ShortWeierstrass& E, unsigned M, const Config& cfg = {});

struct DatasetRecord {
  std::string label;
  Integer A;
  Integer B;
  unsigned rank = 0;
  Integer modular_degree;
};

/// Malformed dataset; `line` is 1-based, 0 for an empty input.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Header must be exactly `label,A,B,rank,modular_degree`.
std::vector<DatasetRecord> parse_dataset(std::istream& in);

/// rank + M <= nu_2(modular degree).
bool m_watkins_exact(const DatasetRecord& rec, unsigned M);

enum class TwistVerdict { ProvenCondI, ProvenCondII, ProvenLargeOmega, Inconclusive };
std::string to_string(TwistVerdict v);

TwistVerdict twist_watkins(const Integer& D, const Config& cfg = {});

/// Smallest omega(D) for which twists by D are known to satisfy Watkins:
/// 6 + 5 omega(N) - nu_2(m / c^2).
int omegareq_threshold(unsigned omega_N, unsigned nu2_modular_degree, unsigned nu2_manin);

struct ExactCheck {
  unsigned rank = 0;
  Integer modular_degree;
  bool verdict = false;
};

struct WatkinsReport {
  ShortWeierstrass curve;
  std::string family;
  std::optional<int> rank_upper;
  unsigned omega_N = 0;
  std::optional<int> surrogate_nu2_lower;
  std::optional<int> max_M_proven;
  std::string method_notes;
  std::optional<ExactCheck> exact_check;
};

struct ReportOptions {
  std::string family = "generic";
  unsigned M = 0;
  const DatasetRecord* record = nullptr;
};

WatkinsReport report(const ShortWeierstrass& E, const ReportOptions& opts = {}, const Config& cfg = {});
WatkinsReport report(const E2Param& p, const ReportOptions& opts = {}, const Config& cfg = {});

}  // namespace ecw
