#include "ecw/watkins.hpp"

#include <algorithm>

#include "ecw/descent2.hpp"
#include "ecw/descent3.hpp"
#include "ecw/errors.hpp"

namespace ecw {
namespace {

unsigned nu2(const Integer& m) { return static_cast<unsigned>(mpz_scan1(m.get_mpz_t(), 0)); }

Integer parse_integer(const std::string& field, std::size_t line, const char* name) {
  Integer v;
  if (field.empty() || v.set_str(field, 10) != 0) {
    throw DatasetError(line, std::string("bad integer in column ") + name + ": '" + field + "'");
  }
  return v;
}

}  // namespace

int surrogate_nu2_lower(const ShortWeierstrass& E, const Config& cfg) {
  if (two_torsion_shape(E) != TwoTorsionShape::Z2) {
    throw PreconditionError("surrogate_nu2_lower: E(Q)[2] must be Z/2");
  }
  return static_cast<int>(conductor_support(E, cfg.policy).omega_N) - 2;
}

std::string to_string(Verdict v) { return v == Verdict::Proven ? "Proven" : "Inconclusive"; }

Verdict m_watkins_surrogate(const E2Param& p, unsigned M, const Config& cfg) {
  const int lower = surrogate_nu2_lower(e2_short_model(p), cfg);
  const int bound = rank_upper(p, cfg).rank_upper;
  return bound + static_cast<int>(M) <= lower ? Verdict::Proven : Verdict::Inconclusive;
}

Verdict m_watkins_surrogate(const ShortWeierstrass& E, unsigned M, const Config& cfg) {
  const int lower = surrogate_nu2_lower(E, cfg);
  const int bound = rank_upper(e2_param_of(E), cfg).rank_upper;
  return bound + static_cast<int>(M) <= lower ? Verdict::Proven : Verdict::Inconclusive;
}

std::vector<DatasetRecord> parse_dataset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DatasetError(0, "empty dataset");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "label,A,B,rank,modular_degree") throw DatasetError(1, "unexpected header '" + line + "'");
  std::vector<DatasetRecord> out;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t pos; (pos = line.find(',', start)) != std::string::npos; start = pos + 1) {
      fields.push_back(line.substr(start, pos - start));
    }
    fields.push_back(line.substr(start));
    if (fields.size() != 5) throw DatasetError(number, "expected 5 fields");
    DatasetRecord rec;
    rec.label = fields[0];
    if (rec.label.empty()) throw DatasetError(number, "empty label");
    rec.A = parse_integer(fields[1], number, "A");
    rec.B = parse_integer(fields[2], number, "B");
    const Integer rank = parse_integer(fields[3], number, "rank");
    if (rank < 0 || !rank.fits_uint_p()) throw DatasetError(number, "rank must be a nonnegative integer");
    rec.rank = static_cast<unsigned>(rank.get_ui());
    rec.modular_degree = parse_integer(fields[4], number, "modular_degree");
    if (rec.modular_degree <= 0) throw DatasetError(number, "modular_degree must be positive");
    try {
      invariants(ShortWeierstrass{rec.A, rec.B});
    } catch (const SingularCurve&) {
      throw DatasetError(number, "singular curve");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

bool m_watkins_exact(const DatasetRecord& rec, unsigned M) {
  return rec.rank + M <= nu2(rec.modular_degree);
}

std::string to_string(TwistVerdict v) {
  switch (v) {
    case TwistVerdict::ProvenCondI:
      return "ProvenCondI";
    case TwistVerdict::ProvenCondII:
      return "ProvenCondII";
    case TwistVerdict::ProvenLargeOmega:
      return "ProvenLargeOmega";
    case TwistVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

TwistVerdict twist_watkins(const Integer& D, const Config& cfg) {
  switch (twist_e0(D, cfg).cls) {
    case TwistClass::CondI:
      return TwistVerdict::ProvenCondI;
    case TwistClass::CondII:
      return TwistVerdict::ProvenCondII;
    case TwistClass::LargeOmega:
      return TwistVerdict::ProvenLargeOmega;
    case TwistClass::Unclassified:
      return TwistVerdict::Inconclusive;
  }
  return TwistVerdict::Inconclusive;
}

int omegareq_threshold(unsigned omega_N, unsigned nu2_modular_degree, unsigned nu2_manin) {
  return 6 + 5 * static_cast<int>(omega_N) - (static_cast<int>(nu2_modular_degree) - 2 * static_cast<int>(nu2_manin));
}

namespace {

WatkinsReport assemble(const ShortWeierstrass& E, std::optional<int> bound, std::string notes,
                       const ReportOptions& opts, const Config& cfg) {
  WatkinsReport r;
  r.curve = E;
  r.family = opts.family;
  r.rank_upper = bound;
  r.omega_N = conductor_support(E, cfg.policy).omega_N;
  r.method_notes = std::move(notes);
  const auto shape = two_torsion_shape(E);
  if (shape == TwoTorsionShape::Z2) {
    r.surrogate_nu2_lower = static_cast<int>(r.omega_N) - 2;
    if (bound && *r.surrogate_nu2_lower - *bound >= 0) r.max_M_proven = *r.surrogate_nu2_lower - *bound;
  } else {
    r.method_notes += shape == TwoTorsionShape::Z2xZ2 ? "; full 2-torsion" : "; no rational 2-torsion";
    r.method_notes += ", surrogate not applicable";
  }
  if (opts.record) {
    r.exact_check = ExactCheck{opts.record->rank, opts.record->modular_degree, m_watkins_exact(*opts.record, opts.M)};
  }
  return r;
}

}  // namespace

WatkinsReport report(const ShortWeierstrass& E, const ReportOptions& opts, const Config& cfg) {
  std::optional<int> bound;
  std::string notes;
  if (two_torsion_shape(E) != TwoTorsionShape::Trivial) {
    bound = rank_upper(e2_param_of(E), cfg).rank_upper;
    notes = "2-isogeny descent";
  }
  if (E.A == 0) {
    const int b3 = rank_upper_type1(E.B).bound;
    if (!bound || b3 < *bound) {
      bound = b3;
      notes = "3-isogeny descent (Type-I)";
    }
  }
  if (!bound) notes = "no isogeny descent available";
  return assemble(E, bound, std::move(notes), opts, cfg);
}

WatkinsReport report(const E2Param& p, const ReportOptions& opts, const Config& cfg) {
  const int bound = rank_upper(p, cfg).rank_upper;
  ReportOptions o = opts;
  if (o.family == "generic") o.family = "e2";
  return assemble(e2_short_model(p), bound, "2-isogeny descent", o, cfg);
}

}  // namespace ecw
