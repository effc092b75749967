#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <thread>

#include "json.hpp"

#include "config_io.hpp"
#include "ecw/descent2.hpp"
#include "ecw/descent3.hpp"
#include "ecw/errors.hpp"
#include "ecw/families.hpp"
#include "ecw/stats.hpp"
#include "ecw/watkins.hpp"

namespace ecw::cli {

const std::vector<std::string> kFamilies = {"e2", "e3", "e5", "e7", "type1", "twist-e0"};
const std::vector<std::string> kExperiments = {"count-r2",    "count-r3",  "count-family",  "volume",
                                               "normal-order", "roots-mod", "avg-frobenius", "density-cor-main"};

namespace {

using json = nlohmann::ordered_json;

Integer parse_integer(const std::string& text, const std::string& name) {
  Integer v;
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError("--" + name + " expects an integer, got '" + text + "'");
  return v;
}

json jint(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json jints(const std::vector<Integer>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(jint(v));
  return arr;
}

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& out) const {
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& r : rows) {
      json obj;
      for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
      arr.push_back(std::move(obj));
    }
    return arr;
  }
};

// Evaluates fn(i) for i < n on cfg.workers threads, results in index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned workers, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// One parameter value of a family together with its curve.
struct Member {
  std::vector<Rational> key;
  std::string params;
  ShortWeierstrass curve;
  std::optional<E2Param> e2;
  std::optional<Integer> type1_a;
  std::optional<Integer> twist_D;
};

void require_family(const std::string& family) {
  if (std::find(kFamilies.begin(), kFamilies.end(), family) == kFamilies.end()) {
    throw UsageError("unknown family '" + family + "'");
  }
}

std::string pair_label(const Integer& a, const Integer& b) { return a.get_str() + ":" + b.get_str(); }

std::vector<Member> family_members(const std::string& family, std::uint64_t X, const Config& cfg) {
  require_family(family);
  if (X == 0) throw UsageError("--height must be at least 1");
  const Integer x = static_cast<unsigned long>(X);
  std::vector<Member> out;
  if (family == "e2") {
    const Integer x2 = x * x;
    for (Integer a = -x; a <= x; ++a) {
      for (Integer b = -x2; b <= x2; ++b) {
        if (b == 0 || a * a == 4 * b) continue;
        E2Param p{a, b};
        out.push_back({{a, b}, pair_label(a, b), e2_short_model(p), p, {}, {}});
      }
    }
  } else if (family == "e3") {
    const Integer x2 = x * x, x3 = x2 * x;
    for (Integer a = -x; a <= x; ++a) {
      Integer lo, hi;
      if (a == 0) {
        // B = b^2, A = 0
        mpz_sqrt(hi.get_mpz_t(), x3.get_mpz_t());
        lo = -hi;
      } else {
        const Integer a4 = a * a * a * a;
        Rational e1(Integer(-x2 - 27 * a4), Integer(6 * a)), e2(Integer(x2 - 27 * a4), Integer(6 * a));
        e1.canonicalize();
        e2.canonicalize();
        if (e2 < e1) std::swap(e1, e2);
        mpz_cdiv_q(lo.get_mpz_t(), e1.get_num_mpz_t(), e1.get_den_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), e2.get_num_mpz_t(), e2.get_den_mpz_t());
      }
      for (Integer b = lo; b <= hi; ++b) {
        ShortWeierstrass E{6 * a * b + 27 * a * a * a * a, b * b - 27 * a * a * a * a * a * a};
        if (!height_leq(E, x)) continue;
        try {
          E = e3_from_torsion(a, b);
        } catch (const SingularCurve&) {
          continue;
        }
        out.push_back({{a, b}, pair_label(a, b), E, {}, {}, {}});
      }
    }
  } else if (family == "e5" || family == "e7") {
    for (auto& m : family_curves(family == "e5" ? 5 : 7, X, 2.0, cfg.workers)) {
      out.push_back({{m.t}, m.t.get_str(), m.curve, {}, {}, {}});
    }
  } else if (family == "type1") {
    const Integer x3 = x * x * x;
    for (Integer a = -x3; a <= x3; ++a) {
      if (a == 0) continue;
      out.push_back({{a}, a.get_str(), type1(a).curve, {}, a, {}});
    }
  } else {  // twist-e0: height of the twist by D is |D|
    for (Integer D = -x; D <= x; ++D) {
      if (D == 0 || mobius(D) == 0) continue;
      out.push_back({{D}, D.get_str(), twist_e0(D, cfg).curve, {}, {}, D});
    }
  }
  std::sort(out.begin(), out.end(), [](const Member& l, const Member& r) { return l.key < r.key; });
  return out;
}

std::optional<int> member_rank_upper(const Member& m, const Config& cfg) {
  if (m.e2) return rank_upper(*m.e2, cfg).rank_upper;
  if (m.type1_a) return rank_upper_type1(*m.type1_a).bound;
  if (m.twist_D) return rank_upper_type1(Integer(-(*m.twist_D) * (*m.twist_D) * (*m.twist_D))).bound;
  return std::nullopt;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

void emit(const Table& t, Format format, const json& summary, std::ostream& out) {
  if (format == Format::Csv) {
    t.write_csv(out);
    return;
  }
  json doc = summary;
  doc["rows"] = t.to_json();
  out << doc.dump(2) << '\n';
}

json header(const std::string& command, const Config& cfg) {
  json j;
  j["command"] = command;
  j["config"] = to_json(cfg);
  return j;
}

std::vector<Integer> primes_of(const Integer& n) { return n == 0 ? std::vector<Integer>{} : factor(n).primes(); }

}  // namespace

int cmd_enumerate(const EnumerateOptions& o, const Config& cfg, Streams io) {
  const auto members = family_members(o.family, o.height, cfg);
  struct Out {
    unsigned omega = 0;
    std::optional<int> bound;
  };
  const auto results = parallel_map<Out>(members.size(), cfg.workers, [&](std::size_t i) {
    return Out{conductor_support(members[i].curve, cfg.policy).omega_N, member_rank_upper(members[i], cfg)};
  });
  Table t{{"params", "A", "B", "omega_N", "rank_upper"}, {}};
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    t.rows.push_back({m.params, m.curve.A.get_str(), m.curve.B.get_str(), std::to_string(results[i].omega),
                      opt_str(results[i].bound)});
  }
  json summary = header("enumerate", cfg);
  summary["family"] = o.family;
  summary["height"] = o.height;
  summary["count"] = t.rows.size();
  if (o.out_path.empty()) {
    emit(t, o.format, summary, io.out);
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw UsageError("cannot write '" + o.out_path + "'");
    emit(t, o.format, summary, file);
  }
  return 0;
}

int cmd_descent(const DescentOptions& o, const Config& cfg, Streams io) {
  const E2Param p{parse_integer(o.a, "a"), parse_integer(o.b, "b")};
  const E2Curve c = e2_curve(p);
  const SelmerEstimate s = rank_upper(p, cfg);
  json j = header("descent", cfg);
  j["a"] = jint(p.a);
  j["b"] = jint(p.b);
  j["curve"] = {{"A", jint(c.curve.A)}, {"B", jint(c.curve.B)}};
  j["dual"] = {{"a", jint(c.dual.a)}, {"b", jint(c.dual.b)}};
  j["omega_N"] = conductor_support(c.curve, cfg.policy).omega_N;
  j["sel_phi"] = jints(s.phi_classes);
  j["sel_phihat"] = jints(s.phihat_classes);
  j["dim_phi"] = s.dim_phi;
  j["dim_phihat"] = s.dim_phihat;
  j["rank_upper"] = s.rank_upper;
  j["clamped"] = s.clamped;
  io.out << j.dump(2) << '\n';
  return 0;
}

int cmd_descent3(const DescentOptions& o, const Config& cfg, Streams io) {
  const Integer a = parse_integer(o.a, "a");
  const Type1Bound t = rank_upper_type1(a);
  auto field = [](const ClassGroup3& g, unsigned unit) {
    json f;
    f["kernel"] = jint(g.field_kernel);
    f["rational"] = g.rational;
    f["r3"] = g.r3;
    f["method"] = to_string(g.method);
    f["unit_dim"] = unit;
    return f;
  };
  json j = header("descent3", cfg);
  j["a"] = jint(a);
  j["curve"] = {{"A", 0}, {"B", jint(a)}};
  j["bound"] = t.bound;
  j["class_unit_part"] = t.class_unit_part();
  j["k_a"] = field(t.k_a, t.unit_a);
  j["k_27a"] = field(t.k_27a, t.unit_27a);
  j["s_a"] = jints(t.s_a.primes);
  j["s_27a"] = jints(t.s_27a.primes);
  io.out << j.dump(2) << '\n';
  return 0;
}

int cmd_watkins(const WatkinsOptions& o, const Config& cfg, Streams io) {
  const auto members = family_members(o.family, o.height, cfg);
  struct Out {
    unsigned omega = 0;
    std::optional<int> bound;
    std::optional<int> lower;
    std::string verdict;
  };
  const auto results = parallel_map<Out>(members.size(), cfg.workers, [&](std::size_t i) {
    const Member& m = members[i];
    Out r;
    if (m.twist_D) {
      r.omega = conductor_support(m.curve, cfg.policy).omega_N;
      r.bound = member_rank_upper(m, cfg);
      r.verdict = to_string(twist_watkins(*m.twist_D, cfg));
      return r;
    }
    ReportOptions opts;
    opts.family = o.family;
    opts.M = o.M;
    const WatkinsReport rep = m.e2 ? report(*m.e2, opts, cfg) : report(m.curve, opts, cfg);
    r.omega = rep.omega_N;
    r.bound = rep.rank_upper;
    r.lower = rep.surrogate_nu2_lower;
    const bool proven = rep.max_M_proven && static_cast<int>(o.M) <= *rep.max_M_proven;
    r.verdict = to_string(proven ? Verdict::Proven : Verdict::Inconclusive);
    return r;
  });
  Table t{{"params", "A", "B", "omega_N", "rank_upper", "nu2_lower", "verdict"}, {}};
  std::uint64_t proven = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    const auto& r = results[i];
    if (r.verdict.rfind("Proven", 0) == 0) ++proven;
    t.rows.push_back({m.params, m.curve.A.get_str(), m.curve.B.get_str(), std::to_string(r.omega), opt_str(r.bound),
                      opt_str(r.lower), r.verdict});
  }
  json summary = header("watkins", cfg);
  summary["family"] = o.family;
  summary["height"] = o.height;
  summary["M"] = o.M;
  summary["total"] = members.size();
  summary["proven"] = proven;
  summary["inconclusive"] = members.size() - proven;
  summary["proven_fraction"] = members.empty() ? 0.0 : static_cast<double>(proven) / members.size();
  if (!o.summary_path.empty()) {
    std::ofstream file(o.summary_path);
    if (!file) throw UsageError("cannot write '" + o.summary_path + "'");
    file << summary.dump(2) << '\n';
  }
  emit(t, o.format, summary, io.out);
  return 0;
}

namespace {

std::vector<std::uint64_t> heights_or(const StatsOptions& o, std::vector<std::uint64_t> fallback) {
  auto hs = o.heights.empty() ? std::move(fallback) : o.heights;
  for (auto h : hs) {
    if (h == 0) throw UsageError("heights must be positive");
  }
  return hs;
}

void add_slope(json& summary, const std::string& family, const std::vector<std::uint64_t>& xs,
               const std::vector<std::uint64_t>& counts) {
  CountSeries s{family, {}};
  for (std::size_t i = 0; i < xs.size(); ++i) s.points.emplace_back(xs[i], counts[i]);
  try {
    summary["slope"] = slope(s);
  } catch (const DomainError&) {
    summary["slope"] = nullptr;
  }
}

Poly poly_flag(const StatsOptions& o) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  try {
    return parse_poly(o.poly);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
}

}  // namespace

int cmd_stats(const StatsOptions& o, const Config& cfg, Streams io) {
  json summary = header("stats", cfg);
  summary["experiment"] = o.experiment;
  Table t;
  int code = 0;
  const auto& ex = o.experiment;
  if (ex == "count-r2" || ex == "count-r3") {
    const auto hs = heights_or(o, {25, 50, 100});
    t.columns = {"X", "count", "ratio"};
    std::vector<std::uint64_t> counts;
    for (auto X : hs) {
      const auto c = ex == "count-r2" ? count_r2(X) : count_r3(X);
      counts.push_back(c);
      const double scale = ex == "count-r2" ? std::pow(double(X), 3) : std::pow(double(X), 2);
      t.rows.push_back({std::to_string(X), std::to_string(c), fixed(c / scale)});
    }
    add_slope(summary, ex, hs, counts);
    if (ex == "count-r2") summary["volume"] = volume_constant(30).value_approx;
  } else if (ex == "count-family") {
    if (o.ell != 5 && o.ell != 7) throw UsageError("--ell must be 5 or 7");
    const auto hs = heights_or(o, {100, 200, 400, 800});
    t.columns = {"X", "count"};
    std::vector<std::uint64_t> counts;
    for (auto X : hs) {
      counts.push_back(count_family(o.ell, X, o.safety, cfg.workers));
      t.rows.push_back({std::to_string(X), std::to_string(counts.back())});
    }
    summary["ell"] = o.ell;
    summary["safety"] = o.safety;
    add_slope(summary, "e" + std::to_string(o.ell), hs, counts);
  } else if (ex == "volume") {
    if (o.precision < 10) throw UsageError("--precision must be at least 10");
    const VolumeConstant v = volume_constant(o.precision);
    t.columns = {"digits", "alpha_plus", "alpha_minus", "value", "certified"};
    t.rows.push_back({std::to_string(v.digits), v.alpha_plus, v.alpha_minus, v.value, v.certified ? "true" : "false"});
    summary["value_approx"] = v.value_approx;
  } else if (ex == "normal-order") {
    const Poly f = poly_flag(o);
    std::vector<Integer> S;
    if (o.exclude.empty()) {
      S = primes_of(abs(f.leading()));
    } else {
      for (const auto& s : o.exclude) S.push_back(parse_integer(s, "exclude"));
    }
    const auto hs = heights_or(o, {100, 200, 400});
    t.columns = {"X", "mean", "variance", "n"};
    json exact = json::array();
    for (auto X : hs) {
      const auto s = normal_order_experiment(f, X, S, cfg.workers);
      t.rows.push_back({std::to_string(X), fixed(s.mean.get_d()), fixed(s.variance.get_d()),
                        std::to_string(s.sample_count)});
      exact.push_back({{"X", X}, {"mean", s.mean.get_str()}, {"variance", s.variance.get_str()}});
    }
    summary["poly"] = f.to_string();
    summary["excluded"] = jints(S);
    summary["exact"] = exact;
  } else if (ex == "roots-mod") {
    const Poly f = poly_flag(o);
    if (f.degree() < 1) throw UsageError("--poly must be non-constant");
    const std::uint64_t bound = 2 * static_cast<std::uint64_t>(f.degree());
    t.columns = {"p", "count"};
    std::uint64_t max_count = 0;
    json violations = json::array();
    for (auto p : primes_up_to(o.pmax)) {
      if (!admissible_prime(f, p)) continue;
      const auto c = roots_mod(f, p, o.square);
      max_count = std::max(max_count, c);
      if (o.square && c > bound) violations.push_back(p);
      t.rows.push_back({std::to_string(p), std::to_string(c)});
    }
    std::optional<bool> irreducible;
    try {
      irreducible = is_irreducible(f);
    } catch (const Undecided&) {
    }
    summary["poly"] = f.to_string();
    summary["square"] = o.square;
    summary["irreducible"] = irreducible ? json(*irreducible) : json(nullptr);
    summary["bound"] = bound;
    summary["max_count"] = max_count;
    summary["violations"] = violations;
    if (o.square && irreducible.value_or(false) && !violations.empty()) {
      io.err << "roots-mod: root count above 2 deg(f) at p = " << violations.dump() << '\n';
      code = 1;
    }
  } else if (ex == "avg-frobenius") {
    FrobeniusFamily fam;
    if (o.family == "e5") {
      fam = FrobeniusFamily::E5;
    } else if (o.family == "e7") {
      fam = FrobeniusFamily::E7;
    } else if (o.family == "e3poly") {
      fam = FrobeniusFamily::E3Poly;
    } else {
      throw UsageError("--family must be e5, e7 or e3poly");
    }
    const PolyFamily pf = family_of(fam);
    const int bound = family_degrees(pf).bound();
    t.columns = {"p", "A_p", "A_p_approx"};
    json violations = json::array();
    for (auto p : primes_up_to(o.pmax)) {
      if (p <= 3) continue;
      const Rational ap = avg_frobenius(pf, p);
      if (abs(ap) > bound) violations.push_back(p);
      t.rows.push_back({std::to_string(p), ap.get_str(), fixed(ap.get_d())});
    }
    summary["family"] = o.family;
    summary["bound"] = bound;
    summary["violations"] = violations;
    if (!violations.empty()) {
      io.err << "avg-frobenius: |A_p| above " << bound << " at p = " << violations.dump() << '\n';
      code = 1;
    }
  } else if (ex == "density-cor-main") {
    const std::uint64_t X = o.heights.empty() ? 20 : o.heights.front();
    if (X < 2) throw UsageError("density-cor-main needs X >= 2");
    const DensityResult d = density_experiment_cor_main(X, cfg.workers);
    t.columns = {"X", "eligible", "total", "square_discriminant", "fraction"};
    const double frac = d.total ? static_cast<double>(d.eligible) / d.total : 0.0;
    t.rows.push_back({std::to_string(X), std::to_string(d.eligible), std::to_string(d.total),
                      std::to_string(d.square_discriminant), fixed(frac)});
    summary["fraction"] = frac;
    if (o.cross_check) {
      const auto failed = parallel_map<char>(d.certified.size(), cfg.workers, [&](std::size_t i) -> char {
        const E2Param p{d.certified[i].first, d.certified[i].second};
        const int lower = static_cast<int>(conductor_support(e2_short_model(p), cfg.policy).omega_N) - 2;
        return rank_upper(p, cfg).rank_upper > lower;
      });
      json bad = json::array();
      for (std::size_t i = 0; i < failed.size(); ++i) {
        if (failed[i]) bad.push_back(pair_label(d.certified[i].first, d.certified[i].second));
      }
      summary["cross_check_failures"] = bad;
      if (!bad.empty()) {
        io.err << "density-cor-main: certified pairs with rank_upper > omega(N) - 2: " << bad.dump() << '\n';
        code = 1;
      }
    }
  } else {
    throw UsageError("unknown experiment '" + ex + "'");
  }
  emit(t, o.format, summary, io.out);
  return code;
}

int cmd_verify(const VerifyOptions& o, const Config& cfg, Streams io) {
  std::ifstream in(o.dataset);
  if (!in) throw UsageError("cannot read dataset '" + o.dataset + "'");
  const auto records = parse_dataset(in);
  json j = header("verify", cfg);
  j["dataset"] = o.dataset;
  j["M"] = o.M;
  json per = json::array();
  std::size_t surrogate_failures = 0, rank_failures = 0;
  for (const auto& rec : records) {
    const ShortWeierstrass E{rec.A, rec.B};
    ReportOptions opts;
    opts.M = o.M;
    opts.record = &rec;
    const WatkinsReport rep = report(E, opts, cfg);
    const unsigned nu2m = valuation(rec.modular_degree, 2);
    const bool surrogate_ok = !rep.surrogate_nu2_lower || *rep.surrogate_nu2_lower <= static_cast<int>(nu2m);
    const bool rank_ok = !rep.rank_upper || *rep.rank_upper >= static_cast<int>(rec.rank);
    surrogate_failures += !surrogate_ok;
    rank_failures += !rank_ok;
    json r;
    r["label"] = rec.label;
    r["A"] = jint(rec.A);
    r["B"] = jint(rec.B);
    r["rank"] = rec.rank;
    r["modular_degree"] = jint(rec.modular_degree);
    r["nu2_modular_degree"] = nu2m;
    r["omega_N"] = rep.omega_N;
    r["surrogate_nu2_lower"] = rep.surrogate_nu2_lower ? json(*rep.surrogate_nu2_lower) : json(nullptr);
    r["surrogate_consistent"] = surrogate_ok;
    r["rank_upper"] = rep.rank_upper ? json(*rep.rank_upper) : json(nullptr);
    r["rank_consistent"] = rank_ok;
    r["watkins_exact"] = m_watkins_exact(rec, o.M);
    const int max_m = static_cast<int>(nu2m) - static_cast<int>(rec.rank);
    r["max_M_exact"] = max_m >= 0 ? json(max_m) : json(nullptr);
    r["method_notes"] = rep.method_notes;
    per.push_back(std::move(r));
  }
  const bool pass = surrogate_failures == 0 && rank_failures == 0;
  j["records"] = per;
  j["summary"] = {{"records", records.size()},
                  {"surrogate_failures", surrogate_failures},
                  {"rank_failures", rank_failures},
                  {"pass", pass}};
  io.out << j.dump(2) << '\n';
  if (!pass) io.err << "verify: consistency check failed\n";
  return pass ? 0 : 1;
}

}  // namespace ecw::cli
