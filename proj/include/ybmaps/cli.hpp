#ifndef YBMAPS_CLI_HPP
#define YBMAPS_CLI_HPP

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ybmaps/dynamics.hpp"
#include "ybmaps/errors.hpp"
#include "ybmaps/io.hpp"
#include "ybmaps/lax.hpp"
#include "ybmaps/maps.hpp"
#include "ybmaps/sampling.hpp"
#include "ybmaps/ybcore.hpp"

namespace ybmaps::cli {

using io::Json;

inline constexpr const char* tool_name = "ybmaps";
inline constexpr const char* tool_version = "0.1.0";

/// Bad flags, unknown names, incompatible map/family. Exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

enum class Format { json, csv };

struct RunConfig {
  std::string subcommand;
  std::string map = "adler";
  std::string family;  // empty: derived from the map
  std::size_t n = 0;   // 0: subcommand default
  std::size_t d = 2;
  std::size_t generator = 1;
  std::optional<std::size_t> steps;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::string state;  // literal; empty: sampled from the seed
  std::string relation = "yang-baxter";
  std::string orientation = "swapped";
  std::string p = "0,0,1";    // Lyubashenko p, coefficients lowest first
  std::string q = "0,0,0,1";  // Lyubashenko q
  Format format = Format::json;
  std::string output;  // empty: stdout
  bool timestamp = true;
  unsigned threads = 1;
};

struct Counts {
  std::size_t pass = 0, fail = 0, skipped = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Everything a run reports. JSON and CSV renderings carry the same data.
struct ResultDocument {
  std::string tool = tool_name;
  std::string version = tool_version;
  std::optional<std::string> timestamp;
  Json config = Json::object();
  Counts counts;
  Json summary = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  int exit_code() const { return counts.fail == 0 ? 0 : 1; }
  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

enum class SiteKind { scalar, dressing, kdv };

inline const std::vector<std::string>& known_maps() {
  static const std::vector<std::string> names{"adler", "kdv", "lyubashenko", "identity", "permutation", "sumleft"};
  return names;
}

inline const std::vector<std::string>& known_relations() {
  static const std::vector<std::string> names{"yang-baxter",  "reversibility", "commutativity",      "product-identity",
                                              "braid",        "involution",    "monodromy-converse", "yb-iff-commute"};
  return names;
}

inline SiteKind kind_by_name(const std::string& family) {
  if (family == "dressing") return SiteKind::dressing;
  if (family == "kdv") return SiteKind::kdv;
  if (family == "scalar") return SiteKind::scalar;
  throw ConfigError("unknown family '" + family + "' (known: dressing, kdv)");
}

/// Site kind a run works on; rejects unknown names and map/family clashes.
inline SiteKind resolve_kind(const RunConfig& cfg) {
  std::optional<SiteKind> from_family;
  if (!cfg.family.empty()) from_family = kind_by_name(cfg.family);
  SiteKind map_kind;
  if (cfg.map == "adler") map_kind = SiteKind::dressing;
  else if (cfg.map == "kdv") map_kind = SiteKind::kdv;
  else if (cfg.map == "lyubashenko" || cfg.map == "sumleft") map_kind = SiteKind::scalar;
  else if (cfg.map == "identity" || cfg.map == "permutation") return from_family.value_or(SiteKind::scalar);
  else throw ConfigError("unknown map '" + cfg.map + "'");
  if (from_family && *from_family != map_kind)
    throw ConfigError("family '" + cfg.family + "' does not match the sites of map '" + cfg.map + "'");
  return map_kind;
}

inline PolyZ parse_coefficients(const std::string& text) {
  std::vector<Rational> c;
  for (const auto& part : io::detail::split_top(text, ',')) c.push_back(Rational::parse(part));
  return PolyZ(std::move(c));
}

inline LyubashenkoPair lyubashenko_pair(const RunConfig& cfg) {
  try {
    LyubashenkoPair pq{RatFun(parse_coefficients(cfg.p)), RatFun(parse_coefficients(cfg.q))};
    validate(pq);
    return pq;
  } catch (const Error& e) {
    throw ConfigError(std::string("lyubashenko pair: ") + e.what());
  }
}

template <class Site>
YbMap<Site> make_map(const RunConfig& cfg) {
  if (cfg.map == "identity") return identity_map<Site>();
  if (cfg.map == "permutation") return permutation_map<Site>();
  if constexpr (std::is_same_v<Site, DressingSite>) {
    return adler_map();
  } else if constexpr (std::is_same_v<Site, KdvSite>) {
    return kdv_map();
  } else {
    if (cfg.map == "sumleft") return sumleft_map();
    return lyubashenko_map(lyubashenko_pair(cfg));
  }
}

template <class Site>
LaxFamily<Site> make_family(const RunConfig& cfg) {
  if constexpr (std::is_same_v<Site, DressingSite>) {
    return dressing_family();
  } else if constexpr (std::is_same_v<Site, KdvSite>) {
    return kdv_family(cfg.d);
  } else {
    throw ConfigError("map '" + cfg.map + "' has no Lax family; use --family dressing or kdv");
  }
}

inline Json config_echo(const RunConfig& cfg) {
  Json j;
  j["subcommand"] = cfg.subcommand;
  j["map"] = cfg.map;
  j["family"] = cfg.family;
  j["n"] = cfg.n;
  j["d"] = cfg.d;
  j["generator"] = cfg.generator;
  j["steps"] = cfg.steps ? Json(*cfg.steps) : Json(nullptr);
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["state"] = cfg.state;
  if (cfg.subcommand == "verify") j["relation"] = cfg.relation;
  if (cfg.subcommand == "refactor") j["orientation"] = cfg.orientation;
  if (cfg.map == "lyubashenko") {
    j["p"] = cfg.p;
    j["q"] = cfg.q;
  }
  return j;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline std::string fixed6(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

namespace detail {

inline std::size_t default_n(const RunConfig& cfg) {
  if (cfg.n != 0) return cfg.n;
  if (cfg.subcommand == "verify" && cfg.relation == "reversibility") return 2;
  if (cfg.subcommand == "refactor") return 2;
  return 3;
}

template <class Site>
State<Site> initial_state(const RunConfig& cfg, std::size_t n, Sampler& sampler) {
  if (cfg.state.empty()) return sampler.state<Site>(n, cfg.d);
  State<Site> s;
  try {
    s = io::parse_state<Site>(cfg.state);
  } catch (const Error& e) {
    throw ConfigError(std::string("--state: ") + e.what());
  }
  if (cfg.n != 0 && s.size() != cfg.n)
    throw ConfigError("--state has " + std::to_string(s.size()) + " sites but --n is " + std::to_string(cfg.n));
  if constexpr (std::is_same_v<Site, KdvSite>)
    if (s.front().dim() != cfg.d)
      throw ConfigError("--state sites have dimension " + std::to_string(s.front().dim()) + " but --d is " +
                        std::to_string(cfg.d));
  return s;
}

inline void check_generator(const RunConfig& cfg, std::size_t n) {
  if (cfg.generator < 1 || cfg.generator > n)
    throw ConfigError("--generator must lie in 1.." + std::to_string(n));
}

// One verify check: empty string on success, failure description otherwise.
template <class Site>
std::string verify_one(const YbMap<Site>& map, const std::string& relation, const State<Site>& s) {
  const std::size_t n = s.size();
  if (relation == "yang-baxter") return check_YB(map, s) ? "" : "R12 R13 R23 != R23 R13 R12";
  if (relation == "reversibility") return check_reversibility(map, s) ? "" : "R21 R != Id";
  if (relation == "product-identity") return check_product_identity(map, s) ? "" : "T1...Tn != Id";
  if (relation == "commutativity") {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (!check_commutativity(map, s, i, j))
          return "T" + std::to_string(i) + " T" + std::to_string(j) + " != T" + std::to_string(j) + " T" +
                 std::to_string(i);
    return "";
  }
  if (relation == "braid") {
    for (std::size_t i = 1; i <= n; ++i)
      if (!check_braid(map, s, i)) return "braid relation fails at i=" + std::to_string(i);
    return "";
  }
  if (relation == "involution") {
    for (std::size_t i = 1; i <= n; ++i)
      if (!check_involution(map, s, i)) return "S" + std::to_string(i) + "^2 != Id";
    return "";
  }
  throw ConfigError("unknown relation '" + relation + "'");
}

// Table cells are strings, arrays, objects or null; counters become strings.
inline Json cell(std::size_t k) { return std::to_string(k); }

inline Counts counts_of(const BatchReport& r) { return {r.passed, r.failed, r.skipped}; }

template <class Site>
void fill_batch_table(ResultDocument& doc, const std::vector<State<Site>>& samples, const BatchReport& report,
                      const std::vector<std::string>& details) {
  doc.columns = {"sample", "outcome", "state", "detail"};
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& r = report.results[k];
    const std::string& detail = r.outcome == Outcome::skipped ? r.detail : details[k];
    doc.rows.push_back({cell(k), Json(to_string(r.outcome)), Json(io::format_state(samples[k])), Json(detail)});
  }
  doc.counts = counts_of(report);
}

template <class Site>
void run_verify(const RunConfig& cfg, ResultDocument& doc) {
  const auto map = make_map<Site>(cfg);
  const std::size_t n = default_n(cfg);
  const std::string& rel = cfg.relation;
  if (std::find(known_relations().begin(), known_relations().end(), rel) == known_relations().end())
    throw ConfigError("unknown relation '" + rel + "'");
  if (rel == "yang-baxter" && n != 3) throw ConfigError("yang-baxter is checked on triples (--n 3)");
  if (rel == "reversibility" && n != 2) throw ConfigError("reversibility is checked on pairs (--n 2)");
  if ((rel == "braid" || rel == "involution") && n < 3) throw ConfigError(rel + " needs --n >= 3");
  if (n < 2) throw ConfigError("--n must be at least 2");
  Sampler sampler(cfg.seed);
  std::vector<std::size_t> index(cfg.samples);
  for (std::size_t k = 0; k < index.size(); ++k) index[k] = k;
  std::vector<std::string> details(cfg.samples);

  if (rel == "monodromy-converse") {
    std::vector<State<Site>> pairs, triples;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      pairs.push_back(sampler.state<Site>(2, cfg.d));
      triples.push_back(sampler.state<Site>(3, cfg.d));
    }
    auto report = run_batch(
        index,
        [&](std::size_t k) {
          const bool rev = check_product_identity(map, pairs[k]);
          const bool com = check_commutativity(map, triples[k], 1, 2);
          if (!rev) details[k] = "n=2: T1 T2 != Id";
          if (!com) details[k] += std::string(details[k].empty() ? "" : "; ") + "n=3: T1 T2 != T2 T1";
          return rev && com;
        },
        cfg.threads);
    doc.columns = {"sample", "outcome", "pair", "triple", "detail"};
    MonodromyVerdict v = yb_from_monodromy(map, pairs, triples);
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const auto& r = report.results[k];
      doc.rows.push_back({cell(k), Json(to_string(r.outcome)), Json(io::format_state(pairs[k])),
                          Json(io::format_state(triples[k])), Json(r.outcome == Outcome::skipped ? r.detail : details[k])});
    }
    doc.counts = counts_of(report);
    doc.summary["verdict"] = v.summary();
    return;
  }

  if (rel == "yb-iff-commute") {
    if constexpr (std::is_same_v<Site, ScalarSite>) {
      if (cfg.map != "lyubashenko") throw ConfigError("yb-iff-commute applies to --map lyubashenko");
      const auto pq = lyubashenko_pair(cfg);
      auto triples = sample_states<ScalarSite>(sampler, cfg.samples, 3);
      auto v = lyubashenko_yb_iff_commute(pq, triples);
      fill_batch_table(doc, triples, v.agreement, std::vector<std::string>(cfg.samples, ""));
      for (std::size_t k = 0; k < cfg.samples; ++k)
        if (v.agreement.results[k].outcome == Outcome::fail) doc.rows[k][3] = "check_YB disagrees with p(q(b)) = q(p(b))";
      doc.summary["commute_symbolic"] = v.commute_symbolic;
      doc.summary["yb_held"] = v.yb_held;
      return;
    } else {
      throw ConfigError("yb-iff-commute applies to --map lyubashenko");
    }
  }

  auto samples = sample_states<Site>(sampler, cfg.samples, n, cfg.d);
  auto report = run_batch(
      index,
      [&](std::size_t k) {
        details[k] = verify_one(map, rel, samples[k]);
        return details[k].empty();
      },
      cfg.threads);
  fill_batch_table(doc, samples, report, details);
}

template <class Site>
void run_refactor(const RunConfig& cfg, ResultDocument& doc) {
  const auto map = make_map<Site>(cfg);
  const auto family = make_family<Site>(cfg);
  Orientation orientation;
  if (cfg.orientation == "swapped") orientation = Orientation::swapped_product;
  else if (cfg.orientation == "mirrored") orientation = Orientation::mirrored;
  else throw ConfigError("--orientation must be swapped or mirrored");
  Sampler sampler(cfg.seed);
  auto samples = sample_states<Site>(sampler, cfg.samples, 2, cfg.d);
  std::vector<std::size_t> index(samples.size());
  for (std::size_t k = 0; k < index.size(); ++k) index[k] = k;
  std::vector<std::string> details(samples.size());
  auto report = run_batch(
      index,
      [&](std::size_t k) {
        const bool ok = refactor_check(family, map, samples[k][0], samples[k][1], orientation);
        if (!ok)
          details[k] = orientation == Orientation::swapped_product ? "A(x~)A(y~) != A(y)A(x)" : "A(y~)A(x~) != A(x)A(y)";
        return ok;
      },
      cfg.threads);
  fill_batch_table(doc, samples, report, details);
}

template <class Site>
Orbit<Site> run_orbit_common(const RunConfig& cfg, std::size_t default_steps, ResultDocument& doc) {
  const auto map = make_map<Site>(cfg);
  Sampler sampler(cfg.seed);
  const std::size_t n = default_n(cfg);
  auto s = initial_state<Site>(cfg, n, sampler);
  if (s.size() < 2) throw ConfigError("orbits need at least two sites");
  check_generator(cfg, s.size());
  const std::size_t steps = cfg.steps.value_or(default_steps);
  auto orbit = iterate(map, s, cfg.generator, steps);
  doc.counts = {orbit.states.size() - 1, 0, steps - (orbit.states.size() - 1)};
  doc.summary["n"] = orbit.n;
  doc.summary["length"] = orbit.states.size();
  doc.summary["truncated"] = orbit.truncated;
  doc.summary["truncation_reason"] = orbit.truncation_reason;
  return orbit;
}

template <class Site>
void run_orbit(const RunConfig& cfg, ResultDocument& doc) {
  auto orbit = run_orbit_common<Site>(cfg, 10, doc);
  doc.columns = {"step"};
  for (auto& c : io::state_columns<Site>(orbit.n)) doc.columns.push_back(c);
  for (std::size_t k = 0; k < orbit.states.size(); ++k) {
    std::vector<Json> row{cell(k)};
    for (auto& c : io::state_cells(orbit.states[k])) row.push_back(std::move(c));
    doc.rows.push_back(std::move(row));
  }
  Json period = nullptr;
  for (std::size_t k = 1; k < orbit.states.size(); ++k)
    if (states_equivalent(orbit.states[k], orbit.states[0])) {
      period = k;
      break;
    }
  doc.summary["period"] = period;
}

template <class Site>
void run_invariants(const RunConfig& cfg, ResultDocument& doc) {
  const auto family = make_family<Site>(cfg);
  auto orbit = run_orbit_common<Site>(cfg, 10, doc);
  const auto report = conservation_report(family, orbit);
  doc.columns = {"step", "outcome"};
  const std::size_t dim = family.dim;
  for (std::size_t k = 0; k <= dim; ++k) doc.columns.push_back("c" + std::to_string(k));
  doc.columns.push_back("clearing_factor");
  Counts counts;
  const std::optional<SpectralInvariants>* reference = nullptr;
  for (std::size_t k = 0; k < report.per_step.size(); ++k) {
    const auto& inv = report.per_step[k];
    std::vector<Json> row{cell(k)};
    if (!inv) {
      ++counts.skipped;
      row.push_back("skipped");
      for (std::size_t c = 0; c <= dim + 1; ++c) row.push_back(nullptr);
    } else {
      if (!reference) reference = &inv;
      const bool same = **reference == *inv;
      ++(same ? counts.pass : counts.fail);
      row.push_back(same ? "pass" : "fail");
      for (const auto& c : inv->char_poly.coefficients) row.push_back(io::to_json(c));
      row.push_back(io::to_json(inv->clearing_factor));
    }
    doc.rows.push_back(std::move(row));
  }
  doc.counts = counts;
  doc.summary["verdict"] = report.verdict ? "conserved" : "not-conserved";
  doc.summary["first_divergence"] = report.first_divergence ? Json(*report.first_divergence) : Json(nullptr);
  if (!report.per_step.empty() && report.per_step[0]) {
    const auto& cp = report.per_step[0]->char_poly;
    // c_{d-1} = (-1)^{d-1} tr, c_0 = det.
    RatFun trace = cp.coefficients[dim - 1];
    if ((dim - 1) % 2 == 1) trace = -trace;
    doc.summary["trace"] = io::to_json(trace);
    doc.summary["determinant"] = io::to_json(cp.determinant());
    doc.summary["trace_text"] = trace.str();
    doc.summary["determinant_text"] = cp.determinant().str();
  }
}

template <class Site>
void run_entropy(const RunConfig& cfg, ResultDocument& doc) {
  auto orbit = run_orbit_common<Site>(cfg, 100, doc);
  const auto series = height_series(orbit);
  doc.columns = {"step", "height"};
  for (std::size_t k = 0; k < series.heights.size(); ++k) doc.rows.push_back({cell(k), cell(series.heights[k])});
  auto fit = [](const std::optional<SlopeFit>& f) {
    return f ? Json{{"slope", fixed6(f->slope)}, {"points", f->points}} : Json(nullptr);
  };
  doc.summary["window_begin"] = series.window_begin;
  doc.summary["log_h_vs_k"] = fit(series.log_h_vs_k);
  doc.summary["loglog_h_vs_log_k"] = fit(series.loglog_h_vs_log_k);
  doc.summary["log_h_vs_log_k"] = fit(series.log_h_vs_log_k);
  doc.summary["max_height"] = series.heights.back();
}

template <class Site>
void dispatch(const RunConfig& cfg, ResultDocument& doc) {
  if (cfg.subcommand == "verify") run_verify<Site>(cfg, doc);
  else if (cfg.subcommand == "refactor") run_refactor<Site>(cfg, doc);
  else if (cfg.subcommand == "orbit") run_orbit<Site>(cfg, doc);
  else if (cfg.subcommand == "invariants") run_invariants<Site>(cfg, doc);
  else if (cfg.subcommand == "entropy") run_entropy<Site>(cfg, doc);
  else throw ConfigError("unknown subcommand '" + cfg.subcommand + "'");
}

}  // namespace detail

/// Execute a configured run. Throws ConfigError before any work on bad
/// configuration.
inline ResultDocument run(const RunConfig& cfg) {
  ResultDocument doc;
  doc.config = config_echo(cfg);
  if (cfg.timestamp) doc.timestamp = utc_timestamp();
  if (cfg.d < 1) throw ConfigError("--d must be at least 1");
  switch (resolve_kind(cfg)) {
    case SiteKind::scalar: detail::dispatch<ScalarSite>(cfg, doc); break;
    case SiteKind::dressing: detail::dispatch<DressingSite>(cfg, doc); break;
    case SiteKind::kdv: detail::dispatch<KdvSite>(cfg, doc); break;
  }
  return doc;
}

inline ResultDocument cmd_verify(RunConfig cfg) { cfg.subcommand = "verify"; return run(cfg); }
inline ResultDocument cmd_orbit(RunConfig cfg) { cfg.subcommand = "orbit"; return run(cfg); }
inline ResultDocument cmd_invariants(RunConfig cfg) { cfg.subcommand = "invariants"; return run(cfg); }
inline ResultDocument cmd_refactor(RunConfig cfg) { cfg.subcommand = "refactor"; return run(cfg); }
inline ResultDocument cmd_entropy(RunConfig cfg) { cfg.subcommand = "entropy"; return run(cfg); }

// ---------------------------------------------------------------------------
// Rendering

inline Json to_json(const ResultDocument& doc) {
  Json j;
  j["tool"] = doc.tool;
  j["version"] = doc.version;
  if (doc.timestamp) j["timestamp"] = *doc.timestamp;
  j["config"] = doc.config;
  j["counts"] = Json{{"pass", doc.counts.pass}, {"fail", doc.counts.fail}, {"skipped", doc.counts.skipped}};
  j["summary"] = doc.summary;
  Json rows = Json::array();
  for (const auto& r : doc.rows) rows.push_back(Json(r));
  j["table"] = Json{{"columns", doc.columns}, {"rows", rows}};
  return j;
}

inline ResultDocument from_json(const Json& j) {
  ResultDocument doc;
  doc.tool = j.at("tool").get<std::string>();
  doc.version = j.at("version").get<std::string>();
  if (j.contains("timestamp")) doc.timestamp = j["timestamp"].get<std::string>();
  doc.config = j.at("config");
  const auto& c = j.at("counts");
  doc.counts = {c.at("pass").get<std::size_t>(), c.at("fail").get<std::size_t>(), c.at("skipped").get<std::size_t>()};
  doc.summary = j.at("summary");
  doc.columns = j.at("table").at("columns").get<std::vector<std::string>>();
  for (const auto& r : j.at("table").at("rows")) doc.rows.push_back(r.get<std::vector<Json>>());
  return doc;
}

namespace detail {

inline std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline bool csv_needs_json(const std::string& s) {
  return s == "null" || (!s.empty() && (s[0] == '[' || s[0] == '{' || s[0] == '"'));
}

// Table cells are strings, arrays, objects or null. Strings are written
// raw unless they could be read back as JSON; everything else as compact JSON.
inline std::string csv_cell(const Json& v) {
  if (v.is_string() && !csv_needs_json(v.get_ref<const std::string&>()))
    return csv_escape(v.get_ref<const std::string&>());
  return csv_escape(v.dump());
}

inline Json csv_value(const std::string& raw) {
  if (csv_needs_json(raw)) return Json::parse(raw);
  return raw;
}

inline std::vector<std::vector<std::string>> csv_records(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          cell += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      rec.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (c == '\n') {
      rec.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(rec));
      rec.clear();
      any = false;
    } else if (c != '\r') {
      cell += c;
      any = true;
    }
  }
  if (any || !cell.empty()) {
    rec.push_back(std::move(cell));
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace detail

/// CSV: "#key=value" metadata lines (values compact JSON), then the table
/// with a header row.
inline std::string to_csv(const ResultDocument& doc) {
  std::ostringstream os;
  os << "#tool=" << Json(doc.tool).dump() << "\n";
  os << "#version=" << Json(doc.version).dump() << "\n";
  if (doc.timestamp) os << "#timestamp=" << Json(*doc.timestamp).dump() << "\n";
  os << "#config=" << doc.config.dump() << "\n";
  os << "#counts=" << Json{{"pass", doc.counts.pass}, {"fail", doc.counts.fail}, {"skipped", doc.counts.skipped}}.dump()
     << "\n";
  os << "#summary=" << doc.summary.dump() << "\n";
  for (std::size_t k = 0; k < doc.columns.size(); ++k) os << (k ? "," : "") << detail::csv_escape(doc.columns[k]);
  os << "\n";
  for (const auto& r : doc.rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << detail::csv_cell(r[k]);
    os << "\n";
  }
  return os.str();
}

inline ResultDocument from_csv(const std::string& text) {
  ResultDocument doc;
  std::istringstream is(text);
  std::string line;
  std::string body;
  bool header_done = false;
  while (std::getline(is, line)) {
    if (!header_done && !line.empty() && line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("csv metadata line without '=': " + line);
      const std::string key = line.substr(1, eq - 1);
      const Json value = Json::parse(line.substr(eq + 1));
      if (key == "tool") doc.tool = value.get<std::string>();
      else if (key == "version") doc.version = value.get<std::string>();
      else if (key == "timestamp") doc.timestamp = value.get<std::string>();
      else if (key == "config") doc.config = value;
      else if (key == "summary") doc.summary = value;
      else if (key == "counts")
        doc.counts = {value.at("pass").get<std::size_t>(), value.at("fail").get<std::size_t>(),
                      value.at("skipped").get<std::size_t>()};
      continue;
    }
    header_done = true;
    body += line + "\n";
  }
  auto records = detail::csv_records(body);
  if (records.empty()) throw ParseError("csv without header row");
  doc.columns = records.front();
  for (std::size_t r = 1; r < records.size(); ++r) {
    std::vector<Json> row;
    for (const auto& cell : records[r]) row.push_back(detail::csv_value(cell));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

inline std::string render(const ResultDocument& doc, Format format) {
  return format == Format::json ? to_json(doc).dump(2) + "\n" : to_csv(doc);
}

}  // namespace ybmaps::cli

#endif
