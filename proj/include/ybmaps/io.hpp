#ifndef YBMAPS_IO_HPP
#define YBMAPS_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ybmaps/errors.hpp"
#include "ybmaps/matrix.hpp"
#include "ybmaps/ratfun.hpp"
#include "ybmaps/sites.hpp"

// Shared text and JSON encodings. Rationals are "p/q" strings (or "p"),
// polynomials are arrays of rationals lowest degree first, and a rational
// function is a polynomial array when its denominator is 1, otherwise
// {"num": [...], "den": [...]}.

namespace ybmaps::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

inline Json to_json(const PolyZ& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

inline PolyZ poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return PolyZ(std::move(c));
}

inline Json to_json(const RatFun& r) {
  if (r.den() == PolyZ::constant(1)) return to_json(r.num());
  return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

inline RatFun ratfun_from_json(const Json& j) {
  if (j.is_array()) return RatFun(poly_from_json(j));
  if (j.is_object() && j.contains("num") && j.contains("den"))
    return RatFun::from_pair(poly_from_json(j["num"]), poly_from_json(j["den"]));
  throw ParseError("expected a rational function, got " + j.dump());
}

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline std::vector<Rational> vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

// Per-site table columns: one cell per field, in a fixed order.

inline std::vector<std::string> site_fields(const ScalarSite*) { return {"x"}; }
inline std::vector<std::string> site_fields(const DressingSite*) { return {"f", "beta"}; }
inline std::vector<std::string> site_fields(const KdvSite*) { return {"xi", "eta", "lambda"}; }

template <class Site>
std::vector<std::string> state_columns(std::size_t n) {
  std::vector<std::string> cols;
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& f : site_fields(static_cast<const Site*>(nullptr))) cols.push_back(f + std::to_string(k));
  return cols;
}

inline std::vector<Json> site_cells(const ScalarSite& s) { return {to_json(s.value)}; }
inline std::vector<Json> site_cells(const DressingSite& s) { return {to_json(s.f), to_json(s.beta)}; }
inline std::vector<Json> site_cells(const KdvSite& s) { return {to_json(s.xi), to_json(s.eta), to_json(s.lambda)}; }

template <class Site>
std::vector<Json> state_cells(const State<Site>& s) {
  std::vector<Json> out;
  for (const auto& x : s)
    for (auto& c : site_cells(x)) out.push_back(std::move(c));
  return out;
}

template <class Site>
State<Site> state_from_cells(const std::vector<Json>& cells, std::size_t offset = 0);

template <>
inline State<ScalarSite> state_from_cells<ScalarSite>(const std::vector<Json>& cells, std::size_t offset) {
  State<ScalarSite> s;
  for (std::size_t k = offset; k < cells.size(); ++k) s.push_back({rational_from_json(cells[k])});
  return s;
}
template <>
inline State<DressingSite> state_from_cells<DressingSite>(const std::vector<Json>& cells, std::size_t offset) {
  if ((cells.size() - offset) % 2 != 0) throw ParseError("dressing state: odd number of cells");
  State<DressingSite> s;
  for (std::size_t k = offset; k < cells.size(); k += 2)
    s.push_back({rational_from_json(cells[k]), rational_from_json(cells[k + 1])});
  return s;
}
template <>
inline State<KdvSite> state_from_cells<KdvSite>(const std::vector<Json>& cells, std::size_t offset) {
  if ((cells.size() - offset) % 3 != 0) throw ParseError("kdv state: cell count not a multiple of 3");
  State<KdvSite> s;
  for (std::size_t k = offset; k < cells.size(); k += 3)
    s.push_back({vector_from_json(cells[k]), vector_from_json(cells[k + 1]), rational_from_json(cells[k + 2])});
  return s;
}

// State literals: "(1,3;2,1)" for dressing, "([1,0],[1,1],2;[0,1],[1,1],1)"
// for kdv, "(1;1;1)" for scalar sites.

namespace detail {
inline std::vector<std::string> split_top(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  parts.push_back(cur);
  return parts;
}

inline std::string strip(std::string_view t, char open, char close) {
  std::string s(t);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("empty literal");
  s = s.substr(b, e - b + 1);
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw ParseError(std::string("expected '") + open + "...'" + close + "' in '" + std::string(t) + "'");
  return s.substr(1, s.size() - 2);
}

inline std::vector<Rational> parse_vector(std::string_view t) {
  std::vector<Rational> v;
  for (const auto& p : split_top(strip(t, '[', ']'), ',')) v.push_back(Rational::parse(p));
  return v;
}

inline std::vector<std::vector<std::string>> site_fields_of(std::string_view literal) {
  std::vector<std::vector<std::string>> sites;
  for (const auto& site : split_top(strip(literal, '(', ')'), ';')) sites.push_back(split_top(site, ','));
  return sites;
}
}  // namespace detail

template <class Site>
State<Site> parse_state(std::string_view literal);

template <>
inline State<ScalarSite> parse_state<ScalarSite>(std::string_view literal) {
  State<ScalarSite> s;
  for (const auto& f : detail::site_fields_of(literal)) {
    if (f.size() != 1) throw ParseError("scalar site needs exactly one field");
    s.push_back({Rational::parse(f[0])});
  }
  return s;
}

template <>
inline State<DressingSite> parse_state<DressingSite>(std::string_view literal) {
  State<DressingSite> s;
  for (const auto& f : detail::site_fields_of(literal)) {
    if (f.size() != 2) throw ParseError("dressing site needs two fields f,beta");
    s.push_back({Rational::parse(f[0]), Rational::parse(f[1])});
  }
  return s;
}

template <>
inline State<KdvSite> parse_state<KdvSite>(std::string_view literal) {
  State<KdvSite> s;
  for (const auto& f : detail::site_fields_of(literal)) {
    if (f.size() != 3) throw ParseError("kdv site needs three fields [xi],[eta],lambda");
    KdvSite site{detail::parse_vector(f[0]), detail::parse_vector(f[1]), Rational::parse(f[2])};
    validate(site);
    if (!s.empty() && s.front().dim() != site.dim()) throw ParseError("kdv sites of different dimension");
    s.push_back(std::move(site));
  }
  return s;
}

inline std::string format_site(const ScalarSite& s) { return s.value.str(); }
inline std::string format_site(const DressingSite& s) { return s.f.str() + "," + s.beta.str(); }
inline std::string format_site(const KdvSite& s) {
  auto vec = [](const std::vector<Rational>& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].str();
    return out + "]";
  };
  return vec(s.xi) + "," + vec(s.eta) + "," + s.lambda.str();
}

template <class Site>
std::string format_state(const State<Site>& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ";" : "") + format_site(s[k]);
  return out + ")";
}

}  // namespace ybmaps::io

#endif
