// Text formats and JSON serialization.
//
// Ideal files:   '#' starts a comment, blank lines ignored; the first
//                significant line is "n=<int>", each following line one
//                generator like "x1^2*x3". No generator lines = zero ideal.
// Form files:    "n=<int>", then one "<integer coefficient> <monomial>" per
//                line; terms with equal monomials are summed.
// JSON:          all mathematical integers serialize as decimal strings so
//                readers never overflow; key order is fixed (ordered_json).
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "verolef/int_polynomial.hpp"
#include "verolef/lefschetz.hpp"
#include "verolef/monomial_ideal.hpp"
#include "verolef/simplicial_complex.hpp"
#include "verolef/veronese.hpp"

namespace verolef {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace io_detail {

inline std::string strip(const std::string& raw) {
  std::string s = raw;
  const auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline long parse_long(const std::string& s, int line, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + s + "'", line);
  }
}

}  // namespace io_detail

// "x1^2*x3" (or "1" for the unit) in n variables.
inline Monomial parse_monomial(const std::string& token, int n, int line = 0) {
  if (token == "1") return Monomial::unit(n);
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::stringstream ss(token);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor.empty() || factor[0] != 'x')
      throw ParseError("bad factor '" + factor + "' in '" + token + "'", line);
    const auto caret = factor.find('^');
    const std::string var = factor.substr(1, caret == std::string::npos
                                                 ? std::string::npos
                                                 : caret - 1);
    const long i = io_detail::parse_long(var, line, "variable index");
    if (i < 1 || i > n)
      throw ParseError("variable index " + std::to_string(i) + " out of 1.." +
                           std::to_string(n),
                       line);
    long exp = 1;
    if (caret != std::string::npos)
      exp = io_detail::parse_long(factor.substr(caret + 1), line, "exponent");
    if (exp < 1) throw ParseError("exponent must be positive in '" + token + "'", line);
    e[static_cast<std::size_t>(i - 1)] += static_cast<int>(exp);
  }
  return Monomial(std::move(e));
}

inline MonomialIdeal parse_ideal_text(const std::string& text) {
  std::stringstream in(text);
  std::string raw;
  int lineno = 0;
  int n = -1;
  std::vector<Monomial> gens;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = io_detail::strip(raw);
    if (line.empty()) continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0)
        throw ParseError("expected 'n=<int>' header, got '" + line + "'", lineno);
      const long v = io_detail::parse_long(line.substr(2), lineno, "variable count");
      if (v < 1 || v > 30)
        throw ParseError("variable count out of range 1..30", lineno);
      n = static_cast<int>(v);
      continue;
    }
    gens.push_back(parse_monomial(line, n, lineno));
  }
  if (n < 0) throw ParseError("missing 'n=<int>' header", lineno);
  return MonomialIdeal(n, std::move(gens));
}

inline MonomialIdeal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str());
}

inline std::string format_ideal(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "n=" << I.vars() << "\n";
  for (const Monomial& g : I.generators()) os << g.str() << "\n";
  return os.str();
}

inline Form parse_form_text(const std::string& text) {
  std::stringstream in(text);
  std::string raw;
  int lineno = 0;
  int n = -1;
  Form w;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = io_detail::strip(raw);
    if (line.empty()) continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0)
        throw ParseError("expected 'n=<int>' header, got '" + line + "'", lineno);
      n = static_cast<int>(io_detail::parse_long(line.substr(2), lineno,
                                                 "variable count"));
      if (n < 1 || n > 30) throw ParseError("variable count out of range 1..30", lineno);
      continue;
    }
    const auto space = line.find_first_of(" \t");
    if (space == std::string::npos)
      throw ParseError("expected '<coeff> <monomial>', got '" + line + "'", lineno);
    Integer coeff;
    try {
      coeff = integer_from_decimal(line.substr(0, space));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad coefficient in '" + line + "'", lineno);
    }
    const std::string tok = io_detail::strip(line.substr(space));
    const Monomial m = parse_monomial(tok, n, lineno);
    bool merged = false;
    for (auto& [mm, cc] : w)
      if (mm == m) {
        cc += coeff;
        merged = true;
        break;
      }
    if (!merged && coeff != 0) w.emplace_back(m, coeff);
  }
  if (n < 0) throw ParseError("missing 'n=<int>' header", lineno);
  std::erase_if(w, [](const auto& term) { return term.second == 0; });
  return w;
}

inline Form parse_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open form file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_form_text(buf.str());
}

// ---------------------------------------------------------------------------
// JSON writers.

inline Json poly_to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const Integer& c : p.coefficients()) a.push_back(to_decimal(c));
  return a;
}

inline Json ideal_to_json(const MonomialIdeal& I) {
  Json j;
  j["n"] = I.vars();
  Json gens = Json::array();
  for (const Monomial& g : I.generators()) gens.push_back(g.str());
  j["generators"] = gens;
  return j;
}

inline Json complex_to_json(const SimplicialComplex& C) {
  Json j;
  Json verts = Json::array();
  for (const Monomial& m : C.vertices()) verts.push_back(m.str());
  j["vertices"] = verts;
  Json facets = Json::array();
  for (const auto& f : C.facets()) facets.push_back(f);
  j["facets"] = facets;
  j["f_polynomial"] = poly_to_json(f_polynomial(C));
  return j;
}

inline Json step_to_json(const DegreeStep& st) {
  Json j;
  j["i"] = st.i;
  j["dim_from"] = st.dim_from;
  j["dim_to"] = st.dim_to;
  j["rank"] = st.rank;
  j["verdict"] = verdict_name(st.verdict);
  return j;
}

inline Json lefschetz_report_to_json(const LefschetzReport& rep) {
  Json j;
  j["property"] = property_name(rep.property);
  if (rep.property == LefschetzProperty::k_lefschetz ||
      rep.property == LefschetzProperty::almost_strong)
    j["k"] = rep.k;
  j["holds"] = rep.holds;
  if (rep.gap) j["gap"] = *rep.gap;
  else j["gap"] = nullptr;
  Json steps = Json::array();
  for (const DegreeStep& st : rep.per_degree) steps.push_back(step_to_json(st));
  j["per_degree"] = steps;
  j["witness"] = rep.witness;
  return j;
}

inline Json certificate_to_json(const RankDropCertificate& c) {
  Json j;
  j["r"] = c.r;
  j["annihilation"] = c.annihilation;
  j["dim_v"] = to_decimal(c.dim_v);
  j["dim_w"] = to_decimal(c.dim_w);
  j["dims_match"] = c.dims_match;
  j["strict_drop"] = c.strict_drop;
  j["holds"] = c.holds;
  return j;
}

inline Json instance_report_to_json(const InstanceReport& rep) {
  Json j;
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["h"] = poly_to_json(rep.h);
  j["h_transformed"] = poly_to_json(rep.hr);
  Json checks = Json::array();
  for (const InstanceCheck& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["applicable"] = c.applicable;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["pass"] = rep.pass;
  return j;
}

inline Json ci_sweep_report_to_json(const CiSweepReport& rep) {
  Json j;
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["top"] = rep.top;
  j["pairs_checked"] = rep.pairs_checked;
  j["modular_certified"] = rep.modular_certified;
  j["exact_fallbacks"] = rep.exact_fallbacks;
  j["failures"] = rep.failures;
  j["pass"] = rep.pass;
  return j;
}

inline Json selection_to_json(const GapCaseSelection& sel, int r) {
  Json j;
  j["d"] = sel.d;
  j["deg_h"] = sel.deg_h;
  Json cases = Json::array();
  for (const GapCase& c : sel.cases) {
    Json cj;
    cj["id"] = c.id;
    cj["r_bound"] = c.r_bound.get_str();  // "num/den" or "num"
    Json gaps = Json::array();
    for (int g : predicted_gaps(c, sel.d, r)) gaps.push_back(g);
    cj["predicted_gaps"] = gaps;
    cj["bound_met"] = Rational(r) >= c.r_bound;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  j["min_bound"] = sel.min_bound.get_str();
  return j;
}

}  // namespace verolef
