// Command-line front end. Every subcommand has a --json mode that wraps its
// result in a fixed envelope; exit status is 0 when the computed/verified
// property holds, 1 when it does not, 2 on usage or input errors.
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verolef/ideal_io.hpp"
#include "verolef/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitMisuse = 2;

using namespace verolef;

Json envelope(const std::string& command, Json config, Json result, bool pass) {
  Json j;
  j["schema"] = 1;
  j["tool"] = "verolef";
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  j["pass"] = pass;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Same recipe as generic_max_rank: dense support on the degree-r standard
// monomials, integer coefficients in [-bound, bound], zeros dropped.
Form seeded_random_form(const VeroneseQuotient& V, std::uint64_t seed, long bound) {
  const auto candidates = V.basis(1);
  Rng rng(seed);
  Form w;
  for (const Monomial& m : *candidates) {
    const long c = rng.between(-bound, bound);
    if (c != 0) w.emplace_back(m, Integer(c));
  }
  return w;
}

struct CommonArgs {
  std::string ideal_path;
  int r = 1;
  bool json = false;
};

void add_ideal_option(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--ideal", args.ideal_path, "ideal file (n=<int> header, one generator per line)")
      ->required()
      ->check(CLI::ExistingFile);
}

void add_r_option(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("-r,--r", args.r, "Veronese exponent r >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
}

int run_hilbert(const CommonArgs& args) {
  const MonomialIdeal I = parse_ideal_file(args.ideal_path);
  const int d = ideal_dimension(I);
  const bool cm = is_cm_stable(I);  // throws if not stable
  if (!cm) {
    std::cerr << "error: ideal is stable but not CM (top generator misses x"
              << I.vars() << ")\n";
    return kExitMisuse;
  }
  const IntPolynomial h = h_polynomial_stable(I);
  if (args.json) {
    Json result;
    result["ideal"] = ideal_to_json(I);
    result["d"] = d;
    result["h"] = poly_to_json(h);
    result["deg_h"] = h.degree();
    Json config;
    config["ideal"] = args.ideal_path;
    emit(envelope("hilbert", config, result, true));
  } else {
    std::cout << "n = " << I.vars() << ", d = " << d << "\n"
              << "h = " << h.str() << "   (deg h = " << h.degree() << ")\n";
  }
  return kExitPass;
}

int run_veronese_transform(const CommonArgs& args, const std::string& h_csv, int d_opt) {
  IntPolynomial h;
  int d = 0;
  Json config;
  if (!args.ideal_path.empty()) {
    const MonomialIdeal I = parse_ideal_file(args.ideal_path);
    const VeroneseQuotient V(I, args.r);
    h = V.base_h();
    d = V.dimension();
    config["ideal"] = args.ideal_path;
  } else {
    std::vector<Integer> coeffs;
    std::stringstream ss(h_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(integer_from_decimal(tok));
    h = IntPolynomial(std::move(coeffs));
    d = d_opt;
    config["coeffs"] = h_csv;
    config["dim"] = d;
  }
  const IntPolynomial hr = veronese_h_transform(h, d, args.r);
  config["r"] = args.r;
  if (args.json) {
    Json result;
    result["h"] = poly_to_json(h);
    result["d"] = d;
    result["h_transformed"] = poly_to_json(hr);
    result["degree"] = hr.degree();
    emit(envelope("veronese transform", config, result, true));
  } else {
    std::cout << "h       = " << h.str() << "\n"
              << "h^<" << args.r << ">  = " << hr.str() << "   (degree "
              << hr.degree() << ")\n";
  }
  return kExitPass;
}

int run_veronese_dims(const CommonArgs& args, int through) {
  const MonomialIdeal I = parse_ideal_file(args.ideal_path);
  const VeroneseQuotient V(I, args.r);
  const IntPolynomial& hr = V.transformed_h();
  const int last = through >= 0 ? through : hr.degree() + 1;
  bool all_match = true;
  Json rows = Json::array();
  for (int i = 0; i <= last; ++i) {
    const long dim = V.graded_dim(i);
    const bool match = Integer(dim) == hr[i];
    all_match = all_match && match;
    if (args.json) {
      Json row;
      row["i"] = i;
      row["dim"] = dim;
      row["h_transformed"] = to_decimal(hr[i]);
      row["match"] = match;
      rows.push_back(row);
    } else {
      std::cout << "piece " << i << ": dim = " << dim << ", coefficient = "
                << hr[i].get_str() << (match ? "" : "   MISMATCH") << "\n";
    }
  }
  if (args.json) {
    Json config;
    config["ideal"] = args.ideal_path;
    config["r"] = args.r;
    config["through"] = last;
    Json result;
    result["pieces"] = rows;
    result["all_match"] = all_match;
    emit(envelope("veronese dims", config, result, all_match));
  } else if (!all_match) {
    std::cout << "dimension/coefficient mismatch\n";
  }
  return all_match ? kExitPass : kExitFail;
}

int run_veronese_degree(const CommonArgs& args) {
  const MonomialIdeal I = parse_ideal_file(args.ideal_path);
  const VeroneseQuotient V(I, args.r);
  const int expected =
      veronese_degree(V.base_h().degree(), V.dimension(), args.r);
  const int actual = V.transformed_h().degree();
  const bool match = expected == actual;
  if (args.json) {
    Json config;
    config["ideal"] = args.ideal_path;
    config["r"] = args.r;
    Json result;
    result["degree"] = actual;
    result["formula"] = expected;
    result["match"] = match;
    emit(envelope("veronese degree", config, result, match));
  } else {
    std::cout << "deg h^<" << args.r << "> = " << actual << " (formula gives "
              << expected << ")\n";
  }
  return match ? kExitPass : kExitFail;
}

struct LefschetzArgs {
  CommonArgs common;
  std::string property = "weak";
  int k = 0;
  std::string form = "auto";
  std::uint64_t seed = 0;
  int trials = 3;
  long coeff_bound = 100;
};

int run_lefschetz(const LefschetzArgs& args) {
  const MonomialIdeal I = parse_ideal_file(args.common.ideal_path);
  const VeroneseQuotient V(I, args.common.r);

  const auto check = [&](const Form& w) {
    if (args.property == "weak") return check_weak(V, w);
    if (args.property == "almost-weak") return check_almost_weak(V, w);
    if (args.property == "almost-strong") return check_almost_strong(V, w);
    return check_k_lefschetz(V, w, args.k);
  };
  if (args.property == "k-lefschetz" && args.k < 1)
    throw CLI::ValidationError("--k", "k-lefschetz needs --k >= 1");

  LefschetzReport rep;
  int trials_used = 1;
  if (args.form == "auto") {
    rep = check(power_linear_form(V));
  } else if (args.form == "generic") {
    // A property that holds for one form holds generically, so stop at the
    // first witness; failure for all trials is reported as failure.
    for (int t = 0; t < args.trials; ++t) {
      trials_used = t + 1;
      rep = check(seeded_random_form(V, args.seed + static_cast<std::uint64_t>(t),
                                     args.coeff_bound));
      if (rep.holds) break;
    }
  } else {
    const Form w = parse_form_file(args.form);
    if (!w.empty() && form_degree(w) != args.common.r)
      throw CLI::ValidationError("--form", "form degree must equal r");
    rep = check(w);
  }

  if (args.common.json) {
    Json config;
    config["ideal"] = args.common.ideal_path;
    config["r"] = args.common.r;
    config["property"] = args.property;
    if (args.property == "k-lefschetz") config["k"] = args.k;
    config["form"] = args.form;
    if (args.form == "generic") {
      config["seed"] = args.seed;
      config["trials"] = args.trials;
      config["trials_used"] = trials_used;
      config["coeff_bound"] = args.coeff_bound;
    }
    emit(envelope("lefschetz", config, lefschetz_report_to_json(rep), rep.holds));
  } else {
    std::cout << property_name(rep.property);
    if (rep.property == LefschetzProperty::k_lefschetz ||
        rep.property == LefschetzProperty::almost_strong)
      std::cout << " (k = " << rep.k << ")";
    std::cout << ": " << (rep.holds ? "holds" : "FAILS") << "\n"
              << "  " << rep.witness << "\n";
    for (const DegreeStep& st : rep.per_degree)
      std::cout << "  step " << st.i << ": " << st.dim_from << " -> " << st.dim_to
                << ", rank " << st.rank << " (" << verdict_name(st.verdict)
                << ")\n";
  }
  return rep.holds ? kExitPass : kExitFail;
}

int run_complex(const CommonArgs& args, bool gamma) {
  const MonomialIdeal I = parse_ideal_file(args.ideal_path);
  const VeroneseQuotient V(I, args.r);
  const SimplicialComplex C = gamma ? build_gamma(V) : build_delta(V);
  const IntPolynomial f = f_polynomial(C);
  const IntPolynomial target =
      gamma ? h_to_g(V.transformed_h()) : V.transformed_h();
  const bool matches = f == target;
  if (args.json) {
    Json config;
    config["ideal"] = args.ideal_path;
    config["r"] = args.r;
    Json result = complex_to_json(C);
    result[gamma ? "g" : "h_transformed"] = poly_to_json(target);
    result["f_matches"] = matches;
    if (!gamma) result["flag"] = is_flag(C);
    emit(envelope(gamma ? "complex gamma" : "complex delta", config, result,
                  matches));
  } else {
    std::cout << (gamma ? "Gamma" : "Delta") << ": " << C.vertices().size()
              << " vertices, f = " << f.str() << "\n"
              << "target " << (gamma ? "g" : "h^<r>") << " = " << target.str()
              << (matches ? " (matches)" : " (DOES NOT MATCH)") << "\n";
    if (!gamma) std::cout << "flag: " << (is_flag(C) ? "yes" : "no") << "\n";
    for (const auto& facet : C.facets()) {
      std::cout << "  facet {";
      for (std::size_t t = 0; t < facet.size(); ++t)
        std::cout << (t ? ", " : " ")
                  << C.vertices()[static_cast<std::size_t>(facet[t])].str();
      std::cout << " }\n";
    }
  }
  return matches ? kExitPass : kExitFail;
}

int run_verify_instance(const CommonArgs& args) {
  const MonomialIdeal I = parse_ideal_file(args.ideal_path);
  const VeroneseQuotient V(I, args.r);
  const InstanceReport rep = verify_instance(V);
  if (args.json) {
    Json config;
    config["ideal"] = args.ideal_path;
    config["r"] = args.r;
    Json result = instance_report_to_json(rep);
    result["case_table"] =
        selection_to_json(gap_case_selection(rep.d, rep.h.degree()), rep.r);
    emit(envelope("verify instance", config, result, rep.pass));
  } else {
    std::cout << "d = " << rep.d << ", r = " << rep.r << ", h = " << rep.h.str()
              << ", h^<r> = " << rep.hr.str() << "\n";
    for (const InstanceCheck& c : rep.checks) {
      std::cout << "  " << (c.pass ? "[ ok ]" : "[FAIL]") << " " << c.name;
      if (!c.applicable) std::cout << " (not applicable)";
      if (!c.detail.empty()) std::cout << " — " << c.detail;
      std::cout << "\n";
    }
    std::cout << (rep.pass ? "all applicable checks pass" : "CHECKS FAILED") << "\n";
  }
  return rep.pass ? kExitPass : kExitFail;
}

struct SuiteArgs {
  std::vector<std::string> names;
  VerifyConfig cfg;
  bool json = false;
};

int run_verify_suites(const SuiteArgs& args) {
  static const std::vector<std::string> known = {
      "rank_drop", "s_lefschetz", "weak_family", "ci_sweep",
      "transform", "delta",       "gamma",       "chain_bijection"};
  std::vector<std::string> wanted = args.names.empty() ? known : args.names;
  for (const std::string& w : wanted)
    if (std::find(known.begin(), known.end(), w) == known.end())
      throw CLI::ValidationError("--suite", "unknown suite '" + w + "'");

  const bool needs_corpus =
      std::find_if(wanted.begin(), wanted.end(), [](const std::string& s) {
        return s == "s_lefschetz" || s == "weak_family" || s == "transform" ||
               s == "delta" || s == "gamma";
      }) != wanted.end();
  std::vector<CorpusEntry> corpus;
  if (needs_corpus) corpus = full_corpus(args.cfg.random_count);

  std::vector<Suite> suites;
  for (const std::string& name : wanted) {
    if (name == "rank_drop") suites.push_back(verify_rank_drop());
    else if (name == "s_lefschetz") suites.push_back(verify_s_lefschetz(corpus, args.cfg.r_max));
    else if (name == "weak_family") suites.push_back(verify_weak_family(corpus, args.cfg.r_max));
    else if (name == "ci_sweep") suites.push_back(verify_ci_sweep(args.cfg.ci_budget));
    else if (name == "transform") suites.push_back(verify_transform(corpus, args.cfg.r_max));
    else if (name == "delta") suites.push_back(verify_delta(corpus, args.cfg.r_max));
    else if (name == "gamma") suites.push_back(verify_gamma(corpus, args.cfg.r_max));
    else suites.push_back(verify_chain_bijection());
  }

  bool all_pass = true;
  for (const Suite& s : suites) all_pass = all_pass && s.pass;

  if (args.json) {
    Json config;
    config["suites"] = wanted;
    config["r_max"] = args.cfg.r_max;
    config["random_count"] = args.cfg.random_count;
    config["ci_budget"] = args.cfg.ci_budget;
    Json result = Json::array();
    for (const Suite& s : suites) {
      Json sj;
      sj["name"] = s.name;
      sj["description"] = s.description;
      sj["checked"] = s.checked;
      sj["pass"] = s.pass;
      Json fails = Json::array();
      for (const CheckLine& line : s.lines) {
        Json lj;
        lj["name"] = line.name;
        lj["pass"] = line.pass;
        lj["detail"] = line.detail;
        fails.push_back(lj);
      }
      sj["failures"] = fails;
      result.push_back(sj);
    }
    emit(envelope("verify suites", config, result, all_pass));
  } else {
    for (const Suite& s : suites) {
      std::cout << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << " ("
                << s.checked << " checks) — " << s.description << "\n";
      for (const CheckLine& line : s.lines)
        if (!line.pass)
          std::cout << "       failed: " << line.name
                    << (line.detail.empty() ? "" : " — " + line.detail) << "\n";
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

int run_corpus(int random_count, bool json) {
  const std::vector<CorpusEntry> corpus = full_corpus(random_count);
  Json rows = Json::array();
  for (const CorpusEntry& e : corpus) {
    const int d = ideal_dimension(e.ideal);
    const IntPolynomial h = h_polynomial_stable(e.ideal);
    if (json) {
      Json row;
      row["name"] = e.name;
      row["ideal"] = ideal_to_json(e.ideal);
      row["d"] = d;
      row["h"] = poly_to_json(h);
      rows.push_back(row);
    } else {
      std::cout << e.name << ": n = " << e.ideal.vars() << ", d = " << d
                << ", h = " << h.str() << "\n";
    }
  }
  if (json) {
    Json config;
    config["random_count"] = random_count;
    Json result;
    result["entries"] = rows;
    result["count"] = corpus.size();
    emit(envelope("corpus", config, result, true));
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Veronese h-polynomial transforms, Lefschetz property decisions, "
               "and standard-monomial simplicial complexes for quotients by "
               "stable monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // hilbert
  CommonArgs hilbert_args;
  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "h-polynomial and Krull dimension of the quotient");
  add_ideal_option(hilbert, hilbert_args);
  hilbert->add_flag("--json", hilbert_args.json, "JSON output");

  // veronese transform|dims|degree
  CLI::App* veronese = app.add_subcommand(
      "veronese", "h-polynomial transform and graded dimensions");
  veronese->require_subcommand(1);
  CommonArgs vt_args;
  std::string vt_h;
  int vt_d = 0;
  CLI::App* vtransform = veronese->add_subcommand(
      "transform", "transformed h-polynomial h^<r>");
  CLI::Option* vt_ideal =
      vtransform->add_option("--ideal", vt_args.ideal_path, "ideal file")
          ->check(CLI::ExistingFile);
  CLI::Option* vt_h_opt =
      vtransform
          ->add_option("--coeffs", vt_h, "h-polynomial coefficients, comma separated")
          ->excludes(vt_ideal);
  vtransform->add_option("--dim", vt_d, "Krull dimension (with --coeffs)")
      ->needs(vt_h_opt)
      ->check(CLI::NonNegativeNumber);
  add_r_option(vtransform, vt_args);
  vtransform->add_flag("--json", vt_args.json, "JSON output");

  CommonArgs vd_args;
  int vd_through = -1;
  CLI::App* vdims = veronese->add_subcommand(
      "dims", "graded dimensions against the transform coefficients");
  add_ideal_option(vdims, vd_args);
  add_r_option(vdims, vd_args);
  vdims->add_option("--through", vd_through, "last piece to tabulate");
  vdims->add_flag("--json", vd_args.json, "JSON output");

  CommonArgs vdeg_args;
  CLI::App* vdegree = veronese->add_subcommand(
      "degree", "degree of the transformed h-polynomial");
  add_ideal_option(vdegree, vdeg_args);
  add_r_option(vdegree, vdeg_args);
  vdegree->add_flag("--json", vdeg_args.json, "JSON output");

  // lefschetz
  LefschetzArgs lef_args;
  CLI::App* lefschetz = app.add_subcommand(
      "lefschetz", "decide a Lefschetz property by exact rank computation");
  add_ideal_option(lefschetz, lef_args.common);
  add_r_option(lefschetz, lef_args.common);
  lefschetz
      ->add_option("--property", lef_args.property,
                   "weak | almost-weak | almost-strong | k-lefschetz")
      ->check(CLI::IsMember(
          {"weak", "almost-weak", "almost-strong", "k-lefschetz"}));
  lefschetz->add_option("--k", lef_args.k, "the k of k-lefschetz");
  lefschetz->add_option(
      "--form", lef_args.form,
      "auto (power of the linear system), generic (seeded random forms), or a form file");
  lefschetz->add_option("--seed", lef_args.seed, "seed for --form generic");
  lefschetz->add_option("--trials", lef_args.trials, "trials for --form generic")
      ->check(CLI::PositiveNumber);
  lefschetz
      ->add_option("--coeff-bound", lef_args.coeff_bound,
                   "coefficient bound for --form generic")
      ->check(CLI::PositiveNumber);
  lefschetz->add_flag("--json", lef_args.common.json, "JSON output");

  // complex delta|gamma
  CLI::App* complex_cmd = app.add_subcommand(
      "complex", "standard-monomial simplicial complexes");
  complex_cmd->require_subcommand(1);
  CommonArgs delta_args;
  CLI::App* delta = complex_cmd->add_subcommand(
      "delta", "squarefree complex whose f-polynomial realizes h^<r>");
  add_ideal_option(delta, delta_args);
  add_r_option(delta, delta_args);
  delta->add_flag("--json", delta_args.json, "JSON output");
  CommonArgs gamma_args;
  CLI::App* gamma = complex_cmd->add_subcommand(
      "gamma", "complex whose f-polynomial realizes g = first half differences");
  add_ideal_option(gamma, gamma_args);
  add_r_option(gamma, gamma_args);
  gamma->add_flag("--json", gamma_args.json, "JSON output");

  // verify instance|suites
  CLI::App* verify = app.add_subcommand("verify", "structural property verification");
  verify->require_subcommand(1);
  CommonArgs vi_args;
  CLI::App* vinstance = verify->add_subcommand(
      "instance", "all applicable property checks for one ideal and r");
  add_ideal_option(vinstance, vi_args);
  add_r_option(vinstance, vi_args);
  vinstance->add_flag("--json", vi_args.json, "JSON output");

  SuiteArgs suite_args;
  CLI::App* vsuites = verify->add_subcommand(
      "suites", "corpus-wide verification suites");
  vsuites->add_option("--suite", suite_args.names,
                      "suite name (repeatable); default: all");
  vsuites->add_option("--rmax", suite_args.cfg.r_max, "largest Veronese exponent")
      ->check(CLI::PositiveNumber);
  vsuites->add_option("--random", suite_args.cfg.random_count,
                      "number of generated corpus entries")
      ->check(CLI::NonNegativeNumber);
  vsuites->add_option("--budget", suite_args.cfg.ci_budget,
                      "power-ideal sweep bound on (r-1)d")
      ->check(CLI::PositiveNumber);
  vsuites->add_flag("--json", suite_args.json, "JSON output");

  // corpus
  int corpus_random = 50;
  bool corpus_json = false;
  CLI::App* corpus_cmd = app.add_subcommand(
      "corpus", "list the built-in and generated test ideals");
  corpus_cmd->add_option("--random", corpus_random, "number of generated entries")
      ->check(CLI::NonNegativeNumber);
  corpus_cmd->add_flag("--json", corpus_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitMisuse;
  }

  try {
    if (hilbert->parsed()) return run_hilbert(hilbert_args);
    if (vtransform->parsed()) {
      if (vt_args.ideal_path.empty() && vt_h.empty())
        throw CLI::ValidationError("transform", "need --ideal or --coeffs/--dim");
      return run_veronese_transform(vt_args, vt_h, vt_d);
    }
    if (vdims->parsed()) return run_veronese_dims(vd_args, vd_through);
    if (vdegree->parsed()) return run_veronese_degree(vdeg_args);
    if (lefschetz->parsed()) return run_lefschetz(lef_args);
    if (delta->parsed()) return run_complex(delta_args, false);
    if (gamma->parsed()) return run_complex(gamma_args, true);
    if (vinstance->parsed()) return run_verify_instance(vi_args);
    if (vsuites->parsed()) return run_verify_suites(suite_args);
    if (corpus_cmd->parsed()) return run_corpus(corpus_random, corpus_json);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMisuse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMisuse;
  }
  return kExitMisuse;
}
