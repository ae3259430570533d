// Command-line surface: predict, verify, galois, and diagram modes over the
// trinomial families Y^nm - X^g Y^pm + X^r, with JSON reports, SVG diagrams,
// and a JSON-lines trace cache.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "braidnomial/galois.hpp"
#include "braidnomial/path.hpp"
#include "braidnomial/predictor.hpp"
#include "braidnomial/report.hpp"
#include "braidnomial/svg.hpp"
#include "braidnomial/tracker.hpp"

using namespace braidnomial;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumericFailure = 3;
constexpr int kExitMismatch = 4;

struct RunConfig {
  std::string mode;
  std::vector<long> equation;
  std::string loop = "all";
  int terms = 60;
  double delta = -1.0;  // default 1e-3 * R^{1/N}
  double tol = 1e-10;
  double direction = 1.0 / 137.0;
  bool tracker_only = false;
  std::string report_path, svg_path, cache_dir, word_letters;
};

struct NamedLoop {
  std::string name;
  LoopSpec spec;
};

std::vector<NamedLoop> parse_loops(const std::string& sel, const TrinomialEquation& eq,
                                   bool* composite) {
  *composite = false;
  auto one = [&](const std::string& s) -> NamedLoop {
    if (s == "zero") return {"zero", {LoopKind::AroundZero, 0}};
    if (s == "sigma") return {"sigma", {LoopKind::AroundSigma, 0}};
    if (s == "infinity") return {"infinity", {LoopKind::AroundInfinity, 0}};
    if (s.rfind("omega:", 0) == 0) {
      long ell = std::stol(s.substr(6));
      if (ell < 0 || ell >= eq.N) throw OutOfRange("omega index out of [0, N-1]");
      return {s, {LoopKind::AroundOmega, ell}};
    }
    throw BadInput("unknown loop selector: " + s);
  };
  std::vector<NamedLoop> loops;
  if (sel == "all") {
    loops.push_back(one("zero"));
    loops.push_back(one("sigma"));
    loops.push_back(one("infinity"));
    for (long ell = 0; ell < eq.N; ++ell) loops.push_back(one("omega:" + std::to_string(ell)));
    return loops;
  }
  if (sel.rfind("composite:", 0) == 0) {
    *composite = true;
    std::stringstream ss(sel.substr(10));
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) loops.push_back(one(item));
    if (loops.empty()) throw BadInput("empty composite loop list");
    return loops;
  }
  loops.push_back(one(sel));
  return loops;
}

PathSpec path_of(const TrinomialEquation& eq, const LoopSpec& loop, double delta) {
  switch (loop.kind) {
    case LoopKind::AroundZero: return loop_zero(eq);
    case LoopKind::AroundSigma: return loop_sigma(eq);
    case LoopKind::AroundInfinity: return loop_infinity(eq);
    default: return loop_omega(eq, loop.ell, delta);
  }
}

PathSpec concat_paths(const std::vector<PathSpec>& parts) {
  PathSpec out;
  for (const auto& p : parts)
    out.pieces.insert(out.pieces.end(), p.pieces.begin(), p.pieces.end());
  return out;
}

std::vector<std::string> sheet_labels(const TrinomialEquation& eq) {
  std::vector<std::string> labels;
  for (long t = 0; t < eq.n; ++t)
    for (long j = 0; j < eq.m; ++j)
      labels.push_back(eq.m == 1 ? "Y_" + std::to_string(t)
                                 : "Y_" + std::to_string(t) + "^(" + std::to_string(j) + ")");
  return labels;
}

/// Strand labels by initial slot along the projection axis, so diagram columns
/// read off the actual starting order of the labeled roots.
std::vector<std::string> slot_labels(const TrinomialEquation& eq, const BaseLabeling& base,
                                     double direction) {
  auto names = sheet_labels(eq);
  std::vector<long> ord(eq.n_total);
  std::iota(ord.begin(), ord.end(), 0);
  Complex axis = std::polar(1.0, -2.0 * kPi * direction);
  std::sort(ord.begin(), ord.end(), [&](long a, long b) {
    return std::real(base.roots[a] * axis) < std::real(base.roots[b] * axis);
  });
  std::vector<std::string> out;
  for (long i : ord) out.push_back(names[i]);
  return out;
}

struct Session {
  RunConfig cfg;
  TrinomialEquation eq;
  TrackerControls controls;
  ProjectionSetup setup;
  WarningSet warnings;
  std::optional<BaseLabeling> base;

  double delta() const { return cfg.delta > 0 ? cfg.delta : 1e-3 * eq.sigma_radius(); }

  const BaseLabeling& labeling() {
    if (!base) {
      base = label_base_roots(eq, controls);
      if (base->q_degenerate) warnings.add("q_series_degenerate");
      if (base->labels_ambiguous) warnings.add("label_ambiguity");
    }
    return *base;
  }

  TracedPath traced_loop(const PathSpec& path) {
    const auto& b = labeling();
    if (!cfg.cache_dir.empty()) {
      std::filesystem::create_directories(cfg.cache_dir);
      std::string file = cfg.cache_dir + "/" + trace_cache_key(eq, path, controls) + ".jsonl";
      TracedPath cached;
      if (load_trace(file, &cached)) return cached;
      TracedPath fresh = trace(eq, path, b.roots, controls);
      save_trace(file, fresh);
      return fresh;
    }
    return trace(eq, path, b.roots, controls);
  }

  ExtractedBraid empirical(const PathSpec& path) {
    auto t = traced_loop(path);
    return extract_braid(eq, t, setup, controls);
  }
};

OrderedJson prediction_json(const TrinomialEquation& eq, const MonodromyPrediction& pred) {
  OrderedJson j;
  j["twists"] = twists_json(pred.twists);
  OrderedJson coincidences = OrderedJson::array();
  for (const auto& c : pred.coincidences)
    coincidences.push_back({{"ell", c[0]}, {"t", c[1]}, {"t_prime", c[2]}});
  j["coincidences"] = std::move(coincidences);
  j["artin"] = word_json(pred.artin);
  j["permutation"] = pred.permutation;
  (void)eq;
  return j;
}

OrderedJson empirical_json(const ExtractedBraid& obs) {
  OrderedJson j;
  j["artin"] = word_json(obs.word);
  j["permutation"] = obs.endpoint_perm;
  return j;
}

int finish(const RunConfig& cfg, const OrderedJson& report, int code) {
  std::string text = report.dump(2);
  text += "\n";
  if (cfg.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.report_path, std::ios::trunc);
    if (!out) {
      std::cerr << "cannot write report to " << cfg.report_path << "\n";
      return kExitInvalidInput;
    }
    out << text;
  }
  return code;
}

int run(const RunConfig& cfg) {
  OrderedJson report;
  report["schema"] = kReportSchema;
  report["mode"] = cfg.mode;

  // an explicit word renders directly; no equation work is needed
  if (cfg.mode == "diagram" && !cfg.word_letters.empty()) {
    if (cfg.svg_path.empty()) throw BadInput("diagram mode requires --svg PATH");
    std::stringstream ss(cfg.word_letters);
    std::string item;
    std::vector<int> letters;
    int max_abs = 0;
    while (std::getline(ss, item, ','))
      if (!item.empty()) {
        letters.push_back(std::stoi(item));
        max_abs = std::max(max_abs, std::abs(letters.back()));
      }
    BraidWord word(std::max(2, max_abs + 1), letters);
    save_svg(cfg.svg_path, braid_svg(word));
    report["diagram"] = {{"svg", cfg.svg_path}, {"crossings", word.letters.size()}};
    report["warnings"] = OrderedJson::array();
    return finish(cfg, report, kExitOk);
  }

  Session ses;
  ses.cfg = cfg;
  ses.controls.series_terms = cfg.terms;
  ses.controls.residual_tol = cfg.tol;
  ses.setup.direction = cfg.direction;

  ses.eq = build_equation(cfg.equation[0], cfg.equation[1], cfg.equation[2], cfg.equation[3],
                          cfg.tracker_only ? GcdMode::Warn : GcdMode::Reject);
  report["equation"] = equation_json(ses.eq);
  if (!ses.eq.gcd_ok) ses.warnings.add("gcd_condition_violated");

  bool composite = false;
  auto loops = parse_loops(cfg.loop, ses.eq, &composite);
  bool predictable = ses.eq.gcd_ok && !cfg.tracker_only;
  bool mismatch = false;

  if (cfg.mode == "diagram") {
    if (cfg.svg_path.empty()) throw BadInput("diagram mode requires --svg PATH");
    std::vector<PathSpec> parts;
    for (const auto& nl : loops) parts.push_back(path_of(ses.eq, nl.spec, ses.delta()));
    BraidWord word = ses.empirical(concat_paths(parts)).word;
    auto labels = slot_labels(ses.eq, ses.labeling(), cfg.direction);
    save_svg(cfg.svg_path, braid_svg(word, labels));
    report["diagram"] = {{"svg", cfg.svg_path}, {"crossings", word.letters.size()}};
    report["warnings"] = ses.warnings.to_json();
    return finish(cfg, report, kExitOk);
  }

  if (cfg.mode == "galois") {
    std::vector<Permutation> gens;
    gens.push_back(inverse(ses.empirical(loop_zero(ses.eq)).endpoint_perm));
    for (long ell = 0; ell < ses.eq.N; ++ell)
      gens.push_back(inverse(ses.empirical(loop_omega(ses.eq, ell, ses.delta())).endpoint_perm));
    report["galois"] = group_report_json(analyze_monodromy_group(ses.eq, gens));
    if (predictable) {
      std::vector<Permutation> pgens;
      pgens.push_back(predict(ses.eq, {LoopKind::AroundZero, 0}, ses.setup, ses.controls)
                          .permutation);
      for (long ell = 0; ell < ses.eq.N; ++ell)
        pgens.push_back(inverse(
            predict(ses.eq, {LoopKind::AroundOmega, ell}, ses.setup, ses.controls).permutation));
      pgens.front() = inverse(pgens.front());
      auto predicted = analyze_monodromy_group(ses.eq, pgens);
      report["galois_predicted"] = group_report_json(predicted);
      bool agree = predicted.order == StabilizerChain(ses.eq.n_total, gens).order();
      report["galois_agreement"] = agree;
      mismatch = mismatch || !agree;
    }
    report["warnings"] = ses.warnings.to_json();
    return finish(cfg, report, mismatch ? kExitMismatch : kExitOk);
  }

  if (composite) {
    OrderedJson j;
    std::vector<std::string> names;
    for (const auto& nl : loops) names.push_back(nl.name);
    j["loops"] = names;
    std::vector<LoopSpec> specs;
    for (const auto& nl : loops) specs.push_back(nl.spec);
    std::optional<BraidWord> pred;
    if (predictable) {
      pred = predicted_artin(ses.eq, specs, ses.setup, ses.controls);
      j["prediction"] = word_json(*pred);
    }
    if (cfg.mode == "verify") {
      std::vector<PathSpec> parts;
      for (const auto& nl : loops) parts.push_back(path_of(ses.eq, nl.spec, ses.delta()));
      auto obs = ses.empirical(concat_paths(parts));
      j["empirical"] = empirical_json(obs);
      if (pred) {
        bool perm_ok = pred->permutation() == obs.word.permutation();
        Verdict wv = compare_words(*pred, obs.word);
        j["comparison"] = {{"permutation", perm_ok ? "match" : "mismatch"},
                           {"word", verdict_name(wv)}};
        mismatch = mismatch || !perm_ok || wv == Verdict::Mismatch;
      }
    }
    report["composite"] = std::move(j);
    report["warnings"] = ses.warnings.to_json();
    return finish(cfg, report, mismatch ? kExitMismatch : kExitOk);
  }

  OrderedJson loops_json = OrderedJson::array();
  for (const auto& nl : loops) {
    OrderedJson j;
    j["loop"] = nl.name;
    std::optional<MonodromyPrediction> pred;
    if (predictable) {
      pred = predict(ses.eq, nl.spec, ses.setup, ses.controls);
      j["prediction"] = prediction_json(ses.eq, *pred);
    }
    if (cfg.mode == "verify") {
      auto obs = ses.empirical(path_of(ses.eq, nl.spec, ses.delta()));
      j["empirical"] = empirical_json(obs);
      if (nl.spec.kind == LoopKind::AroundOmega) {
        auto pair = collision_pair_at(ses.eq, nl.spec.ell, ses.delta(), ses.controls);
        j["collision_pair"] = {pair.first, pair.second};
      }
      if (pred) {
        bool perm_ok = pred->permutation == obs.endpoint_perm;
        Verdict wv = compare_words(pred->artin, obs.word);
        j["comparison"] = {{"permutation", perm_ok ? "match" : "mismatch"},
                           {"word", verdict_name(wv)}};
        mismatch = mismatch || !perm_ok || wv == Verdict::Mismatch;
      }
    }
    loops_json.push_back(std::move(j));
  }
  report["loops"] = std::move(loops_json);
  report["warnings"] = ses.warnings.to_json();
  return finish(cfg, report, mismatch ? kExitMismatch : kExitOk);
}

int error_report(const RunConfig& cfg, const char* name, const char* what, int code) {
  OrderedJson report;
  report["schema"] = kReportSchema;
  report["mode"] = cfg.mode;
  report["error"] = {{"name", name}, {"message", what}};
  return finish(cfg, report, code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact braid monodromy of trinomial plane curves, verified numerically"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--equation", cfg.equation, "n_total,p_total,g,r")
        ->required()
        ->delimiter(',')
        ->expected(4);
    sub->add_option("--loop", cfg.loop,
                    "zero|sigma|infinity|omega:<l>|all|composite:<list>");
    sub->add_option("--terms", cfg.terms, "series terms K");
    sub->add_option("--delta", cfg.delta, "probe circle radius (default 1e-3 R^{1/N})");
    sub->add_option("--tol", cfg.tol, "relative residual tolerance");
    sub->add_option("--direction", cfg.direction, "projection axis angle in turns");
    sub->add_flag("--tracker-only", cfg.tracker_only,
                  "skip predictions; allow gcd-violating equations with a warning");
    sub->add_option("--report", cfg.report_path, "write the JSON report here");
    sub->add_option("--svg", cfg.svg_path, "write an SVG braid diagram here");
    sub->add_option("--cache", cfg.cache_dir, "trace cache directory");
  };
  for (const char* mode : {"predict", "verify", "galois", "diagram"}) {
    auto* sub = app.add_subcommand(mode);
    add_common(sub);
    if (std::string(mode) == "diagram")
      sub->add_option("--word", cfg.word_letters, "explicit letters, e.g. 1,-2");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }
  cfg.mode = app.get_subcommands().front()->get_name();

  try {
    return run(cfg);
  } catch (const NonConvexNewton& e) {
    return error_report(cfg, e.name(), e.what(), kExitInvalidInput);
  } catch (const BadMiddleGcd& e) {
    return error_report(cfg, e.name(), e.what(), kExitInvalidInput);
  } catch (const QTooSmall& e) {
    return error_report(cfg, e.name(), e.what(), kExitInvalidInput);
  } catch (const GcdConditionViolated& e) {
    return error_report(cfg, e.name(), e.what(), kExitInvalidInput);
  } catch (const BadInput& e) {
    return error_report(cfg, e.name(), e.what(), kExitInvalidInput);
  } catch (const OutOfRange& e) {
    return error_report(cfg, e.name(), e.what(), kExitInvalidInput);
  } catch (const Error& e) {
    return error_report(cfg, e.name(), e.what(), kExitNumericFailure);
  } catch (const std::exception& e) {
    return error_report(cfg, "Unexpected", e.what(), kExitNumericFailure);
  }
}
