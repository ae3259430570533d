#ifndef BRAIDNOMIAL_REPORT_HPP
#define BRAIDNOMIAL_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidnomial/braid.hpp"
#include "braidnomial/equation.hpp"
#include "braidnomial/galois.hpp"
#include "braidnomial/path.hpp"
#include "braidnomial/tracker.hpp"
#include "braidnomial/twist.hpp"

namespace braidnomial {

using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "braidnomial-report/1";
inline constexpr const char* kTraceSchema = "braidnomial-trace/1";

/// Collects warning flags raised anywhere in a run; each distinct flag is
/// kept once, in first-raised order, so it appears in the report exactly once.
class WarningSet {
 public:
  void add(const std::string& flag) {
    if (std::find(flags_.begin(), flags_.end(), flag) == flags_.end()) flags_.push_back(flag);
  }
  const std::vector<std::string>& flags() const { return flags_; }
  OrderedJson to_json() const { return OrderedJson(flags_); }

 private:
  std::vector<std::string> flags_;
};

enum class Verdict { Match, MatchUpToConjugation, Mismatch };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::MatchUpToConjugation: return "match_up_to_conjugation";
    default: return "mismatch";
  }
}

/// Word comparison ladder: equal invariants, else equal conjugation
/// invariants, else mismatch.
inline Verdict compare_words(const BraidWord& a, const BraidWord& b) {
  if (same_element(a, b) == SameElement::EqualByInvariants) return Verdict::Match;
  if (conjugation_invariants(a) == conjugation_invariants(b))
    return Verdict::MatchUpToConjugation;
  return Verdict::Mismatch;
}

namespace report_detail {

/// Shortest exact decimal form of a double (round-trips bit-exactly), so the
/// serialized report is byte-identical across runs.
inline std::string exact_double(double x) {
  for (int prec = 1; prec <= 17; ++prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::stod(buf) == x) return buf;
  }
  return "0";
}

}  // namespace report_detail

inline OrderedJson complex_json(Complex z) {
  return OrderedJson::array({z.real(), z.imag()});
}

inline OrderedJson equation_json(const TrinomialEquation& eq) {
  OrderedJson j;
  j["n_total"] = eq.n_total;
  j["p_total"] = eq.p_total;
  j["g"] = eq.g;
  j["r"] = eq.r;
  j["m"] = eq.m;
  j["n"] = eq.n;
  j["p"] = eq.p;
  j["q"] = eq.q;
  j["N"] = eq.N;
  j["R"] = to_string(eq.R);
  j["gcd_conditions_hold"] = eq.gcd_ok;
  return j;
}

inline OrderedJson word_json(const BraidWord& w) {
  OrderedJson j;
  j["strand_count"] = w.strand_count;
  j["letters"] = w.letters;
  j["exponent_sum"] = w.exponent_sum();
  j["permutation"] = w.permutation();
  return j;
}

inline OrderedJson twists_json(const TwistSequence& seq) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& t : seq.twists) {
    OrderedJson j;
    j["alpha"] = to_string(t.alpha);
    j["center"] = complex_json(t.center);
    j["members"] = t.members;
    j["concurrent"] = t.concurrent;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline OrderedJson group_report_json(const PermGroupReport& rep) {
  OrderedJson j;
  j["degree"] = rep.degree;
  j["generator_count"] = rep.generator_count;
  j["order"] = rep.order.str();
  j["transitive"] = rep.transitive;
  j["block_systems"] = rep.block_systems;
  j["is_symmetric"] = rep.is_symmetric;
  j["respects_m_blocks"] = rep.respects_m_blocks;
  j["block_action_order"] = rep.block_action_order.str();
  j["blocks_act_as_full_symmetric"] = rep.blocks_act_as_full_symmetric;
  j["order_matches_reduced_wreath"] = rep.order_matches_reduced_wreath;
  j["order_matches_wreath"] = rep.order_matches_wreath;
  return j;
}

/// Canonical serialization of everything a trace depends on; its hash keys
/// the cache entry.
inline std::string trace_cache_key(const TrinomialEquation& eq, const PathSpec& path,
                                   const TrackerControls& c) {
  std::ostringstream os;
  auto d = [&](double x) { os << report_detail::exact_double(x) << ";"; };
  os << eq.n_total << "," << eq.p_total << "," << eq.g << "," << eq.r << "|";
  for (const auto& p : path.pieces) {
    os << (p.kind == PathPiece::Kind::Segment ? "S" : "A");
    d(p.a.real());
    d(p.a.imag());
    d(p.b.real());
    d(p.b.imag());
    d(p.center.real());
    d(p.center.imag());
    d(p.radius);
    d(p.arg0);
    d(p.arg1);
  }
  os << "|";
  d(c.residual_tol);
  os << c.newton_max << ";";
  d(c.step_guard);
  d(c.initial_step);
  d(c.min_step);
  os << c.series_terms;
  std::string s = os.str();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Writes a traced path as versioned JSON-lines: a header line, then one
/// record per sample {"i": index, "X": [re, im], "roots": [[re, im], ...]}.
inline void save_trace(const std::string& file, const TracedPath& traced) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw BadInput("cannot open trace cache file for writing: " + file);
  OrderedJson head;
  head["schema"] = kTraceSchema;
  head["samples"] = traced.xs.size();
  out << head.dump() << "\n";
  for (size_t i = 0; i < traced.xs.size(); ++i) {
    OrderedJson rec;
    rec["i"] = i;
    rec["X"] = complex_json(traced.xs[i]);
    OrderedJson roots = OrderedJson::array();
    for (auto y : traced.roots[i]) roots.push_back(complex_json(y));
    rec["roots"] = std::move(roots);
    out << rec.dump() << "\n";
  }
}

/// Reads a trace written by save_trace; returns false when the file is
/// missing or has a different schema version.
inline bool load_trace(const std::string& file, TracedPath* traced) {
  std::ifstream in(file);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line)) return false;
  auto head = OrderedJson::parse(line, nullptr, false);
  if (head.is_discarded() || head.value("schema", "") != kTraceSchema) return false;
  TracedPath out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = OrderedJson::parse(line, nullptr, false);
    if (rec.is_discarded()) return false;
    out.xs.emplace_back(rec["X"][0].get<double>(), rec["X"][1].get<double>());
    std::vector<Complex> roots;
    for (const auto& y : rec["roots"]) roots.emplace_back(y[0].get<double>(), y[1].get<double>());
    out.roots.push_back(std::move(roots));
  }
  if (out.xs.empty() || out.xs.size() != head.value("samples", size_t(0))) return false;
  *traced = std::move(out);
  return true;
}

}  // namespace braidnomial

#endif
