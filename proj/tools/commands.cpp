#include "commands.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "realbezout/components.hpp"
#include "realbezout/deform.hpp"
#include "realbezout/families.hpp"
#include "realbezout/poly_io.hpp"

namespace rbz::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }
BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

Json int_array(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json profile_json(const Profile& p) {
  Json j;
  j["k"] = p.k;
  j["degs"] = p.degs;
  j["dims"] = p.dims;
  return j;
}

Json box_json(const Box& b) {
  Json a = Json::array();
  for (const auto& iv : b) a.push_back(Json::array({to_string(iv.lo()), to_string(iv.hi())}));
  return a;
}

struct Verdicts {
  Json list = Json::array();
  Json failures = Json::array();

  // actual <= bound; actual_exact says whether `actual` is a certified count
  // or only an upper estimate.
  void dominated(const std::string& name, const BigInt& bound, const BigInt& actual, bool actual_exact,
                 const std::string& bound_label) {
    const bool pass = actual <= bound;
    Json v;
    v["name"] = name;
    v["statement"] = "actual " + str(actual) + (actual_exact ? "" : " (upper estimate)") + " <= " + bound_label + " " +
                     str(bound);
    v["bound"] = str(bound);
    v["actual"] = str(actual);
    v["actual_exact"] = actual_exact;
    v["pass"] = pass;
    list.push_back(std::move(v));
    if (!pass) failures.push_back(name);
  }

  // actual == expected, with a certified actual.
  void matches(const std::string& name, const BigInt& expected, const BigInt& actual, bool actual_exact) {
    const bool pass = actual_exact && actual == expected;
    Json v;
    v["name"] = name;
    v["statement"] = "actual " + str(actual) + (actual_exact ? "" : " (uncertified)") + " == expected " + str(expected);
    v["bound"] = str(expected);
    v["actual"] = str(actual);
    v["actual_exact"] = actual_exact;
    v["pass"] = pass;
    list.push_back(std::move(v));
    if (!pass) failures.push_back(name);
  }

  void check(const std::string& name, bool pass, const std::string& statement) {
    Json v;
    v["name"] = name;
    v["statement"] = statement;
    v["pass"] = pass;
    list.push_back(std::move(v));
    if (!pass) failures.push_back(name);
  }
};

Json start(const std::string& command, const GlobalOptions& g) {
  Json r;
  r["command"] = command;
  r["seed"] = g.seed;
  return r;
}

void finish(Json& r, Verdicts& v, Clock::time_point t0) {
  r["verdicts"] = std::move(v.list);
  r["failures"] = std::move(v.failures);
  r["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

Json terms_json(const BoundReport& b, int k) {
  Json a = Json::array();
  for (const auto& t : b.per_tau_terms) {
    Json e;
    e["tau"] = int_array(t.chain);
    e["f"] = str(t.f);
    e["lemma58_card"] = str(lemma58_card(k, t.chain));
    e["term"] = str(t.term);
    a.push_back(std::move(e));
  }
  return a;
}

Json bound_json(const BoundReport& b, int k) {
  Json j;
  j["structural_sum"] = str(b.structural_sum);
  j["constant_base"] = to_string(b.constant_base);
  j["asymptotic_value"] = to_string(b.asymptotic_value);
  j["witness_term"] = str(b.witness_term);
  j["hypothesis_violated"] = b.hypothesis_violated;
  j["degenerate"] = b.degenerate;
  j["terms"] = terms_json(b, k);
  return j;
}

Json count_json(const CountResult& c) {
  Json j;
  j["lower"] = str(c.lower);
  j["upper"] = str(c.upper);
  j["exact"] = c.exact;
  j["depth_used"] = c.depth_used;
  j["budget_hit"] = c.budget_hit;
  j["positive_dimensional"] = c.positive_dimensional;
  j["clusters"] = c.clusters.size();
  return j;
}

CountOptions count_options(const GlobalOptions& g) {
  if (g.depth < 0) throw UsageError("--depth must be non-negative");
  CountOptions o;
  o.max_depth = g.depth;
  return o;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Profile parse_profile(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..."
    throw UsageError(std::string("profile: ") + e.what());
  }
  if (!j.is_object() || j.empty()) throw UsageError("profile: expected a non-empty object with k, degs, dims");
  Profile p;
  try {
    p.k = j.at("k").get<int>();
    p.degs = j.at("degs").get<std::vector<std::int64_t>>();
    p.dims = j.at("dims").get<std::vector<int>>();
  } catch (const Json::exception& e) {
    throw UsageError(std::string("profile: ") + e.what());
  }
  if (p.degs.empty()) throw UsageError("profile: degs must not be empty");
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

Box parse_box(std::string_view text) {
  Box b;
  for (const auto& part : split(text, ',')) {
    const auto ends = split(part, ':');
    if (ends.size() != 2) throw UsageError("box: expected lo:hi, got '" + part + "'");
    try {
      Rational lo = parse_rational(ends[0]), hi = parse_rational(ends[1]);
      if (lo >= hi) throw UsageError("box: need lo < hi in '" + part + "'");
      b.emplace_back(lo, hi);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("box: ") + e.what());
    }
  }
  return b;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(part, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw UsageError("expected an integer list, got '" + std::string(text) + "'");
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

Json cmd_bound(const BoundArgs& args, const GlobalOptions& g) {
  const auto t0 = Clock::now();
  const Profile p = parse_profile(args.profile_text);
  Json r = start("bound", g);
  r["profile"] = profile_json(p);
  Verdicts v;
  switch (args.mode) {
    case BoundMode::kComponents: {
      r["mode"] = "components";
      r["bound"] = bound_json(theorem12_bound(p, g.constant_base), p.k);
      break;
    }
    case BoundMode::kSignConditions: {
      if (args.s < 0 || args.d < 1) throw UsageError("sign-conditions mode needs --s >= 0 and --d >= 1");
      r["mode"] = "sign-conditions";
      const auto t = theorem16_bound(p, args.s, args.d, g.constant_base);
      r["s"] = args.s;
      r["d"] = args.d;
      r["envelope"] = str(t.envelope);
      r["delta"] = bound_json(t.delta, p.k);
      r["structural_total"] = str(t.structural_total);
      r["asymptotic_total"] = to_string(t.asymptotic_total);
      r["degree_hypothesis_violated"] = t.degree_hypothesis_violated;
      break;
    }
    case BoundMode::kSubsets: {
      if (args.family_degs.empty()) throw UsageError("subsets mode needs --family-degs");
      for (auto d : args.family_degs)
        if (d < 1) throw UsageError("--family-degs entries must be positive");
      r["mode"] = "subsets";
      const auto t = theorem18_bound(p, args.family_degs);
      r["family_degs"] = args.family_degs;
      r["degree_product"] = str(t.degree_product);
      r["structural_total"] = str(t.structural_total);
      r["subsets"] = t.subsets;
      constexpr std::size_t kMaxListed = 256;
      const int k_ell = p.dim(p.ell());
      Json listed = Json::array();
      std::vector<std::size_t> chosen;
      std::vector<std::int64_t> degs;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (listed.size() >= kMaxListed) return;
        const auto di = theorem18_dI(p.k, k_ell, degs);
        Json e;
        e["subset"] = chosen;
        e["d_I"] = to_string(di.value);
        listed.push_back(std::move(e));
        if (static_cast<int>(chosen.size()) == k_ell) return;
        for (std::size_t i = from; i < args.family_degs.size(); ++i) {
          chosen.push_back(i);
          degs.push_back(args.family_degs[i]);
          rec(i + 1);
          chosen.pop_back();
          degs.pop_back();
        }
      };
      rec(0);
      r["d_I"] = std::move(listed);
      r["d_I_truncated"] = t.subsets > kMaxListed;
      break;
    }
  }
  finish(r, v, t0);
  return r;
}

Json cmd_verify(const VerifyArgs& args, const GlobalOptions& g) {
  const auto t0 = Clock::now();
  FamilyInstance f;
  Json a;
  a["example"] = args.example;
  try {
    if (args.example == 11) {
      if (args.d < 1) throw UsageError("example 11 needs --d >= 1");
      a["d"] = args.d;
      f = gen_example11(args.d);
    } else if (args.example == 15) {
      std::vector<int> dims(args.dims.begin(), args.dims.end());
      a["k"] = args.k;
      a["dims"] = args.dims;
      a["degs"] = args.degs;
      f = gen_example15(args.k, dims, args.degs);
    } else {
      throw UsageError("--example must be 11 or 15");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto opts = count_options(g);

  Json r = start("verify", g);
  r["arguments"] = a;
  r["instance"] = f.provenance;
  r["profile"] = profile_json(f.profile);
  r["search_box"] = box_json(f.search_box);
  r["expected_count"] = str(f.exact_count);
  r["system"] = format_system(f.system);
  constexpr std::size_t kMaxReportedZeros = 64;
  Json zeros = Json::array();
  for (std::size_t i = 0; i < f.zero_points.size() && i < kMaxReportedZeros; ++i) {
    Json z = Json::array();
    for (const auto& x : f.zero_points[i]) z.push_back(to_string(x));
    zeros.push_back(std::move(z));
  }
  r["zero_points"] = std::move(zeros);
  r["zero_points_truncated"] = f.zero_points.size() > kMaxReportedZeros || f.zero_points.size() < f.exact_count;
  const CountResult c = count_components(f.system, f.search_box, opts);
  r["count"] = count_json(c);
  const BoundReport b = theorem12_bound(f.profile, g.constant_base);
  r["bound"] = bound_json(b, f.profile.k);

  Verdicts v;
  v.matches("count_matches_family", f.exact_count, big(c.upper), c.exact);
  v.dominated("bound_dominates_count", b.structural_sum, big(c.upper), c.exact, "structural_sum");
  finish(r, v, t0);
  return r;
}

Json cmd_census(const CensusArgs& args, const GlobalOptions& g) {
  const auto t0 = Clock::now();
  if (args.system.empty()) throw UsageError("census: the system file holds no polynomial");
  const std::size_t n = args.system.front().nvars();
  for (const auto& p : args.system)
    if (p.nvars() != n) throw UsageError("census: system polynomials disagree on the variable count");
  for (const auto& p : args.family)
    if (p.nvars() != n) throw UsageError("census: family and system disagree on the variable count");
  if (args.box.size() != n) throw UsageError("census: box has " + std::to_string(args.box.size()) + " sides, system has " + std::to_string(n) + " variables");
  std::optional<Profile> prof;
  if (args.profile_text) {
    prof = parse_profile(*args.profile_text);
    if (static_cast<std::size_t>(prof->k) != n) throw UsageError("census: profile k differs from the variable count");
  }

  Json r = start("census", g);
  Json a;
  a["system"] = args.system_label;
  a["pfamily"] = args.family_label;
  a["box"] = box_json(args.box);
  a["depth"] = g.depth;
  r["arguments"] = a;

  const CensusResult c = sign_census(args.family, args.system, args.box, count_options(g));
  Json per = Json::array();
  for (const auto& [key, cr] : c.per_sign) {
    Json e;
    e["key"] = int_array(key);
    e["lower"] = str(cr.lower);
    e["upper"] = str(cr.upper);
    e["exact"] = cr.exact;
    per.push_back(std::move(e));
  }
  r["per_sign"] = std::move(per);
  r["total_lower"] = str(c.total_lower);
  r["total_upper"] = str(c.total_upper);
  r["exact"] = c.exact;
  r["components"] = count_json(c.components);

  Verdicts v;
  if (prof) {
    std::int64_t d = 1;
    for (const auto& p : args.family) d = std::max<std::int64_t>(d, p.degree());
    const auto s = static_cast<std::int64_t>(args.family.size());
    const auto t = theorem16_bound(*prof, s, d, g.constant_base);
    Json b;
    b["profile"] = profile_json(*prof);
    b["s"] = s;
    b["d"] = d;
    b["envelope"] = str(t.envelope);
    b["delta"] = str(t.delta.structural_sum);
    b["structural_total"] = str(t.structural_total);
    b["hypothesis_violated"] = t.delta.hypothesis_violated;
    b["degree_hypothesis_violated"] = t.degree_hypothesis_violated;
    r["bound"] = std::move(b);
    v.dominated("sign_total_dominated", t.structural_total, big(c.total_upper), c.exact, "structural_total");
  }
  finish(r, v, t0);
  return r;
}

Json cmd_deform_audit(const DeformArgs& args, const GlobalOptions& g) {
  const auto t0 = Clock::now();
  const Profile p = parse_profile(args.profile_text);
  if (args.chain.empty() || args.chain.front() != p.k) {
    throw UsageError("--tau must list the chain k, tau_1, ..., tau_j starting at k = " + std::to_string(p.k));
  }
  const std::vector<int> tau(args.chain.begin() + 1, args.chain.end());
  const int j = static_cast<int>(tau.size());

  std::vector<Polynomial> system = args.system;
  if (system.empty()) {
    const auto k = static_cast<std::size_t>(p.k);
    for (int i = 0; i < p.ell(); ++i) {
      const auto x = Polynomial::variable(k, static_cast<std::size_t>(i) % k);
      system.push_back(x.pow(static_cast<unsigned>(p.d(i + 1))) - Polynomial::constant(k, 1));
    }
  }

  // Both of these throw ScheduleError, which main() reports as a usage error.
  const InfSchedule sched = args.schedule ? InfSchedule::from_values(p.ell(), *args.schedule)
                                          : InfSchedule::geometric(p.ell(), args.schedule_base.value_or(InfSchedule::default_base()));

  ApproxOptions opts;
  opts.square = args.square;
  std::vector<ApproxTuple> tuples;
  try {
    tuples = build_approx_tuples(system, p, j, tau, sched, g.seed, opts);
  } catch (const ScheduleError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Json r = start("deform-audit", g);
  Json a;
  a["tau"] = args.chain;
  a["square"] = args.square;
  a["system"] = args.system.empty() ? "default" : "file";
  r["arguments"] = a;
  r["profile"] = profile_json(p);
  Json sv = Json::array();
  for (const auto& x : sched.ordered()) sv.push_back(to_string(x));
  r["schedule"] = std::move(sv);

  Verdicts v;
  Json rows = Json::array();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto& t = tuples[i];
    const TupleAudit au = audit_tuple(t, p, args.square);
    Json e;
    Json alpha = Json::array();
    for (const auto& part : t.alpha) {
      if (part.marker) {
        alpha.push_back(-1);
      } else {
        Json s = Json::array();
        for (auto x : part.set) s.push_back(x + 1);
        alpha.push_back(std::move(s));
      }
    }
    e["alpha"] = std::move(alpha);
    e["card_p"] = t.p_tuple.size();
    e["card_q"] = t.q_tuple.size();
    e["p_degrees"] = au.p_degrees;
    e["block_bounds"] = au.block_bounds;
    e["q_degree"] = au.q_degree == kZeroDegree ? Json(nullptr) : Json(au.q_degree);
    e["card_p_ok"] = au.card_p_ok;
    e["card_q_ok"] = au.card_q_ok;
    e["blocks_ok"] = au.blocks_ok;
    e["q_strict_ok"] = au.q_strict_ok;
    e["q_loose_ok"] = au.q_loose_ok;
    e["blocks_rounded_ok"] = au.blocks_rounded_ok;
    e["degree_rounded"] = t.degree_rounded;
    if (args.emit_polynomials) {
      e["p_tuple"] = format_system(t.p_tuple);
      e["q_tuple"] = format_system(t.q_tuple);
    }
    rows.push_back(std::move(e));
    if (!au.pass()) v.failures.push_back("tuple_" + std::to_string(i));
  }
  r["tuples"] = std::move(rows);

  std::vector<int> chain(args.chain.begin(), args.chain.end());
  const BigInt card = lemma58_card(p.k, chain);
  v.check("tuples_pass_audit", v.failures.empty(), std::to_string(tuples.size()) + " tuples audited");
  v.dominated("tuple_count_dominated", card, big(tuples.size()), true, "lemma58_card");
  finish(r, v, t0);
  return r;
}

Json error_report(const std::string& command, const std::string& message) {
  Json r;
  r["command"] = command;
  r["error"] = message;
  r["failures"] = Json::array({message});
  return r;
}

int exit_code(const Json& report) {
  if (report.contains("error")) return kExitUsage;
  const auto it = report.find("failures");
  return it == report.end() || it->empty() ? kExitOk : kExitVerdict;
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

Json parse_report(std::string_view text) { return Json::parse(text); }

}  // namespace rbz::cli
