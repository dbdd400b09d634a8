#include "amcurve/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "amcurve/automorph.hpp"
#include "amcurve/chain.hpp"
#include "amcurve/charseq.hpp"
#include "amcurve/semigroup.hpp"

namespace amcurve::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kGapListCap = 10'000;
constexpr std::uint64_t kDefaultSeed = 42;

/// Bad input detected after option parsing (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verification or certification said no (exit 1); already reported.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json strings(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

json strings(const std::vector<std::int64_t>& values) {
  json out = json::array();
  for (auto v : values) out.push_back(std::to_string(v));
  return out;
}

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].get_str();
  return out;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

CoeffDomain domain_for(std::uint64_t characteristic) {
  if (characteristic == 0) return CoeffDomain::rational();
  try {
    return CoeffDomain::prime_field(characteristic);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--char: ") + e.what());
  }
}

CharSequence sequence_arg(const std::string& text) {
  try {
    return CharSequence(parse_integer_list(text));
  } catch (const InvalidSequence& e) {
    throw UsageError(e.what());
  }
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("AMCURVE_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("AMCURVE_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return kDefaultSeed;
}

json intersections_json(const std::vector<IntersectionNumber>& values) {
  json out = json::array();
  for (const auto& v : values) {
    if (v.is_infinite()) {
      out.push_back("inf");
    } else {
      out.push_back(v.value());
    }
  }
  return out;
}

json report_json(const IntersectionReport& rep) {
  json dl = json::array();
  for (const auto& row : rep.dlambda) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v ? v->get_str() : std::string("inf"));
    dl.push_back(r);
  }
  json failures = json::array();
  for (const auto& f : rep.failures) failures.push_back(f);
  return {{"sequence", strings(rep.sequence)},
          {"dchain", strings(rep.dchain)},
          {"degrees", rep.degrees},
          {"intersections", intersections_json(rep.intersections)},
          {"pairwise", intersections_json(rep.pairwise)},
          {"dlambda", dl},
          {"checks",
           {{"lemma31_1", rep.degrees_ok}, {"lemma31_2", rep.values_ok}, {"eq5", rep.consecutive_ok},
            {"ultrametric", rep.ultrametric}}},
          {"failures", failures}};
}

json chain_json(const ChainAtInfinity& chain) {
  json polys = json::array();
  for (const auto& f : chain.polys()) polys.push_back(f.to_string());
  return {{"domain", chain.domain().name()},
          {"sequence", strings(chain.realized_sequence())},
          {"ratios", strings(chain.ratios())},
          {"dchain", strings(chain.dchain())},
          {"degrees", chain.degrees()},
          {"polys", polys},
          {"param", {{"x", chain.param().x.to_string()}, {"y", chain.param().y.to_string()}}},
          {"witness", to_json(chain.pair_witnesses().back())}};
}

void print_chain_text(const ChainAtInfinity& chain, std::ostream& out) {
  out << "sequence: " << join(chain.realized_sequence()) << "\n";
  out << "domain: " << chain.domain().name() << "\n";
  out << "ratios: " << join(chain.ratios()) << "\n";
  out << "dchain: " << join(chain.dchain()) << "\n";
  for (std::size_t k = 1; k <= chain.polys().size(); ++k) {
    out << "f_" << k << " = " << chain.f(k).to_string() << "\n";
  }
  out << "x(t) = " << chain.param().x.to_string() << "\n";
  out << "y(t) = " << chain.param().y.to_string() << "\n";
}

// --- subcommands -----------------------------------------------------------

int cmd_check(const std::string& seq_text, bool as_json, std::ostream& out) {
  const CharSequence seq = sequence_arg(seq_text);
  const AxiomReport rep = check_axioms(seq);
  if (as_json) {
    out << json{{"sequence", strings(seq.terms())},
                {"dchain", strings(rep.dchain)},
                {"axioms", {{"1", rep.gcd_descent}, {"2", rep.weighted_growth}, {"3", rep.am_inequality},
                            {"4", rep.conductor}}},
                {"am_inequality", {rep.am_lhs.get_str(), rep.am_rhs.get_str()}},
                {"conductor_formula", {rep.conductor_lhs.get_str(), rep.conductor_rhs.get_str()}}}
                .dump(2)
        << "\n";
  } else {
    auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    out << "sequence: " << seq.to_string() << "\n";
    out << "gcd chain: " << join(rep.dchain) << "\n";
    out << "(1) " << mark(rep.gcd_descent) << "\n";
    out << "(2) " << mark(rep.weighted_growth) << "\n";
    out << "(3) " << mark(rep.am_inequality);
    if (seq.length() > 0) {
      out << " (" << rep.am_lhs.get_str() << (rep.am_inequality ? " < " : " >= ") << rep.am_rhs.get_str() << ")";
    }
    out << "\n";
    out << "(4) " << mark(rep.conductor) << " (" << rep.conductor_lhs.get_str()
        << (rep.conductor ? " = " : " != ") << rep.conductor_rhs.get_str() << ")\n";
  }
  return rep.all() ? kExitOk : kExitCheckFailed;
}

int cmd_from_chain(const std::string& text, bool as_json, std::ostream& out) {
  std::vector<Integer> d;
  try {
    d = parse_integer_list(text);
    const AmSequence r = am_from_chain(DivisorChain(d));
    if (as_json) {
      out << strings(r.terms()).dump() << "\n";
    } else {
      out << r.sequence().to_string() << "\n";
    }
  } catch (const InvalidSequence& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_enumerate(const std::string& text, bool as_json, std::ostream& out) {
  std::vector<AmSequence> seqs;
  try {
    const auto values = parse_integer_list(text);
    if (values.size() != 1) throw InvalidSequence("--initial takes a single integer");
    seqs = enumerate_am(values.front());
  } catch (const InvalidSequence& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    json arr = json::array();
    for (const auto& s : seqs) arr.push_back(strings(s.terms()));
    out << arr.dump() << "\n";
  } else {
    for (const auto& s : seqs) out << s.sequence().to_string() << "\n";
  }
  return kExitOk;
}

int cmd_semigroup(const std::string& text, const CLI::Option* up_to_opt, std::uint64_t up_to, std::ostream& out) {
  std::vector<Integer> gens;
  try {
    gens = parse_integer_list(text);
  } catch (const InvalidSequence& e) {
    throw UsageError(e.what());
  }
  NumericalSemigroup g = [&] {
    try {
      return NumericalSemigroup::generate(gens, up_to_opt->count() > 0 ? up_to : 0);
    } catch (const SemigroupError& e) {
      throw UsageError(e.what());
    }
  }();
  json doc{{"generators", strings(gens)}};
  int code = kExitOk;
  if (g.generator_gcd() == 1) {
    const SemigroupInvariants inv = g.invariants();
    doc["conductor"] = inv.conductor;
    doc["frobenius"] = inv.frobenius;
    doc["genus"] = inv.genus;
    std::vector<std::uint64_t> gaps = inv.gaps;
    const bool truncated = gaps.size() > kGapListCap;
    if (truncated) gaps.resize(kGapListCap);
    doc["gaps"] = gaps;
    if (truncated) doc["gaps_truncated"] = true;
    doc["minimal_generators"] = inv.minimal_generators;
  } else {
    doc["gcd"] = g.generator_gcd();
    doc["conductor"] = nullptr;
    doc["frobenius"] = nullptr;
    doc["genus"] = nullptr;
    code = kExitCheckFailed;
  }
  if (up_to_opt->count() > 0) doc["members"] = g.members_up_to(up_to);
  out << doc.dump(2) << "\n";
  return code;
}

AmSequence certified_or_fail(const CharSequence& seq, std::ostream& err) {
  try {
    return AmSequence::certify(seq);
  } catch (const InvalidSequence& e) {
    err << "amcurve: " << e.what() << "\n";
    throw CheckFailed(e.what());
  }
}

int cmd_build(const std::string& seq_text, std::uint64_t characteristic, bool as_json, std::ostream& out,
              std::ostream& err) {
  const CharSequence seq = sequence_arg(seq_text);
  const CoeffDomain dom = domain_for(characteristic);
  const AmSequence r = certified_or_fail(seq, err);
  if (r.sequence().initial() <= 1) throw UsageError("realization needs initial term > 1");
  const ChainAtInfinity chain = build_chain(r, dom);
  if (as_json) {
    out << chain_json(chain).dump(2) << "\n";
  } else {
    print_chain_text(chain, out);
  }
  return kExitOk;
}

int cmd_decompose(const std::string& f_text, const std::string& g_text, std::uint64_t characteristic, bool as_json,
                  std::ostream& out, std::ostream& err) {
  const CoeffDomain dom = domain_for(characteristic);
  BiPoly f(dom);
  BiPoly g(dom);
  try {
    f = parse_bipoly(f_text, dom);
    g = parse_bipoly(g_text, dom);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (f.degree() <= 1) throw UsageError("--f must have degree > 1, got " + f.degree().to_string());

  ChainSkeleton skeleton;
  try {
    skeleton = decompose_line(f, g);
  } catch (const AutomorphismError& e) {
    err << "amcurve: " << e.what() << "\n";
    throw CheckFailed(e.what());
  }
  const ChainAtInfinity chain = chain_from_skeleton(skeleton);
  const std::vector<Integer> r = chain.realized_sequence();
  const IntersectionReport rep = verify_theorem(chain, CharSequence(r));
  const bool axioms_ok = check_axioms(CharSequence(r)).all();

  if (as_json) {
    json doc = chain_json(chain);
    doc["checks"] = report_json(rep)["checks"];
    doc["checks"]["axioms"] = axioms_ok;
    doc["intersections"] = intersections_json(rep.intersections);
    doc["certificate"] = to_json(skeleton.witness);
    out << doc.dump(2) << "\n";
  } else {
    print_chain_text(chain, out);
    out << "intersections: ";
    for (std::size_t i = 0; i < rep.intersections.size(); ++i) {
      out << (i ? "," : "") << rep.intersections[i].to_string();
    }
    out << "\n";
    out << "verified: " << (rep.all() && axioms_ok ? "yes" : "no") << "\n";
    for (const auto& failure : rep.failures) out << "  " << failure << "\n";
  }
  return rep.all() && axioms_ok ? kExitOk : kExitCheckFailed;
}

struct OracleArgs {
  const CLI::Option* trials_opt = nullptr;
  const CLI::Option* seed_opt = nullptr;
  std::size_t trials = 0;
  std::uint32_t degree_bound = 6;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_verify(const std::string& seq_text, std::uint64_t characteristic, const OracleArgs& oa, std::ostream& out,
               std::ostream& err) {
  const CharSequence seq = sequence_arg(seq_text);
  const CoeffDomain dom = domain_for(characteristic);
  const std::uint64_t seed = resolve_seed(oa.seed_opt, oa.seed);
  const AmSequence r = certified_or_fail(seq, err);
  if (r.sequence().initial() <= 1) throw UsageError("realization needs initial term > 1");

  const ChainAtInfinity chain = build_chain(r, dom);
  const IntersectionReport rep = verify_theorem(chain, seq);
  json doc = report_json(rep);
  bool ok = rep.all();

  if (oa.trials_opt->count() > 0) {
    const auto samples = semigroup_sampling_oracle(chain, oa.trials, oa.degree_bound, seed);
    const auto g = NumericalSemigroup::generate(seq.terms());
    const OracleVerdict verdict = check_oracle_membership(samples, g);
    json bad = json::array();
    for (const auto& s : verdict.non_members) bad.push_back({{"poly", s.poly}, {"value", s.value.value()}});
    doc["oracle"] = {{"trials", oa.trials},
                     {"degree_bound", oa.degree_bound},
                     {"seed", seed},
                     {"samples", samples.size()},
                     {"finite", verdict.finite},
                     {"infinite", verdict.infinite},
                     {"produced_zero", verdict.produced_zero},
                     {"non_members", bad}};
    doc["checks"]["oracle"] = verdict.ok();
    ok = ok && verdict.ok();
  }
  out << doc.dump(2) << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_nagata(std::uint64_t p, std::uint64_t a, bool as_json, std::ostream& out) {
  NagataRecord rec;
  try {
    rec = nagata(p, a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const char* which = rec.which == NagataCase::kI ? "I" : "II";
  if (as_json) {
    out << json{{"p", p},
                {"a", a},
                {"case", which},
                {"f", rec.f.to_string()},
                {"g", rec.g.to_string()},
                {"param", {{"x", rec.param.x.to_string()}, {"y", rec.param.y.to_string()}}},
                {"f_vanishes", rec.f_vanishes},
                {"g_is_t", rec.g_is_t},
                {"expected", strings(rec.expected)},
                {"computed", strings(rec.computed)},
                {"axioms", {{"1", rec.axioms.gcd_descent}, {"2", rec.axioms.weighted_growth},
                            {"3", rec.axioms.am_inequality}, {"4", rec.axioms.conductor}}},
                {"matches", rec.matches_expectation()}}
                .dump(2)
        << "\n";
  } else {
    auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    out << "domain: GF(" << p << "), case " << which << "\n";
    out << "f = " << rec.f.to_string() << "\n";
    out << "g = " << rec.g.to_string() << "\n";
    out << "x(t) = " << rec.param.x.to_string() << "\n";
    out << "y(t) = " << rec.param.y.to_string() << "\n";
    out << "f(x(t), y(t)) = 0: " << (rec.f_vanishes ? "yes" : "no") << "\n";
    out << "g(x(t), y(t)) = t: " << (rec.g_is_t ? "yes" : "no") << "\n";
    out << "expected: " << join(rec.expected) << "\n";
    out << "computed: " << join(rec.computed) << "\n";
    out << "(1) " << mark(rec.axioms.gcd_descent) << "\n";
    out << "(2) " << mark(rec.axioms.weighted_growth) << "\n";
    out << "(3) " << mark(rec.axioms.am_inequality) << " (" << rec.axioms.am_lhs.get_str()
        << (rec.axioms.am_inequality ? " < " : " >= ") << rec.axioms.am_rhs.get_str() << ")\n";
    out << "(4) " << mark(rec.axioms.conductor) << "\n";
  }
  return rec.matches_expectation() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abhyankar-Moh characteristic sequences, semigroups and coordinate lines", "amcurve"};
  app.require_subcommand(1);

  std::function<int()> action;
  bool as_json = false;
  std::string sequence;
  std::string divisors;
  std::string initial;
  std::string generators;
  std::string f_text;
  std::string g_text;
  std::uint64_t characteristic = 0;
  std::uint64_t up_to = 0;
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  OracleArgs oracle;

  auto* check = app.add_subcommand("check", "Evaluate axioms (1)-(4) on a sequence");
  check->add_option("--sequence", sequence, "Comma-separated positive integers")->required();
  check->add_flag("--json", as_json, "JSON output");
  check->callback([&] { action = [&] { return cmd_check(sequence, as_json, out); }; });

  auto* from_chain = app.add_subcommand("from-chain", "AM sequence of a divisor chain");
  from_chain->add_option("--divisors", divisors, "Divisor chain d_1,...,1")->required();
  from_chain->add_flag("--json", as_json, "JSON output");
  from_chain->callback([&] { action = [&] { return cmd_from_chain(divisors, as_json, out); }; });

  auto* enumerate = app.add_subcommand("enumerate", "All AM sequences with a given initial term");
  enumerate->add_option("--initial", initial, "Initial term n > 1")->required();
  enumerate->add_flag("--json", as_json, "JSON output");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(initial, as_json, out); }; });

  auto* semigroup = app.add_subcommand("semigroup", "Invariants of a numerical semigroup (JSON)");
  semigroup->add_option("--generators", generators, "Comma-separated generators")->required();
  auto* up_to_opt = semigroup->add_option("--up-to", up_to, "Also list members up to this bound");
  semigroup->callback([&] { action = [&] { return cmd_semigroup(generators, up_to_opt, up_to, out); }; });

  auto* build = app.add_subcommand("build", "Coordinate line realizing an AM sequence");
  build->add_option("--sequence", sequence, "AM sequence")->required();
  build->add_option("--char", characteristic, "Prime characteristic (default: rationals)");
  build->add_flag("--json", as_json, "JSON output");
  build->callback([&] { action = [&] { return cmd_build(sequence, characteristic, as_json, out, err); }; });

  auto* decompose = app.add_subcommand("decompose", "Chain of a coordinate line f with partner g");
  decompose->add_option("--f", f_text, "Polynomial f")->required();
  decompose->add_option("--g", g_text, "Polynomial g with (g, f) an automorphism")->required();
  decompose->add_option("--char", characteristic, "Prime characteristic (default: rationals)");
  decompose->add_flag("--json", as_json, "JSON output");
  decompose->callback(
      [&] { action = [&] { return cmd_decompose(f_text, g_text, characteristic, as_json, out, err); }; });

  auto* verify = app.add_subcommand("verify", "Verify intersection numbers of the realized chain (JSON)");
  verify->add_option("--sequence", sequence, "AM sequence")->required();
  verify->add_option("--char", characteristic, "Prime characteristic (default: rationals)");
  oracle.trials_opt = verify->add_option("--oracle-trials", oracle.trials, "Random polynomials for the oracle");
  verify->add_option("--degree-bound", oracle.degree_bound, "Oracle degree bound (default 6)");
  oracle.seed_opt = verify->add_option("--seed", oracle.seed, "Oracle seed (default: $AMCURVE_SEED, then 42)");
  verify->callback([&] { action = [&] { return cmd_verify(sequence, characteristic, oracle, out, err); }; });

  auto* nag = app.add_subcommand("nagata", "Nagata's embedded line in characteristic p");
  nag->add_option("--p", p, "Prime p")->required();
  nag->add_option("--a", a, "Integer a > 1 coprime to p")->required();
  nag->add_flag("--json", as_json, "JSON output");
  nag->callback([&] { action = [&] { return cmd_nagata(p, a, as_json, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "amcurve: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "amcurve: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckFailed&) {
    return kExitCheckFailed;
  } catch (const ChainError& e) {
    err << "amcurve: verification failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace amcurve::cli
