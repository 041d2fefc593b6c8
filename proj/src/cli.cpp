#include "surfaut/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "surfaut/constraints.hpp"
#include "surfaut/covering.hpp"
#include "surfaut/dedekind.hpp"
#include "surfaut/defect.hpp"
#include "surfaut/equivindex.hpp"
#include "surfaut/error.hpp"
#include "surfaut/gsignature.hpp"
#include "surfaut/json_io.hpp"

namespace surfaut::cli {

namespace {

using Json = nlohmann::json;

struct Outcome {
  int exit_code = kExitOk;
  Json result;
  std::string text;
  std::vector<RuleId> citations;
};

// Option values are captured as text; `given` echoes what the user passed.
class Inputs {
 public:
  explicit Inputs(CLI::App* sub) : sub_(sub) {}

  void add(const std::string& name, const std::string& help, bool required = false) {
    auto* o = sub_->add_option("--" + name, values_[name], help);
    if (required) o->required();
    options_[name] = o;
  }
  void add_flag(const std::string& name, const std::string& help) {
    options_[name] = sub_->add_flag("--" + name, flags_[name], help);
  }
  void add_multi(const std::string& name, const std::string& help) {
    options_[name] = sub_->add_option("--" + name, multi_[name], help);
  }

  bool has(const std::string& name) const { return options_.at(name)->count() > 0; }
  const std::string& str(const std::string& name) const { return values_.at(name); }
  bool flag(const std::string& name) const { return flags_.at(name); }
  const std::vector<std::string>& multi(const std::string& name) const { return multi_.at(name); }

  Integer integer(const std::string& name) const { return parse_integer(str(name)); }
  long small(const std::string& name) const { return to_int64(integer(name)); }

  Json echo() const {
    Json j = Json::object();
    for (const auto& [name, opt] : options_) {
      if (opt->count() == 0) continue;
      if (flags_.count(name)) {
        j[name] = flags_.at(name);
      } else if (multi_.count(name)) {
        j[name] = multi_.at(name);
      } else {
        j[name] = values_.at(name);
      }
    }
    return j;
  }

 private:
  CLI::App* sub_;
  std::map<std::string, CLI::Option*> options_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> flags_;
  std::map<std::string, std::vector<std::string>> multi_;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RuleTable rules_from(const Inputs& in) {
  RuleTable rules;
  for (const auto& name : in.multi("disable-rule")) {
    const auto id = rule_from_name(name);
    if (!id) throw InputError("unknown rule id '" + name + "'");
    rules.set_enabled(*id, false);
  }
  return rules;
}

GroupProfile group_from(const Inputs& in) {
  if (in.has("group")) {
    if (in.has("order") || in.has("generators") || in.has("exponent")) {
      throw InputError("--group excludes --order/--generators/--exponent");
    }
    return parse_group_spec(in.str("group"));
  }
  if (!in.has("order") || !in.has("generators")) {
    throw InputError("give --group SPEC or --order N --generators R");
  }
  std::optional<Integer> exponent;
  if (in.has("exponent")) exponent = in.integer("exponent");
  return GroupProfile::opaque(in.integer("order"), in.small("generators"), exponent);
}

void add_group_options(Inputs& in) {
  in.add("group", "cyclic product such as C2^6 or C3xC9");
  in.add("order", "group order (for groups outside the C-product grammar)");
  in.add("generators", "minimal number of generators");
  in.add("exponent", "group exponent, when known");
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

std::string sign_str(std::int64_t v) { return std::to_string(v); }

// ---- subcommands ----------------------------------------------------------

Outcome do_dedekind(const Inputs& in) {
  const DedekindInput d(in.small("q"), in.small("p"));
  const std::string method = in.has("method") ? in.str("method") : "direct";
  if (method != "direct" && method != "closed" && method != "both") {
    throw InputError("--method must be direct, closed or both");
  }
  Outcome o;
  o.result = {{"q", d.q()}, {"p", d.p()}, {"method", method}};
  const std::string label = "s(" + sign_str(d.q()) + "," + sign_str(d.p()) + ")";
  std::optional<Rational> direct, closed;
  if (method != "closed") direct = dedekind_sum_direct(d);
  if (method != "direct") closed = dedekind_sum_closed(d);
  if (direct) o.result["direct"] = json::rational(*direct);
  if (closed) o.result["closed"] = json::rational(*closed);
  if (direct && closed) {
    const bool agree = *direct == *closed;
    o.result["agree"] = agree;
    o.text = label + " = " + direct->str() + " (direct), " + closed->str() + " (closed), " +
             (agree ? "agree" : "DISAGREE") + "\n";
    if (!agree) o.exit_code = kExitNegative;
  } else {
    o.text = label + " = " + (direct ? *direct : *closed).str() + "\n";
  }
  return o;
}

Outcome do_defect(const Inputs& in) {
  const long p = in.small("p");
  const long q = in.small("q");
  const DefectValue v = defect_closed(p, q);
  Outcome o;
  o.result = {{"p", p}, {"q", q}, {"value", json::rational(v.value())}};
  o.text = "I_{" + sign_str(p) + "," + sign_str(q) + "} = " + v.value().str() + "\n";
  if (((q % p) + p) % p == p - 1) {
    o.result["special_linear_value"] = json::rational(defect_special_linear(p).value());
  }
  if (in.flag("oracle")) {
    const long bits = in.has("bits") ? in.small("bits") : kDefaultOracleBits;
    const ApproxDefect a = defect_direct(p, q, bits);
    const bool ok = a.value.within(v.value(), kOracleToleranceExponent);
    Json oracle = json::approx(a);
    oracle["tolerance"] = "2^" + std::to_string(kOracleToleranceExponent);
    oracle["within_tolerance"] = ok;
    o.result["oracle"] = oracle;
    o.text += "root-of-unity sum (" + std::to_string(bits) + " bits) = " + a.value.to_string(30) +
              ", error bound " + a.error_bound.to_string(3) + ", within 2^" +
              std::to_string(kOracleToleranceExponent) + ": " + (ok ? "yes" : "NO") + "\n";
    if (!ok) o.exit_code = kExitNegative;
  } else if (in.has("bits")) {
    throw InputError("--bits requires --oracle");
  }
  return o;
}

Outcome do_lefschetz(const Inputs& in) {
  BettiData b{in.small("b1"), in.small("b2"), in.small("b3"), std::nullopt, std::nullopt};
  if (in.has("trace1")) b.trace1 = Rational::parse(in.str("trace1"));
  if (in.has("trace3")) b.trace3 = Rational::parse(in.str("trace3"));
  const Integer n = lefschetz_lower_bound(b);
  Outcome o;
  if (b.trace1) {
    o.result = {{"fixed_points", json::integer(n)}};
    o.text = "fixed points = 2 + b2 - tr1 - tr3 = " + to_string(n) + "\n";
  } else {
    o.result = {{"lower_bound", json::integer(n)}};
    o.text = "fixed points >= euler characteristic = " + to_string(n) + "\n";
  }
  return o;
}

Outcome do_balance(const Inputs& in) {
  std::vector<DefectValue> defects;
  if (in.has("defects")) {
    for (auto& r : parse_rational_list(in.str("defects"))) defects.emplace_back(std::move(r));
  }
  const Rational residual = g_signature_balance(in.integer("order"), in.integer("sign-quotient"),
                                                in.integer("sign-total"), defects);
  Outcome o;
  const bool zero = residual == Rational(0);
  o.result = {{"residual", json::rational(residual)}, {"balanced", zero}};
  o.text = "|G| sign(M/G) - sign(M) - sum def = " + residual.str() +
           (zero ? " (balanced)\n" : " (inconsistent)\n");
  if (!zero) o.exit_code = kExitNegative;
  return o;
}

Outcome do_part1(const Inputs& in) {
  const Part1Report r = part1_contradiction(in.small("p"), in.integer("c2"));
  Outcome o;
  o.result = json::part1(r);
  o.citations = {RuleId::kMiyaokaYau};
  std::ostringstream t;
  t << "element order |g| = " << r.element_order << "\n"
    << "fixed points of g: at least " << to_string(r.min_fixed_points) << " (euler number)\n"
    << "defect per fixed point of g: I_{" << r.element_order << ",-1} = "
    << r.defect_per_fixed_point.value() << "\n"
    << "defect at points fixed by g^" << r.p_small << " only: I_{" << r.p_small
    << ",-1} = " << r.defect_power_fixed_point.value() << " >= 0\n"
    << r.lhs_coefficient << " (c1^2 - 2 c2) >= " << r.defect_per_fixed_point.value() << " * "
    << to_string(r.min_fixed_points) << "\n"
    << "need c1^2 >= " << to_string(r.required_c1sq) << ", but " << r.cap_rule
    << " gives c1^2 <= " << to_string(r.miyaoka_yau_cap) << "\n"
    << (r.contradiction ? "contradiction: no element of order " : "no contradiction for order ")
    << r.element_order << "\n";
  o.text = t.str();
  if (r.contradiction) o.exit_code = kExitNegative;
  return o;
}

Outcome do_free_genus(const Inputs& in) {
  const GroupProfile g = group_from(in);
  const FreeGenusBounds b = free_genus_bounds(g);
  Outcome o;
  o.result = {{"group", json::group(g)},
              {"lower", json::integer(b.lower)},
              {"upper", json::integer(b.upper)}};
  o.text = to_string(b.lower) + " <= free genus of " + g.canonical() + " <= " +
           to_string(b.upper) + "  (|G| = " + to_string(g.order()) +
           ", r = " + std::to_string(g.min_generators()) + ")\n";
  return o;
}

Outcome do_cover(const Inputs& in) {
  const bool total = in.has("total-genus");
  if (total == in.has("quotient-genus")) {
    throw InputError("give exactly one of --total-genus and --quotient-genus");
  }
  const CoveringData c =
      riemann_hurwitz_free(total ? KnownGenus::kTotal : KnownGenus::kQuotient,
                           in.integer(total ? "total-genus" : "quotient-genus"),
                           in.integer("order"));
  Outcome o;
  o.result = json::covering(c);
  o.text = "m = " + to_string(c.total_genus) + ", n = " + to_string(c.quotient_genus) +
           ", |G| = " + to_string(c.group_order) + "  (m - 1 = |G| (n - 1))\n";
  return o;
}

Outcome do_index(const Inputs& in) {
  const OrbifoldData d = json::orbifold_from_json(read_json_file(in.str("file")));
  const Integer index = cr_index(d);
  const long dim = moduli_dim(d.quotient_genus, d.k());
  Outcome o;
  o.result = {{"orbifold", json::orbifold_to_json(d)},
              {"index", json::integer(index)},
              {"moduli_dim", dim},
              {"expected_dim", json::integer(Integer(index + dim))}};
  std::ostringstream t;
  t << "d = " << to_string(index) << ", dim_C moduli = " << dim
    << ", d + dim = " << to_string(Integer(index + dim)) << "\n";
  bool all_sl2 = true;
  for (const auto& p : d.marked) all_sl2 = all_sl2 && p.sl2();
  bool ok = index + dim >= 0;
  if (all_sl2) {
    const CaseReport r = case_classify(d);
    o.result["case"] = json::case_report(r);
    t << "case (" << case_label(r.governing) << "): lhs = " << r.governing_lhs
      << (r.satisfied ? " >= 0, satisfied" : " < 0, violated");
    if (r.base) {
      t << "; base case (" << case_label(*r.base) << "): lhs = " << *r.base_lhs
        << (*r.base_satisfied ? ", satisfied" : ", violated");
    }
    t << "\n";
    ok = r.satisfied;
  } else {
    o.result["case"] = nullptr;
    t << "not every marked point satisfies m1 + m2 = m; case inequalities not applicable\n";
  }
  o.text = t.str();
  if (!ok) o.exit_code = kExitNegative;
  return o;
}

Outcome do_claim2(const Inputs& in) {
  const Claim2Verdict v =
      claim2_check(in.integer("square"), in.integer("k-dot"), !in.flag("non-minimal"));
  Outcome o;
  o.result = json::claim2(v);
  o.text = o.result["status"].get<std::string>() + ": " + v.explanation + "\n";
  if (v.status == Claim2Status::kMinimalityContradiction || v.status == Claim2Status::kViolation) {
    o.exit_code = kExitNegative;
  }
  return o;
}

Outcome do_audit(const Inputs& in) {
  const auto curves = json::curves_from_json(read_json_file(in.str("file")));
  const AuditReport r = decomposition_audit(in.integer("c1sq"), in.integer("order"), curves);
  Outcome o;
  o.result = json::audit(r);
  std::ostringstream t;
  for (const auto& c : r.checks) {
    const char* s = c.status == AuditStatus::kPass ? "pass"
                    : c.status == AuditStatus::kFail ? "FAIL" : "skip";
    t << s << "  " << c.name;
    if (c.curve) t << "[" << *c.curve << "]";
    t << "  " << c.detail << "\n";
  }
  t << "audit: " << (r.pass ? "pass" : "fail") << "\n";
  o.text = t.str();
  if (!r.pass) o.exit_code = kExitNegative;
  return o;
}

Outcome do_check(const Inputs& in) {
  const SurfaceInvariants s(in.integer("c1sq"), in.integer("c2"));
  const GroupProfile g = group_from(in);
  const RuleTable rules = rules_from(in);
  const ConstraintReport r = check_candidate(s, g, rules);
  Outcome o;
  o.result = json::constraint_report(r);
  o.result["group"] = json::group(g);
  o.citations = rules.enabled_rules();
  std::ostringstream t;
  for (const auto& c : r.checks) {
    const char* st = c.status == CheckStatus::kPass ? "pass"
                     : c.status == CheckStatus::kFail ? "FAIL" : "off ";
    t << st << "  " << rule_name(c.rule) << "  " << c.witness << "\n";
  }
  t << (r.feasible ? "feasible (passes all known obstructions)" : "infeasible") << "\n";
  o.text = t.str();
  if (!r.feasible) o.exit_code = kExitNegative;
  return o;
}

Outcome do_census(const Inputs& in) {
  const auto c = census_case_from_name(in.str("case"));
  if (!c) throw InputError("--case must be 2c2 or 3c2");
  GroupFamily family = default_family(*c);
  if (in.has("family")) {
    const auto f = family_from_name(in.str("family"));
    if (!f) throw InputError("unknown family '" + in.str("family") + "'");
    family = *f;
  }
  const long max_rank = in.small("max-rank");
  if (max_rank < 1 || max_rank > 4096) throw InputError("--max-rank must be in [1, 4096]");
  long threads = in.has("threads") ? in.small("threads") : 1;
  if (threads < 1 || threads > 256) throw InputError("--threads must be in [1, 256]");
  const RuleTable rules = rules_from(in);
  const CensusTable t = census(*c, family, max_rank, rules, static_cast<unsigned>(threads));
  Outcome o;
  o.result = json::census_table(t);
  o.citations = rules.enabled_rules();
  o.text = render_census_text(t);
  return o;
}

void emit(std::ostream& out, bool as_json, const std::string& name, const Inputs& in,
          const Outcome& o) {
  if (!as_json) {
    out << o.text;
    return;
  }
  Json citations = Json::array();
  for (RuleId id : o.citations) {
    citations.push_back({{"rule", std::string(rule_name(id))},
                         {"citation", std::string(rule_citation(id))}});
  }
  Json envelope{{"tool", std::string(kToolName)},
                {"version", std::string(kVersion)},
                {"subcommand", name},
                {"inputs", in.echo()},
                {"result", o.result},
                {"citations", citations},
                {"exit_code", o.exit_code}};
  out << envelope.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact invariants and constraints for cohomologically trivial automorphisms of "
               "surfaces of general type",
               std::string(kToolName));
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON envelope instead of text");

  struct Command {
    CLI::App* app;
    std::unique_ptr<Inputs> inputs;
    std::function<Outcome(const Inputs&)> handler;
  };
  std::vector<Command> commands;
  auto command = [&](const std::string& name, const std::string& help,
                     std::function<Outcome(const Inputs&)> handler) -> Inputs& {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.push_back({sub, std::make_unique<Inputs>(sub), std::move(handler)});
    return *commands.back().inputs;
  };

  {
    auto& in = command("dedekind", "Dedekind sum s(q, p)", do_dedekind);
    in.add("q", "numerator argument", true);
    in.add("p", "modulus >= 1", true);
    in.add("method", "direct | closed | both (default direct)");
  }
  {
    auto& in = command("defect", "signature defect I_{p,q}", do_defect);
    in.add("p", "isotropy order >= 2", true);
    in.add("q", "twist exponent, a unit mod p", true);
    in.add_flag("oracle", "also evaluate the root-of-unity sum in floating point");
    in.add("bits", "oracle precision in bits (default 128, minimum 64)");
  }
  {
    auto& in = command("lefschetz", "fixed points of a map trivial on H^2", do_lefschetz);
    in.add("b1", "first Betti number", true);
    in.add("b2", "second Betti number", true);
    in.add("b3", "third Betti number", true);
    in.add("trace1", "trace on H^1");
    in.add("trace3", "trace on H^3");
  }
  {
    auto& in = command("balance", "G-signature residual", do_balance);
    in.add("order", "|G|", true);
    in.add("sign-quotient", "sign(M/G)", true);
    in.add("sign-total", "sign(M)", true);
    in.add("defects", "comma-separated defects a/b,... (use --defects=... for a leading minus)");
  }
  {
    auto& in = command("part1", "exclude elements of order p^2, p = 2, 3", do_part1);
    in.add("p", "2 or 3", true);
    in.add("c2", "Euler number c2 >= 1", true);
  }
  {
    auto& in = command("free-genus", "free genus bounds of a finite group", do_free_genus);
    add_group_options(in);
  }
  {
    auto& in = command("cover", "genera of a free regular covering", do_cover);
    in.add("order", "|G|", true);
    in.add("total-genus", "genus m of the covering surface");
    in.add("quotient-genus", "genus n of the quotient");
  }
  {
    auto& in = command("index", "equivariant Cauchy-Riemann index", do_index);
    in.add("file", "OrbifoldData JSON file", true);
  }
  {
    auto& in = command("claim2", "sign of c1(TM).C for a canonical curve", do_claim2);
    in.add("square", "C^2", true);
    in.add("k-dot", "K.C", true);
    in.add_flag("non-minimal", "the surface is not minimal");
  }
  {
    auto& in = command("audit", "audit a canonical curve decomposition", do_audit);
    in.add("file", "JSON array of CurveDatum", true);
    in.add("c1sq", "c1^2", true);
    in.add("order", "|G|", true);
  }
  {
    auto& in = command("check", "check a (surface, group) candidate", do_check);
    in.add("c1sq", "c1^2", true);
    in.add("c2", "c2", true);
    add_group_options(in);
    in.add_multi("disable-rule", "rule id to disable (repeatable)");
  }
  {
    auto& in = command("census", "rank census over a group family", do_census);
    in.add("case", "2c2 or 3c2", true);
    in.add("max-rank", "largest rank", true);
    in.add("family", "elem-abelian-2 | three-group-elem-abelian | three-group-exponent-3");
    in.add("threads", "worker threads (output is identical for any value)");
    in.add_multi("disable-rule", "rule id to disable (repeatable)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  for (const auto& c : commands) {
    if (!c.app->parsed()) continue;
    const std::string name = c.app->get_name();
    try {
      const Outcome o = c.handler(*c.inputs);
      emit(out, as_json, name, *c.inputs, o);
      return o.exit_code;
    } catch (const std::exception& e) {
      if (!dynamic_cast<const InputError*>(&e) && !dynamic_cast<const NonIntegralIndex*>(&e) &&
          !dynamic_cast<const nlohmann::json::exception*>(&e)) {
        throw;
      }
      if (as_json) {
        Json envelope{{"tool", std::string(kToolName)},
                      {"version", std::string(kVersion)},
                      {"subcommand", name},
                      {"inputs", c.inputs->echo()},
                      {"error", e.what()},
                      {"exit_code", kExitInputError}};
        out << envelope.dump(2) << "\n";
      }
      err << "error: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  return kExitInputError;
}

}  // namespace surfaut::cli
