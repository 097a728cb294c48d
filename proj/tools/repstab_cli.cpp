#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace repstab;
using namespace repstab::cli;

namespace {

struct Context {
  int max_coord = 7;
  Cutoffs cutoffs() const { return Cutoffs{max_coord, max_coord}; }
  bool within(const SizeVector& d) const { return d.max_coord() <= max_coord; }
};

Json sizes_json(const std::vector<SizeVector>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(json::to_json(d));
  return out;
}

std::vector<SizeVector> sizes_from(const Json& j) {
  std::vector<SizeVector> out;
  for (const auto& e : j) out.push_back(json::sizevector_from(e));
  return out;
}

SizeVector ones(int arity) { return SizeVector::filled(arity, 1); }

Table polynomial_table(const CharacterPolynomial& p) {
  Table t{{"mu", "coeff"}};
  for (const auto& [mu, c] : p.terms()) t.push_back({mu.str(), to_string(c)});
  return t;
}

Table module_table(const VirtualFreeModule& m) {
  Table t{{"coeff", "degree", "class", "value"}};
  for (const auto& s : m.summands()) {
    const auto& gc = group_classes(s.degree());
    for (std::size_t i = 0; i < gc.size(); ++i)
      t.push_back({to_string(s.coefficient), s.degree().str(), gc.classes[i].str(), to_string(s.rep[i])});
  }
  return t;
}

Table values_table(const std::string& label, const std::vector<SizeVector>& ds, const std::vector<Rational>& vs) {
  Table t{{"quantity"}, {label}};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    t[0].push_back("S" + ds[i].str());
    t[1].push_back(to_string(vs[i]));
  }
  return t;
}

/// Average of f over every element of S_d, by enumeration.
template <class F>
Rational literal_average(const SizeVector& d, F&& f) {
  Rational acc = 0;
  Integer count = 0;
  for (const auto& g : all_permutations(d)) {
    acc += f(g.cycle_type());
    count += 1;
  }
  return acc / Rational(count);
}

Integer group_order(const SizeVector& d) { return group_classes(d).order; }

/// Groups on which literal averaging runs: inside the cut-off and of order
/// at most 7!.
bool averageable(const Context& ctx, const SizeVector& d) { return ctx.within(d) && group_order(d) <= 5040; }

/// The sizes requested by --stable / --range / --d, given the stable start.
std::vector<SizeVector> requested_sizes(const Json& args, const SizeVector& start) {
  if (args.at("mode") == "stable") return {start};
  return sizes_from(args.at("range"));
}

Json mode_args(bool stable, const std::string& range, const std::string& single) {
  if (!range.empty() && (stable || !single.empty())) throw InputError("choose one of --stable, --range, --d");
  if (!range.empty()) return Json{{"mode", "range"}, {"range", sizes_json(parse_range(range))}};
  if (!single.empty()) return Json{{"mode", "range"}, {"range", sizes_json({parse_sizes(single)})}};
  return Json{{"mode", "stable"}};
}

// ---------------------------------------------------------------- commands

Outcome run_indicator(const Json& args, const Context& ctx) {
  const MultiClass mu = json::multiclass_from(args.at("mu"));
  const SizeVector group = json::sizevector_from(args.at("group"));
  mu.sizes().require_same_arity(group);
  Outcome out;
  Json values = Json::array();
  Table table{{"class", "S" + group.str()}};
  auto& oracle = out.verification.add("indicator-oracle");
  const bool check = ctx.within(group);
  if (check) oracle.sizes.push_back(group);
  for (const auto& nu : conjugacy_classes(group)) {
    const Integer value = eval_indicator(mu, nu);
    Json row{{"class", json::to_json(nu)}, {"value", json::to_json(Rational(value))}};
    if (check) {
      const bool agrees = Integer(static_cast<long>(indicator_oracle(mu, MultiPermutation::of_cycle_type(nu),
                                                                     ctx.cutoffs()))) == value;
      row["oracle_agrees"] = agrees;
      oracle.passed = oracle.passed && agrees;
    }
    values.push_back(std::move(row));
    table.push_back({nu.str(), to_string(Rational(value))});
  }
  if (!check) out.verification.skip("indicator-oracle: S" + group.str() + " exceeds --max-coord");
  out.result = Json{{"mu", json::to_json(mu)}, {"group", json::to_json(group)}, {"values", std::move(values)}};
  out.table = std::move(table);
  return out;
}

Outcome run_multiply(const Json& args, const Context& ctx) {
  const auto p = json::polynomial_from(args.at("p"));
  const auto q = json::polynomial_from(args.at("q"));
  p.require_same_arity(q);
  Outcome out;
  const auto r = multiply(p, q);
  auto& check = out.verification.add("pointwise-product");
  const SizeVector top = p.degree() + q.degree() + ones(p.arity());
  for (const auto& d : size_box(SizeVector::zeros(p.arity()), top)) {
    if (!ctx.within(d)) continue;
    if (r.evaluate_on(d) != p.evaluate_on(d) * q.evaluate_on(d)) check.passed = false;
    check.sizes.push_back(d);
  }
  out.result = json::to_json(r);
  out.table = polynomial_table(r);
  return out;
}

/// Shared by inner and expect: value(d) on the requested sizes, literal
/// averages where feasible, and constancy from the stable start on.
Outcome stabilizing_values(const Json& args, const Context& ctx, const SizeVector& start,
                           const std::function<Rational(const SizeVector&)>& value,
                           const std::function<Rational(const MultiClass&)>& integrand, const std::string& label) {
  Outcome out;
  const auto ds = requested_sizes(args, start);
  const Rational stable = value(start);
  std::vector<Rational> vs;
  Json values = Json::array();
  auto& literal = out.verification.add("literal-average");
  auto& constant = out.verification.add("stable-value");
  for (const auto& d : ds) {
    d.require_same_arity(start);
    const Rational v = value(d);
    vs.push_back(v);
    values.push_back(Json{{"d", json::to_json(d)}, {"value", json::to_json(v)}});
    if (averageable(ctx, d)) {
      if (literal_average(d, integrand) != v) literal.passed = false;
      literal.sizes.push_back(d);
    }
    if (start.fits_in(d)) {
      if (v != stable) constant.passed = false;
      constant.sizes.push_back(d);
    }
  }
  if (args.at("mode") == "stable") {
    const SizeVector next = start + ones(start.arity());
    if (ctx.within(next)) {
      if (value(next) != stable) constant.passed = false;
      constant.sizes.push_back(next);
    }
  }
  out.result = Json{{"stable_from", json::to_json(start)}, {"stable_value", json::to_json(stable)},
                    {"values", std::move(values)}};
  out.table = values_table(label, ds, vs);
  return out;
}

Outcome run_inner(const Json& args, const Context& ctx) {
  const auto p = json::polynomial_from(args.at("p"));
  const auto q = json::polynomial_from(args.at("q"));
  p.require_same_arity(q);
  return stabilizing_values(
      args, ctx, p.degree() + q.degree(), [&](const SizeVector& d) { return inner(p, q, d); },
      [&](const MultiClass& nu) { return Rational(p.evaluate(nu) * q.evaluate(nu)); }, "inner");
}

Outcome run_expect(const Json& args, const Context& ctx) {
  const auto p = json::polynomial_from(args.at("p"));
  return stabilizing_values(
      args, ctx, p.degree(), [&](const SizeVector& d) { return expectation(p, d); },
      [&](const MultiClass& nu) { return p.evaluate(nu); }, "expectation");
}

Outcome run_ind_char(const Json& args, const Context& ctx) {
  const SizeVector c = json::sizevector_from(args.at("degree"));
  const ClassFunction rep = json::classfunction_from(args.at("rep"), c);
  Outcome out;
  const auto p = ind_character(c, rep);
  out.result = json::to_json(p);
  out.table = polynomial_table(p);

  if (!ctx.within(c)) {
    out.verification.skip("induction-oracle: degree " + c.str() + " exceeds --max-coord");
    return out;
  }
  // Write the representation over the Young permutation characters, which
  // span the class functions of S_c, then certify each piece literally.
  const auto& gc = group_classes(c);
  const auto shapes = multi_partitions(c);
  std::vector<FiniteGSet> sets;
  std::vector<std::vector<Integer>> matrix(gc.size(), std::vector<Integer>(shapes.size()));
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    sets.push_back(FiniteGSet::cosets(c, young_subgroup(shapes[j])));
    const auto pi = sets.back().permutation_character();
    for (std::size_t i = 0; i < gc.size(); ++i) matrix[i][j] = pi[i].get_num();
  }
  const auto coeffs = ExactSolver(std::move(matrix)).solve(rep.values());
  auto& check = out.verification.add("induction-oracle");
  for (const auto& d : size_box(c, c + 2 * ones(c.arity()))) {
    if (!ctx.within(d)) continue;
    ClassFunction literal(d);
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (coeffs[j] != 0) literal += coeffs[j] * induction_oracle(c, sets[j], d, ctx.cutoffs());
    if (literal != p.evaluate_on(d)) check.passed = false;
    check.sizes.push_back(d);
  }
  return out;
}

/// Characters of the module against a pointwise expectation on the box
/// [0, top] inside the cut-off.
void character_check(Check& check, const Context& ctx, const SizeVector& top,
                     const std::function<bool(const SizeVector&)>& agrees) {
  for (const auto& d : size_box(SizeVector::zeros(top.arity()), top)) {
    if (!ctx.within(d)) continue;
    if (!agrees(d)) check.passed = false;
    check.sizes.push_back(d);
  }
}

Outcome run_tensor(const Json& args, const Context& ctx) {
  const auto m = json::module_from(args.at("m"));
  const auto n = json::module_from(args.at("n"));
  Outcome out;
  const auto t = tensor(m, n, ctx.cutoffs());
  const auto chi_t = module_character(t);
  const auto chi_m = module_character(m);
  const auto chi_n = module_character(n);
  const SizeVector top = (m.is_zero() || n.is_zero() ? SizeVector::zeros(m.arity()) : m.degree() + n.degree()) +
                         ones(m.arity());
  character_check(out.verification.add("pointwise-product"), ctx, top, [&](const SizeVector& d) {
    return chi_t.evaluate_on(d) == chi_m.evaluate_on(d) * chi_n.evaluate_on(d);
  });
  out.result = json::to_json(t);
  out.table = module_table(t);
  return out;
}

Outcome run_dual(const Json& args, const Context& ctx) {
  const auto m = json::module_from(args.at("m"));
  Outcome out;
  const auto d = dual(m);
  auto& involution = out.verification.add("involution");
  involution.passed = dual(d) == m;
  const auto chi = module_character(m);
  const auto chi_d = module_character(d);
  const SizeVector top = (m.is_zero() ? SizeVector::zeros(m.arity()) : m.degree()) + ones(m.arity());
  character_check(out.verification.add("character-at-inverse"), ctx, top, [&](const SizeVector& g) {
    const auto direct = chi.evaluate_on(g);
    return chi_d.evaluate_on(g) == ClassFunction::from(g, [&](const MultiClass& nu) {
             return direct.value(MultiPermutation::of_cycle_type(nu).inverse().cycle_type());
           });
  });
  out.result = json::to_json(d);
  out.table = module_table(d);
  return out;
}

Outcome run_coinv(const Json& args, const Context& ctx) {
  const auto m = json::module_from(args.at("m"));
  const auto chi = module_character(m);
  const SizeVector start = m.is_zero() ? SizeVector::zeros(m.arity()) : m.degree();
  Outcome out = stabilizing_values(
      args, ctx, start, [&](const SizeVector& d) { return coinvariants_dim(m, d); },
      [&](const MultiClass& nu) { return chi.evaluate(nu); }, "coinvariants");
  auto& frobenius = out.verification.add("frobenius");
  for (const auto& d : requested_sizes(args, start)) {
    if (coinvariants_dim(m, d) != expectation(chi, d)) frobenius.passed = false;
    frobenius.sizes.push_back(d);
  }
  return out;
}

Outcome run_stable_decompose(const Json& args, const Context& ctx) {
  const auto m = json::module_from(args.at("m"));
  Outcome out;
  const auto dec = stable_decompose(m);
  const auto chi = module_character(m);
  auto& rebuild = out.verification.add("reconstruction");
  auto& mult = out.verification.add("multiplicities");
  for (const auto& d : {dec.valid_from, dec.valid_from + ones(m.arity())}) {
    rebuild.sizes.push_back(d);
    if (!ctx.within(d)) continue;
    const auto here = chi.evaluate_on(d);
    for (const auto& lambda : multi_partitions_up_to(m.is_zero() ? SizeVector::zeros(m.arity()) : m.degree())) {
      auto it = dec.entries.find(lambda);
      if (inner_product(here, padded_character(lambda, d)) != (it == dec.entries.end() ? Rational(0) : it->second))
        mult.passed = false;
    }
    mult.sizes.push_back(d);
  }
  out.result = json::to_json(dec);
  Table t{{"lambda", "mult"}};
  for (const auto& [lambda, r] : dec.entries) t.push_back({lambda.str(), to_string(r)});
  out.table = std::move(t);
  return out;
}

Outcome run_orthonormality(const Json& args, const Context&) {
  const SizeVector bound = json::sizevector_from(args.at("bound"));
  Outcome out;
  const auto report = orthonormality_report(bound);
  auto& check = out.verification.add("identity");
  check.passed = report.is_identity();
  check.sizes.push_back(bound + bound);
  Json labels = Json::array();
  Json gram = Json::array();
  Table t{{""}};
  for (const auto& l : report.labels) {
    labels.push_back(json::to_json(l));
    t[0].push_back(l.str());
  }
  for (std::size_t i = 0; i < report.gram.size(); ++i) {
    Json row = Json::array();
    std::vector<std::string> cells{report.labels[i].str()};
    for (const auto& g : report.gram[i]) {
      row.push_back(json::to_json(g));
      cells.push_back(to_string(g));
    }
    gram.push_back(std::move(row));
    t.push_back(std::move(cells));
  }
  out.result = Json{{"labels", std::move(labels)}, {"gram", std::move(gram)}};
  out.table = std::move(t);
  return out;
}

Outcome run_verify(const Json& args, const Context& ctx) {
  const std::string suite = args.at("suite");
  Outcome out;
  if (suite == "all") {
    for (const auto& [name, run] : suite_table()) run(out.verification, ctx.max_coord);
  } else {
    auto it = suite_table().find(suite);
    if (it == suite_table().end()) throw InputError("unknown suite '" + suite + "'");
    it->second(out.verification, ctx.max_coord);
  }
  out.result = Json{{"suite", suite}, {"checks", out.verification.checks().size()}, {"passed", out.verification.passed()}};
  Table t{{"check", "passed", "sizes"}};
  for (const auto& c : out.verification.checks()) {
    std::string sizes;
    for (const auto& s : c.distinct_sizes()) sizes += (sizes.empty() ? "" : " ") + s.str();
    t.push_back({c.name, c.passed ? "true" : "false", sizes});
  }
  out.table = std::move(t);
  return out;
}

// ------------------------------------------------------------------ driver

/// A subcommand: its raw option strings, how they become canonical
/// arguments, and how the arguments are run. `operand` names the argument a
/// bare --in payload fills.
struct Command {
  std::string name;
  std::string operand;
  std::map<std::string, std::string> opts;
  bool stable = false;
  std::function<Json(Command&)> build;
  std::function<Outcome(const Json&, const Context&)> run;
  CLI::App* app = nullptr;

  const std::string& opt(const std::string& key) const {
    static const std::string empty;
    auto it = opts.find(key);
    return it == opts.end() ? empty : it->second;
  }
  std::string required(const std::string& key) const {
    if (opt(key).empty()) throw InputError(name + ": --" + key + " is required");
    return opt(key);
  }
};

int exit_code(const Error& e) {
  const std::string kind = e.kind();
  if (kind == "input") return 2;
  if (kind == "cutoff") return 3;
  return 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character polynomials and free FI^m-modules"};
  app.require_subcommand(1);
  bool as_json = false, as_csv = false;
  std::string out_path, in_path;
  Context ctx;
  app.add_flag("--json", as_json, "Canonical JSON report (default)");
  app.add_flag("--csv", as_csv, "CSV table of the result");
  app.add_option("--out", out_path, "Write the output to a file");
  app.add_option("--in", in_path, "Replay a report, or take its result as the primary operand");
  app.add_option("--max-coord", ctx.max_coord, "Largest coordinate for enumerations and oracles")
      ->envname("REPSTAB_MAX_COORD")
      ->check(CLI::Range(0, 12));

  std::vector<Command> commands;
  commands.reserve(12);
  auto command = [&](std::string name, std::string help, std::string operand,
                     std::vector<std::pair<std::string, std::string>> options) -> Command& {
    commands.push_back(Command{std::move(name), std::move(operand), {}, false, {}, {}, nullptr});
    Command& c = commands.back();
    c.app = app.add_subcommand(c.name, std::move(help));
    c.app->fallthrough();
    for (auto& [key, desc] : options) {
      c.opts[key];
      c.app->add_option("--" + key, c.opts[key], desc);
    }
    return c;
  };
  const std::string range_help = "Sizes: lo..hi or a JSON list";

  auto& indicator = command("indicator", "Evaluate binom(X, mu) on every class of a group", "",
                            {{"mu", "Multipartition JSON"}, {"group", "Group sizes"}});
  indicator.build = [](Command& c) {
    return Json{{"mu", json::to_json(json::multiclass_from(json::parse(c.required("mu"))))},
                {"group", json::to_json(parse_sizes(c.required("group")))}};
  };
  indicator.run = run_indicator;

  auto& mult = command("multiply", "Product of two character polynomials", "p",
                       {{"p", "Polynomial JSON or @file"}, {"q", "Polynomial JSON or @file"}});
  mult.build = [](Command& c) {
    return Json{{"p", json::to_json(parse_polynomial(c.required("p")))},
                {"q", json::to_json(parse_polynomial(c.required("q")))}};
  };
  mult.run = run_multiply;

  auto& inner_cmd = command("inner", "Inner products <P, Q> over S_d", "p",
                            {{"p", "Polynomial JSON or @file"}, {"q", "Polynomial JSON or @file"}, {"range", range_help}});
  inner_cmd.app->add_flag("--stable", inner_cmd.stable, "Only the stable value");
  inner_cmd.build = [](Command& c) {
    Json j{{"p", json::to_json(parse_polynomial(c.required("p")))},
           {"q", json::to_json(parse_polynomial(c.required("q")))}};
    j.update(mode_args(c.stable, c.opt("range"), ""));
    return j;
  };
  inner_cmd.run = run_inner;

  auto& expect_cmd = command("expect", "Expectations E[P] over S_d", "p",
                             {{"p", "Polynomial JSON or @file"}, {"range", range_help}});
  expect_cmd.app->add_flag("--stable", expect_cmd.stable, "Only the stable value");
  expect_cmd.build = [](Command& c) {
    Json j{{"p", json::to_json(parse_polynomial(c.required("p")))}};
    j.update(mode_args(c.stable, c.opt("range"), ""));
    return j;
  };
  expect_cmd.run = run_expect;

  auto& ind = command("ind-char", "Character polynomial of Ind_c(V)", "",
                      {{"degree", "Sizes c"}, {"rep", "trivial|sign|regular|irreducible:<json>|class-function JSON"}});
  ind.build = [](Command& c) {
    const SizeVector degree = parse_sizes(c.required("degree"));
    return Json{{"degree", json::to_json(degree)}, {"rep", json::to_json(parse_rep(c.required("rep"), degree))}};
  };
  ind.run = run_ind_char;

  auto& tens = command("tensor", "Tensor product of free modules", "m",
                       {{"m", "Module JSON or shorthand"}, {"n", "Module JSON or shorthand"}});
  tens.build = [](Command& c) {
    return Json{{"m", json::to_json(parse_module(c.required("m")))},
                {"n", json::to_json(parse_module(c.required("n")))}};
  };
  tens.run = run_tensor;

  auto& dual_cmd = command("dual", "Dual of a free module", "m", {{"m", "Module JSON or shorthand"}});
  dual_cmd.build = [](Command& c) { return Json{{"m", json::to_json(parse_module(c.required("m")))}}; };
  dual_cmd.run = run_dual;

  auto& coinv = command("coinv", "Dimensions of coinvariants", "m",
                        {{"m", "Module JSON or shorthand"}, {"d", "One size"}, {"range", range_help}});
  coinv.app->add_flag("--stable", coinv.stable, "Only the stable value");
  coinv.build = [](Command& c) {
    Json j{{"m", json::to_json(parse_module(c.required("m")))}};
    j.update(mode_args(c.stable, c.opt("range"), c.opt("d")));
    return j;
  };
  coinv.run = run_coinv;

  auto& sd = command("stable-decompose", "Stable irreducible multiplicities", "m", {{"m", "Module JSON or shorthand"}});
  sd.build = [](Command& c) { return Json{{"m", json::to_json(parse_module(c.required("m")))}}; };
  sd.run = run_stable_decompose;

  auto& ortho = command("orthonormality", "Gram matrix of the stable character polynomials", "",
                        {{"bound", "Sizes bound"}});
  ortho.build = [](Command& c) { return Json{{"bound", json::to_json(parse_sizes(c.required("bound")))}}; };
  ortho.run = run_orthonormality;

  auto& verify = command("verify", "Run an invariant suite", "", {{"suite", "symcore|ficombinat|charpoly|modcalc|stability|all"}});
  verify.build = [](Command& c) {
    const std::string suite = c.opt("suite").empty() ? "all" : c.opt("suite");
    if (suite != "all" && !suite_table().count(suite)) throw InputError("unknown suite '" + suite + "'");
    return Json{{"suite", suite}};
  };
  verify.run = run_verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << error_json("input", e.what()).dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  Command* selected = nullptr;
  for (auto& c : commands)
    if (c.app->parsed()) selected = &c;

  try {
    if (as_json && as_csv) throw InputError("choose one of --json and --csv");
    Json args;
    bool replayed = false;
    if (!in_path.empty()) {
      const Json doc = json::parse(read_file(in_path));
      const bool is_report = doc.is_object() && doc.contains("command") && doc.contains("result");
      if (is_report && doc.at("command").value("name", "") == selected->name) {
        args = doc.at("command").at("args");
        replayed = true;
      } else if (selected->operand.empty()) {
        throw InputError("--in for " + selected->name + " must be a report of the same command");
      } else {
        auto& slot = selected->opts[selected->operand];
        if (!slot.empty()) throw InputError("--in and --" + selected->operand + " both given");
        slot = payload_of(doc).dump();
      }
    }
    if (!replayed) args = selected->build(*selected);
    const Outcome outcome = selected->run(args, ctx);
    const Json command_json{{"name", selected->name}, {"args", args}};
    Json report{{"command", command_json},
                {"input_digest", fnv1a(selected->name + "\n" + args.dump())},
                {"max_coord", ctx.max_coord},
                {"result", outcome.result},
                {"verification", outcome.verification.to_json()}};
    emit(as_csv ? to_csv(outcome.table) : report.dump(2) + "\n", out_path);
    return outcome.verification.passed() ? 0 : 1;
  } catch (const Error& e) {
    std::cout << error_json(e.kind(), e.what()).dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cout << error_json("internal", e.what()).dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
