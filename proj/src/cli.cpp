#include "operad/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "operad/axioms.hpp"
#include "operad/presets.hpp"
#include "operad/representation.hpp"
#include "operad/termio.hpp"

namespace operad {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kDefaultCap = 6;

struct Source {
  std::string preset;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset, "built-in presentation (as, uas, com, ucom, ass, lie)");
    auto* f = cmd->add_option("--file", file, "presentation file (.opd)");
    p->excludes(f);
    f->excludes(p);
  }

  std::shared_ptr<const Presentation> load() const {
    if (!file.empty()) return load_presentation_file(file);
    if (preset.empty()) throw CLI::RequiredError("--preset or --file");
    return operad::preset(preset);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Semantic outcome of a command: exit code plus text and JSON renderings.
struct Outcome {
  int code = 0;
  std::string text;
  ordered_json json;
};

ordered_json word_json(const Permutation& p) { return p.word(); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in presented operads", "operad"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable output")->trigger_on_parse();

  Outcome outcome;
  std::function<void()> action;

  // perm block / perm partial
  auto* perm = app.add_subcommand("perm", "composition in the symmetries operad");
  perm->require_subcommand(1);
  auto* block = perm->add_subcommand("block", "sigma o (tau_1, ..., tau_n): perm block SIGMA TAU_1 ... TAU_n");
  // Raw arguments: option parsing would split `[a,b]` into separate values.
  block->allow_extras();
  block->callback([&] {
    action = [&] {
      const std::vector<std::string> block_args = block->remaining();
      if (block_args.size() < 2) throw CLI::ValidationError("perm block", "needs sigma and at least one block");
      const Permutation sigma = parse_permutation(block_args[0]);
      std::vector<Permutation> blocks;
      for (std::size_t k = 1; k < block_args.size(); ++k) blocks.push_back(parse_permutation(block_args[k]));
      const Permutation r = block_compose(sigma, blocks);
      outcome = {0, r.str(), {{"result", word_json(r)}}};
    };
  });
  auto* partial = perm->add_subcommand("partial", "sigma o_i tau");
  std::string partial_sigma, partial_tau;
  std::size_t partial_i = 0;
  partial->add_option("sigma", partial_sigma)->required();
  partial->add_option("i", partial_i)->required();
  partial->add_option("tau", partial_tau)->required();
  partial->callback([&] {
    action = [&] {
      const Permutation r = partial_compose(parse_permutation(partial_sigma), partial_i, parse_permutation(partial_tau));
      outcome = {0, r.str(), {{"result", word_json(r)}}};
    };
  });

  // dim
  auto* dim = app.add_subcommand("dim", "dimension of one arity of the quotient");
  Source dim_src;
  dim_src.attach(dim);
  std::size_t dim_arity = 0;
  std::size_t dim_cap = kDefaultCap;
  bool dim_free = false;
  dim->add_option("--arity", dim_arity)->required();
  auto* dim_cap_opt = dim->add_option("--max-arity", dim_cap, "raise the arity cap");
  dim->add_flag("--free", dim_free, "dimension of the free operad instead");
  dim->callback([&] {
    action = [&] {
      auto p = dim_src.load();
      if (dim_cap_opt->count() && dim_cap > kDefaultCap)
        err << "warning: arity cap raised to " << dim_cap << "; cost grows factorially\n";
      QuotientOptions opts{dim_cap};
      if (dim_free) {
        check_supported(*p, dim_arity, opts);
        const std::size_t d = basis_size(*p->signature(), dim_arity);
        outcome = {0, std::to_string(d), {{"presentation", p->name()}, {"arity", dim_arity}, {"free_dim", d}}};
        return;
      }
      QuotientComponent c(*p, dim_arity, opts);
      outcome = {0,
                 std::to_string(c.quotient_dim()),
                 {{"presentation", p->name()},
                  {"arity", dim_arity},
                  {"free_dim", c.free_dim()},
                  {"ideal_rank", c.ideal_rank()},
                  {"quotient_dim", c.quotient_dim()}}};
    };
  });

  // equal
  auto* equal = app.add_subcommand("equal", "equality of classes in the quotient");
  Source eq_src;
  eq_src.attach(equal);
  std::string lhs, rhs;
  std::size_t eq_cap = kDefaultCap;
  equal->add_option("lhs", lhs)->required();
  equal->add_option("rhs", rhs)->required();
  auto* eq_cap_opt = equal->add_option("--max-arity", eq_cap, "raise the arity cap");
  equal->callback([&] {
    action = [&] {
      auto p = eq_src.load();
      if (eq_cap_opt->count() && eq_cap > kDefaultCap)
        err << "warning: arity cap raised to " << eq_cap << "; cost grows factorially\n";
      const bool same = equal_mod_ideal(*p, parse_lincomb(lhs, p->signature()), parse_lincomb(rhs, p->signature()),
                                        QuotientOptions{eq_cap});
      outcome = {same ? 0 : 1, same ? "equal" : "not-equal", {{"equal", same}}};
    };
  });

  // check-rep
  auto* check = app.add_subcommand("check-rep", "check that a representation kills every relation");
  Source rep_src;
  rep_src.attach(check);
  std::string algebra, rep_file;
  auto* alg_opt = check->add_option("--algebra", algebra, "built-in algebra (cross3, mat2, sub, zero, scalar)");
  auto* file_opt = check->add_option("--rep-file", rep_file, "representation file (.rep)");
  alg_opt->excludes(file_opt);
  file_opt->excludes(alg_opt);
  check->callback([&] {
    action = [&] {
      auto p = rep_src.load();
      if (algebra.empty() && rep_file.empty()) throw CLI::RequiredError("--algebra or --rep-file");
      Representation r = algebra.empty() ? load_representation(read_file(rep_file), p)
                                         : rep_from_algebra(p, builtin_algebra(algebra));
      const Verdict v = check_relations(r);
      if (v.pass)
        outcome = {0, "PASS", {{"pass", true}}};
      else
        outcome = {1, "FAIL " + v.subject + " at " + v.witness,
                   {{"pass", false}, {"relation", v.subject}, {"witness", v.witness}}};
    };
  });

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "partial composition host o_i arg");
  Source comp_src;
  comp_src.attach(compose_cmd);
  std::string host, arg;
  std::size_t at = 0;
  compose_cmd->add_option("--host", host)->required();
  compose_cmd->add_option("--at", at)->required();
  compose_cmd->add_option("--arg", arg)->required();
  compose_cmd->callback([&] {
    action = [&] {
      auto p = comp_src.load();
      const Term h = parse_term(host, p->signature());
      if (at < 1 || at > h.arity())
        throw ShapeError("--at " + std::to_string(at) + " outside 1.." + std::to_string(h.arity()));
      const std::string t = print_term(circ(h, at, parse_term(arg, p->signature())));
      outcome = {0, t, {{"term", t}}};
    };
  });

  // act
  auto* act_cmd = app.add_subcommand("act", "right action of a permutation on a term");
  Source act_src;
  act_src.attach(act_cmd);
  std::string term_text, perm_text;
  act_cmd->add_option("--term", term_text)->required();
  act_cmd->add_option("--perm", perm_text)->required();
  act_cmd->callback([&] {
    action = [&] {
      auto p = act_src.load();
      const Term t = parse_term(term_text, p->signature());
      const std::string r = print_term(act(t, parse_permutation(perm_text, t.arity())));
      outcome = {0, r, {{"term", r}}};
    };
  });

  // axioms
  auto* axioms = app.add_subcommand("axioms", "randomized check of the operad laws on free terms");
  Source ax_src;
  ax_src.attach(axioms);
  AxiomConfig ax_cfg;
  axioms->add_option("--cases", ax_cfg.cases, "cases per law");
  axioms->add_option("--seed", ax_cfg.seed);
  auto* ax_cap_opt = axioms->add_option("--max-arity", ax_cfg.max_arity, "largest arity of a random term");
  axioms->callback([&] {
    action = [&] {
      auto p = ax_src.load();
      if (ax_cap_opt->count() && ax_cfg.max_arity > kDefaultCap)
        err << "warning: arity cap raised to " << ax_cfg.max_arity << "; cost grows factorially\n";
      const auto rows = run_axiom_suite(*p, ax_cfg);
      std::ostringstream os;
      os << std::left << std::setw(15) << "law" << std::setw(8) << "status" << std::setw(8) << "cases" << "failures";
      ordered_json laws = ordered_json::array();
      bool all = true;
      for (const auto& r : rows) {
        const char* status = !r.applicable ? "n/a" : (r.pass() ? "PASS" : "FAIL");
        all = all && r.pass();
        os << "\n" << std::setw(15) << r.law << std::setw(8) << status << std::setw(8) << r.cases << r.failures;
        ordered_json row{{"law", r.law}, {"status", status}, {"cases", r.cases}, {"failures", r.failures}};
        if (!r.pass()) row["counterexample"] = r.counterexample;
        laws.push_back(row);
      }
      for (const auto& r : rows)
        if (!r.pass()) os << "\n" << r.law << ": " << r.counterexample;
      outcome = {all ? 0 : 1, os.str(), {{"laws", laws}}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (action) action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (json_out)
    out << outcome.json.dump() << "\n";
  else
    out << outcome.text << "\n";
  return outcome.code;
}

}  // namespace operad
