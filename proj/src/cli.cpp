#include "tornheim/cli.hpp"

#include "tornheim/engine.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ostream>

namespace tornheim {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDisplayDigits = 30;

struct Options {
  bool json = false;
  int prec = 50;
  double tol = 0;  // 0: 1e-30, loosened to 10^-(prec-10) at low precision
  int weight_cap = 14;
};

NumericConfig numeric_config(const Options& o) {
  NumericConfig cfg;
  cfg.precision_digits = o.prec;
  cfg.tolerance = o.tol > 0 ? static_cast<long double>(o.tol) : std::max(1e-30L, std::pow(10.0L, -(o.prec - 10)));
  cfg.validate();
  return cfg;
}

SumDescriptor parse_descriptor(const std::vector<std::string>& words) {
  std::string text;
  for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
  return SumDescriptor::parse(text);
}

Json basis_json(const Reduction& r) {
  Json b = Json::array();
  for (const auto& [u, c] : r.basis) b.push_back({{"sum", u.str()}, {"coefficient", c.str()}});
  return b;
}

Json record(const std::string& query, const Reduction* r, const std::string& numeric, int digits) {
  Json j;
  j["query"] = query;
  j["status"] = r == nullptr || r->is_closed() ? "closed" : "basis";
  j["zeta_expr"] = r ? r->value.render() : std::string();
  j["basis"] = r ? basis_json(*r) : Json::array();
  j["numeric"] = numeric;
  j["precision_digits"] = digits;
  return j;
}

Json error_record(const std::string& query, const std::string& msg) {
  return Json{{"query", query}, {"status", "error"}, {"error", msg}};
}

EngineConfig engine_config(const Options& o) {
  EngineConfig cfg;
  cfg.weight_cap = o.weight_cap;
  cfg.numeric = numeric_config(o);
  return cfg;
}

void print_reduction(std::ostream& out, const SumDescriptor& d, const Reduction& r, const std::string& numeric) {
  out << d.str() << " = " << r.render() << "\n";
  out << "  status: " << (r.is_closed() ? "closed" : "basis") << "\n";
  out << "  numeric: " << numeric << "\n";
}

int cmd_reduce(const Options& o, const std::vector<std::string>& words, std::ostream& out) {
  const SumDescriptor d = parse_descriptor(words);
  d.require_convergent();
  RelationEngine engine(engine_config(o));
  const Reduction r = engine.reduce(d);
  const std::string num = engine.format(engine.numeric(d), kDisplayDigits);
  if (o.json)
    out << record(d.str(), &r, num, kDisplayDigits).dump() << "\n";
  else
    print_reduction(out, d, r, num);
  return 0;
}

int cmd_eval(const Options& o, const std::vector<std::string>& words, std::ostream& out) {
  Options hi = o;
  hi.prec = o.prec + 12;
  hi.tol = std::pow(10.0, -o.prec - 2);
  Evaluator ev(numeric_config(hi));
  const bool descriptor = !words.empty() && (words[0][0] == 'E' || words[0][0] == 'T');
  std::string query, numeric;
  std::optional<Reduction> r;
  {
    PrecisionGuard g(ev.working_digits());
    if (descriptor) {
      const SumDescriptor d = parse_descriptor(words);
      d.require_convergent();
      query = d.str();
      numeric = ev.format(ev.descriptor(d), o.prec);
      if (o.json) {
        if (d.weight() <= o.weight_cap) {
          r = RelationEngine(engine_config(o)).reduce(d);
        } else {
          // beyond the cap the sum is its own basis element
          Reduction self;
          self.target = d.canonical();
          self.status = Reduction::Status::basis;
          self.basis[d] = Rational(1);
          r = self;
        }
      }
    } else {
      std::string text;
      for (const auto& w : words) text += w;
      const ZetaExpr e = ZetaExpr::parse(text);
      query = e.render();
      Reduction z;
      z.value = e;
      r = z;
      numeric = ev.format(ev.zeta_expr(e), o.prec);
    }
  }
  if (o.json)
    out << record(query, r ? &*r : nullptr, numeric, o.prec).dump() << "\n";
  else
    out << query << " = " << numeric << "\n";
  return 0;
}

int cmd_verify(const Options& o, const std::string& id, int mu_max, bool failures_only, std::ostream& out,
               std::ostream& err) {
  Grid grid;
  if (mu_max > 0) grid.mu_max = grid.n_max = mu_max;
  const NumericConfig cfg = numeric_config(o);
  RunSummary s;
  if (id == "all") {
    s = run_all(grid, cfg);
  } else {
    find_identity(id);
    s.reports.push_back(run(id, grid, cfg));
    s.seconds = s.reports.back().seconds;
  }
  if (o.json)
    write_json_lines(out, s);
  else
    write_text(out, s, failures_only);
  // timings vary between runs, so they stay off stdout
  for (const auto& r : s.reports) err << "time " << r.id << " " << r.seconds << "s\n";
  err << "time total " << s.seconds << "s\n";
  return s.ok() ? 0 : 1;
}

int cmd_table(const Options& o, int w, std::ostream& out) {
  if (w < 3) throw DomainError("weight must be >= 3");
  RelationEngine engine(engine_config(o));
  const WeightSolution& sol = engine.solve(w);
  if (!o.json) out << "weight " << w << ": " << sol.unknowns.size() << " unknowns, " << sol.basis.size() << " free\n";
  for (const auto& d : sol.unknowns) {
    const Reduction& r = sol.at(d);
    const std::string num = engine.format(engine.numeric(d), kDisplayDigits);
    if (o.json)
      out << record(d.str(), &r, num, kDisplayDigits).dump() << "\n";
    else
      print_reduction(out, d, r, num);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric evaluation of Tornheim double series and linear Euler sums", "tornheim"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--prec", o.prec, "working precision in decimal digits")->check(CLI::Range(15, 2000));
  app.add_option("--tol", o.tol, "numeric tolerance (default 1e-30)")->check(CLI::PositiveNumber);
  app.add_option("--weight-cap", o.weight_cap, "largest weight the relation engine solves")->check(CLI::Range(3, 30));

  std::vector<std::string> reduce_args, eval_args;
  auto* reduce = app.add_subcommand("reduce", "reduce E m n or T r s t to zeta values");
  reduce->add_option("sum", reduce_args, "E m n | T r s t")->required()->allow_extra_args();
  auto* eval = app.add_subcommand("eval", "numeric value of a sum or a zeta expression");
  eval->add_option("expr", eval_args, "E m n | T r s t | zeta expression such as 2*z(3)")->required();
  std::string verify_id;
  int mu_max = 0;
  bool failures_only = false;
  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("id", verify_id, "registry id or 'all'")->required();
  verify->add_option("--mu-max", mu_max, "largest mu and N in the grid")->check(CLI::Range(1, 200));
  verify->add_flag("--failures-only", failures_only, "print only failing tuples");
  int weight = 0;
  auto* table = app.add_subcommand("table", "every reduction at one weight");
  table->add_option("--weight", weight, "weight")->required();
  for (auto* sub : {reduce, eval, verify, table}) {
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--prec", o.prec, "working precision in decimal digits")->check(CLI::Range(15, 2000));
    sub->add_option("--tol", o.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string query;
  for (const auto& a : reduce->parsed() ? reduce_args : eval_args) query += (query.empty() ? "" : " ") + a;
  try {
    if (reduce->parsed()) return cmd_reduce(o, reduce_args, out);
    if (eval->parsed()) return cmd_eval(o, eval_args, out);
    if (verify->parsed()) return cmd_verify(o, verify_id, mu_max, failures_only, out, err);
    return cmd_table(o, weight, out);
  } catch (const SolverFault& e) {
    if (o.json) out << error_record(query, e.what()).dump() << "\n";
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (o.json) out << error_record(query, e.what()).dump() << "\n";
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace tornheim
