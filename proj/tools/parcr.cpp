// parcr - exact combinatorics of parabolic CR pairs at the root-system level.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "parcr/crinv.hpp"
#include "parcr/diagram.hpp"
#include "parcr/orders.hpp"
#include "parcr/sweep.hpp"

using namespace parcr;
using njson = nlohmann::ordered_json;

namespace {

ParsedSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) fail(ErrorKind::ValidationError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

njson input_summary(const ParsedSpec& s) {
  njson j;
  j["type"] = type_string(s.rs->components());
  njson basis = njson::array();
  for (int b : s.chamber.simples) basis.push_back(root_name(*s.rs, b));
  j["basis"] = basis;
  njson cr = njson::array();
  for (int k : crosses(s.q, s.chamber)) cr.push_back(k + 1);
  j["crosses"] = cr;
  return j;
}

njson order_json(const OrderValue& v) {
  if (v.is_finite()) return njson(v.v);
  return njson("inf");
}

njson tri_json(TriState t) {
  switch (t) {
    case TriState::True: return njson(true);
    case TriState::False: return njson(false);
    default: return njson(nullptr);
  }
}

njson flags_json(const Classification& c) {
  njson f;
  f["trivial"] = c.trivial;
  f["totally_real"] = c.totally_real;
  f["totally_complex"] = c.totally_complex;
  f["fundamental"] = c.fundamental;
  f["integrable"] = c.integrable;
  f["one_nondegenerate"] = c.one_nondegenerate;
  f["levi_nondegenerate"] = c.levi_nondegenerate;
  f["polarized"] = c.polarized;
  f["maximal"] = c.maximal;
  f["weakly_integrable"] = c.weakly_integrable;
  f["minimal_type"] = c.minimal_type;
  f["contact_nondegenerate"] = tri_json(c.contact_nondegenerate);
  return f;
}

void print_json(const njson& j, bool pretty) {
  if (!pretty) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::function<void(const njson&, std::string)> walk = [&](const njson& v, std::string prefix) {
    if (v.is_object() && !v.empty()) {
      for (auto& [k, val] : v.items()) walk(val, prefix.empty() ? k : prefix + "." + k);
    } else {
      std::cout << prefix << ": " << v.dump() << "\n";
    }
  };
  walk(j, "");
}

njson crosses_via_admissible(const RootSystem& rs, const ParabolicSet& p) {
  Chamber c = admissible_chamber(rs, p);
  njson j;
  njson basis = njson::array();
  for (int b : c.simples) basis.push_back(root_name(rs, b));
  j["basis"] = basis;
  njson cr = njson::array();
  for (int k : crosses(p, c)) cr.push_back(k + 1);
  j["crosses"] = cr;
  return j;
}

int run_analyze(const std::string& path, bool pretty) {
  auto s = load_spec(path);
  auto pair = s.pair();
  njson j;
  j["input"] = input_summary(s);
  auto cls = classify(pair);
  j["flags"] = flags_json(cls);
  j["dims"] = njson{{"dim_r", cls.dims.dim_r},
                    {"cr_dim", cls.dims.cr_dim},
                    {"cr_codim", cls.dims.cr_codim}};
  auto levi = levi_order(pair);
  auto con = contact_order(pair);
  njson orders;
  orders["levi"] = order_json(levi.sup);
  orders["levi_vacuous"] = levi.vacuous;
  orders["contact"] = order_json(con.sup);
  orders["contact_vacuous"] = con.vacuous;
  orders["depth"] = order_json(depth(pair).depth);
  j["orders"] = orders;
  print_json(j, pretty);
  return 0;
}

int run_reduce(const std::string& kind, const std::string& path, bool pretty) {
  auto s = load_spec(path);
  auto pair = s.pair();
  ReductionReport rep;
  if (kind == "levi")
    rep = levi_nondeg_reduction(pair);
  else if (kind == "fundamental")
    rep = fundamental_reduction(pair);
  else if (kind == "polarize")
    rep = polarize(pair);
  else
    rep = strengthen_to_maximal(pair);
  njson j;
  j["input"] = input_summary(s);
  j["reduction"] = kind;
  njson basis = njson::array();
  for (int b : rep.chamber.simples) basis.push_back(root_name(*s.rs, b));
  j["chamber_basis"] = basis;
  auto plus1 = [](const std::vector<int>& v) {
    njson a = njson::array();
    for (int x : v) a.push_back(x + 1);
    return a;
  };
  j["crosses_before"] = plus1(rep.crosses_before);
  j["crosses_after"] = plus1(rep.crosses_after);
  if (!rep.dropped_nodes.empty()) j["dropped"] = plus1(rep.dropped_nodes);
  if (!rep.added_nodes.empty()) j["added"] = plus1(rep.added_nodes);
  if (kind == "fundamental") j["fibre_nodes"] = plus1(rep.fibre_nodes);
  j["output"] = crosses_via_admissible(*s.rs, rep.output);
  print_json(j, pretty);
  return 0;
}

int run_orders(const std::string& path, bool pretty) {
  auto s = load_spec(path);
  auto rep = levi_order(s.pair());
  njson j;
  for (auto& [root, v] : rep.by_root) j[root_name(*s.rs, root)] = order_json(v);
  j["sup"] = order_json(rep.sup);
  if (rep.vacuous) j["vacuous"] = true;
  if (!rep.kernel_infinite.empty()) {
    njson k = njson::array();
    for (int r : rep.kernel_infinite) k.push_back(root_name(*s.rs, r));
    j["kernel"] = k;
  }
  print_json(j, pretty);
  return 0;
}

int run_depth(const std::string& path, bool pretty) {
  auto s = load_spec(path);
  auto rep = depth_on_chamber(s.pair(), s.chamber);
  njson j;
  j["depth"] = order_json(rep.depth);
  njson g = njson::array();
  for (auto& v : rep.component_gamma) g.push_back(order_json(v));
  j["gamma_indices"] = g;
  njson by;
  for (int i = 0; i < s.rs->num_roots(); ++i)
    by[root_name(*s.rs, i)] = order_json(rep.by_root[i]);
  j["by_root"] = by;
  print_json(j, pretty);
  return 0;
}

int run_foliations(const std::string& path, size_t budget, bool pretty) {
  auto s = load_spec(path);
  bool truncated = false;
  auto fols = enumerate_foliations(s.pair(), budget, &truncated);
  njson j;
  j["input"] = input_summary(s);
  j["count"] = fols.size();
  j["truncated"] = truncated;
  njson list = njson::array();
  for (auto& p : fols) list.push_back(crosses_via_admissible(*s.rs, p));
  j["foliations"] = list;
  print_json(j, pretty);
  return truncated ? 2 : 0;
}

int run_scan_weyl(const std::string& path, size_t budget, bool pretty) {
  auto s = load_spec(path);
  auto rep = weyl_orbit_scan(s.pair(), budget);
  njson j;
  j["input"] = input_summary(s);
  j["orbit_size"] = rep.orbit_size;
  j["min_dim_r"] = rep.min_dim_r;
  j["minimizer_count"] = rep.minimizers.size();
  j["all_minimizers_minimal_type"] = rep.all_minimizers_minimal_type;
  njson list = njson::array();
  for (auto& m : rep.minimizers) {
    auto p = ParabolicSet::from_members(*s.rs, m.members);
    list.push_back(crosses_via_admissible(*s.rs, p));
  }
  j["minimizers"] = list;
  print_json(j, pretty);
  return 0;
}

int run_scan_sweep(const std::string& type, size_t aut_budget, bool oracles, bool bounds) {
  auto rs = RootSystem::build(parse_type_string(type));
  SweepOptions opt;
  opt.aut_budget = aut_budget;
  opt.check_oracles = oracles;
  opt.check_bounds = bounds;
  auto rep = sweep_system(rs, opt);
  std::cout << sweep_csv_header() << "\n";
  for (auto& row : rep.rows) std::cout << sweep_csv_row(row) << "\n";
  if (!rep.failures.empty()) {
    for (auto& f : rep.failures)
      std::cerr << "violation: " << f.name << " on " << f.witness << "\n";
    return 1;
  }
  return 0;
}

int run_render(const std::string& fmt, const std::string& path) {
  auto s = load_spec(path);
  if (fmt == "text")
    std::cout << emit_text(s);
  else if (fmt == "dot")
    std::cout << emit_dot(s);
  else
    std::cout << emit_json(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "parcr: invariants of parabolic CR pairs from root systems with involutions\n"
      "\n"
      "Spec files (.crs) are line oriented, '#' starts a comment:\n"
      "  type: B3                       root system, direct sums as B2+B2\n"
      "  basis: e1-e2, e2-e3, e3        optional; defaults to the canonical chamber\n"
      "  involution: e1->-e3, e2->-e2   signed clauses; unnamed coordinates stay fixed\n"
      "  matrix: <d*d ints> [/ den]     alternative involution form, row-major\n"
      "  cross: 2, 3                    crossed nodes of the basis, 1-based\n"
      "  paint: +, i, i                 optional check: o real, i imaginary (i* marked),\n"
      "                                 + / - complex with positive/negative conjugate\n"
      "  arrows: 1-3                    optional check of the conjugation arrows\n"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  std::string path, reduce_kind, scan_mode, sweep_type, render_fmt;
  size_t weyl_budget = 10000, foliation_budget = 4096;
  bool no_oracles = false, no_bounds = false;

  auto* analyze = app.add_subcommand("analyze", "classification flags, dimensions and orders");
  analyze->add_option("file", path, "spec file (.crs)")->required();

  auto* reduce = app.add_subcommand("reduce", "levi | fundamental | polarize | maximal");
  reduce->add_option("kind", reduce_kind, "reduction kind")
      ->required()
      ->check(CLI::IsMember({"levi", "fundamental", "polarize", "maximal"}));
  reduce->add_option("file", path, "spec file")->required();

  auto* orders = app.add_subcommand("orders", "Levi orders per root");
  orders->add_option("file", path, "spec file")->required();

  auto* depthc = app.add_subcommand("depth", "H-indices and depth");
  depthc->add_option("file", path, "spec file")->required();

  auto* fol = app.add_subcommand("foliations",
                                 "parabolic sets between the isotropy and Q u s(Q)");
  fol->add_option("file", path, "spec file")->required();
  fol->add_option("--foliation-budget", foliation_budget, "maximum number of sets returned");

  auto* scan = app.add_subcommand("scan", "weyl <file> | sweep --type T");
  scan->add_option("mode", scan_mode, "weyl or sweep")
      ->required()
      ->check(CLI::IsMember({"weyl", "sweep"}));
  scan->add_option("file", path, "spec file (weyl mode)");
  scan->add_option("--type", sweep_type, "root system type (sweep mode), e.g. B3");
  scan->add_option("--weyl-budget", weyl_budget, "Weyl/automorphism enumeration budget");
  scan->add_flag("--no-oracles", no_oracles, "skip the reduction-oracle cross checks");
  scan->add_flag("--no-bounds", no_bounds, "skip the order/depth bound checks");

  auto* render = app.add_subcommand("render", "re-emit a spec as text, DOT or JSON");
  std::string render_a, render_b;
  render->add_option("format", render_a, "text | dot | json, then the spec file");
  render->add_option("file", render_b, "spec file");
  bool fmt_text = false, fmt_dot = false, fmt_json = false;
  render->add_flag("--text", fmt_text, "text format");
  render->add_flag("--dot", fmt_dot, "DOT format");
  render->add_flag("--json", fmt_json, "JSON format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 64;
  }

  try {
    if (*analyze) return run_analyze(path, pretty);
    if (*reduce) return run_reduce(reduce_kind, path, pretty);
    if (*orders) return run_orders(path, pretty);
    if (*depthc) return run_depth(path, pretty);
    if (*fol) return run_foliations(path, foliation_budget, pretty);
    if (*scan) {
      if (scan_mode == "weyl") {
        if (path.empty()) {
          std::cerr << "scan weyl needs a spec file\n";
          return 64;
        }
        return run_scan_weyl(path, weyl_budget, pretty);
      }
      if (sweep_type.empty()) {
        std::cerr << "scan sweep needs --type\n";
        return 64;
      }
      return run_scan_sweep(sweep_type, weyl_budget, !no_oracles, !no_bounds);
    }
    if (*render) {
      render_fmt = fmt_dot ? "dot" : (fmt_json ? "json" : (fmt_text ? "text" : ""));
      path = render_b;
      if (render_fmt.empty()) {
        render_fmt = render_a;  // positional form: render dot file.crs
      } else if (path.empty()) {
        path = render_a;  // flag form: render --dot file.crs
      }
      if (render_fmt != "text" && render_fmt != "dot" && render_fmt != "json") {
        std::cerr << "render needs a format: text | dot | json (or --text/--dot/--json)\n";
        return 64;
      }
      if (path.empty()) {
        std::cerr << "render needs a spec file\n";
        return 64;
      }
      return run_render(render_fmt, path);
    }
  } catch (const Error& e) {
    njson diag;
    diag["error"] = e.what();
    diag["kind"] = e.kind == ErrorKind::BudgetExceeded ? "budget" : "validation";
    std::cerr << diag.dump() << "\n";
    return e.kind == ErrorKind::BudgetExceeded ? 2 : 1;
  }
  return 64;
}
