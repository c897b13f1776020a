#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolfn/approx.hpp"
#include "boolfn/bounds.hpp"
#include "boolfn/chebyshev.hpp"
#include "boolfn/measures.hpp"
#include "boolfn/multilinear.hpp"
#include "boolfn/symmetrize.hpp"
#include "boolfn/truth_table.hpp"

namespace boolfn {
namespace {

using nlohmann::json;

json witness_json(const BsWitness& w) {
  return json{{"x", w.x}, {"blocks", w.blocks}};
}

json rationals_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

std::vector<TruthTable> collect_tables(const std::string& inline_tt, const std::string& file) {
  std::vector<TruthTable> tables;
  if (!inline_tt.empty()) tables.push_back(TruthTable::parse(inline_tt));
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open truth table file '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      tables.push_back(TruthTable::parse(line));
    }
  }
  if (tables.empty())
    throw std::invalid_argument("no truth table given; use --tt or --tt-file");
  return tables;
}

json symmetrization_json(const SymmetrizationResult& sym) {
  return json{{"values", rationals_json(sym.values)},
              {"poly", sym.poly.to_text()},
              {"binomial", binomial_to_text(forward_differences(sym.values))},
              {"source_degree", sym.source_degree},
              {"degree", sym.poly.degree()}};
}

json analyze_one(const TruthTable& f, bool with_approx) {
  SeparationReport rep = verify_separations(f, with_approx);
  json verdicts = json::object();
  for (const auto& [name, ok] : rep.verdicts) verdicts[name] = ok;
  json out{{"n", f.num_vars()},
           {"tt", f.hex()},
           {"d", rep.measures.d},
           {"s", rep.measures.s},
           {"bs", rep.measures.bs},
           {"D", rep.measures.D},
           {"bs_witness", witness_json(rep.measures.bs_witness)},
           {"symmetrization", symmetrization_json(rep.symmetrization)},
           {"verdicts", verdicts},
           {"all_ok", rep.all_ok()}};
  if (rep.deg13) out["deg13"] = *rep.deg13;
  if (rep.d2_over_bs) {
    out["ratios"] = json{{"d2_over_bs", to_string(*rep.d2_over_bs)},
                         {"d2_over_bs_approx", to_double(*rep.d2_over_bs)}};
  }
  return out;
}

int cmd_analyze(const std::string& tt, const std::string& tt_file, bool with_approx,
                std::ostream& out) {
  auto tables = collect_tables(tt, tt_file);
  json result;
  bool all_ok = true;
  if (tables.size() == 1) {
    result = analyze_one(tables[0], with_approx);
    all_ok = result["all_ok"].get<bool>();
  } else {
    result = json::array();
    for (const auto& f : tables) {
      result.push_back(analyze_one(f, with_approx));
      all_ok = all_ok && result.back()["all_ok"].get<bool>();
    }
  }
  out << result.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_sweep(int n, bool with_approx, int threads, std::ostream& out) {
  SweepReport rep = sweep(n, with_approx, threads);
  json distribution = json::array();
  for (const auto& [key, count] : rep.distribution)
    distribution.push_back(json{{"d", key.first}, {"bs", key.second}, {"count", count}});
  json by_bs = json::object();
  for (const auto& [bs, ratio] : rep.min_ratio_by_bs) by_bs[std::to_string(bs)] = to_string(ratio);
  json result{{"n", rep.n},
              {"functions", rep.function_count},
              {"threads", rep.threads_used},
              {"elapsed_seconds", rep.elapsed_seconds},
              {"violations", rep.violations},
              {"distribution", distribution},
              {"min_ratio_by_bs", by_bs}};
  if (rep.min_d2_over_bs) {
    result["min_d2_over_bs"] = to_string(*rep.min_d2_over_bs);
    result["min_d2_over_bs_approx"] = to_double(*rep.min_d2_over_bs);
    result["extremal"] = rep.extremal_hex;
  }
  out << result.dump(2) << "\n";
  return rep.violations.empty() ? 0 : 1;
}

int cmd_symmetrize(const std::string& tt, const std::string& tt_file, std::ostream& out) {
  auto tables = collect_tables(tt, tt_file);
  json result = json::array();
  for (const auto& f : tables) {
    json one = symmetrization_json(symmetrize(f));
    one["n"] = f.num_vars();
    one["tt"] = f.hex();
    result.push_back(std::move(one));
  }
  out << (result.size() == 1 ? result[0] : result).dump(2) << "\n";
  return 0;
}

int cmd_approx_degree(const std::string& tt, const std::string& tt_file, const std::string& eps,
                      bool symmetric, std::ostream& out) {
  Rational epsilon = parse_rational(eps);
  auto tables = collect_tables(tt, tt_file);
  json result = json::array();
  for (const auto& f : tables) {
    ApproxDegreeResult r =
        symmetric ? approx_degree_symmetric(f, epsilon) : approx_degree(f, epsilon);
    json one{{"n", f.num_vars()},
             {"tt", f.hex()},
             {"epsilon", to_string(r.epsilon)},
             {"degree", r.degree}};
    if (r.witness_univariate) one["witness"] = r.witness_univariate->to_text();
    if (r.witness_multilinear) one["witness"] = r.witness_multilinear->to_string();
    if (!r.infeasibility_note.empty()) one["infeasibility_note"] = r.infeasibility_note;
    result.push_back(std::move(one));
  }
  out << (result.size() == 1 ? result[0] : result).dump(2) << "\n";
  return 0;
}

int cmd_nae(int n, const std::string& c_text, std::ostream& out) {
  Rational c = c_text.empty() ? optimal_c(n).c + Rational(1, 100) : parse_rational(c_text);
  ChebyshevApproximant a = nae_approximant(n, c);
  Rational max_dev = 0;
  for (const auto& dev : a.deviations) max_dev = std::max(max_dev, dev);
  json result{{"n", a.n},
              {"c", to_string(a.c)},
              {"degree", a.degree},
              {"scale", to_string(a.scale)},
              {"scale_approx", to_double(a.scale)},
              {"poly", a.poly.to_text()},
              {"deviations", rationals_json(a.deviations)},
              {"max_deviation", to_string(max_dev)},
              {"max_deviation_approx", to_double(max_dev)}};
  out << result.dump(2) << "\n";
  return 0;
}

int cmd_lp_uniqueness(std::ostream& out) {
  UniquenessRecord rec = uniqueness_lp();
  auto status = [](const LpOutcome& o) {
    switch (o.status) {
      case LpStatus::Optimal: return "optimal";
      case LpStatus::Infeasible: return "infeasible";
      default: return "unbounded";
    }
  };
  json result{{"min_c4", rec.min_c4.status == LpStatus::Optimal ? to_string(rec.min_c4.value)
                                                                : status(rec.min_c4)},
              {"positive_c4", status(rec.positive_c4)},
              {"max_c4", rec.max_c4.status == LpStatus::Optimal ? to_string(rec.max_c4.value)
                                                                : status(rec.max_c4)},
              {"polynomial", rec.vertex_poly.to_text()},
              {"vertex", rationals_json(rec.min_c4.vertex)},
              {"consistent", rec.consistent}};
  out << result.dump(2) << "\n";
  return rec.consistent ? 0 : 1;
}

int cmd_threshold(int k, const std::string& c_text, const std::string& variant,
                  std::ostream& out) {
  ThresholdQuery q;
  q.k = k;
  q.c = parse_rational(c_text);
  if (variant == "exact")
    q.variant = ThresholdVariant::Exact;
  else if (variant == "approximate")
    q.variant = ThresholdVariant::Approximate;
  else
    throw std::invalid_argument("variant must be 'exact' or 'approximate'");

  json result{{"k", q.k},
              {"c", to_string(q.c)},
              {"variant", variant},
              {"x_star", threshold(q)}};
  if (q.variant == ThresholdVariant::Exact && q.k == 1 && q.c == Rational(3, 2))
    result["closed_form"] = "sqrt(10)-2";
  else if (q.variant == ThresholdVariant::Exact && q.k == 2 && q.c == 1)
    result["closed_form"] = "sqrt(6/5)";
  else if (q.variant == ThresholdVariant::Approximate && q.k == 2 && q.c == Rational(1, 15))
    result["closed_form"] = "sqrt(6/101)";
  out << result.dump(2) << "\n";
  return 0;
}

int cmd_compose(const std::string& outer_text, const std::string& inner_text, std::ostream& out) {
  TruthTable outer = TruthTable::parse(outer_text);
  TruthTable inner = TruthTable::parse(inner_text);
  TruthTable composed = compose(outer, inner);
  json result{{"n", composed.num_vars()},
              {"tt", composed.hex()},
              {"text", composed.to_text()}};
  out << result.dump(2) << "\n";
  return 0;
}

int cmd_reduce(const std::string& tt, const std::string& tt_file, std::ostream& out) {
  auto tables = collect_tables(tt, tt_file);
  json result = json::array();
  for (const auto& f : tables) {
    ReductionResult r = reduce_fully_sensitive(f);
    result.push_back(json{{"original", json{{"n", f.num_vars()}, {"tt", f.hex()}}},
                          {"reduced", json{{"n", r.function.num_vars()}, {"tt", r.function.hex()}}},
                          {"witness", witness_json(r.record.witness)},
                          {"complemented", r.record.complemented},
                          {"bs", static_cast<int>(r.record.witness.blocks.size())},
                          {"s_at_zero", sensitivity_at(r.function, 0)},
                          {"degree_original", degree(f)},
                          {"degree_reduced", degree(r.function)}});
  }
  out << (result.size() == 1 ? result[0] : result).dump(2) << "\n";
  return 0;
}

int cmd_extremal_quartic(std::ostream& out) {
  ExtremalQuarticRecord rec = extremal_quartic();
  json checks{{"values", rec.values_ok},
              {"tightness", rec.tightness_ok},
              {"integrality", rec.integrality_ok},
              {"fourth_derivative", rec.fourth_derivative_ok},
              {"binomial", rec.binomial_ok},
              {"derivative_at_zero", rec.derivative_ok}};
  json result{{"poly", rec.poly.to_text()},
              {"values", rationals_json(rec.values)},
              {"binomial", binomial_to_text(rec.binomial)},
              {"derivative_at_zero", to_string(rec.derivative_at_zero_value)},
              {"checks", checks},
              {"all_ok", rec.all_ok()}};
  out << result.dump(2) << "\n";
  return rec.all_ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic laboratory for Boolean function complexity measures"};
  app.require_subcommand(1);

  std::string tt, tt_file, eps = "1/3", c_text, variant = "exact";
  std::string outer_text, inner_text;
  bool with_approx = false, symmetric = false;
  int n = 0, k = 1, threads = 0;

  auto add_tt_options = [&](CLI::App* cmd) {
    cmd->add_option("--tt", tt, "truth table inline, e.g. \"n=3 tt=7e\"");
    cmd->add_option("--tt-file", tt_file, "file with one truth table per line");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "all measures and separation verdicts");
  add_tt_options(analyze);
  analyze->add_flag("--with-approx", with_approx, "also the approximate degree at eps = 1/3 (n <= 6)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify every function on n variables");
  sweep_cmd->add_option("-n", n, "variable count (<= 4, or <= 3 with --with-approx)")->required();
  sweep_cmd->add_flag("--with-approx", with_approx, "include approximate-degree verdicts");
  sweep_cmd->add_option("--threads", threads, "worker threads (default: BOOLFN_THREADS or cores)");

  CLI::App* symmetrize_cmd = app.add_subcommand("symmetrize", "weight profile as a polynomial");
  add_tt_options(symmetrize_cmd);

  CLI::App* approx_cmd = app.add_subcommand("approx-degree", "minimum degree of an eps-approximation");
  add_tt_options(approx_cmd);
  approx_cmd->add_option("--eps", eps, "band width, rational in (0, 1/2); default 1/3");
  approx_cmd->add_flag("--symmetric", symmetric, "univariate fast path (symmetric inputs only)");

  CLI::App* nae_cmd = app.add_subcommand("nae", "Chebyshev 1/3-approximant of NAE_n");
  nae_cmd->add_option("-n", n, "variable count (>= 5)")->required();
  nae_cmd->add_option("--c", c_text, "growth constant; default: smallest admissible + 1/100");

  app.add_subcommand("lp-uniqueness", "the degree-4 band program solved three ways");

  CLI::App* threshold_cmd = app.add_subcommand("threshold", "crossing of x^k = (1 - x^2/6) M c");
  threshold_cmd->add_option("--k", k, "derivative order >= 1")->required();
  threshold_cmd->add_option("--c", c_text, "derivative lower bound, rational")->required();
  threshold_cmd->add_option("--variant", variant, "exact (default) or approximate");

  CLI::App* compose_cmd = app.add_subcommand("compose", "substitute one function into another");
  compose_cmd->add_option("--outer", outer_text, "outer truth table")->required();
  compose_cmd->add_option("--inner", inner_text, "inner truth table")->required();

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "fully sensitive function on bs(f) variables");
  add_tt_options(reduce_cmd);

  app.add_subcommand("extremal-quartic", "the tight degree-4 band polynomial and its identities");

  std::vector<const char*> argv;
  argv.push_back("boolfn");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(tt, tt_file, with_approx, out);
    if (app.got_subcommand(sweep_cmd)) return cmd_sweep(n, with_approx, threads, out);
    if (app.got_subcommand(symmetrize_cmd)) return cmd_symmetrize(tt, tt_file, out);
    if (app.got_subcommand(approx_cmd)) return cmd_approx_degree(tt, tt_file, eps, symmetric, out);
    if (app.got_subcommand(nae_cmd)) return cmd_nae(n, c_text, out);
    if (app.got_subcommand("lp-uniqueness")) return cmd_lp_uniqueness(out);
    if (app.got_subcommand(threshold_cmd)) return cmd_threshold(k, c_text, variant, out);
    if (app.got_subcommand(compose_cmd)) return cmd_compose(outer_text, inner_text, out);
    if (app.got_subcommand(reduce_cmd)) return cmd_reduce(tt, tt_file, out);
    if (app.got_subcommand("extremal-quartic")) return cmd_extremal_quartic(out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  }
  err << "error: unknown command\n";
  return 2;
}

}  // namespace boolfn
