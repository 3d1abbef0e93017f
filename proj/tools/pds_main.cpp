// Command-line front end: construct, verify, and measure integer sets.
// Exit codes: 0 success/holds, 1 verification failed, 2 usage or parse
// error, 3 builder invariant violation.

#include <CLI11.hpp>

#include "pds/document.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pds;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

mpz_class parse_mpz_flag(const std::string& s, const char* what) {
  mpz_class v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  }
  return v;
}

// trace goes next to the set document unless an explicit path is given
std::string trace_path(const std::string& trace_flag, const std::string& out_flag) {
  if (!trace_flag.empty()) return trace_flag;
  if (out_flag.empty()) return {};
  const std::string suffix = ".json";
  if (out_flag.size() > suffix.size() &&
      out_flag.compare(out_flag.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return out_flag.substr(0, out_flag.size() - suffix.size()) + ".trace.json";
  }
  return out_flag + ".trace";
}

int report_outcome(const VerificationReport& rep) {
  std::cout << summary(rep) << "\n";
  return rep.holds ? 0 : 1;
}

struct ConstructArgs {
  std::string out, trace_out, growth = "linear", max_element, source;
  std::string p;
  long steps = 0;
  long upto = 0;
  std::string horizon;
  bool audit = false;
};

int run_construct_ruzsa(const ConstructArgs& args) {
  const mpz_class p = parse_mpz_flag(args.p, "--p");
  SetDocument doc;
  doc.elements = ruzsa_sidon(p);
  doc.meta = {{"construction", "ruzsa"}, {"p", p.get_str()}};
  emit(serialize(doc), args.out);
  if (const std::string tp = trace_path(args.trace_out, args.out); !tp.empty()) {
    PrunedSidonSet pruned = prune_to_bp(p);
    SetDocument bp;
    bp.elements = pruned.pruned;
    bp.meta = {{"construction", "ruzsa-pruned"},
               {"p", p.get_str()},
               {"raw_hash", content_hash(pruned.raw)},
               {"removed", pruned.removed_count.get_str()}};
    write_file(tp, serialize(bp));
  }
  return 0;
}

int run_construct_kruckeberg(const ConstructArgs& args) {
  KruckebergOptions options;
  options.audit = args.audit;
  if (!args.max_element.empty()) {
    options.max_element = parse_mpz_flag(args.max_element, "--max-element");
  }
  KruckebergTrace trace = build_kruckeberg(args.steps, options);
  SetDocument doc;
  doc.elements = trace.final_set;
  doc.meta = {{"construction", "kruckeberg"},
              {"steps", std::to_string(args.steps)},
              {"completed", std::to_string(trace.completed_k)},
              {"truncated", trace.truncated ? "true" : "false"},
              {"audit", args.audit ? "true" : "false"}};
  emit(serialize(doc), args.out);
  if (const std::string tp = trace_path(args.trace_out, args.out); !tp.empty()) {
    write_file(tp, serialize_trace(trace));
  }
  return 0;
}

int run_construct_greedy(const ConstructArgs& args) {
  GreedyTrace trace = build_greedy(args.upto);
  SetDocument doc;
  doc.elements = trace.final_set;
  doc.meta = {{"construction", "greedy"}, {"upto", std::to_string(args.upto)}};
  emit(serialize(doc), args.out);
  if (const std::string tp = trace_path(args.trace_out, args.out); !tp.empty()) {
    write_file(tp, serialize_trace(trace));
  }
  return 0;
}

int run_construct_theorem1(const ConstructArgs& args) {
  IntegerSet source;
  std::string source_desc;
  if (!args.p.empty()) {
    const mpz_class p = parse_mpz_flag(args.p, "--p");
    source = ruzsa_sidon(p);
    source_desc = "ruzsa:" + p.get_str();
  } else if (!args.source.empty()) {
    source = parse_set_document(read_file(args.source)).elements;
    source_desc = "file";
  } else {
    throw std::invalid_argument("theorem1 needs --p <prime> or --source <set.json>");
  }
  const GrowthFunction g = GrowthFunction::parse(args.growth);
  const mpz_class horizon =
      args.horizon.empty() ? mpz_class(3 * source.max())
                           : parse_mpz_flag(args.horizon, "--horizon");
  ConstructionTrace trace = build_b0(source, g, horizon);
  trace = build_a(std::move(trace), args.steps, args.audit);

  SetDocument doc;
  doc.elements = trace.final_set;
  doc.meta = {{"construction", "theorem1"},
              {"source", source_desc},
              {"g", g.spec},
              {"horizon", horizon.get_str()},
              {"steps", std::to_string(args.steps)},
              {"audit", args.audit ? "true" : "false"}};
  emit(serialize(doc), args.out);
  if (const std::string tp = trace_path(args.trace_out, args.out); !tp.empty()) {
    write_file(tp, serialize_trace(trace));
  }
  return 0;
}

int run_stats_counting(const std::string& set_path, const std::vector<std::string>& xs,
                       const std::string& from, const std::string& to,
                       const std::string& step) {
  const SetDocument doc = parse_set_document(read_file(set_path));
  std::vector<mpz_class> points;
  for (const auto& x : xs) points.push_back(parse_mpz_flag(x, "--x"));
  if (!from.empty() || !to.empty()) {
    if (from.empty() || to.empty()) {
      throw std::invalid_argument("--from and --to must be given together");
    }
    const mpz_class a = parse_mpz_flag(from, "--from");
    const mpz_class b = parse_mpz_flag(to, "--to");
    const mpz_class s = step.empty() ? mpz_class(1) : parse_mpz_flag(step, "--step");
    if (s < 1) throw std::invalid_argument("--step must be positive");
    for (mpz_class x = a; x <= b; x += s) points.push_back(x);
  }
  std::cout << "x,A(x)\n";
  for (const auto& x : points) {
    std::cout << x.get_str() << "," << counting_function(doc.elements, x).get_str() << "\n";
  }
  return 0;
}

int run_stats_tseq(const std::string& trace_path) {
  const GreedyTrace trace = parse_greedy_trace(read_file(trace_path));
  std::cout << "n,t_n,ratio,decimal\n";
  for (const auto& row : t_growth_report(trace)) {
    std::cout << row.n << "," << row.t.get_str() << ","
              << format_ratio(row.t, row.n_cubed) << "," << decimal6(row.t, row.n_cubed)
              << "\n";
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"perfect difference set construction and verification"};
  app.require_subcommand(1);

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build a set and optionally its trace");
  construct->require_subcommand(1);
  ConstructArgs cargs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cargs.out, "write the set document here (default: stdout)");
    sub->add_option("--trace", cargs.trace_out, "write the trace document here");
  };

  auto* c_ruzsa = construct->add_subcommand("ruzsa", "modular Sidon set for a prime");
  c_ruzsa->add_option("--p", cargs.p, "odd prime")->required();
  add_common(c_ruzsa);

  auto* c_kruck = construct->add_subcommand("kruckeberg", "block recursion set");
  c_kruck->add_option("--steps", cargs.steps, "number of steps K (>= 2)")->required();
  c_kruck->add_flag("--audit", cargs.audit, "verify union-lemma hypotheses per adjunction");
  c_kruck->add_option("--max-element", cargs.max_element, "element budget (stop early)");
  add_common(c_kruck);

  auto* c_greedy = construct->add_subcommand("greedy", "pair-greedy difference prefix");
  c_greedy->add_option("--upto", cargs.upto, "cover differences 1..N")->required();
  add_common(c_greedy);

  auto* c_t1 = construct->add_subcommand("theorem1", "dilate-prune-adjoin construction");
  c_t1->add_option("--p", cargs.p, "source the Sidon set from this prime");
  c_t1->add_option("--source", cargs.source, "source Sidon set document");
  c_t1->add_option("--g", cargs.growth, "growth function: linear|affine:c|scaled:c");
  c_t1->add_option("--steps", cargs.steps, "number of adjoin steps K")->required();
  c_t1->add_option("--horizon", cargs.horizon, "removal horizon (default 3*max of source)");
  c_t1->add_flag("--audit", cargs.audit, "verify per-step difference freshness");
  add_common(c_t1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a predicate; exit 0 iff it holds");
  verify->require_subcommand(1);
  std::string v_set, v_set2, v_trace, v_growth = "linear";
  long v_upto = 0, v_kmax = 0;
  std::vector<std::string> v_xs;

  auto* v_sidon = verify->add_subcommand("sidon", "all nonzero differences distinct");
  v_sidon->add_option("set", v_set, "set document")->required();

  auto* v_prefix = verify->add_subcommand("pds-prefix", "perfect difference prefix on [1,N]");
  v_prefix->add_option("set", v_set, "set document")->required();
  v_prefix->add_option("--upto", v_upto, "prefix bound N")->required();

  auto* v_cov = verify->add_subcommand("coverage", "all of [1,N] represented");
  v_cov->add_option("set", v_set, "set document")->required();
  v_cov->add_option("--upto", v_upto, "bound N")->required();

  auto* v_union = verify->add_subcommand("union-lemma", "union-lemma hypotheses");
  v_union->add_option("set1", v_set, "first set document")->required();
  v_union->add_option("set2", v_set2, "second set document")->required();

  auto* v_uprops = verify->add_subcommand("u-properties", "auxiliary sequence lemma");
  v_uprops->add_option("--g", v_growth, "growth function: linear|affine:c|scaled:c");
  v_uprops->add_option("--kmax", v_kmax, "check blocks 1..kmax")->required();

  auto* v_bounds = verify->add_subcommand("removal-bounds", "removal-count bounds");
  v_bounds->add_option("trace", v_trace, "theorem1 trace document")->required();
  v_bounds->add_option("--x", v_xs, "evaluation points (default: horizon/4, /2, full)");

  // ---- stats ----
  auto* stats = app.add_subcommand("stats", "CSV measurements on stdout");
  stats->require_subcommand(1);
  std::string s_input, s_from, s_to, s_step;
  std::vector<std::string> s_xs;

  auto* s_count = stats->add_subcommand("counting", "rows x,A(x)");
  s_count->add_option("set", s_input, "set document")->required();
  s_count->add_option("--x", s_xs, "evaluation points");
  s_count->add_option("--from", s_from, "range start");
  s_count->add_option("--to", s_to, "range end (inclusive)");
  s_count->add_option("--step", s_step, "range step (default 1)");

  auto* s_tseq = stats->add_subcommand("tseq", "rows n,t_n,ratio,decimal");
  s_tseq->add_option("trace", s_input, "greedy trace document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? 0 : 2;
  }

  if (c_ruzsa->parsed()) return run_construct_ruzsa(cargs);
  if (c_kruck->parsed()) return run_construct_kruckeberg(cargs);
  if (c_greedy->parsed()) return run_construct_greedy(cargs);
  if (c_t1->parsed()) return run_construct_theorem1(cargs);

  if (v_sidon->parsed()) {
    return report_outcome(is_sidon(parse_set_document(read_file(v_set)).elements));
  }
  if (v_prefix->parsed()) {
    return report_outcome(
        is_perfect_diff_prefix(parse_set_document(read_file(v_set)).elements, v_upto));
  }
  if (v_cov->parsed()) {
    return report_outcome(coverage(parse_set_document(read_file(v_set)).elements, v_upto));
  }
  if (v_union->parsed()) {
    return report_outcome(union_lemma_check(parse_set_document(read_file(v_set)).elements,
                                            parse_set_document(read_file(v_set2)).elements));
  }
  if (v_uprops->parsed()) {
    return report_outcome(check_u_properties(GrowthFunction::parse(v_growth), v_kmax));
  }
  if (v_bounds->parsed()) {
    const ConstructionTrace trace = parse_theorem1_trace(read_file(v_trace));
    std::vector<mpz_class> points;
    for (const auto& x : v_xs) points.push_back(parse_mpz_flag(x, "--x"));
    if (points.empty()) {
      points = {trace.horizon / 4, trace.horizon / 2, trace.horizon};
    }
    int worst = 0;
    for (const auto& x : points) {
      worst = std::max(worst, report_outcome(removal_bound_check(trace, x)));
    }
    return worst;
  }

  if (s_count->parsed()) return run_stats_counting(s_input, s_xs, s_from, s_to, s_step);
  if (s_tseq->parsed()) return run_stats_tseq(s_input);

  return 2;  // unreachable: require_subcommand enforces a choice
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pds::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
