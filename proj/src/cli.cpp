#include "zgu/cli.hpp"

#include <CLI11.hpp>
#include <memory>
#include <optional>

#include "zgu/error.hpp"
#include "zgu/io.hpp"
#include "zgu/obstructions.hpp"
#include "zgu/pipeline.hpp"

namespace zgu {

namespace {

struct Config {
  std::string group;
  std::string table;
  std::string family;
  long box_bound = kDefaultBoxBound;
  std::string output = "text";
  long p = 0;
  long order = 0;
};

struct Inputs {
  PermGroup group;
  std::optional<GroupContext> ctx;
};

CharacterTable load_table(const Config &cfg) {
  if (!cfg.family.empty()) {
    const auto colon = cfg.family.find(':');
    if (colon == std::string::npos)
      throw Error("ParseError", "--family expects kind:order, e.g. quaternion:8");
    long n = 0;
    try {
      n = std::stol(cfg.family.substr(colon + 1));
    } catch (const std::exception &) {
      throw Error("ParseError", "--family order is not an integer");
    }
    return family_table(parse_family_kind(cfg.family.substr(0, colon)), n);
  }
  std::string name = cfg.table;
  if (name.empty()) {
    // a bundled group name doubles as the bundled table name
    if (cfg.group.empty() || std::filesystem::exists(cfg.group))
      throw Error("ParseError", "--table or --family is required");
    name = cfg.group;
  }
  auto t = table_from_json(read_json_file(resolve_data(name, "tables")));
  return t;
}

PermGroup load_group(const Config &cfg) {
  if (cfg.group.empty())
    throw Error("ParseError", "--group is required");
  const auto path = resolve_data(cfg.group, "groups");
  PermGroup g = group_from_json(read_json_file(path));
  if (g.name().empty())
    g.set_name(path.stem().string());
  return g;
}

Json header_json(const Inputs &in) {
  Json h = {{"group", in.group.name()}, {"order", in.group.order()}, {"degree", in.group.degree()}};
  if (in.ctx) {
    const auto &m = in.ctx->matching;
    h["table"] = in.ctx->table.name;
    h["classes"] = in.ctx->classes.size();
    h["consistent_matchings"] = m.consistent_assignments;
    Json amb = Json::array();
    for (const auto &grp : m.ambiguous_classes) {
      Json names = Json::array();
      for (std::size_t c : grp)
        names.push_back(in.ctx->classes[c].name);
      amb.push_back(names);
    }
    h["ambiguities"] = amb;
  }
  return h;
}

void print_header(const Inputs &in, std::ostream &out) {
  out << "group " << in.group.name() << ": order " << in.group.order() << ", degree "
      << in.group.degree() << "\n";
  if (!in.ctx)
    return;
  const auto &m = in.ctx->matching;
  out << "table " << in.ctx->table.name << ": verified, " << in.ctx->classes.size()
      << " classes matched (" << m.consistent_assignments << " consistent matching"
      << (m.consistent_assignments == 1 ? "" : "s") << ")\n";
  for (const auto &grp : m.ambiguous_classes) {
    out << "  ambiguity:";
    for (std::size_t c : grp)
      out << " " << in.ctx->classes[c].name;
    out << " (first consistent choice used)\n";
  }
}

void print_report(const ObstructionReport &r, std::ostream &out) {
  out << "\n== " << r.title << " ==\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  if (!r.hypotheses.empty()) {
    out << "hypotheses:\n";
    for (const auto &h : r.hypotheses)
      out << "  - " << h << "\n";
  }
  if (!r.certificate.empty()) {
    out << "certificate:\n";
    for (std::size_t i = 0; i < r.certificate.size(); ++i) {
      const auto &s = r.certificate[i];
      out << "  [" << i + 1 << "] " << s.description << " = " << s.value.get_str()
          << (s.integral ? "" : "  (not an integer)") << "\n";
    }
  }
  if (const auto *w = r.witness())
    out << "witness: " << w->description << " = " << w->value.get_str() << "\n";
  out << "conclusion: " << r.conclusion << "\n";
}

void emit_reports(const Config &cfg, const Inputs &in, const std::vector<ObstructionReport> &reports,
                  std::ostream &out) {
  for (const auto &r : reports)
    require(replay(r), "certificate for '" + r.title + "' does not replay");
  if (cfg.output == "json") {
    Json j = {{"input", header_json(in)}};
    if (reports.size() == 1) {
      j.update(report_to_json(reports.front()));
    } else {
      Json arr = Json::array();
      for (const auto &r : reports)
        arr.push_back(report_to_json(r));
      j["reports"] = arr;
    }
    out << j.dump(2) << "\n";
    return;
  }
  print_header(in, out);
  for (const auto &r : reports)
    print_report(r, out);
}

Inputs load_full(const Config &cfg) {
  Inputs in{load_group(cfg), std::nullopt};
  in.ctx.emplace(GroupContext::make(in.group, load_table(cfg)));
  return in;
}

// Table-free commands still verify a table given on the command line.
Inputs load_group_inputs(const Config &cfg) {
  if (!cfg.table.empty() || !cfg.family.empty())
    return load_full(cfg);
  return Inputs{load_group(cfg), std::nullopt};
}

int cmd_classes(const Config &cfg, std::ostream &out) {
  Inputs in = load_group_inputs(cfg);
  const ClassTable C(in.group);
  if (cfg.output == "json") {
    Json cls = Json::array();
    for (const auto &c : C.classes())
      cls.push_back({{"name", c.name},
                     {"size", c.size},
                     {"order", c.element_order},
                     {"representative", c.representative.to_cycle_string()}});
    out << Json{{"input", header_json(in)}, {"classes", cls}}.dump(2) << "\n";
    return kExitOk;
  }
  print_header(in, out);
  for (const auto &c : C.classes())
    out << c.name << "\tsize " << c.size << "\torder " << c.element_order << "\t"
        << c.representative.to_cycle_string() << "\n";
  return kExitOk;
}

int cmd_verify(const Config &cfg, std::ostream &out, std::ostream &err) {
  const CharacterTable t = load_table(cfg);
  const auto rep = verify(t);
  if (cfg.output == "json") {
    Json issues = Json::array();
    for (const auto &i : rep.issues)
      issues.push_back(
          {{"relation", i.relation}, {"first", i.first}, {"second", i.second}, {"detail", i.detail}});
    out << Json{{"table", t.name}, {"passed", rep.passed}, {"issues", issues}}.dump(2) << "\n";
  } else {
    out << "table " << t.name << " (order " << t.group_order << ", " << t.num_classes()
        << " classes): " << (rep.passed ? "passed" : "FAILED") << "\n";
    for (const auto &i : rep.issues)
      out << "  " << i.relation << " (" << i.first << ", " << i.second << "): " << i.detail << "\n";
  }
  if (!rep.passed) {
    const auto &i = rep.issues.front();
    err << "VerificationFailed: " << i.relation << " (" << i.first << ", " << i.second
        << "): " << i.detail << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_help(const Config &cfg, std::ostream &out) {
  if (cfg.order < 1)
    throw Error("ParseError", "--order must be a positive integer");
  Inputs in = load_full(cfg);
  HelpSolver solver(*in.ctx, cfg.box_bound);
  const AdmissibleSet &set = solver.admissible(cfg.order);
  const auto report = help_report(*in.ctx, solver, cfg.order);
  if (cfg.output == "json") {
    Json j = admissible_to_json(set, in.ctx->classes);
    j["input"] = header_json(in);
    j["report"] = report_to_json(report);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  print_header(in, out);
  out << "order " << set.order << ", box bound " << set.box_bound << ": " << set.candidates.size()
      << " admissible solution" << (set.candidates.size() == 1 ? "" : "s")
      << (set.complete ? "" : " (BoxTooSmall: completeness not certified)") << "\n";
  for (const auto &c : set.candidates)
    out << "  " << candidate_to_json(c, in.ctx->classes).dump() << "\n";
  print_report(report, out);
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"zgu: torsion units and finite subgroups of V(ZG)", "zgu"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--group", cfg.group, "group file or bundled name (s3, a4, c7c3, d8, q8, sl23, a7)");
    sub->add_option("--table", cfg.table, "character table file or bundled name");
    sub->add_option("--family", cfg.family, "analytic table kind:order (cyclic, dihedral, quaternion)");
    sub->add_option("--box-bound", cfg.box_bound, "HeLP box bound")
        ->check(CLI::Range(0L, 1000L))
        ->capture_default_str();
    sub->add_option("--output", cfg.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto *classes = app.add_subcommand("classes", "conjugacy classes of a permutation group");
  common(classes);
  auto *vt = app.add_subcommand("verify-table", "check orthogonality and consistency of a table");
  vt->add_option("--table", cfg.table, "character table file or bundled name");
  vt->add_option("--family", cfg.family, "analytic table kind:order");
  vt->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto *help = app.add_subcommand("help", "HeLP admissible partial augmentations of torsion units");
  common(help);
  help->add_option("--order", cfg.order, "order of the torsion unit")->required();
  auto *ta = app.add_subcommand("theorem-a", "elementary abelian p^2 subgroups (cyclic Sylow p)");
  common(ta);
  ta->add_option("--p", cfg.p, "prime")->required();
  auto *kf = app.add_subcommand("klein-four", "Klein four subgroups of V(ZG)");
  common(kf);
  auto *as = app.add_subcommand("abelian-scan", "idempotent scan over abelian groups of order m");
  common(as);
  as->add_option("--order", cfg.order, "subgroup order m")->required();
  auto *qc = app.add_subcommand("quaternion-check", "quaternion subgroups of order 8 via restriction");
  common(qc);
  auto *cl = app.add_subcommand("classify", "finite p-subgroups of V(ZG)");
  common(cl);
  cl->add_option("--p", cfg.p, "prime")->required();
  auto *ex = app.add_subcommand("example-a7", "HeLP, abelian scan and quaternion check on A7");
  common(ex);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (classes->parsed())
      return cmd_classes(cfg, out);
    if (vt->parsed())
      return cmd_verify(cfg, out, err);
    if (help->parsed())
      return cmd_help(cfg, out);
    if (ta->parsed()) {
      Inputs in = load_group_inputs(cfg);
      emit_reports(cfg, in, {theorem_a_check(ClassTable(in.group), cfg.p)}, out);
    } else if (kf->parsed()) {
      Inputs in = load_group_inputs(cfg);
      emit_reports(cfg, in, {klein_four_check(in.group)}, out);
    } else if (cl->parsed()) {
      Inputs in = load_group_inputs(cfg);
      emit_reports(cfg, in, {classify_finite_p_subgroups(ClassTable(in.group), cfg.p)}, out);
    } else if (as->parsed()) {
      Inputs in = load_full(cfg);
      HelpSolver solver(*in.ctx, cfg.box_bound);
      emit_reports(cfg, in, {abelian_idempotent_scan(*in.ctx, cfg.order, solver)}, out);
    } else if (qc->parsed()) {
      Inputs in = load_full(cfg);
      HelpSolver solver(*in.ctx, cfg.box_bound);
      emit_reports(cfg, in, {quaternion_subgroup_check(*in.ctx, solver)}, out);
    } else if (ex->parsed()) {
      if (cfg.group.empty())
        cfg.group = "a7";
      Inputs in = load_full(cfg);
      HelpSolver solver(*in.ctx, cfg.box_bound);
      emit_reports(cfg, in, example_a7(*in.ctx, solver), out);
    }
    return kExitOk;
  } catch (const Error &e) {
    err << e.what() << "\n";
    return kExitInputError;
  } catch (const InvariantViolation &e) {
    err << e.what() << "\n";
    return kExitInvariant;
  }
}

} // namespace zgu
