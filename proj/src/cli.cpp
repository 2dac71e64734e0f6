#include "wilf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wilf/enumeration.hpp"
#include "wilf/records.hpp"
#include "wilf/semimodule.hpp"
#include "wilf/two_gen_lattice.hpp"
#include "wilf/wilf_analysis.hpp"

namespace wilf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Range {
  Int lo = 0;
  Int hi = 0;
};

// "a..b" where b may be the letter m for the multiplicity.
Range parse_range(const std::string& text, Int multiplicity) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorKind::ParseError, "range must look like 2..m, got '" + text + "'");
  auto bound = [&](const std::string& s) -> Int {
    if (s == "m") return multiplicity;
    return parse_int_list(s).at(0);
  };
  const std::string lo = text.substr(0, dots);
  const std::string hi = text.substr(dots + 2);
  if (lo.find(',') != std::string::npos || hi.find(',') != std::string::npos) {
    fail(ErrorKind::ParseError, "bad range '" + text + "'");
  }
  Range r{bound(lo), bound(hi)};
  if (r.lo > r.hi) fail(ErrorKind::InvalidArgument, "empty range '" + text + "'");
  return r;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
  f << bytes;
  if (!f) fail(ErrorKind::InvalidArgument, "write to '" + path + "' failed");
}

std::string join(const std::vector<Int>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

Json wilf_record(const NumericalSemigroup& ns, Int k) {
  return Json{{"k", k}, {"delta", ns.delta()}, {"conductor", ns.conductor()}, {"wilf_value", wilf_value(ns, k)}};
}

Json mu_record(const MuReport& r) {
  return Json{{"mu", r.mu},
              {"wilf_at_mu", r.wilf_at_mu},
              {"embedding_dimension", r.embedding_dimension},
              {"wilf_at_e", r.wilf_at_e},
              {"gap_e_minus_mu", r.gap_e_minus_mu}};
}

}  // namespace

const std::vector<std::string>& table1_specs() {
  static const std::vector<std::string> specs = {
      "162,1114,1115@9879",
      "222,1532,1533@16647",
      "172,327,328@3437",
      "88,100,102@566",
      "88,100,343,345,346,351,361,679,680,681,687,693@700",
  };
  return specs;
}

std::string render_table1() {
  std::ostringstream out;
  out << "i,delta,c,e,mu,e_minus_mu,wilf_e,wilf_mu\n";
  const auto& specs = table1_specs();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const NumericalSemigroup ns = parse_semigroup(specs[i]);
    const MuReport r = mu_report(ns);
    out << i + 1 << ',' << ns.delta() << ',' << ns.conductor() << ',' << r.embedding_dimension << ',' << r.mu << ','
        << r.gap_e_minus_mu << ',' << r.wilf_at_e << ',' << r.wilf_at_mu << '\n';
  }
  return out.str();
}

namespace {

std::string render_gapwilf(const NumericalSemigroup& ns) {
  std::ostringstream out;
  out << "g,W(g)\n";
  for (const auto& row : gap_wilf_table(ns)) out << row.gap << ',' << row.wilf << '\n';
  return out.str();
}

}  // namespace

std::string render_table2() { return render_gapwilf(parse_semigroup("6,8,35")); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup and Wilf-function laboratory", "wilf_lab"};
  app.require_subcommand(1);

  std::string spec;
  bool as_json = false;
  bool as_csv = false;
  Int k = 0;
  std::string range;
  Int s = 0;
  std::string gens;
  std::string csv_path;
  std::string svg_path;
  Int max_genus = 0;
  std::string checks = "wilf,bound,frogo";
  unsigned jobs = 1;
  Int split_genus = 4;
  std::string out_path;
  std::string mu_hist_path;
  int which = 0;

  auto add_spec = [&](CLI::App* sub) { sub->add_option("gamma", spec, "semigroup, e.g. 6,8,35 or 88,100,102@566")->required(); };

  auto* info = app.add_subcommand("info", "canonical record of a semigroup");
  add_spec(info);
  auto* info_json = info->add_flag("--json", as_json, "JSON output");
  info->add_flag("--csv", as_csv, "CSV output")->excludes(info_json);

  auto* wilf = app.add_subcommand("wilf", "values of k·delta - c");
  add_spec(wilf);
  auto* wilf_k = wilf->add_option("--k", k, "single k");
  wilf->add_option("--range", range, "k range such as 2..m")->excludes(wilf_k);
  wilf->add_flag("--json", as_json, "JSON output");

  auto* mu_cmd = app.add_subcommand("mu", "least k with nonnegative Wilf value");
  add_spec(mu_cmd);
  mu_cmd->add_flag("--json", as_json, "JSON output");

  auto* apery = app.add_subcommand("apery", "Apery set with respect to a member");
  add_spec(apery);
  apery->add_option("--s", s, "nonzero member (default: multiplicity)");
  apery->add_flag("--json", as_json, "JSON output");

  auto* gapwilf = app.add_subcommand("gapwilf", "W(g) for every gap");
  add_spec(gapwilf);
  gapwilf->add_flag("--json", as_json, "JSON output");

  auto* semimodule = app.add_subcommand("semimodule", "invariants of a semimodule");
  add_spec(semimodule);
  semimodule->add_option("--gens", gens, "generators, e.g. 0,7")->required();
  semimodule->add_option("--k", k, "evaluate k·delta - c at this k");
  semimodule->add_flag("--json", as_json, "JSON output");

  auto* lattice = app.add_subcommand("lattice", "two-generator lattice dump");
  add_spec(lattice);
  lattice->add_option("--csv", csv_path, "write CSV here instead of stdout");
  lattice->add_option("--svg", svg_path, "also write an SVG heatmap");

  auto* survey_cmd = app.add_subcommand("survey", "check predicates over all semigroups up to a genus");
  survey_cmd->add_option("--max-genus", max_genus, "largest genus")->required()->check(CLI::Range(1, 40));
  survey_cmd->add_option("--check", checks, "comma list of checks, or all");
  survey_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));
  survey_cmd->add_option("--split-genus", split_genus, "depth at which subtrees become work units")->check(CLI::Range(0, 40));
  survey_cmd->add_option("--out", out_path, "JSONL output file");
  survey_cmd->add_option("--mu-hist", mu_hist_path, "CSV export of the mu histogram");

  auto* tables = app.add_subcommand("tables", "reference tables");
  tables->add_option("--which", which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*tables) {
      out << (which == 1 ? render_table1() : render_table2());
      return kExitOk;
    }
    if (*survey_cmd) {
      SurveyOptions opts;
      opts.max_genus = max_genus;
      try {
        opts.predicates = parse_predicates(checks);
      } catch (const Error& e) {
        fail(ErrorKind::ParseError, std::string("--check: ") + e.what());
      }
      opts.jobs = jobs;
      opts.split_genus = split_genus;
      opts.node_budget = node_budget_from_env();
      std::ofstream jsonl;
      if (!out_path.empty()) {
        jsonl.open(out_path, std::ios::binary);
        if (!jsonl) fail(ErrorKind::InvalidArgument, "cannot open '" + out_path + "' for writing");
        opts.jsonl = &jsonl;
      }
      const SurveyReport report = survey(opts);
      out << "per_genus " << join(std::vector<Int>(report.per_genus.begin(), report.per_genus.end()), " ") << '\n';
      for (const auto& [name, t] : report.tallies) {
        out << name << " checked=" << t.checked << " satisfied=" << t.satisfied << " violated=" << t.violated << '\n';
      }
      out << "counterexamples " << report.counterexamples.size() << '\n';
      if (!mu_hist_path.empty()) write_file(mu_hist_path, mu_hist_csv(report));
      return kExitOk;
    }

    // Every remaining subcommand takes a semigroup; validate it first.
    const NumericalSemigroup ns = parse_semigroup(spec);

    if (*info) {
      if (as_json) {
        out << semigroup_record(ns).dump(2) << '\n';
      } else if (as_csv) {
        out << semigroup_record_csv(ns);
      } else {
        const Json rec = semigroup_record(ns);
        for (const auto& [key, value] : rec.items()) out << key << ": " << value.dump() << '\n';
      }
    } else if (*wilf) {
      Range r{k, k};
      if (!range.empty()) {
        r = parse_range(range, ns.multiplicity());
      } else if (wilf_k->count() == 0) {
        r = {ns.embedding_dimension(), ns.embedding_dimension()};
      }
      Json rows = Json::array();
      for (Int kk = r.lo; kk <= r.hi; ++kk) {
        if (as_json) {
          rows.push_back(wilf_record(ns, kk));
        } else {
          out << "W(" << kk << ") = " << wilf_value(ns, kk) << '\n';
        }
      }
      if (as_json) out << rows.dump(2) << '\n';
    } else if (*mu_cmd) {
      const MuReport r = mu_report(ns);
      if (as_json) {
        out << mu_record(r).dump(2) << '\n';
      } else {
        const Json rec = mu_record(r);
        for (const auto& [key, value] : rec.items()) out << key << " = " << value.dump() << '\n';
      }
    } else if (*apery) {
      const AperySet ap = apery_set(ns, s == 0 ? ns.multiplicity() : s);
      if (as_json) {
        out << Json{{"modulus", ap.modulus}, {"elements", ap.elements}}.dump(2) << '\n';
      } else {
        out << join(ap.elements, " ") << '\n';
      }
    } else if (*gapwilf) {
      if (ns.is_naturals()) fail(ErrorKind::NaturalsUnsupported, "the naturals have no gaps");
      if (as_json) {
        Json rows = Json::array();
        for (const auto& row : gap_wilf_table(ns)) rows.push_back({{"gap", row.gap}, {"wilf", row.wilf}});
        out << Json{{"gamma", ns.minimal_generators()}, {"rows", std::move(rows)}}.dump(2) << '\n';
      } else {
        out << render_gapwilf(ns);
      }
    } else if (*semimodule) {
      const GammaSemimodule d = semimodule_from_generators(ns, parse_int_list(gens));
      Json rec;
      rec["generators"] = d.minimal_generators();
      rec["shift"] = d.shift();
      rec["generator_count"] = d.generator_count();
      rec["conductor"] = d.conductor();
      rec["delta"] = d.delta();
      rec["genus"] = d.genus();
      rec["wilf_number"] = wilf_number(d);
      if (semimodule->count("--k") > 0) {
        rec["k"] = k;
        rec["wilf_at_k"] = wilf_function_semimodule(d, k);
      }
      if (as_json) {
        out << rec.dump(2) << '\n';
      } else {
        for (const auto& [key, value] : rec.items()) out << key << " = " << value.dump() << '\n';
      }
    } else if (*lattice) {
      const auto [alpha, beta] = two_generators(ns);
      const std::vector<LatticeRow> rows = lattice_dump(alpha, beta);
      const std::string csv = lattice_csv(rows);
      if (csv_path.empty()) {
        out << csv;
      } else {
        write_file(csv_path, csv);
      }
      if (!svg_path.empty()) write_file(svg_path, lattice_svg(alpha, beta, rows));
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::InternalInconsistency) return kExitInconsistency;
    if (e.kind() == ErrorKind::ParseError) return kExitUsage;
    return kExitDomain;
  }
}

}  // namespace wilf::cli
