#include "ptorus/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ptorus/basis.hpp"
#include "ptorus/decomp.hpp"
#include "ptorus/degeneracy.hpp"
#include "ptorus/oracle.hpp"
#include "ptorus/spectrum.hpp"
#include "ptorus/states.hpp"
#include "ptorus/transfer.hpp"

namespace ptorus::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string lattice = "triangular";
  int width = 3;
  int length = 2;
  int level = -1;
  std::string cls;
  std::string irrep;
  std::string format = "text";
  std::vector<std::string> probes;
  double tol = 1e-8;
  int workers = 0;
  std::string out;
  bool list = false;
  bool table = false;

  LatticeSpec spec() const {
    LatticeSpec lat{parse_lattice_kind(lattice), width, length};
    lat.validate();
    return lat;
  }

  std::vector<Probe> parsed_probes() const {
    if (probes.empty()) return default_probes();
    std::vector<Probe> out;
    for (const auto& p : probes) {
      auto comma = p.find(',');
      if (comma == std::string::npos) throw UsageError("probe must be q,v: " + p);
      out.push_back({parse_fraction_string(p.substr(0, comma)), parse_fraction_string(p.substr(comma + 1))});
    }
    if (out.size() < 2) throw UsageError("need at least two probes");
    return out;
  }
};

std::string rat(const BigRational& r) { return r.get_str(); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

json lattice_json(const LatticeSpec& lat) {
  return {{"lattice", to_string(lat.kind)}, {"width", lat.width}, {"length", lat.length}};
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

void emit_rows(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_quote(r[i]);
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

int cmd_states(const RunConfig& c, std::ostream& out) {
  if (c.level < 0) throw UsageError("--level is required");
  if (c.width > 6) throw UsageError("states are supported for width <= 6");
  const auto kind = parse_lattice_kind(c.lattice);
  const auto space = generate_states(c.width, c.level, kind);
  const auto ntor = n_tor(c.width, c.level);
  if (c.format == "json") {
    json j{{"width", c.width}, {"level", c.level}, {"n_tor", ntor}, {"states", space.size()}};
    if (c.list) {
      j["standard"] = json::array();
      for (auto i : space.standard()) j["standard"].push_back(describe(space[i]));
    }
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows{
        {std::to_string(c.width), std::to_string(c.level), std::to_string(ntor), std::to_string(space.size())}};
    emit_rows(out, {"width", "level", "n_tor", "states"}, rows);
  } else {
    out << ntor << "\n";
    if (c.list)
      for (auto i : space.standard()) out << describe(space[i]) << "\n";
  }
  return kOk;
}

int cmd_chartable(const RunConfig& c, std::ostream& out) {
  if (c.level < 0) throw UsageError("--level is required");
  if (c.level > 10) throw UsageError("character tables are supported for level <= 10");
  const auto& t = character_table(c.level);
  if (c.format == "json") {
    json j{{"level", c.level}, {"classes", json::array()}, {"irreps", json::array()}};
    for (std::size_t k = 0; k < t.labels.size(); ++k)
      j["classes"].push_back({{"class", partition_to_string(t.labels[k])}, {"size", t.class_sizes[k]}});
    for (std::size_t d = 0; d < t.labels.size(); ++d) {
      json row{{"irrep", partition_to_string(t.labels[d])}, {"dim", t.dims[d]}, {"chi", t.chi[d]}};
      json cdc = json::array();
      for (const auto& cl : t.labels) cdc.push_back(c_coeff(YoungDiagram{t.labels[d]}, ClassLabel{cl}));
      row["c"] = cdc;
      j["irreps"].push_back(row);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::string> header{"irrep", "dim"};
  for (const auto& l : t.labels) header.push_back(partition_to_string(l));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t d = 0; d < t.labels.size(); ++d) {
    std::vector<std::string> r{partition_to_string(t.labels[d]), std::to_string(t.dims[d])};
    for (auto x : t.chi[d]) r.push_back(std::to_string(x));
    rows.push_back(r);
  }
  if (c.format == "csv") {
    emit_rows(out, header, rows);
  } else {
    for (const auto& h : header) out << h << "\t";
    out << "\n";
    for (const auto& r : rows) {
      for (const auto& x : r) out << x << "\t";
      out << "\n";
    }
  }
  return kOk;
}

int cmd_ktrace(const RunConfig& c, std::ostream& out) {
  if (c.level < 0) throw UsageError("--level is required");
  if (!c.cls.empty() && !c.irrep.empty()) throw UsageError("--class and --irrep are exclusive");
  const auto lat = c.spec();
  if (c.level > lat.width) throw UsageError("level exceeds the width");
  const LevelCharacters chars(lat, c.level);
  BivarPoly k;
  std::string what = "K_" + std::to_string(c.level);
  if (!c.cls.empty()) {
    const Partition p = parse_partition(c.cls);
    k = chars.K_class(ClassLabel{p});
    what += "," + partition_to_string(p);
  } else if (!c.irrep.empty()) {
    const Partition p = parse_partition(c.irrep);
    k = chars.K_irrep(YoungDiagram{p});
    what += "," + partition_to_string(p);
  } else {
    k = chars.K_l();
  }
  if (c.format == "json") {
    json j = lattice_json(lat);
    j["trace"] = what;
    j["value"] = to_json(k);
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    emit_rows(out, {"trace", "value"}, {{what, k.to_string()}});
  } else {
    out << what << " = " << k.to_string() << "\n";
  }
  return kOk;
}

int cmd_oracle(const RunConfig& c, std::ostream& out) {
  const auto lat = c.spec();
  const auto r = restricted_Z(TorusGraph::from_lattice(lat), c.workers);
  std::vector<std::pair<std::string, const BivarPoly*>> parts{{"Z", &r.Z}, {"Z_0", &r.Z0}};
  for (const auto& [key, z] : r.restricted)
    parts.emplace_back("Z_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}", &z);
  if (c.format == "json") {
    json j = lattice_json(lat);
    for (const auto& [name, p] : parts) j[name] = to_json(*p);
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [name, p] : parts) rows.push_back({name, p->to_string()});
    emit_rows(out, {"part", "value"}, rows);
  } else {
    for (const auto& [name, p] : parts) out << name << " = " << p->to_string() << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto lat = c.spec();
  const auto oracle = restricted_Z(TorusGraph::from_lattice(lat), c.workers);
  const LatticeCharacters chars(lat);
  auto report = verify_K_decompositions(chars, oracle);
  verify_Z_reconstruction(chars, oracle, report);
  const bool ok = report.all_equal();
  if (c.format == "json") {
    json j = lattice_json(lat);
    j["k0_reading"] = report.k0_reading;
    j["all_equal"] = ok;
    j["identities"] = json::array();
    for (const auto& chk : report.checks) {
      json e{{"name", chk.name}, {"status", chk.equal ? "exact-equal" : "mismatch"}};
      if (chk.informational) e["informational"] = true;
      if (!chk.equal) e["difference"] = to_json(chk.lhs - chk.rhs);
      j["identities"].push_back(e);
    }
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& chk : report.checks)
      rows.push_back({chk.name, chk.equal ? "exact-equal" : "mismatch", chk.informational ? "yes" : "no",
                      chk.equal ? "" : (chk.lhs - chk.rhs).to_string()});
    emit_rows(out, {"identity", "status", "informational", "difference"}, rows);
  } else {
    for (const auto& chk : report.checks) {
      out << (chk.equal ? "exact-equal  " : "mismatch     ") << chk.name;
      if (chk.informational) out << " (informational)";
      if (!chk.equal) out << "   lhs - rhs = " << (chk.lhs - chk.rhs).to_string();
      out << "\n";
    }
    out << "K_0 reading: " << report.k0_reading << "\n";
  }
  return ok ? kOk : kMismatch;
}

int cmd_amplitudes(const RunConfig& c, std::ostream& out) {
  if (c.width < 0 || c.width > 8) throw UsageError("amplitudes are supported for width <= 8");
  const auto basis = select_independent_basis(c.width);
  const auto tb = amplitudes_tilde_b(basis);
  if (c.format == "json") {
    json j{{"width", c.width}, {"tilde_b", json::array()}};
    for (const auto& [key, p] : tb)
      j["tilde_b"].push_back({{"level", key.first},
                              {"irrep", partition_to_string(key.second)},
                              {"amplitude", to_json(p)},
                              {"text", p.to_string()}});
    if (!c.table) {
      j["relations"] = json::array();
      for (int l = 0; l <= c.width; ++l)
        for (const auto& d : partitions(l)) {
          json terms = json::array();
          for (const auto& [key, e] : basis.e(l, d))
            terms.push_back({{"level", key.first}, {"irrep", partition_to_string(key.second)}, {"e", rat(e)}});
          j["relations"].push_back({{"level", l},
                                    {"irrep", partition_to_string(d)},
                                    {"selected", basis.is_selected(l, d)},
                                    {"b_lD", to_json(coeff_b_lD(l, d))},
                                    {"expansion", terms}});
        }
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, p] : tb) rows.push_back({std::to_string(key.first), partition_to_string(key.second), p.to_string()});
  if (c.format == "csv") {
    emit_rows(out, {"level", "irrep", "tilde_b"}, rows);
    return kOk;
  }
  for (const auto& r : rows) out << "tilde_b(" << r[1] << ") = " << r[2] << "\n";
  if (!c.table) {
    for (int l = 2; l <= c.width; ++l)
      for (const auto& d : partitions(l)) {
        if (basis.is_selected(l, d)) continue;
        out << "K_" << partition_to_string(d) << " =";
        for (const auto& [key, e] : basis.e(l, d)) out << " + (" << rat(e) << ") K_" << partition_to_string(key.second);
        out << "\n";
      }
  }
  return kOk;
}

int cmd_report(const RunConfig& c, std::ostream& out) {
  const auto lat = c.spec();
  MatchOptions opt;
  opt.tolerance = c.tol;
  const auto report = amplitude_report(lat, c.parsed_probes(), opt);

  // Cross-check against the enumerated Z when it is affordable.
  std::vector<std::tuple<std::complex<double>, double, double>> recon;
  bool ok = true;
  if (lat.num_edges() <= kMaxEnumeratedEdges) {
    const auto z = enumerate_Z(TorusGraph::from_lattice(lat), c.workers);
    for (std::size_t p = 0; p < report.probes.size(); ++p) {
      const double exact = eval(z, report.probes[p].q, report.probes[p].v).get_d();
      const auto got = reconstruct_Z_numeric(report, p);
      const double rel = std::abs(got - exact) / std::max(std::abs(exact), 1e-300);
      ok = ok && rel <= c.tol;
      recon.emplace_back(got, exact, rel);
    }
  }

  if (c.format == "json") {
    json j = lattice_json(lat);
    j["probes"] = json::array();
    for (const auto& p : report.probes) j["probes"].push_back({{"q", rat(p.q)}, {"v", rat(p.v)}});
    j["total_multiplicity"] = report.total_multiplicity;
    j["new_at_level"] = json::object();
    for (const auto& [l, n] : report.new_at_level) j["new_at_level"][std::to_string(l)] = n;
    j["tilde_b"] = json::array();
    for (const auto& [key, p] : report.tilde_b)
      j["tilde_b"].push_back({{"level", key.first}, {"irrep", partition_to_string(key.second)}, {"amplitude", to_json(p)}});
    j["classes"] = json::array();
    for (const auto& cl : report.classes) {
      json e{{"top_level", cl.top_level},
             {"multiplicity", cl.multiplicity},
             {"non_generic", cl.non_generic},
             {"zero", cl.zero},
             {"amplitude", to_json(cl.amplitude)},
             {"amplitude_text", cl.amplitude.to_string()},
             {"values", json::array()},
             {"members", json::array()}};
      for (auto v : cl.values) e["values"].push_back(complex_json(v));
      for (const auto& m : cl.members)
        e["members"].push_back({{"level", m.level}, {"irrep", partition_to_string(m.diagram)}, {"slot", m.index}});
      j["classes"].push_back(e);
    }
    if (!recon.empty()) {
      j["reconstruction"] = json::array();
      for (const auto& [got, exact, rel] : recon)
        j["reconstruction"].push_back({{"reconstructed", complex_json(got)}, {"oracle", exact}, {"relative_error", rel}});
    }
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& cl : report.classes) {
      std::string members;
      for (const auto& m : cl.members)
        members += (members.empty() ? "" : " ") + std::to_string(m.level) + partition_to_string(m.diagram);
      std::ostringstream v;
      v << cl.values[0];
      rows.push_back({std::to_string(cl.top_level), std::to_string(cl.multiplicity), cl.non_generic ? "yes" : "no",
                      v.str(), cl.amplitude.to_string(), members});
    }
    emit_rows(out, {"top_level", "multiplicity", "non_generic", "value_probe1", "amplitude", "members"}, rows);
  } else {
    for (const auto& [l, n] : report.new_at_level) out << "level " << l << ": " << n << " new eigenvalues\n";
    out << "total multiplicity " << report.total_multiplicity << "\n";
    for (const auto& cl : report.classes) {
      out << "[" << cl.top_level << "] " << cl.values[0] << " x" << cl.multiplicity
          << (cl.non_generic ? " non-generic" : "") << "  amplitude " << cl.amplitude.to_string() << "  {";
      for (std::size_t i = 0; i < cl.members.size(); ++i)
        out << (i ? " " : "") << cl.members[i].level << partition_to_string(cl.members[i].diagram);
      out << "}\n";
    }
    for (const auto& [got, exact, rel] : recon)
      out << "reconstructed Z " << got.real() << " vs oracle " << exact << " (relative " << rel << ")\n";
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Potts partition functions on tori: enumeration, transfer-matrix characters, amplitudes", "ptorus"};
  app.require_subcommand(1);
  RunConfig c;

  auto lattice_opts = [&](CLI::App* s, bool with_length) {
    s->add_option("--lattice", c.lattice, "square or triangular")
        ->check(CLI::IsMember({"square", "triangular"}))
        ->capture_default_str();
    s->add_option("--width", c.width, "L, sites per time slice")->required()->check(CLI::Range(0, 12));
    if (with_length) s->add_option("--length", c.length, "N, number of time slices")->required()->check(CLI::PositiveNumber);
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    s->add_option("--out", c.out, "write the output to this file");
  };

  auto* states = app.add_subcommand("states", "count level-l states of an L-point slice");
  lattice_opts(states, false);
  states->add_option("--level", c.level, "level l")->required();
  states->add_flag("--list", c.list, "also list the standard states");
  common(states);

  auto* chartable = app.add_subcommand("chartable", "character table of S_l");
  chartable->add_option("--level", c.level, "l")->required()->check(CLI::Range(0, 10));
  common(chartable);

  auto* ktrace = app.add_subcommand("ktrace", "exact K_l, K_{l,C} or K_{l,D}");
  lattice_opts(ktrace, true);
  ktrace->add_option("--level", c.level, "level l")->required();
  ktrace->add_option("--class", c.cls, "cycle type, e.g. 2,2");
  ktrace->add_option("--irrep", c.irrep, "Young diagram, e.g. 3,1");
  common(ktrace);

  auto* oracle = app.add_subcommand("oracle", "brute-force Z and its topological restrictions");
  lattice_opts(oracle, true);
  oracle->add_option("--workers", c.workers, "threads, 0 = hardware concurrency")->check(CLI::NonNegativeNumber);
  common(oracle);

  auto* verify = app.add_subcommand("verify", "check every decomposition identity exactly");
  lattice_opts(verify, true);
  verify->add_option("--workers", c.workers, "threads, 0 = hardware concurrency")->check(CLI::NonNegativeNumber);
  common(verify);

  auto* amplitudes = app.add_subcommand("amplitudes", "amplitudes of the independent K_{l,D}");
  amplitudes->add_option("--width", c.width, "L")->required()->check(CLI::Range(0, 8));
  amplitudes->add_flag("--table", c.table, "only the amplitude table");
  common(amplitudes);

  auto* report = app.add_subcommand("report", "eigenvalue classes with amplitudes");
  lattice_opts(report, true);
  report->add_option("--probe", c.probes, "q,v probe point (repeatable, rationals allowed)");
  report->add_option("--tol", c.tol, "relative match tolerance")->check(CLI::Range(1e-15, 1e-3))->capture_default_str();
  report->add_option("--workers", c.workers, "threads for the oracle cross-check")->check(CLI::NonNegativeNumber);
  common(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) {
      err << "cannot open " << c.out << "\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (*states) return cmd_states(c, *sink);
    if (*chartable) return cmd_chartable(c, *sink);
    if (*ktrace) return cmd_ktrace(c, *sink);
    if (*oracle) return cmd_oracle(c, *sink);
    if (*verify) return cmd_verify(c, *sink);
    if (*amplitudes) return cmd_amplitudes(c, *sink);
    if (*report) return cmd_report(c, *sink);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const TooLarge& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ptorus::cli
