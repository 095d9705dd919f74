#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hurwitz_sos/serialization.hpp"

namespace hsos::cli {

namespace {

using io::json;

std::string vector_text(const std::vector<GaussianRational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

json matrix_json(const numeric::ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Certificate load_certificate(const std::string& path, bool swap) {
  Certificate cert = io::certificate_from_json(io::read_json_file(path));
  cert.validate();
  return swap ? swap_certificate(cert) : cert;
}

}  // namespace

int cmd_expand(int p, int r, OutputFormat fmt, std::ostream& out, std::ostream& err) {
  TracePolynomial t(1);
  try {
    t = hurwitz_expand(p, r);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (fmt == OutputFormat::Json) {
    json j = json::object();
    for (const auto& [cls, c] : t.terms()) j[cls.str()] = c.re().get_num().get_si();
    out << j.dump() << '\n';
  } else {
    for (const auto& [cls, c] : t.terms()) out << cls.str() << ' ' << c << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& cert_path, bool swap, OutputFormat fmt, std::ostream& out, std::ostream& err) {
  Certificate cert;
  VerifyReport report;
  try {
    cert = load_certificate(cert_path, swap);
    report = verify_certificate(cert);
  } catch (const io::FormatError& e) {
    err << "error: malformed certificate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StructureError& e) {
    err << "error: invalid certificate: " << e.what() << '\n';
    return kExitUsage;
  }
  if (fmt == OutputFormat::Json) {
    json j = io::report_to_json(report);
    j["p"] = cert.p;
    j["r"] = cert.r;
    out << j.dump() << '\n';
  } else {
    out << "certificate for Tr S_{" << cert.p << ',' << cert.r << "}: " << cert.blocks.size() << " block(s)\n";
    out << "matched: " << (report.matched ? "yes" : "no") << '\n';
    out << "psd: " << (report.psd ? "yes" : "no") << '\n';
    for (const auto& [cls, z] : report.residual.terms()) out << "residual " << cls.str() << ' ' << z << '\n';
    if (report.witness) {
      out << "witness block " << *report.witness_block << ": " << vector_text(*report.witness)
          << " value " << *report.witness_value << '\n';
    }
    out << (report.ok() ? "VERIFIED" : "NOT VERIFIED") << '\n';
  }
  return report.ok() ? kExitOk : kExitFail;
}

int cmd_search(std::optional<int> p, std::optional<int> r, const std::string& ansatz_path,
               const SearchOptions& options, const std::string& out_path, OutputFormat fmt, std::ostream& out,
               std::ostream& err) {
  SearchOutcome outcome;
  try {
    const io::Ansatz ansatz = io::ansatz_from_json(io::read_json_file(ansatz_path));
    if (!p) p = ansatz.p;
    if (!r) r = ansatz.r;
    if (!p || !r) {
      err << "error: p and r must be given on the command line or in the ansatz file\n";
      return kExitUsage;
    }
    outcome = feasibility_search(*p, *r, ansatz.blocks, options);
  } catch (const InexpressibleTarget& e) {
    if (fmt == OutputFormat::Json) {
      json unreachable = json::array();
      for (const auto& c : e.unreachable()) unreachable.push_back(c.str());
      out << json{{"status", "infeasible"}, {"unreachable", unreachable}, {"witness", nullptr}}.dump() << '\n';
    } else {
      out << "status: infeasible\n" << e.what() << '\n';
    }
    return kExitInfeasible;
  } catch (const io::FormatError& e) {
    err << "error: malformed ansatz: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StructureError& e) {
    err << "error: invalid ansatz: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (outcome.certificate && !out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return kExitFail;
    }
    f << io::certificate_to_json(*outcome.certificate).dump(2) << '\n';
  }

  if (fmt == OutputFormat::Json) {
    out << io::outcome_to_json(outcome, options).dump() << '\n';
  } else {
    out << "status: " << to_string(outcome.status) << '\n';
    out << "iterations: " << outcome.iterations << '\n';
    if (!outcome.note.empty()) out << "note: " << outcome.note << '\n';
    if (outcome.witness) {
      out << "witness block " << outcome.witness->block << ": " << vector_text(outcome.witness->vector) << '\n';
      out << "value: " << outcome.witness->value << '\n';
    }
    if (outcome.certificate) out << io::certificate_to_json(*outcome.certificate).dump(2) << '\n';
  }
  switch (outcome.status) {
    case SearchStatus::Certificate: return kExitOk;
    case SearchStatus::InfeasibleWitness: return kExitInfeasible;
    case SearchStatus::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int cmd_validate(const std::string& cert_path, bool swap, const numeric::TrialConfig& config, OutputFormat fmt,
                 std::ostream& out, std::ostream& err) {
  Certificate cert;
  try {
    config.validate();
    cert = load_certificate(cert_path, swap);
  } catch (const io::FormatError& e) {
    err << "error: malformed certificate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StructureError& e) {
    err << "error: invalid certificate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!verify_certificate(cert).ok()) {
    err << "error: certificate does not verify exactly; numeric validation skipped\n";
    return kExitFail;
  }

  const auto records = numeric::run_certificate_trials(cert, config);
  std::size_t passed = 0;
  double worst = 0.0;
  for (const auto& rec : records) {
    if (rec.pass) ++passed;
    worst = std::max(worst, rec.abs_diff / (1.0 + std::abs(rec.oracle)));
  }
  json summary{{"p", cert.p},       {"r", cert.r},
               {"trials", records.size()}, {"passed", passed},
               {"failed", records.size() - passed}, {"max_rel_diff", worst},
               {"tol_rel", config.tol_rel}, {"seed", config.seed}};

  if (fmt == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& rec : records) {
      rows.push_back({{"p", rec.p}, {"r", rec.r}, {"n", rec.n}, {"seed", rec.seed}, {"kind", rec.kind},
                      {"oracle", rec.oracle}, {"certificate", rec.certificate}, {"abs_diff", rec.abs_diff},
                      {"pass", rec.pass}});
    }
    out << json{{"records", rows}, {"summary", summary}}.dump() << '\n';
  } else {
    out << std::setprecision(17);
    for (const auto& rec : records) {
      out << rec.p << ' ' << rec.r << ' ' << rec.n << ' ' << rec.seed << ' ' << rec.kind << ' ' << rec.oracle << ' '
          << rec.certificate << ' ' << rec.abs_diff << ' ' << (rec.pass ? "pass" : "FAIL") << '\n';
    }
    out << "summary " << summary.dump() << '\n';
  }
  for (const auto& rec : records) {
    if (!rec.pass) err << "trial failed: kind=" << rec.kind << " n=" << rec.n << " seed=" << rec.seed << '\n';
  }
  return passed == records.size() ? kExitOk : kExitFail;
}

int cmd_bmv_check(int p, const numeric::TrialConfig& config, OutputFormat fmt, std::ostream& out,
                  std::ostream& err) {
  std::vector<numeric::BmvRecord> records;
  try {
    if (p < 1) throw InvalidInput("p must be positive");
    records = numeric::run_bmv_trials(p, config);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::size_t passed = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  json failures = json::array();
  for (const auto& rec : records) {
    double scale = 0.0;
    for (double c : rec.coefficients) scale = std::max(scale, std::abs(c));
    for (double c : rec.coefficients) min_ratio = std::min(min_ratio, c / (1.0 + scale));
    if (rec.pass) {
      ++passed;
      continue;
    }
    const auto pair = numeric::trial_matrices(rec.n, rec.seed);
    failures.push_back({{"n", rec.n}, {"seed", rec.seed}, {"coefficients", rec.coefficients},
                        {"A", matrix_json(pair.a)}, {"B", matrix_json(pair.b)}});
  }
  json summary{{"p", p}, {"trials", records.size()}, {"passed", passed}, {"failed", records.size() - passed},
               {"min_relative_coefficient", min_ratio}, {"seed", config.seed}};
  if (fmt == OutputFormat::Json) {
    out << json{{"summary", summary}, {"counterexamples", failures}}.dump() << '\n';
  } else {
    out << "summary " << summary.dump() << '\n';
    for (const auto& f : failures) out << "counterexample candidate " << f.dump() << '\n';
  }
  if (!failures.empty()) err << failures.size() << " trial(s) produced a negative coefficient\n";
  return failures.empty() ? kExitOk : kExitFail;
}

std::vector<std::size_t> parse_dims(const std::string& spec) {
  std::vector<std::size_t> dims;
  std::stringstream ss(spec);
  std::string item;
  auto to_size = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad dimension list: " + spec);
    }
    if (pos != s.size() || v == 0) throw InvalidInput("bad dimension list: " + spec);
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      dims.push_back(to_size(item));
      continue;
    }
    const std::size_t lo = to_size(item.substr(0, dash));
    const std::size_t hi = to_size(item.substr(dash + 1));
    if (hi < lo) throw InvalidInput("bad dimension range: " + item);
    for (std::size_t n = lo; n <= hi; ++n) dims.push_back(n);
  }
  if (dims.empty()) throw InvalidInput("empty dimension list");
  return dims;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermitian-square certificates for traces of Hurwitz products"};
  app.require_subcommand(1, 1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int p = 0;
  int r = 0;
  std::optional<int> p_opt;
  std::optional<int> r_opt;
  std::string cert_path;
  std::string ansatz_path;
  std::string out_path;
  std::string dims = "1-6";
  int trials = 100;
  std::optional<std::uint64_t> seed;
  bool swap = false;
  SearchOptions search;

  auto* expand = app.add_subcommand("expand", "Expand Tr S_{p,r} into cyclic classes");
  expand->add_option("-p,--p", p, "Word length")->required();
  expand->add_option("-r,--r", r, "Number of B letters")->required();

  auto* verify = app.add_subcommand("verify", "Exactly verify a certificate file");
  verify->add_option("--cert", cert_path, "Certificate file")->required();
  verify->add_flag("--swap", swap, "Verify the A<->B image (Tr S_{p,p-r})");

  auto* search_cmd = app.add_subcommand("search", "Search an ansatz for a certificate");
  search_cmd->add_option("-p,--p", p_opt, "Word length");
  search_cmd->add_option("-r,--r", r_opt, "Number of B letters");
  search_cmd->add_option("--ansatz", ansatz_path, "Ansatz file")->required();
  search_cmd->add_option("--max-iter", search.max_iter, "Projection iteration cap");
  search_cmd->add_option("--denom-bound", search.denom_bound, "Denominator bound for rounding");
  search_cmd->add_option("--seed", seed, "Seed for the initial point");
  search_cmd->add_option("--out", out_path, "Write a found certificate here");

  auto* validate = app.add_subcommand("validate", "Cross-check a certificate numerically");
  validate->add_option("--cert", cert_path, "Certificate file")->required();
  validate->add_option("--trials", trials, "Random trials per dimension");
  validate->add_option("--dims", dims, "Dimensions, e.g. 1-6 or 2,3,4");
  validate->add_option("--seed", seed, "Base seed");
  validate->add_flag("--swap", swap, "Validate the A<->B image (Tr S_{p,p-r})");

  auto* bmv = app.add_subcommand("bmv-check", "Check Tr (A + tB)^p coefficients on random PSD pairs");
  bmv->add_option("-p,--p", p, "Power")->required();
  bmv->add_option("--trials", trials, "Random trials per dimension");
  bmv->add_option("--dims", dims, "Dimensions, e.g. 2-4");
  bmv->add_option("--seed", seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!seed) {
    if (const char* env = std::getenv("HURWITZ_SOS_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception&) {
        err << "error: HURWITZ_SOS_SEED is not an integer\n";
        return kExitUsage;
      }
    }
  }
  const OutputFormat fmt = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  numeric::TrialConfig config;
  config.trials = trials;
  config.seed = seed.value_or(0);
  try {
    config.n_values = parse_dims(dims);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (expand->parsed()) return cmd_expand(p, r, fmt, out, err);
  if (verify->parsed()) return cmd_verify(cert_path, swap, fmt, out, err);
  if (search_cmd->parsed()) {
    search.seed = seed.value_or(0);
    return cmd_search(p_opt, r_opt, ansatz_path, search, out_path, fmt, out, err);
  }
  if (validate->parsed()) return cmd_validate(cert_path, swap, config, fmt, out, err);
  if (bmv->parsed()) return cmd_bmv_check(p, config, fmt, out, err);
  return kExitUsage;
}

}  // namespace hsos::cli
