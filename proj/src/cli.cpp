#include "bilattice/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "bilattice/checks.hpp"
#include "bilattice/errors.hpp"
#include "bilattice/json_io.hpp"

namespace bilattice::cli {

namespace {

enum class Format { Json, Csv, Pretty };

/// Everything a run needs; flags and the config file both fill this.
struct JobConfig {
  std::string command;
  std::string phi;
  std::string psi;
  std::string gamma = "0";
  int N = 6;
  std::string m0 = "1";
  std::string format = "pretty";
  std::uint64_t seed = 20240601;
  std::string family;
  std::string identity;
  std::map<std::string, std::string> params;
  std::string root;
  std::string mu = "0";
  int criterion = 0;
  bool serial = false;
};

const std::vector<std::string> kParamFlags = {"a", "b", "c", "beta", "p", "alpha", "N", "bc", "b2_plus_c2"};

/// Copies config-file values into fields whose flag was not given.
void apply_config(const Json& j, JobConfig& cfg, const CLI::App& app, const CLI::App* sub) {
  auto given = [&](const std::string& flag) {
    for (const CLI::App* a : {&app, sub}) {
      if (a == nullptr) continue;
      const CLI::Option* o = a->get_option_no_throw(flag);
      if (o != nullptr && o->count() > 0) return true;
    }
    return false;
  };
  auto str = [&](const char* key, const std::string& flag, std::string& field) {
    if (j.contains(key) && !given(flag)) field = j.at(key).is_string() ? j.at(key).get<std::string>() : j.at(key).dump();
  };
  if (j.contains("command") && cfg.command.empty()) cfg.command = j.at("command").get<std::string>();
  str("phi", "--phi", cfg.phi);
  str("psi", "--psi", cfg.psi);
  str("gamma", "--gamma", cfg.gamma);
  str("m0", "--m0", cfg.m0);
  str("format", "--format", cfg.format);
  str("family", "kind", cfg.family);
  str("identity", "name", cfg.identity);
  str("root", "--root", cfg.root);
  str("mu", "--mu", cfg.mu);
  for (const char* key : {"N", "order"}) {
    if (j.contains(key) && !given("--order")) cfg.N = j.at(key).get<int>();
  }
  if (j.contains("seed") && !given("--seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("params")) {
    for (const auto& [k, v] : j.at("params").items()) {
      if (cfg.params.count(k) == 0) cfg.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  if (f == "pretty") return Format::Pretty;
  throw CLI::ValidationError("--format", "expected json, csv or pretty");
}

class UsageError : public Error {
 public:
  using Error::Error;
};

PearsonPair pair_from(const JobConfig& cfg) {
  if (cfg.phi.empty() || cfg.psi.empty()) throw UsageError("--phi and --psi are required");
  const Lattice lat = make_lattice(parse_scalar(cfg.gamma));
  const SigmaPoly phi = parse_sigma_poly(cfg.phi, lat);
  const SigmaPoly psi = parse_sigma_poly(cfg.psi, lat);
  if (!phi.is_sigma_free() || !psi.is_sigma_free()) throw UsageError("phi and psi must not involve s");
  return {phi.even_part(), psi.even_part(), lat};
}

std::map<std::string, ExactScalar> params_from(const JobConfig& cfg) {
  std::map<std::string, ExactScalar> out;
  for (const auto& [k, v] : cfg.params) out[k] = parse_scalar(v);
  if (cfg.mu != "0" || cfg.family == "para-krawtchouk" || cfg.identity.find("para") != std::string::npos) {
    out["mu"] = parse_scalar(cfg.mu);
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void print_table(const RecurrenceTable& t, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << to_json(t).dump(2) << "\n";
    return;
  }
  if (f == Format::Csv) out << "n,B,C,h\n";
  for (int n = 0; n <= t.checked_to(); ++n) {
    const std::string C = n == 0 ? "" : to_string(t.C_at(n));
    if (f == Format::Csv) {
      out << n << "," << csv_cell(to_string(t.B()[n])) << "," << csv_cell(C) << ","
          << csv_cell(to_string(t.h()[n])) << "\n";
    } else {
      out << "n=" << n << "  B=" << to_string(t.B()[n]);
      if (n > 0) out << "  C=" << C;
      out << "  h=" << to_string(t.h()[n]) << "\n";
    }
  }
}

int cmd_regularity(const JobConfig& cfg, Format f, std::ostream& out) {
  const RegularityVerdict v = regular(pair_from(cfg), cfg.N);
  if (f == Format::Json) {
    out << to_json(v).dump(2) << "\n";
  } else if (f == Format::Csv) {
    out << "ok,checked_to,failing_n,condition\n"
        << (v.ok ? "true" : "false") << "," << v.checked_to << ","
        << (v.failing_n ? std::to_string(*v.failing_n) : "") << ","
        << (v.condition == RegularityCondition::None ? "" : v.condition == RegularityCondition::Admissibility ? "1" : "2")
        << "\n";
  } else {
    out << v.describe() << "\n";
  }
  return v.ok ? kExitOk : kExitMath;
}

int cmd_recurrence(const JobConfig& cfg, Format f, std::ostream& out) {
  print_table(recurrence_coeffs(pair_from(cfg), cfg.N, parse_scalar(cfg.m0)), f, out);
  return kExitOk;
}

int cmd_moments(const JobConfig& cfg, Format f, std::ostream& out) {
  const MomentFunctional u = solve_pearson_moments(pair_from(cfg), SigmaScalar(parse_scalar(cfg.m0)), cfg.N);
  if (f == Format::Json) {
    out << to_json(u).dump(2) << "\n";
  } else {
    if (f == Format::Csv) out << "k,moment,sigma_residue\n";
    for (int k = 0; k <= u.order(); ++k) {
      const SigmaScalar& m = u.moment(k);
      if (f == Format::Csv) {
        out << k << "," << csv_cell(to_string(m.plain())) << "," << csv_cell(to_string(m.sigma_part())) << "\n";
      } else {
        out << "m_" << k << " = " << to_string(m) << "\n";
      }
    }
  }
  return u.moments_sigma_free() ? kExitOk : kExitMath;
}

int cmd_rodrigues(const JobConfig& cfg, Format f, std::ostream& out) {
  const PearsonPair p = pair_from(cfg);
  const RodriguesData r = rodrigues(p, cfg.N);
  const RodriguesCheck check = rodrigues_check(p, cfg.N, cfg.N);
  if (f == Format::Json) {
    Json j = to_json(r);
    j["check"] = Json{{"ok", check.ok}, {"checked_n", check.checked_n}, {"checked_m", check.checked_m},
                      {"failures", check.failures}};
    out << j.dump(2) << "\n";
  } else {
    if (f == Format::Csv) out << "n,a,s,t,k,R\n";
    for (int n = 0; n <= cfg.N; ++n) {
      const std::string t = n == 0 ? "" : to_string(r.t[static_cast<std::size_t>(n - 1)]);
      if (f == Format::Csv) {
        out << n << "," << csv_cell(to_string(r.a[n])) << "," << csv_cell(to_string(r.s[n])) << "," << csv_cell(t)
            << "," << csv_cell(to_string(r.k[n])) << "," << csv_cell(to_string(r.R[n])) << "\n";
      } else {
        out << "n=" << n << "  a=" << to_string(r.a[n]) << "  s=" << to_string(r.s[n]);
        if (n > 0) out << "  t=" << t;
        out << "  k=" << to_string(r.k[n]) << "  R=" << to_string(r.R[n]) << "\n";
      }
    }
    if (f == Format::Pretty) {
      out << (check.ok ? "functional check passed" : "functional check FAILED") << " for n, m <= " << cfg.N << "\n";
      for (const auto& msg : check.failures) out << "  " << msg << "\n";
    }
  }
  return check.ok ? kExitOk : kExitMath;
}

int cmd_classify(const JobConfig& cfg, Format f, std::ostream& out) {
  const Classification c = classify(pair_from(cfg));
  if (f == Format::Pretty) {
    out << "case " << to_string(c.kase) << ": " << to_json(c.descriptor).dump() << "\n"
        << "map: lambda=" << to_string(c.map.lambda) << " mu=" << to_string(c.map.mu) << "\n";
    if (c.kase == ClassCase::DegPhi2) out << "roots: " << to_string(c.root_status) << "\n";
  } else {
    // CSV has no natural shape for a nested record; emit JSON either way.
    out << to_json(c).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_family(const JobConfig& cfg, Format f, std::ostream& out) {
  if (cfg.family.empty()) throw UsageError("family kind is required");
  FamilyDescriptor d;
  d.kind = parse_family_kind(cfg.family);
  d.params = params_from(cfg);
  if (d.kind != FamilyKind::ParaKrawtchouk) d.params.erase("mu");
  if (!cfg.root.empty()) d.root = parse_scalar(cfg.root);
  print_table(family_recurrence(d, cfg.N), f, out);
  return kExitOk;
}

int cmd_verify(const JobConfig& cfg, Format f, std::ostream& out) {
  if (cfg.identity.empty()) throw UsageError("identity name is required");
  const IdentityReport r = verify_identity(cfg.identity, params_from(cfg), cfg.N);
  if (f == Format::Pretty) {
    out << r.identity << ": " << (r.passed() ? "verified" : "MISMATCH") << " for n <= " << r.checked_to << "\n";
    for (const auto& s : r.signs) {
      out << "  root " << to_string(s.root) << (s.selected ? " (selected)" : "") << ": "
          << (s.failures.empty() ? "all n pass" : std::to_string(s.failures.size()) + " mismatches") << "\n";
    }
  } else if (f == Format::Csv) {
    out << "identity,checked_to,passed\n" << r.identity << "," << r.checked_to << "," << (r.passed() ? "true" : "false")
        << "\n";
  } else {
    out << to_json(r).dump(2) << "\n";
  }
  return r.passed() ? kExitOk : kExitMath;
}

int cmd_selftest(const JobConfig& cfg, Format f, std::ostream& out) {
  std::vector<checks::CriterionResult> results;
  if (cfg.criterion > 0) {
    results.push_back(checks::run_criterion(cfg.criterion, cfg.seed));
  } else {
    results = checks::run_all(cfg.seed, !cfg.serial);
  }
  bool all = true;
  Json arr = Json::array();
  if (f == Format::Csv) out << "id,title,passed,detail\n";
  for (const auto& r : results) {
    all = all && r.passed;
    if (f == Format::Json) {
      arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    } else if (f == Format::Csv) {
      out << r.id << "," << csv_cell(r.title) << "," << (r.passed ? "true" : "false") << "," << csv_cell(r.detail)
          << "\n";
    } else {
      out << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << ". " << r.title << ": " << r.detail << "\n";
    }
  }
  if (f == Format::Json) out << Json{{"seed", cfg.seed}, {"criteria", arr}}.dump(2) << "\n";
  return all ? kExitOk : kExitMath;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  std::string config_path;
  CLI::App app{"Exact classical orthogonal polynomials on the bi-lattice x(s) = s + gamma(1 + (-1)^s)", "bilattice"};
  app.require_subcommand(0, 1);

  std::vector<CLI::App*> subs;
  // In family and verify-identity, -N/--N is the family size and the table
  // order is --order only.
  auto add_sub = [&](const char* name, const char* help, bool family_size = false) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--phi", cfg.phi, "phi(z), degree <= 2");
    s->add_option("--psi", cfg.psi, "psi(z), degree <= 1");
    s->add_option("--gamma", cfg.gamma, "lattice parameter gamma");
    s->add_option(family_size ? "--order" : "-N,--order", cfg.N, "order")->check(CLI::NonNegativeNumber);
    s->add_option("--m0", cfg.m0, "first moment");
    s->add_option("--format", cfg.format, "json, csv or pretty");
    s->add_option("--seed", cfg.seed, "seed for randomized checks");
    s->add_option("--config", config_path, "JSON file mirroring these options");
    subs.push_back(s);
    return s;
  };
  add_sub("regularity", "regularity verdict of a Pearson pair");
  add_sub("recurrence", "B_n, C_n, h_n table of a Pearson pair");
  add_sub("moments", "moment table with sigma residues");
  add_sub("rodrigues", "Rodrigues data and the functional check");
  add_sub("classify", "family, parameters and affine map of a Pearson pair");
  CLI::App* family = add_sub("family", "recurrence table of a catalog family", true);
  CLI::App* verify = add_sub("verify-identity", "check an identity between classical families", true);
  CLI::App* selftest = add_sub("selftest", "run every acceptance criterion");
  family->add_option("kind", cfg.family, "H, Q, meixner, charlier, krawtchouk, hahn, para-krawtchouk");
  verify->add_option("name", cfg.identity, "meixner, charlier, krawtchouk, hahn, para-krawtchouk");
  for (CLI::App* s : {family, verify}) {
    for (const auto& key : kParamFlags) {
      const std::string flag = key == "N" ? "-N,--N" : "--" + key;
      s->add_option_function<std::string>(flag, [&cfg, key](const std::string& v) { cfg.params[key] = v; },
                                          "family parameter " + key);
    }
    s->add_option("--root", cfg.root, "sqrt(a+1) for H");
    s->add_option("--mu", cfg.mu, "para-Krawtchouk mu");
  }
  selftest->add_option("--criterion", cfg.criterion, "run one criterion (1-10)")->check(CLI::Range(1, 10));
  selftest->add_flag("--serial", cfg.serial, "run criteria one after another");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CLI::App* chosen = nullptr;
  for (CLI::App* s : subs) {
    if (s->parsed()) chosen = s;
  }
  if (chosen != nullptr) cfg.command = chosen->get_name();
  if (chosen == verify && verify->count("--order") == 0) cfg.N = 10;

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot read config file " + config_path);
      apply_config(Json::parse(in), cfg, app, chosen);
    }
    if (const char* env = std::getenv("BILATTICE_SEED")) cfg.seed = std::stoull(env);
    if (cfg.command.empty()) {
      out << app.help();
      return kExitUsage;
    }
    if (cfg.N < 0) throw UsageError("N must be nonnegative");
    const Format f = parse_format(cfg.format);
    const std::string& c = cfg.command;
    if (c == "regularity") return cmd_regularity(cfg, f, out);
    if (c == "recurrence") return cmd_recurrence(cfg, f, out);
    if (c == "moments") return cmd_moments(cfg, f, out);
    if (c == "rodrigues") return cmd_rodrigues(cfg, f, out);
    if (c == "classify") return cmd_classify(cfg, f, out);
    if (c == "family") return cmd_family(cfg, f, out);
    if (c == "verify-identity") return cmd_verify(cfg, f, out);
    if (c == "selftest") return cmd_selftest(cfg, f, out);
    throw UsageError("unknown command '" + c + "'");
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContextMismatch& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "math error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace bilattice::cli
