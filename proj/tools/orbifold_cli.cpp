#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbifold/counting.hpp"
#include "orbifold/cycle_index.hpp"
#include "orbifold/errors.hpp"
#include "orbifold/io.hpp"
#include "orbifold/modular.hpp"
#include "orbifold/symprod.hpp"
#include "orbifold/transform.hpp"
#include "orbifold/verify.hpp"

namespace {

using namespace orbifold;
using io::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBound = 3 };

struct RunConfig {
  std::uint64_t bound = default_bounds().max_elements;
  unsigned truncate = 0;  // 0: command default
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string format = "json";

  Bounds bounds() const {
    Bounds b = default_bounds();
    b.max_elements = bound;
    return b;
  }
  std::string canonical() const {
    std::ostringstream os;
    os.precision(17);
    os << "bound=" << bound << ";truncate=" << truncate << ";tol=" << tol << ";seed=" << seed
       << ";format=" << format;
    return os.str();
  }
  void validate() const {
    if (bound == 0) throw ParseError("--bound must be positive");
    if (!(tol > 0 && tol <= 1e-3)) throw ParseError("--tol must lie in (0, 1e-3]");
  }
};

struct Output {
  Json result;
  std::string tsv;
  bool pass = true;
};

Json complex_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string poly_tsv(const Poly& p) {
  std::string out = "coeff\tmonomial\n";
  for (const auto& [mono, c] : p.terms()) {
    out += rational_to_string(c) + "\t";
    if (mono.empty()) out += "1";
    for (std::size_t i = 0; i < mono.size(); ++i) {
      out += (i ? "*" : "") + mono[i].first.to_string();
      if (mono[i].second > 1) out += "^" + std::to_string(mono[i].second);
    }
    out += "\n";
  }
  return out;
}

std::string ring_tsv(const RingElem& r) {
  if (r.is_poly()) return poly_tsv(r.poly());
  return "re\tim\n" + fmt_double(r.complex().real()) + "\t" + fmt_double(r.complex().imag()) + "\n";
}

/// A JSON file path, or a built-in name.
Json spec_argument(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::read_json_file(arg);
  return Json(arg);
}

Output cmd_cycle_index(const std::string& spec, const RunConfig& cfg) {
  const auto group = io::group_from_json(spec_argument(spec), cfg.bounds());
  const auto ci = cycle_indicator(group);
  return {io::cycle_index_to_json(ci), poly_tsv(ci.polynomial)};
}

Output cmd_transform(const std::string& path, const RunConfig& cfg) {
  const auto req = io::transform_request_from_json(io::read_json_file(path), cfg.bounds());
  TransformOptions opts{cfg.bounds(), cfg.tol, false};
  const auto& z = req.class_function;
  RingElem value;
  Json handle = "G";
  std::uint64_t homs = 0;
  if (z.domain() == Domain::Z) {
    const BigInt n = std::holds_alternative<BigInt>(req.handle) ? std::get<BigInt>(req.handle) : BigInt(1);
    value = transform_Z(z, *req.omega, n, opts);
    handle = n.str();
  } else if (z.domain() == Domain::ZxZ) {
    const HnfMatrix h =
        std::holds_alternative<HnfMatrix>(req.handle) ? std::get<HnfMatrix>(req.handle) : HnfMatrix::identity();
    value = transform_ZZ(z, *req.omega, h, opts);
    handle = io::hnf_to_json(h);
  } else {
    const auto res = transform_at_G(req.group, z, *req.omega, opts);
    value = res.value;
    homs = res.hom_count;
  }
  Json out;
  out["group"] = req.group->name();
  out["domain"] = to_string(z.domain());
  out["omega"] = io::group_to_json(*req.omega);
  out["handle"] = handle;
  out["text"] = value.to_string();
  out["value"] = io::ring_to_json(value);
  if (homs) out["audit"]["hom_count"] = homs;
  return {out, ring_tsv(value)};
}

Output cmd_symprod(const std::string& domain, unsigned n, const RunConfig& cfg) {
  const Domain d = parse_domain(domain);
  if (d == Domain::General) throw ParseError("symprod: domain must be Z or ZxZ");
  const auto z = d == Domain::Z ? ClassFunction::symbolic_sequence() : ClassFunction::symbolic_lattice();
  TransformOptions opts{cfg.bounds(), cfg.tol, false};
  Bounds b = opts.bounds;
  if (n > b.max_symmetric_degree) throw BoundExceeded("symprod: n exceeds the symmetric-degree bound");
  const auto rep = expoid_verify(z, n, opts);
  Json out;
  out["domain"] = domain;
  out["order"] = n;
  out["series"] = io::series_to_json(rep.lhs);
  out["text"] = Json::array();
  std::string tsv = "n\tZ_n\n";
  for (unsigned k = 0; k <= n; ++k) {
    out["text"].push_back(rep.lhs[k].to_string());
    tsv += std::to_string(k) + "\t" + rep.lhs[k].to_string() + "\n";
  }
  out["exponential_identity"] = rep.equal;
  return {out, tsv, rep.equal};
}

Complex parse_tau(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--tau expects 're,im'");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("--tau expects 're,im'");
  }
}

Output cmd_torus(const std::string& omega_spec, const std::string& tau_text, const std::string& invariant,
                 const RunConfig& cfg) {
  const auto omega = io::group_from_json(spec_argument(omega_spec), cfg.bounds());
  const Complex tau = parse_tau(tau_text);
  if (tau.imag() <= 0) throw ParseError("torus: Im tau must be positive");
  const unsigned order = cfg.truncate ? cfg.truncate : 20;
  const auto f = builtin_invariant(invariant, order);
  TransformOptions opts{cfg.bounds(), cfg.tol, false};
  const Complex v = torus_partition_function(omega, f, tau, opts);
  Json out;
  out["omega"] = io::group_to_json(omega);
  out["invariant"] = invariant;
  out["q_order"] = order;
  out["tau"] = complex_json(tau);
  out["value"] = complex_json(v);
  std::string tsv = "tau\tre\tim\n";
  tsv += "tau\t" + fmt_double(v.real()) + "\t" + fmt_double(v.imag()) + "\n";
  Json samples = Json::array();
  for (const auto& [label, t] : {std::pair{"tau+1", tau + 1.0}, std::pair{"-1/tau", -1.0 / tau}}) {
    const Complex s = torus_partition_function(omega, f, t, opts);
    Json row;
    row["label"] = label;
    row["tau"] = complex_json(t);
    row["value"] = complex_json(s);
    row["relative_difference"] = std::abs(s - v) / std::abs(v);
    samples.push_back(row);
    tsv += std::string(label) + "\t" + fmt_double(s.real()) + "\t" + fmt_double(s.imag()) + "\n";
  }
  out["samples"] = samples;
  return {out, tsv};
}

Output cmd_verify(const std::string& suite, const RunConfig& cfg) {
  VerifyConfig vc;
  vc.bounds = cfg.bounds();
  vc.rel_tol = cfg.tol;
  vc.seed = cfg.seed;
  if (cfg.truncate) vc.q_order = cfg.truncate;
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
      throw ParseError("unknown suite '" + suite + "'");
    suites.push_back(suite);
  }
  Output o;
  o.result = Json::array();
  o.tsv = "suite\tcheck\tpass\tdetail\n";
  for (const auto& s : suites) {
    const auto rep = run_suite(s, vc);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json row;
      row["name"] = c.name;
      row["pass"] = c.pass;
      row["detail"] = c.detail;
      checks.push_back(row);
      o.tsv += s + "\t" + c.name + "\t" + (c.pass ? "pass" : "FAIL") + "\t" + c.detail + "\n";
    }
    Json js;
    js["suite"] = s;
    js["pass"] = rep.pass();
    js["checks"] = checks;
    o.result.push_back(js);
    o.pass = o.pass && rep.pass();
  }
  return o;
}

Output cmd_census(const std::string& group, unsigned n, const RunConfig& cfg) {
  const auto pres = io::presentation_from_json(spec_argument(group));
  const auto c = census(pres, n, cfg.bounds());
  Json rows = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& cls = c.classes[i];
    Json row;
    row["class"] = i;
    Json reps = Json::array();
    for (const auto& p : cls.representative.images()) reps.push_back(p.to_string());
    row["representative"] = reps;
    Json dec = Json::array();
    for (const auto& part : cls.decomposition) {
      Json d;
      d["multiplicity"] = part.multiplicity;
      d["degree"] = part.degree;
      d["ell"] = part.ell;
      dec.push_back(d);
    }
    row["decomposition"] = dec;
    row["predicted"] = cls.predicted_size.str();
    row["observed"] = cls.observed_size;
    rows.push_back(row);
    ok = ok && cls.predicted_size == cls.observed_size;
  }
  Json out;
  out["group"] = pres->name();
  out["degree"] = n;
  out["hom_count"] = c.hom_count;
  out["classes"] = rows;
  return {out, census_tsv(c), ok};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbifold transforms of class functions on finitely generated groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--bound", cfg.bound, "Largest permutation group enumerated")->capture_default_str();
  app.add_option("--truncate", cfg.truncate, "Series / q-expansion truncation order (0: default)");
  app.add_option("--tol", cfg.tol, "Relative tolerance for numeric comparisons")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();

  std::string spec, request, domain = "Z", omega, tau = "0,1", invariant = "klein-j", suite = "all", group;
  unsigned n = 4;
  auto* ci = app.add_subcommand("cycle-index", "Cycle indicator of a permutation group");
  ci->add_option("group", spec, "Group JSON file or built-in name")->required();
  auto* tr = app.add_subcommand("transform", "Orbifold transform from a request file");
  tr->add_option("request", request, "Transform request JSON file")->required();
  auto* sp = app.add_subcommand("symprod", "Symmetric products Z_0..Z_n of the symbolic class function");
  sp->add_option("--domain", domain)->check(CLI::IsMember({"Z", "ZxZ"}))->capture_default_str();
  sp->add_option("-n", n, "Largest n")->capture_default_str();
  auto* to = app.add_subcommand("torus", "Torus partition function of a permutation orbifold");
  to->add_option("--omega", omega, "Group JSON file or built-in name")->required();
  to->add_option("--tau", tau, "Modular parameter re,im")->capture_default_str();
  to->add_option("--invariant", invariant)->check(CLI::IsMember({"constant", "klein-j"}))
      ->capture_default_str();
  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("suite", suite, "Suite name or 'all'")->capture_default_str();
  auto* ce = app.add_subcommand("census", "Equivalence classes of actions Hom(G, S_n)");
  ce->add_option("group", group, "Presentation JSON file or built-in name")->required();
  ce->add_option("-n", n, "Degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string invocation = std::filesystem::path(argv[0]).filename().string();
  for (int i = 1; i < argc; ++i) invocation += std::string(" ") + argv[i];

  Output out;
  std::string command;
  try {
    cfg.validate();
    if (*ci) {
      command = "cycle-index";
      out = cmd_cycle_index(spec, cfg);
    } else if (*tr) {
      command = "transform";
      out = cmd_transform(request, cfg);
    } else if (*sp) {
      command = "symprod";
      out = cmd_symprod(domain, n, cfg);
    } else if (*to) {
      command = "torus";
      out = cmd_torus(omega, tau, invariant, cfg);
    } else if (*ve) {
      command = "verify";
      out = cmd_verify(suite, cfg);
    } else {
      command = "census";
      out = cmd_census(group, n, cfg);
    }
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const UnregisteredClass& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }

  if (cfg.format == "tsv") {
    std::cout << "# " << invocation << "\n# config " << io::hex64(io::fnv1a(cfg.canonical())) << "\n"
              << out.tsv;
  } else {
    Json report;
    report["command"] = command;
    report["invocation"] = invocation;
    report["config"] = cfg.canonical();
    report["config_hash"] = io::hex64(io::fnv1a(cfg.canonical()));
    report["pass"] = out.pass;
    report["result"] = out.result;
    std::cout << report.dump(2) << "\n";
  }
  return out.pass ? kOk : kVerifyFailed;
}
