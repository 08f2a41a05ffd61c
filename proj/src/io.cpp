#include "orbifold/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "orbifold/errors.hpp"
#include "orbifold/modular.hpp"

namespace orbifold::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key, const char* context) {
  if (!j.is_object()) fail(std::string(context) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(context) + ": missing field '" + key + "'");
  return *it;
}

std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Permutation perm_from_json(const Json& j, std::size_t degree) {
  if (!j.is_array()) fail("permutation: expected an image array");
  std::vector<Point> images;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) fail("permutation: images must be non-negative integers");
    images.push_back(v.get<Point>());
  }
  if (images.size() != degree)
    fail("permutation: expected " + std::to_string(degree) + " images, got " +
         std::to_string(images.size()));
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    fail(std::string("permutation: ") + e.what());
  }
}

Json perm_to_json(const Permutation& p) {
  Json out = Json::array();
  for (Point x : p.images()) out.push_back(x);
  return out;
}

std::vector<std::string> string_list(const Json& j, const char* context) {
  if (!j.is_array()) fail(std::string(context) + ": expected a list of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) fail(std::string(context) + ": expected a list of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

BigInt big_from_json(const Json& j, const char* context) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail(std::string(context) + ": expected an integer");
}

Complex complex_from_json(const Json& j, const char* context) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object() && j.contains("re") && j.contains("im"))
    return {j["re"].get<double>(), j["im"].get<double>()};
  fail(std::string(context) + ": expected a complex number [re, im]");
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(source + ": malformed JSON at " + line_context(text, e.byte ? e.byte - 1 : 0));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_json(os.str(), path);
}

PermGroup group_from_json(const Json& j, const Bounds& bounds) {
  if (j.is_string()) {
    try {
      return builtin_group(j.get<std::string>(), bounds);
    } catch (const BoundExceeded&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(std::string("group: ") + e.what());
    }
  }
  const auto& deg = field(j, "degree", "group");
  if (!deg.is_number_unsigned() || deg.get<std::size_t>() == 0)
    fail("group: degree must be a positive integer");
  const auto degree = deg.get<std::size_t>();
  std::vector<Permutation> gens;
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) fail("group: generators must be a list");
    for (const auto& g : j["generators"]) gens.push_back(perm_from_json(g, degree));
  }
  auto group = PermGroup::closure(std::move(gens), degree, bounds);
  if (j.contains("name") && j["name"].is_string()) group.set_name(j["name"].get<std::string>());
  return group;
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(perm_to_json(p));
  Json out;
  if (!g.name().empty()) out["name"] = g.name();
  out["degree"] = g.degree();
  out["order"] = g.order();
  out["generators"] = std::move(gens);
  return out;
}

std::shared_ptr<const Presentation> presentation_from_json(const Json& j) {
  try {
    if (j.is_string()) return std::make_shared<const Presentation>(Presentation::builtin(j.get<std::string>()));
    const auto gens = string_list(field(j, "generators", "presentation"), "presentation generators");
    std::vector<std::string> rels;
    if (j.contains("relators")) rels = string_list(j["relators"], "presentation relators");
    const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "G";
    return std::make_shared<const Presentation>(Presentation::parse(name, gens, rels));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(std::string("presentation: ") + e.what());
  }
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json m = Json::object();
    for (const auto& [v, e] : mono) m[v.to_string()] = e;
    Json term;
    term["coeff"] = rational_to_string(coeff);
    term["monomial"] = std::move(m);
    out.push_back(std::move(term));
  }
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) fail("polynomial: expected a list of terms");
  Poly out;
  for (const auto& term : j) {
    const auto& c = field(term, "coeff", "polynomial term");
    Rational coeff;
    if (c.is_string()) {
      coeff = parse_rational(c.get<std::string>());
    } else if (c.is_number_integer()) {
      coeff = Rational(c.get<long long>());
    } else {
      fail("polynomial term: coeff must be \"num/den\"");
    }
    Monomial mono;
    if (term.contains("monomial")) {
      if (!term["monomial"].is_object()) fail("polynomial term: monomial must be an object");
      for (const auto& [name, e] : term["monomial"].items()) {
        if (!e.is_number_unsigned()) fail("polynomial term: exponents must be non-negative integers");
        if (e.get<unsigned>() == 0) continue;
        mono.emplace_back(Variable::parse(name), e.get<unsigned>());
      }
    }
    Poly t(coeff);
    for (const auto& [v, e] : mono) t *= Poly(v).pow(e);
    out += t;
  }
  return out;
}

Json ring_to_json(const RingElem& r) {
  if (r.is_poly()) return poly_to_json(r.poly());
  Json out;
  out["re"] = r.complex().real();
  out["im"] = r.complex().imag();
  return out;
}

RingElem ring_from_json(const Json& j) {
  if (j.is_array()) return poly_from_json(j);
  if (j.is_number_integer()) return RingElem(j.get<long long>());
  if (j.is_object() || j.is_number()) return complex_from_json(j, "value");
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return parse_rational(s);
    } catch (const std::invalid_argument&) {
      return Variable::parse(s);
    }
  }
  fail("value: expected polynomial JSON, a number or a variable name");
}

Json hnf_to_json(const HnfMatrix& h) {
  Json out;
  out["mu"] = h.mu().str();
  out["kappa"] = h.kappa().str();
  out["lambda"] = h.lambda().str();
  return out;
}

HnfMatrix hnf_from_json(const Json& j) {
  try {
    return HnfMatrix(big_from_json(field(j, "mu", "hnf"), "hnf mu"),
                     big_from_json(field(j, "kappa", "hnf"), "hnf kappa"),
                     big_from_json(field(j, "lambda", "hnf"), "hnf lambda"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(std::string("hnf: ") + e.what());
  }
}

Json series_to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(ring_to_json(c));
  return out;
}

Json cycle_index_to_json(const CycleIndex& c) {
  Json out;
  out["group"] = c.group;
  out["degree"] = c.degree;
  out["text"] = c.polynomial.to_string();
  out["polynomial"] = poly_to_json(c.polynomial);
  return out;
}

ClassFunction class_function_from_json(const Json& j) {
  const auto& dom = field(j, "domain", "class_function");
  if (!dom.is_string()) fail("class_function: domain must be a string");
  Domain domain;
  try {
    domain = parse_domain(dom.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(std::string("class_function: ") + e.what());
  }
  const auto& kind_j = field(j, "kind", "class_function");
  if (!kind_j.is_string()) fail("class_function: kind must be a string");
  const auto kind = kind_j.get<std::string>();

  if (kind == "symbolic") {
    if (domain == Domain::Z) return ClassFunction::symbolic_sequence();
    if (domain == Domain::ZxZ) return ClassFunction::symbolic_lattice();
    fail("class_function: symbolic kind needs domain Z or ZxZ");
  }
  if (kind == "constant") return ClassFunction::constant(domain, ring_from_json(field(j, "value", "class_function")));
  if (kind == "numeric") {
    if (domain != Domain::ZxZ) fail("class_function: numeric kind needs domain ZxZ");
    const std::string invariant =
        j.contains("invariant") ? j["invariant"].get<std::string>() : std::string("klein-j");
    const unsigned order = j.contains("order") ? j["order"].get<unsigned>() : 20;
    const Complex tau = complex_from_json(field(j, "tau", "class_function"), "class_function tau");
    if (tau.imag() <= 0) fail("class_function: Im tau must be positive");
    return ClassFunction::numeric_lattice(builtin_invariant(invariant, order), tau, invariant);
  }
  if (kind == "table") {
    if (domain != Domain::General) fail("class_function: table kind needs domain general");
    const auto pres = presentation_from_json(field(j, "presentation", "class_function"));
    const auto& entries = field(j, "entries", "class_function");
    if (!entries.is_array()) fail("class_function: entries must be a list");
    auto table = std::make_shared<ActionTable>();
    for (const auto& e : entries) {
      const auto key = field(e, "key", "table entry").get<std::string>();
      const auto& deg = field(e, "degree", "table entry");
      if (!deg.is_number_unsigned() || deg.get<std::size_t>() == 0)
        fail("table entry: degree must be a positive integer");
      const auto degree = deg.get<std::size_t>();
      std::vector<Permutation> images;
      const auto& imgs = field(e, "images", "table entry");
      if (!imgs.is_array()) fail("table entry: images must be a list");
      for (const auto& p : imgs) images.push_back(perm_from_json(p, degree));
      try {
        Homomorphism phi(pres, degree, std::move(images));
        Orbit all(degree);
        for (std::size_t i = 0; i < degree; ++i) all[i] = static_cast<Point>(i);
        table->add(key, orbit_stabilizer_action(phi, all, 0), ring_from_json(field(e, "value", "table entry")));
      } catch (const ParseError&) {
        throw;
      } catch (const std::invalid_argument& ex) {
        fail("table entry '" + key + "': " + ex.what());
      }
    }
    return ClassFunction::table(std::move(table));
  }
  fail("class_function: unknown kind '" + kind + "'");
}

TransformRequest transform_request_from_json(const Json& j, const Bounds& bounds) {
  auto cf = class_function_from_json(field(j, "class_function", "transform request"));
  std::shared_ptr<const Presentation> group;
  if (j.contains("group")) {
    group = presentation_from_json(j["group"]);
  } else if (cf.domain() == Domain::Z) {
    group = std::make_shared<const Presentation>(Presentation::builtin("Z"));
  } else if (cf.domain() == Domain::ZxZ) {
    group = std::make_shared<const Presentation>(Presentation::builtin("ZxZ"));
  } else {
    fail("transform request: general domain needs a group");
  }
  auto omega = std::make_shared<const PermGroup>(
      group_from_json(field(j, "omega", "transform request"), bounds));
  Handle handle = FullGroup{};
  if (j.contains("handle") && !j["handle"].is_null()) {
    const auto& h = j["handle"];
    if (h.is_string() && h.get<std::string>() == "G") {
      handle = FullGroup{};
    } else if (cf.domain() == Domain::Z) {
      BigInt n = big_from_json(h, "handle");
      if (n <= 0) fail("handle: index must be positive");
      handle = n;
    } else if (cf.domain() == Domain::ZxZ) {
      handle = hnf_from_json(h);
    } else {
      fail("handle: the general domain only supports H = G");
    }
  }
  return {std::move(group), std::move(cf), std::move(omega), std::move(handle)};
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace orbifold::io
