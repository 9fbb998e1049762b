#include "bilattice/json_io.hpp"

#include "bilattice/errors.hpp"

namespace bilattice {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'", 0);
  return j.at(key);
}

Json params_to_json(const std::map<std::string, ExactScalar>& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = scalar_to_json(v);
  return out;
}

Json poly_to_json(const Poly& p) { return scalars_to_json(p.coeffs()); }

}  // namespace

Json scalar_to_json(const ExactScalar& x) { return to_string(x); }

ExactScalar scalar_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected an exact scalar string", 0);
  return parse_scalar(j.get<std::string>());
}

Json scalars_to_json(const std::vector<ExactScalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(scalar_to_json(x));
  return out;
}

std::vector<ExactScalar> scalars_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars", 0);
  std::vector<ExactScalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

Json sigma_scalar_to_json(const SigmaScalar& x) {
  return Json{{"plain", scalar_to_json(x.plain())}, {"sigma", scalar_to_json(x.sigma_part())}};
}

SigmaScalar sigma_scalar_from_json(const Json& j) {
  return {scalar_from_json(field(j, "plain")), scalar_from_json(field(j, "sigma"))};
}

Json to_json(const SigmaPoly& f) {
  return Json{{"even", poly_to_json(f.even_part())},
              {"odd", poly_to_json(f.odd_part())},
              {"gamma", scalar_to_json(f.gamma())}};
}

SigmaPoly sigma_poly_from_json(const Json& j) {
  Lattice lat = make_lattice(scalar_from_json(field(j, "gamma")));
  return SigmaPoly(lat, Poly(scalars_from_json(field(j, "even"))), Poly(scalars_from_json(field(j, "odd"))));
}

Json to_json(const MomentFunctional& u) {
  Json m = Json::array();
  for (const auto& x : u.moments()) m.push_back(sigma_scalar_to_json(x));
  Json out{{"m", m}, {"gamma", scalar_to_json(u.lattice()->gamma())}};
  if (!u.is_sigma_linear(1)) {
    Json t = Json::array();
    for (const auto& x : u.twisted()) t.push_back(sigma_scalar_to_json(x));
    out["twisted"] = t;
  }
  return out;
}

MomentFunctional functional_from_json(const Json& j) {
  Lattice lat = make_lattice(scalar_from_json(field(j, "gamma")));
  std::vector<SigmaScalar> m;
  for (const auto& x : field(j, "m")) m.push_back(sigma_scalar_from_json(x));
  if (!j.contains("twisted")) return {lat, std::move(m), 1};
  std::vector<SigmaScalar> t;
  for (const auto& x : j.at("twisted")) t.push_back(sigma_scalar_from_json(x));
  return {lat, std::move(m), std::move(t)};
}

Json to_json(const RecurrenceTable& t) {
  return Json{{"B", scalars_to_json(t.B())},
              {"C", scalars_to_json(t.C())},
              {"h", scalars_to_json(t.h())},
              {"checked_to", t.checked_to()}};
}

RecurrenceTable table_from_json(const Json& j) {
  std::vector<ExactScalar> h = scalars_from_json(field(j, "h"));
  RecurrenceTable t(scalars_from_json(field(j, "B")), scalars_from_json(field(j, "C")),
                    h.empty() ? ExactScalar(1) : h.front());
  if (t.h() != h) throw ParseError("norms h disagree with m0 * C_1 ... C_n", 0);
  if (field(j, "checked_to").get<int>() != t.checked_to()) throw ParseError("checked_to disagrees with B", 0);
  return t;
}

Json to_json(const RodriguesData& r) {
  Json R = Json::array();
  for (const auto& p : r.R) R.push_back(poly_to_json(p));
  return Json{{"a", scalars_to_json(r.a)},
              {"s", scalars_to_json(r.s)},
              {"t", scalars_to_json(r.t)},
              {"k", scalars_to_json(r.k)},
              {"R", R}};
}

RodriguesData rodrigues_from_json(const Json& j) {
  RodriguesData r;
  r.a = scalars_from_json(field(j, "a"));
  r.s = scalars_from_json(field(j, "s"));
  r.t = scalars_from_json(field(j, "t"));
  r.k = scalars_from_json(field(j, "k"));
  for (const auto& p : field(j, "R")) r.R.emplace_back(scalars_from_json(p));
  return r;
}

Json to_json(const RegularityVerdict& v) {
  Json out{{"regular", v.ok}, {"checked_to", v.checked_to}, {"message", v.describe()}};
  if (v.failing_n) out["failing_n"] = *v.failing_n;
  if (v.condition == RegularityCondition::Admissibility) out["condition"] = 1;
  if (v.condition == RegularityCondition::Nondegeneracy) out["condition"] = 2;
  if (v.d_index) out["d_index"] = *v.d_index;
  return out;
}

Json to_json(const FamilyDescriptor& d) {
  Json out{{"family", to_string(d.kind)}, {"params", params_to_json(d.params)}};
  if (d.root) out["root"] = scalar_to_json(*d.root);
  return out;
}

FamilyDescriptor descriptor_from_json(const Json& j) {
  FamilyDescriptor d;
  d.kind = parse_family_kind(field(j, "family").get<std::string>());
  for (const auto& [k, v] : field(j, "params").items()) d.params[k] = scalar_from_json(v);
  if (j.contains("root")) d.root = scalar_from_json(j.at("root"));
  return d;
}

Json to_json(const AffineMap& m) {
  return Json{{"lambda", scalar_to_json(m.lambda)}, {"mu", scalar_to_json(m.mu)}};
}

Json to_json(const Classification& c) {
  Json out{{"case", to_string(c.kase)},
           {"family", to_string(c.descriptor.kind)},
           {"params", params_to_json(c.descriptor.params)},
           {"map", to_json(c.map)}};
  if (c.descriptor.root) out["root"] = scalar_to_json(*c.descriptor.root);
  out["normalization"] = scalar_to_json(c.normalization);
  if (c.kase == ClassCase::DegPhi2) {
    out["symmetric_params"] = Json{{"r1r2", scalar_to_json(c.r1r2)},
                                   {"r1sq_plus_r2sq", scalar_to_json(c.r1sq_plus_r2sq)}};
    out["root_status"] = to_string(c.root_status);
    out["discriminants"] = Json{{"D1", scalar_to_json(c.D1)}, {"D2", scalar_to_json(c.D2)}};
    if (c.roots) out["roots"] = Json{{"r1", scalar_to_json(c.roots->first)}, {"r2", scalar_to_json(c.roots->second)}};
    out["quartic"] = scalars_to_json(c.quartic);
  }
  return out;
}

Json to_json(const IdentityReport& r) {
  Json out{{"identity", r.identity},
           {"params", params_to_json(r.params)},
           {"checked_to", r.checked_to},
           {"failures", r.failures}};
  out["target"] = to_json(r.target);
  out["map"] = to_json(r.map);
  if (!r.signs.empty()) {
    Json signs = Json::array();
    for (const auto& s : r.signs) {
      signs.push_back(Json{{"root", scalar_to_json(s.root)}, {"failures", s.failures}, {"selected", s.selected}});
    }
    out["signs"] = signs;
  }
  return out;
}

}  // namespace bilattice
