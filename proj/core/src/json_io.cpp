#include "klcells/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "klcells/lattice.hpp"

namespace klcells {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto read(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("unexpected JSON shape: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json vec(const Vec& v, int dim) { return to_list(v, dim); }

json poly(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  return out;
}

LaurentPoly poly_from(const json& j) {
  LaurentPoly p;
  for (const auto& t : j) p += LaurentPoly::monomial(t.at(0).get<int>()) * LaurentPoly(t.at(1).get<LaurentPoly::Coeff>());
  return p;
}

json root_json(const RootDatum& d, const AffineRoot& chi) {
  return {{"root", vec(d.roots()[static_cast<std::size_t>(chi.root)], d.rank())}, {"level", chi.level}};
}

json weyl(const RootDatum& d, const WeylElement& w) {
  json lin = json::array();
  const Mat& m = w.linear_part().on_vprime();
  for (int i = 0; i < d.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < d.rank(); ++j) row.push_back(at(m, i, j));
    lin.push_back(row);
  }
  return {{"word", reduced_word(d, w)}, {"linearPart", lin}, {"translation", vec(w.translation_part(), d.rank())}};
}

WeylElement weyl_from(const RootDatum& d, const json& j) {
  WeylElement w = from_word(d, j.at("word").get<std::vector<int>>());
  if (json(weyl(d, w)) != j) throw std::invalid_argument("Weyl element: word disagrees with linearPart/translation");
  return w;
}

Lambda lambda_from(const RootDatum& d, const json& j) {
  auto coords = j.get<std::vector<std::string>>();
  std::string tau = "0";
  if (d.case_flag() == CaseFlag::B) {
    if (coords.size() != static_cast<std::size_t>(d.rank()) + 1) throw std::invalid_argument("lambda: wrong number of coordinates");
    tau = coords.back();
    coords.pop_back();
  }
  return Lambda::parse(d, coords, tau);
}

json listing_entries(const std::vector<CellEntry>& cells) {
  json out = json::array();
  for (const auto& c : cells) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back({{"word", m.word}, {"lambda", m.lambda}});
    out.push_back({{"id", c.id}, {"aValue", c.a_value}, {"members", members}});
  }
  return out;
}

std::vector<CellEntry> entries_from(const json& j) {
  std::vector<CellEntry> out;
  for (const auto& c : j) {
    CellEntry e;
    e.id = c.at("id").get<int>();
    e.a_value = c.at("aValue").get<int>();
    for (const auto& m : c.at("members"))
      e.members.push_back({m.at("word").get<std::vector<int>>(), m.at("lambda").get<std::vector<std::string>>()});
    out.push_back(e);
  }
  return out;
}

std::vector<CellEntry> group(const std::vector<int>& ids, const std::vector<int>& member_a,
                             const std::vector<CellMember>& members) {
  std::vector<CellEntry> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto id = static_cast<std::size_t>(ids[i]);
    if (out.size() <= id) out.resize(id + 1);
    out[id].id = static_cast<int>(id);
    out[id].a_value = member_a[i];
    out[id].members.push_back(members[i]);
  }
  return out;
}

CellListing listing(const CellPartition& p, const std::vector<CellMember>& members, int bound) {
  CellListing c;
  c.bound = bound;
  c.stabilized = p.stabilized;
  c.two_sided = group(p.two_sided, p.member_a, members);
  c.left = group(p.left, p.member_a, members);
  c.right = group(p.right, p.member_a, members);
  return c;
}

}  // namespace

std::string datum_json(const RootDatum& d) {
  json simple = json::array();
  for (const auto& chi : d.simple()) simple.push_back(root_json(d, chi));
  json cartan = json::array();
  for (int i = 0; i < d.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < d.rank(); ++j) row.push_back(d.cartan(i, j));
    cartan.push_back(row);
  }
  json delta = json::array();
  for (int k = 0; k < d.num_roots(); ++k)
    delta.push_back({{"root", vec(d.roots()[static_cast<std::size_t>(k)], d.rank())}, {"delta", d.delta(k)}});
  json comps = json::array();
  for (const auto& c : d.components()) {
    json roots = json::array();
    for (int k : c) roots.push_back(vec(d.roots()[static_cast<std::size_t>(k)], d.rank()));
    comps.push_back(roots);
  }
  return dump({{"type", d.type()},
               {"caseFlag", to_string(d.case_flag())},
               {"simpleRoots", simple},
               {"cartanMatrix", cartan},
               {"delta", delta},
               {"components", comps},
               {"lattices", {{"L", "root lattice"}, {"Lprime", "coweight lattice"}}}});
}

RootDatum datum_from_json(const std::string& text) {
  json j = parse(text);
  RootDatum d = read([&] { return build_root_datum(j.at("type").get<std::string>(), parse_case(j.at("caseFlag").get<std::string>())); });
  if (parse(datum_json(d)) != j) throw std::invalid_argument("datum JSON does not match the catalog entry for its type");
  return d;
}

std::string lambda_json(const Lambda& lambda) { return dump(lambda.coordinate_strings()); }

Lambda lambda_from_json(const RootDatum& d, const std::string& text) {
  json j = parse(text);
  return read([&] { return lambda_from(d, j); });
}

std::string weyl_json(const RootDatum& d, const WeylElement& w) { return dump(weyl(d, w)); }

WeylElement weyl_from_json(const RootDatum& d, const std::string& text) {
  json j = parse(text);
  return read([&] { return weyl_from(d, j); });
}

std::string geometry_json(const LambdaGeometry& geom, int level_bound) {
  const RootDatum& d = geom.datum();
  json positive = json::array();
  for (const auto& chi : R_lambda_positive(geom, level_bound)) positive.push_back(root_json(d, chi));
  json pi = json::array();
  for (const auto& chi : geom.simple_system()) pi.push_back(root_json(d, chi));
  json omega = json::array();
  if (geom.lambda().tau(d).first == 0)
    for (const auto& z : omega_bar_lambda(geom)) omega.push_back(weyl(d, z));
  return dump({{"type", d.type()},
               {"caseFlag", to_string(d.case_flag())},
               {"lambda", geom.lambda().coordinate_strings()},
               {"levelBound", level_bound},
               {"RlambdaPositive", positive},
               {"PiLambda", pi},
               {"coxeterMatrix", geom.coxeter_matrix()},
               {"omegaBarGenerators", omega}});
}

LambdaGeometry geometry_from_json(const RootDatum& d, const std::string& text) {
  json j = parse(text);
  return read([&] {
    LambdaGeometry g(d, lambda_from(d, j.at("lambda")));
    if (parse(geometry_json(g, j.at("levelBound").get<int>())) != j)
      throw std::invalid_argument("geometry JSON is not the geometry of its lambda");
    return g;
  });
}

std::string hecke_json(const OrbitHecke& h, const HeckeElement& a) {
  const RootDatum& d = h.datum();
  json orbit = json::array();
  for (const auto& l : h.orbit()) orbit.push_back(l.coordinate_strings());
  json terms = json::array();
  for (const auto& [k, c] : a)
    terms.push_back({{"word", reduced_word(d, h.element(k))}, {"lambda", h.lambda(k).coordinate_strings()}, {"poly", poly(c)}});
  return dump({{"orbit", orbit}, {"bound", h.bound()}, {"terms", terms}});
}

HeckeElement hecke_from_json(const OrbitHecke& h, const std::string& text) {
  json j = parse(text);
  const RootDatum& d = h.datum();
  return read([&] {
    if (j.contains("orbit")) {
      json orbit = json::array();
      for (const auto& l : h.orbit()) orbit.push_back(l.coordinate_strings());
      if (j.at("orbit") != orbit) throw std::invalid_argument("Hecke element belongs to another orbit");
    }
    HeckeElement out;
    for (const auto& t : j.at("terms")) {
      BasisKey k = h.key(from_word(d, t.at("word").get<std::vector<int>>()), lambda_from(d, t.at("lambda")));
      add_term(out, k, poly_from(t.at("poly")));
    }
    return out;
  });
}

CellListing cell_listing(const StructureTable& table, const CellPartition& p) {
  const CoxeterTable& t = table.table();
  std::vector<std::string> lam = table.geometry().lambda().coordinate_strings();
  std::vector<CellMember> members;
  for (int e : p.element) members.push_back({t.word(e), lam});
  return listing(p, members, table.support_bound());
}

CellListing cell_listing(const OrbitCells& oc) {
  std::vector<CellMember> members;
  for (int i = 0; i < oc.cells.size(); ++i)
    members.push_back({reduced_word(*oc.datum, oc.weyl->element(oc.cells.element[static_cast<std::size_t>(i)])),
                       oc.orbit[static_cast<std::size_t>(oc.cells.lambda[static_cast<std::size_t>(i)])].coordinate_strings()});
  return listing(oc.cells, members, oc.bound);
}

std::string cells_json(const CellListing& c) {
  return dump({{"bound", c.bound},
               {"stabilized", c.stabilized},
               {"cells", listing_entries(c.two_sided)},
               {"leftCells", listing_entries(c.left)},
               {"rightCells", listing_entries(c.right)}});
}

CellListing cells_from_json(const std::string& text) {
  json j = parse(text);
  return read([&] {
    CellListing c;
    c.bound = j.at("bound").get<int>();
    c.stabilized = j.at("stabilized").get<bool>();
    c.two_sided = entries_from(j.at("cells"));
    c.left = entries_from(j.at("leftCells"));
    c.right = entries_from(j.at("rightCells"));
    return c;
  });
}

std::string structure_table_json(const StructureTable& table) {
  const CoxeterTable& t = table.table();
  json products = json::array();
  const int n = table.support_size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const auto& [z, r] : table.product(x, y))
        products.push_back({{"x", t.word(x)}, {"y", t.word(y)}, {"z", t.word(z)}, {"poly", poly(r)}});
  json a = json::array();
  for (int z = 0; z < n; ++z) a.push_back({{"word", t.word(z)}, {"aValue", table.a_value(z)}});
  return dump({{"supportBound", table.support_bound()}, {"products", products}, {"aValues", a}});
}

std::string report_json(const VerificationReport& r) {
  json orbit = json::array();
  for (const auto& l : r.orbit) orbit.push_back(l.coordinate_strings());
  json cells = json::array();
  for (std::size_t i = 0; i < r.cell_a.size(); ++i) cells.push_back({{"id", i}, {"aValue", r.cell_a[i]}});
  json classes = json::array();
  for (const auto& o : r.class_orbits) classes.push_back({{"labels", o.labels}, {"dim", o.dim}});
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  return dump({{"datum", r.type},
               {"caseFlag", to_string(r.case_flag)},
               {"orbit", orbit},
               {"bound", r.bound},
               {"centralizer", r.centralizer},
               {"cells", cells},
               {"classOrbits", classes},
               {"checks", checks},
               {"ambiguous", r.ambiguous},
               {"matching", r.matching},
               {"pass", r.pass()}});
}

VerificationReport report_from_json(const RootDatum& d, const std::string& text) {
  json j = parse(text);
  return read([&] {
    VerificationReport r;
    r.type = j.at("datum").get<std::string>();
    r.case_flag = parse_case(j.at("caseFlag").get<std::string>());
    if (r.type != d.type() || r.case_flag != d.case_flag()) throw std::invalid_argument("report belongs to another datum");
    for (const auto& l : j.at("orbit")) r.orbit.push_back(lambda_from(d, l));
    r.bound = j.at("bound").get<int>();
    r.centralizer = j.at("centralizer").get<std::string>();
    for (const auto& c : j.at("cells")) r.cell_a.push_back(c.at("aValue").get<int>());
    for (const auto& o : j.at("classOrbits")) r.class_orbits.push_back({o.at("labels").get<std::vector<std::string>>(), o.at("dim").get<int>()});
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("details").get<std::string>()});
    r.ambiguous = j.at("ambiguous").get<bool>();
    r.matching = j.at("matching").get<std::vector<int>>();
    if (r.pass() != j.at("pass").get<bool>()) throw std::invalid_argument("report verdict disagrees with its checks");
    return r;
  });
}

std::string error_json(const std::string& kind, const std::string& message, int bound) {
  json e = {{"kind", kind}, {"message", message}};
  if (bound >= 0) e["bound"] = bound;
  return dump({{"error", e}});
}

}  // namespace klcells
