#include "klcells/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "klcells/errors.hpp"
#include "unipotent_data.hpp"

namespace klcells {

namespace {

/// Labels the classes of the equivalence generated by the given pairs;
/// ids follow the first member.
std::vector<int> classes_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto [a, b] : pairs) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
  std::map<int, int> id;
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = id.emplace(find(i), static_cast<int>(id.size())).first->second;
  return out;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto [it, fresh] = ab.emplace(a[i], b[i]); !fresh && it->second != b[i]) return false;
    if (auto [it, fresh] = ba.emplace(b[i], a[i]); !fresh && it->second != a[i]) return false;
  }
  return true;
}

int count_ids(const std::vector<int>& ids) { return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1; }

/// Order of the group generated by the linear parts of the given reflections.
int linear_group_order(const RootDatum& d, const std::vector<AffineRoot>& gens) {
  std::vector<WeylElement> g;
  for (const auto& chi : gens) g.push_back(WeylElement::reflection(d, chi).linear_part());
  std::set<WeylElement> seen{WeylElement::identity(d)};
  std::deque<WeylElement> queue{WeylElement::identity(d)};
  while (!queue.empty()) {
    WeylElement cur = queue.front();
    queue.pop_front();
    for (const auto& s : g) {
      WeylElement next = compose(s, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return static_cast<int>(seen.size());
}

std::string component_type(const RootDatum& d, const std::vector<int>& comp) {
  if (comp.size() == 1) return "A1";
  if (comp.size() == 2) {
    std::int64_t a = dot(d.roots()[static_cast<std::size_t>(comp[0])], d.coroots()[static_cast<std::size_t>(comp[1])], d.rank());
    std::int64_t b = dot(d.roots()[static_cast<std::size_t>(comp[1])], d.coroots()[static_cast<std::size_t>(comp[0])], d.rank());
    switch (a * b) {
      case 1: return "A2";
      case 2: return "B2";
      case 3: return "G2";
      default: break;
    }
  }
  throw UnsupportedError("centralizer component outside the catalog");
}

/// Sorted Coxeter orders between distinct generators of each component.
std::multiset<std::vector<int>> edge_profile(const std::vector<std::vector<int>>& m) {
  std::vector<int> comp = coxeter_components(m);
  std::map<int, std::vector<int>> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    edges[comp[i]];
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (comp[i] == comp[j]) edges[comp[i]].push_back(m[i][j]);
  }
  std::multiset<std::vector<int>> out;
  for (auto& [c, e] : edges) {
    std::sort(e.begin(), e.end());
    out.insert(e);
  }
  return out;
}

std::vector<int> expected_edges(const std::string& type, bool affine) {
  if (type == "A1") return affine ? std::vector<int>{0} : std::vector<int>{};
  if (type == "A2") return affine ? std::vector<int>{3, 3, 3} : std::vector<int>{3};
  if (type == "B2") return affine ? std::vector<int>{2, 4, 4} : std::vector<int>{4};
  if (type == "G2") return affine ? std::vector<int>{2, 3, 6} : std::vector<int>{6};
  throw UnsupportedError("no Coxeter data for type " + type);
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int k = std::min(n, max_part); k >= 1; --k)
    for (auto& rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(rest);
    }
  return out;
}

std::vector<UnipotentClass> type_a_classes(int n) {
  std::vector<UnipotentClass> out;
  for (const auto& p : partitions(n, n)) {
    std::vector<int> dual(static_cast<std::size_t>(p.front()), 0);
    for (int part : p)
      for (int i = 0; i < part; ++i) ++dual[static_cast<std::size_t>(i)];
    UnipotentClass c;
    c.label = "(";
    for (std::size_t i = 0; i < p.size(); ++i) c.label += (i ? "," : "") + std::to_string(p[i]);
    c.label += ")";
    for (int q : dual) c.dim += q * (q - 1) / 2;
    out.push_back(c);
  }
  return out;
}

std::vector<UnipotentClass> curated_classes(const char* text) {
  auto j = nlohmann::json::parse(text);
  std::vector<UnipotentClass> out;
  for (const auto& c : j.at("classes")) {
    UnipotentClass u;
    u.label = c.at("label").get<std::string>();
    u.dim = c.at("dim").get<int>();
    u.special = c.at("special").get<bool>();
    out.push_back(u);
  }
  return out;
}

std::vector<UnipotentClass> simple_type_classes(const std::string& type) {
  if (type == "A1") return type_a_classes(2);
  if (type == "A2") return type_a_classes(3);
  if (type == "B2") return curated_classes(detail::kUnipotentB2);
  if (type == "G2") return curated_classes(detail::kUnipotentG2);
  throw UnsupportedError("no unipotent class table for type " + type);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::vector<int> coxeter_components(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 2) edges.emplace_back(i, j);
  return classes_from_pairs(n, edges);
}

CoxeterTable finite_w_lambda(const LambdaGeometry& geom) {
  std::vector<AffineRoot> gens;
  for (int h : geom.rbar_simple()) gens.push_back({h, 0});
  int positive = 0;
  for (int h : geom.rbar_lambda()) positive += geom.datum().is_positive_root(h) ? 1 : 0;
  return CoxeterTable(geom.datum(), gens, positive);
}

std::vector<int> translations_in(const CoxeterTable& w_lambda) {
  std::vector<int> out;
  for (int id = 1; id < w_lambda.size(); ++id)
    if (w_lambda.element(id).linear_part().is_identity()) out.push_back(id);
  return out;
}

std::vector<bool> s0_subset(const LambdaGeometry& geom) {
  const RootDatum& d = geom.datum();
  if (d.case_flag() != CaseFlag::B || geom.simple_system().empty())
    throw std::invalid_argument("s0_subset: W_lambda is not an affine Weyl group");
  const auto& simple = geom.simple_system();
  std::vector<int> comp = coxeter_components(geom.coxeter_matrix());
  std::vector<bool> out(simple.size(), false);
  for (std::size_t s = 0; s < simple.size(); ++s) {
    std::vector<AffineRoot> all, rest;
    for (std::size_t t = 0; t < simple.size(); ++t) {
      if (comp[t] != comp[s]) continue;
      all.push_back(simple[t]);
      if (t != s) rest.push_back(simple[t]);
    }
    // Modulo translations the component is its finite Weyl group of linear parts.
    out[s] = linear_group_order(d, rest) == linear_group_order(d, all);
  }
  return out;
}

std::vector<SimplePermutation> automorphism_group(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  SimplePermutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<SimplePermutation> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        ok = m[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])][static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] ==
             m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool in_a0(const SimplePermutation& sigma, const std::vector<int>& component, const std::vector<bool>& s0) {
  const std::size_t n = sigma.size();
  for (std::size_t i = 0; i < n; ++i)
    if (component[static_cast<std::size_t>(sigma[i])] != component[i]) return false;
  for (int u = 0; u < count_ids(component); ++u) {
    int fixed = 0, total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != u || !s0[i]) continue;
      ++total;
      fixed += sigma[i] == static_cast<int>(i) ? 1 : 0;
    }
    if (fixed != 0 && fixed != total) return false;
  }
  return true;
}

AffineAutomorphismData affine_automorphisms(const LambdaGeometry& geom, const CoxeterTable& w_lambda) {
  AffineAutomorphismData out;
  out.s0 = s0_subset(geom);
  out.component = coxeter_components(geom.coxeter_matrix());
  out.num_components = count_ids(out.component);
  out.translations = translations_in(w_lambda);
  // Rank check: the translations found must span the lattice of R-bar_lambda.
  const RootDatum& d = geom.datum();
  std::vector<Vec> basis;
  for (int id : out.translations) {
    Vec z = w_lambda.element(id).translation_part();
    std::vector<Vec> trial = basis;
    trial.push_back(z);
    // Gram determinant over the integers decides independence for rank <= 2.
    const std::size_t k = trial.size();
    Mat g{};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) at(g, static_cast<int>(i), static_cast<int>(j)) = dot(trial[i], trial[j], d.rank());
    if (k <= 2 && determinant(g, static_cast<int>(k)) != 0) basis = trial;
  }
  if (static_cast<int>(basis.size()) != static_cast<int>(geom.rbar_simple().size()))
    throw TruncationError("translations in the table do not span the translation lattice", w_lambda.bound());
  out.automorphisms = automorphism_group(geom.coxeter_matrix());
  for (const auto& sigma : out.automorphisms)
    if (in_a0(sigma, out.component, out.s0)) out.a0.push_back(sigma);
  return out;
}

int apply_automorphism(const CoxeterTable& w_lambda, const SimplePermutation& sigma, int id) {
  std::vector<int> word = w_lambda.word(id);
  for (int& s : word) s = sigma[static_cast<std::size_t>(s)];
  return w_lambda.from_word(word);
}

std::optional<WeylElement> is_inner_on_translations(const LambdaGeometry& geom, const CoxeterTable& w_lambda,
                                                    const SimplePermutation& sigma) {
  std::vector<int> ts = translations_in(w_lambda);
  std::vector<WeylElement> images;
  for (int t : ts) {
    int img = apply_automorphism(w_lambda, sigma, t);
    if (img < 0) throw TruncationError("image of a translation beyond the table", w_lambda.bound());
    images.push_back(w_lambda.element(img));
  }
  CoxeterTable wbar = finite_w_lambda(geom);
  for (int id = 0; id < wbar.size(); ++id) {
    const WeylElement& w = wbar.element(id);
    WeylElement winv = inverse(w);
    bool ok = true;
    for (std::size_t k = 0; k < ts.size() && ok; ++k)
      ok = compose(w, compose(w_lambda.element(ts[k]), winv)) == images[k];
    if (ok) return w;
  }
  return std::nullopt;
}

WeylElement unique_wbar_for_rho(const LambdaGeometry& geom, const SimplePermutation& rho) {
  const RootDatum& d = geom.datum();
  std::vector<bool> s0 = s0_subset(geom);
  std::vector<int> comp = coxeter_components(geom.coxeter_matrix());
  if (rho.size() != geom.simple_system().size()) throw std::invalid_argument("unique_wbar_for_rho: wrong permutation size");
  auto autos = automorphism_group(geom.coxeter_matrix());
  if (std::find(autos.begin(), autos.end(), rho) == autos.end() || !in_a0(rho, comp, s0))
    throw std::invalid_argument("unique_wbar_for_rho: permutation does not define an element of A_0");
  std::vector<int> hat = geom.hat_simple_system();
  CoxeterTable wbar = finite_w_lambda(geom);
  std::vector<WeylElement> found;
  for (int id = 0; id < wbar.size(); ++id) {
    bool ok = true;
    for (std::size_t i = 0; i < hat.size() && ok; ++i)
      ok = act(d, wbar.element(id), AffineRoot{hat[i], 0}) == AffineRoot{hat[static_cast<std::size_t>(rho[i])], 0};
    if (ok) found.push_back(wbar.element(id));
  }
  if (found.size() != 1)
    throw InvariantViolation("expected exactly one element of W-bar_lambda realising rho, found " + std::to_string(found.size()));
  return found.front();
}

bool fixes_cells(const StructureTable& table, const CellPartition& cells, const SimplePermutation& sigma) {
  for (int i = 0; i < cells.size(); ++i) {
    int j = apply_automorphism(table.table(), sigma, cells.element[static_cast<std::size_t>(i)]);
    if (j < 0 || j >= cells.size()) throw InvariantViolation("automorphism changed the length of an element");
    if (cells.two_sided[static_cast<std::size_t>(j)] != cells.two_sided[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

int OmegaOrbits::num_orbits() const { return count_ids(omega_bar); }

namespace {

std::vector<int> conjugation_orbits(const StructureTable& table, const CellPartition& cells,
                                    const std::vector<WeylElement>& group) {
  const CoxeterTable& t = table.table();
  std::vector<std::vector<int>> members = cells.two_sided_members();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& z : group) {
    WeylElement zinv = inverse(z);
    for (int c = 0; c < cells.num_two_sided(); ++c) {
      int w = cells.element[static_cast<std::size_t>(members[static_cast<std::size_t>(c)].front())];
      int img = t.find(compose(z, compose(t.element(w), zinv)));
      if (img < 0 || img >= cells.size()) throw InvariantViolation("conjugation left the support of W_lambda");
      pairs.emplace_back(c, cells.two_sided[static_cast<std::size_t>(img)]);
    }
  }
  return classes_from_pairs(cells.num_two_sided(), pairs);
}

}  // namespace

OmegaOrbits omega_orbits_on_cells(const LambdaGeometry& geom, const StructureTable& table, const CellPartition& cells,
                                  const CoxeterTable& w_table) {
  OmegaOrbits out;
  std::vector<WeylElement> omega_bar = omega_bar_lambda(geom);
  for (const auto& z : omega_bar)
    if (!(act(z, geom.lambda()) == geom.lambda()) || !geom.is_min_coset_rep(z)) out.omega_bar_in_omega = false;
  out.omega_bar = conjugation_orbits(table, cells, omega_bar);
  out.omega = conjugation_orbits(table, cells, groupoid_component(w_table, geom, geom.lambda()));
  out.coincide = same_partition(out.omega_bar, out.omega);
  return out;
}

CentralizerType centralizer_type(const LambdaGeometry& geom) {
  const RootDatum& d = geom.datum();
  if (geom.lambda().tau(d).first != 0) throw std::invalid_argument("centralizer_type: lambda must lie in V-bar'_0");
  CentralizerType out;
  out.components = geom.rbar_components();
  for (const auto& c : out.components) out.component_types.push_back(component_type(d, c));
  out.label = out.component_types.empty() ? "empty" : join(out.component_types, "x");
  std::multiset<std::vector<int>> expected;
  for (const auto& t : out.component_types) expected.insert(expected_edges(t, d.case_flag() == CaseFlag::B));
  if (edge_profile(geom.coxeter_matrix()) != expected)
    throw InvariantViolation("Coxeter matrix of W_lambda does not match the centralizer type " + out.label);
  return out;
}

UnipotentClassTable unipotent_classes(const std::string& type) {
  UnipotentClassTable out;
  out.type = type;
  if (type != "empty") {
    std::size_t start = 0;
    while (true) {
      std::size_t x = type.find('x', start);
      out.factors.push_back(type.substr(start, x == std::string::npos ? std::string::npos : x - start));
      if (x == std::string::npos) break;
      start = x + 1;
    }
  }
  out.classes.push_back({"1", 0, true, {}});
  bool first = true;
  for (const auto& f : out.factors) {
    std::vector<UnipotentClass> factor = simple_type_classes(f);
    std::vector<UnipotentClass> next;
    for (const auto& a : out.classes)
      for (std::size_t i = 0; i < factor.size(); ++i) {
        UnipotentClass c;
        c.label = first ? factor[i].label : a.label + "x" + factor[i].label;
        c.dim = a.dim + factor[i].dim;
        c.special = a.special && factor[i].special;
        c.parts = a.parts;
        c.parts.push_back(static_cast<int>(i));
        next.push_back(c);
      }
    out.classes = std::move(next);
    first = false;
  }
  return out;
}

std::vector<int> omega_action_on_classes(const LambdaGeometry& geom, const UnipotentClassTable& table) {
  const RootDatum& d = geom.datum();
  const auto& comps = geom.rbar_components();
  if (table.factors.size() != comps.size()) throw std::invalid_argument("class table does not match the centralizer");
  std::map<std::vector<int>, int> by_parts;
  for (std::size_t i = 0; i < table.classes.size(); ++i) by_parts[table.classes[i].parts] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& z : omega_bar_lambda(geom)) {
    std::vector<int> perm(comps.size(), -1);
    for (std::size_t u = 0; u < comps.size(); ++u) {
      int image = act(d, z, AffineRoot{comps[u].front(), 0}).root;
      for (std::size_t v = 0; v < comps.size(); ++v)
        if (std::find(comps[v].begin(), comps[v].end(), image) != comps[v].end()) perm[u] = static_cast<int>(v);
      if (perm[u] < 0) throw InvariantViolation("element of Omega-bar does not permute the components");
    }
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
      const auto& parts = table.classes[i].parts;
      std::vector<int> moved(parts.size());
      for (std::size_t u = 0; u < parts.size(); ++u) moved[static_cast<std::size_t>(perm[u])] = parts[u];
      pairs.emplace_back(static_cast<int>(i), by_parts.at(moved));
    }
  }
  return classes_from_pairs(static_cast<int>(table.classes.size()), pairs);
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerificationReport verify_theorem(const RootDatum& d, const Lambda& lambda, int bound) {
  if (lambda.tau(d).first != 0) throw std::invalid_argument("verify_theorem: lambda must lie in V-bar'_0");
  OrbitCells oc = cells_of_W_times_orbit(d, lambda, bound);
  const int rep = oc.representative;
  const LambdaGeometry& geom = *oc.geometry[static_cast<std::size_t>(rep)];
  const StructureTable& table = *oc.tables[static_cast<std::size_t>(rep)];
  const CellPartition& wl_cells = oc.w_lambda_cells[static_cast<std::size_t>(rep)];
  const bool case_b = d.case_flag() == CaseFlag::B;

  VerificationReport r;
  r.type = d.type();
  r.case_flag = d.case_flag();
  r.orbit = oc.orbit;
  r.bound = bound;
  r.cell_a = oc.cells.a_value;

  CentralizerType ct = centralizer_type(geom);
  r.centralizer = ct.label;
  UnipotentClassTable classes = unipotent_classes(ct.label);
  std::vector<int> orbit_of = omega_action_on_classes(geom, classes);
  std::map<int, ClassOrbit> orbits;
  bool dims_constant = true;
  for (std::size_t i = 0; i < classes.classes.size(); ++i) {
    const UnipotentClass& c = classes.classes[i];
    if (!case_b && !c.special) continue;
    auto [it, fresh] = orbits.emplace(orbit_of[i], ClassOrbit{{}, c.dim});
    if (!fresh && it->second.dim != c.dim) dims_constant = false;
    it->second.labels.push_back(c.label);
  }
  for (auto& [id, o] : orbits) r.class_orbits.push_back(o);

  auto add = [&](const std::string& name, bool pass, const std::string& details) { r.checks.push_back({name, pass, details}); };
  add("stabilized", oc.cells.stabilized && wl_cells.stabilized,
      "cells of W_lambda unchanged from bound " + std::to_string(std::max(0, bound - 2)) + " to " + std::to_string(bound));
  add("class-orbit-dimension", dims_constant, "classes in one orbit share their Springer fiber dimension");
  const int ncells = oc.cells.num_two_sided();
  const int norbits = static_cast<int>(r.class_orbits.size());
  add("cell-count", ncells == norbits,
      std::to_string(ncells) + " two-sided cells, " + std::to_string(norbits) + " class orbits");
  std::vector<int> a = r.cell_a, dims;
  for (const auto& o : r.class_orbits) dims.push_back(o.dim);
  std::sort(a.begin(), a.end());
  std::sort(dims.begin(), dims.end());
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  add("a-value-dimension", a == dims, "a-values " + list(a) + ", dimensions " + list(dims));

  OmegaOrbits om = omega_orbits_on_cells(geom, table, wl_cells, *oc.weyl);
  add("omega-bar-in-omega", om.omega_bar_in_omega, std::to_string(omega_bar_lambda(geom).size()) + " elements of Omega-bar");
  add("omega-orbits", om.coincide,
      std::to_string(om.num_orbits()) + " Omega-bar orbits, " + std::to_string(count_ids(om.omega)) + " Omega orbits on Cell(W_lambda)");
  add("orbit-count", om.num_orbits() == ncells,
      std::to_string(om.num_orbits()) + " orbits on Cell(W_lambda), " + std::to_string(ncells) + " cells of W x o");

  if (case_b && !geom.simple_system().empty()) {
    AffineAutomorphismData aut = affine_automorphisms(geom, table.table());
    int inner = 0, agree = 0, fixing = 0;
    for (const auto& sigma : aut.automorphisms) {
      bool in0 = in_a0(sigma, aut.component, aut.s0);
      auto w = is_inner_on_translations(geom, table.table(), sigma);
      agree += (in0 == w.has_value()) ? 1 : 0;
      if (w) {
        ++inner;
        fixing += fixes_cells(table, wl_cells, sigma) ? 1 : 0;
      }
    }
    const int n = static_cast<int>(aut.automorphisms.size());
    add("inner-on-translations", agree == n,
        std::to_string(inner) + " of " + std::to_string(n) + " automorphisms inner on translations, " +
            std::to_string(aut.a0.size()) + " in A_0");
    add("a0-fixes-cells", fixing == inner, std::to_string(fixing) + " of " + std::to_string(inner) + " fix every cell");
  }

  std::set<int> distinct(r.cell_a.begin(), r.cell_a.end());
  r.ambiguous = static_cast<int>(distinct.size()) != ncells;
  if (!r.ambiguous && a == dims) {
    for (int c = 0; c < ncells; ++c)
      for (int o = 0; o < norbits; ++o)
        if (r.class_orbits[static_cast<std::size_t>(o)].dim == r.cell_a[static_cast<std::size_t>(c)]) r.matching.push_back(o);
  }
  return r;
}

}  // namespace klcells
