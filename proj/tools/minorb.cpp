#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>

#include "minorb/chevalley.hpp"
#include "minorb/env.hpp"
#include "minorb/hamiltonian.hpp"
#include "minorb/heisenberg.hpp"
#include "minorb/poly.hpp"
#include "minorb/rep.hpp"
#include "minorb/root_system.hpp"
#include "minorb/verify.hpp"

using namespace minorb;
using Json = nlohmann::ordered_json;

namespace {

Json poly_terms_json(const Poly& p, int nvars) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<long long> exps(nvars, 0);
    for (const auto& [v, k] : m.e)
      if (v < nvars) exps[v] = k;
    terms.push_back({{"exps", exps}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return terms;
}

SimpleType parse_type_or_die(const std::string& s) {
  auto t = SimpleType::parse(s);
  if (!t) {
    std::cerr << "error: unknown type '" << s
              << "'; expected <family><rank> with family A..G, e.g. A3, B4, E8, G2\n"
              << "  valid ranks: A>=1, B>=2, C>=2, D>=3 (D3 is the A3 alias for the so(6) tables),\n"
              << "  E in {6,7,8}, F4, G2\n";
    std::exit(2);
  }
  return *t;
}

std::string poly_str(const ChevalleyBasis& cb, const Poly& p) {
  return p.str([&](int v) { return cb.basis_label(v); });
}

// Figure-style ASCII Dynkin diagram with one label per node.
std::string dynkin_ascii(const RootSystem& rs, const std::vector<long long>& m) {
  const int l = rs.rank();
  char fam = rs.type.family;
  // Chain of nodes drawn horizontally, optional branch node drawn above.
  std::vector<int> chain;
  int branch = -1, branch_under = -1;
  if (fam == 'D' && l >= 4) {
    for (int i = 0; i < l - 1; ++i) chain.push_back(i);
    branch = l - 1;
    branch_under = l - 3;
  } else if (fam == 'E') {
    chain = {0, 2, 3, 4, 5};
    for (int i = 6; i < l; ++i) chain.push_back(i);
    branch = 1;
    branch_under = 3;
  } else {
    for (int i = 0; i < l; ++i) chain.push_back(i);
  }
  auto edge = [&](int a, int b) -> std::string {
    // Drawn between chain positions holding nodes a and b.
    if (fam == 'B' && b == l - 1) return "=>=";
    if (fam == 'C' && b == l - 1) return "=<=";
    if (fam == 'F' && a == 1) return "=>=";
    if (fam == 'G') return "<<=";  // triple edge, arrow toward the short root a1
    return "---";
  };
  std::string row, labels;
  std::vector<int> col(l, 0);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) row += edge(chain[i - 1], chain[i]);
    col[chain[i]] = static_cast<int>(row.size());
    row += "o";
  }
  labels.assign(row.size(), ' ');
  for (int i : chain) {
    std::string s = std::to_string(m[i]);
    for (std::size_t j = 0; j < s.size() && col[i] + j < labels.size(); ++j) labels[col[i] + j] = s[j];
  }
  std::string out;
  if (branch >= 0) {
    std::string top(col[branch_under], ' '), bar(col[branch_under], ' ');
    top += "o " + std::to_string(m[branch]);
    bar += "|";
    out += top + "\n" + bar + "\n";
  }
  out += row + "\n" + labels;
  return out;
}

int cmd_roots(const SimpleType& t, bool json) {
  RootSystem rs = build_root_system(t);
  if (json) {
    Json j;
    j["type"] = t.name();
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan;
    Json sym = Json::array();
    for (const auto& d : rs.symmetrizer) sym.push_back(rat_str(d));
    j["symmetrizer"] = sym;
    Json pr = Json::array();
    for (const auto& r : rs.positive_roots) pr.push_back(r.coords);
    j["positive_roots"] = pr;
    j["highest_root"] = rs.highest_root.coords;
    j["dual_coxeter"] = rs.dual_coxeter;
    j["comarks"] = rs.comarks;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << t.name() << ": " << rs.num_positive() << " positive roots, h_vee = " << rs.dual_coxeter
              << "\n";
    for (int i = 0; i < rs.num_positive(); ++i)
      std::cout << "  r" << (i + 1) << " = " << rs.positive_roots[i].str() << "\n";
    std::cout << "highest root: " << rs.highest_root.str() << "\n";
  }
  return 0;
}

int cmd_chevalley(const SimpleType& t, bool json) {
  RootSystem rs = build_root_system(t);
  ChevalleyBasis cb = build_chevalley(rs);
  if (json) {
    Json j;
    j["type"] = t.name();
    j["dim"] = cb.dim;
    Json triples = Json::array();
    for (int a = 0; a < cb.dim; ++a)
      for (int b = a + 1; b < cb.dim; ++b)
        for (const auto& [k, c] : cb.bracket_basis(a, b))
          triples.push_back({a, b, k, rat_str(c)});
    j["brackets"] = triples;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << t.name() << ": dim g = " << cb.dim << "\n";
    for (int a = 0; a < cb.dim; ++a)
      for (int b = a + 1; b < cb.dim; ++b) {
        const auto& br = cb.bracket_basis(a, b);
        if (br.empty()) continue;
        std::cout << "[" << cb.basis_label(a) << "," << cb.basis_label(b) << "] =";
        bool first = true;
        for (const auto& [k, c] : br) {
          std::cout << (first ? " " : " + ");
          if (c != 1) std::cout << rat_str(c) << "*";
          std::cout << cb.basis_label(k);
          first = false;
        }
        std::cout << "\n";
      }
  }
  return 0;
}

int cmd_mnumbers(const SimpleType& t, bool json, const std::string& method, long dim_cap) {
  RootSystem rs = build_root_system(t);
  ChevalleyBasis cb = build_chevalley(rs);
  std::map<std::string, std::vector<long long>> out;
  if (method == "sl2" || method == "all") out["sl2"] = m_vector(cb, MNumberMethod::Sl2);
  if (method == "dominance" || method == "all") out["dominance"] = m_vector(cb, MNumberMethod::Dominance);
  if (method == "rep") out["rep"] = m_vector(cb, MNumberMethod::Rep, dim_cap);
  if (out.empty()) {
    std::cerr << "error: --method must be one of sl2, dominance, rep, all\n";
    return 2;
  }
  const auto& m = out.begin()->second;
  for (const auto& [name, v] : out)
    if (v != m) {
      std::cerr << "error: methods disagree\n";
      return 1;
    }
  if (json) {
    Json j;
    j["type"] = t.name();
    j["m"] = m;
    j["dual_coxeter"] = rs.dual_coxeter;
    Json methods = Json::array();
    for (const auto& [name, v] : out) methods.push_back(name);
    j["methods"] = methods;
    std::cout << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? " " : "") << m[i];
    std::cout << "\n" << dynkin_ascii(rs, m) << "\n";
    long long s = 0;
    for (auto x : m) s += x;
    std::cout << "sum = " << s << " = h_vee - 1 = " << rs.dual_coxeter - 1 << "\n";
    std::cout << Json(m).dump() << "\n";
  }
  return 0;
}

int cmd_hamiltonian(const SimpleType& t, int node, int order, const std::string& basis, bool json, long dim_cap) {
  RootSystem rs = build_root_system(t);
  if (node < 1 || node > rs.rank()) {
    std::cerr << "error: --node must be in 1.." << rs.rank() << "\n";
    return 2;
  }
  if (basis == "matrix") {
    char fam = t.family;
    if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'D') {
      std::cerr << "error: --basis matrix requires a classical type\n";
      return 2;
    }
    const int n = rs.rank();
    bool ok = order == 1 ? (node >= 1 && node <= n)
                         : (order == 2 && ((fam == 'B' && node >= 2 && node <= n - 1) ||
                                           (fam == 'D' && node >= 2 && node <= n - 2)));
    if (!ok) {
      std::cerr << "error: no matrix trace form for node " << node << " order " << order << " in " << t.name()
                << "\n";
      return 2;
    }
    auto ent = [&](int i, int j) { return "a[" + std::to_string(i) + "][" + std::to_string(j) + "]"; };
    std::string f;
    if (order == 1) {
      for (int i = 1; i <= node; ++i) f += (i > 1 ? " + " : "") + ent(i, i);
    } else {
      bool first = true;
      for (int i = 1; i <= node; ++i)
        for (int j = i + 1; j <= node; ++j) {
          f += (first ? "" : " + ") + ent(i, i) + "*" + ent(j, j) + " - " + ent(i, j) + "*" + ent(j, i);
          first = false;
        }
    }
    if (json)
      std::cout << Json{{"type", t.name()}, {"node", node}, {"order", order}, {"basis", "matrix"}, {"poly", f}}.dump()
                << "\n";
    else
      std::cout << f << "\n";
    return 0;
  }
  ChevalleyBasis cb = build_chevalley(rs);
  RepModule rep = build_irrep(rs, rs.fundamental_weight(node - 1), dim_cap);
  Poly p = hamiltonian_poly(cb, rep, node - 1, order);
  if (json)
    std::cout << Json{{"type", t.name()},
                      {"node", node},
                      {"order", order},
                      {"basis", "chevalley"},
                      {"poly", poly_str(cb, p)},
                      {"terms", poly_terms_json(p, cb.dim)}}
                     .dump()
              << "\n";
  else
    std::cout << poly_str(cb, p) << "\n";
  return 0;
}

int cmd_heisenberg_tables(const SimpleType& t, bool json, long dim_cap) {
  RootSystem rs = build_root_system(t);
  ChevalleyBasis cb = build_chevalley(rs);
  auto hb_opt = kostant_roots_table_order(rs);
  HeisenbergBasis hb = hb_opt ? *hb_opt : kostant_roots(rs);
  long long max_m = 2;  // the worked tables always print the order-2 row
  for (auto c : rs.comarks) max_m = std::max(max_m, c);
  std::map<int, std::map<int, Poly>> cells;
  for (int k = 0; k < rs.rank(); ++k) {
    RepModule rep = build_irrep(rs, rs.fundamental_weight(k), dim_cap);
    for (int r = 1; r <= max_m; ++r) cells[k + 1][r] = heisenberg_hamiltonian(cb, hb, rep, k, r);
  }
  if (json) {
    Json j;
    j["type"] = t.name();
    j["table_order"] = hb_opt.has_value();
    Json roots = Json::array();
    for (int i = 0; i < hb.size(); ++i) roots.push_back(rs.positive_roots[hb.root_indices[i]].coords);
    j["roots"] = roots;
    Json cj = Json::object();
    for (const auto& [k, row] : cells) {
      Json rj = Json::object();
      for (const auto& [r, p] : row)
        rj["order" + std::to_string(r)] = {{"poly", p.str()}, {"terms", poly_terms_json(p, hb.size())}};
      cj["w" + std::to_string(k)] = rj;
    }
    j["cells"] = cj;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << t.name() << " Heisenberg chart (dim n* = " << hb.size() << ")\n";
    for (int i = 0; i < hb.size(); ++i)
      std::cout << "  E[" << i << "] = " << rs.positive_roots[hb.root_indices[i]].str() << "\n";
    for (int r = 1; r <= max_m; ++r) {
      std::cout << "Order-" << r << ":\n";
      for (const auto& [k, row] : cells) std::cout << "  w" << k << ": " << row.at(r).str() << "\n";
    }
  }
  return 0;
}

int cmd_quantize(const SimpleType& t, int degree, bool check, bool orbit, const std::string& form_name,
                 bool json, long dim_cap) {
  RootSystem rs = build_root_system(t);
  ChevalleyBasis cb = build_chevalley(rs);
  FormKind form = form_name == "normalized" ? FormKind::Normalized : FormKind::Killing;
  std::map<int, RepModule> reps;
  for (int k = 0; k < rs.rank(); ++k) reps.emplace(k, build_irrep(rs, rs.fundamental_weight(k), dim_cap));

  Json j;
  j["type"] = t.name();
  j["form"] = form_name;
  bool all_pass = true;

  std::map<int, EnvElement> q1, qd;
  for (int k = 0; k < rs.rank(); ++k) {
    q1[k] = travkin_quantize(cb, reps.at(k), k, 1, form);
    qd[k] = travkin_quantize(cb, reps.at(k), k, degree, form);
  }
  Json elems = Json::object();
  for (int k = 0; k < rs.rank(); ++k) {
    elems["w" + std::to_string(k + 1)] = {{"degree1", q1[k].str(cb)},
                                          {"degree" + std::to_string(degree), qd[k].str(cb)}};
    if (!json) {
      std::cout << "w" << (k + 1) << " degree-1: " << q1[k].str(cb) << "\n";
      std::cout << "w" << (k + 1) << " degree-" << degree << ": " << qd[k].str(cb) << "\n";
    }
  }
  j["elements"] = elems;

  if (check) {
    Json checks = Json::array();
    auto record = [&](const std::string& what, bool ok) {
      checks.push_back({{"check", what}, {"status", ok ? "pass" : "fail"}});
      if (!json) std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
      if (!ok) all_pass = false;
    };
    for (int a = 0; a < rs.rank(); ++a)
      for (int b = a + 1; b < rs.rank(); ++b)
        record("[H_" + std::to_string(a + 1) + ", H_" + std::to_string(b + 1) + "] = 0",
               commutator(q1[a], q1[b], cb).is_zero());
    for (int a = 0; a < rs.rank(); ++a)
      for (int b = 0; b < rs.rank(); ++b)
        record("[H_" + std::to_string(a + 1) + ", Q2_" + std::to_string(b + 1) + "] = 0",
               commutator(q1[a], travkin_quantize(cb, reps.at(b), b, 2, form), cb).is_zero());
    // degree-2/degree-2 commutators: reported, not asserted.
    Json reports = Json::array();
    for (int a = 0; a < rs.rank(); ++a)
      for (int b = a + 1; b < rs.rank(); ++b) {
        EnvElement c =
            commutator(travkin_quantize(cb, reps.at(a), a, 2, form), travkin_quantize(cb, reps.at(b), b, 2, form), cb);
        reports.push_back({{"pair", {a + 1, b + 1}},
                           {"zero_in_pbw", c.is_zero()},
                           {"terms", c.terms().size()}});
        if (!json)
          std::cout << "[report] [Q2_" << (a + 1) << ", Q2_" << (b + 1) << "]: "
                    << (c.is_zero() ? "0 in PBW form" : std::to_string(c.terms().size()) + " PBW terms") << "\n";
      }
    j["checks"] = checks;
    j["degree2_degree2"] = reports;
  }

  if (orbit) {
    HeisenbergBasis hb = kostant_roots(rs);
    Json oj = Json::array();
    std::vector<std::pair<std::string, EnvElement>> prop;
    for (int k = 0; k < rs.rank(); ++k)
      for (int r = 1; r <= rs.comarks[k]; ++r)
        prop.push_back({"K_" + std::to_string(k + 1) + "_" + std::to_string(r),
                        heisenberg_orbit_quantize(cb, hb, reps.at(k), k, r, form)});
    for (const auto& [name, e] : prop) {
      oj.push_back({{"element", name}, {"value", e.str(cb)}});
      if (!json) std::cout << "[orbit] " << name << " = " << e.str(cb) << "\n";
    }
    Json comms = Json::array();
    for (std::size_t a = 0; a < prop.size(); ++a)
      for (std::size_t b = a + 1; b < prop.size(); ++b) {
        EnvElement c = commutator(prop[a].second, prop[b].second, cb);
        comms.push_back({{"pair", {prop[a].first, prop[b].first}},
                         {"zero_in_pbw", c.is_zero()},
                         {"terms", c.terms().size()}});
        if (!json)
          std::cout << "[report] [" << prop[a].first << ", " << prop[b].first << "]: "
                    << (c.is_zero() ? "0 in PBW form" : std::to_string(c.terms().size()) + " PBW terms") << "\n";
      }
    j["orbit_elements"] = oj;
    j["orbit_commutators"] = comms;
  }

  if (json) std::cout << j.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int cmd_verify(const std::string& what, const SimpleType* t, int samples, std::uint64_t seed, bool json,
               const std::string& testdata, long dim_cap) {
  VerifyReport rep;
  if (what == "commute") {
    rep = verify_commutativity(*t, samples, seed, dim_cap);
  } else if (what == "independence") {
    rep = verify_independence(*t, seed, dim_cap);
  } else if (what == "cross") {
    rep = verify_cross_basis(*t, samples, seed, dim_cap);
  } else if (what == "tables") {
    rep = verify_tables(*t, testdata);
  } else if (what == "mnumbers") {
    rep = verify_mnumbers(testdata, false);
  } else {
    std::cerr << "error: verify subcommand must be one of commute, independence, cross, tables, mnumbers\n";
    return 2;
  }
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.human() << "\n";
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integrable system on the minimal nilpotent orbit: exact construction and verification"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::string type_str;
  long dim_cap = kDefaultDimCap;

  auto* roots = app.add_subcommand("roots", "root system data");
  roots->fallthrough();
  roots->add_option("type", type_str)->required();

  auto* chev = app.add_subcommand("chevalley", "structure constants");
  chev->fallthrough();
  chev->add_option("type", type_str)->required();

  auto* mn = app.add_subcommand("mnumbers", "Hamiltonian counts per Dynkin node");
  mn->fallthrough();
  std::string method = "all";
  mn->add_option("type", type_str)->required();
  mn->add_option("--method", method, "sl2 | dominance | rep | all (default all = sl2+dominance)");
  mn->add_option("--dim-cap", dim_cap);

  auto* ham = app.add_subcommand("hamiltonian", "one Hamiltonian polynomial");
  ham->fallthrough();
  int node = 1, order = 1;
  std::string basis = "chevalley";
  ham->add_option("type", type_str)->required();
  ham->add_option("--node", node)->required();
  ham->add_option("--order", order);
  ham->add_option("--basis", basis, "chevalley | matrix");
  ham->add_option("--dim-cap", dim_cap);

  auto* ht = app.add_subcommand("heisenberg-tables", "Hamiltonians in the Heisenberg chart");
  ht->fallthrough();
  ht->add_option("type", type_str)->required();
  ht->add_option("--dim-cap", dim_cap);

  auto* qz = app.add_subcommand("quantize", "PBW quantization and commutator checks");
  qz->fallthrough();
  int degree = 2;
  bool check = false, orbit = false;
  std::string form = "killing";
  qz->add_option("type", type_str)->required();
  qz->add_option("--degree", degree);
  qz->add_flag("--check", check, "assert the degree-1 commutator identities");
  qz->add_flag("--orbit", orbit, "report the Heisenberg-orbit quantization proposal");
  qz->add_option("--form", form, "killing | normalized");
  qz->add_option("--dim-cap", dim_cap);

  auto* vf = app.add_subcommand("verify", "claim verification harness");
  vf->fallthrough();
  std::string what, vtype;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string testdata = "testdata";
  vf->add_option("what", what, "commute | independence | cross | tables | mnumbers")->required();
  vf->add_option("type", vtype, "simple type (unused for mnumbers)");
  vf->add_option("--samples", samples);
  vf->add_option("--seed", seed);
  vf->add_option("--testdata", testdata);
  vf->add_option("--dim-cap", dim_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(parse_type_or_die(type_str), json);
    if (chev->parsed()) return cmd_chevalley(parse_type_or_die(type_str), json);
    if (mn->parsed()) return cmd_mnumbers(parse_type_or_die(type_str), json, method, dim_cap);
    if (ham->parsed()) return cmd_hamiltonian(parse_type_or_die(type_str), node, order, basis, json, dim_cap);
    if (ht->parsed()) return cmd_heisenberg_tables(parse_type_or_die(type_str), json, dim_cap);
    if (qz->parsed()) return cmd_quantize(parse_type_or_die(type_str), degree, check, orbit, form, json, dim_cap);
    if (vf->parsed()) {
      SimpleType t;
      SimpleType* tp = nullptr;
      if (what != "mnumbers") {
        if (vtype.empty()) {
          std::cerr << "error: verify " << what << " needs a type argument\n";
          return 2;
        }
        t = parse_type_or_die(vtype);
        tp = &t;
      }
      return cmd_verify(what, tp, samples, seed, json, testdata, dim_cap);
    }
  } catch (const DimCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
