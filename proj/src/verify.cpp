#include "minorb/verify.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "minorb/chevalley.hpp"
#include "minorb/env.hpp"
#include "minorb/hamiltonian.hpp"
#include "minorb/heisenberg.hpp"
#include "minorb/poly.hpp"
#include "minorb/rep.hpp"

namespace minorb {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
};

Json word_json(const OrbitPoint& p) {
  Json w = Json::array();
  for (const auto& s : p.word) w.push_back({{"flat", s.flat}, {"t", rat_str(s.t)}});
  return w;
}

struct Sample {
  OrbitPoint point;
  Json provenance;
};

// Conjugation-word samples with lengths cycling over 0..8 (so e_theta itself
// is always present), interleaved with chart samples
// Ad(exp(sum x_i E_i))(c f_theta). Words of length <= 8 alone are too shallow
// to make the deeper Hamiltonians nonzero, so the chart half carries the
// statistical weight of the zero tests; both kinds lie on the orbit exactly.
std::vector<Sample> sample_points(const ChevalleyBasis& cb, int samples, std::uint64_t seed) {
  std::vector<Sample> pts;
  pts.reserve(samples);
  HeisenbergBasis hb = kostant_roots(cb.rs);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  static const std::pair<long, long> kC[] = {{1, 1}, {2, 1}, {1, 2}, {-1, 1}, {3, 2}};
  static const std::pair<long, long> kX[] = {{0, 1}, {1, 1},  {-1, 1}, {2, 1}, {1, 2},
                                             {-1, 2}, {3, 1}, {-2, 1}, {1, 3}};
  for (int s = 0; s < samples; ++s) {
    if (s % 2 == 0) {
      OrbitPoint p = sample_orbit_point(cb, seed + s, (s / 2) % 9);
      Json prov = {{"kind", "word"}, {"seed", seed + s}, {"word", word_json(p)}};
      pts.push_back({std::move(p), std::move(prov)});
    } else {
      ChartPoint cp;
      auto [cn, cd] = kC[rng() % 5];
      cp.c = rat(cn, cd);
      Json xs = Json::array();
      cp.x.resize(hb.size());
      for (int i = 0; i < hb.size(); ++i) {
        auto [xn, xd] = kX[rng() % 9];
        cp.x[i] = rat(xn, xd);
        xs.push_back(rat_str(cp.x[i]));
      }
      Json prov = {{"kind", "chart"}, {"c", rat_str(cp.c)}, {"x", xs}};
      pts.push_back({chart_to_orbit(cb, hb, cp), std::move(prov)});
    }
  }
  return pts;
}

}  // namespace

Json VerifyReport::to_json() const {
  Json j;
  j["claim"] = claim;
  j["type"] = type;
  j["params"] = params;
  j["samples"] = samples;
  j["status"] = pass ? "pass" : "fail";
  if (!warnings.empty()) j["warnings"] = warnings;
  j["details"] = details;
  j["wall_ms"] = wall_ms;
  return j;
}

std::string VerifyReport::human() const {
  std::ostringstream os;
  os << (pass ? "[PASS] " : "[FAIL] ") << claim << " " << type;
  if (samples > 0) os << " (" << samples << " samples)";
  for (const auto& w : warnings) os << "\n  [warn] " << w;
  if (!pass) os << "\n  " << details.dump();
  return os.str();
}

VerifyReport verify_commutativity(SimpleType type, int samples, std::uint64_t seed, long dim_cap) {
  Timer timer;
  VerifyReport rep;
  rep.claim = "commutativity";
  rep.type = type.name();
  rep.params = {{"seed", seed}, {"samples", samples}};
  rep.samples = samples;

  RootSystem rs = build_root_system(type);
  ChevalleyBasis cb = build_chevalley(rs);
  HamiltonianSet hs = hamiltonian_set(cb, dim_cap);

  // The bracket {x_a,x_b} = x_[a,b] is the Lie-Poisson structure in the
  // coordinates xi_a = kappa(x, e_a) of g*, so the Hamiltonians are
  // precomposed with the inverse Killing Gram matrix and the orbit points are
  // mapped through it; function values are unchanged by the pairing.
  auto image = killing_dual_substitution(cb);
  std::vector<std::pair<std::pair<int, int>, Poly>> fams;
  for (const auto& [key, poly] : hs.entries) fams.push_back({key, substitute(poly, image)});

  auto pts = sample_points(cb, samples, seed);
  std::vector<QVec> xi;
  xi.reserve(pts.size());
  for (const auto& smp : pts) xi.push_back(cb.dual_coordinates(smp.point.coeffs));

  int pairs_checked = 0;
  int nonzero_evaluations = 0;
  for (std::size_t a = 0; a < fams.size(); ++a)
    for (std::size_t s = 0; s < xi.size(); ++s)
      if (!is_zero(fams[a].second.evaluate(xi[s]))) ++nonzero_evaluations;
  for (std::size_t a = 0; a < fams.size() && rep.pass; ++a) {
    for (std::size_t b = a + 1; b < fams.size() && rep.pass; ++b) {
      Poly br = kk_bracket(fams[a].second, fams[b].second, cb);
      ++pairs_checked;
      for (std::size_t s = 0; s < pts.size(); ++s) {
        Rat v = br.evaluate(xi[s]);
        if (!is_zero(v)) {
          rep.pass = false;
          rep.details = {{"pair",
                          {{"left", {fams[a].first.first + 1, fams[a].first.second}},
                           {"right", {fams[b].first.first + 1, fams[b].first.second}}}},
                         {"sample", s},
                         {"point", pts[s].provenance},
                         {"value", rat_str(v)}};
          break;
        }
      }
    }
  }
  rep.details["nonzero_hamiltonian_evaluations"] = nonzero_evaluations;
  rep.params["coordinates"] = "killing-dual";
  rep.details["pairs"] = pairs_checked;
  rep.details["hamiltonians"] = fams.size();
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_independence(SimpleType type, std::uint64_t seed, long dim_cap) {
  Timer timer;
  VerifyReport rep;
  rep.claim = "independence";
  rep.type = type.name();
  rep.params = {{"seed", seed}};

  RootSystem rs = build_root_system(type);
  ChevalleyBasis cb = build_chevalley(rs);
  HamiltonianSet hs = hamiltonian_set(cb, dim_cap);
  const int target = rs.dual_coxeter - 1;

  std::vector<Poly> polys;
  for (const auto& [key, poly] : hs.entries) polys.push_back(poly);
  if (static_cast<int>(polys.size()) != target)
    throw std::logic_error("verify_independence: Hamiltonian count mismatch");

  // Precomputed partials, then exact rank at each sampled point.
  std::vector<std::vector<Poly>> jac(polys.size(), std::vector<Poly>(cb.dim));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (int v = 0; v < cb.dim; ++v) jac[i][v] = polys[i].derivative(v);

  auto pts = sample_points(cb, 10, seed);
  rep.samples = static_cast<int>(pts.size());
  int best_rank = 0;
  int witness = -1;
  for (std::size_t s = 0; s < pts.size(); ++s) {
    QMatrix m(polys.size(), cb.dim);
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (int v = 0; v < cb.dim; ++v)
        if (!jac[i][v].is_zero()) m.at(i, v) = jac[i][v].evaluate(pts[s].point.coeffs);
    int r = static_cast<int>(m.rank());
    if (r > best_rank) {
      best_rank = r;
      witness = static_cast<int>(s);
    }
    if (best_rank == target) break;
  }
  rep.details["rank"] = best_rank;
  rep.details["required"] = target;
  rep.details["witness_sample"] = witness;
  if (best_rank != target) rep.pass = false;

  // Out-of-range Hamiltonians vanish on every sample.
  Json vanish = Json::array();
  for (int k = 0; k < rs.rank() && rep.pass; ++k) {
    RepModule module = build_irrep(rs, rs.fundamental_weight(k), dim_cap);
    for (int extra = 1; extra <= 2 && rep.pass; ++extra) {
      int n = static_cast<int>(hs.m[k]) + extra;
      Poly f = hamiltonian_poly(cb, module, k, n);
      for (std::size_t s = 0; s < pts.size(); ++s) {
        Rat v = f.evaluate(pts[s].point.coeffs);
        if (!is_zero(v)) {
          rep.pass = false;
          rep.details["vanishing_failure"] = {
              {"node", k + 1}, {"order", n}, {"point", pts[s].provenance}, {"value", rat_str(v)}};
          break;
        }
      }
      vanish.push_back({{"node", k + 1}, {"order", n}});
    }
  }
  rep.details["vanishing_checked"] = vanish;
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_cross_basis(SimpleType type, int samples, std::uint64_t seed, long dim_cap) {
  Timer timer;
  VerifyReport rep;
  rep.claim = "cross-basis";
  rep.type = type.name();
  rep.params = {{"seed", seed}, {"samples", samples}};
  rep.samples = samples;

  RootSystem rs = build_root_system(type);
  ChevalleyBasis cb = build_chevalley(rs);
  const bool classical = type.family == 'A' || type.family == 'B' || type.family == 'C' || type.family == 'D';
  if (!classical && type.family != 'G')
    throw std::invalid_argument("verify_cross_basis: classical types or G2 only");

  HamiltonianSet hs = hamiltonian_set(cb, dim_cap);
  HeisenbergBasis hb = kostant_roots(rs);
  std::map<int, RepModule> reps;
  for (int k = 0; k < rs.rank(); ++k) reps.emplace(k, build_irrep(rs, rs.fundamental_weight(k), dim_cap));

  // (a) chart consistency: f_{r,k}(chart(c,x)) = c^r r! H^heis_{r,k}(x).
  std::mt19937_64 rng(seed);
  static const std::pair<long, long> kC[] = {{1, 1}, {2, 1}, {1, 2}, {-1, 1}};
  static const std::pair<long, long> kX[] = {{0, 1}, {1, 1}, {-1, 1}, {2, 1}, {1, 2}, {-1, 2}, {0, 1}};
  int chart_checks = 0;
  for (int s = 0; s < samples && rep.pass; ++s) {
    ChartPoint p;
    auto [cn, cd] = kC[rng() % 4];
    p.c = rat(cn, cd);
    p.x.resize(hb.size());
    for (int i = 0; i < hb.size(); ++i) {
      auto [xn, xd] = kX[rng() % 7];
      p.x[i] = rat(xn, xd);
    }
    OrbitPoint y = chart_to_orbit(cb, hb, p);
    for (int k = 0; k < rs.rank() && rep.pass; ++k) {
      Rat rfact(1);
      for (int r = 1; r <= hs.m[k]; ++r) {
        rfact *= r;
        Rat lhs = hs.entries.at({k, r}).evaluate(y.coeffs);
        Poly hh = heisenberg_hamiltonian(cb, hb, reps.at(k), k, r);
        Rat cr(1);
        for (int i = 0; i < r; ++i) cr *= p.c;
        Rat rhs = cr * rfact * hh.evaluate(p.x);
        ++chart_checks;
        if (lhs != rhs) {
          rep.pass = false;
          rep.details["chart_mismatch"] = {{"node", k + 1},
                                           {"order", r},
                                           {"sample", s},
                                           {"lhs", rat_str(lhs)},
                                           {"rhs", rat_str(rhs)}};
          break;
        }
      }
    }
  }
  rep.details["chart_checks"] = chart_checks;

  // (b) classical matrix realization: f_{r,k} = r! [t^r] det of the leading
  // block of the truncated exponential; fork and spinor nodes through the
  // trace of the full n x n block with the documented factor 2.
  if (classical && rep.pass) {
    const int n = rs.rank();
    ClassicalRealization rz = classical_realization(cb, false);
    ClassicalRealization rz_swapped;
    if (type.family == 'D') rz_swapped = classical_realization(cb, true);
    auto pts = sample_points(cb, samples, seed + 7919);
    int matrix_checks = 0;
    for (const auto& smp : pts) {
      if (!rep.pass) break;
      const OrbitPoint& pt = smp.point;
      GVec x = pt.sparse();
      QMatrix a = realize_matrix(cb, rz, x);
      auto check = [&](int k, int r, const Rat& lhs, const Rat& rhs, const char* what) {
        ++matrix_checks;
        if (lhs != rhs) {
          rep.pass = false;
          rep.details["matrix_mismatch"] = {{"node_or_block", k}, {"order", r}, {"kind", what},
                                            {"lhs", rat_str(lhs)}, {"rhs", rat_str(rhs)}};
        }
      };
      // det-block route, valid where the exterior power is fundamental.
      int kmax_det = type.family == 'A' || type.family == 'C' ? n : (type.family == 'B' ? n - 1 : n - 2);
      for (int k = 1; k <= kmax_det && rep.pass; ++k) {
        Rat rfact(1);
        for (int r = 1; r <= hs.m[k - 1]; ++r) {
          rfact *= r;
          check(k, r, hs.entries.at({k - 1, r}).evaluate(pt.coeffs),
                rfact * exp_det_coefficient(a, k, r), "det-block");
        }
      }
      // trace route, same ranges as the classical description.
      for (int k = 1; k <= kmax_det && rep.pass; ++k) {
        check(k, 1, exp_det_coefficient(a, k, 1), classical_trace_hamiltonian(type.family, k, 1, a), "trace");
        bool l2 = (type.family == 'B' && k >= 2 && k <= n - 1) || (type.family == 'D' && k >= 2 && k <= n - 2);
        if (l2)
          check(k, 2, exp_det_coefficient(a, k, 2), classical_trace_hamiltonian(type.family, k, 2, a), "trace");
      }
      if (type.family == 'B' && rep.pass) {
        check(n, 1, hs.entries.at({n - 1, 1}).evaluate(pt.coeffs) * 2,
              classical_trace_hamiltonian('B', n, 1, a), "spinor-trace");
      }
      if (type.family == 'D' && rep.pass) {
        QMatrix a2 = realize_matrix(cb, rz_swapped, x);
        check(n, 1, hs.entries.at({n - 1, 1}).evaluate(pt.coeffs) * 2,
              classical_trace_hamiltonian('D', n, 1, a), "spinor-trace");
        check(n, 1, hs.entries.at({n - 2, 1}).evaluate(pt.coeffs) * 2,
              classical_trace_hamiltonian('D', n, 1, a2), "spinor-trace-swapped");
      }
    }
    rep.details["matrix_checks"] = matrix_checks;
  }
  rep.wall_ms = timer.ms();
  return rep;
}

namespace {

struct GoldenTable {
  // cells[(node, order)] = (poly, is_source_discrepancy)
  std::map<std::pair<int, int>, std::pair<Poly, bool>> cells;
};

std::string table_file_name(SimpleType t) {
  // so(m) naming for the B/D series tables.
  switch (t.family) {
    case 'B': return "table_so" + std::to_string(2 * t.rank + 1) + ".txt";
    case 'D': return "table_so" + std::to_string(2 * t.rank) + ".txt";
    case 'G': return "table_g2.txt";
    default: return "";
  }
}

GoldenTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table " + path);
  GoldenTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    bool disc = false;
    std::string body = line;
    if (body[0] == '!') {
      disc = true;
      body = body.substr(1);
    }
    std::istringstream is(body);
    std::string wk, rr, poly;
    is >> wk >> rr;
    std::getline(is, poly);
    int node = std::stoi(wk.substr(1));
    int order = std::stoi(rr.substr(1));
    t.cells[{node, order}] = {Poly::parse(poly), disc};
  }
  return t;
}

std::vector<std::vector<int>> load_roots_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden roots " + path);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    std::vector<int> coords;
    int c;
    while (is >> c) coords.push_back(c);
    rows.push_back(coords);
  }
  return rows;
}

}  // namespace

VerifyReport verify_tables(SimpleType type, const std::string& testdata_dir) {
  Timer timer;
  VerifyReport rep;
  rep.claim = "tables";
  rep.type = type.name();
  rep.params = {{"testdata", testdata_dir}};

  RootSystem rs = build_root_system(type);
  auto hb_opt = kostant_roots_table_order(rs);
  if (!hb_opt) throw std::invalid_argument("verify_tables: no worked table for " + type.name());
  HeisenbergBasis hb = *hb_opt;

  // Root labels.
  auto golden_roots = load_roots_file(testdata_dir + "/roots_" + type.name() + ".txt");
  if (static_cast<int>(golden_roots.size()) != hb.size()) {
    rep.pass = false;
    rep.details["roots"] = "size mismatch";
    rep.wall_ms = timer.ms();
    return rep;
  }
  for (int i = 0; i < hb.size(); ++i) {
    if (rs.positive_roots[hb.root_indices[i]].coords != golden_roots[i]) {
      rep.pass = false;
      rep.details["roots_mismatch_at"] = i;
      rep.wall_ms = timer.ms();
      return rep;
    }
  }
  rep.details["root_cells"] = hb.size();

  // Hamiltonian cells; so(10) prints only the root labels.
  std::string tf = table_file_name(type);
  std::ifstream probe(testdata_dir + "/" + tf);
  if (!probe.good()) {
    rep.details["hamiltonian_cells"] = 0;
    rep.wall_ms = timer.ms();
    return rep;
  }
  probe.close();
  GoldenTable golden = load_table(testdata_dir + "/" + tf);

  ChevalleyBasis cb = build_chevalley(rs);
  std::map<std::pair<int, int>, Poly> computed;
  int max_order = 0;
  for (const auto& [key, cell] : golden.cells) max_order = std::max(max_order, key.second);
  for (int k = 0; k < rs.rank(); ++k) {
    RepModule module = build_irrep(rs, rs.fundamental_weight(k));
    for (int r = 1; r <= max_order; ++r)
      computed[{k + 1, r}] = heisenberg_hamiltonian(cb, hb, module, k, r);
  }

  // Sign gauge per chart variable, fixed by the order-1 row and then held for
  // the higher orders. Gauge candidates that match order 1 form a small
  // group; at least one member must match everything else.
  const int nv = hb.size();
  std::vector<std::vector<Rat>> gauges;
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    std::vector<Rat> sg(nv);
    for (int i = 0; i < nv; ++i) sg[i] = (mask & (1u << i)) ? Rat(-1) : Rat(1);
    bool ok = true;
    for (const auto& [key, cell] : golden.cells) {
      if (key.second != 1) continue;
      if (computed.at(key).rescale_vars(sg) != cell.first) {
        ok = false;
        break;
      }
    }
    if (ok) gauges.push_back(std::move(sg));
  }
  if (gauges.empty()) {
    rep.pass = false;
    rep.details["gauge"] = "no sign gauge matches the order-1 row";
    rep.wall_ms = timer.ms();
    return rep;
  }

  int cells_checked = 0;
  Json diffs = Json::array();
  bool matched = false;
  for (const auto& sg : gauges) {
    bool all_ok = true;
    Json local_diffs = Json::array();
    for (const auto& [key, cell] : golden.cells) {
      Poly mine = computed.at(key).rescale_vars(sg);
      if (mine != cell.first) {
        if (cell.second) {
          local_diffs.push_back({{"node", key.first},
                                 {"order", key.second},
                                 {"source-discrepancy", true},
                                 {"recomputed", mine.str()},
                                 {"printed", cell.first.str()}});
        } else {
          all_ok = false;
          local_diffs.push_back(
              {{"node", key.first}, {"order", key.second}, {"recomputed", mine.str()}, {"printed", cell.first.str()}});
        }
      }
    }
    if (all_ok) {
      matched = true;
      diffs = local_diffs;
      break;
    }
    if (diffs.empty()) diffs = local_diffs;
  }
  cells_checked = static_cast<int>(golden.cells.size());
  rep.details["hamiltonian_cells"] = cells_checked;
  rep.details["gauges_matching_order1"] = gauges.size();
  if (!matched) {
    rep.pass = false;
    rep.details["cell_diffs"] = diffs;
  } else {
    for (const auto& d : diffs)
      rep.warnings.push_back("source-discrepancy cell (node " + std::to_string(int(d["node"])) + ", order " +
                             std::to_string(int(d["order"])) + "): recomputed value kept as reference");
    if (!diffs.empty()) rep.details["source_discrepancies"] = diffs;
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerifyReport verify_mnumbers(const std::string& testdata_dir, bool with_rep_method, long rep_dim_limit) {
  Timer timer;
  VerifyReport rep;
  rep.claim = "dynkin-labels";
  rep.type = "all";
  rep.params = {{"testdata", testdata_dir}, {"rep_method", with_rep_method}};

  std::ifstream in(testdata_dir + "/figure_mnumbers.txt");
  if (!in) throw std::runtime_error("cannot open " + testdata_dir + "/figure_mnumbers.txt");
  std::string line;
  int types_checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string tn;
    is >> tn;
    std::vector<long long> want;
    long long v;
    while (is >> v) want.push_back(v);
    auto t = SimpleType::parse(tn);
    if (!t) throw std::runtime_error("bad type in figure_mnumbers.txt: " + tn);
    RootSystem rs = build_root_system(*t);
    ChevalleyBasis cb = build_chevalley(rs);
    auto sl2 = m_vector(cb, MNumberMethod::Sl2);
    auto dom = m_vector(cb, MNumberMethod::Dominance);
    long long sum = 0;
    for (auto x : sl2) sum += x;
    bool ok = sl2 == want && dom == want && sum == rs.dual_coxeter - 1;
    if (ok && with_rep_method) {
      for (int k = 0; k < rs.rank(); ++k) {
        if (weyl_dimension(rs, rs.fundamental_weight(k)) > rep_dim_limit) continue;
        if (m_number(cb, k, MNumberMethod::Rep) != want[k]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      rep.pass = false;
      Json got = Json::array();
      for (auto x : sl2) got.push_back(x);
      rep.details["mismatch"] = {{"type", tn}, {"sl2", got}};
      break;
    }
    ++types_checked;
  }
  rep.details["types_checked"] = types_checked;
  rep.wall_ms = timer.ms();
  return rep;
}

}  // namespace minorb
