#include "minorb/heisenberg.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace minorb {

namespace {

// E[i] orders of the worked examples, as coordinate vectors in simple roots.
const std::map<std::string, std::vector<std::vector<int>>>& table_orders() {
  static const std::map<std::string, std::vector<std::vector<int>>> t = {
      {"B2", {{0, 1}, {1, 2}, {1, 1}}},
      {"D3", {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}},
      {"B3",
       {{0, 1, 0}, {1, 1, 0}, {0, 1, 2}, {0, 1, 1}, {1, 1, 2}, {1, 1, 1}, {1, 2, 2}}},
      {"D4",
       {{0, 1, 0, 0},
        {1, 1, 0, 0},
        {0, 1, 1, 0},
        {0, 1, 0, 1},
        {1, 1, 1, 0},
        {1, 1, 0, 1},
        {0, 1, 1, 1},
        {1, 1, 1, 1},
        {1, 2, 1, 1}}},
      {"B4",
       {{0, 1, 0, 0},
        {1, 1, 0, 0},
        {0, 1, 1, 0},
        {1, 1, 1, 0},
        {0, 1, 1, 2},
        {0, 1, 1, 1},
        {1, 1, 1, 2},
        {0, 1, 2, 2},
        {1, 1, 1, 1},
        {1, 1, 2, 2},
        {1, 2, 2, 2}}},
      {"D5",
       {{0, 1, 0, 0, 0},
        {1, 1, 0, 0, 0},
        {0, 1, 1, 0, 0},
        {1, 1, 1, 0, 0},
        {0, 1, 1, 1, 0},
        {0, 1, 1, 0, 1},
        {1, 1, 1, 1, 0},
        {1, 1, 1, 0, 1},
        {0, 1, 1, 1, 1},
        {1, 1, 1, 1, 1},
        {0, 1, 2, 1, 1},
        {1, 1, 2, 1, 1},
        {1, 2, 2, 1, 1}}},
      {"G2", {{0, 1}, {1, 1}, {3, 1}, {2, 1}, {3, 2}}},
  };
  return t;
}

}  // namespace

HeisenbergBasis kostant_roots(const RootSystem& rs) {
  HeisenbergBasis hb;
  hb.type = rs.type;
  for (int r = 0; r < rs.num_positive(); ++r) {
    if (!is_zero(rs.pair_coroot(rs.to_weight(rs.positive_roots[r]), rs.highest_root)))
      hb.root_indices.push_back(r);
  }
  for (std::size_t i = 0; i < hb.root_indices.size(); ++i)
    if (hb.root_indices[i] == rs.num_positive() - 1) hb.theta_position = static_cast<int>(i);
  const int expect = 2 * rs.dual_coxeter - 3;
  if (hb.size() != expect)
    throw std::logic_error("kostant_roots: expected " + std::to_string(expect) + " roots, found " +
                           std::to_string(hb.size()));
  return hb;
}

std::optional<HeisenbergBasis> kostant_roots_table_order(const RootSystem& rs) {
  auto it = table_orders().find(rs.type.name());
  if (it == table_orders().end()) return std::nullopt;
  HeisenbergBasis canonical = kostant_roots(rs);
  HeisenbergBasis hb;
  hb.type = rs.type;
  for (const auto& coords : it->second) {
    RootVec r{coords};
    int idx = rs.positive_root_index(r);
    if (idx < 0) throw std::logic_error("kostant_roots_table_order: " + r.str() + " is not a positive root");
    hb.root_indices.push_back(idx);
  }
  // Same set as the canonical filter, in the table's order.
  auto sorted = hb.root_indices;
  std::sort(sorted.begin(), sorted.end());
  auto canon = canonical.root_indices;
  std::sort(canon.begin(), canon.end());
  if (sorted != canon) throw std::logic_error("kostant_roots_table_order: table disagrees with the filter");
  for (std::size_t i = 0; i < hb.root_indices.size(); ++i)
    if (hb.root_indices[i] == rs.num_positive() - 1) hb.theta_position = static_cast<int>(i);
  return hb;
}

OrbitPoint chart_to_orbit(const ChevalleyBasis& cb, const HeisenbergBasis& hb, const ChartPoint& p) {
  if (is_zero(p.c)) throw std::invalid_argument("chart_to_orbit: c must be nonzero");
  if (static_cast<int>(p.x.size()) != hb.size())
    throw std::invalid_argument("chart_to_orbit: chart dimension mismatch");
  GVec x;
  for (int i = 0; i < hb.size(); ++i)
    if (!is_zero(p.x[i])) x[cb.e_index(hb.root_indices[i])] = p.x[i];
  GVec v{{cb.f_index(cb.rs.num_positive() - 1), p.c}};
  GVec res = cb.exp_ad(x, std::move(v), Rat(1));
  OrbitPoint out;
  out.coeffs.assign(cb.dim, Rat(0));
  for (const auto& [i, c] : res) out.coeffs[i] = c;
  return out;
}

Poly heisenberg_hamiltonian(const ChevalleyBasis& cb, const HeisenbergBasis& hb, const RepModule& rep,
                            int node, int order) {
  if (order < 1) throw std::invalid_argument("heisenberg_hamiltonian: order must be >= 1");
  if (!(rep.highest == cb.rs.fundamental_weight(node)))
    throw std::invalid_argument("heisenberg_hamiltonian: rep is not the fundamental module of the node");
  const SparseMat& ftheta = rep.rho(cb, cb.f_index(cb.rs.num_positive() - 1));
  QVec w = rep.hw_vector();
  Rat rfact(1);
  for (int r = 1; r <= order; ++r) {
    w = ftheta.apply(w);
    rfact *= r;
  }
  // exp(sum_i x_i rho(E_i)) applied symbolically; terminates by nilpotency.
  std::vector<Poly> cur(rep.dim);
  bool any = false;
  for (int k = 0; k < rep.dim; ++k)
    if (!is_zero(w[k])) {
      cur[k] = Poly::constant(w[k]);
      any = true;
    }
  Poly acc = cur[rep.hw_index];
  int j = 0;
  while (any) {
    ++j;
    std::vector<Poly> nxt(rep.dim);
    for (int i = 0; i < hb.size(); ++i) {
      const SparseMat& m = rep.rho(cb, cb.e_index(hb.root_indices[i]));
      for (int col = 0; col < rep.dim; ++col) {
        if (cur[col].is_zero()) continue;
        for (const auto& [row, c] : m.cols[col]) nxt[row] += cur[col] * Poly::var(i, c);
      }
    }
    any = false;
    for (int k = 0; k < rep.dim; ++k) {
      if (nxt[k].is_zero()) continue;
      nxt[k] = nxt[k].scaled(rat(1, j));
      any = true;
    }
    if (any) acc += nxt[rep.hw_index];
    cur = std::move(nxt);
  }
  return acc.scaled(1 / rfact);
}

}  // namespace minorb
