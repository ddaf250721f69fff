#include "minorb/hamiltonian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace minorb {

GVec OrbitPoint::sparse() const {
  GVec g;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!is_zero(coeffs[i])) g[static_cast<int>(i)] = coeffs[i];
  return g;
}

Poly hamiltonian_poly(const ChevalleyBasis& cb, const RepModule& rep, int node, int order) {
  if (order < 1) throw std::invalid_argument("hamiltonian_poly: order must be >= 1");
  WeightVec w_k = cb.rs.fundamental_weight(node);
  if (!(rep.highest == w_k)) throw std::invalid_argument("hamiltonian_poly: rep is not the fundamental module of the node");
  std::vector<Poly> w(rep.dim);
  w[rep.hw_index] = Poly::constant(Rat(1));
  for (int step = 0; step < order; ++step) {
    std::vector<Poly> nxt(rep.dim);
    for (int flat = 0; flat < cb.dim; ++flat) {
      const SparseMat& m = rep.rho(cb, flat);
      for (int j = 0; j < rep.dim; ++j) {
        if (w[j].is_zero()) continue;
        for (const auto& [i, c] : m.cols[j]) nxt[i] += w[j] * Poly::var(flat, c);
      }
    }
    w = std::move(nxt);
  }
  return w[rep.hw_index];
}

long long m_number(const ChevalleyBasis& cb, int node, MNumberMethod method, long dim_cap) {
  const RootSystem& rs = cb.rs;
  if (node < 0 || node >= rs.rank()) throw std::invalid_argument("m_number: node out of range");
  switch (method) {
    case MNumberMethod::Sl2:
      return rs.comarks[node];
    case MNumberMethod::Dominance: {
      WeightVec wk = rs.fundamental_weight(node);
      WeightVec theta = rs.to_weight(rs.highest_root);
      long long r = 0;
      while (is_weight_of(wk - theta.scaled(r + 1), wk, rs)) ++r;
      return r;
    }
    case MNumberMethod::Rep: {
      RepModule rep = build_irrep(rs, rs.fundamental_weight(node), dim_cap);
      const SparseMat& ftheta = rep.rho(cb, cb.f_index(rs.num_positive() - 1));
      QVec v = rep.hw_vector();
      long long r = 0;
      while (true) {
        v = ftheta.apply(v);
        bool zero = true;
        for (const auto& c : v)
          if (!is_zero(c)) {
            zero = false;
            break;
          }
        if (zero) return r;
        ++r;
      }
    }
  }
  throw std::logic_error("m_number: unknown method");
}

std::vector<long long> m_vector(const ChevalleyBasis& cb, MNumberMethod method, long dim_cap) {
  std::vector<long long> m(cb.rs.rank());
  for (int k = 0; k < cb.rs.rank(); ++k) m[k] = m_number(cb, k, method, dim_cap);
  return m;
}

OrbitPoint sample_orbit_point(const ChevalleyBasis& cb, std::uint64_t seed, int word_length) {
  if (word_length < 0) throw std::invalid_argument("sample_orbit_point: negative word length");
  const RootSystem& rs = cb.rs;
  const int l = rs.rank();
  static const std::pair<long, long> kParams[] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}};
  std::mt19937_64 rng(seed);
  OrbitPoint p;
  p.seed = seed;
  GVec v{{cb.e_index(rs.num_positive() - 1), Rat(1)}};
  for (int s = 0; s < word_length; ++s) {
    int gen = static_cast<int>(rng() % (2 * l));
    // Simple roots occupy the first l slots of the canonical order.
    int flat = gen < l ? cb.e_index(gen) : cb.f_index(gen - l);
    auto [num, den] = kParams[rng() % 5];
    Rat t = rat(num, den);
    v = cb.exp_ad(GVec{{flat, Rat(1)}}, std::move(v), t);
    p.word.push_back({flat, t});
  }
  p.coeffs.assign(cb.dim, Rat(0));
  for (const auto& [i, c] : v) p.coeffs[i] = c;
  return p;
}

ClassicalRealization classical_realization(const ChevalleyBasis& cb, bool swap_fork) {
  const RootSystem& rs = cb.rs;
  char fam = rs.type.family;
  if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'D')
    throw std::invalid_argument("classical_realization: classical types only");
  ClassicalRealization rz;
  rz.swapped = swap_fork;
  rz.vec_rep = build_irrep(rs, rs.fundamental_weight(0));
  const RepModule& rep = rz.vec_rep;
  const int n = rep.dim;
  std::vector<int> depth(n);
  for (int k = 0; k < n; ++k) {
    auto d = rs.to_root_lattice(rep.highest - rep.weights[k]);
    if (!d) throw std::logic_error("classical_realization: weight outside root lattice shift");
    depth[k] = d->height();
  }
  rz.slot_to_basis.resize(n);
  for (int k = 0; k < n; ++k) rz.slot_to_basis[k] = k;
  int last = rs.rank() - 1;
  std::sort(rz.slot_to_basis.begin(), rz.slot_to_basis.end(), [&](int a, int b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    long long ta = rep.weights[a].coords[last], tb = rep.weights[b].coords[last];
    return swap_fork ? ta < tb : ta > tb;
  });
  return rz;
}

QMatrix realize_matrix(const ChevalleyBasis& cb, const ClassicalRealization& rz, const GVec& x) {
  const RepModule& rep = rz.vec_rep;
  const int n = rep.dim;
  std::vector<int> basis_to_slot(n);
  for (int s = 0; s < n; ++s) basis_to_slot[rz.slot_to_basis[s]] = s;
  QMatrix m(n, n);
  for (const auto& [flat, c] : x) {
    if (is_zero(c)) continue;
    const SparseMat& r = rep.rho(cb, flat);
    for (int j = 0; j < n; ++j)
      for (const auto& [i, v] : r.cols[j]) m.at(basis_to_slot[i], basis_to_slot[j]) += c * v;
  }
  return m;
}

Rat classical_trace_hamiltonian(char family, int k, int r, const QMatrix& a) {
  const int sz = static_cast<int>(a.rows());
  int n = 0;
  switch (family) {
    case 'A': n = sz - 1; break;
    case 'B': n = (sz - 1) / 2; break;
    case 'C':
    case 'D': n = sz / 2; break;
    default: throw std::invalid_argument("classical_trace_hamiltonian: classical types only");
  }
  bool ok = false;
  if (r == 1) ok = (k >= 1 && k <= n);
  if (r == 2) {
    if (family == 'B') ok = (k >= 2 && k <= n - 1);
    if (family == 'D') ok = (k >= 2 && k <= n - 2);
  }
  if (!ok)
    throw std::invalid_argument("classical_trace_hamiltonian: block index " + std::to_string(k) +
                                " with exterior power " + std::to_string(r) + " outside the valid range for " +
                                std::string(1, family) + std::to_string(n));
  if (r == 1) {
    Rat t = 0;
    for (int i = 0; i < k; ++i) t += a.at(i, i);
    return t;
  }
  Rat t = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) t += a.at(i, i) * a.at(j, j) - a.at(i, j) * a.at(j, i);
  return t;
}

namespace {

// Truncated univariate polynomials in t, degree <= cap.
using TPoly = QVec;

TPoly tmul(const TPoly& a, const TPoly& b, int cap) {
  TPoly r(cap + 1);
  for (int i = 0; i <= cap; ++i) {
    if (i >= static_cast<int>(a.size()) || is_zero(a[i])) continue;
    for (int j = 0; i + j <= cap; ++j) {
      if (j >= static_cast<int>(b.size()) || is_zero(b[j])) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

}  // namespace

Rat exp_det_coefficient(const QMatrix& a, int k, int m) {
  const int n = static_cast<int>(a.rows());
  if (k < 1 || k > n) throw std::invalid_argument("exp_det_coefficient: block size out of range");
  if (m < 0) throw std::invalid_argument("exp_det_coefficient: negative order");
  // Powers of a until nilpotency; bail out when the series will not truncate.
  std::vector<QMatrix> pw{QMatrix::identity(n)};
  QMatrix cur = QMatrix::identity(n);
  for (int j = 1; j <= n; ++j) {
    cur = cur * a;
    if (cur.is_zero()) break;
    pw.push_back(cur);
  }
  if (!cur.is_zero()) throw std::invalid_argument("exp_det_coefficient: matrix is not nilpotent");
  // Entries of the truncated exponential block.
  std::vector<std::vector<TPoly>> e(k, std::vector<TPoly>(k, TPoly(m + 1)));
  Rat f(1);
  for (int j = 0; j < static_cast<int>(pw.size()) && j <= m; ++j) {
    if (j > 0) f /= j;
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < k; ++c) e[i][c][j] = pw[j].at(i, c) * f;
  }
  // Determinant by expansion over rows; the consumed-column mask determines
  // the row, so it is the whole memo key.
  std::map<unsigned, TPoly> memo;
  std::function<TPoly(unsigned)> det = [&](unsigned mask) -> TPoly {
    int row = __builtin_popcount(mask);
    if (row == k) {
      TPoly one(m + 1);
      one[0] = 1;
      return one;
    }
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    TPoly acc(m + 1);
    int sign = 1;
    for (int c = 0; c < k; ++c) {
      if (mask & (1u << c)) continue;
      TPoly sub = det(mask | (1u << c));
      TPoly term = tmul(e[row][c], sub, m);
      for (int d = 0; d <= m; ++d) acc[d] += sign > 0 ? term[d] : -term[d];
      sign = -sign;
    }
    memo[mask] = acc;
    return acc;
  };
  TPoly d = det(0);
  return d[m];
}

HamiltonianSet hamiltonian_set(const ChevalleyBasis& cb, long dim_cap) {
  HamiltonianSet hs;
  hs.type = cb.rs.type;
  hs.m = m_vector(cb, MNumberMethod::Sl2, dim_cap);
  for (int k = 0; k < cb.rs.rank(); ++k) {
    RepModule rep = build_irrep(cb.rs, cb.rs.fundamental_weight(k), dim_cap);
    for (int n = 1; n <= hs.m[k]; ++n) hs.entries[{k, n}] = hamiltonian_poly(cb, rep, k, n);
  }
  return hs;
}

}  // namespace minorb
