#include "minorb/chevalley.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace minorb {

namespace {

// Signed roots: index r >= 0 is positive_roots[r], and ~r (bitwise not) is its
// negative. Structure-constant bookkeeping below works with these.
struct SignBuilder {
  const RootSystem& rs;
  // N for positive special pairs, keyed by (root index, root index).
  std::map<std::pair<int, int>, long> npos;

  explicit SignBuilder(const RootSystem& r) : rs(r) {}

  // Largest p with beta - p*alpha a root.
  int string_down(const RootVec& alpha, const RootVec& beta) const {
    int p = 0;
    RootVec v = beta - alpha;
    while (!v.is_zero() && rs.is_root(v)) {
      ++p;
      v = v - alpha;
    }
    return p;
  }

  Rat norm(const RootVec& a) const { return rs.form_roots(a, a); }

  // N(a,b) for arbitrary signed roots, reduced to the positive table.
  Rat n_signed(const RootVec& a, const RootVec& b) const {
    RootVec s = a + b;
    if (s.is_zero() || !rs.is_root(s)) return 0;
    bool apos = rs.is_positive_root(a);
    bool bpos = rs.is_positive_root(b);
    if (apos && bpos) {
      int ia = rs.positive_root_index(a), ib = rs.positive_root_index(b);
      if (ia > ib) return -n_signed(b, a);
      auto it = npos.find({ia, ib});
      if (it == npos.end()) throw std::logic_error("structure constant requested before induction reached it");
      return Rat(it->second);
    }
    if (!apos && !bpos) return -n_signed(-a, -b);
    if (!apos) return -n_signed(b, a);
    // a positive, b negative; write b = -beta.
    RootVec beta = -b;
    RootVec delta = a - beta;
    if (rs.is_positive_root(delta)) {
      // (x,y,z) = (a,-beta,beta-a): N(a,-beta) = -N(beta,delta)(delta,delta)/(a,a)
      return -n_signed(beta, delta) * norm(delta) / norm(a);
    }
    RootVec deltap = beta - a;
    // N(a,-beta) = N(deltap,a)(deltap,deltap)/(beta,beta)
    return n_signed(deltap, a) * norm(deltap) / norm(beta);
  }

  void build() {
    const int n = rs.num_positive();
    // Group special pairs by their sum; process sums in canonical order
    // (heights ascend), so everything a derivation needs is already fixed.
    for (int g = 0; g < n; ++g) {
      const RootVec& gamma = rs.positive_roots[g];
      if (gamma.height() == 1) continue;
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < g; ++a) {
        RootVec rest = gamma - rs.positive_roots[a];
        int b = rs.positive_root_index(rest);
        if (b > a) pairs.push_back({a, b});
      }
      if (pairs.empty()) throw std::logic_error("non-simple root with no decomposition: " + gamma.str());
      // pairs are found in ascending order of a; the first is extraspecial.
      const auto [a0, b0] = pairs.front();
      const RootVec &ra0 = rs.positive_roots[a0], &rb0 = rs.positive_roots[b0];
      npos[{a0, b0}] = string_down(ra0, rb0) + 1;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const auto [ai, bi] = pairs[k];
        const RootVec &ra = rs.positive_roots[ai], &rb = rs.positive_roots[bi];
        // Jacobi for (alpha0, -alpha, beta0), read off on the gamma-alpha=beta
        // component:
        //   N(a0,-a)N(a0-a,b0) + N(-a,b0)N(b0-a,a0) - N(a0,b0)N(gamma,-a) = 0
        // with N(gamma,-a) = -N(a,b)(b,b)/(gamma,gamma).
        Rat t = 0;
        RootVec d1 = ra0 - ra;
        if (rs.is_root(d1)) t += n_signed(ra0, -ra) * n_signed(d1, rb0);
        RootVec d2 = rb0 - ra;
        if (rs.is_root(d2)) t += n_signed(-ra, rb0) * n_signed(d2, ra0);
        Rat denom = norm(rb) * Rat(npos.at({a0, b0}));
        Rat val = -t * norm(gamma) / denom;
        if (!is_integer(val)) throw std::logic_error("non-integral structure constant at " + gamma.str());
        long lv = static_cast<long>(val.get_num().get_si());
        long expect = string_down(ra, rb) + 1;
        if (std::abs(lv) != expect)
          throw std::logic_error("structure constant magnitude mismatch at " + gamma.str());
        npos[{ai, bi}] = lv;
      }
    }
  }
};

}  // namespace

BasisIndex ChevalleyBasis::describe(int flat) const {
  const int l = rs.rank(), n = num_positive();
  if (flat < l) return {BasisIndex::Cartan, flat};
  if (flat < l + n) return {BasisIndex::PosRoot, flat - l};
  return {BasisIndex::NegRoot, flat - l - n};
}

std::string ChevalleyBasis::basis_label(int flat) const {
  BasisIndex b = describe(flat);
  switch (b.kind) {
    case BasisIndex::Cartan: return "h" + std::to_string(b.idx + 1);
    case BasisIndex::PosRoot: return "e" + std::to_string(b.idx + 1);
    default: return "f" + std::to_string(b.idx + 1);
  }
}

GVec ChevalleyBasis::bracket(const GVec& x, const GVec& y) const {
  GVec out;
  for (const auto& [a, ca] : x) {
    if (a < 0 || a >= dim) throw std::invalid_argument("bracket: index outside basis");
    for (const auto& [b, cb] : y) {
      if (b < 0 || b >= dim) throw std::invalid_argument("bracket: index outside basis");
      for (const auto& [k, c] : bracket_basis(a, b)) {
        Rat v = ca * cb * c;
        auto it = out.find(k);
        if (it == out.end()) {
          if (!is_zero(v)) out[k] = v;
        } else {
          it->second += v;
          if (is_zero(it->second)) out.erase(it);
        }
      }
    }
  }
  return out;
}

QMatrix ChevalleyBasis::adjoint_matrix(int flat) const {
  QMatrix m(dim, dim);
  for (int b = 0; b < dim; ++b)
    for (const auto& [k, c] : bracket_basis(flat, b)) m.at(k, b) = c;
  return m;
}

QMatrix ChevalleyBasis::adjoint_matrix(const GVec& x) const {
  QMatrix m(dim, dim);
  for (const auto& [a, ca] : x) {
    if (is_zero(ca)) continue;
    for (int b = 0; b < dim; ++b)
      for (const auto& [k, c] : bracket_basis(a, b)) m.at(k, b) += ca * c;
  }
  return m;
}

GVec ChevalleyBasis::exp_ad(const GVec& x, GVec y, const Rat& t) const {
  GVec acc = y;
  GVec cur = std::move(y);
  Rat factor = 1;
  for (int k = 1; k <= dim + 1; ++k) {
    GVec nxt;
    {
      GVec xb = bracket(x, cur);
      nxt = std::move(xb);
    }
    if (nxt.empty()) return acc;
    factor *= t / k;
    for (const auto& [i, c] : nxt) {
      Rat v = c * factor;
      auto it = acc.find(i);
      if (it == acc.end()) {
        if (!is_zero(v)) acc[i] = v;
      } else {
        it->second += v;
        if (is_zero(it->second)) acc.erase(it);
      }
    }
    cur = std::move(nxt);
  }
  throw std::invalid_argument("exp_ad: ad x is not nilpotent");
}

long ChevalleyBasis::n_constant(int ra, int rb) const {
  const RootVec s = rs.positive_roots[ra] + rs.positive_roots[rb];
  int k = rs.positive_root_index(s);
  if (k < 0) return 0;
  for (const auto& [idx, c] : bracket_basis(e_index(ra), e_index(rb)))
    if (idx == e_index(k)) return static_cast<long>(c.get_num().get_si());
  return 0;
}

Rat ChevalleyBasis::killing_norm(int root_idx) const {
  const int l = rs.rank();
  // t_alpha in the h-basis solves kappa(t,h_i) = <alpha, alpha_i^vee>.
  QVec p(l);
  WeightVec w = rs.to_weight(rs.positive_roots[root_idx]);
  for (int i = 0; i < l; ++i) p[i] = Rat(static_cast<long>(w.coords[i]));
  auto x = solve_linear(killing_cartan_, p);
  if (!x) throw std::logic_error("killing form degenerate on Cartan");
  Rat s = 0;
  for (int i = 0; i < l; ++i) s += (*x)[i] * p[i];
  return s;
}

Rat ChevalleyBasis::normalized_norm(int root_idx) const {
  return rs.form_roots(rs.positive_roots[root_idx], rs.positive_roots[root_idx]);
}

QVec ChevalleyBasis::dual_coordinates(const QVec& coeffs) const {
  if (static_cast<int>(coeffs.size()) != dim)
    throw std::invalid_argument("dual_coordinates: dimension mismatch");
  const int l = rs.rank(), n = num_positive();
  QVec xi(dim);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) xi[h_index(i)] += killing_cartan_.at(i, j) * coeffs[h_index(j)];
  for (int r = 0; r < n; ++r) {
    xi[e_index(r)] = killing_ef_[r] * coeffs[f_index(r)];
    xi[f_index(r)] = killing_ef_[r] * coeffs[e_index(r)];
  }
  return xi;
}

ChevalleyBasis build_chevalley(const RootSystem& rs) {
  ChevalleyBasis cb;
  cb.rs = rs;
  const int l = rs.rank(), n = rs.num_positive();
  cb.dim = l + 2 * n;

  SignBuilder sb(rs);
  sb.build();

  cb.coroots_.resize(n);
  for (int r = 0; r < n; ++r) cb.coroots_[r] = rs.coroot_coords(rs.positive_roots[r]);

  cb.table_.assign(static_cast<std::size_t>(cb.dim) * cb.dim, {});
  auto set_entry = [&](int a, int b, std::vector<std::pair<int, Rat>> v) {
    cb.table_[static_cast<std::size_t>(a) * cb.dim + b] = v;
    for (auto& [k, c] : v) c = -c;
    cb.table_[static_cast<std::size_t>(b) * cb.dim + a] = std::move(v);
  };

  // [h_i, x_beta] = <beta, alpha_i^vee> x_beta
  for (int i = 0; i < l; ++i) {
    for (int r = 0; r < n; ++r) {
      WeightVec w = rs.to_weight(rs.positive_roots[r]);
      long long pairing = w.coords[i];
      if (pairing != 0) {
        set_entry(cb.h_index(i), cb.e_index(r), {{cb.e_index(r), Rat(static_cast<long>(pairing))}});
        set_entry(cb.h_index(i), cb.f_index(r), {{cb.f_index(r), Rat(static_cast<long>(-pairing))}});
      }
    }
  }
  // [e_alpha, f_alpha] = h_alpha
  for (int r = 0; r < n; ++r) {
    std::vector<std::pair<int, Rat>> h;
    for (int j = 0; j < l; ++j)
      if (cb.coroots_[r][j] != 0) h.push_back({cb.h_index(j), Rat(static_cast<long>(cb.coroots_[r][j]))});
    set_entry(cb.e_index(r), cb.f_index(r), std::move(h));
  }
  // Root-root brackets via the sign table.
  auto signed_vec = [&](const RootVec& v) -> std::pair<bool, int> {
    int idx = rs.positive_root_index(v);
    if (idx >= 0) return {true, idx};
    return {false, rs.positive_root_index(-v)};
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const RootVec &ra = rs.positive_roots[a], &rb = rs.positive_roots[b];
      if (a < b) {
        RootVec s = ra + rb;
        if (rs.is_positive_root(s)) {
          Rat c = sb.n_signed(ra, rb);
          set_entry(cb.e_index(a), cb.e_index(b), {{cb.e_index(rs.positive_root_index(s)), c}});
          // [f_a, f_b] = -N(a,b) f_{a+b}
          set_entry(cb.f_index(a), cb.f_index(b), {{cb.f_index(rs.positive_root_index(s)), -c}});
        }
      }
      if (a != b) {
        RootVec d = ra - rb;
        if (rs.is_root(d)) {
          Rat c = sb.n_signed(ra, -rb);
          auto [pos, idx] = signed_vec(d);
          set_entry(cb.e_index(a), cb.f_index(b), {{pos ? cb.e_index(idx) : cb.f_index(idx), c}});
        }
      }
    }
  }

  // Integrality of the whole table (Chevalley's theorem, assertable here).
  for (const auto& entry : cb.table_)
    for (const auto& [k, c] : entry)
      if (!is_integer(c)) throw std::logic_error("non-integral entry in structure table");

  // Decomposition tree for representation matrices.
  cb.decomp_.resize(n);
  for (int r = 0; r < n; ++r) {
    if (rs.positive_roots[r].height() == 1) continue;
    for (int i = 0; i < l; ++i) {
      RootVec ai;
      ai.coords.assign(l, 0);
      ai.coords[i] = 1;
      RootVec rest = rs.positive_roots[r] - ai;
      int rest_idx = rs.positive_root_index(rest);
      if (rest_idx >= 0) {
        long nc = static_cast<long>(sb.n_signed(ai, rest).get_num().get_si());
        if (nc == 0) continue;
        cb.decomp_[r] = {rs.positive_root_index(ai), rest_idx, rat(1, nc)};
        break;
      }
    }
  }

  // Killing form on the Cartan: kappa(h_i,h_j) = sum over roots of
  // <beta,alpha_i^vee><beta,alpha_j^vee>.
  cb.killing_cartan_ = QMatrix(l, l);
  for (int r = 0; r < n; ++r) {
    WeightVec w = rs.to_weight(rs.positive_roots[r]);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        cb.killing_cartan_.at(i, j) += Rat(2) * static_cast<long>(w.coords[i]) * static_cast<long>(w.coords[j]);
  }
  // kappa(e_a, f_a) = Tr(ad e_a ad f_a), computed from the structure table.
  cb.killing_ef_.assign(n, Rat(0));
  for (int r = 0; r < n; ++r) {
    Rat tr = 0;
    for (int b = 0; b < cb.dim; ++b) {
      for (const auto& [k1, c1] : cb.bracket_basis(cb.f_index(r), b))
        for (const auto& [k2, c2] : cb.bracket_basis(cb.e_index(r), k1))
          if (k2 == b) tr += c1 * c2;
    }
    cb.killing_ef_[r] = tr;
  }

  // Jacobi holds by construction up to the sign derivations above; verify
  // exhaustively while the algebra is small, abort with the offending triple
  // otherwise.
  if (cb.dim <= 100) {
    for (int a = 0; a < cb.dim; ++a)
      for (int b = a + 1; b < cb.dim; ++b)
        for (int c = b + 1; c < cb.dim; ++c) {
          GVec xa{{a, Rat(1)}}, xb{{b, Rat(1)}}, xc{{c, Rat(1)}};
          GVec s = cb.bracket(cb.bracket(xa, xb), xc);
          for (const auto& [k, v] : cb.bracket(cb.bracket(xb, xc), xa)) {
            s[k] += v;
            if (is_zero(s[k])) s.erase(k);
          }
          for (const auto& [k, v] : cb.bracket(cb.bracket(xc, xa), xb)) {
            s[k] += v;
            if (is_zero(s[k])) s.erase(k);
          }
          if (!s.empty()) {
            std::ostringstream os;
            os << "Jacobi identity fails on basis triple (" << cb.basis_label(a) << ", " << cb.basis_label(b)
               << ", " << cb.basis_label(c) << ")";
            throw std::logic_error(os.str());
          }
        }
  }
  return cb;
}

std::array<int, 6> g2_textbook_signs() {
  // Solved once against the displayed brackets of the worked g2 example
  // ([A,X6] and friends); validated by a test that re-derives them.
  return {1, 1, 1, 1, -1, 1};
}

QVec g2_to_textbook_coords(const ChevalleyBasis& cb, const GVec& x) {
  if (cb.rs.type.family != 'G') throw std::invalid_argument("g2_to_textbook_coords: type must be G2");
  auto sg = g2_textbook_signs();
  QVec out(14);
  for (const auto& [flat, c] : x) {
    BasisIndex b = cb.describe(flat);
    // X_k = sign_k e_k implies the coordinate picks up the same sign.
    if (b.kind == BasisIndex::Cartan)
      out[b.idx] += c;
    else if (b.kind == BasisIndex::PosRoot)
      out[2 + b.idx] += c * sg[b.idx];
    else
      out[8 + b.idx] += c * sg[b.idx];
  }
  return out;
}

}  // namespace minorb
