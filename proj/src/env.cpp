#include "minorb/env.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minorb {

int pbw_rank(const ChevalleyBasis& cb, int flat) {
  const int l = cb.rs.rank(), n = cb.num_positive();
  BasisIndex b = cb.describe(flat);
  switch (b.kind) {
    case BasisIndex::NegRoot: return b.idx;
    case BasisIndex::Cartan: return n + b.idx;
    default: return n + l + b.idx;
  }
}

int pbw_rank_to_flat(const ChevalleyBasis& cb, int rank) {
  const int l = cb.rs.rank(), n = cb.num_positive();
  if (rank < n) return cb.f_index(rank);
  if (rank < n + l) return cb.h_index(rank - n);
  return cb.e_index(rank - n - l);
}

int PBWMono::degree() const {
  int d = 0;
  for (const auto& [r, k] : re) d += k;
  return d;
}

EnvElement EnvElement::one() {
  EnvElement e;
  e.t_[PBWMono{}] = 1;
  return e;
}

EnvElement EnvElement::constant(const Rat& c) {
  EnvElement e;
  if (!minorb::is_zero(c)) e.t_[PBWMono{}] = c;
  return e;
}

EnvElement EnvElement::generator(const ChevalleyBasis& cb, int flat) {
  EnvElement e;
  e.t_[PBWMono{{{pbw_rank(cb, flat), 1}}}] = 1;
  return e;
}

int EnvElement::degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

void EnvElement::add_term(const PBWMono& m, const Rat& c) {
  if (minorb::is_zero(c)) return;
  auto it = t_.find(m);
  if (it == t_.end())
    t_[m] = c;
  else {
    it->second += c;
    if (minorb::is_zero(it->second)) t_.erase(it);
  }
}

EnvElement EnvElement::operator+(const EnvElement& o) const {
  EnvElement r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

EnvElement EnvElement::operator-(const EnvElement& o) const {
  EnvElement r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

EnvElement EnvElement::scaled(const Rat& c) const {
  EnvElement r;
  if (minorb::is_zero(c)) return r;
  for (const auto& [m, v] : t_) r.t_[m] = v * c;
  return r;
}

std::string EnvElement::str(const ChevalleyBasis& cb) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool one_coeff = (a == 1);
    if (!one_coeff || m.re.empty()) os << rat_str(a);
    bool star = !one_coeff && !m.re.empty();
    for (const auto& [r, k] : m.re) {
      if (star) os << "*";
      os << cb.basis_label(pbw_rank_to_flat(cb, r));
      if (k > 1) os << "^" << k;
      star = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Straightening: rewrite words of generators into normal order with
// x y = y x + [x,y].
void normalize_word(const ChevalleyBasis& cb, std::vector<int> word, Rat coeff, EnvElement& out) {
  std::vector<std::pair<Rat, std::vector<int>>> stack;
  stack.push_back({std::move(coeff), std::move(word)});
  while (!stack.empty()) {
    auto [c, w] = std::move(stack.back());
    stack.pop_back();
    int bad = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (pbw_rank(cb, w[i]) > pbw_rank(cb, w[i + 1])) {
        bad = static_cast<int>(i);
        break;
      }
    }
    if (bad < 0) {
      PBWMono m;
      for (int g : w) {
        int r = pbw_rank(cb, g);
        if (!m.re.empty() && m.re.back().first == r)
          ++m.re.back().second;
        else
          m.re.push_back({r, 1});
      }
      out.add_term(m, c);
      continue;
    }
    const auto& br = cb.bracket_basis(w[bad], w[bad + 1]);
    std::vector<int> swapped = w;
    std::swap(swapped[bad], swapped[bad + 1]);
    stack.push_back({c, std::move(swapped)});
    for (const auto& [k, bc] : br) {
      std::vector<int> reduced;
      reduced.reserve(w.size() - 1);
      reduced.insert(reduced.end(), w.begin(), w.begin() + bad);
      reduced.push_back(k);
      reduced.insert(reduced.end(), w.begin() + bad + 2, w.end());
      stack.push_back({c * bc, std::move(reduced)});
    }
  }
}

std::vector<int> expand_mono(const ChevalleyBasis& cb, const PBWMono& m) {
  std::vector<int> w;
  for (const auto& [r, k] : m.re)
    for (int i = 0; i < k; ++i) w.push_back(pbw_rank_to_flat(cb, r));
  return w;
}

}  // namespace

EnvElement pbw_multiply(const EnvElement& a, const EnvElement& b, const ChevalleyBasis& cb) {
  EnvElement out;
  for (const auto& [ma, ca] : a.terms()) {
    std::vector<int> wa = expand_mono(cb, ma);
    for (const auto& [mb, cb2] : b.terms()) {
      std::vector<int> w = wa;
      for (int g : expand_mono(cb, mb)) w.push_back(g);
      normalize_word(cb, std::move(w), ca * cb2, out);
    }
  }
  return out;
}

EnvElement commutator(const EnvElement& a, const EnvElement& b, const ChevalleyBasis& cb) {
  return pbw_multiply(a, b, cb) - pbw_multiply(b, a, cb);
}

Poly env_symbol(const EnvElement& a, const ChevalleyBasis& cb) {
  Poly p;
  int top = a.degree();
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() != top) continue;
    Mono mono;
    for (const auto& [r, k] : m.re) mono.e.push_back({pbw_rank_to_flat(cb, r), k});
    std::sort(mono.e.begin(), mono.e.end());
    p.add_term(mono, c);
  }
  return p;
}

namespace {

Rat root_norm(const ChevalleyBasis& cb, int root_idx, FormKind form) {
  return form == FormKind::Killing ? cb.killing_norm(root_idx) : cb.normalized_norm(root_idx);
}

}  // namespace

EnvElement travkin_quantize(const ChevalleyBasis& cb, const RepModule& rep, int node, int order, FormKind form) {
  if (!(rep.highest == cb.rs.fundamental_weight(node)))
    throw std::invalid_argument("travkin_quantize: rep is not the fundamental module of the node");
  if (order < 1) throw std::invalid_argument("travkin_quantize: order must be >= 1");
  // Sweedler expansion: left-multiply the acting and the retained factors by
  // the same basis letter; the 1/kappa weight rides on the lowering letters.
  std::vector<EnvElement> u(rep.dim);
  u[rep.hw_index] = EnvElement::one();
  for (int step = 0; step < order; ++step) {
    std::vector<EnvElement> nxt(rep.dim);
    for (int flat = 0; flat < cb.dim; ++flat) {
      BasisIndex b = cb.describe(flat);
      Rat weight(1);
      if (b.kind == BasisIndex::NegRoot) weight = 1 / root_norm(cb, b.idx, form);
      EnvElement gen = EnvElement::generator(cb, flat);
      const SparseMat& m = rep.rho(cb, flat);
      for (int col = 0; col < rep.dim; ++col) {
        if (u[col].is_zero() || m.cols[col].empty()) continue;
        EnvElement lifted = pbw_multiply(gen, u[col], cb);
        for (const auto& [row, c] : m.cols[col]) nxt[row] = nxt[row] + lifted.scaled(c * weight);
      }
    }
    u = std::move(nxt);
  }
  return u[rep.hw_index];
}

EnvElement heisenberg_orbit_quantize(const ChevalleyBasis& cb, const HeisenbergBasis& hb, const RepModule& rep,
                                     int node, int order, FormKind form) {
  if (!(rep.highest == cb.rs.fundamental_weight(node)))
    throw std::invalid_argument("heisenberg_orbit_quantize: rep is not the fundamental module of the node");
  const SparseMat& ftheta = rep.rho(cb, cb.f_index(cb.rs.num_positive() - 1));
  QVec w = rep.hw_vector();
  for (int r = 0; r < order; ++r) w = ftheta.apply(w);
  std::vector<EnvElement> u(rep.dim);
  bool any = false;
  for (int k = 0; k < rep.dim; ++k)
    if (!minorb::is_zero(w[k])) {
      u[k] = EnvElement::constant(w[k]);
      any = true;
    }
  EnvElement acc = u[rep.hw_index];
  Rat kfact(1);
  int k = 0;
  while (any) {
    ++k;
    kfact *= k;
    std::vector<EnvElement> nxt(rep.dim);
    for (int i = 0; i < hb.size(); ++i) {
      int ridx = hb.root_indices[i];
      Rat weight = 1 / root_norm(cb, ridx, form);
      EnvElement gen = EnvElement::generator(cb, cb.e_index(ridx));
      const SparseMat& m = rep.rho(cb, cb.e_index(ridx));
      for (int col = 0; col < rep.dim; ++col) {
        if (u[col].is_zero()) continue;
        EnvElement lifted = pbw_multiply(gen, u[col], cb).scaled(weight);
        for (const auto& [row, c] : m.cols[col]) nxt[row] = nxt[row] + lifted.scaled(c);
      }
    }
    any = false;
    for (int b = 0; b < rep.dim; ++b)
      if (!nxt[b].is_zero()) any = true;
    if (any) acc = acc + nxt[rep.hw_index].scaled(1 / kfact);
    u = std::move(nxt);
  }
  return acc;
}

}  // namespace minorb
