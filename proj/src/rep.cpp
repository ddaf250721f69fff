#include "minorb/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "minorb/linalg.hpp"

namespace minorb {

QVec SparseMat::apply(const QVec& v) const {
  QVec out(rows);
  apply_into(v, out);
  return out;
}

void SparseMat::apply_into(const QVec& v, QVec& out) const {
  for (int j = 0; j < cols_n; ++j) {
    if (minorb::is_zero(v[j])) continue;
    for (const auto& [i, c] : cols[j]) out[i] += c * v[j];
  }
}

SparseMat SparseMat::multiply(const SparseMat& o) const {
  SparseMat r(rows, o.cols_n);
  for (int j = 0; j < o.cols_n; ++j) {
    std::map<int, Rat> acc;
    for (const auto& [k, c] : o.cols[j])
      for (const auto& [i, c2] : cols[k]) {
        acc[i] += c2 * c;
      }
    for (auto& [i, c] : acc)
      if (!minorb::is_zero(c)) r.cols[j].push_back({i, c});
  }
  return r;
}

SparseMat SparseMat::scaled(const Rat& s) const {
  SparseMat r = *this;
  for (auto& col : r.cols)
    for (auto& [i, c] : col) c *= s;
  return r;
}

SparseMat SparseMat::minus(const SparseMat& o) const {
  SparseMat r(rows, cols_n);
  for (int j = 0; j < cols_n; ++j) {
    std::map<int, Rat> acc;
    for (const auto& [i, c] : cols[j]) acc[i] += c;
    for (const auto& [i, c] : o.cols[j]) acc[i] -= c;
    for (auto& [i, c] : acc)
      if (!minorb::is_zero(c)) r.cols[j].push_back({i, c});
  }
  return r;
}

bool SparseMat::is_zero() const {
  for (const auto& col : cols)
    if (!col.empty()) return false;
  return true;
}

QVec RepModule::h_apply(int i, const QVec& v) const {
  QVec out(dim);
  for (int k = 0; k < dim; ++k)
    if (!minorb::is_zero(v[k])) out[k] = v[k] * static_cast<long>(weights[k].coords[i]);
  return out;
}

QVec RepModule::hw_vector() const {
  QVec v(dim);
  v[hw_index] = 1;
  return v;
}

const SparseMat& RepModule::rho(const ChevalleyBasis& cb, int flat) const {
  if (rho_cache_.empty()) rho_cache_.resize(cb.dim);
  if (rho_cache_[flat]) return *rho_cache_[flat];

  const RootSystem& rs = cb.rs;
  BasisIndex b = cb.describe(flat);
  SparseMat m(dim, dim);
  if (b.kind == BasisIndex::Cartan) {
    for (int k = 0; k < dim; ++k) {
      long long w = weights[k].coords[b.idx];
      if (w != 0) m.cols[k].push_back({k, Rat(static_cast<long>(w))});
    }
  } else {
    const RootVec& root = rs.positive_roots[b.idx];
    if (root.height() == 1) {
      int node = 0;
      while (root.coords[node] == 0) ++node;
      m = (b.kind == BasisIndex::PosRoot) ? e_gen[node] : f_gen[node];
    } else {
      const auto& d = cb.decomposition(b.idx);
      if (b.kind == BasisIndex::PosRoot) {
        const SparseMat& a = rho(cb, cb.e_index(d.simple));
        const SparseMat& r = rho(cb, cb.e_index(d.rest));
        m = a.multiply(r).minus(r.multiply(a)).scaled(d.coeff);
      } else {
        const SparseMat& a = rho(cb, cb.f_index(d.simple));
        const SparseMat& r = rho(cb, cb.f_index(d.rest));
        m = r.multiply(a).minus(a.multiply(r)).scaled(d.coeff);
      }
    }
  }
  rho_cache_[flat] = std::make_unique<SparseMat>(std::move(m));
  return *rho_cache_[flat];
}

QVec RepModule::act(const ChevalleyBasis& cb, const GVec& x, const QVec& v) const {
  if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("act: vector dimension mismatch");
  QVec out(dim);
  for (const auto& [flat, c] : x) {
    if (minorb::is_zero(c)) continue;
    QVec part = rho(cb, flat).apply(v);
    for (int k = 0; k < dim; ++k) out[k] += c * part[k];
  }
  return out;
}

BigInt weyl_dimension(const RootSystem& rs, const WeightVec& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("weyl_dimension: lambda must be dominant");
  WeightVec rho_w = rs.rho();
  WeightVec lr = lambda + rho_w;
  Rat prod(1);
  for (const auto& alpha : rs.positive_roots) {
    prod *= rs.pair_coroot(lr, alpha) / rs.pair_coroot(rho_w, alpha);
  }
  if (!is_integer(prod)) throw std::logic_error("Weyl dimension not integral");
  return prod.get_num();
}

namespace {

struct GramBlock {
  std::vector<int> members;       // basis indices of this weight space
  std::vector<QVec> gram;         // symmetric, indexed like members
  std::map<int, int> pos;         // basis index -> position
};

}  // namespace

RepModule build_irrep(const RootSystem& rs, const WeightVec& lambda, long dim_cap) {
  if (!lambda.dominant()) throw std::invalid_argument("build_irrep: lambda must be dominant");
  BigInt wd = weyl_dimension(rs, lambda);
  if (wd > dim_cap)
    throw DimCapError("build_irrep: Weyl dimension " + wd.get_str() + " exceeds cap " + std::to_string(dim_cap),
                      wd);
  const int l = rs.rank();

  RepModule rep;
  rep.type = rs.type;
  rep.highest = lambda;
  rep.weights.push_back(lambda);
  rep.labels.push_back("v");
  rep.f_gen.assign(l, SparseMat(0, 0));
  rep.e_gen.assign(l, SparseMat(0, 0));

  // Incrementally grown columns; converted to SparseMat at the end.
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> fcol(l), ecol(l);
  for (int i = 0; i < l; ++i) {
    fcol[i].resize(1);
    ecol[i].resize(1);
  }

  std::map<std::vector<long long>, GramBlock> blocks;
  {
    GramBlock b0;
    b0.members = {0};
    b0.gram = {QVec{Rat(1)}};
    b0.pos[0] = 0;
    blocks[lambda.coords] = std::move(b0);
  }

  auto gram_pair = [&](int a, int b) -> Rat {
    const GramBlock& blk = blocks.at(rep.weights[a].coords);
    return blk.gram[blk.pos.at(a)][blk.pos.at(b)];
  };

  // Contravariant pairing of two candidates f_i b and f_j b2 (same weight):
  // <f_i b, f_j b2> = <b, f_j(e_i b2)> + [i==j] <mu(b2), alpha_i^vee> <b, b2>.
  auto cand_pair = [&](int i, int b, int j, int b2) -> Rat {
    Rat t = 0;
    for (const auto& [k, c] : ecol[i][b2])
      for (const auto& [m2, c2] : fcol[j][k]) {
        if (rep.weights[m2].coords == rep.weights[b].coords) t += c * c2 * gram_pair(b, m2);
      }
    if (i == j) {
      if (rep.weights[b].coords == rep.weights[b2].coords)
        t += Rat(static_cast<long>(rep.weights[b2].coords[i])) * gram_pair(b, b2);
    }
    return t;
  };

  std::vector<int> layer = {0};
  while (!layer.empty()) {
    // Candidates grouped by target weight; map order keeps this deterministic.
    std::map<std::vector<long long>, std::vector<std::pair<int, int>>> cands;
    for (int b : layer)
      for (int i = 0; i < l; ++i) {
        WeightVec w = rep.weights[b];
        for (int k = 0; k < l; ++k) w.coords[k] -= rs.cartan[k][i];
        cands[w.coords].push_back({i, b});
      }
    std::vector<int> next_layer;
    for (auto& [wc, list] : cands) {
      GramBlock blk;
      std::vector<std::pair<int, int>> provenance;  // (i, b) of accepted members
      for (const auto& [i, b] : list) {
        const std::size_t na = blk.members.size();
        QVec gvec(na);
        for (std::size_t a = 0; a < na; ++a)
          gvec[a] = cand_pair(provenance[a].first, provenance[a].second, i, b);
        Rat gcc = cand_pair(i, b, i, b);

        // Residual norm after projecting on the accepted span; the form is
        // positive definite on the irreducible quotient, so residual zero
        // means the candidate IS its projection.
        QVec x;
        Rat resid = gcc;
        if (na > 0) {
          QMatrix g(na, na);
          for (std::size_t r = 0; r < na; ++r)
            for (std::size_t c = 0; c < na; ++c) g.at(r, c) = blk.gram[r][c];
          auto sol = solve_linear(g, gvec);
          if (!sol) throw std::logic_error("build_irrep: accepted Gram block singular");
          x = *sol;
          for (std::size_t a = 0; a < na; ++a) resid -= x[a] * gvec[a];
        }
        if (!minorb::is_zero(resid)) {
          int m = static_cast<int>(rep.weights.size());
          WeightVec w;
          w.coords = wc;
          rep.weights.push_back(w);
          rep.labels.push_back("f" + std::to_string(i + 1) + "*" + rep.labels[b]);
          for (int t = 0; t < l; ++t) {
            fcol[t].resize(m + 1);
            ecol[t].resize(m + 1);
          }
          fcol[i][b] = {{m, Rat(1)}};
          // e_j(f_i b) = f_i(e_j b) + [i==j] <mu(b), alpha_j^vee> b
          for (int j = 0; j < l; ++j) {
            std::map<int, Rat> acc;
            for (const auto& [k, c] : ecol[j][b])
              for (const auto& [m2, c2] : fcol[i][k]) acc[m2] += c * c2;
            if (j == i) acc[b] += Rat(static_cast<long>(rep.weights[b].coords[j]));
            for (const auto& [m2, c] : acc)
              if (!minorb::is_zero(c)) ecol[j][m].push_back({m2, c});
          }
          // Grow the Gram block.
          for (std::size_t r = 0; r < na; ++r) blk.gram[r].push_back(gvec[r]);
          QVec newrow = gvec;
          newrow.push_back(gcc);
          blk.gram.push_back(std::move(newrow));
          blk.pos[m] = static_cast<int>(blk.members.size());
          blk.members.push_back(m);
          provenance.push_back({i, b});
          next_layer.push_back(m);
        } else {
          // f_i b equals its projection onto the accepted candidates.
          std::vector<std::pair<int, Rat>> combo;
          for (std::size_t a = 0; a < na; ++a)
            if (!minorb::is_zero(x[a])) combo.push_back({blk.members[a], x[a]});
          fcol[i][b] = std::move(combo);
        }
      }
      if (!blk.members.empty()) blocks[wc] = std::move(blk);
    }
    layer = std::move(next_layer);
  }

  rep.dim = static_cast<int>(rep.weights.size());
  if (BigInt(rep.dim) != wd)
    throw std::logic_error("build_irrep: constructed dimension " + std::to_string(rep.dim) +
                           " != Weyl dimension " + wd.get_str());

  for (int i = 0; i < l; ++i) {
    rep.f_gen[i] = SparseMat(rep.dim, rep.dim);
    rep.e_gen[i] = SparseMat(rep.dim, rep.dim);
    for (int j = 0; j < rep.dim; ++j) {
      rep.f_gen[i].cols[j] = fcol[i][j];
      rep.e_gen[i].cols[j] = ecol[i][j];
    }
  }

  // The lowest-weight line is the unique basis direction killed by every f_i.
  int lw = -1;
  for (int b = 0; b < rep.dim; ++b) {
    bool killed = true;
    for (int i = 0; i < l && killed; ++i)
      if (!rep.f_gen[i].cols[b].empty()) killed = false;
    if (killed) {
      if (lw >= 0) throw std::logic_error("build_irrep: lowest-weight vector not unique");
      lw = b;
    }
  }
  if (lw < 0) throw std::logic_error("build_irrep: no lowest-weight vector found");
  rep.lw_index = lw;
  rep.hw_index = 0;
  return rep;
}

Rat pair_lowest(const RepModule& rep, const QVec& v) {
  if (static_cast<int>(v.size()) != rep.dim) throw std::invalid_argument("pair_lowest: dimension mismatch");
  return v[rep.lw_index];
}

}  // namespace minorb
