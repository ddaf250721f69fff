#ifndef MINORB_REP_HPP
#define MINORB_REP_HPP

#include <memory>
#include <string>
#include <vector>

#include "minorb/chevalley.hpp"
#include "minorb/rational.hpp"
#include "minorb/root_system.hpp"

namespace minorb {

// Column-sparse matrix: cols[j] lists (row, value) of the image of basis
// vector j.
struct SparseMat {
  int rows = 0, cols_n = 0;
  std::vector<std::vector<std::pair<int, Rat>>> cols;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols_n(c), cols(c) {}
  QVec apply(const QVec& v) const;
  void apply_into(const QVec& v, QVec& out) const;  // out += M v
  SparseMat multiply(const SparseMat& o) const;     // this * o
  SparseMat scaled(const Rat& c) const;
  SparseMat minus(const SparseMat& o) const;
  bool is_zero() const;
};

// Irreducible highest-weight module with exact generator action. Basis
// vectors are labeled by the first f-word that produced them; dependence is
// detected with the contravariant form (null directions are exactly the
// vectors that vanish in the irreducible quotient).
struct RepModule {
  SimpleType type;
  WeightVec highest;
  int dim = 0;
  int hw_index = 0;
  int lw_index = 0;
  std::vector<WeightVec> weights;
  std::vector<std::string> labels;
  std::vector<SparseMat> f_gen, e_gen;  // one per simple node

  QVec h_apply(int i, const QVec& v) const;  // h_i is diagonal on weights

  // rho of an arbitrary flat Chevalley basis element; built from the
  // decomposition tree and cached.
  const SparseMat& rho(const ChevalleyBasis& cb, int flat) const;
  QVec act(const ChevalleyBasis& cb, const GVec& x, const QVec& v) const;

  QVec hw_vector() const;

 private:
  mutable std::vector<std::unique_ptr<SparseMat>> rho_cache_;
};

// Weyl dimension formula, exact.
BigInt weyl_dimension(const RootSystem& rs, const WeightVec& lambda);

struct DimCapError : std::runtime_error {
  BigInt dimension;
  DimCapError(const std::string& msg, BigInt d) : std::runtime_error(msg), dimension(std::move(d)) {}
};

constexpr long kDefaultDimCap = 20000;

RepModule build_irrep(const RootSystem& rs, const WeightVec& lambda, long dim_cap = kDefaultDimCap);

// Coefficient of the canonical lowest-weight basis vector.
Rat pair_lowest(const RepModule& rep, const QVec& v);

}  // namespace minorb

#endif
