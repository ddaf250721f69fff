#ifndef MINORB_CHEVALLEY_HPP
#define MINORB_CHEVALLEY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "minorb/linalg.hpp"
#include "minorb/rational.hpp"
#include "minorb/root_system.hpp"

namespace minorb {

// Element of g as a sparse vector over the flat Chevalley basis.
using GVec = std::map<int, Rat>;

struct BasisIndex {
  enum Kind { Cartan, PosRoot, NegRoot };
  Kind kind;
  int idx;  // Cartan node or positive-root index
};

// Chevalley basis {h_1..h_l, e_alpha, f_alpha} with integer structure
// constants. Flat layout: [0,l) Cartan, [l,l+N) e in canonical root order,
// [l+N,l+2N) f in the same order.
class ChevalleyBasis {
 public:
  RootSystem rs;
  int dim = 0;

  int num_positive() const { return rs.num_positive(); }
  int h_index(int i) const { return i; }
  int e_index(int r) const { return rs.rank() + r; }
  int f_index(int r) const { return rs.rank() + num_positive() + r; }
  BasisIndex describe(int flat) const;
  std::string basis_label(int flat) const;  // "h1", "e3", "f5"

  // Structure table: bracket of two flat basis elements.
  const std::vector<std::pair<int, Rat>>& bracket_basis(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * dim + b];
  }
  GVec bracket(const GVec& x, const GVec& y) const;
  QMatrix adjoint_matrix(int flat) const;
  QMatrix adjoint_matrix(const GVec& x) const;

  // exp(ad x) applied to y; requires ad x nilpotent (true for root vectors
  // and for sums of same-sign root vectors).
  GVec exp_ad(const GVec& x, GVec y, const Rat& t) const;

  // Structure constant N(alpha,beta) for positive-root indices; 0 when the
  // sum is not a root.
  long n_constant(int ra, int rb) const;

  // Decomposition e_gamma = c * [e_i, e_delta] used to build representation
  // matrices for non-simple root vectors.
  struct Decomp {
    int simple;
    int rest;  // positive-root index of gamma - alpha_simple
    Rat coeff;
  };
  const Decomp& decomposition(int root_idx) const { return decomp_[root_idx]; }

  std::vector<long long> coroot_of(int root_idx) const { return coroots_[root_idx]; }

  // Killing form squared length of a root, and the normalized invariant form
  // (long roots of squared length 2).
  Rat killing_norm(int root_idx) const;
  Rat normalized_norm(int root_idx) const;

  // Killing form on the basis: kappa(h_i, h_j) and kappa(e_a, f_a); all other
  // pairings vanish.
  const QMatrix& killing_cartan() const { return killing_cartan_; }
  Rat killing_ef(int root_idx) const { return killing_ef_[root_idx]; }

  // Coordinates of kappa(x, .) in the dual basis: the Kirillov-Kostant
  // coordinates of the point of g* an orbit element x corresponds to.
  QVec dual_coordinates(const QVec& coeffs) const;

  friend ChevalleyBasis build_chevalley(const RootSystem& rsys);

 private:
  std::vector<std::vector<std::pair<int, Rat>>> table_;
  std::vector<Decomp> decomp_;
  std::vector<std::vector<long long>> coroots_;
  QMatrix killing_cartan_;  // kappa(h_i, h_j)
  QVec killing_ef_;         // kappa(e_a, f_a) per positive root
};

ChevalleyBasis build_chevalley(const RootSystem& rs);

// Translation between this library's G2 basis and the textbook basis
// {H1,H2,X1..X6,Y1..Y6} used for the g2 worked example: X_k = sign[k-1] *
// e_{phi_k} and Y_k = sign[k-1] * f_{phi_k}, where phi_1..phi_6 is the
// canonical (height-then-lex) order of the G2 positive roots.
std::array<int, 6> g2_textbook_signs();

// Coordinates of x in the textbook basis order (h1,h2,x1..x6,y1..y6).
QVec g2_to_textbook_coords(const ChevalleyBasis& cb, const GVec& x);

}  // namespace minorb

#endif
