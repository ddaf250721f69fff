#ifndef MINORB_ROOT_SYSTEM_HPP
#define MINORB_ROOT_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minorb/rational.hpp"

namespace minorb {

// Simple type in Bourbaki labeling, e.g. {A,4}, {E,8}, {G,2}.
// D3 is accepted (it is A3 with the middle node labeled 1) because the
// so(6) tables are stated in D labels.
struct SimpleType {
  char family = 'A';
  int rank = 0;

  static std::optional<SimpleType> parse(const std::string& s);
  std::string name() const { return family + std::to_string(rank); }
  bool valid() const;
};

// Vector in the basis of simple roots. Exact integer coordinates.
struct RootVec {
  std::vector<int> coords;

  int height() const;
  RootVec operator+(const RootVec& o) const;
  RootVec operator-(const RootVec& o) const;
  RootVec operator-() const;
  RootVec scaled(int k) const;
  bool operator==(const RootVec& o) const { return coords == o.coords; }
  bool operator<(const RootVec& o) const { return coords < o.coords; }
  bool is_zero() const;
  std::string str() const;  // e.g. "a1+2a2"
};

// Vector in the basis of fundamental weights.
struct WeightVec {
  std::vector<long long> coords;

  WeightVec operator+(const WeightVec& o) const;
  WeightVec operator-(const WeightVec& o) const;
  WeightVec operator-() const;
  WeightVec scaled(long long k) const;
  bool operator==(const WeightVec& o) const { return coords == o.coords; }
  bool operator<(const WeightVec& o) const { return coords < o.coords; }
  bool dominant() const;
};

class RootSystem {
 public:
  SimpleType type;
  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<int>> cartan;
  // Symmetrizer d_i = (alpha_i,alpha_i)/2 with long roots normalized to
  // squared length 2, so (alpha_i,alpha_j) = d_i * cartan[i][j].
  std::vector<Rat> symmetrizer;
  // Height-then-lex order (lex on descending first coordinate difference),
  // the canonical internal order for everything downstream.
  std::vector<RootVec> positive_roots;
  RootVec highest_root;
  std::vector<long long> comarks;  // <w_k, theta^vee>
  int dual_coxeter = 0;

  int rank() const { return type.rank; }
  int num_positive() const { return static_cast<int>(positive_roots.size()); }

  bool is_positive_root(const RootVec& r) const;
  bool is_root(const RootVec& r) const;  // positive or negative
  int positive_root_index(const RootVec& r) const;  // -1 when absent

  // Weight coordinates of a root-lattice vector: w_i = <r, alpha_i^vee>.
  WeightVec to_weight(const RootVec& r) const;
  // Root coordinates of a weight; nullopt when not in the root lattice.
  std::optional<RootVec> to_root_lattice(const WeightVec& w) const;

  // (mu, nu) under the W-invariant form with long roots of squared length 2.
  Rat form_roots(const RootVec& a, const RootVec& b) const;
  // (alpha,alpha)/2 for a root.
  Rat half_norm(const RootVec& a) const;
  // Coroot coordinates c_j with alpha^vee = sum c_j alpha_j^vee; exact
  // integers for any root alpha.
  std::vector<long long> coroot_coords(const RootVec& alpha) const;
  // <mu, alpha^vee> for a weight mu and root alpha.
  Rat pair_coroot(const WeightVec& mu, const RootVec& alpha) const;

  WeightVec fundamental_weight(int k) const;  // k is 0-based
  WeightVec rho() const;

  WeightVec simple_reflection(int i, const WeightVec& mu) const;
};

RootSystem build_root_system(SimpleType type);
int dual_coxeter_number(const RootSystem& rs);

// True iff lambda - mu is a nonnegative integer combination of simple roots.
bool dominance_leq(const WeightVec& mu, const WeightVec& lambda, const RootSystem& rs);

// Unique dominant Weyl-orbit representative.
WeightVec dominant_conjugate(WeightVec mu, const RootSystem& rs);

// mu is a weight of the irreducible module V_lambda (lambda dominant).
bool is_weight_of(const WeightVec& mu, const WeightVec& lambda, const RootSystem& rs);

}  // namespace minorb

#endif
