#ifndef MINORB_ENV_HPP
#define MINORB_ENV_HPP

#include <map>
#include <string>
#include <vector>

#include "minorb/chevalley.hpp"
#include "minorb/heisenberg.hpp"
#include "minorb/poly.hpp"
#include "minorb/rep.hpp"

namespace minorb {

// PBW position of a flat basis element: negative root vectors first (in
// canonical root order), then the Cartan, then positive root vectors.
int pbw_rank(const ChevalleyBasis& cb, int flat);
int pbw_rank_to_flat(const ChevalleyBasis& cb, int rank);

// Normal-ordered monomial; entries (rank, exponent) sorted by rank.
struct PBWMono {
  std::vector<std::pair<int, int>> re;

  int degree() const;
  bool operator==(const PBWMono& o) const { return re == o.re; }
  bool operator<(const PBWMono& o) const { return re < o.re; }
};

// Element of U(g) in PBW normal form over a fixed ChevalleyBasis.
class EnvElement {
 public:
  EnvElement() = default;
  static EnvElement one();
  static EnvElement generator(const ChevalleyBasis& cb, int flat);
  static EnvElement constant(const Rat& c);

  bool is_zero() const { return t_.empty(); }
  int degree() const;
  const std::map<PBWMono, Rat>& terms() const { return t_; }
  void add_term(const PBWMono& m, const Rat& c);

  EnvElement operator+(const EnvElement& o) const;
  EnvElement operator-(const EnvElement& o) const;
  EnvElement scaled(const Rat& c) const;
  bool operator==(const EnvElement& o) const { return t_ == o.t_; }
  bool operator!=(const EnvElement& o) const { return !(*this == o); }

  std::string str(const ChevalleyBasis& cb) const;

 private:
  std::map<PBWMono, Rat> t_;
};

// Product in U(g), straightened to PBW normal form via the bracket.
EnvElement pbw_multiply(const EnvElement& a, const EnvElement& b, const ChevalleyBasis& cb);
EnvElement commutator(const EnvElement& a, const EnvElement& b, const ChevalleyBasis& cb);

// Top graded part as a polynomial in the flat coordinates.
Poly env_symbol(const EnvElement& a, const ChevalleyBasis& cb);

enum class FormKind { Killing, Normalized };

// Quantized order-n Hamiltonian at the given node: n=1 gives the Cartan
// element dual to w_k, n=2 gives H_k^2 + sum <w_k,a^vee>/kappa(a,a) E_a E_-a.
EnvElement travkin_quantize(const ChevalleyBasis& cb, const RepModule& rep, int node, int order,
                            FormKind form = FormKind::Killing);

// The Heisenberg-orbit quantization proposal: an element of U(n*) per
// (node, order). Reported, never asserted to commute.
EnvElement heisenberg_orbit_quantize(const ChevalleyBasis& cb, const HeisenbergBasis& hb, const RepModule& rep,
                                     int node, int order, FormKind form = FormKind::Killing);

}  // namespace minorb

#endif
