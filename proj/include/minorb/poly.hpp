#ifndef MINORB_POLY_HPP
#define MINORB_POLY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "minorb/chevalley.hpp"
#include "minorb/rational.hpp"

namespace minorb {

// Monomial as a sparse exponent map; no zero exponents stored.
struct Mono {
  std::vector<std::pair<int, int>> e;  // (variable, exponent), sorted by variable

  int degree() const;
  bool operator==(const Mono& o) const { return e == o.e; }
  Mono operator*(const Mono& o) const;
};

// Graded order: total degree, then exponent vectors lexicographically.
// Canonical form of a Poly is this map; printing walks it in reverse.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rat& c);
  static Poly var(int v, const Rat& coeff = Rat(1));

  bool is_zero() const { return t_.empty(); }
  int degree() const;
  std::size_t num_terms() const { return t_.size(); }
  const std::map<Mono, Rat, MonoLess>& terms() const { return t_; }
  Rat coefficient(const Mono& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(int v) const;
  Rat evaluate(const QVec& point) const;
  int max_variable() const;  // -1 for constants

  // x_v -> factor[v] * x_v (sign or scalar gauges).
  Poly rescale_vars(const std::vector<Rat>& factor) const;
  // x_v -> x_{perm[v]}.
  Poly permute_vars(const std::vector<int>& perm) const;

  std::string str(const std::function<std::string(int)>& label) const;
  std::string str() const;  // labels x0, x1, ...

  // Parses the x0,x1,... syntax produced by str(), e.g.
  // "-1/4*x0^2*x2^2+3/2*x0*x1*x2*x3". Throws on malformed input.
  static Poly parse(const std::string& s);

  void add_term(const Mono& m, const Rat& c);

 private:
  std::map<Mono, Rat, MonoLess> t_;
};

// Kirillov-Kostant bracket on coordinate functions: {x_a, x_b} = x_[a,b]
// extended by the Leibniz rule; variables are indexed by the flat Chevalley
// basis of cb.
Poly kk_bracket(const Poly& f, const Poly& g, const ChevalleyBasis& cb);

// Value of {f, g} at a point without forming the bracket polynomial;
// useful when the polynomials are large.
Rat kk_bracket_value(const Poly& f, const Poly& g, const ChevalleyBasis& cb, const QVec& point);

// x_v -> image[v], a general linear (or polynomial) substitution.
Poly substitute(const Poly& p, const std::vector<Poly>& image);

// Substitution turning a polynomial in the coefficient coordinates of g into
// the same function of the Kirillov-Kostant coordinates xi_a = kappa(x, e_a):
// precomposition with the inverse Killing Gram matrix. A function f on an
// adjoint orbit Poisson-commutes when the bracket of substitute(f, .) is
// evaluated at dual_coordinates of the orbit points; the coefficient
// coordinates themselves are not Kirillov-Kostant coordinates.
std::vector<Poly> killing_dual_substitution(const ChevalleyBasis& cb);

}  // namespace minorb

#endif
