#ifndef MINORB_HAMILTONIAN_HPP
#define MINORB_HAMILTONIAN_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "minorb/chevalley.hpp"
#include "minorb/poly.hpp"
#include "minorb/rep.hpp"

namespace minorb {

// Point of the minimal nilpotent orbit, produced as a finite conjugation
// word applied to e_theta; lies on the orbit by construction.
struct OrbitPoint {
  QVec coeffs;  // dense over the flat Chevalley basis
  struct Step {
    int flat;
    Rat t;
  };
  std::vector<Step> word;
  std::uint64_t seed = 0;

  GVec sparse() const;
};

enum class MNumberMethod { Sl2, Dominance, Rep };

// Matrix-coefficient Hamiltonian of the given order at node k: the
// coefficient of the highest-weight vector in x^n v_k, expanded symbolically
// over the Chevalley coordinates. Order 1 gives the linear form w_k.
Poly hamiltonian_poly(const ChevalleyBasis& cb, const RepModule& rep, int node, int order);

long long m_number(const ChevalleyBasis& cb, int node, MNumberMethod method, long dim_cap = kDefaultDimCap);
std::vector<long long> m_vector(const ChevalleyBasis& cb, MNumberMethod method, long dim_cap = kDefaultDimCap);

OrbitPoint sample_orbit_point(const ChevalleyBasis& cb, std::uint64_t seed, int word_length = 8);

// Matrix realization of the defining representation for classical types,
// ordered so the Borel acts by upper-triangular matrices. For type D the two
// fork weights +-eps_n are tied; swap_fork picks the other order (the outer
// automorphism), which realizes node n-1 as a leading block.
struct ClassicalRealization {
  RepModule vec_rep;
  std::vector<int> slot_to_basis;
  bool swapped = false;
};
ClassicalRealization classical_realization(const ChevalleyBasis& cb, bool swap_fork = false);
QMatrix realize_matrix(const ChevalleyBasis& cb, const ClassicalRealization& rz, const GVec& x);

// Tr(A_{k,k}) for r=1 and Tr(Lambda^2 A_{k,k}) for r=2 (types B, D only),
// with the block ranges of the classical trace description enforced.
Rat classical_trace_hamiltonian(char family, int k, int r, const QMatrix& a);

// Coefficient of t^m in det[(1 + tA + t^2 A^2/2 + ...)_{k x k}]; A nilpotent.
Rat exp_det_coefficient(const QMatrix& a, int k, int m);

// All in-range Hamiltonians f_{n,k}, 1 <= n <= m_k, as polynomials.
struct HamiltonianSet {
  SimpleType type;
  std::vector<long long> m;
  std::map<std::pair<int, int>, Poly> entries;  // (node, order) -> Poly
};
HamiltonianSet hamiltonian_set(const ChevalleyBasis& cb, long dim_cap = kDefaultDimCap);

}  // namespace minorb

#endif
