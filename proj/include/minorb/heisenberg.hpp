#ifndef MINORB_HEISENBERG_HPP
#define MINORB_HEISENBERG_HPP

#include <optional>
#include <vector>

#include "minorb/chevalley.hpp"
#include "minorb/hamiltonian.hpp"
#include "minorb/poly.hpp"
#include "minorb/rep.hpp"

namespace minorb {

// Kostant's Heisenberg algebra: the span of the positive roots not
// orthogonal to the highest root. Two-step nilpotent with center e_theta;
// dimension 2h^vee - 3.
struct HeisenbergBasis {
  SimpleType type;
  std::vector<int> root_indices;  // positive-root indices, listing order = chart variables
  int theta_position = -1;        // position of theta in the list

  int size() const { return static_cast<int>(root_indices.size()); }
};

// Canonical (height-then-lex) order.
HeisenbergBasis kostant_roots(const RootSystem& rs);

// The fixed table order used by the worked so(5)..so(10) and g2 examples;
// available exactly for B2, D3, B3, D4, B4, D5, G2.
std::optional<HeisenbergBasis> kostant_roots_table_order(const RootSystem& rs);

struct ChartPoint {
  Rat c;
  QVec x;  // length 2h^vee - 3, ordered like the HeisenbergBasis
};

// Ad(exp(ad sum x_i E_i))(c f_theta); c must be nonzero.
OrbitPoint chart_to_orbit(const ChevalleyBasis& cb, const HeisenbergBasis& hb, const ChartPoint& p);

// Degree-r Hamiltonian in the chart coordinates x_0..x_{2h-4}:
// <v^k, exp(sum x_i rho(E_i)) rho(f_theta)^r v_k> / r!.
// Returns the zero polynomial for r > m_k (the table's zero cells).
Poly heisenberg_hamiltonian(const ChevalleyBasis& cb, const HeisenbergBasis& hb, const RepModule& rep,
                            int node, int order);

}  // namespace minorb

#endif
