#include <doctest.h>

#include "minorb/heisenberg.hpp"

using namespace minorb;

namespace {

std::pair<RootSystem, ChevalleyBasis> make(const std::string& s) {
  RootSystem rs = build_root_system(*SimpleType::parse(s));
  ChevalleyBasis cb = build_chevalley(rs);
  return {rs, std::move(cb)};
}

GVec unit(int flat) { return GVec{{flat, Rat(1)}}; }

// Does some +-1 rescaling of the chart variables turn `mine` into `want`?
bool matches_up_to_signs(const Poly& mine, const Poly& want, int nvars) {
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    std::vector<Rat> sg(nvars);
    for (int i = 0; i < nvars; ++i) sg[i] = (mask & (1u << i)) ? Rat(-1) : Rat(1);
    if (mine.rescale_vars(sg) == want) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Kostant root counts") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "F4",
                           "G2", "E6"}) {
    auto rs = build_root_system(*SimpleType::parse(name));
    HeisenbergBasis hb = kostant_roots(rs);
    CHECK_MESSAGE(hb.size() == 2 * rs.dual_coxeter - 3, name);
    CHECK(hb.root_indices[hb.theta_position] == rs.num_positive() - 1);
  }
}

TEST_CASE("table orders for the worked examples") {
  auto [b2, b2cb] = make("B2");
  auto hb = kostant_roots_table_order(b2);
  REQUIRE(hb.has_value());
  CHECK(b2.positive_roots[hb->root_indices[0]] == RootVec{{0, 1}});
  CHECK(b2.positive_roots[hb->root_indices[1]] == RootVec{{1, 2}});
  CHECK(b2.positive_roots[hb->root_indices[2]] == RootVec{{1, 1}});

  auto [d5, d5cb] = make("D5");
  auto hd5 = kostant_roots_table_order(d5);
  REQUIRE(hd5.has_value());
  CHECK(hd5->size() == 13);
  CHECK(d5.positive_roots[hd5->root_indices[12]] == RootVec{{1, 2, 2, 1, 1}});

  auto [a4, a4cb] = make("A4");
  CHECK_FALSE(kostant_roots_table_order(a4).has_value());
}

TEST_CASE("n* is two-step nilpotent with center e_theta") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"}) {
    auto [rs, cb] = make(name);
    HeisenbergBasis hb = kostant_roots(rs);
    int etheta = cb.e_index(rs.num_positive() - 1);
    for (int i = 0; i < hb.size(); ++i)
      for (int j = 0; j < hb.size(); ++j) {
        GVec b = cb.bracket(unit(cb.e_index(hb.root_indices[i])), unit(cb.e_index(hb.root_indices[j])));
        // [E_i, E_j] lies in the line through e_theta.
        for (const auto& [k, c] : b) CHECK(k == etheta);
        for (int k = 0; k < hb.size(); ++k)
          CHECK(cb.bracket(unit(cb.e_index(hb.root_indices[k])), b).empty());
      }
  }
}

TEST_CASE("chart origin maps to f_theta and scaling is degree-homogeneous") {
  auto [rs, cb] = make("B2");
  HeisenbergBasis hb = kostant_roots(rs);
  ChartPoint origin{Rat(1), QVec(hb.size(), Rat(0))};
  OrbitPoint p = chart_to_orbit(cb, hb, origin);
  QVec expect(cb.dim);
  expect[cb.f_index(rs.num_positive() - 1)] = 1;
  CHECK(p.coeffs == expect);
  CHECK_THROWS_AS(chart_to_orbit(cb, hb, ChartPoint{Rat(0), QVec(hb.size(), Rat(0))}), std::invalid_argument);

  // c -> 2c multiplies the order-r Hamiltonian value by 2^r.
  ChartPoint q{Rat(1), QVec{rat(1, 2), Rat(-1), Rat(2)}};
  ChartPoint q2{Rat(2), q.x};
  RepModule rep1 = build_irrep(rs, rs.fundamental_weight(0));
  Poly f11 = hamiltonian_poly(cb, rep1, 0, 1);
  Rat v1 = f11.evaluate(chart_to_orbit(cb, hb, q).coeffs);
  Rat v2 = f11.evaluate(chart_to_orbit(cb, hb, q2).coeffs);
  CHECK(v2 == v1 * 2);
}

TEST_CASE("A2 chart points realize as rank-1 square-zero matrices") {
  auto [rs, cb] = make("A2");
  HeisenbergBasis hb = kostant_roots(rs);
  ClassicalRealization rz = classical_realization(cb);
  ChartPoint p{rat(3, 2), QVec{Rat(1), rat(-1, 2), Rat(2)}};
  QMatrix m = realize_matrix(cb, rz, chart_to_orbit(cb, hb, p).sparse());
  CHECK(m.rank() == 1);
  CHECK((m * m).is_zero());
}

TEST_CASE("worked-example cells reproduce up to sign gauges") {
  auto [b2, b2cb] = make("B2");
  auto hb2 = *kostant_roots_table_order(b2);
  RepModule v1 = build_irrep(b2, b2.fundamental_weight(0));
  RepModule v2 = build_irrep(b2, b2.fundamental_weight(1));
  CHECK(matches_up_to_signs(heisenberg_hamiltonian(b2cb, hb2, v1, 0, 1), Poly::parse("x0*x2+x1"), 3));
  CHECK(heisenberg_hamiltonian(b2cb, hb2, v2, 1, 1) == Poly::parse("x1"));
  // Order 2 vanishes identically for both nodes of so(5).
  CHECK(heisenberg_hamiltonian(b2cb, hb2, v1, 0, 2).is_zero());
  CHECK(heisenberg_hamiltonian(b2cb, hb2, v2, 1, 2).is_zero());

  auto [d3, d3cb] = make("D3");
  auto hd3 = *kostant_roots_table_order(d3);
  RepModule d3v1 = build_irrep(d3, d3.fundamental_weight(0));
  CHECK(matches_up_to_signs(heisenberg_hamiltonian(d3cb, hd3, d3v1, 0, 1),
                            Poly::parse("1/2*x1*x2+1/2*x0*x3+x4"), 5));
  for (int k = 0; k < 3; ++k) {
    RepModule repk = build_irrep(d3, d3.fundamental_weight(k));
    CHECK(heisenberg_hamiltonian(d3cb, hd3, repk, k, 2).is_zero());
  }

  auto [g2, g2cb] = make("G2");
  auto hg2 = *kostant_roots_table_order(g2);
  RepModule g2v2 = build_irrep(g2, g2.fundamental_weight(1));
  // The order-1 and order-2 cells must match under one common gauge.
  Poly o1 = heisenberg_hamiltonian(g2cb, hg2, g2v2, 1, 1);
  Poly o2 = heisenberg_hamiltonian(g2cb, hg2, g2v2, 1, 2);
  Poly want1 = Poly::parse("2*x4");
  Poly want2 = Poly::parse("-x1^3*x2-1/4*x0^2*x2^2+3/2*x0*x1*x2*x3+3/4*x1^2*x3^2-x0*x3^3+x4^2");
  bool found = false;
  for (unsigned mask = 0; mask < (1u << 5) && !found; ++mask) {
    std::vector<Rat> sg(5);
    for (int i = 0; i < 5; ++i) sg[i] = (mask & (1u << i)) ? Rat(-1) : Rat(1);
    found = o1.rescale_vars(sg) == want1 && o2.rescale_vars(sg) == want2;
  }
  CHECK(found);
}

TEST_CASE("orders above m_k give the zero polynomial") {
  auto [rs, cb] = make("B3");
  HeisenbergBasis hb = kostant_roots(rs);
  RepModule rep = build_irrep(rs, rs.fundamental_weight(0));  // m_1 = 1
  CHECK_FALSE(heisenberg_hamiltonian(cb, hb, rep, 0, 1).is_zero());
  CHECK(heisenberg_hamiltonian(cb, hb, rep, 0, 2).is_zero());
  CHECK(heisenberg_hamiltonian(cb, hb, rep, 0, 3).is_zero());
}

TEST_CASE("the chart map is injective on sampled points") {
  auto [rs, cb] = make("B3");
  HeisenbergBasis hb = kostant_roots(rs);
  std::vector<QVec> images;
  for (int s = 0; s < 12; ++s) {
    ChartPoint p{rat(1 + (s % 3), 2), QVec(hb.size())};
    for (int i = 0; i < hb.size(); ++i) p.x[i] = rat(((i + s) % 5) - 2, 1 + (i % 2));
    images.push_back(chart_to_orbit(cb, hb, p).coeffs);
  }
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b) CHECK(images[a] != images[b]);
}

TEST_CASE("chart consistency against the Chevalley Hamiltonians") {
  for (const char* name : {"B2", "G2", "A3"}) {
    auto [rs, cb] = make(name);
    HeisenbergBasis hb = kostant_roots(rs);
    for (int k = 0; k < rs.rank(); ++k) {
      RepModule rep = build_irrep(rs, rs.fundamental_weight(k));
      for (int r = 1; r <= rs.comarks[k]; ++r) {
        Poly cheval = hamiltonian_poly(cb, rep, k, r);
        Poly heis = heisenberg_hamiltonian(cb, hb, rep, k, r);
        Rat rfact = 1;
        for (int i = 2; i <= r; ++i) rfact *= i;
        ChartPoint p{rat(3, 2), QVec(hb.size())};
        for (int i = 0; i < hb.size(); ++i) p.x[i] = rat((i * 7 % 5) - 2, 1 + (i % 3));
        Rat lhs = cheval.evaluate(chart_to_orbit(cb, hb, p).coeffs);
        Rat cr = 1;
        for (int i = 0; i < r; ++i) cr *= p.c;
        CHECK(lhs == cr * rfact * heis.evaluate(p.x));
      }
    }
  }
}
