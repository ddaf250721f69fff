#include <doctest.h>

#include <random>

#include "minorb/chevalley.hpp"

using namespace minorb;

namespace {

ChevalleyBasis cb_of(const std::string& s) { return build_chevalley(build_root_system(*SimpleType::parse(s))); }

GVec unit(int flat) { return GVec{{flat, Rat(1)}}; }

GVec add(GVec a, const GVec& b) {
  for (const auto& [k, c] : b) {
    a[k] += c;
    if (is_zero(a[k])) a.erase(k);
  }
  return a;
}

bool jacobi_holds(const ChevalleyBasis& cb, const GVec& x, const GVec& y, const GVec& z) {
  GVec s = cb.bracket(cb.bracket(x, y), z);
  s = add(std::move(s), cb.bracket(cb.bracket(y, z), x));
  s = add(std::move(s), cb.bracket(cb.bracket(z, x), y));
  return s.empty();
}

}  // namespace

TEST_CASE("defining relations") {
  for (const char* name : {"A2", "B2", "C3", "D4", "G2", "F4"}) {
    auto cb = cb_of(name);
    const auto& rs = cb.rs;
    for (int i = 0; i < rs.rank(); ++i) {
      // Simple roots are the first rank entries of the canonical order.
      GVec h = cb.bracket(unit(cb.e_index(i)), unit(cb.f_index(i)));
      CHECK(h == unit(cb.h_index(i)));
    }
    // [h_i, e_b] = <b, a_i^vee> e_b
    for (int i = 0; i < rs.rank(); ++i)
      for (int r = 0; r < rs.num_positive(); ++r) {
        GVec br = cb.bracket(unit(cb.h_index(i)), unit(cb.e_index(r)));
        long long expect = rs.to_weight(rs.positive_roots[r]).coords[i];
        if (expect == 0)
          CHECK(br.empty());
        else
          CHECK(br == GVec{{cb.e_index(r), Rat(static_cast<long>(expect))}});
      }
  }
}

TEST_CASE("brackets vanish exactly off the root system") {
  auto cb = cb_of("B3");
  const auto& rs = cb.rs;
  for (int a = 0; a < rs.num_positive(); ++a)
    for (int b = 0; b < rs.num_positive(); ++b) {
      RootVec s = rs.positive_roots[a] + rs.positive_roots[b];
      if (!rs.is_positive_root(s)) CHECK(cb.bracket(unit(cb.e_index(a)), unit(cb.e_index(b))).empty());
    }
}

TEST_CASE("structure constants are +-(p+1) and antisymmetric") {
  for (const char* name : {"C3", "F4", "G2", "B4"}) {
    auto cb = cb_of(name);
    const auto& rs = cb.rs;
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int b = 0; b < rs.num_positive(); ++b) {
        if (a == b) continue;
        const RootVec &ra = rs.positive_roots[a], &rb = rs.positive_roots[b];
        if (!rs.is_positive_root(ra + rb)) continue;
        long n = cb.n_constant(a, b);
        CHECK(n == -cb.n_constant(b, a));
        int p = 0;
        RootVec down = rb - ra;
        while (rs.is_root(down) && !down.is_zero()) {
          ++p;
          down = down - ra;
        }
        CHECK(std::abs(n) == p + 1);
      }
  }
}

TEST_CASE("Jacobi identity holds exhaustively on G2") {
  auto cb = cb_of("G2");
  for (int a = 0; a < cb.dim; ++a)
    for (int b = a + 1; b < cb.dim; ++b)
      for (int c = b + 1; c < cb.dim; ++c) REQUIRE(jacobi_holds(cb, unit(a), unit(b), unit(c)));
}

TEST_CASE("Jacobi identity holds on random triples for large types") {
  std::mt19937_64 rng(11);
  for (const char* name : {"B8", "E7"}) {
    auto cb = cb_of(name);
    for (int t = 0; t < 10000; ++t) {
      int a = rng() % cb.dim, b = rng() % cb.dim, c = rng() % cb.dim;
      REQUIRE(jacobi_holds(cb, unit(a), unit(b), unit(c)));
    }
  }
}

TEST_CASE("bracket is alternating and bilinear on sparse vectors") {
  std::mt19937_64 rng(5);
  auto cb = cb_of("B2");
  for (int t = 0; t < 100; ++t) {
    GVec x;
    for (int k = 0; k < cb.dim; ++k)
      if (rng() % 2) x[k] = rat(static_cast<long>(rng() % 7) - 3);
    CHECK(cb.bracket(x, x).empty());
  }
  // sl2: [e, f] = h
  auto a1 = cb_of("A1");
  CHECK(a1.bracket(unit(a1.e_index(0)), unit(a1.f_index(0))) == unit(a1.h_index(0)));
}

TEST_CASE("adjoint matrices") {
  auto cb = cb_of("B3");
  const auto& rs = cb.rs;
  // ad(h_i) is diagonal with the pairing on root spaces and zero on Cartan.
  for (int i = 0; i < rs.rank(); ++i) {
    QMatrix m = cb.adjoint_matrix(cb.h_index(i));
    for (int a = 0; a < cb.dim; ++a)
      for (int b = 0; b < cb.dim; ++b) {
        if (a != b) {
          CHECK(is_zero(m.at(a, b)));
        } else {
          BasisIndex d = cb.describe(a);
          Rat expect = 0;
          if (d.kind == BasisIndex::PosRoot)
            expect = Rat(static_cast<long>(rs.to_weight(rs.positive_roots[d.idx]).coords[i]));
          if (d.kind == BasisIndex::NegRoot)
            expect = -Rat(static_cast<long>(rs.to_weight(rs.positive_roots[d.idx]).coords[i]));
          CHECK(m.at(a, a) == expect);
        }
      }
  }
  // ad(e_theta)^2 kills every positive root vector; ad(e_theta)^3 = 0 on g.
  int etheta = cb.e_index(rs.num_positive() - 1);
  QMatrix ad = cb.adjoint_matrix(etheta);
  QMatrix ad2 = ad * ad;
  for (int r = 0; r < rs.num_positive(); ++r) {
    QVec v(cb.dim);
    v[cb.e_index(r)] = 1;
    QVec w = ad2.apply(v);
    for (const auto& c : w) CHECK(is_zero(c));
  }
  CHECK((ad2 * ad).is_zero());
  // ad of a simple root vector is nilpotent of low degree.
  for (int i = 0; i < rs.rank(); ++i) {
    QMatrix a = cb.adjoint_matrix(cb.e_index(i));
    QMatrix p = a;
    int k = 1;
    while (!p.is_zero() && k <= cb.dim) {
      p = p * a;
      ++k;
    }
    CHECK(k <= 6);
  }
}

TEST_CASE("exp_ad is exact and nilpotent-terminating") {
  auto cb = cb_of("A2");
  // exp(ad e_1) f_1 = f_1 + h_1 - e_1
  GVec v = cb.exp_ad(unit(cb.e_index(0)), unit(cb.f_index(0)), Rat(1));
  GVec expect{{cb.f_index(0), Rat(1)}, {cb.h_index(0), Rat(1)}, {cb.e_index(0), Rat(-1)}};
  CHECK(v == expect);
}

TEST_CASE("g2 textbook basis translation") {
  auto cb = cb_of("G2");
  const auto& rs = cb.rs;
  auto sg = g2_textbook_signs();
  // Re-derive the signs from the displayed brackets:
  //   [Y2,X6] = -X5, [Y3,X6] = -X4, [Y4,X6] = +X3, [Y5,X6] = +X2,
  //   [Y6,X6] = -(H1 + 2 H2), [H2,X6] = X6, and [A,X6] has no x- or y1-terms.
  auto coeff_of = [&](const GVec& v, int flat) -> Rat {
    auto it = v.find(flat);
    return it == v.end() ? Rat(0) : it->second;
  };
  auto bket = [&](int a, int b) { return cb.bracket(unit(a), unit(b)); };
  int X6 = cb.e_index(5);
  CHECK(coeff_of(bket(cb.f_index(1), X6), cb.e_index(4)) * sg[1] * sg[5] == Rat(-1) * sg[4]);
  CHECK(coeff_of(bket(cb.f_index(2), X6), cb.e_index(3)) * sg[2] * sg[5] == Rat(-1) * sg[3]);
  CHECK(coeff_of(bket(cb.f_index(3), X6), cb.e_index(2)) * sg[3] * sg[5] == Rat(1) * sg[2]);
  CHECK(coeff_of(bket(cb.f_index(4), X6), cb.e_index(1)) * sg[4] * sg[5] == Rat(1) * sg[1]);
  // [Y6, X6] = -(H1 + 2H2) regardless of the sign table.
  GVec h = bket(cb.f_index(5), X6);
  CHECK(h == GVec{{cb.h_index(0), Rat(-1)}, {cb.h_index(1), Rat(-2)}});
  // [H2, X6] = X6 and [H1, X6] = 0.
  CHECK(bket(cb.h_index(1), X6) == unit(X6));
  CHECK(bket(cb.h_index(0), X6).empty());
  // No X-terms and no Y1-term can appear in [A, X6].
  for (int r = 0; r < rs.num_positive(); ++r) CHECK(bket(cb.e_index(r), X6).empty());
  CHECK(bket(cb.f_index(0), X6).empty());
  // Coordinates transform with the same signs.
  GVec a{{cb.e_index(4), Rat(3)}, {cb.f_index(3), rat(1, 2)}, {cb.h_index(0), Rat(-1)}};
  QVec p = g2_to_textbook_coords(cb, a);
  CHECK(p[0] == Rat(-1));
  CHECK(p[2 + 4] == Rat(3) * sg[4]);
  CHECK(p[8 + 3] == rat(1, 2) * sg[3]);
}

TEST_CASE("killing form is the normalized form times 2 h_vee") {
  for (const char* name : {"A1", "A2", "B2", "C3", "G2", "F4", "D4"}) {
    auto cb = cb_of(name);
    const auto& rs = cb.rs;
    for (int r = 0; r < rs.num_positive(); ++r)
      CHECK(cb.killing_norm(r) * 2 * rs.dual_coxeter == cb.normalized_norm(r));
  }
}
