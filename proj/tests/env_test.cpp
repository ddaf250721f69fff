#include <doctest.h>

#include <random>

#include "minorb/env.hpp"

using namespace minorb;

namespace {

std::pair<RootSystem, ChevalleyBasis> make(const std::string& s) {
  RootSystem rs = build_root_system(*SimpleType::parse(s));
  ChevalleyBasis cb = build_chevalley(rs);
  return {rs, std::move(cb)};
}

EnvElement random_element(std::mt19937_64& rng, const ChevalleyBasis& cb, int terms, int maxdeg) {
  EnvElement out;
  for (int t = 0; t < terms; ++t) {
    EnvElement mono = EnvElement::one();
    int deg = 1 + static_cast<int>(rng() % maxdeg);
    for (int d = 0; d < deg; ++d)
      mono = pbw_multiply(mono, EnvElement::generator(cb, rng() % cb.dim), cb);
    out = out + mono.scaled(rat(static_cast<long>(rng() % 5) - 2));
  }
  return out;
}

}  // namespace

TEST_CASE("sl2 defining relation in PBW order") {
  auto [rs, cb] = make("A1");
  EnvElement e = EnvElement::generator(cb, cb.e_index(0));
  EnvElement f = EnvElement::generator(cb, cb.f_index(0));
  EnvElement h = EnvElement::generator(cb, cb.h_index(0));
  EnvElement ef = pbw_multiply(e, f, cb);
  CHECK(ef == pbw_multiply(f, e, cb) + h);
  CHECK(pbw_multiply(e, EnvElement::one(), cb) == e);
  CHECK(pbw_multiply(EnvElement::one(), f, cb) == f);
  CHECK(commutator(e, f, cb) == h);
}

TEST_CASE("pbw product is associative on random triples") {
  std::mt19937_64 rng(31);
  for (const char* name : {"A1", "A2", "B2", "C3", "G2"}) {
    auto [rs, cb] = make(name);
    for (int t = 0; t < 1000; ++t) {
      EnvElement a = random_element(rng, cb, 2, 2);
      EnvElement b = random_element(rng, cb, 2, 2);
      EnvElement c = random_element(rng, cb, 2, 2);
      CHECK(pbw_multiply(pbw_multiply(a, b, cb), c, cb) == pbw_multiply(a, pbw_multiply(b, c, cb), cb));
    }
  }
}

TEST_CASE("the top symbol is multiplicative") {
  std::mt19937_64 rng(33);
  auto [rs, cb] = make("A2");
  for (int t = 0; t < 200; ++t) {
    EnvElement a = random_element(rng, cb, 2, 2);
    EnvElement b = random_element(rng, cb, 2, 2);
    if (a.is_zero() || b.is_zero()) continue;
    EnvElement ab = pbw_multiply(a, b, cb);
    if (ab.degree() != a.degree() + b.degree()) continue;  // top parts cancelled
    CHECK(env_symbol(ab, cb) == env_symbol(a, cb) * env_symbol(b, cb));
  }
}

TEST_CASE("degree-1 quantization is the dual Cartan element") {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto [rs, cb] = make(name);
    std::vector<EnvElement> h1;
    for (int k = 0; k < rs.rank(); ++k) {
      RepModule rep = build_irrep(rs, rs.fundamental_weight(k));
      EnvElement q = travkin_quantize(cb, rep, k, 1);
      CHECK(q == EnvElement::generator(cb, cb.h_index(k)));
      h1.push_back(q);
    }
    for (std::size_t a = 0; a < h1.size(); ++a)
      for (std::size_t b = 0; b < h1.size(); ++b) CHECK(commutator(h1[a], h1[b], cb).is_zero());
  }
}

TEST_CASE("degree-2 quantization matches the closed form in both normalizations") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    auto [rs, cb] = make(name);
    for (auto form : {FormKind::Killing, FormKind::Normalized}) {
      for (int k = 0; k < rs.rank(); ++k) {
        RepModule rep = build_irrep(rs, rs.fundamental_weight(k));
        EnvElement q = travkin_quantize(cb, rep, k, 2, form);
        EnvElement hk = EnvElement::generator(cb, cb.h_index(k));
        EnvElement expect = pbw_multiply(hk, hk, cb);
        for (int r = 0; r < rs.num_positive(); ++r) {
          Rat pairing = rs.pair_coroot(rs.fundamental_weight(k), rs.positive_roots[r]);
          if (is_zero(pairing)) continue;  // the R_{P_k} part drops out
          Rat norm = form == FormKind::Killing ? cb.killing_norm(r) : cb.normalized_norm(r);
          EnvElement ef =
              pbw_multiply(EnvElement::generator(cb, cb.e_index(r)), EnvElement::generator(cb, cb.f_index(r)), cb);
          expect = expect + ef.scaled(pairing / norm);
        }
        CHECK(q == expect);
      }
    }
  }
}

TEST_CASE("Cartan elements commute with E_a E_-a") {
  for (const char* name : {"A3", "B2", "C3", "G2"}) {
    auto [rs, cb] = make(name);
    for (int i = 0; i < rs.rank(); ++i) {
      EnvElement h = EnvElement::generator(cb, cb.h_index(i));
      for (int r = 0; r < rs.num_positive(); ++r) {
        EnvElement ef =
            pbw_multiply(EnvElement::generator(cb, cb.e_index(r)), EnvElement::generator(cb, cb.f_index(r)), cb);
        CHECK(commutator(h, ef, cb).is_zero());
      }
    }
  }
}

TEST_CASE("degree-1 commutes with degree-2 identically in PBW form") {
  for (const char* name : {"A2", "B2", "C3", "G2", "D4"}) {
    auto [rs, cb] = make(name);
    std::vector<EnvElement> q1, q2;
    for (int k = 0; k < rs.rank(); ++k) {
      RepModule rep = build_irrep(rs, rs.fundamental_weight(k));
      q1.push_back(travkin_quantize(cb, rep, k, 1));
      q2.push_back(travkin_quantize(cb, rep, k, 2));
    }
    for (std::size_t a = 0; a < q1.size(); ++a)
      for (std::size_t b = 0; b < q2.size(); ++b) CHECK(commutator(q1[a], q2[b], cb).is_zero());
  }
}

TEST_CASE("degree-2 pairs are reported, not asserted") {
  auto [rs, cb] = make("A2");
  RepModule r0 = build_irrep(rs, rs.fundamental_weight(0));
  RepModule r1 = build_irrep(rs, rs.fundamental_weight(1));
  EnvElement c = commutator(travkin_quantize(cb, r0, 0, 2), travkin_quantize(cb, r1, 1, 2), cb);
  // The commutator is generally nonzero in U(g) (commutativity is only
  // conjectured modulo the orbit ideal); just pin the computation.
  CHECK_FALSE(c.is_zero());
  CHECK(c == commutator(travkin_quantize(cb, r0, 0, 2), travkin_quantize(cb, r1, 1, 2), cb));
}

TEST_CASE("heisenberg-orbit proposal elements are deterministic") {
  auto [rs, cb] = make("B2");
  HeisenbergBasis hb = kostant_roots(rs);
  RepModule rep = build_irrep(rs, rs.fundamental_weight(0));
  EnvElement a = heisenberg_orbit_quantize(cb, hb, rep, 0, 1);
  EnvElement b = heisenberg_orbit_quantize(cb, hb, rep, 0, 1);
  CHECK(a == b);
  CHECK_FALSE(a.is_zero());
  // commutators computable (reported upstream, no assertion on the value)
  RepModule rep2 = build_irrep(rs, rs.fundamental_weight(1));
  EnvElement c = commutator(a, heisenberg_orbit_quantize(cb, hb, rep2, 1, 1, FormKind::Normalized), cb);
  (void)c;
}

TEST_CASE("basis mismatch is rejected") {
  auto [rs, cb] = make("A2");
  RepModule rep = build_irrep(rs, rs.fundamental_weight(0));
  CHECK_THROWS_AS(travkin_quantize(cb, rep, 1, 2), std::invalid_argument);
}
