#include <doctest.h>

#include <random>
#include <set>

#include "minorb/root_system.hpp"

using namespace minorb;

namespace {

RootSystem rs_of(const std::string& s) { return build_root_system(*SimpleType::parse(s)); }

RootVec rv(std::vector<int> c) { return RootVec{std::move(c)}; }

// Full Weyl orbit by closing under simple reflections; small types only.
std::set<std::vector<long long>> weyl_orbit(const RootSystem& rs, const WeightVec& mu) {
  std::set<std::vector<long long>> orbit{mu.coords};
  std::vector<WeightVec> frontier{mu};
  while (!frontier.empty()) {
    std::vector<WeightVec> next;
    for (const auto& w : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        WeightVec r = rs.simple_reflection(i, w);
        if (orbit.insert(r.coords).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return orbit;
}

}  // namespace

TEST_CASE("type parsing and rank validation") {
  CHECK(SimpleType::parse("A3").has_value());
  CHECK(SimpleType::parse("g2").has_value());
  CHECK(SimpleType::parse("D3").has_value());  // so(6) alias
  CHECK_FALSE(SimpleType::parse("Q9").has_value());
  CHECK_FALSE(SimpleType::parse("A0").has_value());
  CHECK_FALSE(SimpleType::parse("B1").has_value());
  CHECK_FALSE(SimpleType::parse("D2").has_value());
  CHECK_FALSE(SimpleType::parse("E5").has_value());
  CHECK_FALSE(SimpleType::parse("F5").has_value());
  CHECK_FALSE(SimpleType::parse("G3").has_value());
  CHECK_FALSE(SimpleType::parse("8").has_value());
  CHECK_THROWS_AS(build_root_system(SimpleType{'E', 9}), std::invalid_argument);
}

TEST_CASE("highest roots") {
  CHECK(rs_of("B2").highest_root == rv({1, 2}));
  CHECK(rs_of("G2").highest_root == rv({3, 2}));
  auto a1 = rs_of("A1");
  CHECK(a1.positive_roots.size() == 1);
  CHECK(a1.highest_root == rv({1}));
  CHECK(rs_of("F4").highest_root == rv({2, 3, 4, 2}));
  CHECK(rs_of("E8").highest_root == rv({2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST_CASE("dual Coxeter numbers") {
  CHECK(dual_coxeter_number(rs_of("F4")) == 9);
  CHECK(dual_coxeter_number(rs_of("E8")) == 30);
  for (int n = 1; n <= 8; ++n) CHECK(dual_coxeter_number(rs_of("A" + std::to_string(n))) == n + 1);
  CHECK(dual_coxeter_number(rs_of("G2")) == 4);
  CHECK(dual_coxeter_number(rs_of("E6")) == 12);
  CHECK(dual_coxeter_number(rs_of("E7")) == 18);
}

TEST_CASE("comarks sum to the dual Coxeter number minus one") {
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5",
                           "B6", "B7", "B8", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "D4", "D5",
                           "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2"}) {
    auto rs = rs_of(name);
    long long s = 1;
    for (auto c : rs.comarks) s += c;
    CHECK_MESSAGE(s == rs.dual_coxeter, name);
  }
}

TEST_CASE("highest root is dominant and maximal") {
  for (const char* name : {"A3", "B3", "C4", "D4", "F4", "G2", "E6"}) {
    auto rs = rs_of(name);
    CHECK(rs.to_weight(rs.highest_root).dominant());
    for (int i = 0; i < rs.rank(); ++i) {
      RootVec up = rs.highest_root;
      up.coords[i] += 1;
      CHECK_FALSE(rs.is_root(up));
    }
  }
}

TEST_CASE("dominance order") {
  auto f4 = rs_of("F4");
  WeightVec w2 = f4.fundamental_weight(1);
  WeightVec theta = f4.to_weight(f4.highest_root);
  CHECK(dominance_leq(w2, w2, f4));
  // -w2 <= w2 - 3 theta and w2 - 4 theta <= -w2
  CHECK(dominance_leq(-w2, w2 - theta.scaled(3), f4));
  CHECK(dominance_leq(w2 - theta.scaled(4), -w2, f4));

  auto e8 = rs_of("E8");
  WeightVec e8w2 = e8.fundamental_weight(1);
  WeightVec e8theta = e8.to_weight(e8.highest_root);
  CHECK(dominance_leq(-e8w2, e8w2 - e8theta.scaled(3), e8));
  CHECK(dominance_leq(e8w2 - e8theta.scaled(3), e8w2, e8));
  // w1 - 3 theta and -w1 are incomparable in E8 (3 theta - 2 w1 has mixed
  // signs); the membership test below settles r_1 = 2 regardless.
  WeightVec e8w1 = e8.fundamental_weight(0);
  CHECK_FALSE(dominance_leq(e8w1 - e8theta.scaled(3), -e8w1, e8));
  CHECK_FALSE(dominance_leq(-e8w1, e8w1 - e8theta.scaled(3), e8));

  // Non-lattice difference compares false, not an error.
  auto a2 = rs_of("A2");
  CHECK_FALSE(dominance_leq(a2.fundamental_weight(0), WeightVec{{0, 0}}, a2));
}

TEST_CASE("dominant conjugate") {
  auto a1 = rs_of("A1");
  CHECK(dominant_conjugate(-a1.fundamental_weight(0), a1) == a1.fundamental_weight(0));

  auto g2 = rs_of("G2");
  WeightVec mu = g2.fundamental_weight(0) - g2.to_weight(g2.highest_root);
  WeightVec dom = dominant_conjugate(mu, g2);
  CHECK(dom.dominant());
  // Oracle: the full Weyl orbit (|W(G2)| = 12) contains exactly one dominant
  // element, and every member conjugates to it.
  auto orbit = weyl_orbit(g2, mu);
  int dominant_count = 0;
  for (const auto& c : orbit) {
    WeightVec w{c};
    if (w.dominant()) {
      ++dominant_count;
      CHECK(w == dom);
    }
    CHECK(dominant_conjugate(w, g2) == dom);
  }
  CHECK(dominant_count == 1);

  // Idempotent, and stable under random reflections of the input.
  std::mt19937_64 rng(42);
  for (const char* name : {"A3", "B3", "G2", "C3"}) {
    auto rs = rs_of(name);
    for (int trial = 0; trial < 50; ++trial) {
      WeightVec w;
      for (int i = 0; i < rs.rank(); ++i) w.coords.push_back(static_cast<long long>(rng() % 9) - 4);
      WeightVec d = dominant_conjugate(w, rs);
      CHECK(dominant_conjugate(d, rs) == d);
      WeightVec conj = w;
      for (int k = 0; k < 6; ++k) conj = rs.simple_reflection(rng() % rs.rank(), conj);
      CHECK(dominant_conjugate(conj, rs) == d);
    }
  }
}

TEST_CASE("weight membership") {
  auto f4 = rs_of("F4");
  WeightVec w1 = f4.fundamental_weight(0);
  WeightVec theta = f4.to_weight(f4.highest_root);
  CHECK(is_weight_of(w1, w1, f4));
  // w1 - 2 theta = -w1 is the lowest weight of V_{w1}.
  CHECK(w1 - theta.scaled(2) == -w1);
  CHECK(is_weight_of(w1 - theta.scaled(2), w1, f4));
  CHECK_FALSE(is_weight_of(w1 - theta.scaled(3), w1, f4));
  CHECK_THROWS_AS(is_weight_of(w1, -w1, f4), std::invalid_argument);
}

TEST_CASE("cartan conversions round-trip") {
  std::mt19937_64 rng(7);
  for (const char* name : {"A4", "B4", "C3", "D4", "F4", "G2", "E6"}) {
    auto rs = rs_of(name);
    for (int trial = 0; trial < 30; ++trial) {
      RootVec r;
      for (int i = 0; i < rs.rank(); ++i) r.coords.push_back(static_cast<int>(rng() % 7) - 3);
      auto back = rs.to_root_lattice(rs.to_weight(r));
      REQUIRE(back.has_value());
      CHECK(*back == r);
    }
    // Fundamental weights are generally not in the root lattice but l*P sits
    // inside Q for some integer; just check a known non-member for A2.
  }
  auto a2 = rs_of("A2");
  CHECK_FALSE(a2.to_root_lattice(a2.fundamental_weight(0)).has_value());
}

TEST_CASE("fundamental weight expansions in simple roots") {
  // F4 and E8 have trivial fundamental group, so every fundamental weight
  // lies in the root lattice with known integer coordinates.
  auto f4 = rs_of("F4");
  std::vector<std::vector<int>> f4w = {{2, 3, 4, 2}, {3, 6, 8, 4}, {2, 4, 6, 3}, {1, 2, 3, 2}};
  for (int k = 0; k < 4; ++k) {
    auto r = f4.to_root_lattice(f4.fundamental_weight(k));
    REQUIRE(r.has_value());
    CHECK(r->coords == f4w[k]);
  }
  auto e8 = rs_of("E8");
  auto w1 = e8.to_root_lattice(e8.fundamental_weight(0));
  auto w2 = e8.to_root_lattice(e8.fundamental_weight(1));
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->coords == std::vector<int>{4, 5, 7, 10, 8, 6, 4, 2});
  CHECK(w2->coords == std::vector<int>{5, 8, 10, 15, 12, 9, 6, 3});
}

TEST_CASE("positive root counts") {
  CHECK(rs_of("D3").positive_roots.size() == 6);  // the A3 alias
  CHECK(rs_of("E6").positive_roots.size() == 36);
  CHECK(rs_of("E7").positive_roots.size() == 63);
  CHECK(rs_of("E8").positive_roots.size() == 120);
  CHECK(rs_of("F4").positive_roots.size() == 24);
  CHECK(rs_of("B8").positive_roots.size() == 64);
}
