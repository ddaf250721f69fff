// Extended suite: heavier soak checks beyond the acceptance scope. Kept as a
// separate binary so the quick suites stay quick.

#include <iostream>
#include <random>

#include "minorb/chevalley.hpp"
#include "minorb/hamiltonian.hpp"
#include "minorb/heisenberg.hpp"
#include "minorb/poly.hpp"
#include "minorb/rep.hpp"
#include "minorb/verify.hpp"

using namespace minorb;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n" << std::flush;
  if (!ok) ++failures;
}

}  // namespace

int main() {
  // E8: 20k random Jacobi triples on the full structure table.
  {
    auto cb = build_chevalley(build_root_system(*SimpleType::parse("E8")));
    std::mt19937_64 rng(99);
    bool ok = true;
    for (int t = 0; t < 20000 && ok; ++t) {
      int a = rng() % cb.dim, b = rng() % cb.dim, c = rng() % cb.dim;
      GVec xa{{a, Rat(1)}}, xb{{b, Rat(1)}}, xc{{c, Rat(1)}};
      GVec s = cb.bracket(cb.bracket(xa, xb), xc);
      for (auto& [k, v] : cb.bracket(cb.bracket(xb, xc), xa)) {
        s[k] += v;
        if (is_zero(s[k])) s.erase(k);
      }
      for (auto& [k, v] : cb.bracket(cb.bracket(xc, xa), xb)) {
        s[k] += v;
        if (is_zero(s[k])) s.erase(k);
      }
      ok = s.empty();
    }
    check(ok, "E8 Jacobi identity on 20000 random triples");
  }

  // Large modules build to their exact Weyl dimensions.
  {
    struct Case {
      const char* type;
      int node;
      int dim;
    };
    for (const Case& c : {Case{"B8", 3, 2380}, Case{"B8", 7, 256}, Case{"D8", 5, 8008},
                          Case{"E6", 3, 2925}, Case{"E7", 2, 8645}}) {
      auto rs = build_root_system(*SimpleType::parse(c.type));
      RepModule rep = build_irrep(rs, rs.fundamental_weight(c.node));
      check(rep.dim == c.dim, std::string(c.type) + " node " + std::to_string(c.node + 1) + " has dimension " +
                                  std::to_string(c.dim));
    }
  }

  // Commutativity and independence beyond the rank-4 desk set, including the
  // order-3 family of F4.
  for (const char* name : {"A5", "B5", "C5", "D5", "F4"}) {
    VerifyReport r = verify_commutativity(*SimpleType::parse(name), 40, 11);
    check(r.pass, std::string(name) + " commutativity on 40 samples (" +
                      r.details["nonzero_hamiltonian_evaluations"].dump() + " nonzero evaluations)");
  }
  for (const char* name : {"B5", "D5", "F4"}) {
    VerifyReport r = verify_independence(*SimpleType::parse(name), 11);
    check(r.pass, std::string(name) + " independence, rank " + r.details["rank"].dump());
  }
  for (const char* name : {"B5", "C5", "D5"}) {
    VerifyReport r = verify_cross_basis(*SimpleType::parse(name), 15, 11);
    check(r.pass, std::string(name) + " cross-basis consistency");
  }

  // Point evaluation of the bracket agrees with the polynomial route.
  {
    auto rs = build_root_system(*SimpleType::parse("B4"));
    auto cb = build_chevalley(rs);
    HamiltonianSet hs = hamiltonian_set(cb);
    auto image = killing_dual_substitution(cb);
    Poly f = substitute(hs.entries.at({1, 2}), image);
    Poly g = substitute(hs.entries.at({2, 2}), image);
    Poly br = kk_bracket(f, g, cb);
    bool ok = true;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20 && ok; ++t) {
      QVec pt(cb.dim);
      for (int i = 0; i < cb.dim; ++i) pt[i] = rat(static_cast<long>(rng() % 7) - 3, 1 + (rng() % 2));
      ok = kk_bracket_value(f, g, cb, pt) == br.evaluate(pt);
    }
    check(ok, "kk_bracket_value agrees with the polynomial bracket");
  }

  std::cout << (failures == 0 ? "extended: all checks pass\n" : "extended: FAILURES\n");
  return failures == 0 ? 0 : 1;
}
