#ifndef MINORB_VERIFY_HPP
#define MINORB_VERIFY_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "minorb/rational.hpp"
#include "minorb/root_system.hpp"

namespace minorb {

using Json = nlohmann::ordered_json;

// One verification run. Deterministic per (claim, type, seed); a failing
// report carries the counterexample needed to replay it.
struct VerifyReport {
  std::string claim;
  std::string type;
  Json params = Json::object();
  int samples = 0;
  bool pass = true;
  Json details = Json::object();
  std::vector<std::string> warnings;
  double wall_ms = 0;

  Json to_json() const;
  std::string human() const;
};

// All pairwise Kirillov-Kostant brackets of in-range Hamiltonians evaluate
// to exactly zero on sampled orbit points.
VerifyReport verify_commutativity(SimpleType type, int samples = 100, std::uint64_t seed = 1,
                                  long dim_cap = 20000);

// Exact Jacobian rank h^vee - 1 at some sampled orbit point, plus exact
// vanishing of the out-of-range Hamiltonians on every sample.
VerifyReport verify_independence(SimpleType type, std::uint64_t seed = 1, long dim_cap = 20000);

// Chevalley-vs-Heisenberg chart consistency, and for classical types the
// matrix trace / determinant-block formulas.
VerifyReport verify_cross_basis(SimpleType type, int samples = 25, std::uint64_t seed = 1,
                                long dim_cap = 20000);

// Golden-table diff: Heisenberg root labels, the worked Hamiltonian tables,
// and the Dynkin-label vectors.
VerifyReport verify_tables(SimpleType type, const std::string& testdata_dir);

// The Dynkin-label golden check for every type listed in the label file.
VerifyReport verify_mnumbers(const std::string& testdata_dir, bool with_rep_method = false, long rep_dim_limit = 400);

}  // namespace minorb

#endif
