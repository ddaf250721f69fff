#include "minorb/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "minorb/linalg.hpp"

namespace minorb {

std::optional<SimpleType> SimpleType::parse(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (...) {
    return std::nullopt;
  }
  SimpleType t{fam, rank};
  if (!t.valid()) return std::nullopt;
  return t;
}

bool SimpleType::valid() const {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;  // D3 = A3 relabeled, kept for the so(6) tables
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

int RootVec::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

RootVec RootVec::operator+(const RootVec& o) const {
  RootVec r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

RootVec RootVec::operator-(const RootVec& o) const {
  RootVec r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

RootVec RootVec::operator-() const {
  RootVec r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

RootVec RootVec::scaled(int k) const {
  RootVec r = *this;
  for (auto& c : r.coords) c *= k;
  return r;
}

bool RootVec::is_zero() const {
  for (int c : coords)
    if (c != 0) return false;
  return true;
}

std::string RootVec::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!first) os << (coords[i] > 0 ? "+" : "");
    if (coords[i] == -1)
      os << "-";
    else if (coords[i] != 1)
      os << coords[i] << "*";
    os << "a" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

WeightVec WeightVec::operator+(const WeightVec& o) const {
  WeightVec r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

WeightVec WeightVec::operator-(const WeightVec& o) const {
  WeightVec r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

WeightVec WeightVec::operator-() const {
  WeightVec r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

WeightVec WeightVec::scaled(long long k) const {
  WeightVec r = *this;
  for (auto& c : r.coords) c *= k;
  return r;
}

bool WeightVec::dominant() const {
  for (long long c : coords)
    if (c < 0) return false;
  return true;
}

namespace {

// cartan[i][j] = <alpha_j, alpha_i^vee>; symmetrizer d_i = (alpha_i,alpha_i)/2
// normalized so long roots have squared length 2.
void family_data(SimpleType t, std::vector<std::vector<int>>& cartan, std::vector<Rat>& d) {
  const int l = t.rank;
  cartan.assign(l, std::vector<int>(l, 0));
  d.assign(l, Rat(1));
  for (int i = 0; i < l; ++i) cartan[i][i] = 2;
  auto edge = [&](int i, int j) { cartan[i][j] = cartan[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      cartan[l - 1][l - 2] = -2;
      cartan[l - 2][l - 1] = -1;
      d[l - 1] = rat(1, 2);
      break;
    case 'C':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      cartan[l - 2][l - 1] = -2;
      cartan[l - 1][l - 2] = -1;
      for (int i = 0; i + 1 < l; ++i) d[i] = rat(1, 2);
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1);
      edge(l - 3, l - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case 'F':
      edge(0, 1);
      cartan[2][1] = -2;
      cartan[1][2] = -1;
      edge(2, 3);
      d[2] = d[3] = rat(1, 2);
      break;
    case 'G':
      cartan[0][1] = -3;
      cartan[1][0] = -1;
      d[0] = rat(1, 3);
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
}

int expected_positive_count(SimpleType t) {
  const int l = t.rank;
  switch (t.family) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    default: return -1;
  }
}

// Canonical order: height ascending, then coordinate vectors lexicographically
// descending, so alpha_1 < alpha_2 < ... within each height level.
bool canonical_root_less(const RootVec& a, const RootVec& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coords > b.coords;
}

}  // namespace

bool RootSystem::is_positive_root(const RootVec& r) const {
  return positive_root_index(r) >= 0;
}

bool RootSystem::is_root(const RootVec& r) const {
  if (r.height() >= 0 && is_positive_root(r)) return true;
  return positive_root_index(-r) >= 0;
}

int RootSystem::positive_root_index(const RootVec& r) const {
  auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), r, canonical_root_less);
  if (it != positive_roots.end() && *it == r) return static_cast<int>(it - positive_roots.begin());
  return -1;
}

WeightVec RootSystem::to_weight(const RootVec& r) const {
  const int l = rank();
  WeightVec w;
  w.coords.assign(l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) w.coords[i] += static_cast<long long>(cartan[i][j]) * r.coords[j];
  return w;
}

std::optional<RootVec> RootSystem::to_root_lattice(const WeightVec& w) const {
  const int l = rank();
  QMatrix a(l, l);
  QVec b(l);
  for (int i = 0; i < l; ++i) {
    b[i] = Rat(static_cast<long>(w.coords[i]));
    for (int j = 0; j < l; ++j) a.at(i, j) = cartan[i][j];
  }
  auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  RootVec r;
  r.coords.assign(l, 0);
  for (int j = 0; j < l; ++j) {
    if (!is_integer((*x)[j])) return std::nullopt;
    r.coords[j] = static_cast<int>((*x)[j].get_num().get_si());
  }
  return r;
}

Rat RootSystem::form_roots(const RootVec& a, const RootVec& b) const {
  Rat s = 0;
  const int l = rank();
  for (int i = 0; i < l; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < l; ++j) {
      if (b.coords[j] == 0) continue;
      s += symmetrizer[i] * cartan[i][j] * a.coords[i] * b.coords[j];
    }
  }
  return s;
}

Rat RootSystem::half_norm(const RootVec& a) const { return form_roots(a, a) / 2; }

std::vector<long long> RootSystem::coroot_coords(const RootVec& alpha) const {
  Rat da = half_norm(alpha);
  std::vector<long long> c(rank());
  for (int j = 0; j < rank(); ++j) {
    Rat cj = symmetrizer[j] * alpha.coords[j] / da;
    if (!is_integer(cj)) throw std::logic_error("coroot coordinates not integral for " + alpha.str());
    c[j] = cj.get_num().get_si();
  }
  return c;
}

Rat RootSystem::pair_coroot(const WeightVec& mu, const RootVec& alpha) const {
  auto c = coroot_coords(alpha);
  Rat s = 0;
  for (int j = 0; j < rank(); ++j) s += Rat(static_cast<long>(c[j])) * static_cast<long>(mu.coords[j]);
  return s;
}

WeightVec RootSystem::fundamental_weight(int k) const {
  WeightVec w;
  w.coords.assign(rank(), 0);
  w.coords[k] = 1;
  return w;
}

WeightVec RootSystem::rho() const {
  WeightVec w;
  w.coords.assign(rank(), 1);
  return w;
}

WeightVec RootSystem::simple_reflection(int i, const WeightVec& mu) const {
  WeightVec r = mu;
  long long mi = mu.coords[i];
  for (int k = 0; k < rank(); ++k) r.coords[k] -= mi * cartan[k][i];
  return r;
}

RootSystem build_root_system(SimpleType type) {
  if (!type.valid())
    throw std::invalid_argument("invalid type " + std::string(1, type.family) + std::to_string(type.rank) +
                                ": rank out of range for family");
  RootSystem rs;
  rs.type = type;
  family_data(type, rs.cartan, rs.symmetrizer);
  const int l = type.rank;

  // Close the simple roots under addition, height by height. beta + alpha_i is
  // a root iff p - <beta, alpha_i^vee> > 0 where p is the depth of the
  // alpha_i-string through beta.
  std::set<std::vector<int>> seen;
  std::vector<RootVec> current;
  for (int i = 0; i < l; ++i) {
    RootVec a;
    a.coords.assign(l, 0);
    a.coords[i] = 1;
    current.push_back(a);
    seen.insert(a.coords);
  }
  std::vector<RootVec> all = current;
  while (!current.empty()) {
    std::vector<RootVec> next;
    for (const auto& beta : current) {
      for (int i = 0; i < l; ++i) {
        RootVec ai;
        ai.coords.assign(l, 0);
        ai.coords[i] = 1;
        if (beta == ai) continue;
        long long pairing = 0;
        for (int j = 0; j < l; ++j) pairing += static_cast<long long>(rs.cartan[i][j]) * beta.coords[j];
        int p = 0;
        RootVec down = beta - ai;
        while (seen.count(down.coords)) {
          ++p;
          down = down - ai;
        }
        if (p - pairing > 0) {
          RootVec up = beta + ai;
          if (!seen.count(up.coords)) {
            seen.insert(up.coords);
            next.push_back(up);
          }
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    current = std::move(next);
  }
  std::sort(all.begin(), all.end(), canonical_root_less);
  rs.positive_roots = std::move(all);

  if (rs.num_positive() != expected_positive_count(type))
    throw std::logic_error("positive root count mismatch for " + type.name());

  rs.highest_root = rs.positive_roots.back();
  // The maximal height level must be a single dominant root.
  if (rs.num_positive() >= 2 &&
      rs.positive_roots[rs.num_positive() - 2].height() == rs.highest_root.height())
    throw std::logic_error("highest root not unique for " + type.name());
  if (!rs.to_weight(rs.highest_root).dominant())
    throw std::logic_error("highest root not dominant for " + type.name());

  // theta^vee = sum_k comark_k alpha_k^vee; comark_k = <w_k, theta^vee>.
  rs.comarks = rs.coroot_coords(rs.highest_root);
  long long h = 1;
  for (long long c : rs.comarks) h += c;
  rs.dual_coxeter = static_cast<int>(h);
  return rs;
}

int dual_coxeter_number(const RootSystem& rs) { return rs.dual_coxeter; }

bool dominance_leq(const WeightVec& mu, const WeightVec& lambda, const RootSystem& rs) {
  auto diff = rs.to_root_lattice(lambda - mu);
  if (!diff) return false;
  for (int c : diff->coords)
    if (c < 0) return false;
  return true;
}

WeightVec dominant_conjugate(WeightVec mu, const RootSystem& rs) {
  const int l = rs.rank();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < l; ++i) {
      if (mu.coords[i] < 0) {
        mu = rs.simple_reflection(i, mu);
        changed = true;
        break;
      }
    }
  }
  return mu;
}

bool is_weight_of(const WeightVec& mu, const WeightVec& lambda, const RootSystem& rs) {
  if (!lambda.dominant()) throw std::invalid_argument("is_weight_of: lambda must be dominant");
  if (!rs.to_root_lattice(lambda - mu)) return false;
  return dominance_leq(dominant_conjugate(mu, rs), lambda, rs);
}

}  // namespace minorb
