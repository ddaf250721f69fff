#include "minorb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace minorb {

int Mono::degree() const {
  int d = 0;
  for (const auto& [v, k] : e) d += k;
  return d;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  std::size_t i = 0, j = 0;
  while (i < e.size() || j < o.e.size()) {
    if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first))
      r.e.push_back(e[i++]);
    else if (i == e.size() || o.e[j].first < e[i].first)
      r.e.push_back(o.e[j++]);
    else {
      r.e.push_back({e[i].first, e[i].second + o.e[j].second});
      ++i, ++j;
    }
  }
  return r;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // lex on dense exponent sequences; sparse maps compare equivalently when
  // walked in variable order with missing entries treated as zero.
  std::size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    // A nonzero exponent at an earlier variable makes the monomial lex-greater.
    if (a.e[i].first != b.e[j].first) return a.e[i].first > b.e[j].first;
    if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
    ++i, ++j;
  }
  return i == a.e.size() && j < b.e.size();
}

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (!minorb::is_zero(c)) p.t_[Mono{}] = c;
  return p;
}

Poly Poly::var(int v, const Rat& coeff) {
  Poly p;
  if (!minorb::is_zero(coeff)) p.t_[Mono{{{v, 1}}}] = coeff;
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

Rat Poly::coefficient(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (minorb::is_zero(c)) return;
  auto it = t_.find(m);
  if (it == t_.end())
    t_[m] = c;
  else {
    it->second += c;
    if (minorb::is_zero(it->second)) t_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r;
  if (minorb::is_zero(c)) return r;
  for (const auto& [m, v] : t_) r.t_[m] = v * c;
  return r;
}

Poly Poly::derivative(int v) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i].first != v) continue;
      Mono d = m;
      int k = d.e[i].second;
      if (k == 1)
        d.e.erase(d.e.begin() + i);
      else
        d.e[i].second = k - 1;
      r.add_term(d, c * k);
      break;
    }
  }
  return r;
}

Rat Poly::evaluate(const QVec& point) const {
  Rat total = 0;
  for (const auto& [m, c] : t_) {
    Rat term = c;
    for (const auto& [v, k] : m.e) {
      if (v >= static_cast<int>(point.size())) throw std::invalid_argument("evaluate: point dimension too small");
      for (int i = 0; i < k; ++i) term *= point[v];
    }
    total += term;
  }
  return total;
}

int Poly::max_variable() const {
  int m = -1;
  for (const auto& [mono, c] : t_)
    for (const auto& [v, k] : mono.e) m = std::max(m, v);
  return m;
}

Poly Poly::rescale_vars(const std::vector<Rat>& factor) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    Rat nc = c;
    for (const auto& [v, k] : m.e) {
      if (v >= static_cast<int>(factor.size())) throw std::invalid_argument("rescale_vars: factor too short");
      for (int i = 0; i < k; ++i) nc *= factor[v];
    }
    r.add_term(m, nc);
  }
  return r;
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    Mono nm;
    for (const auto& [v, k] : m.e) {
      if (v >= static_cast<int>(perm.size())) throw std::invalid_argument("permute_vars: map too short");
      nm.e.push_back({perm[v], k});
    }
    std::sort(nm.e.begin(), nm.e.end());
    r.add_term(nm, c);
  }
  return r;
}

std::string Poly::str(const std::function<std::string(int)>& label) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool coeff_one = (a == 1);
    if (!coeff_one || m.e.empty()) os << rat_str(a);
    bool need_star = !coeff_one && !m.e.empty();
    for (const auto& [v, k] : m.e) {
      if (need_star) os << "*";
      os << label(v);
      if (k > 1) os << "^" << k;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

std::string Poly::str() const {
  return str([](int v) { return "x" + std::to_string(v); });
}

Poly Poly::parse(const std::string& s) {
  Poly out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw std::invalid_argument("Poly::parse: empty input");
  while (i < s.size()) {
    skip_ws();
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    if (i == s.size()) throw std::invalid_argument("Poly::parse: dangling sign");
    Rat coeff(sign);
    Mono m;
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        Rat num(s.substr(i, j - i));
        num.canonicalize();
        coeff *= num;
        i = j;
        saw_factor = true;
      } else if (i < s.size() && s[i] == 'x') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("Poly::parse: variable without index");
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        int k = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (j == i) throw std::invalid_argument("Poly::parse: exponent missing");
          k = std::stoi(s.substr(i, j - i));
          i = j;
        }
        m = m * Mono{{{v, k}}};
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("Poly::parse: expected term at position " + std::to_string(i));
    out.add_term(m, coeff);
    skip_ws();
  }
  return out;
}

namespace {

// Gradient of f evaluated at a point, sparse over variables.
std::map<int, Rat> gradient_at(const Poly& f, const QVec& pt) {
  std::map<int, Rat> grad;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      const auto [v, k] = m.e[i];
      Rat term = c * k;
      for (std::size_t j = 0; j < m.e.size(); ++j) {
        const auto [w, kw] = m.e[j];
        int power = (j == i) ? kw - 1 : kw;
        for (int t = 0; t < power; ++t) term *= pt[w];
      }
      if (!is_zero(term)) grad[v] += term;
    }
  }
  for (auto it = grad.begin(); it != grad.end();)
    it = is_zero(it->second) ? grad.erase(it) : std::next(it);
  return grad;
}

}  // namespace

Rat kk_bracket_value(const Poly& f, const Poly& g, const ChevalleyBasis& cb, const QVec& point) {
  if (f.max_variable() >= cb.dim || g.max_variable() >= cb.dim)
    throw std::invalid_argument("kk_bracket_value: variable outside the Chevalley basis");
  auto gf = gradient_at(f, point), gg = gradient_at(g, point);
  Rat out = 0;
  for (const auto& [a, fa] : gf)
    for (const auto& [b, gb] : gg)
      for (const auto& [k, c] : cb.bracket_basis(a, b)) out += fa * gb * c * point[k];
  return out;
}

Poly substitute(const Poly& p, const std::vector<Poly>& image) {
  Poly out;
  for (const auto& [m, coef] : p.terms()) {
    Poly term = Poly::constant(coef);
    for (const auto& [v, k] : m.e) {
      if (v >= static_cast<int>(image.size())) throw std::invalid_argument("substitute: image too short");
      for (int i = 0; i < k; ++i) term = term * image[v];
    }
    out += term;
  }
  return out;
}

std::vector<Poly> killing_dual_substitution(const ChevalleyBasis& cb) {
  const int l = cb.rs.rank(), n = cb.num_positive();
  std::vector<Poly> image(cb.dim);
  // Inverse of the Cartan block, one solve per column.
  for (int i = 0; i < l; ++i) {
    QVec ei(l);
    ei[i] = 1;
    QMatrix kh = cb.killing_cartan();
    auto col = solve_linear(kh, ei);
    if (!col) throw std::logic_error("killing_dual_substitution: Killing form degenerate");
    Poly p;
    for (int j = 0; j < l; ++j) p += Poly::var(cb.h_index(j), (*col)[j]);
    image[cb.h_index(i)] = std::move(p);
  }
  for (int r = 0; r < n; ++r) {
    image[cb.e_index(r)] = Poly::var(cb.f_index(r), 1 / cb.killing_ef(r));
    image[cb.f_index(r)] = Poly::var(cb.e_index(r), 1 / cb.killing_ef(r));
  }
  return image;
}

Poly kk_bracket(const Poly& f, const Poly& g, const ChevalleyBasis& cb) {
  if (f.max_variable() >= cb.dim || g.max_variable() >= cb.dim)
    throw std::invalid_argument("kk_bracket: variable outside the Chevalley basis");
  // Partial derivatives, sparse over variables.
  std::map<int, Poly> df, dg;
  for (int v = 0; v <= f.max_variable(); ++v) {
    Poly d = f.derivative(v);
    if (!d.is_zero()) df[v] = std::move(d);
  }
  for (int v = 0; v <= g.max_variable(); ++v) {
    Poly d = g.derivative(v);
    if (!d.is_zero()) dg[v] = std::move(d);
  }
  Poly out;
  for (const auto& [a, fa] : df)
    for (const auto& [b, gb] : dg) {
      const auto& br = cb.bracket_basis(a, b);
      if (br.empty()) continue;
      Poly lin;
      for (const auto& [k, c] : br) lin += Poly::var(k, c);
      out += fa * gb * lin;
    }
  return out;
}

}  // namespace minorb
