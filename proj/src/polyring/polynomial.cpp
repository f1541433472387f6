#include "realbezout/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "realbezout/matrix.hpp"

namespace rbz {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(nvars, 0);
  e[var] = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exps, const Rational& c) {
  Polynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree() == 0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return kZeroDegree;
  int best = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t total = 0;
    for (auto x : e) total += x;
    best = std::max(best, static_cast<int>(total));
  }
  return best;
}

int Polynomial::degree_in(std::size_t var) const {
  if (var >= nvars_) throw std::invalid_argument("variable index out of range");
  if (terms_.empty()) return kZeroDegree;
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
  return best;
}

bool Polynomial::uses_variable(std::size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (uses_variable(v)) vars.push_back(v);
  return vars;
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw std::invalid_argument("exponent vector length != nvars");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("polynomials have different variable counts");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool is_const = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "X" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Rational eval(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("eval: point dimension mismatch");
  // Per-variable power caches keep repeated exponents cheap.
  std::vector<std::vector<Rational>> powers(p.nvars());
  Rational total = 0;
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(1);
      while (cache.size() <= e[i]) cache.push_back(cache.back() * point[i]);
      term *= cache[e[i]];
    }
    total += term;
  }
  return total;
}

Polynomial partial(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::invalid_argument("partial: variable index out of range");
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

Polynomial homogenize(const Polynomial& p) {
  Polynomial out(p.nvars() + 1);
  const int deg = p.degree();
  for (const auto& [e, c] : p.terms()) {
    Exponents h(p.nvars() + 1);
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      h[i + 1] = e[i];
      total += e[i];
    }
    h[0] = static_cast<std::uint32_t>(deg) - total;
    out.add_term(h, c);
  }
  return out;
}

Polynomial dehomogenize(const Polynomial& p) {
  if (p.nvars() == 0) throw std::invalid_argument("dehomogenize: no variable to drop");
  Polynomial out(p.nvars() - 1);
  for (const auto& [e, c] : p.terms()) out.add_term(Exponents(e.begin() + 1, e.end()), c);
  return out;
}

Polynomial shift(const Polynomial& p, std::span<const Rational> center) {
  if (center.size() != p.nvars()) throw std::invalid_argument("shift: center dimension mismatch");
  const std::size_t n = p.nvars();
  Polynomial out(n);
  // (t + c)^e = sum_a C(e, a) c^(e-a) t^a, taken per variable and multiplied out.
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> factors(n);
  for (const auto& [e, coef] : p.terms()) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& f = factors[v];
      f.clear();
      if (center[v] == 0 || e[v] == 0) {
        f.emplace_back(e[v], Rational(1));
        continue;
      }
      for (std::uint32_t a = 0; a <= e[v]; ++a) {
        Rational w = Rational(binomial(e[v], a)) * pow(center[v], e[v] - a);
        f.emplace_back(a, w);
      }
    }
    // Odometer over the factor choices.
    std::vector<std::size_t> pick(n, 0);
    Exponents out_e(n);
    while (true) {
      Rational w = coef;
      for (std::size_t v = 0; v < n; ++v) {
        out_e[v] = factors[v][pick[v]].first;
        w *= factors[v][pick[v]].second;
      }
      out.add_term(out_e, w);
      std::size_t v = 0;
      while (v < n && ++pick[v] == factors[v].size()) pick[v++] = 0;
      if (v == n) break;
    }
  }
  return out;
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Rational& value) {
  if (var >= p.nvars()) throw std::invalid_argument("substitute: variable index out of range");
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents r = e;
    r[var] = 0;
    out.add_term(r, c * pow(value, e[var]));
  }
  return out;
}

Polynomial linear_change(const Polynomial& p, const RationalMatrix& m) {
  const std::size_t n = p.nvars();
  if (m.size() != n) throw std::invalid_argument("linear_change: matrix size != nvars");
  if (m.determinant() == 0) throw std::domain_error("linear_change: singular matrix");
  // X_i -> sum_j m(i, j) X_j, with cached powers of each linear form.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial form(n);
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      form.add_term(e, m(i, j));
    }
    powers[i].push_back(Polynomial::constant(n, 1));
    powers[i].push_back(std::move(form));
  }
  Polynomial out(n);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
      term *= powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

std::vector<Rational> univariate_coefficients(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::invalid_argument("univariate_coefficients: variable out of range");
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("polynomial is not univariate in the given variable");
    if (coeffs.size() <= e[var]) coeffs.resize(e[var] + 1);
    coeffs[e[var]] = c;
  }
  return coeffs;
}

}  // namespace rbz
