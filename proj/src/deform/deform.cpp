#include "realbezout/deform.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <random>

#include "realbezout/interval_newton.hpp"
#include "realbezout/jacobian.hpp"

namespace rbz {

// --- schedule --------------------------------------------------------------

Rational InfSchedule::default_base() { return Rational(1, 1u << 20); }

InfSchedule InfSchedule::geometric(int ell, const Rational& base) {
  if (ell < 0) throw std::invalid_argument("InfSchedule: negative ell");
  if (base <= 0 || base >= 1) throw ScheduleError("base must lie in (0, 1)");
  std::vector<Rational> v;
  Rational cur = base;
  for (int i = 0; i < 3 * ell; ++i) {
    v.push_back(cur);
    cur *= base;
  }
  return InfSchedule(ell, std::move(v));
}

InfSchedule InfSchedule::from_values(int ell, std::vector<Rational> ordered) {
  if (ell < 0) throw std::invalid_argument("InfSchedule: negative ell");
  if (ordered.size() != static_cast<std::size_t>(3 * ell)) {
    throw ScheduleError("expected " + std::to_string(3 * ell) + " values, got " + std::to_string(ordered.size()));
  }
  InfSchedule s(ell, std::move(ordered));
  if (!s.strictly_decreasing()) {
    throw ScheduleError("values must decrease strictly along delta_ell, ..., delta_1, zeta_1, eta_1, ..., zeta_ell, eta_ell and lie in (0, 1)");
  }
  return s;
}

const Rational& InfSchedule::delta(int j) const {
  if (j < 1 || j > ell_) throw std::out_of_range("InfSchedule::delta");
  return values_[static_cast<std::size_t>(ell_ - j)];
}

const Rational& InfSchedule::zeta(int j) const {
  if (j < 1 || j > ell_) throw std::out_of_range("InfSchedule::zeta");
  return values_[static_cast<std::size_t>(ell_ + 2 * (j - 1))];
}

const Rational& InfSchedule::eta(int j) const {
  if (j < 1 || j > ell_) throw std::out_of_range("InfSchedule::eta");
  return values_[static_cast<std::size_t>(ell_ + 2 * (j - 1) + 1)];
}

bool InfSchedule::strictly_decreasing() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] <= 0 || values_[i] >= 1) return false;
    if (i > 0 && values_[i] >= values_[i - 1]) return false;
  }
  return true;
}

// --- Def ---------------------------------------------------------------------

Polynomial def_poly(const Polynomial& q_poly, const Rational& zeta, std::size_t q, const Polynomial& h) {
  if (h.nvars() != q_poly.nvars()) throw std::invalid_argument("def_poly: variable count mismatch");
  if (zeta < 0 || zeta > 1) throw std::invalid_argument("def_poly: zeta must lie in [0, 1]");
  for (std::size_t v = 0; v < q && v < h.nvars(); ++v) {
    if (h.uses_variable(v)) {
      throw std::invalid_argument("def_poly: H uses X" + std::to_string(v + 1) + ", only X" + std::to_string(q + 1) +
                                  ".. are allowed");
    }
  }
  return (Rational(1) - zeta) * q_poly - zeta * h;
}

std::vector<Polynomial> def_tuple(const std::vector<Polynomial>& polys, const Rational& zeta, std::size_t q,
                                  const std::vector<Polynomial>& hs) {
  if (polys.size() != hs.size()) throw std::invalid_argument("def_tuple: tuple sizes differ");
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) out.push_back(def_poly(polys[i], zeta, q, hs[i]));
  return out;
}

// --- generic positive polynomials --------------------------------------------

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc908ull;
  for (auto p : parts) h = splitmix(h ^ p);
  return h;
}

// Exponent vectors of total degree <= deg supported on variables [q, k).
void monomials_upto(std::size_t q, std::size_t k, int deg, std::vector<Exponents>& out) {
  Exponents e(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v == k) {
      out.push_back(e);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[v] = static_cast<std::uint32_t>(a);
      rec(v + 1, left - a);
    }
    e[v] = 0;
  };
  rec(q, deg);
}

int even_up(int d, bool& rounded) {
  if (d <= 0) return 2;
  if (d % 2 != 0) {
    rounded = true;
    return d + 1;
  }
  return d;
}

bool positive_on_samples(const Polynomial& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> x(p.nvars());
  for (int s = 0; s < 50; ++s) {
    for (auto& xi : x) xi = ratio(static_cast<long>(rng() % 2001) - 1000, 100);
    if (eval(p, x) <= 0) return false;
  }
  return true;
}

}  // namespace

Polynomial generic_positive(std::size_t q, std::size_t k, int degree, std::uint64_t seed) {
  if (q > k) throw std::invalid_argument("generic_positive: q > k");
  std::mt19937_64 rng(mix({seed, q, k, static_cast<std::uint64_t>(degree)}));
  if (q == k) return Polynomial::constant(k, Rational(1 + static_cast<long>(rng() % 3)));
  if (degree < 2 || degree % 2 != 0) throw std::invalid_argument("generic_positive: degree must be even and >= 2");
  Polynomial out = Polynomial::constant(k, 1);
  for (std::size_t v = q; v < k; ++v) {
    Exponents e(k, 0);
    e[v] = static_cast<std::uint32_t>(degree);
    out.add_term(e, 1);
  }
  std::vector<Exponents> monos;
  monomials_upto(q, k, degree / 2, monos);
  for (int s = 0; s < 2; ++s) {
    Polynomial g(k);
    for (const auto& e : monos) g.add_term(e, Rational(static_cast<long>(rng() % 5) - 2));
    out += g * g;
  }
  return out;
}

// --- F_J ---------------------------------------------------------------------

FJSystem build_FJ(const std::vector<Polynomial>& f, std::size_t p, std::size_t q, const std::vector<std::size_t>& j) {
  if (f.empty()) throw std::invalid_argument("build_FJ: empty F");
  const std::size_t k = f.front().nvars();
  if (q > p || p > k || f.size() != k - p) throw std::invalid_argument("build_FJ: need card F = k - p and q <= p <= k");
  std::vector<std::size_t> js = j;
  std::sort(js.begin(), js.end());
  if (js.size() != k - p) throw std::invalid_argument("build_FJ: card J must equal k - p");
  if (std::adjacent_find(js.begin(), js.end()) != js.end()) throw std::invalid_argument("build_FJ: repeated index in J");
  for (auto v : js)
    if (v < q || v >= k) throw std::invalid_argument("build_FJ: J must lie in [q+1, k]");
  if (js.back() != k - 1) throw std::invalid_argument("build_FJ: J must contain the last variable");

  const JacMatrix m = jac(f, p, q);
  FJSystem out;
  out.system = f;
  out.jac_j = minor(m, js);
  for (std::size_t i = q; i < k; ++i) {
    if (std::binary_search(js.begin(), js.end(), i)) continue;
    std::vector<std::size_t> rows(js.begin(), js.end() - 1);
    rows.push_back(i);
    std::sort(rows.begin(), rows.end());
    out.system.push_back(minor(m, rows));
    ++out.appended;
  }
  return out;
}

bool in_CJ(const FJSystem& fj, const std::vector<Rational>& point) {
  for (const auto& g : fj.system)
    if (eval(g, point) != 0) return false;
  return eval(fj.jac_j, point) != 0;
}

// --- approximating tuples ----------------------------------------------------

BigInt index_sets_with_last(int k, int tau_prev, int tau_cur) {
  if (tau_prev == tau_cur) return 1;
  return binomial(static_cast<std::uint64_t>(k - tau_cur - 1), static_cast<std::uint64_t>(k - tau_prev));
}

namespace {

void check_tau(const Profile& profile, int j, const std::vector<int>& tau) {
  if (j < 0 || j > profile.ell()) throw std::invalid_argument("build_approx_tuples: level out of range");
  if (tau.size() != static_cast<std::size_t>(j)) throw std::invalid_argument("build_approx_tuples: tau must have j entries");
  int prev = profile.k;
  for (int i = 0; i < j; ++i) {
    const int t = tau[static_cast<std::size_t>(i)];
    if (t < 0 || t > prev) throw std::invalid_argument("build_approx_tuples: tau must be non-increasing within [0, k]");
    if (i + 1 < j && t > profile.dim(i + 1)) throw std::invalid_argument("build_approx_tuples: tau is not admissible");
    prev = t;
  }
}

// Subsets of [lo, hi) of the given size that contain hi - 1, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_with_last(std::size_t lo, std::size_t hi, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size == 0 || hi <= lo || size > hi - lo) return out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() + 1 == size) {
      auto s = cur;
      s.push_back(hi - 1);
      out.push_back(std::move(s));
      return;
    }
    for (std::size_t v = start; v + 1 < hi; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

class Builder {
 public:
  Builder(const std::vector<Polynomial>& system, const Profile& profile, const InfSchedule& schedule,
          std::uint64_t seed, const ApproxOptions& opts)
      : profile_(profile), schedule_(schedule), seed_(seed), opts_(opts) {
    for (const auto& q : system) qs_.push_back(opts.square ? q * q : q);
  }

  std::vector<ApproxTuple> build(int j, const std::vector<int>& tau) {
    if (j == 0) {
      ApproxTuple base;
      base.alpha.push_back(IndexPart{});
      return {base};
    }
    const std::vector<int> prefix(tau.begin(), tau.begin() + (j - 1));
    std::vector<ApproxTuple> prev = build(j - 1, prefix);
    const int k = profile_.k;
    const int p = j >= 2 ? tau[static_cast<std::size_t>(j - 2)] : k;
    const int q = tau[static_cast<std::size_t>(j - 1)];
    const auto kk = static_cast<std::size_t>(k), qq = static_cast<std::size_t>(q);
    const std::int64_t dj = profile_.d(j) * (opts_.square ? 2 : 1);

    Polynomial pbar = qs_[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= std::min(k - p, j - 1); ++i) pbar += qs_[static_cast<std::size_t>(i - 1)];
    bool rounded = false;
    const Polynomial h = positive(qq, kk, even_up(pbar.degree(), rounded), {1, static_cast<std::uint64_t>(j)});
    const Polynomial ptilde = def_poly(pbar, schedule_.delta(j), qq, h);

    std::vector<ApproxTuple> out;
    for (std::size_t a = 0; a < prev.size(); ++a) {
      const ApproxTuple& t = prev[a];
      if (p == q) {
        ApproxTuple n = t;
        n.tau = tau;
        n.level = j;
        n.alpha.push_back(IndexPart{});
        n.q_tuple = {ptilde};
        n.degree_rounded = t.degree_rounded || rounded;
        out.push_back(std::move(n));
        continue;
      }
      bool r2 = rounded;
      std::vector<Polynomial> hs;
      std::vector<int> dbar;
      for (std::size_t i = 0; i < t.p_tuple.size(); ++i) {
        dbar.push_back(t.p_tuple[i].degree());
        hs.push_back(positive(qq, kk, even_up(dbar.back(), r2), {2, static_cast<std::uint64_t>(j), a, i}));
      }
      std::vector<Polynomial> f = def_tuple(t.p_tuple, schedule_.eta(j), qq, hs);
      f.push_back(ptilde);

      const auto js = subsets_with_last(qq, kk, static_cast<std::size_t>(k - p + 1));
      for (std::size_t ji = 0; ji < js.size(); ++ji) {
        FJSystem fj = build_FJ(f, static_cast<std::size_t>(p - 1), qq, js[ji]);
        bool r3 = r2;
        std::vector<int> hdeg;
        for (int d : dbar) hdeg.push_back(even_up(d, r3));
        hdeg.push_back(even_up(static_cast<int>(dj), r3));
        const int dprime = even_up(static_cast<int>((k - p + 1) * dj), r3);
        while (hdeg.size() < fj.system.size()) hdeg.push_back(dprime);
        std::vector<Polynomial> hprime;
        for (std::size_t i = 0; i < hdeg.size(); ++i) {
          hprime.push_back(positive(0, kk, hdeg[i], {3, static_cast<std::uint64_t>(j), a, ji, i}));
        }
        ApproxTuple n;
        n.tau = tau;
        n.level = j;
        n.alpha = t.alpha;
        n.alpha.push_back(IndexPart{false, js[ji]});
        n.p_tuple = def_tuple(fj.system, schedule_.zeta(j), 0, hprime);
        n.q_tuple = t.q_tuple;
        n.degree_rounded = t.degree_rounded || r3;
        out.push_back(std::move(n));
      }
    }
    return out;
  }

 private:
  Polynomial positive(std::size_t q, std::size_t k, int degree, std::initializer_list<std::uint64_t> tag) {
    std::uint64_t s = seed_;
    for (auto t : tag) s = mix({s, t});
    for (int attempt = 0;; ++attempt) {
      Polynomial h = generic_positive(q, k, degree, mix({s, static_cast<std::uint64_t>(attempt)}));
      if (positive_on_samples(h, s) || attempt >= opts_.max_reseeds) return h;
    }
  }

  const Profile& profile_;
  const InfSchedule& schedule_;
  std::uint64_t seed_;
  ApproxOptions opts_;
  std::vector<Polynomial> qs_;
};

}  // namespace

std::vector<ApproxTuple> build_approx_tuples(const std::vector<Polynomial>& system, const Profile& profile, int j,
                                             const std::vector<int>& tau, const InfSchedule& schedule,
                                             std::uint64_t seed, const ApproxOptions& opts) {
  profile.validate();
  check_tau(profile, j, tau);
  if (system.size() != static_cast<std::size_t>(profile.ell())) {
    throw std::invalid_argument("build_approx_tuples: need one polynomial per profile degree");
  }
  for (const auto& q : system)
    if (q.nvars() != static_cast<std::size_t>(profile.k)) throw std::invalid_argument("build_approx_tuples: polynomials must have k variables");
  if (!schedule.strictly_decreasing()) throw ScheduleError("schedule is not strictly decreasing");
  if (schedule.ell() < j) throw std::invalid_argument("build_approx_tuples: schedule has too few levels");
  Builder b(system, profile, schedule, seed, opts);
  return b.build(j, tau);
}

TupleAudit audit_tuple(const ApproxTuple& t, const Profile& profile, bool squared) {
  TupleAudit a;
  const int k = profile.k;
  const std::int64_t scale = squared ? 2 : 1;
  const int tau_j = t.level == 0 ? k : t.tau.back();
  a.card_p_ok = t.p_tuple.size() == static_cast<std::size_t>(k - tau_j);
  a.card_q_ok = t.q_tuple.size() <= 1;

  a.blocks_ok = a.blocks_rounded_ok = a.card_p_ok;
  a.rounded = t.degree_rounded;
  std::size_t pos = 0;
  int prev = k;
  for (int i = 1; i <= t.level; ++i) {
    const int cur = t.tau[static_cast<std::size_t>(i - 1)];
    const std::int64_t di = profile.d(i) * scale;
    const std::int64_t bound = static_cast<std::int64_t>(k - prev + 1) * di;
    const std::int64_t rounded_bound = static_cast<std::int64_t>(k - prev + 1) * (di + di % 2);
    for (int c = 0; c < prev - cur && pos < t.p_tuple.size(); ++c, ++pos) {
      a.p_degrees.push_back(t.p_tuple[pos].degree());
      a.block_bounds.push_back(bound);
      if (a.p_degrees.back() > bound) a.blocks_ok = false;
      if (a.p_degrees.back() > rounded_bound) a.blocks_rounded_ok = false;
    }
    prev = cur;
  }

  const std::int64_t dl = profile.ell() > 0 ? profile.d(profile.ell()) * scale : 0;
  a.q_strict_ok = a.q_loose_ok = true;
  for (const auto& q : t.q_tuple) {
    a.q_degree = std::max(a.q_degree, q.degree());
    if (q.degree() > dl) a.q_strict_ok = false;
    if (q.degree() > 2 * dl) a.q_loose_ok = false;
  }
  return a;
}

PerturbCheck perturb_simple_zero_check(const std::vector<Polynomial>& f, const std::vector<Polynomial>& h,
                                       const Rational& zeta, const std::vector<Rational>& x, const Rational& radius) {
  const std::size_t n = x.size();
  if (f.size() != n || h.size() != n) throw std::invalid_argument("perturb_simple_zero_check: need a square system");
  for (const auto& g : f)
    if (g.nvars() != n) throw std::invalid_argument("perturb_simple_zero_check: variable count mismatch");
  if (radius <= 0) throw std::invalid_argument("perturb_simple_zero_check: radius must be positive");

  PerturbCheck out;
  Box box;
  for (const auto& xi : x) box.emplace_back(xi - radius, xi + radius);

  const JacMatrix m = jac(f, 0, 0);
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  if (eval_interval_centered(minor(m, rows), box).contains_zero()) {
    out.verdict = PerturbVerdict::kRejected;
    out.reason = "Jacobian of F is not invertible on the whole box";
    return out;
  }

  const KrawczykOperator kr(def_tuple(f, zeta, 0, h));
  KrawczykResult r = kr.apply(box);
  if (r.verdict == KrawczykVerdict::kUnique) {
    out.verdict = PerturbVerdict::kCertified;
    for (std::size_t i = 0; i < n; ++i) out.enclosure.push_back(intersect(box[i], r.image[i]));
  } else {
    out.reason = r.verdict == KrawczykVerdict::kNoZero ? "no zero of the deformed system in the box"
                                                       : "Krawczyk test inconclusive";
  }
  return out;
}

}  // namespace rbz
