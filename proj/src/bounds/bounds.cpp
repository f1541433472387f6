#include "realbezout/bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rbz {

void Profile::validate() const {
  if (k < 0) throw std::invalid_argument("profile: k must be non-negative");
  if (dims.size() != degs.size() + 1) {
    throw std::invalid_argument("profile: dims must have ell + 1 entries (k_0..k_ell)");
  }
  if (dims.front() != k) throw std::invalid_argument("profile: k_0 must equal k");
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i] > dims[i - 1] || dims[i] < 0) {
      throw std::invalid_argument("profile: dims must be non-increasing and non-negative");
    }
  }
  for (auto d : degs)
    if (d < 1) throw std::invalid_argument("profile: degrees must be positive");
}

bool Profile::ladder_ok() const {
  const int l = ell();
  if (l == 0) return true;
  if (d(1) < 2) return false;
  if (l >= 2 && d(1) > d(2)) return false;
  for (int i = 2; i < l; ++i) {
    if (static_cast<__int128>(k + 1) * d(i) > d(i + 1)) return false;
  }
  return true;
}

std::vector<int> AdmissibleTuple::chain(int k) const {
  std::vector<int> c;
  c.reserve(entries.size() + 1);
  c.push_back(k);
  c.insert(c.end(), entries.begin(), entries.end());
  return c;
}

std::vector<AdmissibleTuple> enumerate_admissible(int j, int k, std::span<const int> dims, bool cap_last) {
  if (j < 0 || k < 0) throw std::invalid_argument("enumerate_admissible: negative j or k");
  const std::size_t needed = cap_last ? static_cast<std::size_t>(j) : static_cast<std::size_t>(std::max(j - 1, 0));
  if (dims.size() < needed) throw std::invalid_argument("enumerate_admissible: too few dims");
  int prev = k;
  for (int v : dims) {
    if (v > prev || v < 0) throw std::invalid_argument("enumerate_admissible: dims must be non-increasing and <= k");
    prev = v;
  }
  std::vector<AdmissibleTuple> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int pos, int upper) {
    if (pos == j) {
      out.push_back({cur});
      return;
    }
    int cap = upper;
    const bool capped = pos + 1 < j || cap_last;
    if (capped) cap = std::min(cap, dims[static_cast<std::size_t>(pos)]);
    for (int v = cap; v >= 0; --v) {
      cur.push_back(v);
      rec(pos + 1, v);
      cur.pop_back();
    }
  };
  rec(0, k);
  return out;
}

namespace {

void check_chain(int k, std::span<const int> chain) {
  if (chain.empty() || chain.front() != k) throw std::invalid_argument("tau chain must start at k");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i] > chain[i - 1] || chain[i] < 0) throw std::invalid_argument("tau chain must be non-increasing");
}

}  // namespace

BigInt f_factor(int k, std::span<const int> chain) {
  check_chain(k, chain);
  const int last = chain.back();
  const int n = k - last;
  BigInt denom = 1;
  int parts = 0;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const int part = chain[i - 1] - chain[i];
    parts += part;
    denom *= factorial(static_cast<std::uint64_t>(part));
  }
  if (parts != n) throw std::logic_error("f_factor: parts do not sum to k - tau_last");
  BigInt multinomial = factorial(static_cast<std::uint64_t>(n)) / denom;
  return BigInt(n + 1) * multinomial;
}

BigInt lemma58_card(int k, std::span<const int> chain) {
  check_chain(k, chain);
  BigInt card = 1;
  for (std::size_t j = 1; j < chain.size(); ++j) {
    card *= binomial(static_cast<std::uint64_t>(k - chain[j] + 1), static_cast<std::uint64_t>(k - chain[j - 1] + 1));
  }
  return card;
}

namespace {

// prod_{1<=i<=upto} ((k - chain[i-1] + 1) d_i)^(chain[i-1] - chain[i])
BigInt ladder_product(const Profile& p, std::span<const int> chain, int upto) {
  BigInt prod = 1;
  for (int i = 1; i <= upto; ++i) {
    const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
    BigInt base = BigInt(p.k - chain[a] + 1) * BigInt(static_cast<long>(p.d(i)));
    prod *= pow(base, static_cast<std::uint64_t>(chain[a] - chain[b]));
  }
  return prod;
}

BigInt theorem12_term(const Profile& p, std::span<const int> chain) {
  const int l = p.ell();
  BigInt dl_pow = pow(BigInt(static_cast<long>(p.d(l))), static_cast<std::uint64_t>(chain.back()));
  return dl_pow * ladder_product(p, chain, l - 1);
}

Rational c_power(const Rational& c, int k) { return pow(c, static_cast<std::uint64_t>(k)); }

}  // namespace

BoundReport theorem12_bound(const Profile& p, const Rational& c) {
  p.validate();
  BoundReport r;
  r.constant_base = c;
  r.hypothesis_violated = !p.ladder_ok();
  const int l = p.ell();
  if (l == 0) {
    r.degenerate = true;
    r.structural_sum = 1;
    r.witness_term = 1;
    r.per_tau_terms.push_back({{p.k}, 1, 1});
    r.asymptotic_value = c_power(c, p.k);
    return r;
  }
  std::vector<int> capped(p.dims.begin() + 1, p.dims.begin() + l);  // k_1..k_{ell-1}
  auto taus = enumerate_admissible(l - 1, p.k, capped, true);
  r.structural_sum = 0;
  for (const auto& t : taus) {
    TauTerm tt;
    tt.chain = t.chain(p.k);
    tt.f = f_factor(p.k, tt.chain);
    tt.term = tt.f * theorem12_term(p, tt.chain);
    r.structural_sum += tt.term;
    r.per_tau_terms.push_back(std::move(tt));
  }
  std::vector<int> witness(p.dims.begin(), p.dims.begin() + l);
  r.witness_term = f_factor(p.k, witness) * theorem12_term(p, witness);
  r.asymptotic_value = c_power(c, p.k) * Rational(r.structural_sum);
  return r;
}

BigInt sign_envelope(std::int64_t s, int top) {
  if (s < 0) throw std::invalid_argument("sign_envelope: negative s");
  BigInt total = 0;
  for (int j = 0; j <= top; ++j) {
    total += pow(BigInt(4), static_cast<std::uint64_t>(j)) *
             binomial(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(j));
  }
  return total;
}

Theorem16Report theorem16_bound(const Profile& p, std::int64_t s, std::int64_t d, const Rational& c) {
  p.validate();
  if (s < 0 || d < 1) throw std::invalid_argument("theorem16_bound: need s >= 0 and d >= 1");
  Theorem16Report r;
  BoundReport& delta = r.delta;
  delta.constant_base = c;
  const int l = p.ell();
  delta.hypothesis_violated = !p.ladder_ok();
  delta.degenerate = l == 0;
  if (l > 0) r.degree_hypothesis_violated = static_cast<__int128>(p.k + 1) * p.d(l) > d;

  std::vector<int> capped(p.dims.begin() + 1, p.dims.end());  // k_1..k_ell
  auto taus = enumerate_admissible(l, p.k, capped, true);
  delta.structural_sum = 0;
  auto term_of = [&](const std::vector<int>& chain) -> BigInt {
    BigInt t = pow(BigInt(static_cast<long>(d)), static_cast<std::uint64_t>(chain.back()));
    return t * ladder_product(p, chain, l);
  };
  for (const auto& t : taus) {
    TauTerm tt;
    tt.chain = t.chain(p.k);
    tt.f = f_factor(p.k, tt.chain);
    tt.term = tt.f * term_of(tt.chain);
    delta.structural_sum += tt.term;
    delta.per_tau_terms.push_back(std::move(tt));
  }
  std::vector<int> witness(p.dims.begin(), p.dims.end());
  delta.witness_term = f_factor(p.k, witness) * term_of(witness);
  delta.asymptotic_value = c_power(c, p.k) * Rational(delta.structural_sum);

  r.envelope = sign_envelope(s, p.dim(l));
  r.structural_total = r.envelope * delta.structural_sum;
  r.asymptotic_total = c_power(c, p.k) * Rational(r.structural_total);
  return r;
}

SubsetDegree theorem18_dI(int k, int k_ell, std::span<const std::int64_t> degs_in_subset) {
  SubsetDegree out;
  const int m = static_cast<int>(degs_in_subset.size());
  out.over_dimension = m > k_ell;
  out.degenerate = m == 0;
  BigInt prod = 1;
  std::int64_t max_d = 1;
  for (auto dp : degs_in_subset) {
    if (dp < 1) throw std::invalid_argument("theorem18_dI: degrees must be positive");
    prod *= BigInt(static_cast<long>(dp));
    max_d = std::max(max_d, dp);
  }
  const long exp_k = static_cast<long>(m) * (m - 1) / 2 + static_cast<long>(k_ell - m) * (m - 1);
  const long exp_max = k_ell - m;
  auto signed_pow = [](const BigInt& base, long e) -> Rational {
    if (e >= 0) return Rational(pow(base, static_cast<std::uint64_t>(e)));
    return Rational(1) / Rational(pow(base, static_cast<std::uint64_t>(-e)));
  };
  Rational v = signed_pow(BigInt(k + 1), exp_k) * Rational(prod);
  if (!out.degenerate) v *= signed_pow(BigInt(static_cast<long>(max_d)), exp_max);
  v.canonicalize();
  out.value = v;
  return out;
}

Theorem18Report theorem18_bound(const Profile& p, std::span<const std::int64_t> family_degs) {
  p.validate();
  Theorem18Report r;
  const int l = p.ell();
  r.degree_product = 1;
  for (int j = 1; j <= l; ++j) {
    r.degree_product *= pow(BigInt(static_cast<long>(p.d(j))), static_cast<std::uint64_t>(p.dim(j - 1) - p.dim(j)));
  }
  const int k_ell = p.dim(l);
  const std::size_t s = family_degs.size();
  BigInt total = 0;
  std::vector<std::int64_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    SubsetDegree di = theorem18_dI(p.k, k_ell, chosen);
    total += pow(BigInt(4), chosen.size()) * BigInt(di.value.get_num());
    ++r.subsets;
    if (static_cast<int>(chosen.size()) == k_ell) return;
    for (std::size_t i = start; i < s; ++i) {
      chosen.push_back(family_degs[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  r.structural_total = total * r.degree_product;
  return r;
}

BigInt prop52_bound(int k, std::span<const std::int64_t> degs) {
  const int m = static_cast<int>(degs.size());
  if (m < 1 || m > k) throw std::invalid_argument("prop52_bound: need 1 <= m <= k");
  if (!std::is_sorted(degs.begin(), degs.end())) throw std::invalid_argument("prop52_bound: degrees must be sorted");
  BigInt prod = binomial(static_cast<std::uint64_t>(k + 1), static_cast<std::uint64_t>(m + 1));
  for (int i = 0; i + 1 < m; ++i) prod *= BigInt(static_cast<long>(degs[static_cast<std::size_t>(i)]));
  prod *= pow(BigInt(static_cast<long>(degs.back())), static_cast<std::uint64_t>(k - m + 1));
  return prod + 2 * (k - m + 1);
}

Rational lemma56_ratio(const Profile& p, std::span<const int> chain) {
  p.validate();
  if (!p.ladder_ok()) throw std::domain_error("lemma56_ratio: degree ladder hypothesis violated");
  const int l = p.ell();
  if (l == 0) throw std::invalid_argument("lemma56_ratio: empty profile");
  check_chain(p.k, chain);
  if (static_cast<int>(chain.size()) != l) throw std::invalid_argument("lemma56_ratio: chain must have ell entries");
  for (int i = 1; i < l; ++i)
    if (chain[static_cast<std::size_t>(i)] > p.dim(i)) throw std::invalid_argument("lemma56_ratio: tau not admissible");
  std::vector<int> top(p.dims.begin(), p.dims.begin() + l);
  Rational r(theorem12_term(p, chain), theorem12_term(p, top));
  r.canonicalize();
  return r;
}

}  // namespace rbz
