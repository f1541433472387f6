#include "realbezout/components.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "realbezout/interval_newton.hpp"
#include "realbezout/univariate.hpp"

namespace rbz {

namespace {

using Index = std::vector<std::int64_t>;

struct IndexHash {
  std::size_t operator()(const Index& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Index> neighbor_offsets(std::size_t n, bool vertex) {
  std::vector<Index> out;
  if (!vertex) {
    for (std::size_t v = 0; v < n; ++v) {
      for (int s : {-1, 1}) {
        Index off(n, 0);
        off[v] = s;
        out.push_back(off);
      }
    }
    return out;
  }
  Index off(n, -1);
  while (true) {
    bool zero = true;
    for (auto x : off) zero = zero && x == 0;
    if (!zero) out.push_back(off);
    std::size_t pos = 0;
    while (pos < n && off[pos] == 1) off[pos++] = -1;
    if (pos == n) break;
    ++off[pos];
  }
  return out;
}

// Groups cells (given by index) into connected clusters, each listed in input
// order; clusters are ordered by their first cell.
std::vector<std::vector<std::size_t>> cluster(const std::vector<const Index*>& cells, const std::vector<Index>& offsets) {
  std::unordered_map<Index, std::size_t, IndexHash> where;
  where.reserve(cells.size() * 2);
  for (std::size_t i = 0; i < cells.size(); ++i) where.emplace(*cells[i], i);
  UnionFind uf(cells.size());
  Index probe;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& off : offsets) {
      probe = *cells[i];
      for (std::size_t v = 0; v < probe.size(); ++v) probe[v] += off[v];
      auto it = where.find(probe);
      if (it != where.end()) uf.unite(i, it->second);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::unordered_map<std::size_t, std::size_t> group_of;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::size_t r = uf.find(i);
    auto [it, fresh] = group_of.emplace(r, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

class Grid {
 public:
  explicit Grid(Box root) : root_(std::move(root)) {}

  Box cell(const Index& idx, int depth) const {
    const Rational scale = pow(Rational(2), static_cast<std::uint64_t>(depth));
    Box b;
    b.reserve(idx.size());
    for (std::size_t v = 0; v < idx.size(); ++v) {
      const Rational w = root_[v].width() / scale;
      Rational lo = root_[v].lo() + w * Rational(static_cast<long>(idx[v]));
      Rational hi = lo + w;
      b.emplace_back(std::move(lo), std::move(hi));
    }
    return b;
  }

  Box hull(const std::vector<const Index*>& cells, int depth) const {
    Index lo = *cells.front(), hi = *cells.front();
    for (const Index* c : cells) {
      for (std::size_t v = 0; v < lo.size(); ++v) {
        lo[v] = std::min(lo[v], (*c)[v]);
        hi[v] = std::max(hi[v], (*c)[v]);
      }
    }
    Box a = cell(lo, depth), b = cell(hi, depth);
    return box_hull(a, b);
  }

 private:
  Box root_;
};

// --- separable systems -----------------------------------------------------

struct Separable {
  bool ok = false;
  bool infeasible = false;
  std::vector<std::optional<UniPoly>> axis;  // squarefree constraint; nullopt when free
};

// f = sum_v g_v(X_v)^2 with every g_v non-constant.
bool split_sos(const Polynomial& f, std::vector<std::pair<std::size_t, UniPoly>>& parts) {
  const std::size_t n = f.nvars();
  std::vector<std::vector<Rational>> u(n);
  Rational c0 = 0;
  for (const auto& [e, c] : f.terms()) {
    std::size_t var = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (var != n) return false;
      var = i;
    }
    if (var == n) {
      c0 = c;
      continue;
    }
    if (u[var].size() <= e[var]) u[var].resize(e[var] + 1);
    u[var][e[var]] = c;
  }
  Rational shift_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (u[v].empty()) continue;
    UniPoly g;
    Rational c;
    if (!uni_sqrt_shifted(UniPoly(u[v]), g, c)) return false;
    shift_sum += c;
    parts.emplace_back(v, std::move(g));
  }
  return shift_sum == c0;
}

Separable analyze(const std::vector<Polynomial>& eqs) {
  Separable s;
  const std::size_t n = eqs.front().nvars();
  std::vector<std::optional<UniPoly>> g(n);
  auto add = [&](std::size_t v, const UniPoly& p) { g[v] = g[v] ? gcd(*g[v], p) : p.monic(); };
  for (const auto& f : eqs) {
    if (f.is_zero()) continue;
    if (f.is_constant()) {
      s.ok = s.infeasible = true;
      s.axis.assign(n, std::nullopt);
      return s;
    }
    const auto sup = f.support();
    if (sup.size() == 1) {
      add(sup[0], UniPoly(univariate_coefficients(f, sup[0])));
      continue;
    }
    std::vector<std::pair<std::size_t, UniPoly>> parts;
    if (!split_sos(f, parts)) {
      parts.clear();
      if (!split_sos(-f, parts)) return s;
    }
    for (const auto& [v, gp] : parts) add(v, gp);
  }
  s.ok = true;
  s.axis.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!g[v]) continue;
    UniPoly sq = squarefree_part(*g[v]);
    if (sq.degree() <= 0) s.infeasible = true;
    s.axis[v] = std::move(sq);
  }
  return s;
}

// --- certificates ----------------------------------------------------------

struct Certificate {
  bool known = false;
  std::uint64_t count = 0;
  int dim = -1;
  bool separable = false;
  std::vector<std::vector<RootInterval>> roots;  // per axis; unused for free axes
  Box box;                                       // Krawczyk enclosure of the unique zero
};

Certificate certify(const Separable& sep, const KrawczykOperator* kr, const Box& hull) {
  Certificate c;
  if (sep.ok) {
    c.known = true;
    c.separable = true;
    if (sep.infeasible) return c;
    c.count = 1;
    c.dim = 0;
    c.roots.resize(hull.size());
    for (std::size_t v = 0; v < hull.size(); ++v) {
      if (!sep.axis[v]) {
        ++c.dim;
        continue;
      }
      c.roots[v] = isolate_roots(*sep.axis[v], hull[v].lo(), hull[v].hi());
      c.count *= c.roots[v].size();
    }
    if (c.count == 0) c.dim = -1;
    return c;
  }
  if (kr != nullptr) {
    KrawczykResult r = kr->apply(hull);
    if (r.verdict == KrawczykVerdict::kNoZero) {
      c.known = true;
    } else if (r.verdict == KrawczykVerdict::kUnique) {
      c.known = true;
      c.count = 1;
      c.dim = 0;
      for (std::size_t v = 0; v < hull.size(); ++v) c.box.push_back(intersect(hull[v], r.image[v]));
    }
  }
  return c;
}

struct Frozen {
  Certificate cert;
  Box hull;
};

struct Run {
  CountResult result;
  std::vector<Frozen> frozen;
  Separable sep;
  std::optional<KrawczykOperator> kr;
  std::vector<Index> offsets;
};

void check_inputs(const std::vector<Polynomial>& eqs, const Box& box) {
  if (eqs.empty()) throw std::invalid_argument("count_components: no equations");
  if (box.empty()) throw std::invalid_argument("count_components: empty box");
  for (const auto& f : eqs)
    if (f.nvars() != box.size()) throw std::invalid_argument("count_components: box/variable count mismatch");
  for (const auto& iv : box)
    if (iv.width() <= 0) throw std::invalid_argument("count_components: box sides must have positive width");
}

Run subdivide(const std::vector<Polynomial>& eqs, const Box& box, const CountOptions& opts) {
  check_inputs(eqs, box);
  const std::size_t n = box.size();
  Run run;
  run.sep = analyze(eqs);
  if (!run.sep.ok && eqs.size() == n) run.kr.emplace(eqs);
  run.offsets = neighbor_offsets(n, opts.vertex_adjacency);
  CountResult& res = run.result;
  res.complex.root = box;
  const Grid grid(box);

  std::vector<Index> level{Index(n, 0)};
  std::uint64_t unresolved = 0;
  for (int depth = 0;; ++depth) {
    res.depth_used = depth;
    std::vector<Cell> live;
    for (auto& idx : level) {
      Cell c{std::move(idx), depth, CellStatus::kCandidate, {}, {}};
      c.box = grid.cell(c.index, depth);
      bool excluded = false;
      for (const auto& f : eqs) {
        c.enclosures.push_back(eval_interval_centered(f, c.box));
        if (!c.enclosures.back().contains_zero()) {
          excluded = true;
          break;
        }
      }
      if (!excluded) {
        live.push_back(std::move(c));
      } else if (opts.keep_excluded) {
        c.status = CellStatus::kExcluded;
        res.complex.cells.push_back(std::move(c));
      }
    }

    std::vector<const Index*> ids;
    ids.reserve(live.size());
    for (const auto& c : live) ids.push_back(&c.index);
    const auto groups = cluster(ids, run.offsets);
    std::vector<Box> hulls;
    std::vector<Certificate> certs(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
      std::vector<const Index*> members;
      for (auto i : groups[g]) members.push_back(ids[i]);
      hulls.push_back(grid.hull(members, depth));
      if (depth >= opts.min_depth) certs[g] = certify(run.sep, run.kr ? &*run.kr : nullptr, hulls[g]);
    }

    std::vector<bool> empty(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) empty[g] = certs[g].known && certs[g].count == 0;
    std::vector<std::size_t> rest;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (empty[g]) {
        if (opts.keep_excluded) {
          for (auto i : groups[g]) {
            live[i].status = CellStatus::kExcluded;
            res.complex.cells.push_back(live[i]);
          }
        }
        continue;
      }
      bool isolated = certs[g].known;
      for (std::size_t h = 0; isolated && h < groups.size(); ++h) {
        if (h != g && !empty[h] && boxes_intersect(hulls[g], hulls[h])) isolated = false;
      }
      if (!isolated) {
        rest.push_back(g);
        continue;
      }
      res.lower += certs[g].count;
      if (certs[g].dim > 0) res.positive_dimensional = true;
      res.clusters.push_back({hulls[g], certs[g].count, certs[g].dim, true, groups[g].size()});
      for (auto i : groups[g]) {
        live[i].status = CellStatus::kCertified;
        res.complex.cells.push_back(live[i]);
      }
      run.frozen.push_back({std::move(certs[g]), hulls[g]});
    }
    if (rest.empty()) break;

    std::size_t rest_cells = 0;
    for (auto g : rest) rest_cells += groups[g].size();
    bool last = depth >= opts.max_depth;
    if (!last && (rest_cells << n) > opts.max_cells) {
      res.budget_hit = true;
      last = true;
    }
    if (last) {
      for (auto g : rest) {
        const auto& c = certs[g];
        unresolved += c.known ? c.count : 1;
        if (c.dim > 0) res.positive_dimensional = true;
        res.clusters.push_back({hulls[g], c.known ? c.count : 1, c.dim, false, groups[g].size()});
        for (auto i : groups[g]) res.complex.cells.push_back(live[i]);
      }
      break;
    }

    level.clear();
    level.reserve(rest_cells << n);
    for (auto g : rest) {
      for (auto i : groups[g]) {
        const Index& parent = live[i].index;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          Index child(n);
          for (std::size_t v = 0; v < n; ++v) child[v] = 2 * parent[v] + static_cast<std::int64_t>((mask >> v) & 1u);
          level.push_back(std::move(child));
        }
      }
    }
  }
  res.upper = res.lower + unresolved;
  res.exact = unresolved == 0 && res.clusters.size() == run.frozen.size();
  return run;
}

// --- sign census -----------------------------------------------------------

std::vector<int> compatible_signs(const Interval& e) {
  std::vector<int> out;
  if (e.lo() < 0) out.push_back(-1);
  if (e.contains_zero()) out.push_back(0);
  if (e.hi() > 0) out.push_back(1);
  return out;
}

// One certified component: a zero (or a product set with free axes) that can
// be squeezed further when a sign is undecided.
class ZeroRecord {
 public:
  ZeroRecord(const Separable* sep, Box hull, std::vector<RootInterval> coords)
      : sep_(sep), hull_(std::move(hull)), coords_(std::move(coords)) {}
  ZeroRecord(const KrawczykOperator* kr, Box box) : kr_(kr), hull_(std::move(box)) {}

  Box box() const {
    if (kr_ != nullptr) return hull_;
    Box b;
    for (std::size_t v = 0; v < hull_.size(); ++v) {
      b.push_back(sep_->axis[v] ? Interval(coords_[v].lo, coords_[v].hi) : hull_[v]);
    }
    return b;
  }

  bool refine() {
    if (kr_ != nullptr) {
      KrawczykResult r = kr_->apply(hull_);
      if (r.image.empty()) return false;
      Box next;
      for (std::size_t v = 0; v < hull_.size(); ++v) {
        if (!r.image[v].intersects(hull_[v])) return false;
        next.push_back(intersect(hull_[v], r.image[v]));
      }
      if (next == hull_) return false;
      hull_ = std::move(next);
      return true;
    }
    bool any = false;
    for (std::size_t v = 0; v < hull_.size(); ++v) {
      if (sep_->axis[v] && refine_root(*sep_->axis[v], coords_[v])) any = true;
    }
    return any;
  }

 private:
  const Separable* sep_ = nullptr;
  const KrawczykOperator* kr_ = nullptr;
  Box hull_;
  std::vector<RootInterval> coords_;
};

constexpr int kSignRefinements = 96;

std::vector<int> record_signs(ZeroRecord& rec, const Polynomial& p) {
  for (int step = 0;; ++step) {
    const Box b = rec.box();
    bool point = true;
    for (const auto& iv : b) point = point && iv.width() == 0;
    std::vector<int> s;
    if (point) {
      std::vector<Rational> x;
      for (const auto& iv : b) x.push_back(iv.lo());
      s = {sgn(eval(p, x))};
    } else {
      s = compatible_signs(eval_interval_centered(p, b));
    }
    if (s.size() == 1 || step >= kSignRefinements || !rec.refine()) return s;
  }
}

void for_each_key(const std::vector<std::vector<int>>& options, const std::function<void(const SignConditionKey&)>& fn) {
  SignConditionKey key(options.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == options.size()) {
      fn(key);
      return;
    }
    for (int s : options[i]) {
      key[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
}

struct Bucket {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = true;
};

}  // namespace

CountResult count_components(const std::vector<Polynomial>& equations, const Box& box, const CountOptions& opts) {
  return subdivide(equations, box, opts).result;
}

CensusResult sign_census(const std::vector<Polynomial>& family, const std::vector<Polynomial>& equations,
                         const Box& box, const CountOptions& opts) {
  CensusResult out;
  for (const auto& p : family)
    if (p.nvars() != box.size()) throw std::invalid_argument("sign_census: family/box variable count mismatch");
  Run run = subdivide(equations, box, opts);
  out.components = run.result;

  if (family.empty()) {
    CountResult r = run.result;
    r.complex = {};
    out.total_lower = r.lower;
    out.total_upper = r.upper;
    out.exact = r.exact;
    out.per_sign.emplace(SignConditionKey{}, std::move(r));
    return out;
  }

  std::map<SignConditionKey, Bucket> buckets;
  auto tally = [&](const std::vector<std::vector<int>>& options) {
    bool decided = true;
    for (const auto& o : options) decided = decided && o.size() == 1;
    for_each_key(options, [&](const SignConditionKey& key) {
      Bucket& b = buckets[key];
      ++b.upper;
      if (decided) {
        ++b.lower;
      } else {
        b.exact = false;
      }
    });
  };

  for (const auto& fr : run.frozen) {
    const auto& cert = fr.cert;
    if (!cert.separable) {
      ZeroRecord rec(&*run.kr, cert.box);
      std::vector<std::vector<int>> options;
      for (const auto& p : family) options.push_back(record_signs(rec, p));
      tally(options);
      continue;
    }
    const std::size_t n = fr.hull.size();
    std::vector<std::size_t> pick(n, 0);
    bool done = false;
    while (!done) {
      std::vector<RootInterval> coords(n);
      for (std::size_t v = 0; v < n; ++v)
        if (run.sep.axis[v]) coords[v] = cert.roots[v][pick[v]];
      ZeroRecord rec(&run.sep, fr.hull, std::move(coords));
      std::vector<std::vector<int>> options;
      for (const auto& p : family) options.push_back(record_signs(rec, p));
      tally(options);
      done = true;
      for (std::size_t v = n; v-- > 0;) {
        if (!run.sep.axis[v]) continue;
        if (++pick[v] < cert.roots[v].size()) {
          done = false;
          break;
        }
        pick[v] = 0;
      }
    }
  }

  // Unresolved cells: group per compatible key, then cluster within each key.
  std::map<SignConditionKey, std::vector<const Index*>> cells_by_key;
  for (const auto& c : run.result.complex.cells) {
    if (c.status != CellStatus::kCandidate) continue;
    std::vector<std::vector<int>> options;
    for (const auto& p : family) options.push_back(compatible_signs(eval_interval_centered(p, c.box)));
    for_each_key(options, [&](const SignConditionKey& key) { cells_by_key[key].push_back(&c.index); });
  }
  for (const auto& [key, cells] : cells_by_key) {
    Bucket& b = buckets[key];
    b.upper += cluster(cells, run.offsets).size();
    b.exact = false;
  }

  out.exact = true;
  for (const auto& [key, b] : buckets) {
    CountResult r;
    r.lower = b.lower;
    r.upper = b.upper;
    r.exact = b.exact && b.lower == b.upper;
    r.depth_used = run.result.depth_used;
    out.total_lower += r.lower;
    out.total_upper += r.upper;
    out.exact = out.exact && r.exact;
    out.per_sign.emplace(key, std::move(r));
  }
  out.exact = out.exact && run.result.exact;
  return out;
}

std::vector<PerturbedPolynomial> perturbation_family(const std::vector<Polynomial>& family, const Rational& eps,
                                                     const Rational& delta, const std::vector<Rational>& gammas) {
  if (gammas.size() != family.size()) throw std::invalid_argument("perturbation_family: one gamma per polynomial");
  if (eps <= 0 || delta <= 0) throw std::invalid_argument("perturbation_family: eps and delta must be positive");
  std::vector<PerturbedPolynomial> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (gammas[i] <= 0) throw std::invalid_argument("perturbation_family: gammas must be positive");
    const std::size_t n = family[i].nvars();
    for (PerturbKind kind : {PerturbKind::kEps, PerturbKind::kDelta}) {
      const Rational& e = kind == PerturbKind::kEps ? eps : delta;
      for (int s : {1, -1}) {
        out.push_back({family[i] + Polynomial::constant(n, Rational(s) * e * gammas[i]), i, s, kind});
      }
    }
  }
  return out;
}

std::vector<Polynomial> perturbation_subset(const std::vector<PerturbedPolynomial>& perturbed,
                                            const std::vector<PerturbChoice>& choices) {
  std::vector<Polynomial> out;
  for (const auto& ch : choices) {
    bool found = false;
    for (const auto& p : perturbed) {
      if (p.index == ch.index && p.sign == ch.sign && p.kind == ch.kind) {
        out.push_back(p.poly);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("perturbation_subset: no such member");
  }
  return out;
}

}  // namespace rbz
