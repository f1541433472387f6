#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "realbezout/bounds.hpp"
#include "realbezout/components.hpp"
#include "realbezout/deform.hpp"
#include "realbezout/families.hpp"
#include "realbezout/poly_io.hpp"

namespace py = pybind11;
using namespace rbz;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints, Fractions and
// "p/q" strings are accepted on the way in.
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  py::object frac = py::module_::import("fractions").attr("Fraction")(obj);
  const auto num = py::str(frac.attr("numerator")).cast<std::string>();
  const auto den = py::str(frac.attr("denominator")).cast<std::string>();
  return parse_rational(num + "/" + den);
}

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(BigInt(v.get_num())), to_py(BigInt(v.get_den())));
}

std::vector<Rational> to_point(const py::sequence& seq) {
  std::vector<Rational> out;
  for (const auto& x : seq) out.push_back(to_rational(x));
  return out;
}

Box to_box(const py::sequence& seq) {
  Box b;
  for (const auto& side : seq) {
    const auto pair = side.cast<py::sequence>();
    if (pair.size() != 2) throw py::value_error("box sides must be (lo, hi) pairs");
    b.emplace_back(to_rational(pair[0]), to_rational(pair[1]));
  }
  return b;
}

py::list box_to_py(const Box& b) {
  py::list out;
  for (const auto& iv : b) out.append(py::make_tuple(to_py(iv.lo()), to_py(iv.hi())));
  return out;
}

py::dict bound_to_py(const BoundReport& r) {
  py::dict d;
  d["structural_sum"] = to_py(r.structural_sum);
  d["asymptotic_value"] = to_py(r.asymptotic_value);
  d["witness_term"] = to_py(r.witness_term);
  d["hypothesis_violated"] = r.hypothesis_violated;
  d["degenerate"] = r.degenerate;
  py::list terms;
  for (const auto& t : r.per_tau_terms) terms.append(py::make_tuple(py::tuple(py::cast(t.chain)), to_py(t.f), to_py(t.term)));
  d["terms"] = terms;
  return d;
}

py::dict count_to_py(const CountResult& r) {
  py::dict d;
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  d["exact"] = r.exact;
  d["depth_used"] = r.depth_used;
  d["budget_hit"] = r.budget_hit;
  d["positive_dimensional"] = r.positive_dimensional;
  py::list clusters;
  for (const auto& c : r.clusters) {
    py::dict e;
    e["hull"] = box_to_py(c.hull);
    e["components"] = c.components;
    e["dimension"] = c.dimension;
    e["certified"] = c.certified;
    e["cells"] = c.cells;
    clusters.append(e);
  }
  d["clusters"] = clusters;
  return d;
}

CountOptions count_options(int max_depth, int min_depth, bool vertex_adjacency) {
  CountOptions o;
  o.max_depth = max_depth;
  o.min_depth = min_depth;
  o.vertex_adjacency = vertex_adjacency;
  return o;
}

py::dict family_to_py(const FamilyInstance& f) {
  py::dict d;
  d["system"] = f.system;
  d["profile"] = f.profile;
  d["exact_count"] = to_py(f.exact_count);
  py::list zeros;
  for (const auto& z : f.zero_points) {
    py::list pt;
    for (const auto& x : z) pt.append(to_py(x));
    zeros.append(py::tuple(pt));
  }
  d["zero_points"] = zeros;
  d["search_box"] = box_to_py(f.search_box);
  d["provenance"] = f.provenance;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact polynomial arithmetic, real Bezout-type bounds and component counting";

  py::register_exception<ScheduleError>(m, "ScheduleError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text) { return parse_polynomial(text); }), py::arg("text"),
           "Parse one polynomial in the line-per-term text format.")
      .def_static("variable", &Polynomial::variable, py::arg("nvars"), py::arg("index"))
      .def_static("constant", [](std::size_t n, const py::object& c) { return Polynomial::constant(n, to_rational(c)); },
                  py::arg("nvars"), py::arg("value"))
      .def_property_readonly("nvars", &Polynomial::nvars)
      .def("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("text", [](const Polynomial& p) { return format_polynomial(p); })
      .def("__call__", [](const Polynomial& p, const py::sequence& x) { return to_py(eval(p, to_point(x))); })
      .def("__pow__", [](const Polynomial& p, unsigned e) { return p.pow(e); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__mul__", [](const Polynomial& p, const py::object& c) { return p * to_rational(c); })
      .def("__rmul__", [](const Polynomial& p, const py::object& c) { return p * to_rational(c); })
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; });

  m.def("parse_system", [](const std::string& text) { return parse_system(text); }, py::arg("text"));
  m.def("format_system", &format_system, py::arg("system"));

  py::class_<Profile>(m, "Profile")
      .def(py::init([](int k, std::vector<std::int64_t> degs, std::vector<int> dims) {
             Profile p{k, std::move(degs), std::move(dims)};
             p.validate();
             return p;
           }),
           py::arg("k"), py::arg("degs"), py::arg("dims"))
      .def_readonly("k", &Profile::k)
      .def_readonly("degs", &Profile::degs)
      .def_readonly("dims", &Profile::dims)
      .def("ladder_ok", &Profile::ladder_ok)
      .def("__repr__", [](const Profile& p) {
        return "Profile(k=" + std::to_string(p.k) + ", degs=" + py::repr(py::cast(p.degs)).cast<std::string>() +
               ", dims=" + py::repr(py::cast(p.dims)).cast<std::string>() + ")";
      });

  // bounds
  m.def("enumerate_admissible",
        [](int j, int k, const std::vector<int>& dims, bool cap_last) {
          std::vector<std::vector<int>> out;
          for (const auto& t : enumerate_admissible(j, k, dims, cap_last)) out.push_back(t.entries);
          return out;
        },
        py::arg("j"), py::arg("k"), py::arg("dims"), py::arg("cap_last") = false);
  m.def("f_factor", [](int k, const std::vector<int>& chain) { return to_py(f_factor(k, chain)); }, py::arg("k"),
        py::arg("chain"));
  m.def("lemma58_card", [](int k, const std::vector<int>& chain) { return to_py(lemma58_card(k, chain)); },
        py::arg("k"), py::arg("chain"));
  m.def("theorem12_bound",
        [](const Profile& p, const py::object& c) { return bound_to_py(theorem12_bound(p, to_rational(c))); },
        py::arg("profile"), py::arg("c") = 1);
  m.def("theorem16_bound",
        [](const Profile& p, std::int64_t s, std::int64_t d, const py::object& c) {
          const auto r = theorem16_bound(p, s, d, to_rational(c));
          py::dict out;
          out["delta"] = bound_to_py(r.delta);
          out["envelope"] = to_py(r.envelope);
          out["structural_total"] = to_py(r.structural_total);
          out["asymptotic_total"] = to_py(r.asymptotic_total);
          out["degree_hypothesis_violated"] = r.degree_hypothesis_violated;
          return out;
        },
        py::arg("profile"), py::arg("s"), py::arg("d"), py::arg("c") = 1);
  m.def("theorem18_bound",
        [](const Profile& p, const std::vector<std::int64_t>& degs) {
          const auto r = theorem18_bound(p, degs);
          py::dict out;
          out["degree_product"] = to_py(r.degree_product);
          out["structural_total"] = to_py(r.structural_total);
          out["subsets"] = r.subsets;
          return out;
        },
        py::arg("profile"), py::arg("family_degs"));
  m.def("lemma56_ratio", [](const Profile& p, const std::vector<int>& chain) { return to_py(lemma56_ratio(p, chain)); },
        py::arg("profile"), py::arg("chain"));

  // families
  m.def("gen_example11", [](int d) { return family_to_py(gen_example11(d)); }, py::arg("d"));
  m.def("gen_example15",
        [](int k, const std::vector<int>& dims, const std::vector<std::int64_t>& degs) {
          return family_to_py(gen_example15(k, dims, degs));
        },
        py::arg("k"), py::arg("dims"), py::arg("degs"));

  // components
  m.def("count_components",
        [](const std::vector<Polynomial>& eqs, const py::sequence& box, int max_depth, int min_depth, bool vertex) {
          return count_to_py(count_components(eqs, to_box(box), count_options(max_depth, min_depth, vertex)));
        },
        py::arg("equations"), py::arg("box"), py::arg("max_depth") = 12, py::arg("min_depth") = 0,
        py::arg("vertex_adjacency") = false);
  m.def("sign_census",
        [](const std::vector<Polynomial>& family, const std::vector<Polynomial>& eqs, const py::sequence& box,
           int max_depth) {
          const auto r = sign_census(family, eqs, to_box(box), count_options(max_depth, 0, false));
          py::dict per;
          for (const auto& [key, c] : r.per_sign) per[py::tuple(py::cast(key))] = count_to_py(c);
          py::dict out;
          out["per_sign"] = per;
          out["total_lower"] = r.total_lower;
          out["total_upper"] = r.total_upper;
          out["exact"] = r.exact;
          return out;
        },
        py::arg("family"), py::arg("equations"), py::arg("box"), py::arg("max_depth") = 12);

  // deform
  m.def("def_poly",
        [](const Polynomial& q, const py::object& zeta, std::size_t qi, const Polynomial& h) {
          return def_poly(q, to_rational(zeta), qi, h);
        },
        py::arg("Q"), py::arg("zeta"), py::arg("q"), py::arg("H"));
  m.def("generic_positive", &generic_positive, py::arg("q"), py::arg("k"), py::arg("degree"), py::arg("seed"));
  m.def("build_FJ",
        [](const std::vector<Polynomial>& f, std::size_t p, std::size_t q, const std::vector<std::size_t>& j) {
          const auto r = build_FJ(f, p, q, j);
          return py::make_tuple(r.system, r.jac_j);
        },
        py::arg("F"), py::arg("p"), py::arg("q"), py::arg("J"));
  m.def("build_approx_tuples",
        [](const std::vector<Polynomial>& system, const Profile& p, int j, const std::vector<int>& tau,
           std::uint64_t seed, const py::object& base, bool square) {
          const InfSchedule sched = base.is_none() ? InfSchedule::geometric(p.ell())
                                                   : InfSchedule::geometric(p.ell(), to_rational(base));
          ApproxOptions opts;
          opts.square = square;
          py::list out;
          for (const auto& t : build_approx_tuples(system, p, j, tau, sched, seed, opts)) {
            const auto a = audit_tuple(t, p, square);
            py::list alpha;
            for (const auto& part : t.alpha) {
              if (part.marker) {
                alpha.append(-1);
              } else {
                alpha.append(py::tuple(py::cast(part.set)));
              }
            }
            py::dict d;
            d["alpha"] = alpha;
            d["p_tuple"] = t.p_tuple;
            d["q_tuple"] = t.q_tuple;
            d["degree_rounded"] = t.degree_rounded;
            d["audit_pass"] = a.pass();
            d["p_degrees"] = a.p_degrees;
            d["block_bounds"] = a.block_bounds;
            out.append(d);
          }
          return out;
        },
        py::arg("system"), py::arg("profile"), py::arg("j"), py::arg("tau"), py::arg("seed") = 0,
        py::arg("schedule_base") = py::none(), py::arg("square") = false);
  m.def("perturb_simple_zero_check",
        [](const std::vector<Polynomial>& f, const std::vector<Polynomial>& h, const py::object& zeta,
           const py::sequence& x, const py::object& radius) {
          const auto r = perturb_simple_zero_check(f, h, to_rational(zeta), to_point(x), to_rational(radius));
          const char* verdict = r.verdict == PerturbVerdict::kCertified  ? "certified"
                                : r.verdict == PerturbVerdict::kRejected ? "rejected"
                                                                          : "not-certified";
          return py::make_tuple(verdict, box_to_py(r.enclosure));
        },
        py::arg("F"), py::arg("H"), py::arg("zeta"), py::arg("x"), py::arg("radius"));
  m.def("default_zeta", []() { return to_py(InfSchedule::geometric(1).zeta(1)); },
        "zeta_1 of the default one-level schedule.");
}
