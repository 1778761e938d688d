/* Python face of the library: plain lists and dicts in, exact values out.
 * Coefficients cross the boundary as Python ints (arbitrary precision),
 * converted through decimal strings. */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "subres/detpoly.hpp"
#include "subres/habicht.hpp"
#include "subres/reduction.hpp"
#include "subres/rng.hpp"

namespace py = pybind11;
using namespace subres;

namespace {

py::object to_py_int(const Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

Int to_int(const py::handle& h) {
  return Int(py::str(h).cast<std::string>());
}

py::list poly_to_list(const Poly& p) {
  py::list out;
  for (const Int& c : p.coeffs()) out.append(to_py_int(c));
  return out;
}

Poly poly_from_list(const py::sequence& seq) {
  std::vector<Int> c;
  c.reserve(seq.size());
  for (const py::handle& h : seq) c.push_back(to_int(h));
  return Poly(std::move(c));
}

std::vector<Poly> polys_from_lists(const py::sequence& seq) {
  std::vector<Poly> out;
  out.reserve(seq.size());
  for (const py::handle& h : seq) out.push_back(poly_from_list(py::cast<py::sequence>(h)));
  return out;
}

CoeffMatrix matrix_from_lists(const py::sequence& rows) {
  const std::size_t r = rows.size();
  if (r == 0) return CoeffMatrix(0, 0);
  py::sequence first = py::cast<py::sequence>(rows[0]);
  CoeffMatrix m(r, first.size());
  for (std::size_t i = 0; i < r; ++i) {
    py::sequence row = py::cast<py::sequence>(rows[i]);
    if (row.size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = to_int(row[j]);
  }
  return m;
}

DeltaIndex index_from_list(const std::vector<int>& v) { return DeltaIndex(v); }

py::list index_to_list(const DeltaIndex& d) {
  py::list out;
  for (std::size_t i = 0; i < d.size(); ++i) out.append(d[i]);
  return out;
}

py::dict value_to_dict(const SubresultantValue& v) {
  py::dict out;
  out["R"] = poly_to_list(v.r_poly);
  out["r"] = to_py_int(v.principal);
  out["delta0"] = v.d0_block;
  return out;
}

py::dict params_to_dict(const HabichtParams& p) {
  py::dict out;
  out["w0"] = index_to_list(p.w0);
  out["k"] = p.k;
  out["i"] = p.i;
  out["v"] = index_to_list(p.v);
  out["u"] = index_to_list(p.u);
  out["epsilon"] = p.epsilon;
  return out;
}

py::dict report_to_dict(const VerificationReport& rep) {
  py::dict out = params_to_dict(rep.params);
  if (rep.applicable()) {
    out["status"] = rep.equal ? "verified" : "failed";
    out["lhs"] = poly_to_list(*rep.lhs);
    out["rhs"] = poly_to_list(*rep.rhs);
  } else {
    out["status"] = "degenerate";
    out["degree_drops"] = rep.degree_drops;
  }
  return out;
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "A") return Strategy::A;
  if (name == "B") return Strategy::B;
  throw std::invalid_argument("strategy must be \"A\" or \"B\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact determinant polynomials and indexed subresultants";

  m.def(
      "det",
      [](const py::sequence& rows, const std::string& method) {
        CoeffMatrix mat = matrix_from_lists(rows);
        return to_py_int(method == "cofactor" ? det_cofactor(mat) : det_bareiss(mat));
      },
      py::arg("matrix"), py::arg("method") = "bareiss",
      "Exact determinant (method \"bareiss\" or the \"cofactor\" oracle).");

  m.def(
      "dp", [](const py::sequence& polys) { return poly_to_list(dp_list(polys_from_lists(polys))); },
      py::arg("polys"),
      "Determinant polynomial of a family, ascending coefficients.");

  m.def(
      "pcdp", [](const py::sequence& polys) { return to_py_int(pcdp_list(polys_from_lists(polys))); },
      py::arg("polys"), "Principal coefficient of the determinant polynomial.");

  m.def(
      "dp_linear_combination",
      [](const py::sequence& polys) {
        py::list out;
        for (const Int& c : dp_linear_combination(polys_from_lists(polys)))
          out.append(to_py_int(c));
        return out;
      },
      py::arg("polys"), "Coefficients c_i with dp = sum_i c_i * P_i.");

  m.def(
      "index_set",
      [](std::size_t d0, std::size_t n) {
        py::list out;
        for (const DeltaIndex& d : enumerate_index_set(d0, n)) out.append(index_to_list(d));
        return out;
      },
      py::arg("d0"), py::arg("n"),
      "All indices of weight <= d0, weight then lex descending.");

  m.def(
      "subresultant",
      [](const py::sequence& polys, const std::vector<int>& delta) {
        return value_to_dict(subresultant(PolySystem(polys_from_lists(polys)),
                                          index_from_list(delta)));
      },
      py::arg("polys"), py::arg("delta"),
      "Indexed subresultant of the system: dict with R, r, delta0.");

  m.def(
      "two_poly_subresultant",
      [](const py::sequence& f0, const py::sequence& f1, std::size_t k) {
        return value_to_dict(subres_two(poly_from_list(f0), poly_from_list(f1), k));
      },
      py::arg("f0"), py::arg("f1"), py::arg("k"),
      "Two-polynomial k-subresultant (k = 0 needs distinct degrees).");

  m.def(
      "habicht_params",
      [](const std::vector<std::size_t>& d, const std::vector<int>& w0, std::size_t k,
         std::size_t i) { return params_to_dict(derive_params(d, index_from_list(w0), k, i)); },
      py::arg("d"), py::arg("w0"), py::arg("k"), py::arg("i"),
      "Derived (v, u, epsilon) for the scaled product identity.");

  m.def(
      "verify_identity",
      [](const py::sequence& polys, const std::vector<int>& w0, std::size_t k, std::size_t i) {
        PolySystem f = PolySystem::standard(polys_from_lists(polys));
        return report_to_dict(verify_identity(f, derive_params(f.degrees(),
                                                               index_from_list(w0), k, i)));
      },
      py::arg("polys"), py::arg("w0"), py::arg("k"), py::arg("i"),
      "Exact check of the scaled product identity on a standard system.");

  m.def(
      "reduce",
      [](const py::sequence& polys, const std::vector<int>& target, const std::string& strategy) {
        PolySystem f = PolySystem::standard(polys_from_lists(polys));
        ReductionPlan plan = plan_reduction(f.degrees(), index_from_list(target),
                                            strategy_from_name(strategy));
        auto reports = execute_plan(f, plan);
        py::list steps;
        for (const ReductionStep& s : plan.steps) {
          py::dict sd = report_to_dict(reports.at(s.produces));
          sd["produces"] = index_to_list(s.produces);
          py::list consumes;
          for (const DeltaIndex& c : s.consumes) consumes.append(index_to_list(c));
          sd["consumes"] = consumes;
          steps.append(sd);
        }
        py::list base;
        for (const DeltaIndex& b : plan.base) base.append(index_to_list(b));
        py::dict out;
        out["target"] = index_to_list(plan.target);
        out["strategy"] = strategy;
        out["steps"] = steps;
        out["base"] = base;
        out["schematic"] = render_plan(plan);
        return out;
      },
      py::arg("polys"), py::arg("target"), py::arg("strategy") = "A",
      "Plan a reduction to zero-component indices and verify every step.");

  m.def(
      "generate_system",
      [](const std::vector<std::size_t>& degrees, std::uint64_t seed, long bound) {
        PolySystem f = random_system(degrees, seed, bound);
        py::list out;
        for (const Poly& p : f.polys()) out.append(poly_to_list(p));
        return out;
      },
      py::arg("degrees"), py::arg("seed"), py::arg("bound") = 99,
      "Seeded random standard system; fixed generator, portable seeds.");

  m.def(
      "ideal_decompose",
      [](const py::sequence& polys, const std::vector<int>& delta) {
        IdealDecomposition dec = ideal_membership_decompose(PolySystem(polys_from_lists(polys)),
                                                            index_from_list(delta));
        py::list coeff;
        for (const auto& block : dec.coeff) {
          py::list b;
          for (const Int& c : block) b.append(to_py_int(c));
          coeff.append(b);
        }
        py::dict out;
        out["delta0"] = dec.d0_block;
        out["coeff"] = coeff;
        return out;
      },
      py::arg("polys"), py::arg("delta"),
      "Coefficients writing the subresultant inside the ideal of the system.");
}
