#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padic/cvp.hpp"
#include "padic/errors.hpp"
#include "padic/lattice_file.hpp"
#include "padic/minkowski.hpp"
#include "padic/orthogonal.hpp"

namespace py = pybind11;
using namespace padic;

namespace {

// Scalars cross the boundary as strings in the scalar grammar.
using StrVector = std::vector<std::string>;

Vector to_vector(const StrVector& entries, const FieldConfig& f) {
  Vector v;
  for (const auto& e : entries) v.push_back(parse_scalar(e, f));
  return v;
}

StrVector from_vector(const Vector& v) {
  StrVector out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::vector<StrVector> from_vectors(const std::vector<Vector>& vs) {
  std::vector<StrVector> out;
  for (const auto& v : vs) out.push_back(from_vector(v));
  return out;
}

Lattice make_lattice(const FieldConfig& f, const std::vector<StrVector>& columns) {
  if (columns.empty()) throw MathError("a lattice needs at least one basis vector");
  std::vector<Vector> cols;
  for (const auto& c : columns) cols.push_back(to_vector(c, f));
  return Lattice(Matrix::from_columns(cols));
}

py::object fraction(const Exponent& e) {
  return py::module_::import("fractions").attr("Fraction")(e.numerator(), e.denominator());
}

py::dict inequality_dict(const InequalityRecord& r) {
  py::dict d;
  d["name"] = r.name;
  d["norm"] = r.norm_label;
  d["left"] = r.left;
  d["right"] = r.right;
  d["constant"] = r.constant;
  d["passed"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact p-adic lattices over Q_p and F_p((T))";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

  py::enum_<FieldKind>(m, "FieldKind").value("Qp", FieldKind::Qp).value("FpT", FieldKind::FpT);

  py::class_<FieldConfig>(m, "Field")
      .def(py::init([](FieldKind kind, std::uint64_t p) {
             FieldConfig f{kind, p, 8};
             try {
               f.validate();
             } catch (const std::invalid_argument& e) {
               throw MathError(e.what());
             }
             return f;
           }),
           py::arg("kind"), py::arg("p"))
      .def_static("qp", [](std::uint64_t p) { return FieldConfig{FieldKind::Qp, p, 8}; })
      .def_static("fpt", [](std::uint64_t p) { return FieldConfig{FieldKind::FpT, p, 8}; })
      .def_readonly("kind", &FieldConfig::kind)
      .def_readonly("p", &FieldConfig::p)
      .def("__repr__", &FieldConfig::name);

  py::class_<NormValue>(m, "NormValue")
      .def_static("zero", &NormValue::zero)
      .def_static("from_order", [](std::int64_t num, std::int64_t den) { return NormValue::from_order(Exponent(num, den)); },
                  py::arg("num"), py::arg("den") = 1)
      .def_property_readonly("is_zero", &NormValue::is_zero)
      .def_property_readonly("order",
                             [](const NormValue& v) -> py::object { return v.is_zero() ? py::none() : fraction(v.order()); },
                             "q with value p^(-q); None for zero")
      .def("format", &NormValue::to_string, py::arg("p"))
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def(py::self * py::self)
      .def("__hash__", [](const NormValue& v) {
        return v.is_zero() ? py::hash(py::none()) : py::hash(py::make_tuple(v.order().numerator(), v.order().denominator()));
      })
      .def("__repr__", [](const NormValue& v) {
        return v.is_zero() ? std::string("NormValue(0)") : "NormValue(order=" + exponent_to_string(v.order()) + ")";
      });

  py::class_<Norm>(m, "Norm")
      .def_static("sup", &Norm::sup)
      .def_static("weighted", [](const std::vector<std::string>& weights, std::uint64_t p) {
        std::vector<NormValue> w;
        for (const auto& s : weights) w.push_back(NormValue::parse(s, p));
        return Norm::weighted_sup(std::move(w));
      }, py::arg("weights"), py::arg("p"), "weights written as 'p^e'")
      .def_static("extension", [](const FieldConfig& f, const StrVector& poly) { return Norm::extension(to_vector(poly, f)); },
                  py::arg("field"), py::arg("poly"), "monic polynomial, lowest degree first")
      .def_property_readonly("certified", &Norm::certified_unramified)
      .def("__call__", [](const Norm& n, const FieldConfig& f, const StrVector& v) { return n(to_vector(v, f)); },
           py::arg("field"), py::arg("vector"))
      .def("describe", &Norm::describe);

  py::class_<Lattice>(m, "Lattice")
      .def(py::init(&make_lattice), py::arg("field"), py::arg("columns"))
      .def_property_readonly("field", &Lattice::field)
      .def_property_readonly("rank", &Lattice::rank)
      .def_property_readonly("dimension", &Lattice::dimension)
      .def_property_readonly("basis", [](const Lattice& l) { return from_vectors(l.basis_vectors()); })
      .def("__contains__", [](const Lattice& l, const StrVector& v) { return member(l, to_vector(v, l.field())).has_value(); })
      .def("__repr__", [](const Lattice& l) {
        return "Lattice(" + l.field().name() + ", rank " + std::to_string(l.rank()) + ", dimension " +
               std::to_string(l.dimension()) + ")";
      });

  py::class_<LatticeFile>(m, "LatticeFile")
      .def_readonly("field", &LatticeFile::field)
      .def_readonly("lattice", &LatticeFile::lattice)
      .def_readonly("norm", &LatticeFile::norm)
      .def_property_readonly("target", [](const LatticeFile& f) -> py::object {
        return f.target ? py::cast(from_vector(*f.target)) : py::none();
      })
      .def_readonly("depth", &LatticeFile::depth)
      .def_readonly("seed", &LatticeFile::seed)
      .def("format", &format_lattice_file);

  m.def("parse_lattice_file", &parse_lattice_file, py::arg("text"));
  m.def("load_lattice_file", [](const std::string& path) { return load_lattice_file(path); }, py::arg("path"));
  m.def("cyclotomic_example", &cyclotomic_example);

  m.def("dual", &padic::dual, py::arg("lattice"));
  m.def("same_lattice", &same_lattice, py::arg("a"), py::arg("b"));
  m.def("determinant", &determinant, py::arg("lattice"));
  m.def("successive_maxima", &successive_maxima, py::arg("lattice"), py::arg("norm"));
  m.def("orthogonalize", [](const Lattice& l, const Norm& n) {
    const OrthogonalBasis o = orthogonalize(l, n);
    py::dict d;
    d["vectors"] = from_vectors(o.vectors);
    d["maxima"] = o.maxima;
    d["certified"] = o.certified;
    d["replacements"] = o.replacements;
    return d;
  }, py::arg("lattice"), py::arg("norm"));
  m.def("is_orthogonal", [](const FieldConfig& f, const std::vector<StrVector>& vs, const Norm& n) {
    std::vector<Vector> v;
    for (const auto& x : vs) v.push_back(to_vector(x, f));
    return is_orthogonal(v, n);
  }, py::arg("field"), py::arg("vectors"), py::arg("norm"));
  m.def("lvp", [](const Lattice& l, const Norm& n) {
    const LvpResult r = lvp(l, n);
    return py::make_tuple(from_vector(r.vector), r.norm);
  }, py::arg("lattice"), py::arg("norm"));

  auto cvp_dict = [](const CvpResult& r) {
    py::dict d;
    d["closest"] = from_vector(r.closest);
    d["coefficients"] = from_vector(r.coefficients);
    d["distance"] = r.distance;
    d["certified_depth"] = r.certified_depth;
    return d;
  };
  m.def("cvp", [cvp_dict](const Lattice& l, const Norm& n, const StrVector& t) {
    return cvp_dict(cvp(l, n, to_vector(t, l.field())));
  }, py::arg("lattice"), py::arg("norm"), py::arg("target"));
  m.def("cvp_bruteforce", [cvp_dict](const Lattice& l, const Norm& n, const StrVector& t, int depth) {
    return cvp_dict(cvp_bruteforce(l, n, to_vector(t, l.field()), depth));
  }, py::arg("lattice"), py::arg("norm"), py::arg("target"), py::arg("depth"));

  m.def("equiv_constants", [](const Norm& n, const FieldConfig& f, std::size_t dim) {
    const EquivConstants c = equiv_constants(n, f, dim);
    py::dict d;
    d["c1"] = c.c1;
    d["c2"] = c.c2;
    d["per_basis_distances"] = c.per_basis_distances;
    return d;
  }, py::arg("norm"), py::arg("field"), py::arg("dimension"));

  m.def("verify", [](const Lattice& l, const Norm& n) {
    const VerificationReport r = verify(l, n);
    py::dict d;
    d["passed"] = r.passed();
    d["maxima"] = r.maxima;
    d["dual_maxima"] = r.dual_maxima;
    d["det"] = r.det;
    d["dual_det"] = r.dual_det;
    py::list ineq;
    for (const auto& rec : r.inequalities) ineq.append(inequality_dict(rec));
    d["inequalities"] = ineq;
    py::dict inv;
    for (const auto& rec : r.invariants) inv[py::str(rec.name)] = rec.pass;
    d["invariants"] = inv;
    return d;
  }, py::arg("lattice"), py::arg("norm"));
}
