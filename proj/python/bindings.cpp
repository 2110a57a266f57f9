// Python bindings: quaternions and matrices cross the boundary as numpy
// float64 arrays with a trailing axis of length 4 (w, x, y, z).

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatsylv/errors.hpp"
#include "quatsylv/interp.hpp"
#include "quatsylv/oracle.hpp"
#include "quatsylv/regular.hpp"
#include "quatsylv/singular.hpp"

namespace py = pybind11;
using namespace quatsylv;

namespace {

QMatrix matrix_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 3 || arr.shape(2) != 4)
        throw py::value_error("expected an array of shape (n, m, 4)");
    const int n = static_cast<int>(arr.shape(0));
    const int m = static_cast<int>(arr.shape(1));
    QMatrix out(n, m);
    auto r = arr.unchecked<3>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            out(i, j) = Quaternion{r(i, j, 0), r(i, j, 1), r(i, j, 2), r(i, j, 3)};
    return out;
}

py::array_t<double> matrix_to_array(const QMatrix& m) {
    py::array_t<double> out({m.rows(), m.cols(), 4});
    auto w = out.mutable_unchecked<3>();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Quaternion& q = m(i, j);
            w(i, j, 0) = q.w;
            w(i, j, 1) = q.x;
            w(i, j, 2) = q.y;
            w(i, j, 3) = q.z;
        }
    return out;
}

std::vector<Quaternion> quat_list_from_array(
    const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(1) != 4)
        throw py::value_error("expected an array of shape (k, 4)");
    std::vector<Quaternion> out(arr.shape(0));
    auto r = arr.unchecked<2>();
    for (py::ssize_t i = 0; i < arr.shape(0); ++i)
        out[i] = Quaternion{r(i, 0), r(i, 1), r(i, 2), r(i, 3)};
    return out;
}

py::array_t<double> quat_list_to_array(std::span<const Quaternion> qs) {
    py::array_t<double> out({static_cast<py::ssize_t>(qs.size()), py::ssize_t{4}});
    auto w = out.mutable_unchecked<2>();
    for (size_t i = 0; i < qs.size(); ++i) {
        w(i, 0) = qs[i].w;
        w(i, 1) = qs[i].x;
        w(i, 2) = qs[i].y;
        w(i, 3) = qs[i].z;
    }
    return out;
}

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

} // namespace

PYBIND11_MODULE(_quatsylv, m) {
    m.doc() = "quaternion Sylvester equation solvers";

    py::register_exception<NoSolutionError>(m, "NoSolutionError");
    py::register_exception<SingularCaseError>(m, "SingularCaseError");
    py::register_exception<UnsupportedShapeError>(m, "UnsupportedShapeError");

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x") = 0.0,
             py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def_readwrite("w", &Quaternion::w)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def("__add__", [](const Quaternion& a, const Quaternion& b) { return a + b; })
        .def("__sub__", [](const Quaternion& a, const Quaternion& b) { return a - b; })
        .def("__mul__", [](const Quaternion& a, const Quaternion& b) { return a * b; })
        .def("__neg__", [](const Quaternion& a) { return -a; })
        .def("conj", [](const Quaternion& a) { return conj(a); })
        .def("inv", [](const Quaternion& a) { return inv(a); })
        .def("abs", [](const Quaternion& a) { return abs(a); })
        .def("re", [](const Quaternion& a) { return re(a); })
        .def("im", [](const Quaternion& a) { return im(a); })
        .def("__repr__", [](const Quaternion& a) {
            return "Quaternion(" + std::to_string(a.w) + ", " + std::to_string(a.x) + ", " +
                   std::to_string(a.y) + ", " + std::to_string(a.z) + ")";
        });

    m.def("similar",
          [](const Quaternion& a, const Quaternion& b, double tol) { return similar(a, b, tol); },
          py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTol);

    m.def("scalar_sylvester",
          [](const Quaternion& a, const Quaternion& b, const Quaternion& c, double tol) {
              const SolutionSet s = scalar_sylvester(a, b, c, tol);
              py::dict out;
              switch (s.kind) {
                  case SolutionSet::Kind::unique: out["kind"] = "unique"; break;
                  case SolutionSet::Kind::none: out["kind"] = "none"; break;
                  case SolutionSet::Kind::affine_plane: out["kind"] = "affine"; break;
                  case SolutionSet::Kind::all: out["kind"] = "all"; break;
              }
              if (s.kind == SolutionSet::Kind::unique || s.kind == SolutionSet::Kind::affine_plane)
                  out["x"] = s.point;
              if (s.plane) out["plane"] = py::make_tuple(s.plane->b1, s.plane->b2);
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tol") = kDefaultTol);

    m.def("uniqueness_check",
          [](const Array& a, const Array& b, double tol) {
              return uniqueness_check(matrix_from_array(a), matrix_from_array(b), tol);
          },
          py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTol);

    m.def("solve",
          [](const Array& a, const Array& b, const Array& c, double tol) {
              const RegularSolveReport rep =
                  solve(matrix_from_array(a), matrix_from_array(b), matrix_from_array(c), tol);
              py::dict out;
              out["x"] = matrix_to_array(rep.x);
              out["method"] = std::string(method_name(rep.method));
              out["residual"] = rep.residual;
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tol") = kDefaultTol);

    m.def("jordan_block",
          [](int n, const Quaternion& alpha) { return matrix_to_array(jordan_block(n, alpha)); });

    m.def("chain_matrix",
          [](const Array& elems, bool lower) {
              return matrix_to_array(chain_matrix(quat_list_from_array(elems),
                                                  lower ? Orientation::lower : Orientation::upper));
          },
          py::arg("elems"), py::arg("lower") = true);

    m.def("analyze",
          [](const Array& alpha, const Array& beta, const Array& c, double tol) {
              const SingularInstance inst =
                  SingularInstance::make(SphericalChain{quat_list_from_array(alpha), tol},
                                         SphericalChain{quat_list_from_array(beta), tol},
                                         matrix_from_array(c), tol);
              const SingularAnalysis an = analyze(inst);
              py::dict out;
              out["solvable"] = an.solvable;
              out["max_obstruction"] = an.max_obstruction;
              out["obstructions"] = quat_list_to_array(an.s);
              out["d"] = matrix_to_array(an.d);
              return out;
          },
          py::arg("alpha"), py::arg("beta"), py::arg("c"), py::arg("tol") = kDefaultTol);

    m.def("particular_solution",
          [](const Array& alpha, const Array& beta, const Array& c, double tol) {
              const SingularInstance inst =
                  SingularInstance::make(SphericalChain{quat_list_from_array(alpha), tol},
                                         SphericalChain{quat_list_from_array(beta), tol},
                                         matrix_from_array(c), tol);
              return matrix_to_array(particular_solution(inst));
          },
          py::arg("alpha"), py::arg("beta"), py::arg("c"), py::arg("tol") = kDefaultTol);

    m.def("null_basis",
          [](const Array& alpha, const Array& beta, double tol) {
              const std::vector<QMatrix> basis =
                  null_basis(SphericalChain{quat_list_from_array(alpha), tol},
                             SphericalChain{quat_list_from_array(beta), tol}, tol);
              py::list out;
              for (const QMatrix& y : basis) out.append(matrix_to_array(y));
              return out;
          },
          py::arg("alpha"), py::arg("beta"), py::arg("tol") = kDefaultTol);

    m.def("oracle_solve",
          [](const Array& a, const Array& b, const Array& c, double tol) {
              const OracleResult o =
                  oracle_solve(matrix_from_array(a), matrix_from_array(b), matrix_from_array(c), tol);
              py::dict out;
              switch (o.verdict) {
                  case OracleVerdict::unique: out["verdict"] = "unique"; break;
                  case OracleVerdict::affine: out["verdict"] = "affine"; break;
                  case OracleVerdict::none: out["verdict"] = "none"; break;
              }
              out["rank"] = o.rank;
              if (o.verdict != OracleVerdict::none) out["x0"] = matrix_to_array(o.x0);
              py::list ns;
              for (const QMatrix& y : o.nullspace) ns.append(matrix_to_array(y));
              out["nullspace"] = ns;
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tol") = kDefaultTol);

    m.def("interpolate",
          [](const Array& alpha, const Array& beta, const Array& g, const Array& gt, double tol) {
              const InterpProblem prob = InterpProblem::make(
                  SphericalChain{quat_list_from_array(alpha), tol},
                  SphericalChain{quat_list_from_array(beta), tol},
                  QPoly{quat_list_from_array(g)}, QPoly{quat_list_from_array(gt)}, tol);
              const InterpResult res = interpolate(prob);
              py::dict out;
              out["f"] = quat_list_to_array(res.f0.coeffs());
              out["residual_p"] = res.membership_residual_p;
              out["residual_q"] = res.membership_residual_q;
              out["forms_gap"] = res.forms_gap;
              return out;
          },
          py::arg("alpha"), py::arg("beta"), py::arg("g"), py::arg("gt"),
          py::arg("tol") = kDefaultTol);
}
