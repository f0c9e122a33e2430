#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ratrange/boundary.hpp"
#include "ratrange/oracle.hpp"
#include "ratrange/pseudo.hpp"
#include "ratrange/strip.hpp"

namespace py = pybind11;
using namespace ratrange;

namespace {

std::optional<complex> opt_point(const ComplexPoint& p) {
    if (p.at_infinity) return std::nullopt;  // None stands for the point at infinity
    return p.z;
}

py::dict strip_dict(const StripReport& rep) {
    py::dict d;
    d["exists"] = rep.exists;
    d["s_low"] = rep.s_low;
    d["s_high"] = rep.s_high;
    d["low_on_axis"] = rep.low_on_axis;
    d["high_on_axis"] = rep.high_on_axis;
    std::vector<std::optional<complex>> lo, hi;
    for (const auto& p : rep.low_points) lo.push_back(opt_point(p));
    for (const auto& p : rep.high_points) hi.push_back(opt_point(p));
    d["low_points"] = lo;
    d["high_points"] = hi;
    d["min_only"] = rep.min_only;
    d["min_imag"] = rep.min_imag;
    d["min_on_axis"] = rep.min_on_axis;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ratrange, m) {
    m.doc() = "numerical-range enclosures for t(w) = alpha - w^2 - w^2 beta / "
              "(c - i d w - w^2)";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<ProblemParams>(m, "ProblemParams")
        .def(py::init<double, double>(), py::arg("c"), py::arg("d"))
        .def_readonly("c", &ProblemParams::c)
        .def_readonly("d", &ProblemParams::d);

    py::class_<OmegaBox>(m, "OmegaBox")
        .def(py::init<double, double, double, double>(), py::arg("alpha_lo"),
             py::arg("alpha_hi"), py::arg("beta_lo"), py::arg("beta_hi"))
        .def_readonly("alpha_lo", &OmegaBox::alpha_lo)
        .def_readonly("alpha_hi", &OmegaBox::alpha_hi)
        .def_readonly("beta_lo", &OmegaBox::beta_lo)
        .def_readonly("beta_hi", &OmegaBox::beta_hi);

    m.def("poles", [](const ProblemParams& prm) {
        const Poles p = poles(prm);
        return py::make_tuple(p.theta, p.delta_plus.z, p.delta_minus.z);
    });
    m.def("eval_t", &eval_t, py::arg("alpha"), py::arg("beta"), py::arg("omega"),
          py::arg("params"));
    m.def("solve_p", [](double alpha, double beta, const ProblemParams& prm) {
        std::vector<std::optional<complex>> out;
        for (const auto& r : solve_p(alpha, beta, prm).roots) out.push_back(opt_point(r));
        return out;
    });
    m.def(
        "contains",
        [](complex omega, const OmegaBox& box, const ProblemParams& prm) {
            return contains(ComplexPoint(omega), box, prm).inside;
        },
        py::arg("omega"), py::arg("box"), py::arg("params"));
    m.def("beta_hat", &beta_hat, py::arg("omega"), py::arg("params"));
    m.def("alpha_hat", &alpha_hat, py::arg("omega"), py::arg("params"));
    m.def("axis_segments", [](const OmegaBox& box, const ProblemParams& prm) {
        const AxisStructure ax = axis_segments(box, prm);
        std::vector<std::pair<double, double>> segs;
        for (const auto& s : ax.segments) segs.emplace_back(s.mu_lo, s.mu_hi);
        return py::make_tuple(segs, ax.isolated);
    });
    m.def("epsilon0",
          [](complex omega, const OmegaBox& box, const ProblemParams& prm) {
              const Epsilon0Result r = epsilon0(omega, box, prm);
              return py::make_tuple(r.value, r.alpha, r.beta);
          },
          py::arg("omega"), py::arg("box"), py::arg("params"));
    m.def("resolvent_bound", &resolvent_bound, py::arg("omega"), py::arg("box"),
          py::arg("params"));
    m.def("strip_exists_beta", &strip_exists_beta, py::arg("beta"), py::arg("params"));
    m.def("strip_edges_beta", [](double beta, const ProblemParams& prm) {
        return strip_dict(strip_edges_beta(beta, prm));
    });
    m.def("strip_alpha", [](double alpha, const ProblemParams& prm) {
        return strip_dict(strip_alpha(alpha, prm));
    });
    m.def("min_imag_beta", [](double beta, const ProblemParams& prm) {
        const MinImag mi = min_imag_beta(beta, prm);
        return py::make_tuple(mi.ordinate, mi.on_axis);
    });
    m.def("pseudo_contour",
          [](const OmegaBox& box, double epsilon, double re_lo, double re_hi,
             double im_lo, double im_hi, int resolution, const ProblemParams& prm) {
              const Viewport vp{re_lo, re_hi, im_lo, im_hi};
              std::vector<std::vector<complex>> out;
              for (const auto& line : pseudo_contour(box, epsilon, vp, resolution, prm)) {
                  std::vector<complex> pts;
                  for (const auto& p : line) pts.push_back(p.z);
                  out.push_back(std::move(pts));
              }
              return out;
          },
          py::arg("box"), py::arg("epsilon"), py::arg("re_lo"), py::arg("re_hi"),
          py::arg("im_lo"), py::arg("im_hi"), py::arg("resolution"), py::arg("params"));
    m.def("sample_numerical_range",
          [](const OmegaBox& box, int n, int n_samples, std::uint64_t seed,
             const ProblemParams& prm) {
              const MatrixPair pair = make_matrix_pair(box, n);
              std::vector<std::optional<complex>> out;
              for (const auto& p : sample_numerical_range(pair, n_samples, seed, prm))
                  out.push_back(opt_point(p));
              return out;
          },
          py::arg("box"), py::arg("n"), py::arg("n_samples"), py::arg("seed"),
          py::arg("params"));
    m.def("sigma_min",
          [](const OmegaBox& box, int n, complex omega, const ProblemParams& prm) {
              return sigma_min_T(make_matrix_pair(box, n), omega, prm);
          },
          py::arg("box"), py::arg("n"), py::arg("omega"), py::arg("params"));
}
