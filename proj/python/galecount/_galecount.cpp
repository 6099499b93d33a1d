#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "galecount/asymptotics.hpp"
#include "galecount/oracle.hpp"
#include "galecount/polytopes.hpp"
#include "galecount/report.hpp"

namespace py = pybind11;
using namespace galecount;

namespace {

py::object big(const Int& v) {
    // route through the decimal string so values beyond 64 bits survive
    return py::int_(py::str(v.get_str()));
}

py::list series_coeffs(const TruncatedSeries& s) {
    py::list out;
    for (int n = 0; n <= s.order(); ++n) out.append(big(to_integer(s[n])));
    return out;
}

}  // namespace

PYBIND11_MODULE(_galecount, m) {
    m.doc() = "exact counts of d-polytopes with d+3 vertices";

    m.def(
        "table",
        [](int max_d) {
            py::list out;
            for (const auto& r : coefficient_table(max_d)) {
                py::dict row;
                row["d"] = r.d;
                row["vertices"] = r.vertices;
                row["c"] = big(r.c);
                row["c_plus"] = big(r.c_plus);
                row["c_minus"] = big(r.c_minus);
                out.append(row);
            }
            return out;
        },
        py::arg("max_d"));

    m.def(
        "polytope_series", [](int order) { return series_coeffs(polytope_series(order)); },
        py::arg("order"));
    m.def(
        "oriented_polytope_series",
        [](int order) { return series_coeffs(oriented_polytope_series(order)); }, py::arg("order"));
    m.def(
        "achiral_series", [](int order) { return series_coeffs(achiral_series(order)); },
        py::arg("order"));

    m.def(
        "brute_force_counts",
        [](int n, int jobs) {
            const auto bf = oracle::brute_force_counts(n, jobs);
            return py::make_tuple(big(bf.c), big(bf.c_plus), big(bf.c_minus));
        },
        py::arg("n"), py::arg("jobs") = 1);

    m.def("constants", []() {
        const auto& k = asymptotic_constants();
        py::dict d;
        d["gamma"] = k.gamma;
        d["lambda"] = k.lambda;
        d["c_amplitude"] = k.c_amplitude;
        d["c_plus_amplitude"] = k.c_plus_amplitude;
        d["C"] = k.C;
        d["C_prime"] = k.C_prime;
        return d;
    });

    m.def(
        "verify",
        [](int max_size, int order, int jobs) {
            std::ostringstream os;
            const int failures = run_verify(max_size, order, jobs, os);
            return py::make_tuple(failures, os.str());
        },
        py::arg("max_size") = 6, py::arg("order") = 30, py::arg("jobs") = 1);
}
