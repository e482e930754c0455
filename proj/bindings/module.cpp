// Python bindings for the main operations: presentation parsing, the chi2
// pipelines, Fox matrices, polytope arithmetic, and the closed-form cross
// checks.  Exact rationals cross the boundary as "p/q" strings.
#include "l2euler/acceptance.hpp"
#include "l2euler/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace l2euler;

namespace {

py::dict result_to_dict(const EulerResult& r)
{
    py::dict d;
    d["chi2"] = r.chi2;
    d["thurston_lower_bound"] = r.thurston_lower_bound;
    py::dict diag;
    diag["deleted_column"] = r.diag.deleted_column;
    diag["deleted_row"] = r.diag.deleted_row;
    diag["diagonal_degrees"] = r.diag.diagonal_degrees;
    diag["scaling_k"] = r.diag.scaling_k;
    diag["image_index"] = r.diag.image_index;
    diag["trivial_phi_branch"] = r.diag.trivial_phi_branch;
    d["diagnostics"] = diag;
    return d;
}

EulerResult run_parsed(const PresentationFile& f, bool all_columns)
{
    PipelineOptions opts;
    opts.all_columns = all_columns;
    return f.closed() ? chi2_closed(f.presentation, *f.dual_generators, f.quotient, f.phi, opts)
                      : chi2_boundary(f.presentation, f.quotient, f.phi, opts);
}

std::vector<std::vector<long long>> to_rows(const IntegralPolytope& p)
{
    std::vector<std::vector<long long>> rows;
    for (const auto& v : p.vertices()) rows.emplace_back(v.begin(), v.end());
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact twisted L2-Euler characteristics and Thurston norm bounds";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<NonAcyclicError>(m, "NonAcyclicError", PyExc_ArithmeticError);
    py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);

    m.def(
        "chi2_json",
        [](const std::string& text, bool all_columns) {
            return result_to_dict(run_parsed(parse_presentation_file(text), all_columns));
        },
        py::arg("json_text"), py::arg("all_columns") = false,
        "chi2 of a presentation given as a JSON document");

    m.def(
        "chi2_file",
        [](const std::string& path, bool all_columns) {
            return result_to_dict(run_parsed(load_presentation_file(path), all_columns));
        },
        py::arg("path"), py::arg("all_columns") = false,
        "chi2 of a presentation file");

    m.def(
        "delta_json",
        [](const std::string& text) {
            return -run_parsed(parse_presentation_file(text), false).chi2;
        },
        py::arg("json_text"), "higher-order Alexander degree (= -chi2)");

    m.def(
        "fox_matrix_json",
        [](const std::string& text) {
            PresentationFile f = parse_presentation_file(text);
            if (f.quotient.kind != QuotientKind::Abelian)
                throw InputError("fox_matrix_json supports abelian quotients only");
            auto fox = fox_matrix(f.presentation, f.quotient);
            std::vector<std::string> names;
            for (int i = 0; i < f.quotient.rank; ++i) names.push_back("t" + std::to_string(i + 1));
            std::vector<std::vector<std::string>> out;
            for (const auto& row : fox) {
                std::vector<std::string> r;
                for (const auto& x : row) r.push_back(gre_to_laurent(x).str(names));
                out.push_back(std::move(r));
            }
            return out;
        },
        py::arg("json_text"), "Fox matrix entries over Z[Z^n], printed");

    m.def(
        "seifert_chi2",
        [](long long genus, long long boundary, const std::vector<long long>& cones,
           long long index) { return seifert_chi2(genus, boundary, cones, index).str(); },
        py::arg("genus"), py::arg("boundary"), py::arg("cone_orders"), py::arg("fiber_index"),
        "chi2 of a Seifert piece from base orbifold data, as an exact rational string");

    m.def("thurston_from_genus", &thurston_from_genus, py::arg("genus"));
    m.def("fibered_norm", &fibered_norm, py::arg("chi_fiber"));
    m.def("cover_scale", &cover_scale, py::arg("norm"), py::arg("sheets"));
    m.def("infinite_cyclic_chi2", &infinite_cyclic_chi2, py::arg("dim_h1"),
          py::arg("has_boundary"), py::arg("k"));

    m.def(
        "convex_hull_vertices",
        [](int dim, const std::vector<std::vector<long long>>& pts) {
            std::vector<LatticePoint> lp;
            for (const auto& p : pts) lp.emplace_back(p.begin(), p.end());
            return to_rows(canonicalize(dim, std::move(lp)));
        },
        py::arg("dim"), py::arg("points"), "canonical extreme points of the convex hull");

    m.def(
        "minkowski_sum_vertices",
        [](int dim, const std::vector<std::vector<long long>>& a,
           const std::vector<std::vector<long long>>& b) {
            std::vector<LatticePoint> pa, pb;
            for (const auto& p : a) pa.emplace_back(p.begin(), p.end());
            for (const auto& p : b) pb.emplace_back(p.begin(), p.end());
            return to_rows(
                minkowski_sum(canonicalize(dim, std::move(pa)), canonicalize(dim, std::move(pb))));
        },
        py::arg("dim"), py::arg("a"), py::arg("b"));

    m.def(
        "polytope_seminorm",
        [](int dim, const std::vector<std::vector<long long>>& pts,
           const std::vector<long long>& phi) {
            std::vector<LatticePoint> lp;
            for (const auto& p : pts) lp.emplace_back(p.begin(), p.end());
            IVec cov(phi.begin(), phi.end());
            return seminorm_eval(canonicalize(dim, std::move(lp)), cov).str();
        },
        py::arg("dim"), py::arg("points"), py::arg("phi"),
        "polytope seminorm (max - min)/2 of phi over the hull, as a rational string");

    m.def(
        "selftest",
        []() {
            py::list out;
            for (const auto& r : run_acceptance()) {
                py::dict d;
                d["id"] = r.id;
                d["description"] = r.description;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                d["ms"] = r.ms;
                out.append(d);
            }
            return out;
        },
        "run the acceptance criteria; returns one dict per criterion");

    m.attr("__version__") = library_version();
}
