#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acaps/berry_mondragon.hpp"
#include "acaps/conformal.hpp"
#include "acaps/errors.hpp"
#include "acaps/eta_index.hpp"
#include "acaps/report.hpp"

namespace py = pybind11;
using namespace acaps;

namespace {

std::string run_command(const std::string& command, const std::string& config_json, const std::string& format) {
    RunConfig cfg = parse_config(nlohmann::json::parse(config_json));
    Report rep;
    if (command == "count") rep = cmd_count(cfg);
    else if (command == "verify") rep = cmd_verify(cfg);
    else if (command == "sweep") rep = cmd_sweep(cfg);
    else if (command == "eta") rep = cmd_eta(cfg);
    else if (command == "index") rep = cmd_index(cfg);
    else if (command == "bm") rep = cmd_bm(cfg);
    else throw ConfigError("unknown command " + command);
    return format == "csv" ? to_csv(rep) : to_json(rep);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Zero modes of planar Dirac operators with spectral boundary conditions";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<DomainKind>(m, "DomainKind")
        .value("Plane", DomainKind::Plane)
        .value("Disc", DomainKind::Disc)
        .value("Sphere", DomainKind::Sphere);
    py::enum_<Profile>(m, "Profile").value("UniformDisc", Profile::UniformDisc).value("SmoothCompact", Profile::SmoothCompact);
    py::enum_<KernelChoice>(m, "KernelChoice").value("Default", KernelChoice::Default).value("Alternate", KernelChoice::Alternate);
    py::enum_<Chirality>(m, "Chirality")
        .value("Up", Chirality::Up)
        .value("Down", Chirality::Down)
        .value("None_", Chirality::None);

    py::class_<Hole>(m, "Hole")
        .def(py::init([](Complex c, double r) { return Hole{c, r}; }), py::arg("center"), py::arg("radius"))
        .def_readwrite("center", &Hole::center)
        .def_readwrite("radius", &Hole::radius);

    py::class_<DomainSpec>(m, "DomainSpec")
        .def_static("plane", &DomainSpec::plane, py::arg("holes") = std::vector<Hole>{})
        .def_static("disc", &DomainSpec::disc, py::arg("outer_radius"), py::arg("holes") = std::vector<Hole>{})
        .def_static("sphere", &DomainSpec::sphere, py::arg("holes"), py::arg("omitted_hole"))
        .def_readonly("kind", &DomainSpec::kind)
        .def_readonly("outer_radius", &DomainSpec::outer_radius)
        .def_readonly("holes", &DomainSpec::holes);

    py::class_<RadialBump>(m, "RadialBump")
        .def(py::init([](Complex c, double r, double flux, Profile p) { return RadialBump{c, r, flux, p}; }),
             py::arg("center"), py::arg("support_radius"), py::arg("flux"), py::arg("profile") = Profile::SmoothCompact)
        .def_readwrite("center", &RadialBump::center)
        .def_readwrite("support_radius", &RadialBump::support_radius)
        .def_readwrite("flux", &RadialBump::flux)
        .def_readwrite("profile", &RadialBump::profile);

    py::class_<FieldSpec>(m, "FieldSpec")
        .def(py::init([](std::vector<RadialBump> b, std::vector<double> h, double q, KernelChoice k) {
                 return FieldSpec{std::move(b), std::move(h), q, k};
             }),
             py::arg("bumps") = std::vector<RadialBump>{}, py::arg("hole_fluxes") = std::vector<double>{},
             py::arg("q") = 0.0, py::arg("kernel_choice") = KernelChoice::Default)
        .def_readwrite("bumps", &FieldSpec::bumps)
        .def_readwrite("hole_fluxes", &FieldSpec::hole_fluxes)
        .def_readwrite("q", &FieldSpec::q)
        .def_readwrite("kernel_choice", &FieldSpec::kernel_choice);

    m.def("validate_domain", [](const DomainSpec& d) { return validate_domain(d).violations; });
    m.def("validate_field", [](const DomainSpec& d, const FieldSpec& f) { return validate_field(d, f).violations; });
    m.def("normalize_flux", [](double phi, double q, KernelChoice k) {
        auto n = normalize_flux(phi, q, k);
        return py::make_tuple(n.value, n.gauge_integer);
    }, py::arg("phi"), py::arg("q") = 0.0, py::arg("kernel_choice") = KernelChoice::Default);
    m.def("total_flux", &total_flux);
    m.def("floor_strict", &floor_strict);

    m.def("count_zero_modes", [](const DomainSpec& d, const FieldSpec& f) {
        auto c = count_zero_modes(d, f);
        return py::make_tuple(c.count, c.chirality);
    });
    m.def("h", [](const DomainSpec& d, const FieldSpec& f, Complex z) { return PotentialField(d, f).h(z); });

    py::class_<BoundaryLeakage>(m, "BoundaryLeakage")
        .def_readonly("boundary", &BoundaryLeakage::boundary)
        .def_readonly("value", &BoundaryLeakage::value);
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("pde_residual", &VerificationReport::pde_residual)
        .def_readonly("pde_residual_half_step", &VerificationReport::pde_residual_half_step)
        .def_readonly("trace_leakage", &VerificationReport::trace_leakage)
        .def_readonly("exponent_ok", &VerificationReport::exponent_ok)
        .def_readonly("conformal", &VerificationReport::conformal)
        .def_readonly("pass_", &VerificationReport::pass);
    m.def("verify_basis", [](const DomainSpec& d, const FieldSpec& f, int resolution, double tol) {
        auto basis = build_basis(d, f);
        GridSpec g = resolution > 0 ? GridSpec::from_resolution(resolution) : GridSpec{};
        std::vector<VerificationReport> out;
        for (std::size_t k = 0; k < basis.size(); ++k)
            out.push_back(verify_mode(basis.mode(k), *basis.potential, g, {tol, tol}));
        return out;
    }, py::arg("domain"), py::arg("field"), py::arg("resolution") = 0, py::arg("tol") = 1e-6);

    m.def("eta_closed", &eta_closed);
    m.def("eta_series", [](double c, double s, long n) {
        auto e = eta_series(c, s, n);
        return py::make_tuple(e.value, e.tail_bound);
    }, py::arg("c"), py::arg("s"), py::arg("n_terms") = 10000);
    m.def("eta_continued", [](double c, long n) { return eta_continued(c, n).value; }, py::arg("c"),
          py::arg("n_terms") = 10000);
    m.def("index_formula", [](const DomainSpec& d, const FieldSpec& f) {
        auto ix = index_formula(d, f);
        return py::make_tuple(ix.index, ix.raw);
    });

    m.def("stereo_project", &stereo_project);
    m.def("stereo_unproject", &stereo_unproject);
    m.def("conformal_factor", &conformal_factor);
    m.def("mobius_for_point", [](double theta, double phi) {
        auto y = mobius_for_point(theta, phi);
        return py::make_tuple(y.a, y.b, y.c, y.d);
    });

    m.def("bm_zero_mode", [](double r1, double r_out, double phi, double s_in, double s_out) -> py::object {
        auto mode = bm_zero_mode({r1, r_out, phi, s_in, s_out});
        if (!mode) return py::none();
        return py::int_(mode->n);
    });
    m.def("bm_verify", [](double r1, double r_out, double phi, double s_in, double s_out) {
        BMConfig c{r1, r_out, phi, s_in, s_out};
        auto mode = bm_zero_mode(c);
        if (!mode) throw Error(ErrorKind::InvalidArgument, "no mode at this flux");
        auto r = bm_verify(c, *mode);
        return py::make_tuple(r.pass, r.pde_residual, std::max(r.boundary_residual_inner, r.boundary_residual_outer));
    });

    m.def("run", &run_command, py::arg("command"), py::arg("config_json"), py::arg("format") = "json",
          "Run a CLI command on a JSON configuration string and return the report text.");
}
