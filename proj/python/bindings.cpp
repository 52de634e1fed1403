#include "fsscoex/config.hpp"
#include "fsscoex/engine.hpp"
#include "fsscoex/linkbudget.hpp"
#include "fsscoex/report.hpp"
#include "fsscoex/rfmath.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

namespace py = pybind11;
using namespace fsscoex;

// Levels cross the boundary as plain floats: dBm for absolute power, dB for
// ratios, mW for linear power.

PYBIND11_MODULE(_core, m)
{
    m.doc() = "FSS earth-station to 5G UE interference engine";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::enum_<EsClass>(m, "EsClass")
        .value("Class1", EsClass::Class1)
        .value("Class2", EsClass::Class2)
        .value("Class3", EsClass::Class3);
    py::enum_<Lobe>(m, "Lobe").value("Mainlobe", Lobe::Mainlobe).value("Sidelobe", Lobe::Sidelobe);

    py::class_<CarrierSpec>(m, "CarrierSpec")
        .def(py::init([](double frequency_hz, double bandwidth_hz) { return CarrierSpec{frequency_hz, bandwidth_hz}; }),
             py::arg("frequency_hz") = 28.0e9, py::arg("bandwidth_hz") = 1.0e9)
        .def_readwrite("frequency_hz", &CarrierSpec::frequency_hz)
        .def_readwrite("bandwidth_hz", &CarrierSpec::bandwidth_hz);

    py::class_<VictimUe>(m, "VictimUe")
        .def(py::init([](double rsrp_dbm, double noise_temperature_k, double noise_figure_db) {
                 return VictimUe{PowerDbm{rsrp_dbm}, noise_temperature_k, PowerRatioDb{noise_figure_db}};
             }),
             py::arg("rsrp_dbm") = -80.0, py::arg("noise_temperature_k") = 290.0, py::arg("noise_figure_db") = 0.0)
        .def_property(
            "rsrp_dbm", [](const VictimUe& v) { return v.rsrp.value(); },
            [](VictimUe& v, double x) { v.rsrp = PowerDbm{x}; })
        .def_readwrite("noise_temperature_k", &VictimUe::noise_temperature_k)
        .def_property(
            "noise_figure_db", [](const VictimUe& v) { return v.noise_figure.value(); },
            [](VictimUe& v, double x) { v.noise_figure = PowerRatioDb{x}; });

    py::class_<EsEmitter>(m, "EsEmitter")
        .def(py::init([](EsClass c, Lobe l, int count) { return EsEmitter{c, l, count}; }),
             py::arg("es_class") = EsClass::Class1, py::arg("lobe") = Lobe::Mainlobe, py::arg("count") = 1)
        .def_readwrite("es_class", &EsEmitter::es_class)
        .def_readwrite("lobe", &EsEmitter::lobe)
        .def_readwrite("count", &EsEmitter::count);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init([](VictimUe v, EsEmitter e, CarrierSpec c) {
                 Scenario s{v, e, c};
                 s.validate();
                 return s;
             }),
             py::arg("victim") = VictimUe{}, py::arg("emitter") = EsEmitter{}, py::arg("carrier") = CarrierSpec{})
        .def_readwrite("victim", &Scenario::victim)
        .def_readwrite("emitter", &Scenario::emitter)
        .def_readwrite("carrier", &Scenario::carrier)
        .def("noise_dbm", [](const Scenario& s) { return s.noise_dbm().value(); })
        .def("snr_ceiling_db", [](const Scenario& s) { return s.snr_ceiling().value(); });

    py::class_<SeparationResult>(m, "SeparationResult")
        .def_readonly("distance_m", &SeparationResult::distance_m)
        .def_property_readonly("threshold_db", [](const SeparationResult& r) { return r.threshold.value(); })
        .def_readonly("attainable", &SeparationResult::attainable)
        .def("__repr__", [](const SeparationResult& r) {
            return "SeparationResult(distance_m=" + std::to_string(r.distance_m) +
                   ", attainable=" + (r.attainable ? "True" : "False") + ")";
        });

    m.def("dbm_to_mw", [](double dbm) { return dbm_to_mw(PowerDbm{dbm}).value(); }, py::arg("dbm"));
    m.def("mw_to_dbm", [](double mw) { return mw_to_dbm(PowerMilliwatt{mw}).value(); }, py::arg("mw"));
    m.def("fspl_db", [](double d, double f) { return fspl_db(d, f).value(); }, py::arg("distance_m"),
          py::arg("frequency_hz"));
    m.def(
        "thermal_noise_dbm",
        [](const CarrierSpec& c, double t, double nf) { return thermal_noise_dbm(c, t, PowerRatioDb{nf}).value(); },
        py::arg("carrier") = CarrierSpec{}, py::arg("temperature_k") = 290.0, py::arg("noise_figure_db") = 0.0);
    m.def(
        "es_eirp_dbm", [](EsClass c, Lobe l, const CarrierSpec& cs) { return es_eirp_dbm(c, l, cs).value(); },
        py::arg("es_class"), py::arg("lobe"), py::arg("carrier") = CarrierSpec{});

    m.def("interference_dbm", [](const Scenario& s, double d) { return interference_dbm(s, d).value(); },
          py::arg("scenario"), py::arg("distance_m"));
    m.def("sinr_db", [](const Scenario& s, double d) { return sinr_db(s, d).value(); }, py::arg("scenario"),
          py::arg("distance_m"));
    m.def(
        "sweep",
        [](const Scenario& s, double d0, double d1, double step) {
            const SweepSeries series = sweep(s, d0, d1, step);
            std::vector<double> dist, sinr;
            dist.reserve(series.samples.size());
            sinr.reserve(series.samples.size());
            for (const auto& p : series.samples) {
                dist.push_back(p.distance_m);
                sinr.push_back(p.sinr.value());
            }
            return py::make_tuple(dist, sinr);
        },
        py::arg("scenario"), py::arg("d_start_m") = 1.0, py::arg("d_stop_m") = 5000.0, py::arg("step_m") = 1.0,
        "Returns (distances_m, sinr_db) lists.");
    m.def(
        "separation_distance", [](const Scenario& s, double thr) { return separation_distance(s, PowerRatioDb{thr}); },
        py::arg("scenario"), py::arg("threshold_db") = 0.0);
    m.def(
        "separation_distance_bisection",
        [](const Scenario& s, double thr) { return separation_distance_bisection(s, PowerRatioDb{thr}); },
        py::arg("scenario"), py::arg("threshold_db") = 0.0);

    m.def("eirp_table", &render_eirp_table);
    m.def(
        "separation_table",
        [](const std::string& config_text) { return render_separation_table(parse_config(config_text)); },
        py::arg("config_text") = "");
    m.def(
        "sweep_csv",
        [](const std::string& config_text) {
            const RunConfig cfg = parse_config(config_text);
            return render_sweep_csv(cfg, build_sweeps(cfg));
        },
        py::arg("config_text") = "");
}
