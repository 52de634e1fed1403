#include "fsscoex/linkbudget.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fsscoex {

namespace {

// Mainlobe EIRP density per class, dBm/GHz.
constexpr std::array<double, 3> mainlobe_density_dbm_per_ghz{42.2, 54.1, 78.0};

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::domain_error(std::string(what) + " must be finite and > 0, got " + std::to_string(v));
}

} // namespace

std::string_view to_string(EsClass c)
{
    switch (c) {
    case EsClass::Class1: return "Class 1";
    case EsClass::Class2: return "Class 2";
    case EsClass::Class3: return "Class 3";
    }
    return "?";
}

std::string_view to_string(Lobe l) { return l == Lobe::Mainlobe ? "mainlobe" : "sidelobe"; }

void CarrierSpec::validate() const
{
    require_positive(frequency_hz, "frequency");
    require_positive(bandwidth_hz, "bandwidth");
}

PowerRatioDb fspl_db(double distance_m, double frequency_hz)
{
    if (!(distance_m > 0.0) || !(frequency_hz > 0.0))
        throw std::domain_error("FSPL undefined at or below zero distance/frequency");
    const double arg = 4.0 * constants::pi * distance_m * frequency_hz / constants::speed_of_light_m_s;
    return PowerRatioDb{20.0 * std::log10(arg)};
}

double fspl_distance_m(PowerRatioDb loss, double frequency_hz)
{
    require_positive(frequency_hz, "frequency");
    const double unit_loss_distance = constants::speed_of_light_m_s / (4.0 * constants::pi * frequency_hz);
    return unit_loss_distance * std::pow(10.0, loss.value() / 20.0);
}

PowerDbm thermal_noise_dbm(const CarrierSpec& carrier, double temperature_k, PowerRatioDb noise_figure)
{
    require_positive(temperature_k, "noise temperature");
    require_positive(carrier.bandwidth_hz, "bandwidth");
    const double ktb_mw = constants::boltzmann_j_k * temperature_k * carrier.bandwidth_hz * 1e3;
    return mw_to_dbm(PowerMilliwatt{ktb_mw}) + noise_figure;
}

PowerDbm es_eirp_density_dbm_per_ghz(EsClass c, Lobe l)
{
    return es_eirp_dbm(c, l, CarrierSpec{});
}

PowerDbm es_eirp_dbm(EsClass c, Lobe l, const CarrierSpec& carrier)
{
    require_positive(carrier.bandwidth_hz, "bandwidth");
    const PowerDbm main = PowerDbm{mainlobe_density_dbm_per_ghz.at(static_cast<std::size_t>(c) - 1)}
                        + PowerRatioDb::from_linear(carrier.bandwidth_hz / 1.0e9);
    return l == Lobe::Mainlobe ? main : apply_loss(main, sidelobe_attenuation);
}

} // namespace fsscoex
