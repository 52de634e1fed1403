#pragma once

// Free-space propagation, thermal noise and the earth-station EIRP classes.

#include "fsscoex/rfmath.hpp"

#include <array>
#include <string_view>

namespace fsscoex {

namespace constants {
inline constexpr double speed_of_light_m_s = 299'792'458.0;
inline constexpr double boltzmann_j_k = 1.380649e-23;
inline constexpr double pi = 3.14159265358979323846;
} // namespace constants

enum class EsClass { Class1 = 1, Class2 = 2, Class3 = 3 };
enum class Lobe { Mainlobe, Sidelobe };

inline constexpr std::array<EsClass, 3> all_es_classes{EsClass::Class1, EsClass::Class2, EsClass::Class3};
inline constexpr std::array<Lobe, 2> all_lobes{Lobe::Mainlobe, Lobe::Sidelobe};

/// Sidelobe level relative to the mainlobe.
inline constexpr PowerRatioDb sidelobe_attenuation{30.0};

std::string_view to_string(EsClass c);
std::string_view to_string(Lobe l);

struct CarrierSpec {
    double frequency_hz = 28.0e9;
    double bandwidth_hz = 1.0e9;

    /// Throws std::domain_error unless both fields are finite and > 0.
    void validate() const;
};

/// 20*log10(4*pi*d*f/c). Throws std::domain_error for d <= 0 or f <= 0.
PowerRatioDb fspl_db(double distance_m, double frequency_hz);

/// Inverse of fspl_db: the distance at which free-space loss equals `loss`.
double fspl_distance_m(PowerRatioDb loss, double frequency_hz);

/// kTB over the carrier bandwidth plus receiver noise figure.
PowerDbm thermal_noise_dbm(const CarrierSpec& carrier, double temperature_k, PowerRatioDb noise_figure);

/// Tabulated EIRP spectral density in dBm/GHz.
PowerDbm es_eirp_density_dbm_per_ghz(EsClass c, Lobe l);

/// In-band EIRP over the carrier bandwidth, treating the class density as flat.
PowerDbm es_eirp_dbm(EsClass c, Lobe l, const CarrierSpec& carrier);

} // namespace fsscoex
