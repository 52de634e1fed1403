#pragma once

// Scenario evaluation: aggregate ES interference at a 5G UE, SINR, distance
// sweeps and minimum separation distance.

#include "fsscoex/linkbudget.hpp"
#include "fsscoex/rfmath.hpp"

#include <vector>

namespace fsscoex {

struct VictimUe {
    PowerDbm rsrp{-80.0};
    double noise_temperature_k = 290.0;
    PowerRatioDb noise_figure{0.0};
};

/// `count` co-located transmitters, all equidistant from the UE, each
/// contributing identical interference.
struct EsEmitter {
    EsClass es_class = EsClass::Class1;
    Lobe lobe = Lobe::Mainlobe;
    int count = 1;
};

struct Scenario {
    VictimUe victim;
    EsEmitter emitter;
    CarrierSpec carrier;

    /// Throws std::domain_error / std::invalid_argument on a broken invariant.
    void validate() const;

    /// Noise floor at the victim (kTB + NF).
    PowerDbm noise_dbm() const;
    /// SINR upper bound with no interference: rsrp - noise.
    PowerRatioDb snr_ceiling() const;
    /// EIRP over the carrier bandwidth summed over all `count` emitters.
    PowerDbm total_eirp_dbm() const;
};

struct SweepSample {
    double distance_m;
    PowerRatioDb sinr;
};

struct SweepSeries {
    Scenario scenario;
    std::vector<SweepSample> samples;
};

struct SeparationResult {
    double distance_m = 0.0;
    PowerRatioDb threshold;
    bool attainable = false;
};

/// Bisection settings for the numeric cross-check of separation_distance.
struct BisectionOptions {
    double lower_m = 1e-3;
    double upper_m = 1e7;
    int max_iterations = 200;
    double tolerance_m = 1e-3;
};

/// Aggregate received interference: EIRP - FSPL(d) + 10*log10(count).
PowerDbm interference_dbm(const Scenario& s, double distance_m);

/// rsrp - (I + N), with I and N summed in milliwatts.
PowerRatioDb sinr_db(const Scenario& s, double distance_m);

/// Samples at d_start, d_start + step, ... with d_stop appended when the grid
/// does not land on it. Throws std::invalid_argument on a bad range.
SweepSeries sweep(const Scenario& s, double d_start_m, double d_stop_m, double step_m);

/// Closed-form minimum separation distance: the largest tolerable aggregate
/// interference is I_max = S / threshold - N; the distance is where the
/// free-space loss brings total EIRP down to I_max. Not attainable when
/// I_max <= 0, i.e. the threshold is at or above the SNR ceiling.
SeparationResult separation_distance(const Scenario& s, PowerRatioDb threshold);

/// Same quantity found numerically by bisection over sinr_db. Reports
/// unattainable when SINR at the upper bracket is still below threshold.
SeparationResult separation_distance_bisection(const Scenario& s, PowerRatioDb threshold,
                                               const BisectionOptions& opts = {});

} // namespace fsscoex
