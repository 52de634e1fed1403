#include "fsscoex/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fsscoex {

void Scenario::validate() const
{
    if (!std::isfinite(victim.rsrp.value()))
        throw std::domain_error("rsrp must be finite");
    if (!(victim.noise_temperature_k > 0.0) || !std::isfinite(victim.noise_temperature_k))
        throw std::domain_error("noise temperature must be finite and > 0");
    if (!std::isfinite(victim.noise_figure.value()))
        throw std::domain_error("noise figure must be finite");
    if (emitter.count < 1)
        throw std::invalid_argument("emitter count must be >= 1, got " + std::to_string(emitter.count));
    carrier.validate();
}

PowerDbm Scenario::noise_dbm() const
{
    return thermal_noise_dbm(carrier, victim.noise_temperature_k, victim.noise_figure);
}

PowerRatioDb Scenario::snr_ceiling() const { return victim.rsrp - noise_dbm(); }

PowerDbm Scenario::total_eirp_dbm() const
{
    if (emitter.count < 1)
        throw std::invalid_argument("emitter count must be >= 1");
    return es_eirp_dbm(emitter.es_class, emitter.lobe, carrier)
         + PowerRatioDb::from_linear(static_cast<double>(emitter.count));
}

PowerDbm interference_dbm(const Scenario& s, double distance_m)
{
    return apply_loss(s.total_eirp_dbm(), fspl_db(distance_m, s.carrier.frequency_hz));
}

PowerRatioDb sinr_db(const Scenario& s, double distance_m)
{
    const PowerMilliwatt interference = dbm_to_mw(interference_dbm(s, distance_m));
    const PowerMilliwatt noise = dbm_to_mw(s.noise_dbm());
    return s.victim.rsrp - mw_to_dbm(interference + noise);
}

SweepSeries sweep(const Scenario& s, double d_start_m, double d_stop_m, double step_m)
{
    if (!(d_start_m > 0.0) || !(d_stop_m > d_start_m) || !std::isfinite(d_stop_m))
        throw std::invalid_argument("sweep range must satisfy 0 < d_start < d_stop");
    if (!(step_m > 0.0) || !std::isfinite(step_m))
        throw std::invalid_argument("sweep step must be > 0");
    s.validate();

    // Grid points within this distance of d_stop are snapped onto it.
    const double snap = 1e-9 * step_m;

    SweepSeries out{s, {}};
    const auto n_hint = static_cast<std::size_t>((d_stop_m - d_start_m) / step_m) + 2;
    out.samples.reserve(n_hint);
    for (std::size_t i = 0;; ++i) {
        double d = d_start_m + static_cast<double>(i) * step_m;
        if (d >= d_stop_m - snap) {
            out.samples.push_back({d_stop_m, sinr_db(s, d_stop_m)});
            break;
        }
        out.samples.push_back({d, sinr_db(s, d)});
    }
    return out;
}

SeparationResult separation_distance(const Scenario& s, PowerRatioDb threshold)
{
    s.validate();
    SeparationResult r{0.0, threshold, false};
    if (s.snr_ceiling() <= threshold)
        return r;

    const double signal_mw = dbm_to_mw(s.victim.rsrp).value();
    const double noise_mw = dbm_to_mw(s.noise_dbm()).value();
    const double i_max_mw = signal_mw / threshold.linear() - noise_mw;
    if (!(i_max_mw > 0.0))
        return r;

    const PowerRatioDb required_loss = s.total_eirp_dbm() - mw_to_dbm(PowerMilliwatt{i_max_mw});
    r.distance_m = fspl_distance_m(required_loss, s.carrier.frequency_hz);
    r.attainable = true;
    return r;
}

SeparationResult separation_distance_bisection(const Scenario& s, PowerRatioDb threshold,
                                               const BisectionOptions& opts)
{
    s.validate();
    if (!(opts.lower_m > 0.0) || !(opts.upper_m > opts.lower_m) || !(opts.tolerance_m > 0.0))
        throw std::invalid_argument("invalid bisection bracket");

    SeparationResult r{0.0, threshold, false};
    double lo = opts.lower_m;
    double hi = opts.upper_m;
    if (sinr_db(s, hi) < threshold)
        return r;
    r.attainable = true;
    if (sinr_db(s, lo) >= threshold) {
        r.distance_m = lo;
        return r;
    }
    // Invariant: sinr(lo) < threshold <= sinr(hi).
    for (int it = 0; it < opts.max_iterations && hi - lo > opts.tolerance_m; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sinr_db(s, mid) < threshold)
            lo = mid;
        else
            hi = mid;
    }
    r.distance_m = 0.5 * (lo + hi);
    return r;
}

} // namespace fsscoex
