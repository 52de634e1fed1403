#pragma once

// Unit-safe logarithmic power algebra.
//
// Three distinct value types: absolute power in dBm, relative gain/loss in dB
// and linear power in milliwatts. The only cross-type operations are the ones
// that are physically meaningful: dBm +/- dB -> dBm, dB +/- dB -> dB,
// dBm - dBm -> dB, mW + mW -> mW. Two dBm values cannot be added.

#include <compare>
#include <stdexcept>

namespace fsscoex {

/// Relative level in dB (gain, loss, ratio).
class PowerRatioDb {
public:
    constexpr PowerRatioDb() = default;
    constexpr explicit PowerRatioDb(double db) : db_(db) {}

    constexpr double value() const { return db_; }

    constexpr PowerRatioDb operator-() const { return PowerRatioDb{-db_}; }
    constexpr PowerRatioDb& operator+=(PowerRatioDb o) { db_ += o.db_; return *this; }
    constexpr PowerRatioDb& operator-=(PowerRatioDb o) { db_ -= o.db_; return *this; }

    friend constexpr PowerRatioDb operator+(PowerRatioDb a, PowerRatioDb b) { return PowerRatioDb{a.db_ + b.db_}; }
    friend constexpr PowerRatioDb operator-(PowerRatioDb a, PowerRatioDb b) { return PowerRatioDb{a.db_ - b.db_}; }
    friend constexpr auto operator<=>(PowerRatioDb, PowerRatioDb) = default;

    /// 10^(dB/10)
    double linear() const;
    static PowerRatioDb from_linear(double ratio);

private:
    double db_ = 0.0;
};

/// Absolute power in dBm.
class PowerDbm {
public:
    constexpr PowerDbm() = default;
    constexpr explicit PowerDbm(double dbm) : dbm_(dbm) {}

    constexpr double value() const { return dbm_; }

    friend constexpr PowerDbm operator+(PowerDbm p, PowerRatioDb g) { return PowerDbm{p.dbm_ + g.value()}; }
    friend constexpr PowerDbm operator+(PowerRatioDb g, PowerDbm p) { return p + g; }
    friend constexpr PowerDbm operator-(PowerDbm p, PowerRatioDb g) { return PowerDbm{p.dbm_ - g.value()}; }
    // Ratio of two absolute powers, e.g. S - I.
    friend constexpr PowerRatioDb operator-(PowerDbm a, PowerDbm b) { return PowerRatioDb{a.dbm_ - b.dbm_}; }
    friend constexpr auto operator<=>(PowerDbm, PowerDbm) = default;

private:
    double dbm_ = 0.0;
};

/// Linear power in milliwatts; never negative.
class PowerMilliwatt {
public:
    constexpr PowerMilliwatt() = default;
    explicit PowerMilliwatt(double mw);

    constexpr double value() const { return mw_; }

    friend PowerMilliwatt operator+(PowerMilliwatt a, PowerMilliwatt b) { return PowerMilliwatt{a.mw_ + b.mw_}; }
    friend PowerMilliwatt operator*(double k, PowerMilliwatt p) { return PowerMilliwatt{k * p.mw_}; }
    friend PowerMilliwatt operator*(PowerMilliwatt p, double k) { return k * p; }
    friend constexpr auto operator<=>(PowerMilliwatt, PowerMilliwatt) = default;

private:
    double mw_ = 0.0;
};

/// 10^(p/10) mW.
PowerMilliwatt dbm_to_mw(PowerDbm p);

/// 10*log10(p). Throws std::domain_error for p == 0: there is no
/// logarithmic representation of zero power.
PowerDbm mw_to_dbm(PowerMilliwatt p);

/// Link-budget subtraction; a positive loss lowers the level.
constexpr PowerDbm apply_loss(PowerDbm p, PowerRatioDb loss) { return p - loss; }

/// Power sum of two absolute levels, carried out in the linear domain.
PowerDbm power_sum(PowerDbm a, PowerDbm b);

} // namespace fsscoex
