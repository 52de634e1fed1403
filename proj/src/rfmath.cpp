#include "fsscoex/rfmath.hpp"

#include <cmath>
#include <string>

namespace fsscoex {

double PowerRatioDb::linear() const { return std::pow(10.0, db_ / 10.0); }

PowerRatioDb PowerRatioDb::from_linear(double ratio)
{
    if (!(ratio > 0.0))
        throw std::domain_error("ratio has no logarithmic representation: " + std::to_string(ratio));
    return PowerRatioDb{10.0 * std::log10(ratio)};
}

PowerMilliwatt::PowerMilliwatt(double mw) : mw_(mw)
{
    if (!(mw >= 0.0))
        throw std::domain_error("linear power must be non-negative: " + std::to_string(mw));
}

PowerMilliwatt dbm_to_mw(PowerDbm p) { return PowerMilliwatt{std::pow(10.0, p.value() / 10.0)}; }

PowerDbm mw_to_dbm(PowerMilliwatt p)
{
    if (p.value() <= 0.0)
        throw std::domain_error("zero power has no logarithmic representation");
    return PowerDbm{10.0 * std::log10(p.value())};
}

PowerDbm power_sum(PowerDbm a, PowerDbm b) { return mw_to_dbm(dbm_to_mw(a) + dbm_to_mw(b)); }

} // namespace fsscoex
