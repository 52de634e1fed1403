#include "fsscoex/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>

namespace fsscoex {

namespace {

constexpr std::array<std::string_view, 15> keys{
    "class",     "lobe",      "count",  "counts", "rsrp",      "noise_figure", "temperature", "frequency",
    "bandwidth", "d_start",   "d_stop", "step",   "threshold", "format",       "out",
};

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, std::string_view v)
{
    double out = 0.0;
    const auto* first = v.data();
    const auto* last = v.data() + v.size();
    if (!v.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || !std::isfinite(out))
        throw ValidationError(key, "expected a finite real number, got '" + std::string(v) + "'");
    return out;
}

int parse_int(const std::string& key, std::string_view v)
{
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ValidationError(key, "expected an integer, got '" + std::string(v) + "'");
    return out;
}

double positive_real(const std::string& key, std::string_view v)
{
    const double d = parse_real(key, v);
    if (!(d > 0.0))
        throw ValidationError(key, "must be > 0, got '" + std::string(v) + "'");
    return d;
}

int positive_count(const std::string& key, std::string_view v)
{
    const int n = parse_int(key, v);
    if (n < 1)
        throw ValidationError(key, "must be >= 1, got '" + std::string(v) + "'");
    return n;
}

void apply(RunConfig& cfg, const std::string& key, std::string_view raw)
{
    const std::string_view v = trim(raw);
    if (v.empty())
        throw ValidationError(key, "empty value");

    if (key == "class") {
        const int c = parse_int(key, v);
        if (c < 1 || c > 3)
            throw ValidationError(key, "must be 1, 2 or 3");
        cfg.scenario.emitter.es_class = static_cast<EsClass>(c);
    } else if (key == "lobe") {
        if (v == "mainlobe")
            cfg.scenario.emitter.lobe = Lobe::Mainlobe;
        else if (v == "sidelobe")
            cfg.scenario.emitter.lobe = Lobe::Sidelobe;
        else
            throw ValidationError(key, "must be 'mainlobe' or 'sidelobe'");
    } else if (key == "count") {
        cfg.scenario.emitter.count = positive_count(key, v);
    } else if (key == "counts") {
        std::vector<int> counts;
        std::string_view rest = v;
        while (true) {
            const auto comma = rest.find(',');
            counts.push_back(positive_count(key, trim(rest.substr(0, comma))));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        if (std::set<int>(counts.begin(), counts.end()).size() != counts.size())
            throw ValidationError(key, "duplicate count");
        cfg.counts = std::move(counts);
    } else if (key == "rsrp") {
        cfg.scenario.victim.rsrp = PowerDbm{parse_real(key, v)};
    } else if (key == "noise_figure") {
        cfg.scenario.victim.noise_figure = PowerRatioDb{parse_real(key, v)};
    } else if (key == "temperature") {
        cfg.scenario.victim.noise_temperature_k = positive_real(key, v);
    } else if (key == "frequency") {
        cfg.scenario.carrier.frequency_hz = positive_real(key, v);
    } else if (key == "bandwidth") {
        cfg.scenario.carrier.bandwidth_hz = positive_real(key, v);
    } else if (key == "d_start") {
        cfg.d_start_m = positive_real(key, v);
    } else if (key == "d_stop") {
        cfg.d_stop_m = positive_real(key, v);
    } else if (key == "step") {
        cfg.step_m = positive_real(key, v);
    } else if (key == "threshold") {
        cfg.threshold = PowerRatioDb{parse_real(key, v)};
    } else if (key == "format") {
        if (v == "csv")
            cfg.format = OutputFormat::Csv;
        else if (v == "svg")
            cfg.format = OutputFormat::Svg;
        else if (v == "table")
            cfg.format = OutputFormat::Table;
        else
            throw ValidationError(key, "must be csv, svg or table");
    } else if (key == "out") {
        cfg.out = std::string(v);
    } else {
        throw ValidationError(key, "unknown key");
    }
}

} // namespace

std::string_view to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Svg: return "svg";
    case OutputFormat::Table: return "table";
    }
    return "?";
}

std::vector<int> RunConfig::effective_counts() const
{
    return counts.empty() ? std::vector<int>{scenario.emitter.count} : counts;
}

std::span<const std::string_view> config_keys() { return keys; }

RunConfig parse_config(std::string_view text, std::span<const ConfigOverride> flags)
{
    RunConfig cfg;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ValidationError("line " + std::to_string(line_no), "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        if (key.empty())
            throw ValidationError("line " + std::to_string(line_no), "missing key");
        if (!seen.insert(key).second)
            throw ValidationError(key, "duplicate key in config file");
        apply(cfg, key, line.substr(eq + 1));
    }

    for (const auto& [key, value] : flags)
        apply(cfg, key, value);

    if (!(cfg.d_stop_m > cfg.d_start_m))
        throw ValidationError("d_stop", "must be greater than d_start");
    return cfg;
}

} // namespace fsscoex
