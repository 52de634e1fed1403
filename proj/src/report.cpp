#include "fsscoex/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace fsscoex {

namespace {

std::string join_counts(const std::vector<int>& counts)
{
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i)
        s += (i ? "," : "") + std::to_string(counts[i]);
    return s;
}

// Shared "# key=value" block; every output discloses the noise figure.
std::string assumption_header(const RunConfig& cfg, bool with_emitter)
{
    const Scenario& s = cfg.scenario;
    std::string h;
    if (with_emitter)
        h += fmt::format("# es_class={} lobe={} counts={}\n", static_cast<int>(s.emitter.es_class),
                         to_string(s.emitter.lobe), join_counts(cfg.effective_counts()));
    else
        h += fmt::format("# counts={}\n", join_counts(cfg.effective_counts()));
    h += fmt::format("# rsrp_dbm={:.6f} noise_figure_db={:.6f} temperature_k={:.6f}\n", s.victim.rsrp.value(),
                     s.victim.noise_figure.value(), s.victim.noise_temperature_k);
    h += fmt::format("# frequency_hz={:.6f} bandwidth_hz={:.6f} threshold_db={:.6f}\n", s.carrier.frequency_hz,
                     s.carrier.bandwidth_hz, cfg.threshold.value());
    h += fmt::format("# noise_dbm={:.6f} snr_ceiling_db={:.6f}\n", s.noise_dbm().value(), s.snr_ceiling().value());
    return h;
}

Scenario with_count(Scenario s, int count)
{
    s.emitter.count = count;
    return s;
}

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) { return cfg.format.value_or(fallback); }

int emit(const RunConfig& cfg, const std::string& payload, std::ostream& out, std::ostream& err)
{
    if (cfg.out.empty() || cfg.out == "-") {
        out << payload;
        out.flush();
        if (!out) {
            err << "error: failed writing to standard output\n";
            return ExitIo;
        }
        return ExitOk;
    }
    std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
    if (f)
        f << payload;
    if (f)
        f.close();
    if (!f) {
        err << "error: cannot write output file '" << cfg.out << "'\n";
        return ExitIo;
    }
    return ExitOk;
}

template <class Render>
int guarded(std::ostream& err, Render&& render, std::string& payload)
{
    try {
        payload = render();
        return ExitOk;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
    }
    return ExitValidation;
}

// 1/2/5 x 10^k step giving roughly `target` intervals over `span`.
double nice_step(double span, int target)
{
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw)
            return m * mag;
    return 10.0 * mag;
}

std::string tick_label(double v)
{
    if (std::abs(v) < 1e-9)
        v = 0.0;
    return fmt::format("{:g}", v);
}

constexpr std::array<std::string_view, 6> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

} // namespace

std::vector<NamedSeries> build_sweeps(const RunConfig& cfg)
{
    std::vector<NamedSeries> out;
    for (int n : cfg.effective_counts())
        out.push_back({"n" + std::to_string(n),
                       sweep(with_count(cfg.scenario, n), cfg.d_start_m, cfg.d_stop_m, cfg.step_m)});
    return out;
}

std::string render_sweep_csv(const RunConfig& cfg, const std::vector<NamedSeries>& series)
{
    const bool multi = !cfg.counts.empty();
    std::string s = assumption_header(cfg, true);
    s += multi ? "distance_m,sinr_db,series\n" : "distance_m,sinr_db\n";
    for (const auto& ns : series)
        for (const auto& p : ns.series.samples) {
            if (multi)
                s += fmt::format("{:.6f},{:.6f},{}\n", p.distance_m, p.sinr.value(), ns.name);
            else
                s += fmt::format("{:.6f},{:.6f}\n", p.distance_m, p.sinr.value());
        }
    return s;
}

std::string render_sweep_table(const RunConfig& cfg, const std::vector<NamedSeries>& series)
{
    std::string s = assumption_header(cfg, true);
    s += fmt::format("{:>14}", "distance_m");
    for (const auto& ns : series)
        s += fmt::format(" | {:>14}", "sinr_db " + ns.name);
    s += "\n";
    if (series.empty())
        return s;
    const std::size_t rows = series.front().series.samples.size();
    for (std::size_t i = 0; i < rows; ++i) {
        s += fmt::format("{:>14.6f}", series.front().series.samples[i].distance_m);
        for (const auto& ns : series)
            s += fmt::format(" | {:>14.6f}", ns.series.samples[i].sinr.value());
        s += "\n";
    }
    return s;
}

std::string render_sweep_svg(const RunConfig& cfg, const std::vector<NamedSeries>& series)
{
    constexpr double width = 800, height = 500;
    constexpr double left = 80, right = 640, top = 60, bottom = 430;

    double ymin = cfg.threshold.value(), ymax = cfg.threshold.value();
    for (const auto& ns : series)
        for (const auto& p : ns.series.samples) {
            ymin = std::min(ymin, p.sinr.value());
            ymax = std::max(ymax, p.sinr.value());
        }
    const double ystep = nice_step(std::max(ymax - ymin, 1.0), 8);
    ymin = std::floor(ymin / ystep) * ystep;
    ymax = std::ceil(ymax / ystep) * ystep;
    if (ymax <= ymin)
        ymax = ymin + ystep;
    const double xmin = cfg.d_start_m, xmax = cfg.d_stop_m;
    const double xstep = nice_step(xmax - xmin, 10);

    auto px = [&](double d) { return left + (d - xmin) / (xmax - xmin) * (right - left); };
    auto py = [&](double v) { return bottom - (v - ymin) / (ymax - ymin) * (bottom - top); };

    const Scenario& sc = cfg.scenario;
    std::string s;
    s += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:g}\" height=\"{:g}\" viewBox=\"0 0 {:g} {:g}\" "
                     "font-family=\"sans-serif\" font-size=\"12\">\n",
                     width, height, width, height);
    s += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:g}\" height=\"{:g}\" fill=\"white\"/>\n", width, height);
    s += fmt::format("<text x=\"{:g}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{} ES ({}) to 5G UE interference</text>\n",
                     width / 2, to_string(sc.emitter.es_class), to_string(sc.emitter.lobe));
    s += fmt::format("<text x=\"{:g}\" y=\"44\" text-anchor=\"middle\" font-size=\"11\">RSRP {:.1f} dBm, NF {:.1f} dB, "
                     "T {:.0f} K, f {:.3f} GHz, BW {:.3f} GHz, threshold {:.1f} dB</text>\n",
                     width / 2, sc.victim.rsrp.value(), sc.victim.noise_figure.value(), sc.victim.noise_temperature_k,
                     sc.carrier.frequency_hz / 1e9, sc.carrier.bandwidth_hz / 1e9, cfg.threshold.value());

    // Grid and ticks.
    s += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double y = ymin; y <= ymax + 1e-9 * ystep; y += ystep)
        s += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", left, py(y), right, py(y));
    const double x0 = std::ceil(xmin / xstep) * xstep;
    for (double x = x0; x <= xmax + 1e-9 * xstep; x += xstep)
        s += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", px(x), top, px(x), bottom);
    s += "</g>\n<g text-anchor=\"end\">\n";
    for (double y = ymin; y <= ymax + 1e-9 * ystep; y += ystep)
        s += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", left - 6, py(y) + 4, tick_label(y));
    s += "</g>\n<g text-anchor=\"middle\">\n";
    for (double x = x0; x <= xmax + 1e-9 * xstep; x += xstep)
        s += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", px(x), bottom + 18, tick_label(x));
    s += "</g>\n";

    s += fmt::format("<rect x=\"{:g}\" y=\"{:g}\" width=\"{:g}\" height=\"{:g}\" fill=\"none\" stroke=\"black\"/>\n", left,
                     top, right - left, bottom - top);
    s += fmt::format("<text x=\"{:g}\" y=\"{:g}\" text-anchor=\"middle\">Distance (m)</text>\n", (left + right) / 2,
                     bottom + 40);
    s += fmt::format("<text x=\"20\" y=\"{:g}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:g})\">SINR (dB)</text>\n",
                     (top + bottom) / 2, (top + bottom) / 2);

    s += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#555555\" "
                     "stroke-dasharray=\"6 4\"/>\n",
                     left, py(cfg.threshold.value()), right, py(cfg.threshold.value()));

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto colour = palette[i % palette.size()];
        s += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"", colour);
        bool first = true;
        for (const auto& p : series[i].series.samples) {
            s += fmt::format("{}{:.2f},{:.2f}", first ? "" : " ", px(p.distance_m), py(p.sinr.value()));
            first = false;
        }
        s += "\"/>\n";
    }

    // Legend.
    const double lx = right + 20;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double ly = top + 10 + 22.0 * static_cast<double>(i);
        s += fmt::format("<line x1=\"{:g}\" y1=\"{:g}\" x2=\"{:g}\" y2=\"{:g}\" stroke=\"{}\" stroke-width=\"3\"/>\n", lx, ly,
                         lx + 24, ly, palette[i % palette.size()]);
        const int n = series[i].series.scenario.emitter.count;
        s += fmt::format("<text x=\"{:g}\" y=\"{:g}\">{} Tx ({})</text>\n", lx + 30, ly + 4, n, series[i].name);
    }
    const double ty = top + 10 + 22.0 * static_cast<double>(series.size());
    s += fmt::format("<line x1=\"{:g}\" y1=\"{:g}\" x2=\"{:g}\" y2=\"{:g}\" stroke=\"#555555\" stroke-dasharray=\"6 4\"/>\n",
                     lx, ty, lx + 24, ty);
    s += fmt::format("<text x=\"{:g}\" y=\"{:g}\">threshold</text>\n", lx + 30, ty + 4);
    s += "</svg>\n";
    return s;
}

std::string render_separation_table(const RunConfig& cfg)
{
    std::string s = "# minimum ES-to-UE separation distance (SINR >= threshold)\n";
    s += assumption_header(cfg, false);
    s += "# note: distances hold only for the noise figure, lobe and transmitter count listed here;\n"
         "# reference separation figures quoted without these assumptions are not directly comparable\n";
    for (int n : cfg.effective_counts()) {
        const Scenario base = with_count(cfg.scenario, n);
        s += fmt::format("\ncount = {}\n", n);
        s += "ES class | Mainlobe (m) | Sidelobe (m)\n";
        for (EsClass c : all_es_classes) {
            s += std::string(to_string(c));
            for (Lobe l : all_lobes) {
                Scenario sc = base;
                sc.emitter.es_class = c;
                sc.emitter.lobe = l;
                const SeparationResult r = separation_distance(sc, cfg.threshold);
                s += r.attainable ? fmt::format(" | {:.2f}", r.distance_m) : std::string(" | unattainable");
            }
            s += "\n";
        }
    }
    return s;
}

std::string render_separation_csv(const RunConfig& cfg)
{
    std::string s = assumption_header(cfg, false);
    s += "es_class,lobe,count,separation_m\n";
    for (int n : cfg.effective_counts())
        for (EsClass c : all_es_classes)
            for (Lobe l : all_lobes) {
                Scenario sc = with_count(cfg.scenario, n);
                sc.emitter.es_class = c;
                sc.emitter.lobe = l;
                const SeparationResult r = separation_distance(sc, cfg.threshold);
                s += fmt::format("{},{},{},{}\n", static_cast<int>(c), to_string(l), n,
                                 r.attainable ? fmt::format("{:.6f}", r.distance_m) : std::string("unattainable"));
            }
    return s;
}

std::string render_eirp_table()
{
    std::string s = "ES class | Mainlobe (dBm/GHz) | Sidelobe (dBm/GHz)\n";
    for (EsClass c : all_es_classes)
        s += fmt::format("{} | {:.1f} | {:.1f}\n", to_string(c), es_eirp_density_dbm_per_ghz(c, Lobe::Mainlobe).value(),
                         es_eirp_density_dbm_per_ghz(c, Lobe::Sidelobe).value());
    return s;
}

int run_sweep_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::string payload;
    const int rc = guarded(err, [&] {
        const auto series = build_sweeps(cfg);
        switch (format_or(cfg, OutputFormat::Csv)) {
        case OutputFormat::Csv: return render_sweep_csv(cfg, series);
        case OutputFormat::Svg: return render_sweep_svg(cfg, series);
        case OutputFormat::Table: return render_sweep_table(cfg, series);
        }
        return std::string{};
    }, payload);
    return rc != ExitOk ? rc : emit(cfg, payload, out, err);
}

int run_separation_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::string payload;
    const int rc = guarded(err, [&] {
        switch (format_or(cfg, OutputFormat::Table)) {
        case OutputFormat::Table: return render_separation_table(cfg);
        case OutputFormat::Csv: return render_separation_csv(cfg);
        case OutputFormat::Svg: break;
        }
        throw ValidationError("format", "separation supports table or csv output");
    }, payload);
    return rc != ExitOk ? rc : emit(cfg, payload, out, err);
}

int run_eirp_table_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format && *cfg.format != OutputFormat::Table) {
        err << "error: format: eirp-table supports table output only\n";
        return ExitValidation;
    }
    return emit(cfg, render_eirp_table(), out, err);
}

} // namespace fsscoex
