// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// Usage: fsscoex_acceptance [path-to-fsscoex-cli]

#include "fsscoex/engine.hpp"
#include "fsscoex/linkbudget.hpp"
#include "fsscoex/report.hpp"

#include "oracle.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cstring>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace fsscoex;
namespace fs = std::filesystem;

namespace {

std::string cli_path = FSSCOEX_CLI_PATH;
fs::path work_dir;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, std::string note)
    {
        if (!ok)
            pass = false;
        notes.push_back(std::string(ok ? "ok   " : "FAIL ") + std::move(note));
    }
};

struct CliRun {
    int exit_code;
    std::string out;
};

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

CliRun run_cli(const std::string& args, const std::string& tag)
{
    const fs::path out = work_dir / (tag + ".out");
    const std::string cmd = "\"" + cli_path + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                            (work_dir / (tag + ".err")).string() + "\"";
    const int raw = std::system(cmd.c_str());
    const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, slurp(out)};
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Scenario make(EsClass c, Lobe l, int count = 1)
{
    Scenario s;
    s.emitter = {c, l, count};
    return s;
}

Scenario random_scenario(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> cls(1, 3), lobe(0, 1), cnt(1, 20);
    std::uniform_real_distribution<double> rsrp(-95.0, -60.0), nf(0.0, 10.0), temp(200.0, 400.0), freq(24e9, 40e9),
        lbw(7.0, 9.5);
    Scenario s = make(static_cast<EsClass>(cls(rng)), lobe(rng) ? Lobe::Sidelobe : Lobe::Mainlobe, cnt(rng));
    s.victim.rsrp = PowerDbm{rsrp(rng)};
    s.victim.noise_figure = PowerRatioDb{nf(rng)};
    s.victim.noise_temperature_k = temp(rng);
    s.carrier = {freq(rng), std::pow(10.0, lbw(rng))};
    return s;
}

// 1. EIRP table fidelity.
Outcome eirp_table()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const CliRun r = run_cli("eirp-table", "eirp");
    const double dt = seconds_since(t0);
    o.require(r.exit_code == 0, fmt::format("exit code {}", r.exit_code));
    for (const char* row : {"Class 1 | 42.2 | 12.2\n", "Class 2 | 54.1 | 24.1\n", "Class 3 | 78.0 | 48.0\n"})
        o.require(r.out.find(row) != std::string::npos, fmt::format("row '{}'", std::string(row, std::strlen(row) - 1)));
    const double expected_main[] = {42.2, 54.1, 78.0};
    for (EsClass c : all_es_classes) {
        const double m = es_eirp_density_dbm_per_ghz(c, Lobe::Mainlobe).value();
        const double s = es_eirp_density_dbm_per_ghz(c, Lobe::Sidelobe).value();
        o.require(m == expected_main[static_cast<int>(c) - 1], fmt::format("{} mainlobe {} dBm/GHz", to_string(c), m));
        o.require(s == m - 30.0, fmt::format("{} sidelobe = mainlobe - 30 ({})", to_string(c), s));
    }
    o.require(dt < 1.0, fmt::format("runtime {:.3f} s < 1 s", dt));
    return o;
}

// 2. Class-1 mainlobe separation.
Outcome figure1()
{
    Outcome o;
    const double hand = 1000.0 * std::pow(10.0, (42.2 + 82.2 - 121.39) / 20.0);
    const double exact = oracle::separation_m(-80.0, oracle::noise_dbm(1e9, 290.0, 0.0), 42.2, 1, 28e9, 0.0);
    const auto r = separation_distance(make(EsClass::Class1, Lobe::Mainlobe), PowerRatioDb{0.0});
    o.require(r.attainable, "attainable");
    o.notes.push_back(fmt::format("info hand oracle {:.3f} m, full-precision oracle {:.3f} m, engine {:.3f} m", hand,
                                  exact, r.distance_m));
    o.require(std::abs(r.distance_m - 1414.0) <= 1.0, fmt::format("|{:.3f} - 1414| <= 1 m", r.distance_m));
    o.require(std::abs(r.distance_m - 1500.0) <= 150.0, fmt::format("{:.3f} m within 10% of 1500 m", r.distance_m));
    return o;
}

// 3. Class-3 behaviour and the per-class separation figures.
Outcome figure3()
{
    Outcome o;
    const SweepSeries main3 = sweep(make(EsClass::Class3, Lobe::Mainlobe), 1.0, 5000.0, 1.0);
    double worst = -1e300;
    for (const auto& p : main3.samples)
        worst = std::max(worst, p.sinr.value());
    o.require(worst < 0.0, fmt::format("class 3 mainlobe max SINR over 1..5000 m = {:.3f} dB < 0", worst));

    const auto side3 = separation_distance(make(EsClass::Class3, Lobe::Sidelobe), PowerRatioDb{0.0});
    o.require(side3.attainable && std::round(side3.distance_m / 10.0) * 10.0 == 2760.0,
              fmt::format("class 3 sidelobe {:.3f} m ~ 2760 m (3 significant figures)", side3.distance_m));
    o.require(side3.distance_m <= 2500.0 * 1.25 && side3.distance_m >= 2500.0 / 1.25,
              fmt::format("class 3 sidelobe within x1.25 of 2500 m"));

    const struct {
        EsClass c;
        double reference;
    } lower[] = {{EsClass::Class1, 100.0}, {EsClass::Class2, 500.0}};
    for (const auto& [c, ref] : lower) {
        const auto r = separation_distance(make(c, Lobe::Sidelobe), PowerRatioDb{0.0});
        o.require(r.attainable && r.distance_m <= 3.0 * ref && r.distance_m >= ref / 3.0,
                  fmt::format("{} sidelobe {:.3f} m within x3 of {:g} m", to_string(c), r.distance_m, ref));
    }

    const CliRun t = run_cli("separation", "sep_header");
    o.require(t.exit_code == 0, "separation command exit 0");
    o.require(t.out.find("noise_figure_db=0.000000") != std::string::npos, "header discloses noise figure");
    o.require(t.out.find("# note:") != std::string::npos && t.out.find("lobe and transmitter count") != std::string::npos,
              "header documents the assumption gap");
    return o;
}

// 4. Aggregation law.
Outcome aggregation()
{
    Outcome o;
    std::mt19937_64 rng(4004);
    std::uniform_int_distribution<int> ncount(2, 50);
    std::uniform_real_distribution<double> ld(0.0, 5.0), margin(10.0, 30.0);
    double worst_db = 0.0, worst_ratio = 0.0;
    int limited = 0;
    for (int i = 0; i < 200; ++i) {
        Scenario one = random_scenario(rng);
        one.emitter.count = 1;
        Scenario many = one;
        many.emitter.count = ncount(rng);
        const double d = std::pow(10.0, ld(rng));
        const double delta = (interference_dbm(many, d) - interference_dbm(one, d)).value();
        worst_db = std::max(worst_db, std::abs(delta - 10.0 * std::log10(many.emitter.count)));

        // Threshold at least 10 dB under the SNR ceiling: I_max >= 9 N, so the
        // solution is interference limited.
        const PowerRatioDb thr = one.snr_ceiling() - PowerRatioDb{margin(rng)};
        const auto r1 = separation_distance(one, thr);
        const auto rn = separation_distance(many, thr);
        if (!r1.attainable || !rn.attainable) {
            o.require(false, fmt::format("scenario {} unexpectedly unattainable", i));
            continue;
        }
        const double i_n = dbm_to_mw(interference_dbm(one, r1.distance_m)).value();
        const double noise = dbm_to_mw(one.noise_dbm()).value();
        if (noise > 0.2 * i_n) {
            o.require(false, fmt::format("scenario {} not interference limited", i));
            continue;
        }
        ++limited;
        const double ratio = rn.distance_m / r1.distance_m / std::sqrt(many.emitter.count);
        worst_ratio = std::max(worst_ratio, std::abs(ratio - 1.0));
    }
    o.require(worst_db < 1e-9, fmt::format("max |dI - 10log10(N)| = {:.3e} dB < 1e-9", worst_db));
    o.require(limited == 200 && worst_ratio < 0.01,
              fmt::format("{} interference-limited cases, max |d*(N)/d*(1)/sqrt(N) - 1| = {:.3e} < 1%", limited,
                          worst_ratio));
    return o;
}

// 5. Closed form vs bisection.
Outcome solver_equivalence()
{
    Outcome o;
    std::mt19937_64 rng(5005);
    std::uniform_real_distribution<double> below(0.5, 20.0), above(0.0, 10.0);
    const BisectionOptions opts{};
    double worst = 0.0;
    int attainable = 0, in_bracket = 0;
    for (int i = 0; i < 500; ++i) {
        const Scenario s = random_scenario(rng);
        const PowerRatioDb thr = s.snr_ceiling() - PowerRatioDb{below(rng)};
        const auto closed = separation_distance(s, thr);
        const auto numeric = separation_distance_bisection(s, thr, opts);
        if (closed.attainable && numeric.attainable)
            ++attainable;
        if (closed.distance_m > opts.lower_m && closed.distance_m < opts.upper_m)
            ++in_bracket;
        worst = std::max(worst, std::abs(closed.distance_m - numeric.distance_m));
    }
    o.require(attainable == 500, fmt::format("{} / 500 attainable scenarios classified attainable by both", attainable));
    o.require(in_bracket == 500, fmt::format("{} / 500 solutions inside the bisection bracket", in_bracket));
    o.require(worst <= 0.01, fmt::format("max |closed - bisection| = {:.3e} m <= 0.01 m", worst));

    int agree = 0;
    for (int i = 0; i < 500; ++i) {
        const Scenario s = random_scenario(rng);
        const PowerRatioDb thr = s.snr_ceiling() + PowerRatioDb{above(rng)};
        const auto closed = separation_distance(s, thr);
        const auto numeric = separation_distance_bisection(s, thr, opts);
        if (!closed.attainable && !numeric.attainable)
            ++agree;
    }
    o.require(agree == 500, fmt::format("{} / 500 unattainable scenarios classified identically", agree));
    return o;
}

// 6. Property suites.
Outcome properties()
{
    Outcome o;
    std::mt19937_64 rng(6006);

    std::uniform_real_distribution<double> lvl(-200.0, 100.0);
    double worst_rt = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const PowerDbm p{lvl(rng)};
        worst_rt = std::max(worst_rt, std::abs(mw_to_dbm(dbm_to_mw(p)).value() - p.value()));
    }
    o.require(worst_rt < 1e-9, fmt::format("dB/linear round trip max error {:.3e} dB < 1e-9", worst_rt));

    std::uniform_real_distribution<double> ld(-2.0, 6.0), lf(9.0, 11.0);
    double worst_fspl = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double d = std::pow(10.0, ld(rng)), f = std::pow(10.0, lf(rng));
        worst_fspl = std::max(worst_fspl, std::abs((fspl_db(2 * d, f) - fspl_db(d, f)).value() - 20.0 * std::log10(2.0)));
    }
    o.require(worst_fspl < 1e-9 && std::abs(20.0 * std::log10(2.0) - 6.0206) < 5e-5,
              fmt::format("FSPL doubling = 6.0206 dB, max deviation {:.3e} dB", worst_fspl));

    std::uniform_real_distribution<double> start(1.0, 100.0), span(100.0, 5000.0), step(0.25, 25.0);
    int violations = 0, sweeps = 0;
    for (int i = 0; i < 300; ++i) {
        const Scenario s = random_scenario(rng);
        const double d0 = start(rng);
        const SweepSeries series = sweep(s, d0, d0 + span(rng), step(rng));
        ++sweeps;
        for (std::size_t k = 1; k < series.samples.size(); ++k)
            if (!(series.samples[k].sinr > series.samples[k - 1].sinr) ||
                !(series.samples[k].distance_m > series.samples[k - 1].distance_m))
                ++violations;
    }
    for (EsClass c : all_es_classes)
        for (Lobe l : all_lobes)
            for (int n : {1, 5, 10}) {
                const SweepSeries series = sweep(make(c, l, n), 1.0, 5000.0, 1.0);
                ++sweeps;
                for (std::size_t k = 1; k < series.samples.size(); ++k)
                    if (!(series.samples[k].sinr > series.samples[k - 1].sinr))
                        ++violations;
            }
    o.require(violations == 0, fmt::format("{} sweeps strictly monotone ({} violations)", sweeps, violations));

    const Scenario def;
    const double ceiling = def.snr_ceiling().value();
    const double far = sinr_db(def, 1e6).value();
    o.require(std::abs(ceiling - 3.98) < 0.005, fmt::format("SNR ceiling {:.6f} dB ~ 3.98 dB", ceiling));
    o.require(far < ceiling && ceiling - far < 0.01, fmt::format("SINR(1e6 m) = {:.6f} dB within 0.01 dB of ceiling", far));

    const auto t0 = std::chrono::steady_clock::now();
    const SweepSeries big = sweep(def, 1.0, 5000.0, 1.0);
    const double dt = seconds_since(t0);
    o.require(big.samples.size() == 5000 && dt < 1.0, fmt::format("5000-point sweep in {:.4f} s < 1 s", dt));
    return o;
}

// 7. Determinism of CLI outputs.
Outcome determinism()
{
    Outcome o;
    const struct {
        const char* name;
        std::string args;
    } cases[] = {
        {"csv", "sweep --class 2 --counts 1,5,10 --format csv"},
        {"svg", "sweep --class 3 --lobe sidelobe --counts 1,5,10 --format svg"},
        {"table", "separation --nf-db 3 --count 5"},
        {"eirp", "eirp-table"},
    };
    for (const auto& c : cases) {
        const fs::path a = work_dir / (std::string("det_") + c.name + "_a");
        const fs::path b = work_dir / (std::string("det_") + c.name + "_b");
        const CliRun ra = run_cli(c.args + " --out \"" + a.string() + "\"", std::string("det_a_") + c.name);
        const CliRun rb = run_cli(c.args + " --out \"" + b.string() + "\"", std::string("det_b_") + c.name);
        const std::string sa = slurp(a), sb = slurp(b);
        o.require(ra.exit_code == 0 && rb.exit_code == 0 && !sa.empty() && sa == sb,
                  fmt::format("{}: {} bytes, identical={}", c.name, sa.size(), sa == sb));
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1)
        cli_path = argv[1];
    work_dir = fs::temp_directory_path() / fmt::format("fsscoex_acceptance_{}", static_cast<long>(::getpid()));
    fs::create_directories(work_dir);

    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"1 EIRP table fidelity", eirp_table},
        {"2 Class-1 mainlobe separation (1414 m +/- 1 m)", figure1},
        {"3 Class-3 behaviour and per-class separations", figure3},
        {"4 Aggregation law", aggregation},
        {"5 Closed-form vs bisection solver", solver_equivalence},
        {"6 Property suites", properties},
        {"7 CLI determinism", determinism},
    };

    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const Outcome o = fn();
        fmt::print("[{}] {}\n", o.pass ? "PASS" : "FAIL", name);
        for (const auto& n : o.notes)
            fmt::print("       {}\n", n);
        if (!o.pass)
            ++failed;
    }
    fs::remove_all(work_dir);
    fmt::print("{} / {} criteria passed\n", std::size(criteria) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
