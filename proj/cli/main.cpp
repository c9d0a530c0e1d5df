#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "kg/ensemble.hpp"
#include "kg/fits.hpp"
#include "kg/io.hpp"
#include "kg/theory.hpp"

namespace {

std::vector<int> parse_sizes(const std::string& spec) {
    std::vector<int> out;
    if (spec.find(':') != std::string::npos) {
        int a = 0, b = 0, step = 1;
        char c1 = 0, c2 = 0;
        std::istringstream is(spec);
        if (!(is >> a >> c1 >> b) || c1 != ':')
            throw CLI::ValidationError("--sizes", "expected a:b:step");
        if (is >> c2 >> step) {
            if (c2 != ':' || step <= 0)
                throw CLI::ValidationError("--sizes", "expected a:b:step");
        }
        for (int n = a; n <= b; n += step) out.push_back(n);
    } else {
        std::istringstream is(spec);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
    return out;
}

struct CommonOpts {
    std::string sizes;
    int n = 0;
    std::string samples = "100";
    std::string tscale = "log";
    std::string output;
    std::string format = "csv";
    kg::RunConfig cfg;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--d", o.cfg.degree, "graph degree")
        ->check(CLI::IsMember({2, 3}))
        ->capture_default_str();
    cmd->add_option("--sizes", o.sizes, "system sizes, a:b:step or comma list");
    cmd->add_option("--n", o.n, "single system size");
    cmd->add_option("--samples", o.samples,
                    "graphs per size, or 'all' to enumerate")
        ->capture_default_str();
    cmd->add_option("--j", o.cfg.j, "hopping strength")->capture_default_str();
    cmd->add_option("--disorder", o.cfg.disorder_w,
                    "box width of uniform on-site energies")
        ->capture_default_str();
    cmd->add_flag("--quasiperiodic", o.cfg.quasiperiodic,
                  "deterministic incommensurate on-site potential");
    cmd->add_option("--tmin", o.cfg.tmin, "time grid start")->capture_default_str();
    cmd->add_option("--tmax", o.cfg.tmax, "time grid end")->capture_default_str();
    cmd->add_option("--tpoints", o.cfg.tpoints, "time grid points")
        ->capture_default_str();
    cmd->add_option("--tscale", o.tscale, "time grid spacing")
        ->check(CLI::IsMember({"log", "lin"}))
        ->capture_default_str();
    cmd->add_option("--seed", o.cfg.seed, "master seed (env KRYLOV_SEED)");
    cmd->add_option("--tol", o.cfg.tol, "Lanczos termination tolerance")
        ->capture_default_str();
    cmd->add_option("--workers", o.cfg.workers, "worker threads, 0 = cores");
    cmd->add_option("--output", o.output, "output path, '-' or empty = stdout");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    cmd->add_flag("--raw", o.cfg.raw, "keep per-graph records");
    cmd->add_flag("--stamp", o.cfg.stamp, "timestamp records");
    cmd->set_config("--config", "", "config file mirroring these options");
}

int run_kind(const std::string& kind, CommonOpts& o) {
    o.cfg.kind = kind;
    if (!o.sizes.empty())
        o.cfg.sizes = parse_sizes(o.sizes);
    else if (o.n > 0)
        o.cfg.sizes = {o.n};
    else
        throw CLI::ValidationError("--sizes", "need --sizes or --n");
    o.cfg.samples = (o.samples == "all") ? -1 : std::stoi(o.samples);
    if (o.cfg.samples == 0 || o.cfg.samples < -1)
        throw CLI::ValidationError("--samples", "need a positive count or 'all'");
    o.cfg.log_time = (o.tscale == "log");
    if (o.cfg.workers <= 0) {
        const unsigned hc = std::thread::hardware_concurrency();
        o.cfg.workers = hc ? static_cast<int>(hc) : 1;
    }
    kg::ExperimentResult res = kg::run_experiment(o.cfg);
    if (o.format == "jsonl") {
        std::string text;
        for (const auto& r : res.records()) text += r.dump() + "\n";
        kg::write_text(o.output, text);
    } else {
        kg::write_text(o.output, res.summary_csv_text());
    }
    if (res.fit.ok)
        std::cerr << kind << ": exponent " << res.fit.slope << " +/- "
                  << res.fit.slope_stderr << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement, Krylov complexity and OTOC scaling on regular graphs"};
    app.require_subcommand(1);

    uint64_t env_seed = 1;
    if (const char* s = std::getenv("KRYLOV_SEED")) env_seed = std::strtoull(s, nullptr, 10);

    CommonOpts ent2, kry2, ent3, kry3, dim, oto;
    struct Bind {
        const char* name;
        const char* help;
        CommonOpts* o;
        bool interacting;
    } binds[] = {
        {"free-entanglement", "half-chain entropy growth, free fermions", &ent2, false},
        {"free-krylov", "Krylov complexity plateau, free fermions", &kry2, false},
        {"int-entanglement", "half-chain entropy growth, interacting fermions", &ent3, true},
        {"int-krylov", "Krylov complexity plateau, interacting fermions", &kry3, true},
        {"dimension", "Krylov space dimension", &dim, false},
        {"otoc", "out-of-time-order correlator F(t)", &oto, false},
    };
    for (auto& b : binds) {
        CLI::App* cmd = app.add_subcommand(b.name, b.help);
        b.o->cfg.seed = env_seed;
        b.o->cfg.interacting = b.interacting;
        add_common(cmd, *b.o);
    }
    CLI::App* dimc = app.get_subcommand("dimension");
    dimc->add_flag("--interacting", dim.cfg.interacting,
                   "use the many-body operator space");
    CLI::App* otoc = app.get_subcommand("otoc");
    otoc->add_flag("--interacting", oto.cfg.interacting,
                   "interacting evolution (exact to N=12, typicality above)");
    otoc->add_option("--site-o", oto.cfg.site_o, "site of O = 2n-1")
        ->capture_default_str();
    otoc->add_option("--site-q", oto.cfg.site_q, "site of Q = 2n-1, -1 = N/2-1");
    otoc->add_option("--typ-samples", oto.cfg.typicality_samples,
                     "random vectors per typicality estimate")
        ->capture_default_str();
    otoc->add_option("--fit-tmin", oto.cfg.fit_tmin, "growth fit lower bound");
    otoc->add_option("--fit-tmax", oto.cfg.fit_tmax, "growth fit upper bound");

    int nmax = 120;
    std::string th_out, th_format = "csv";
    CLI::App* th = app.add_subcommand("theory", "partition-ensemble predictions");
    th->add_option("--nmax", nmax, "table covers N = 3..nmax")->capture_default_str();
    th->add_option("--output", th_out, "output path, empty = stdout");
    th->add_option("--format", th_format, "output format")
        ->check(CLI::IsMember({"csv", "jsonl"}));

    std::string fit_in, xcol = "N", ycol = "mean";
    bool fit_raw = false;
    CLI::App* ft = app.add_subcommand("fit", "power-law exponent from a CSV");
    ft->add_option("--input", fit_in, "CSV with a header row")->required();
    ft->add_option("--xcol", xcol, "x column name")->capture_default_str();
    ft->add_option("--ycol", ycol, "y column name")->capture_default_str();
    ft->add_flag("--raw-space", fit_raw, "least squares in raw space, not log-log");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        for (auto& b : binds)
            if (app.get_subcommand(b.name)->parsed()) return run_kind(b.name, *b.o);
        if (th->parsed()) {
            std::vector<int> sizes;
            for (int n = 3; n <= nmax; ++n) sizes.push_back(n);
            auto rows = kg::theory_table(sizes);
            if (th_format == "jsonl") {
                std::string text;
                for (const auto& r : rows) {
                    nlohmann::json j{{"schema_version", kg::kSchemaVersion},
                                     {"n", r.n},
                                     {"count", r.count},
                                     {"d_free", r.d_free},
                                     {"log4_d_int_upper", r.log4_d_int_upper},
                                     {"loop_avg", r.loop_avg}};
                    text += j.dump() + "\n";
                }
                kg::write_text(th_out, text);
            } else {
                kg::write_text(th_out, kg::theory_csv(rows));
            }
            return 0;
        }
        if (ft->parsed()) {
            kg::CsvColumns cols = kg::read_csv_columns(fit_in, xcol, ycol);
            kg::FitResult r = fit_raw ? kg::raw_power_fit(cols.x, cols.y)
                                      : kg::loglog_fit(cols.x, cols.y);
            if (!r.ok) {
                std::cerr << "fit failed\n";
                return 2;
            }
            std::cout << "exponent,stderr,intercept\n"
                      << r.slope << "," << r.slope_stderr << "," << r.intercept
                      << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
