#include "kg/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "kg/entanglement.hpp"
#include "kg/fockspace.hpp"
#include "kg/freeops.hpp"
#include "kg/io.hpp"
#include "kg/krylov.hpp"
#include "kg/lanczos.hpp"
#include "kg/otoc.hpp"
#include "kg/rng.hpp"

extern "C" void openblas_set_num_threads(int);

namespace kg {

namespace {

constexpr uint64_t kGraphStream = 0x67;
constexpr uint64_t kDisorderStream = 0x64;
constexpr uint64_t kTypicalityStream = 0x74;
constexpr uint64_t kEnumStream = 0x65;

struct GraphOutcome {
    bool ok = true;
    double value = 0.0;
    std::vector<double> site_values;
    Eigen::VectorXd curve; // otoc: Re F(t); entanglement: S(t)
    double plateau = 0.0;  // otoc only
    std::string cert;
    std::string error;
};

// per-length (dimension, complexity plateau) for cycle graphs whose potential
// repeats identically on every cycle of a given length
struct CycleTable {
    std::map<int, std::pair<double, double>> v; // L -> (D, cbar)
};

bool cycle_cacheable(const RunConfig& cfg) {
    return cfg.degree == 2 && cfg.disorder_w == 0.0 && !cfg.interacting;
}

CycleTable build_cycle_table(const RunConfig& cfg, const std::vector<Graph>& graphs,
                             bool need_cbar) {
    CycleTable tab;
    for (const auto& g : graphs)
        for (int len : cycle_lengths(g)) tab.v.emplace(len, std::make_pair(0.0, 0.0));
    for (auto& [len, val] : tab.v) {
        Graph ring = cycles_from_partition(len, {len});
        Eigen::MatrixXd h = free_hamiltonian(ring, cfg.j);
        if (cfg.quasiperiodic) {
            auto pot = quasiperiodic_potential(ring);
            for (int i = 0; i < len; ++i) h(i, i) += pot[i];
        }
        SpectralMeasure sm = spectral_measure(h, 0);
        val.first = sm.dim();
        if (need_cbar) {
            LanczosResult lr = jacobi_from_measure(sm);
            val.second = complexity_time_average(lr.b);
        }
    }
    return tab;
}

Eigen::MatrixXd build_free_h(const RunConfig& cfg, const Graph& g, int n, int gi) {
    Eigen::MatrixXd h;
    if (cfg.disorder_w > 0.0) {
        auto rng = make_rng(task_seed(cfg.seed, kDisorderStream, n, gi));
        h = free_hamiltonian_disordered(g, cfg.j, cfg.disorder_w, rng);
    } else {
        h = free_hamiltonian(g, cfg.j);
    }
    if (cfg.quasiperiodic) {
        auto pot = quasiperiodic_potential(g);
        for (int i = 0; i < g.n; ++i) h(i, i) += pot[i];
    }
    return h;
}

ManyBodyParams many_body_params(const RunConfig& cfg, const Graph& g, int n, int gi) {
    ManyBodyParams p;
    p.j = cfg.j;
    p.interacting = true;
    if (cfg.disorder_w > 0.0) {
        auto rng = make_rng(task_seed(cfg.seed, kDisorderStream, n, gi));
        std::uniform_real_distribution<double> u(-0.5 * cfg.disorder_w,
                                                 0.5 * cfg.disorder_w);
        p.onsite.resize(g.n);
        for (auto& x : p.onsite) x = u(rng);
    }
    return p;
}

double cbar_from_measure(const SpectralMeasure& sm) {
    if (sm.dim() > 40000)
        throw std::runtime_error("Krylov dimension too large for exact averaging");
    LanczosResult lr = jacobi_from_measure(sm);
    return complexity_time_average(lr.b);
}

GraphOutcome eval_krylov(const RunConfig& cfg, const Graph& g, int n, int gi,
                         const CycleTable* tab, bool want_dimension) {
    GraphOutcome out;
    if (tab) {
        double acc = 0.0;
        for (int len : cycle_lengths(g)) {
            const auto& [d, cbar] = tab->v.at(len);
            const double w = static_cast<double>(len) / n;
            const double v = want_dimension ? d : cbar;
            acc += w * v;
            out.site_values.insert(out.site_values.end(), len,
                                   want_dimension ? d : cbar);
        }
        out.value = acc;
        return out;
    }
    if (cfg.interacting) {
        ManyBodyParams p = many_body_params(cfg, g, n, gi);
        double acc = 0.0;
        for (int site = 0; site < n; ++site) {
            SpectralMeasure sm = many_body_spectral_measure(g, p, site);
            const double v = want_dimension ? sm.dim() : cbar_from_measure(sm);
            out.site_values.push_back(v);
            acc += v;
        }
        out.value = acc / n;
        return out;
    }
    Eigen::MatrixXd h = build_free_h(cfg, g, n, gi);
    double acc = 0.0;
    for (int site = 0; site < n; ++site) {
        SpectralMeasure sm = spectral_measure(h, site);
        const double v = want_dimension ? sm.dim() : cbar_from_measure(sm);
        out.site_values.push_back(v);
        acc += v;
    }
    out.value = acc / n;
    return out;
}

GraphOutcome eval_entanglement(const RunConfig& cfg, const Graph& g, int n, int gi,
                               const Eigen::VectorXd& grid) {
    GraphOutcome out;
    Eigen::VectorXd s;
    if (cfg.interacting) {
        if (n > 16) throw std::runtime_error("interacting entanglement capped at N=16");
        s = many_body_entropy_series(g, many_body_params(cfg, g, n, gi), grid);
    } else {
        s = free_entropy_series(build_free_h(cfg, g, n, gi), grid);
    }
    const int half = static_cast<int>(grid.size()) / 2;
    out.value = s.tail(s.size() - half).mean();
    out.curve = s;
    return out;
}

GraphOutcome eval_otoc(const RunConfig& cfg, const Graph& g, int n, int gi,
                       const Eigen::VectorXd& grid) {
    GraphOutcome out;
    const int sq = cfg.site_q >= 0 ? cfg.site_q : n / 2 - 1;
    if (!cfg.interacting) {
        OtocSeries s = otoc_free(build_free_h(cfg, g, n, gi), cfg.site_o, sq, grid);
        out.curve = s.f.real();
        const int half = static_cast<int>(grid.size()) / 2;
        out.plateau = out.curve.tail(out.curve.size() - half).mean();
        out.value = out.plateau;
        return out;
    }
    ManyBodyParams p = many_body_params(cfg, g, n, gi);
    OtocSeries s =
        (n <= 12) ? otoc_exact(g, p, cfg.site_o, sq, grid)
                  : otoc_typicality(g, p, cfg.site_o, sq, grid,
                                    cfg.typicality_samples,
                                    task_seed(cfg.seed, kTypicalityStream, n, gi));
    out.curve = s.f.real();
    out.plateau = otoc_plateau_exact(g, p, cfg.site_o, sq);
    out.value = out.plateau;
    return out;
}

GraphOutcome evaluate(const RunConfig& cfg, const Graph& g, int n, int gi,
                      const CycleTable* tab, const Eigen::VectorXd& grid) {
    GraphOutcome out;
    try {
        if (cfg.kind == "dimension")
            out = eval_krylov(cfg, g, n, gi, tab, true);
        else if (cfg.kind == "free-krylov" || cfg.kind == "int-krylov")
            out = eval_krylov(cfg, g, n, gi, tab, false);
        else if (cfg.kind == "free-entanglement" || cfg.kind == "int-entanglement")
            out = eval_entanglement(cfg, g, n, gi, grid);
        else if (cfg.kind == "otoc")
            out = eval_otoc(cfg, g, n, gi, grid);
        else
            throw std::invalid_argument("unknown experiment kind: " + cfg.kind);
    } catch (const std::exception& e) {
        out.ok = false;
        out.error = e.what();
    }
    out.cert = iso_certificate(g);
    return out;
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

std::vector<Graph> experiment_graphs(const RunConfig& cfg, int n) {
    std::vector<Graph> graphs;
    if (cfg.samples < 0) {
        if (cfg.degree == 2) {
            for (const auto& parts : partitions_min3(n))
                graphs.push_back(cycles_from_partition(n, parts));
        } else {
            auto rng = make_rng(task_seed(cfg.seed, kEnumStream, n, 0));
            graphs = all_regular_graphs(n, cfg.degree, rng);
        }
    } else {
        for (int gi = 0; gi < cfg.samples; ++gi) {
            auto rng = make_rng(task_seed(cfg.seed, kGraphStream, n, gi));
            graphs.push_back(sample_regular(n, cfg.degree, rng));
        }
    }
    return graphs;
}

ExperimentResult run_experiment(const RunConfig& cfg) {
    openblas_set_num_threads(1);
    ExperimentResult res;
    res.cfg = cfg;

    const bool needs_grid = cfg.kind == "free-entanglement" ||
                            cfg.kind == "int-entanglement" || cfg.kind == "otoc";
    Eigen::VectorXd grid;
    if (needs_grid)
        grid = cfg.log_time ? log_grid(cfg.tmin, cfg.tmax, cfg.tpoints)
                            : lin_grid(cfg.tmin, cfg.tmax, cfg.tpoints);

    for (int n : cfg.sizes) {
        std::vector<Graph> graphs = experiment_graphs(cfg, n);
        CycleTable tab;
        const bool cached = cycle_cacheable(cfg) &&
                            (cfg.kind == "dimension" || cfg.kind == "free-krylov");
        if (cached)
            tab = build_cycle_table(cfg, graphs, cfg.kind == "free-krylov");

        std::vector<GraphOutcome> outs(graphs.size());
        std::atomic<size_t> next{0};
        auto work = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= graphs.size()) break;
                outs[i] = evaluate(cfg, graphs[i], n, static_cast<int>(i),
                                   cached ? &tab : nullptr, grid);
            }
        };
        if (cfg.workers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }

        SizeSummary sum;
        sum.n = n;
        std::vector<double> vals, pooled, plateaus;
        Eigen::VectorXd mean_curve;
        int curves = 0;
        for (const auto& o : outs) {
            sum.certificates.push_back(o.cert);
            if (!o.ok) {
                ++sum.failures;
                continue;
            }
            vals.push_back(o.value);
            if (o.site_values.empty())
                pooled.push_back(o.value);
            else
                pooled.insert(pooled.end(), o.site_values.begin(),
                              o.site_values.end());
            if (o.curve.size() > 0) {
                if (curves == 0)
                    mean_curve = o.curve;
                else
                    mean_curve += o.curve;
                ++curves;
            }
            if (cfg.kind == "otoc") plateaus.push_back(o.plateau);
            if (cfg.raw) {
                nlohmann::json r{{"n", n},
                                 {"graph", &o - outs.data()},
                                 {"certificate", o.cert},
                                 {"value", o.value}};
                if (!o.site_values.empty()) r["site_values"] = o.site_values;
                if (o.curve.size() > 0)
                    r["curve"] = std::vector<double>(o.curve.data(),
                                                     o.curve.data() + o.curve.size());
                sum.raw_records.push_back(std::move(r));
            }
        }
        if (vals.empty())
            throw std::runtime_error("all runs failed at N=" + std::to_string(n) +
                                     (outs.empty() ? "" : ": " + outs[0].error));

        auto mean_se = [](const std::vector<double>& v) {
            const double m =
                std::accumulate(v.begin(), v.end(), 0.0) / v.size();
            double var = 0.0;
            for (double x : v) var += (x - m) * (x - m);
            const double se =
                v.size() > 1 ? std::sqrt(var / (v.size() - 1) / v.size()) : 0.0;
            return std::make_pair(m, se);
        };
        auto [m, se] = mean_se(vals);
        sum.mean = m;
        sum.stderr_two_stage = se;
        sum.stderr_pooled = mean_se(pooled).second;
        sum.count = static_cast<int>(vals.size());

        if (curves > 0) {
            mean_curve /= curves;
            std::vector<double> mc(mean_curve.data(),
                                   mean_curve.data() + mean_curve.size());
            sum.extra["mean_curve"] = mc;
            sum.extra["grid"] = std::vector<double>(grid.data(),
                                                    grid.data() + grid.size());
        }
        if (cfg.kind == "otoc" && curves > 0) {
            sum.extra["f_min_over_grid"] = mean_curve.minCoeff();
            const int half = static_cast<int>(mean_curve.size()) / 2;
            sum.extra["f_trailing_mean"] =
                mean_curve.tail(mean_curve.size() - half).mean();
            sum.extra["plateau_mean"] =
                std::accumulate(plateaus.begin(), plateaus.end(), 0.0) /
                plateaus.size();
            sum.extra["plateau_median"] = median_of(plateaus);
            sum.extra["plateau_values"] = plateaus;
            Eigen::VectorXd c = 2.0 * (1.0 - mean_curve.array());
            LyapunovFit lf = lyapunov_fit(grid, c, 0.15, 0.85, cfg.fit_tmin,
                                          cfg.fit_tmax);
            sum.extra["lambda"] = lf.lambda;
            sum.extra["lambda_stderr"] = lf.stderr_;
            sum.extra["lambda_ok"] = lf.ok;
            sum.extra["lambda_window"] = {lf.t0, lf.t1};
        }
        res.sizes.push_back(std::move(sum));
    }

    if (res.sizes.size() >= 3) {
        std::vector<double> xs, ys;
        for (const auto& s : res.sizes) {
            xs.push_back(s.n);
            ys.push_back(s.mean);
        }
        res.fit = loglog_fit(xs, ys);
    }
    return res;
}

std::vector<nlohmann::json> ExperimentResult::records() const {
    std::vector<nlohmann::json> recs;
    for (const auto& s : sizes) {
        nlohmann::json r{
            {"schema_version", kSchemaVersion},
            {"kind", cfg.kind},
            {"n", s.n},
            {"degree", cfg.degree},
            {"samples", cfg.samples},
            {"seed", cfg.seed},
            {"tol", cfg.tol},
            {"j", cfg.j},
            {"disorder_w", cfg.disorder_w},
            {"quasiperiodic", cfg.quasiperiodic},
            {"interacting", cfg.interacting},
            {"grid", {{"tmin", cfg.tmin},
                      {"tmax", cfg.tmax},
                      {"tpoints", cfg.tpoints},
                      {"scale", cfg.log_time ? "log" : "lin"}}},
            {"mean", s.mean},
            {"stderr", s.stderr_two_stage},
            {"stderr_pooled", s.stderr_pooled},
            {"count", s.count},
            {"failures", s.failures},
            {"certificates", s.certificates}};
        for (auto it = s.extra.begin(); it != s.extra.end(); ++it)
            r[it.key()] = it.value();
        if (!s.raw_records.empty()) r["raw"] = s.raw_records;
        if (cfg.stamp) r["stamp"] = timestamp_now();
        recs.push_back(std::move(r));
    }
    if (fit.ok) {
        nlohmann::json r{{"schema_version", kSchemaVersion},
                         {"kind", cfg.kind},
                         {"record", "fit"},
                         {"exponent", fit.slope},
                         {"exponent_stderr", fit.slope_stderr},
                         {"log_prefactor", fit.intercept}};
        std::vector<int> ns;
        std::vector<double> means;
        for (const auto& s : sizes) {
            ns.push_back(s.n);
            means.push_back(s.mean);
        }
        r["sizes"] = ns;
        r["means"] = means;
        recs.push_back(std::move(r));
    }
    return recs;
}

std::string ExperimentResult::summary_csv_text() const {
    std::vector<SummaryRow> rows;
    for (const auto& s : sizes)
        rows.push_back({s.n, s.mean, s.stderr_two_stage, s.count});
    return summary_csv(rows);
}

} // namespace kg
