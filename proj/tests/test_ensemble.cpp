#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "kg/ensemble.hpp"
#include "kg/io.hpp"

using namespace kg;

namespace {
std::string dump_records(const ExperimentResult& r) {
    std::string text;
    for (const auto& rec : r.records()) text += rec.dump() + "\n";
    return text;
}
} // namespace

TEST_CASE("partition enumeration drives the degree-two ensemble") {
    RunConfig cfg;
    cfg.kind = "dimension";
    cfg.degree = 2;
    cfg.samples = -1;
    cfg.sizes = {9};
    ExperimentResult r = run_experiment(cfg);
    REQUIRE(r.sizes.size() == 1);
    CHECK(r.sizes[0].count == 4);
    CHECK(r.sizes[0].failures == 0);
    CHECK(r.sizes[0].certificates.size() == 4);
}

TEST_CASE("clean cycle dimensions average like the length table") {
    RunConfig cfg;
    cfg.kind = "dimension";
    cfg.degree = 2;
    cfg.samples = -1;
    cfg.sizes = {6};
    ExperimentResult r = run_experiment(cfg);
    // partitions {6} and {3,3}: one 9-dimensional and one 3-dimensional graph
    CHECK(r.sizes[0].count == 2);
    CHECK(r.sizes[0].mean == doctest::Approx(6.0));
}

TEST_CASE("records are reproducible bit for bit") {
    RunConfig cfg;
    cfg.kind = "free-krylov";
    cfg.degree = 3;
    cfg.samples = 3;
    cfg.sizes = {8};
    cfg.disorder_w = 0.5;
    cfg.seed = 42;
    std::string a = dump_records(run_experiment(cfg));
    std::string b = dump_records(run_experiment(cfg));
    CHECK(a == b);
    CHECK(!a.empty());

    cfg.seed = 43;
    CHECK(dump_records(run_experiment(cfg)) != a);
}

TEST_CASE("generic site energies push cubic graphs to the gap-count ceiling") {
    RunConfig cfg;
    cfg.kind = "dimension";
    cfg.degree = 3;
    cfg.samples = 2;
    cfg.sizes = {6};
    cfg.disorder_w = 0.5;
    cfg.seed = 7;
    ExperimentResult r = run_experiment(cfg);
    CHECK(r.sizes[0].mean == doctest::Approx(31.0)); // 6*6 - 6 + 1
    CHECK(r.sizes[0].stderr_two_stage == doctest::Approx(0.0));
}

TEST_CASE("a single run is its own average") {
    RunConfig cfg;
    cfg.kind = "free-entanglement";
    cfg.degree = 3;
    cfg.samples = 1;
    cfg.sizes = {8};
    cfg.tpoints = 30;
    cfg.tmax = 100.0;
    ExperimentResult r = run_experiment(cfg);
    CHECK(r.sizes[0].count == 1);
    CHECK(r.sizes[0].stderr_two_stage == 0.0);
    CHECK(r.sizes[0].mean > 0.0);
}

TEST_CASE("records carry the schema version and config echo") {
    RunConfig cfg;
    cfg.kind = "dimension";
    cfg.degree = 2;
    cfg.samples = -1;
    cfg.sizes = {6, 9, 12};
    ExperimentResult r = run_experiment(cfg);
    auto recs = r.records();
    REQUIRE(recs.size() == 4); // three sizes plus the fit
    for (const auto& rec : recs) {
        CHECK(rec.at("schema_version").get<int>() == kSchemaVersion);
        CHECK(rec.at("kind").get<std::string>() == "dimension");
    }
    CHECK(recs.back().at("record").get<std::string>() == "fit");
    CHECK(recs[0].at("n").get<int>() == 6);

    std::string csv = r.summary_csv_text();
    CHECK(csv.rfind("N,mean,stderr,count", 0) == 0);
}

TEST_CASE("worker count never changes the numbers") {
    RunConfig cfg;
    cfg.kind = "dimension";
    cfg.degree = 3;
    cfg.samples = 4;
    cfg.sizes = {8};
    cfg.disorder_w = 0.5;
    cfg.seed = 11;
    cfg.workers = 1;
    std::string a = dump_records(run_experiment(cfg));
    cfg.workers = 3;
    std::string b = dump_records(run_experiment(cfg));
    CHECK(a == b);
}

TEST_CASE("csv columns round trip through a file") {
    const char* path = "fit_roundtrip.csv";
    {
        std::ofstream out(path);
        out << "N,mean,stderr,count\n10,2.5,0.1,4\n20,9.5,0.2,4\n30,21.0,0.3,4\n";
    }
    CsvColumns cols = read_csv_columns(path, "N", "mean");
    std::remove(path);
    REQUIRE(cols.x.size() == 3);
    CHECK(cols.x[1] == doctest::Approx(20.0));
    CHECK(cols.y[2] == doctest::Approx(21.0));
}

TEST_CASE("scaling fits recover exact power laws") {
    std::vector<double> xs, pure, poly;
    for (int l = 4; l <= 40; ++l) {
        xs.push_back(l);
        pure.push_back(3.7 * std::pow(l, 1.3));
        poly.push_back(double(l) * l - l + 1);
    }
    FitResult a = loglog_fit(xs, pure);
    CHECK(a.ok);
    CHECK(a.slope == doctest::Approx(1.3).epsilon(1e-10));
    FitResult b = raw_power_fit(xs, pure);
    CHECK(b.ok);
    CHECK(b.slope == doctest::Approx(1.3).epsilon(1e-8));
    CHECK(b.intercept == doctest::Approx(std::log(3.7)).epsilon(1e-6));
    // subleading terms push the equal-weight log fit above the raw-space one
    FitResult c = loglog_fit(xs, poly);
    FitResult d = raw_power_fit(xs, poly);
    CHECK(d.slope == doctest::Approx(2.0364).epsilon(1e-3));
    CHECK(c.slope > d.slope);
}
