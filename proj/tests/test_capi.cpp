// Tests for the C interface in orbitcount.h: running experiments, accessors,
// file output, error codes, and report determinism across thread counts.
// Links only the shared library, exactly like an external consumer.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "orbitcount.h"

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

struct Handle {
  oc_experiment* e = nullptr;
  ~Handle() { oc_experiment_free(e); }
};

}  // namespace

TEST_CASE("experiment names") {
  const char* const* names = oc_experiment_names();
  REQUIRE(names != nullptr);
  int n = 0;
  bool sawFarey = false, sawHurwitz = false;
  for (; names[n] != nullptr; ++n) {
    sawFarey = sawFarey || std::string(names[n]) == "farey";
    sawHurwitz = sawHurwitz || std::string(names[n]) == "hurwitz";
  }
  CHECK(n == 11);
  CHECK(sawFarey);
  CHECK(sawHurwitz);
}

TEST_CASE("run, accessors, write_files") {
  Handle h;
  REQUIRE(oc_run_experiment("farey", "{\"s\": 200}", &h.e) == OC_OK);
  REQUIRE(h.e != nullptr);
  CHECK(oc_passed(h.e) == 1);

  std::string report = oc_report_json(h.e);
  CHECK(report.find("\"experiment\": \"farey\"") != std::string::npos);
  CHECK(report.find("\"schema_version\": 1") != std::string::npos);
  std::string points = oc_points_csv(h.e);
  CHECK(points.rfind("value_re,value_im,height", 0) == 0);
  std::string hist = oc_histogram_csv(h.e);
  CHECK(hist.rfind("bin_lo,bin_hi,mass_empirical,mass_target", 0) == 0);

  auto dir = std::filesystem::temp_directory_path() / "oc_capi_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  REQUIRE(oc_write_files(h.e, dir.c_str()) == OC_OK);
  CHECK(slurp(dir / "report.json") == report);
  CHECK(slurp(dir / "points.csv") == points);
  CHECK(slurp(dir / "histogram.csv") == hist);
  std::filesystem::remove_all(dir);

  // missing directory -> IO error
  CHECK(oc_write_files(h.e, (dir / "nope").c_str()) == OC_ERR_IO);
  CHECK(std::string(oc_last_error()).find("report.json") != std::string::npos);
}

TEST_CASE("default options") {
  Handle a, b;
  REQUIRE(oc_run_experiment("perp", nullptr, &a.e) == OC_OK);
  REQUIRE(oc_run_experiment("perp", "{}", &b.e) == OC_OK);
  CHECK(oc_passed(a.e) == 1);
  CHECK(std::string(oc_report_json(a.e)) == oc_report_json(b.e));
}

TEST_CASE("error paths") {
  oc_experiment* e = nullptr;
  CHECK(oc_run_experiment(nullptr, "{}", &e) == OC_ERR_NULL);
  Handle h;
  CHECK(oc_run_experiment("farey", "{}", nullptr) == OC_ERR_NULL);

  CHECK(oc_run_experiment("no-such-experiment", "{}", &h.e) == OC_ERR_USAGE);
  CHECK(std::string(oc_last_error()).find("no-such-experiment") !=
        std::string::npos);
  CHECK(h.e == nullptr);

  CHECK(oc_run_experiment("farey", "not json", &h.e) == OC_ERR_USAGE);
  CHECK(oc_run_experiment("farey", "[1,2]", &h.e) == OC_ERR_USAGE);
  CHECK(oc_run_experiment("farey", "{\"s\": \"big\"}", &h.e) == OC_ERR_USAGE);

  // window entirely inside a removed root neighborhood -> usage error
  CHECK(oc_run_experiment("form-equid", "{\"s\": 50, \"window\": [1.5, 1.7]}",
                          &h.e) == OC_ERR_USAGE);
  // horoball low enough to meet the geodesic -> mathematical domain error
  CHECK(oc_run_experiment("perp", "{\"horoball_height\": 0.3}", &h.e) ==
        OC_ERR_DOMAIN);
  CHECK(oc_last_error()[0] != '\0');

  // accessors on a null handle
  CHECK(oc_report_json(nullptr) == nullptr);
  CHECK(oc_points_csv(nullptr) == nullptr);
  CHECK(oc_histogram_csv(nullptr) == nullptr);
  CHECK(oc_passed(nullptr) == -1);
  CHECK(oc_write_files(nullptr, ".") == OC_ERR_NULL);
}

TEST_CASE("reports byte-identical across thread counts") {
  for (const char* name : {"farey", "quad-trace", "heis-count"}) {
    std::string opts1, opts8;
    if (std::string(name) == "farey") {
      opts1 = "{\"s\": 300, \"threads\": 1}";
      opts8 = "{\"s\": 300, \"threads\": 8}";
    } else if (std::string(name) == "quad-trace") {
      opts1 = "{\"s\": 1500, \"threads\": 1}";
      opts8 = "{\"s\": 1500, \"threads\": 8}";
    } else {
      opts1 = "{\"s\": 8, \"threads\": 1}";
      opts8 = "{\"s\": 8, \"threads\": 8}";
    }
    Handle a, b;
    REQUIRE(oc_run_experiment(name, opts1.c_str(), &a.e) == OC_OK);
    REQUIRE(oc_run_experiment(name, opts8.c_str(), &b.e) == OC_OK);
    CHECK(std::string(oc_report_json(a.e)) == oc_report_json(b.e));
    CHECK(std::string(oc_points_csv(a.e)) == oc_points_csv(b.e));
    CHECK(std::string(oc_histogram_csv(a.e)) == oc_histogram_csv(b.e));
  }
}
