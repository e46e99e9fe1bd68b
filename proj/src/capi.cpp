#include "orbitcount.h"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "orbitcount/experiments.hpp"
#include "orbitcount/quadirr.hpp"

namespace {

thread_local std::string g_lastError;

void setError(const std::string& msg) { g_lastError = msg; }

oc::ExperimentRequest parseRequest(const char* name, const char* optionsJson) {
  oc::ExperimentRequest req;
  req.name = name;
  if (optionsJson == nullptr || std::string(optionsJson).empty()) return req;
  nlohmann::json opts;
  try {
    opts = nlohmann::json::parse(optionsJson);
  } catch (const nlohmann::json::exception& e) {
    throw oc::UsageError(std::string("options: ") + e.what());
  }
  if (!opts.is_object()) throw oc::UsageError("options must be a JSON object");
  try {
    if (opts.contains("s")) req.s = opts["s"].get<double>();
    if (opts.contains("window"))
      req.window = opts["window"].get<std::vector<double>>();
    if (opts.contains("bins")) req.bins = opts["bins"].get<int>();
    if (opts.contains("trace_window"))
      req.traceWindow = opts["trace_window"].get<double>();
    if (opts.contains("field")) req.fieldDisc = opts["field"].get<int>();
    if (opts.contains("tolerance"))
      req.tolerance = opts["tolerance"].get<double>();
    if (opts.contains("threads")) req.threads = opts["threads"].get<int>();
    if (opts.contains("steps")) req.steps = opts["steps"].get<int>();
    if (opts.contains("horoball_height"))
      req.horoballHeight = opts["horoball_height"].get<double>();
    if (opts.contains("geodesic"))
      req.geodesic = opts["geodesic"].get<std::vector<double>>();
    if (opts.contains("samples")) req.samples = opts["samples"].get<int>();
    if (opts.contains("eps")) req.eps = opts["eps"].get<double>();
    if (opts.contains("budget")) req.budget = opts["budget"].get<long>();
  } catch (const nlohmann::json::exception& e) {
    throw oc::UsageError(std::string("options: ") + e.what());
  }
  return req;
}

}  // namespace

struct oc_experiment {
  oc::ExperimentOutput out;
};

extern "C" {

oc_status oc_run_experiment(const char* name, const char* options_json,
                            oc_experiment** out) {
  if (name == nullptr || out == nullptr) {
    setError("null argument");
    return OC_ERR_NULL;
  }
  *out = nullptr;
  try {
    oc::ExperimentRequest req = parseRequest(name, options_json);
    oc::ExperimentOutput result = oc::runExperiment(req);
    *out = new oc_experiment{std::move(result)};
    return OC_OK;
  } catch (const oc::UsageError& e) {
    setError(e.what());
    return OC_ERR_USAGE;
  } catch (const std::domain_error& e) {
    setError(e.what());
    return OC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    setError(e.what());
    return OC_ERR_INTERNAL;
  }
}

const char* oc_report_json(const oc_experiment* e) {
  return e == nullptr ? nullptr : e->out.reportJson.c_str();
}

const char* oc_points_csv(const oc_experiment* e) {
  return e == nullptr ? nullptr : e->out.pointsCsv.c_str();
}

const char* oc_histogram_csv(const oc_experiment* e) {
  return e == nullptr ? nullptr : e->out.histogramCsv.c_str();
}

int oc_passed(const oc_experiment* e) {
  return e == nullptr ? -1 : (e->out.passed ? 1 : 0);
}

oc_status oc_write_files(const oc_experiment* e, const char* dir) {
  if (e == nullptr || dir == nullptr) {
    setError("null argument");
    return OC_ERR_NULL;
  }
  const std::pair<const char*, const std::string*> files[] = {
      {"report.json", &e->out.reportJson},
      {"points.csv", &e->out.pointsCsv},
      {"histogram.csv", &e->out.histogramCsv},
  };
  for (const auto& [fname, content] : files) {
    std::ofstream f(std::string(dir) + "/" + fname, std::ios::binary);
    f << *content;
    if (!f) {
      setError(std::string("cannot write ") + fname + " in " + dir);
      return OC_ERR_IO;
    }
  }
  return OC_OK;
}

void oc_experiment_free(oc_experiment* e) { delete e; }

const char* oc_last_error(void) { return g_lastError.c_str(); }

const char* const* oc_experiment_names(void) {
  static std::vector<const char*> names = [] {
    std::vector<const char*> v;
    for (const std::string& n : oc::experimentNames()) v.push_back(n.c_str());
    v.push_back(nullptr);
    return v;
  }();
  return names.data();
}

}  // extern "C"
