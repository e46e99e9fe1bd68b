#ifndef ORBITCOUNT_H
#define ORBITCOUNT_H

/*
 * C interface to the orbitcount experiment runner.
 *
 * Usage: oc_run_experiment() executes one named experiment and returns an
 * opaque handle holding the canonical JSON report and the plot-ready CSVs;
 * accessors expose the bytes, oc_write_files() dumps them into a directory,
 * oc_experiment_free() releases the handle. All functions return an
 * oc_status error code (or NULL/-1 for accessors on bad handles);
 * oc_last_error() describes the most recent failure in the calling thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct oc_experiment oc_experiment;

typedef enum {
  OC_OK = 0,
  OC_ERR_NULL = 1,     /* null argument */
  OC_ERR_USAGE = 2,    /* unknown experiment / invalid options */
  OC_ERR_DOMAIN = 3,   /* mathematical precondition violated */
  OC_ERR_IO = 4,       /* file output failed */
  OC_ERR_INTERNAL = 5  /* unexpected failure */
} oc_status;

/*
 * Runs the experiment `name` (one of: farey, gaussian, quad-trace,
 * rel-count, form-equid, heis-count, heis-ball, chains, perp, approx,
 * hurwitz). `options_json` is a JSON object (NULL or "{}" for defaults)
 * with optional keys:
 *   "s" (number)              height bound / r-max
 *   "window" (array)          2 or 4 numbers
 *   "bins" (integer)
 *   "trace_window" (number)
 *   "field" (integer)         discriminant: -3, -4 or -8
 *   "tolerance" (number)
 *   "threads" (integer)
 *   "steps" (integer)
 *   "horoball_height" (number), "geodesic" (array of 2)   perp only
 *   "samples" (integer)       hurwitz only
 *   "eps" (number), "budget" (integer)                    chains only
 * On success *out owns the results and must be freed with
 * oc_experiment_free().
 */
oc_status oc_run_experiment(const char* name, const char* options_json,
                            oc_experiment** out);

/* The canonical report / CSV bytes; owned by the handle, valid until free.
 * Return NULL on a NULL handle. */
const char* oc_report_json(const oc_experiment* e);
const char* oc_points_csv(const oc_experiment* e);
const char* oc_histogram_csv(const oc_experiment* e);

/* 1 if the experiment verdict is pass, 0 if fail, -1 on a NULL handle. */
int oc_passed(const oc_experiment* e);

/* Writes report.json, points.csv and histogram.csv into `dir`
 * (an existing directory). */
oc_status oc_write_files(const oc_experiment* e, const char* dir);

void oc_experiment_free(oc_experiment* e);

/* Message for the most recent failing call in this thread ("" if none). */
const char* oc_last_error(void);

/* NULL-terminated list of the supported experiment names. */
const char* const* oc_experiment_names(void);

#ifdef __cplusplus
}
#endif

#endif
