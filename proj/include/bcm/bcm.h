/* bcm — model-oriented belief change on finite bases.
 *
 * C interface of the shared library. All functions are thread-compatible:
 * distinct handles may be used concurrently; a single handle must not be
 * shared between threads without external synchronization (systems are
 * immutable after creation, reports after construction).
 *
 * Every operation either returns BCM_OK and fills *out, or returns an error
 * status and fills *error with a message the caller frees via bcm_free().
 */

#ifndef BCM_BCM_H
#define BCM_BCM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef BCM_API
#define BCM_API __attribute__((visibility("default")))
#endif

typedef struct bcm_system bcm_system;
typedef struct bcm_report bcm_report;

/* Status values double as CLI exit codes. */
typedef enum bcm_status {
  BCM_OK = 0,
  BCM_INCOMPATIBLE = 2, /* no representable candidate; error text carries a witness */
  BCM_PARSE_ERROR = 3,  /* malformed formula, base, model spec or model file */
  BCM_BOUND_ERROR = 4,  /* enumeration limit exceeded, or no finite catalog */
  BCM_USAGE_ERROR = 5   /* bad arguments, unknown logic, precondition violation */
} bcm_status;

/* Creates a satisfaction system.
 *   logic:     prop | prop-t | prop-p | horn | k3 | p3 | goedel | ltlx | qint
 *   atoms_csv: signature, e.g. "p,q". Required for the valuation logics;
 *              optional for ltlx (defaults to the atoms of each base);
 *              ignored by qint.
 *   theta:     goedel threshold as an exact rational in (0,1], e.g. "1/2",
 *              "0.3" or "1". NULL means "1/2". Ignored by other logics.
 */
BCM_API bcm_status bcm_system_create(const char* logic, const char* atoms_csv,
                                     const char* theta, bcm_system** out, char** error);
BCM_API void bcm_system_destroy(bcm_system* system);

/* Model-set specifications:
 *   valuation logics: "{tt,tf}" explicit names, "mod-of: <formula>",
 *                     "complement <spec>", "union <spec> <spec>",
 *                     "minus <spec> <spec>", parentheses allowed.
 *   ltlx:             "mod-of-base" (the models of the current base, used to
 *                     demonstrate eviction incompatibility) or a
 *                     comma-separated list of Kripke model files.
 *   qint:             interval syntax "[0,1] u (2,3] \ {5/2}".
 *
 * policy is "lex-min" (default when NULL) or "lex-max".
 * keep_on_incompatible: when nonzero, an incompatible change keeps the base
 * intact and reports it instead of failing (exit path for --on-incompatible
 * keep).
 */
BCM_API bcm_status bcm_evict(bcm_system* system, const char* base_text,
                             const char* models_spec, const char* policy,
                             int keep_on_incompatible, bcm_report** out, char** error);
BCM_API bcm_status bcm_receive(bcm_system* system, const char* base_text,
                               const char* models_spec, const char* policy,
                               int keep_on_incompatible, bcm_report** out, char** error);

/* Compatibility verdict of the system (one line per operation kind). */
BCM_API bcm_status bcm_compat(bcm_system* system, bcm_report** out, char** error);

/* Runs the exhaustive postulate grids for both change operations against
 * the system's catalog. Finite-catalog systems only. */
BCM_API bcm_status bcm_postulates(bcm_system* system, bcm_report** out, char** error);

/* Hasse diagram of the powerset with representable sets marked, DOT syntax.
 * highlight_spec (nullable) draws thick arrows from the highlighted set to
 * its maximal representable subsets. Finite-catalog systems only. */
BCM_API bcm_status bcm_lattice(bcm_system* system, const char* highlight_spec,
                               bcm_report** out, char** error);

/* Report accessors. Returned strings are owned by the report. */
BCM_API const char* bcm_report_text(const bcm_report* report);
BCM_API const char* bcm_report_json(const bcm_report* report);
BCM_API void bcm_report_destroy(bcm_report* report);

BCM_API void bcm_free(char* owned);
BCM_API const char* bcm_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BCM_BCM_H */
