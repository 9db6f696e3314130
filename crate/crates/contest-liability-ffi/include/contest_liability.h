/* C interface of the contest-liability library. Generated by cbindgen; do not edit. */

#ifndef CONTEST_LIABILITY_H
#define CONTEST_LIABILITY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible function.
typedef enum LcStatus {
  // Success.
  LcStatus_Ok = 0,
  // A required pointer argument was null.
  LcStatus_NullPointer = 1,
  // A parameter violated its domain constraint.
  LcStatus_InvalidParameter = 2,
  // A cheating decision was not 0 or 1.
  LcStatus_InvalidDecision = 3,
  // An index was out of range.
  LcStatus_IndexOutOfRange = 4,
  // The requested quantity is undefined at these parameters
  // (zero expected fine for the manager threshold).
  LcStatus_Undefined = 5,
  // An unknown treatment or policy name.
  LcStatus_UnknownName = 6,
  // The simulation rejected its configuration.
  LcStatus_SimulationFailed = 7,
} LcStatus;

// Fine regime of a parameter point.
typedef enum LcFineRegime {
  LcFineRegime_BelowTheoremScope = 0,
  LcFineRegime_BackfireRange = 1,
  LcFineRegime_KnifeEdge = 2,
  LcFineRegime_HighFineRange = 3,
} LcFineRegime;

// Manager regime of a parameter point.
typedef enum LcManagerRegime {
  LcManagerRegime_ManagersCheat = 0,
  LcManagerRegime_ManagersIndifferent = 1,
  LcManagerRegime_ManagersClean = 2,
} LcManagerRegime;

// Structural kind of an equilibrium.
typedef enum LcEquilibriumKind {
  LcEquilibriumKind_PureSymmetric = 0,
  LcEquilibriumKind_PureAsymmetric = 1,
  LcEquilibriumKind_MixedContestants = 2,
} LcEquilibriumKind;

// Opaque equilibrium-set handle.
typedef struct LcEquilibriumSet LcEquilibriumSet;

// Opaque parameter handle.
typedef struct LcParams LcParams;

// Aggregate of a simulation batch.
typedef struct LcBatchSummary {
  double overall_cheat_rate;
  double contestant_cheat_rate;
  double manager_cheat_rate;
  double mean_effort;
  double mean_over_dissipation;
  double matching_probability;
  double caught_rate_given_cheating;
  uint64_t cheating_team_rounds;
  uint64_t caught_team_rounds;
} LcBatchSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a parameter handle. On success writes the handle to `out`;
// release it with `lc_params_free`.
enum LcStatus lc_params_new(double delta,
                            double revenue_share,
                            double audit_prob,
                            double fine,
                            double liability_share,
                            double prize,
                            struct LcParams **out);

// Creates a normalized (prize 1) handle from the expected fine per unit of
// the prize.
enum LcStatus lc_params_from_pf_rel(double delta,
                                    double revenue_share,
                                    double liability_share,
                                    double pf_rel,
                                    struct LcParams **out);

// Creates the calibrated parameters of a named treatment
// (Jo_H, Jo_L, Ind_H, Ind_L, Jo_40, Ind_40).
enum LcStatus lc_params_treatment(const char *name, struct LcParams **out);

// Releases a parameter handle. Null is accepted and ignored.
void lc_params_free(struct LcParams *handle);

// Expected fine per unit of the prize.
enum LcStatus lc_params_pf_rel(const struct LcParams *handle, double *out);

// Tullock prize share of the own team. Decisions are 0 (clean) or 1 (cheat).
enum LcStatus lc_prize_share(const struct LcParams *handle,
                             double own_effort,
                             double rival_effort,
                             int own_decision,
                             int rival_decision,
                             double *out);

// Contestant's expected payoff at the given efforts and decisions.
enum LcStatus lc_contestant_payoff(const struct LcParams *handle,
                                   double own_effort,
                                   double rival_effort,
                                   int own_decision,
                                   int rival_decision,
                                   double *out);

// Manager's expected payoff at the given efforts and decisions.
enum LcStatus lc_manager_payoff(const struct LcParams *handle,
                                double own_effort,
                                double rival_effort,
                                int own_decision,
                                int rival_decision,
                                double *out);

// Closed-form equilibrium effort of the effort stage.
enum LcStatus lc_equilibrium_effort(const struct LcParams *handle,
                                    int own_decision,
                                    int rival_decision,
                                    double *out);

// Best response to the rival's effort, clamped at zero.
enum LcStatus lc_best_response_effort(const struct LcParams *handle,
                                      double rival_effort,
                                      int own_decision,
                                      int rival_decision,
                                      double *out);

// Rival-team cheating probability at which a contestant is indifferent.
// May fall outside [0, 1].
enum LcStatus lc_mu_hat(const struct LcParams *handle, double *out);

// Liability share at which a manager is indifferent. Returns `Undefined`
// when the expected fine is zero (managers then cheat for every share).
enum LcStatus lc_eta_hat(const struct LcParams *handle, double *out);

// Fine regime, manager regime, and contestant indifference point of a
// parameter point. Any output pointer may be null to skip that value.
enum LcStatus lc_classify_region(const struct LcParams *handle,
                                 enum LcFineRegime *out_fine_regime,
                                 enum LcManagerRegime *out_manager_regime,
                                 double *out_mu_hat);

// Enumerates all generic equilibria. On success writes a handle to `out`;
// release it with `lc_equilibrium_set_free`.
enum LcStatus lc_enumerate_equilibria(const struct LcParams *handle, struct LcEquilibriumSet **out);

// Releases an equilibrium-set handle. Null is accepted and ignored.
void lc_equilibrium_set_free(struct LcEquilibriumSet *handle);

// Number of equilibria in the set.
enum LcStatus lc_equilibrium_set_len(const struct LcEquilibriumSet *handle, size_t *out);

// Copies one equilibrium into caller-provided storage: the four intention
// probabilities in (m1, c1, m2, c2) order, the structural kind, and the
// average cheating probability. Any output pointer may be null.
enum LcStatus lc_equilibrium_set_get(const struct LcEquilibriumSet *handle,
                                     size_t index,
                                     double *out_sigmas,
                                     enum LcEquilibriumKind *out_kind,
                                     double *out_avg_cheat_prob);

// Minimum and maximum average cheating probability over the set.
enum LcStatus lc_equilibrium_set_bounds(const struct LcEquilibriumSet *handle,
                                        double *out_low,
                                        double *out_high);

// Probability that both teams implement the same decision, from the four
// intention probabilities in (m1, c1, m2, c2) order.
enum LcStatus lc_matching_probability(const double *sigmas, double *out);

// Runs a batch of seeded sessions under equilibrium play at a named
// treatment and writes the aggregate. `equilibrium_index` selects an
// equilibrium by enumeration position; pass a negative value for the one
// with the lowest average cheating probability.
enum LcStatus lc_simulate_batch(const char *treatment,
                                int equilibrium_index,
                                size_t sessions,
                                uint64_t seed,
                                struct LcBatchSummary *out);

// Static description of a status code.
const char *lc_status_message(enum LcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONTEST_LIABILITY_H */
