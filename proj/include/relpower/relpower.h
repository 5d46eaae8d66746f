#ifndef RELPOWER_RELPOWER_H
#define RELPOWER_RELPOWER_H

#include <stddef.h>
#include <stdint.h>

#if defined(RELPOWER_BUILDING_LIBRARY)
#define RP_API __attribute__((visibility("default")))
#else
#define RP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure rp_last_error() holds a
   message for the calling thread until its next failing call. */
typedef enum rp_status {
  RP_OK = 0,
  RP_ERR_INVALID_ARGUMENT = 1,
  RP_ERR_CONFIG = 2,
  RP_ERR_FORMAT = 3,
  RP_ERR_CAPACITY = 4,
  RP_ERR_RUNTIME = 5,
  RP_ERR_INTERNAL = 6
} rp_status;

RP_API const char* rp_last_error(void);
/* Offending config key after RP_ERR_CONFIG, otherwise "". */
RP_API const char* rp_last_error_key(void);
RP_API const char* rp_version(void);

typedef struct rp_problem rp_problem;
typedef struct rp_policy rp_policy;
typedef struct rp_channel_log rp_channel_log;
typedef struct rp_run rp_run;

typedef struct rp_channel_params {
  double slot_len_s;
  double bandwidth_hz;
  uint32_t packet_bits;
  double noise_w;
  const double* powers_w; /* ascending */
  size_t num_powers;
} rp_channel_params;

typedef struct rp_perf {
  double psi_w;
  double upsilon;
} rp_perf;

/* Minimum gain at which power_w carries `packets` packets in one slot. */
RP_API rp_status rp_breakpoint(const rp_channel_params* channel, double power_w, uint32_t packets,
                               double* gain_out);

/* Rayleigh small-scale fading with the given mean gain. */
RP_API rp_status rp_problem_create_exponential(const rp_channel_params* channel, double mean_gain,
                                               uint32_t horizon, uint32_t payload, double delta,
                                               rp_problem** out);
/* Finite gain support (absolute gains, ascending) with probabilities summing to 1. */
RP_API rp_status rp_problem_create_discrete(const rp_channel_params* channel, const double* gains,
                                            const double* probs, size_t count, uint32_t horizon,
                                            uint32_t payload, double delta, rp_problem** out);
RP_API void rp_problem_destroy(rp_problem* problem);
RP_API size_t rp_problem_num_states(const rp_problem* problem);
RP_API size_t rp_problem_num_levels(const rp_problem* problem);
RP_API size_t rp_problem_num_actions(const rp_problem* problem);
RP_API rp_status rp_problem_level_prob(const rp_problem* problem, size_t level, double* prob_out);

RP_API void rp_policy_destroy(rp_policy* policy);
RP_API rp_status rp_policy_constant(const rp_problem* problem, uint32_t action, rp_policy** out);
/* Power index chosen in state (slots left, packets left, channel level). */
RP_API rp_status rp_policy_action(const rp_problem* problem, const rp_policy* policy, uint32_t slots_left,
                                  uint32_t packets_left, uint32_t level, uint32_t* action_out);
RP_API int rp_policy_equal(const rp_policy* a, const rp_policy* b);
RP_API rp_status rp_policy_save(const rp_problem* problem, const rp_policy* policy, const char* path);
/* Loads a policy file together with the problem it was stored for. */
RP_API rp_status rp_policy_load(const char* path, rp_problem** problem_out, rp_policy** policy_out);

/* Exact performance of a policy on the model. */
RP_API rp_status rp_evaluate(const rp_problem* problem, const rp_policy* policy, rp_perf* out);
/* Lagrangian-optimal policy for one multiplier; f_out receives the dual function value. */
RP_API rp_status rp_solve_lambda(const rp_problem* problem, double lambda, rp_policy** policy_out,
                                 rp_perf* perf_out, double* f_out);

typedef enum rp_dual_outcome { RP_DUAL_OPTIMAL = 0, RP_DUAL_AT_ZERO = 1, RP_DUAL_INFEASIBLE = 2 } rp_dual_outcome;

typedef struct rp_dual_options {
  double lambda_min;
  double lambda_max;
  double theta;
  double xi;
} rp_dual_options;

typedef struct rp_dual_result {
  rp_dual_outcome outcome;
  double lambda_star;
  rp_perf perf;
  size_t iterations;
} rp_dual_result;

RP_API void rp_dual_options_default(rp_dual_options* options);
/* Model-based multiplier search. An infeasible instance is reported through
   result->outcome, not the status. policy_out may be NULL. */
RP_API rp_status rp_solve_dual(const rp_problem* problem, const rp_dual_options* options,
                               rp_dual_result* result, rp_policy** policy_out);

RP_API rp_status rp_channel_log_sample(const rp_problem* problem, uint64_t episodes, uint64_t seed,
                                       rp_channel_log** out);
RP_API void rp_channel_log_destroy(rp_channel_log* log);
RP_API uint64_t rp_channel_log_episodes(const rp_channel_log* log);
RP_API rp_status rp_channel_log_save(const rp_channel_log* log, const char* path);
RP_API rp_status rp_channel_log_load(const char* path, rp_channel_log** out);

/* Counter behind the 1/k part of the learning rate max(1/k, alpha_min). */
typedef enum rp_rate_schedule { RP_RATE_PER_VISIT = 0, RP_RATE_PER_EPISODE = 1 } rp_rate_schedule;

/* Backward Q-learning on a channel log; returns the greedy policy. */
RP_API rp_status rp_learn(const rp_problem* problem, const rp_channel_log* log, double lambda,
                          double alpha_min, rp_rate_schedule schedule, rp_policy** policy_out);

typedef struct rp_estimate {
  double psi_hat;
  double upsilon_hat;
  double f_hat;
  uint64_t episodes;
} rp_estimate;

/* Monte-Carlo replay of a policy over every logged episode. */
RP_API rp_status rp_test_policy(const rp_problem* problem, const rp_policy* policy, const rp_channel_log* log,
                                double lambda, rp_estimate* out);

typedef enum rp_model_free_exit {
  RP_MF_CONVERGED = 0,
  RP_MF_MAX_INFEASIBLE = 1,
  RP_MF_MIN_FEASIBLE = 2,
  RP_MF_OUT_OF_BRACKET = 3,
  RP_MF_ITERATION_CAP = 4
} rp_model_free_exit;

typedef struct rp_model_free_options {
  double lambda_min;
  double lambda_max;
  double theta_f;
  double alpha_min;
  rp_rate_schedule schedule;
} rp_model_free_options;

typedef struct rp_model_free_result {
  rp_model_free_exit exit;
  double lambda_star;
  rp_estimate estimate;
  size_t iterations;
} rp_model_free_result;

RP_API void rp_model_free_options_default(rp_model_free_options* options);
/* test_log may be NULL to test on the training log. policy_out may be NULL. */
RP_API rp_status rp_solve_dual_model_free(const rp_problem* problem, const rp_channel_log* log,
                                          const rp_channel_log* test_log, const rp_model_free_options* options,
                                          rp_model_free_result* result, rp_policy** policy_out);

/* Parses and validates a config file without running it. */
RP_API rp_status rp_config_validate(const char* path);
/* Runs the experiment named in a config file. An infeasible instance still
   returns RP_OK; check rp_run_infeasible. */
RP_API rp_status rp_run_config(const char* path, rp_run** out);
RP_API void rp_run_destroy(rp_run* run);
RP_API const char* rp_run_output_dir(const rp_run* run);
RP_API const char* rp_run_manifest_path(const rp_run* run);
RP_API int rp_run_infeasible(const rp_run* run);
RP_API size_t rp_run_num_files(const rp_run* run);
RP_API const char* rp_run_file(const rp_run* run, size_t index);
RP_API size_t rp_run_num_summary_lines(const rp_run* run);
RP_API const char* rp_run_summary_line(const rp_run* run, size_t index);

/* Replays a policy file on a channel log file, writing replay.csv and
   replay_summary.csv into output_dir. */
RP_API rp_status rp_replay(const char* policy_path, const char* log_path, const char* output_dir,
                           rp_estimate* out);

#ifdef __cplusplus
}
#endif

#endif
