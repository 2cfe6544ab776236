/* iafa - simulator and evaluation toolchain for IMPLY-based memristive
 * approximate full adders.
 *
 * C API of the shared library. All functions return an iafa_status; objects
 * with identity (micro-op programs, execution traces, analog runs, images)
 * are opaque handles that must be released with the matching *_free call.
 */
#ifndef IAFA_H
#define IAFA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IAFA_API __declspec(dllexport)
#else
#define IAFA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iafa_status {
  IAFA_OK = 0,
  IAFA_ERROR_INVALID_ARGUMENT = 1,
  IAFA_ERROR_OUT_OF_RANGE = 2,
  IAFA_ERROR_UNSUPPORTED = 3,
  IAFA_ERROR_VALIDATION = 4,
  IAFA_ERROR_IO = 5,
  IAFA_ERROR_INTERNAL = 6
} iafa_status;

IAFA_API const char *iafa_status_message(iafa_status status);
IAFA_API const char *iafa_version(void);

/* ---------------------------------------------------------------- cells */

typedef enum iafa_cell {
  IAFA_CELL_ICIS1 = 0,
  IAFA_CELL_ICIS2 = 1,
  IAFA_CELL_ICIS3 = 2,
  IAFA_CELL_ECIS = 3,
  IAFA_CELL_EXACT = 4
} iafa_cell;

IAFA_API const char *iafa_cell_name(iafa_cell cell);
IAFA_API iafa_status iafa_cell_from_name(const char *name, iafa_cell *cell);

/* Per-cell circuit constants: computational steps, memristors, work
 * registers and the reference per-cell energy in nJ. Any output pointer
 * may be NULL. */
IAFA_API iafa_status iafa_cell_info(iafa_cell cell, int *steps,
                                    int *memristors, int *work_registers,
                                    double *energy_nj);

/* 8-row truth table in input order A,B,C = 000..111.
 * The _executed variant runs the cell's micro-op program through the logic
 * engine instead of using the behavioural table (EXACT is unsupported). */
IAFA_API iafa_status iafa_cell_truth_table(iafa_cell cell, uint8_t sum[8],
                                           uint8_t cout[8]);
IAFA_API iafa_status iafa_cell_truth_table_executed(iafa_cell cell,
                                                    uint8_t sum[8],
                                                    uint8_t cout[8]);

IAFA_API iafa_status iafa_cell_error_metrics(iafa_cell cell, int *ed,
                                             double *med, double *nmed,
                                             double *er_sum, double *er_cout);

/* --------------------------------------------- micro-programs and traces */

typedef struct iafa_program iafa_program;
typedef struct iafa_trace iafa_trace;

IAFA_API iafa_status iafa_program_for_cell(iafa_cell cell,
                                           iafa_program **program);
IAFA_API void iafa_program_free(iafa_program *program);
IAFA_API int iafa_program_steps(const iafa_program *program);
IAFA_API int iafa_program_registers(const iafa_program *program);
IAFA_API const char *iafa_program_register_name(const iafa_program *program,
                                                int index);
/* Number of serial-constraint / binding violations (0 == valid). */
IAFA_API iafa_status iafa_program_validate(const iafa_program *program,
                                           int *violations);

IAFA_API iafa_status iafa_program_run(const iafa_program *program, int a,
                                      int b, int c, iafa_trace **trace);
IAFA_API void iafa_trace_free(iafa_trace *trace);
IAFA_API int iafa_trace_steps(const iafa_trace *trace);
IAFA_API int iafa_trace_sum(const iafa_trace *trace);
IAFA_API int iafa_trace_cout(const iafa_trace *trace);
/* Logic state of a register after `step` ops (step 0 = initial state). */
IAFA_API iafa_status iafa_trace_state(const iafa_trace *trace, int step,
                                      int reg, int *bit);
/* CSV columns: step, time_us (step x 30), reg_name, logic_state. */
IAFA_API iafa_status iafa_trace_write_csv(const iafa_trace *trace,
                                          const char *path);

/* ----------------------------------------------------- AFA design space */

typedef struct iafa_design_entry {
  char name[8];        /* AFA1..AFA16 */
  char provenance[16]; /* cout-flip(k) or sum-flip(k) */
  uint8_t sum[8];
  uint8_t cout[8];
  int er_sum_eighths;
  int er_cout_eighths;
  int ed;
  double med;
  double nmed;
  int metric_pass;       /* passes the ER/ED constraints */
  int accepted;          /* metric_pass and not a prior-art duplicate */
  int cost_flagged;      /* serial implementation cost exceeds ICIS cells */
  char duplicate_of[8];  /* prior-art design with the identical table */
} iafa_design_entry;

typedef enum iafa_design_family {
  IAFA_FAMILY_COUT_FLIP = 0, /* AFA1..AFA8 */
  IAFA_FAMILY_SUM_FLIP = 1   /* AFA9..AFA16 */
} iafa_design_family;

IAFA_API iafa_status iafa_design_afa(iafa_design_family family,
                                     iafa_design_entry entries[8]);

typedef struct iafa_equivalence_finding {
  char left[8];
  char right[8];
  int identical;
} iafa_equivalence_finding;

/* Literal table comparisons between the accepted sum-flip candidates and the
 * end-row cout-flip candidates (AFA9/AFA16 against AFA1/AFA8). */
IAFA_API iafa_status
iafa_design_equivalence(iafa_equivalence_finding findings[4]);

/* ------------------------------------------------------------------ RCA */

typedef struct iafa_rca_config {
  int n;           /* adder width in bits */
  int approx_lsbs; /* approximate cells in the least significant positions */
  iafa_cell cell;  /* cell kind used for the approximate positions */
} iafa_rca_config;

IAFA_API iafa_status iafa_rca_add(const iafa_rca_config *config, uint64_t a,
                                  uint64_t b, int carry_in, uint64_t *result);
IAFA_API iafa_status iafa_rca_step_count(const iafa_rca_config *config,
                                         int *steps);
IAFA_API iafa_status iafa_rca_memristor_count(int n, int *count);
IAFA_API iafa_status iafa_rca_energy_nj(const iafa_rca_config *config,
                                        double *energy_nj);

typedef struct iafa_error_report {
  double er;   /* fraction of operand pairs with a wrong result */
  double med;  /* mean |approx - exact| over all pairs */
  double nmed; /* med / max_output */
  uint64_t max_output;
  uint64_t sample_count;
} iafa_error_report;

/* Exhaustive enumeration of all 2^(2n) operand pairs with carry-in 0.
 * Refuses widths above n = 12. */
IAFA_API iafa_status iafa_rca_exhaustive_metrics(const iafa_rca_config *config,
                                                 iafa_error_report *report);

/* ------------------------------------------------- analog (VTEAM) model */

typedef struct iafa_vteam_params {
  double v_off;      /* V */
  double v_on;       /* V */
  double alpha_off;
  double alpha_on;
  double r_off;      /* ohm */
  double r_on;       /* ohm */
  double k_on_nm_s;  /* nm/s */
  double k_off_nm_s; /* nm/s */
  double w_off_nm;
  double w_on_nm;
  double w_c_nm;
  double a_off_nm;
  double a_on_nm;
  double v_set;   /* V */
  double v_reset; /* V */
  double v_cond;  /* V */
  double r_g;     /* ohm */
  double t_pulse_s;
  /* simulator settings */
  double dt_s;       /* fixed integration step */
  double r_read;     /* read-out threshold: R < r_read reads as logic 1 */
  double read_guard; /* flag reads with r_read/guard < R < r_read*guard */
} iafa_vteam_params;

IAFA_API void iafa_vteam_defaults(iafa_vteam_params *params);
IAFA_API double iafa_vteam_dwdt(const iafa_vteam_params *params, double w_nm,
                                double v);

typedef struct iafa_analog_run iafa_analog_run;

/* Transient simulation of a cell's micro-op program. `params` may be NULL
 * for the defaults. */
IAFA_API iafa_status iafa_analog_run_program(iafa_cell cell, int a, int b,
                                             int c,
                                             const iafa_vteam_params *params,
                                             iafa_analog_run **run);
IAFA_API void iafa_analog_run_free(iafa_analog_run *run);
IAFA_API int iafa_analog_sum(const iafa_analog_run *run);
IAFA_API int iafa_analog_cout(const iafa_analog_run *run);
/* Nonzero when an output resistance fell inside the read guard band. */
IAFA_API int iafa_analog_ambiguous(const iafa_analog_run *run);
IAFA_API double iafa_analog_energy_nj(const iafa_analog_run *run);
IAFA_API iafa_status iafa_analog_final_resistance(const iafa_analog_run *run,
                                                  int reg, double *r_ohm);
/* CSV columns: time_s, reg_name, w_nm, r_ohm, v_v, i_a, energy_j. */
IAFA_API iafa_status iafa_analog_write_csv(const iafa_analog_run *run,
                                           const char *path);

/* Mean transient energy over the 8 input states, in nJ. */
IAFA_API iafa_status iafa_analog_cell_energy_nj(iafa_cell cell,
                                                const iafa_vteam_params *params,
                                                double *energy_nj);

/* ----------------------------------------------------------------- images */

typedef struct iafa_image iafa_image;

/* Binary PGM (P5) and PPM (P6). */
IAFA_API iafa_status iafa_image_read(const char *path, iafa_image **image);
IAFA_API iafa_status iafa_image_write(const iafa_image *image,
                                      const char *path);
IAFA_API void iafa_image_free(iafa_image *image);
IAFA_API int iafa_image_width(const iafa_image *image);
IAFA_API int iafa_image_height(const iafa_image *image);
IAFA_API int iafa_image_channels(const iafa_image *image);
IAFA_API int iafa_image_maxval(const iafa_image *image);

typedef enum iafa_image_op {
  IAFA_IMAGE_ADD = 0,  /* pixel-wise addition (in1 + in2, both gray) */
  IAFA_IMAGE_SUB = 1,  /* |in1 - in2| via two's-complement addition */
  IAFA_IMAGE_GRAY = 2  /* (R+G+B)/3 of an RGB in1; in2 must be NULL */
} iafa_image_op;

/* Runs an application through the configured approximate RCA and through the
 * exact reference. `clip` saturates addition outputs at 255 instead of
 * keeping the full 9-bit range. Either output pointer may be NULL. */
IAFA_API iafa_status iafa_image_apply(iafa_image_op op, const iafa_image *in1,
                                      const iafa_image *in2,
                                      const iafa_rca_config *config, int clip,
                                      iafa_image **out_approx,
                                      iafa_image **out_exact);

/* PSNR in dB; identical images yield +infinity. */
IAFA_API iafa_status iafa_image_psnr(const iafa_image *reference,
                                     const iafa_image *test, double peak,
                                     double *db);
/* Global SSIM and mean windowed SSIM (11x11 Gaussian, sigma 1.5). */
IAFA_API iafa_status iafa_image_ssim(const iafa_image *reference,
                                     const iafa_image *test, double *ssim,
                                     double *mssim);

/* ------------------------------------------------------- figures of merit */

typedef struct iafa_fom_inputs {
  double energy_nj;          /* adder energy estimate */
  double steps;              /* adder computational steps */
  double nmed;               /* scenario NMED */
  double psnr_avg_db;        /* mean application PSNR */
  double baseline_steps;     /* exact serial adder steps (176 at n=8) */
  double baseline_energy_nj; /* exact serial adder energy (15.26872 at n=8) */
} iafa_fom_inputs;

IAFA_API void iafa_fom_defaults(iafa_fom_inputs *inputs);
/* fom1 = (energy_nj * steps) / ((1 - nmed) * psnr_avg) */
IAFA_API iafa_status iafa_fom1(const iafa_fom_inputs *inputs, double *value);
/* fom2 = energy_saving * delay_saving * psnr_avg^2 */
IAFA_API iafa_status iafa_fom2(const iafa_fom_inputs *inputs, double *value);

/* ------------------------------------------------------------- reproduce */

/* Regenerates one of the reference tables (4, 5, 9, 11, 13, 15, 19, 20)
 * from scratch and diffs it against the published values. Writes a
 * plain-text report into `buffer` (truncating if needed; `needed` receives
 * the full length including the terminator) and sets *ok to 1 when every
 * entry is within its tolerance. */
IAFA_API iafa_status iafa_reproduce_table(int table, char *buffer,
                                          size_t buffer_size, size_t *needed,
                                          int *ok);

#ifdef __cplusplus
}
#endif

#endif /* IAFA_H */
