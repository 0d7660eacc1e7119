#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "htsec/source_model.hpp"

namespace htsec {

/// Auxiliary channel P_{U|X}: the single-letter optimization variable.
/// Rows are conditioned on X, columns index U.
struct AuxChannel {
  CondPmf pux;

  int u_size() const { return pux.out_size(); }
  int x_size() const { return pux.in_size(); }

  static AuxChannel constant(int x_size, int u_size);
  static AuxChannel identity_embedding(int x_size, int u_size);
};

/// One evaluated point of the rate-exponent-equivocation region:
/// rate_needed = I_P(U;X), exponent = I_P(U;Y),
/// delta0_cap = (1-eps) H_P(X|UZ) + eps H_P(X|Z),
/// delta1_cap = (1-eps) H_Q(X|UZ) + eps H_Q(X|Z).
struct RegionPoint {
  double rate_needed = 0;
  double exponent = 0;
  double delta0_cap = 0;
  double delta1_cap = 0;
  double epsilon = 0;
};

enum class Baseline { Optimal, EpsZeroH0Only, NoSecurity };

struct ExponentQuery {
  double rate = 0;
  double delta0 = 0;
  double delta1 = 0;
  double epsilon = 0;  // in [0, 1)
  Baseline baseline = Baseline::Optimal;
};

struct OptimizerConfig {
  int u_size = 0;          // 0 resolves to |X| + 3
  int restarts = 16;       // random restarts on top of the canonical starts
  double grid_step = 0.02; // oracle-mode quantization
  int max_iters = 120;     // coordinate-descent sweeps per penalty stage
  double tol = 1e-7;       // feasibility / certification tolerance
  double penalty_weight = 100.0;
  std::uint64_t seed = 1;
};

enum class OptStatus { Feasible, Infeasible, NonConverged };

std::string to_string(OptStatus s);

struct OptResult {
  double theta = 0;
  AuxChannel argmax;
  OptStatus status = OptStatus::NonConverged;
  RegionPoint point;  // argmax re-evaluated at the query's epsilon
};

/// P_{UXYZ} = P_{U|X} P_{XYZ}; axes ordered (U, X, Y, Z).
JointPmf build_joint_h0(const SourceModel& model, const AuxChannel& aux);
/// Q_{UXYZ} = P_{U|X} P_X P_Y P_{Z|XY}; axes ordered (U, X, Y, Z).
JointPmf build_joint_h1(const SourceModel& model, const AuxChannel& aux);

RegionPoint evaluate_point(const SourceModel& model, const AuxChannel& aux, double epsilon);

/// Theorem-1 quantities computed directly from the model tables, without
/// materializing the four-axis joints. Matches the build_joint route to
/// floating accuracy; the optimizer and oracle run on this path.
class RegionEvaluator {
 public:
  explicit RegionEvaluator(const SourceModel& model);

  struct Values {
    double i_ux = 0;
    double i_uy = 0;
    double hp_x_uz = 0;
    double hq_x_uz = 0;
  };

  /// w is the aux matrix row-major, w[x*u_size + u] = P(u|x).
  Values evaluate(const std::vector<double>& w, int u_size) const;

  double hp_xz() const { return hp_xz_; }
  double hq_xz() const { return hq_xz_; }
  double i_xy() const { return i_xy_; }
  double h_x() const { return h_x_; }
  int x_size() const { return nx_; }
  int y_size() const { return ny_; }
  int z_size() const { return nz_; }

  RegionPoint point(const std::vector<double>& w, int u_size, double epsilon) const;

 private:
  int nx_, ny_, nz_;
  std::vector<double> px_, pyx_, pzx0_, qzx1_, py_;
  double hp_xz_, hq_xz_, i_xy_, h_x_;
};

/// Largest I_P(U;Y) subject to I_P(U;X) <= q.rate, delta0_cap >= q.delta0,
/// delta1_cap >= q.delta1, searched over u_size = |X|+3 (or cfg.u_size).
/// Returns Infeasible, without searching, when even constant U fails, i.e.
/// q.delta0 > H_P(X|Z) or q.delta1 > H_Q(X|Z). The returned theta is
/// certified by re-evaluating the argmax; constraints hold within cfg.tol.
OptResult optimal_exponent(const SourceModel& model, const ExponentQuery& q,
                           const OptimizerConfig& cfg);

/// Same contract with a reduced constraint set. EpsZeroH0Only keeps only
/// I(U;X) <= rate and H_P(X|UZ) >= delta0 (the eps->0, delta1-free region);
/// NoSecurity keeps only the rate constraint.
OptResult baseline_exponent(const SourceModel& model, const ExponentQuery& q,
                            const OptimizerConfig& cfg);

/// Exhaustive scan of row-stochastic P_{U|X} with entries on the grid
/// {0, grid_step, ..., 1}; best feasible I_P(U;Y), or -infinity when no grid
/// point is feasible. Requires |X| = 2 and u_size <= 3.
double brute_force_oracle(const SourceModel& model, const ExponentQuery& q, double grid_step,
                          int u_size);

struct SweepRow {
  double rate = 0;
  double theta_optimal = 0;
  double theta_eps0 = 0;
  double theta_nosec = 0;
  OptStatus st_optimal = OptStatus::NonConverged;
  OptStatus st_eps0 = OptStatus::NonConverged;
  OptStatus st_nosec = OptStatus::NonConverged;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  // Argmax channels per row, aligned with rows; empty matrix when infeasible.
  std::vector<std::vector<double>> argmax_optimal;
  std::vector<std::vector<double>> argmax_eps0;
  std::vector<std::vector<double>> argmax_nosec;
  int u_size = 0;
  double hp_xz = 0;
  double hq_xz = 0;
};

/// One row per rate (ascending). Rate points are searched independently
/// (parallel-safe, per-rate derived RNG streams), then each curve is made
/// monotone by a sequential warm-start pass that carries the previous argmax
/// forward and takes the running max.
SweepResult sweep_rate_curve(const SourceModel& model, const std::vector<double>& rates,
                             double delta0, double delta1, double epsilon,
                             const OptimizerConfig& cfg);

}  // namespace htsec
