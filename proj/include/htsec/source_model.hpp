#pragma once

#include <optional>

#include "htsec/joint.hpp"
#include "htsec/pmf.hpp"

namespace htsec {

enum class EveMode { Full, Marginal };

/// Discrete memoryless source/channel law shared by both hypotheses:
/// P_X, the legitimate channel P_{Y|X}, and the eavesdropper side.
///
/// Full mode carries P_{Z|XY} (rows indexed x*|Y|+y) and derives the
/// per-hypothesis marginal channels. Marginal mode carries P_{Z|X} under H0
/// and Q_{Z|X} under H1 directly; only region computations are valid there,
/// simulation needs Full mode.
class SourceModel {
 public:
  static SourceModel full(Pmf px, CondPmf pyx, CondPmf pzxy);
  static SourceModel marginal(Pmf px, CondPmf pyx, CondPmf pzx_h0, CondPmf qzx_h1);

  EveMode eve_mode() const { return mode_; }
  int x_size() const { return px_.size(); }
  int y_size() const { return pyx_.out_size(); }
  int z_size() const { return pzx_h0_.out_size(); }

  const Pmf& px() const { return px_; }
  const CondPmf& pyx() const { return pyx_; }
  const Pmf& py() const { return py_; }

  /// P_{Z|X}(z|x) = sum_y P_{Y|X}(y|x) P_{Z|XY}(z|x,y) in Full mode.
  const CondPmf& pzx_h0() const { return pzx_h0_; }
  /// Q_{Z|X}(z|x) = sum_y P_Y(y) P_{Z|XY}(z|x,y) in Full mode.
  const CondPmf& qzx_h1() const { return qzx_h1_; }
  /// Full mode only.
  const CondPmf& pzxy() const;

  /// Joint (X, Y, Z) under the null / alternative hypothesis. In Marginal
  /// mode the Z axis is built from the per-hypothesis marginal channel, so
  /// Y and Z are conditionally independent given X in the constructed joint.
  JointPmf joint_xyz_h0() const;
  JointPmf joint_xyz_h1() const;

 private:
  SourceModel(EveMode mode, Pmf px, CondPmf pyx, Pmf py, std::optional<CondPmf> pzxy,
              CondPmf pzx_h0, CondPmf qzx_h1);

  EveMode mode_;
  Pmf px_;
  CondPmf pyx_;
  Pmf py_;
  std::optional<CondPmf> pzxy_;
  CondPmf pzx_h0_;
  CondPmf qzx_h1_;
};

}  // namespace htsec
