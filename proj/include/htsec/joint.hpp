#pragma once

#include <span>
#include <vector>

#include "htsec/pmf.hpp"

namespace htsec {

/// Dense joint pmf over an ordered list of finite axes.
///
/// Mass is stored row-major with the last axis fastest. Alphabets in this
/// project are tiny (<= ~8 symbols), so dense tensors beat any sparse scheme.
class JointPmf {
 public:
  JointPmf(std::vector<int> dims, std::vector<double> mass);

  int rank() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t cell_count() const { return mass_.size(); }
  const std::vector<double>& mass() const { return mass_; }

  double at_flat(std::size_t i) const { return mass_[i]; }
  double at(std::span<const int> idx) const { return mass_[flat_index(idx)]; }
  std::size_t flat_index(std::span<const int> idx) const;
  std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }
  int digit(std::size_t flat, int axis) const {
    return static_cast<int>((flat / strides_[static_cast<std::size_t>(axis)]) %
                            static_cast<std::size_t>(dims_[static_cast<std::size_t>(axis)]));
  }

  /// Marginal over the listed axes, in the listed order.
  JointPmf marginal(std::span<const int> axes) const;
  Pmf marginal_pmf(int axis) const;

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<double> mass_;
};

/// Shannon entropy in bits, 0 log 0 = 0.
double entropy(const Pmf& p);
double entropy(const JointPmf& j);
double entropy_of(const JointPmf& j, std::span<const int> axes);

/// H(target | given) = H(target, given) - H(given), in bits.
double conditional_entropy(const JointPmf& j, std::span<const int> target_axes,
                           std::span<const int> given_axes);

/// I(A; B) = H(A) + H(B) - H(A, B), in bits.
double mutual_information(const JointPmf& j, std::span<const int> axes_a,
                          std::span<const int> axes_b);

/// Appends one axis: result(idx, y) = j(idx) * c(flat(input_axes of idx), y).
/// The conditioning index flattens the listed input axes row-major in the
/// order given. Marginalizing the new axis away reproduces j exactly.
JointPmf compose(const JointPmf& j, const CondPmf& c, std::span<const int> input_axes);

/// Type of a sequence: counts / n. Errors on empty input or symbols outside
/// [0, alphabet_size).
Pmf empirical_pmf(std::span<const int> seq, int alphabet_size);

/// Joint type of aligned sequences over the axes of `dims`.
JointPmf empirical_joint(const std::vector<std::vector<int>>& seqs, std::span<const int> dims);

/// Strong typicality: every joint-symbol cell satisfies |type - ref| <= mu
/// and type is 0 wherever ref is 0. The boundary |type - ref| = mu counts as
/// typical (closed condition, with a 1e-12 rounding guard).
bool is_typical(const std::vector<std::vector<int>>& seqs, const JointPmf& ref, double mu);

}  // namespace htsec
