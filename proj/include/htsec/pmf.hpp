#pragma once

#include <span>
#include <string>
#include <vector>

namespace htsec {

/// Finite symbol alphabet: a size plus optional distinct display labels.
class Alphabet {
 public:
  explicit Alphabet(int size);
  Alphabet(int size, std::vector<std::string> labels);

  int size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int size_;
  std::vector<std::string> labels_;
};

/// Probability mass function over a finite alphabet.
///
/// Construction accepts nonnegative entries whose sum lies within 1e-9 of 1
/// and normalizes them; anything farther off is rejected so badly scaled
/// configs fail loudly instead of being silently rescaled.
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs);

  static Pmf uniform(int n);
  static Pmf point_mass(int n, int at);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& probs() const { return p_; }
  std::span<const double> span() const { return p_; }

 private:
  std::vector<double> p_;
};

/// Row-stochastic conditional pmf: one output distribution per input symbol.
/// Element access is (input, output): cond(x, y) = P(y | x).
class CondPmf {
 public:
  CondPmf(int in_size, int out_size, std::vector<double> row_major);
  explicit CondPmf(const std::vector<std::vector<double>>& rows);

  static CondPmf identity(int n);

  int in_size() const { return in_size_; }
  int out_size() const { return out_size_; }
  double operator()(int in, int out) const {
    return m_[static_cast<std::size_t>(in) * out_size_ + out];
  }
  std::span<const double> row(int in) const {
    return {m_.data() + static_cast<std::size_t>(in) * out_size_,
            static_cast<std::size_t>(out_size_)};
  }
  Pmf row_pmf(int in) const;
  const std::vector<double>& flat() const { return m_; }

 private:
  int in_size_, out_size_;
  std::vector<double> m_;
};

}  // namespace htsec
