#include "htsec/joint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace htsec {

namespace {

double xlog2x(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

void check_axes(const JointPmf& j, std::span<const int> axes, const char* what) {
  std::vector<bool> seen(static_cast<std::size_t>(j.rank()), false);
  for (int a : axes) {
    if (a < 0 || a >= j.rank()) throw std::invalid_argument(std::string(what) + ": axis out of range");
    if (seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument(std::string(what) + ": repeated axis");
    seen[static_cast<std::size_t>(a)] = true;
  }
}

void check_disjoint(std::span<const int> a, std::span<const int> b, const char* what) {
  for (int x : a)
    for (int y : b)
      if (x == y) throw std::invalid_argument(std::string(what) + ": axis sets must be disjoint");
}

std::vector<int> concat(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

JointPmf::JointPmf(std::vector<int> dims, std::vector<double> mass)
    : dims_(std::move(dims)), mass_(std::move(mass)) {
  if (dims_.empty()) throw std::invalid_argument("JointPmf: no axes");
  std::size_t cells = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("JointPmf: axis size must be >= 1");
    cells *= static_cast<std::size_t>(d);
  }
  if (mass_.size() != cells) throw std::invalid_argument("JointPmf: mass size mismatch");
  double total = 0;
  for (double v : mass_) {
    if (!std::isfinite(v)) throw std::invalid_argument("JointPmf: non-finite mass");
    if (v < 0) throw std::invalid_argument("JointPmf: negative mass");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("JointPmf: total mass " + std::to_string(total) +
                                ", expected 1 within 1e-9");
  for (double& v : mass_) v /= total;
  strides_.assign(dims_.size(), 1);
  for (int a = rank() - 2; a >= 0; --a)
    strides_[static_cast<std::size_t>(a)] =
        strides_[static_cast<std::size_t>(a + 1)] * static_cast<std::size_t>(dims_[static_cast<std::size_t>(a + 1)]);
}

std::size_t JointPmf::flat_index(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank())
    throw std::invalid_argument("JointPmf: index rank mismatch");
  std::size_t flat = 0;
  for (int a = 0; a < rank(); ++a) {
    int i = idx[static_cast<std::size_t>(a)];
    if (i < 0 || i >= dims_[static_cast<std::size_t>(a)])
      throw std::invalid_argument("JointPmf: index out of range");
    flat += static_cast<std::size_t>(i) * strides_[static_cast<std::size_t>(a)];
  }
  return flat;
}

JointPmf JointPmf::marginal(std::span<const int> axes) const {
  check_axes(*this, axes, "marginal");
  if (axes.empty()) throw std::invalid_argument("marginal: need at least one axis");
  std::vector<int> out_dims;
  out_dims.reserve(axes.size());
  for (int a : axes) out_dims.push_back(dims_[static_cast<std::size_t>(a)]);
  std::size_t out_cells = 1;
  for (int d : out_dims) out_cells *= static_cast<std::size_t>(d);
  std::vector<double> out(out_cells, 0.0);
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    std::size_t o = 0;
    for (int a : axes) o = o * static_cast<std::size_t>(dims_[static_cast<std::size_t>(a)]) +
                           static_cast<std::size_t>(digit(i, a));
    out[o] += mass_[i];
  }
  return JointPmf(std::move(out_dims), std::move(out));
}

Pmf JointPmf::marginal_pmf(int axis) const {
  int axes[1] = {axis};
  JointPmf m = marginal(axes);
  return Pmf(m.mass());
}

double entropy(const Pmf& p) {
  double h = 0;
  for (double v : p.probs()) h -= xlog2x(v);
  return h;
}

double entropy(const JointPmf& j) {
  double h = 0;
  for (double v : j.mass()) h -= xlog2x(v);
  return h;
}

double entropy_of(const JointPmf& j, std::span<const int> axes) {
  if (static_cast<int>(axes.size()) == j.rank()) {
    bool in_order = true;
    for (int a = 0; a < j.rank(); ++a)
      if (axes[static_cast<std::size_t>(a)] != a) in_order = false;
    if (in_order) return entropy(j);
  }
  return entropy(j.marginal(axes));
}

double conditional_entropy(const JointPmf& j, std::span<const int> target_axes,
                           std::span<const int> given_axes) {
  check_axes(j, target_axes, "conditional_entropy");
  check_axes(j, given_axes, "conditional_entropy");
  check_disjoint(target_axes, given_axes, "conditional_entropy");
  if (given_axes.empty()) return entropy_of(j, target_axes);
  std::vector<int> both = concat(target_axes, given_axes);
  return entropy_of(j, both) - entropy_of(j, given_axes);
}

double mutual_information(const JointPmf& j, std::span<const int> axes_a,
                          std::span<const int> axes_b) {
  check_axes(j, axes_a, "mutual_information");
  check_axes(j, axes_b, "mutual_information");
  check_disjoint(axes_a, axes_b, "mutual_information");
  std::vector<int> both = concat(axes_a, axes_b);
  return entropy_of(j, axes_a) + entropy_of(j, axes_b) - entropy_of(j, both);
}

JointPmf compose(const JointPmf& j, const CondPmf& c, std::span<const int> input_axes) {
  check_axes(j, input_axes, "compose");
  std::size_t in_cells = 1;
  for (int a : input_axes) in_cells *= static_cast<std::size_t>(j.dims()[static_cast<std::size_t>(a)]);
  if (in_cells != static_cast<std::size_t>(c.in_size()))
    throw std::invalid_argument("compose: conditioning space does not match input axes");
  std::vector<int> out_dims = j.dims();
  out_dims.push_back(c.out_size());
  std::vector<double> out(j.cell_count() * static_cast<std::size_t>(c.out_size()));
  const int ny = c.out_size();
  for (std::size_t i = 0; i < j.cell_count(); ++i) {
    std::size_t cond = 0;
    for (int a : input_axes)
      cond = cond * static_cast<std::size_t>(j.dims()[static_cast<std::size_t>(a)]) +
             static_cast<std::size_t>(j.digit(i, a));
    const double base = j.at_flat(i);
    for (int y = 0; y < ny; ++y)
      out[i * static_cast<std::size_t>(ny) + static_cast<std::size_t>(y)] =
          base * c(static_cast<int>(cond), y);
  }
  return JointPmf(std::move(out_dims), std::move(out));
}

Pmf empirical_pmf(std::span<const int> seq, int alphabet_size) {
  if (seq.empty()) throw std::invalid_argument("empirical_pmf: empty sequence");
  if (alphabet_size < 1) throw std::invalid_argument("empirical_pmf: bad alphabet");
  std::vector<double> counts(static_cast<std::size_t>(alphabet_size), 0.0);
  for (int s : seq) {
    if (s < 0 || s >= alphabet_size)
      throw std::invalid_argument("empirical_pmf: symbol out of range");
    counts[static_cast<std::size_t>(s)] += 1.0;
  }
  for (double& v : counts) v /= static_cast<double>(seq.size());
  return Pmf(std::move(counts));
}

JointPmf empirical_joint(const std::vector<std::vector<int>>& seqs, std::span<const int> dims) {
  if (seqs.empty() || seqs.size() != dims.size())
    throw std::invalid_argument("empirical_joint: sequence/axis count mismatch");
  const std::size_t n = seqs.front().size();
  if (n == 0) throw std::invalid_argument("empirical_joint: empty sequences");
  for (const auto& s : seqs)
    if (s.size() != n) throw std::invalid_argument("empirical_joint: length mismatch");
  std::size_t cells = 1;
  for (int d : dims) cells *= static_cast<std::size_t>(d);
  std::vector<double> counts(cells, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < seqs.size(); ++a) {
      int s = seqs[a][t];
      if (s < 0 || s >= dims[a]) throw std::invalid_argument("empirical_joint: symbol out of range");
      flat = flat * static_cast<std::size_t>(dims[a]) + static_cast<std::size_t>(s);
    }
    counts[flat] += 1.0;
  }
  for (double& v : counts) v /= static_cast<double>(n);
  return JointPmf(std::vector<int>(dims.begin(), dims.end()), std::move(counts));
}

bool is_typical(const std::vector<std::vector<int>>& seqs, const JointPmf& ref, double mu) {
  if (static_cast<int>(seqs.size()) != ref.rank())
    throw std::invalid_argument("is_typical: sequence count must match reference rank");
  if (!(mu > 0)) throw std::invalid_argument("is_typical: mu must be positive");
  const JointPmf type = empirical_joint(seqs, ref.dims());
  for (std::size_t i = 0; i < ref.cell_count(); ++i) {
    const double r = ref.at_flat(i);
    const double t = type.at_flat(i);
    if (r == 0.0) {
      if (t > 0.0) return false;
    } else if (std::abs(t - r) > mu + 1e-12) {
      return false;
    }
  }
  return true;
}

}  // namespace htsec
