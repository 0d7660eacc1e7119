#include "htsec/pmf.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace htsec {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1) throw std::invalid_argument("Alphabet: size must be >= 1");
}

Alphabet::Alphabet(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size < 1) throw std::invalid_argument("Alphabet: size must be >= 1");
  if (static_cast<int>(labels_.size()) != size)
    throw std::invalid_argument("Alphabet: label count must equal size");
  std::set<std::string> uniq(labels_.begin(), labels_.end());
  if (static_cast<int>(uniq.size()) != size)
    throw std::invalid_argument("Alphabet: labels must be distinct");
}

namespace {

void validate_and_normalize(std::vector<double>& p, const char* what) {
  if (p.empty()) throw std::invalid_argument(std::string(what) + ": empty");
  double sum = 0;
  for (double v : p) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
    if (v < 0) throw std::invalid_argument(std::string(what) + ": negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(what) + ": entries sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-9");
  for (double& v : p) v /= sum;
}

}  // namespace

Pmf::Pmf(std::vector<double> probs) : p_(std::move(probs)) {
  validate_and_normalize(p_, "Pmf");
}

Pmf Pmf::uniform(int n) {
  if (n < 1) throw std::invalid_argument("Pmf::uniform: n must be >= 1");
  return Pmf(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

Pmf Pmf::point_mass(int n, int at) {
  if (n < 1 || at < 0 || at >= n) throw std::invalid_argument("Pmf::point_mass: bad index");
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  p[static_cast<std::size_t>(at)] = 1.0;
  return Pmf(std::move(p));
}

CondPmf::CondPmf(int in_size, int out_size, std::vector<double> row_major)
    : in_size_(in_size), out_size_(out_size), m_(std::move(row_major)) {
  if (in_size < 1 || out_size < 1) throw std::invalid_argument("CondPmf: sizes must be >= 1");
  if (m_.size() != static_cast<std::size_t>(in_size) * out_size)
    throw std::invalid_argument("CondPmf: matrix size mismatch");
  for (int x = 0; x < in_size_; ++x) {
    std::vector<double> r(m_.begin() + static_cast<std::ptrdiff_t>(x) * out_size_,
                          m_.begin() + static_cast<std::ptrdiff_t>(x + 1) * out_size_);
    validate_and_normalize(r, "CondPmf row");
    for (int y = 0; y < out_size_; ++y)
      m_[static_cast<std::size_t>(x) * out_size_ + y] = r[static_cast<std::size_t>(y)];
  }
}

CondPmf::CondPmf(const std::vector<std::vector<double>>& rows)
    : in_size_(static_cast<int>(rows.size())), out_size_(0) {
  if (rows.empty()) throw std::invalid_argument("CondPmf: no rows");
  out_size_ = static_cast<int>(rows.front().size());
  m_.reserve(rows.size() * rows.front().size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != out_size_)
      throw std::invalid_argument("CondPmf: ragged rows");
    m_.insert(m_.end(), r.begin(), r.end());
  }
  *this = CondPmf(in_size_, out_size_, std::move(m_));
}

CondPmf CondPmf::identity(int n) {
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1.0;
  return CondPmf(n, n, std::move(m));
}

Pmf CondPmf::row_pmf(int in) const {
  auto r = row(in);
  return Pmf(std::vector<double>(r.begin(), r.end()));
}

}  // namespace htsec
