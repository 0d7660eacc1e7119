#include "htsec/source_model.hpp"

#include <stdexcept>

namespace htsec {

namespace {

Pmf output_marginal(const Pmf& px, const CondPmf& ch) {
  std::vector<double> out(static_cast<std::size_t>(ch.out_size()), 0.0);
  for (int x = 0; x < px.size(); ++x)
    for (int y = 0; y < ch.out_size(); ++y) out[static_cast<std::size_t>(y)] += px[x] * ch(x, y);
  return Pmf(std::move(out));
}

}  // namespace

SourceModel::SourceModel(EveMode mode, Pmf px, CondPmf pyx, Pmf py, std::optional<CondPmf> pzxy,
                         CondPmf pzx_h0, CondPmf qzx_h1)
    : mode_(mode),
      px_(std::move(px)),
      pyx_(std::move(pyx)),
      py_(std::move(py)),
      pzxy_(std::move(pzxy)),
      pzx_h0_(std::move(pzx_h0)),
      qzx_h1_(std::move(qzx_h1)) {}

SourceModel SourceModel::full(Pmf px, CondPmf pyx, CondPmf pzxy) {
  const int nx = px.size();
  const int ny = pyx.out_size();
  const int nz = pzxy.out_size();
  if (pyx.in_size() != nx) throw std::invalid_argument("SourceModel: pyx rows must match |X|");
  if (pzxy.in_size() != nx * ny)
    throw std::invalid_argument("SourceModel: pzxy rows must match |X|*|Y|");
  Pmf py = output_marginal(px, pyx);
  std::vector<double> pz0(static_cast<std::size_t>(nx) * nz, 0.0);
  std::vector<double> qz1(static_cast<std::size_t>(nx) * nz, 0.0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int z = 0; z < nz; ++z) {
        const double t = pzxy(x * ny + y, z);
        pz0[static_cast<std::size_t>(x) * nz + z] += pyx(x, y) * t;
        qz1[static_cast<std::size_t>(x) * nz + z] += py[y] * t;
      }
  return SourceModel(EveMode::Full, std::move(px), std::move(pyx), std::move(py), std::move(pzxy),
                     CondPmf(nx, nz, std::move(pz0)), CondPmf(nx, nz, std::move(qz1)));
}

SourceModel SourceModel::marginal(Pmf px, CondPmf pyx, CondPmf pzx_h0, CondPmf qzx_h1) {
  const int nx = px.size();
  if (pyx.in_size() != nx) throw std::invalid_argument("SourceModel: pyx rows must match |X|");
  if (pzx_h0.in_size() != nx || qzx_h1.in_size() != nx)
    throw std::invalid_argument("SourceModel: eavesdropper channel rows must match |X|");
  if (pzx_h0.out_size() != qzx_h1.out_size())
    throw std::invalid_argument("SourceModel: H0/H1 eavesdropper alphabets must match");
  Pmf py = output_marginal(px, pyx);
  return SourceModel(EveMode::Marginal, std::move(px), std::move(pyx), std::move(py), std::nullopt,
                     std::move(pzx_h0), std::move(qzx_h1));
}

const CondPmf& SourceModel::pzxy() const {
  if (!pzxy_) throw std::logic_error("SourceModel: pzxy requires Full eve mode");
  return *pzxy_;
}

JointPmf SourceModel::joint_xyz_h0() const {
  const int nx = x_size(), ny = y_size(), nz = z_size();
  std::vector<double> mass(static_cast<std::size_t>(nx) * ny * nz);
  std::size_t i = 0;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int z = 0; z < nz; ++z, ++i) {
        const double zc = mode_ == EveMode::Full ? (*pzxy_)(x * ny + y, z) : pzx_h0_(x, z);
        mass[i] = px_[x] * pyx_(x, y) * zc;
      }
  return JointPmf({nx, ny, nz}, std::move(mass));
}

JointPmf SourceModel::joint_xyz_h1() const {
  const int nx = x_size(), ny = y_size(), nz = z_size();
  std::vector<double> mass(static_cast<std::size_t>(nx) * ny * nz);
  std::size_t i = 0;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int z = 0; z < nz; ++z, ++i) {
        const double zc = mode_ == EveMode::Full ? (*pzxy_)(x * ny + y, z) : qzx_h1_(x, z);
        mass[i] = px_[x] * py_[y] * zc;
      }
  return JointPmf({nx, ny, nz}, std::move(mass));
}

}  // namespace htsec
