#include "htsec/region.hpp"

#include <cmath>
#include <stdexcept>

namespace htsec {

AuxChannel AuxChannel::constant(int x_size, int u_size) {
  std::vector<double> m(static_cast<std::size_t>(x_size) * u_size, 0.0);
  for (int x = 0; x < x_size; ++x) m[static_cast<std::size_t>(x) * u_size] = 1.0;
  return AuxChannel{CondPmf(x_size, u_size, std::move(m))};
}

AuxChannel AuxChannel::identity_embedding(int x_size, int u_size) {
  if (u_size < x_size)
    throw std::invalid_argument("AuxChannel::identity_embedding: u_size < x_size");
  std::vector<double> m(static_cast<std::size_t>(x_size) * u_size, 0.0);
  for (int x = 0; x < x_size; ++x) m[static_cast<std::size_t>(x) * u_size + x] = 1.0;
  return AuxChannel{CondPmf(x_size, u_size, std::move(m))};
}

std::string to_string(OptStatus s) {
  switch (s) {
    case OptStatus::Feasible: return "FEASIBLE";
    case OptStatus::Infeasible: return "INFEASIBLE";
    case OptStatus::NonConverged: return "NONCONVERGED";
  }
  return "UNKNOWN";
}

namespace {

void check_aux(const SourceModel& model, const AuxChannel& aux) {
  if (aux.x_size() != model.x_size())
    throw std::invalid_argument("aux channel rows must match |X|");
}

JointPmf build_joint(const SourceModel& model, const AuxChannel& aux, bool h0) {
  check_aux(model, aux);
  const int nu = aux.u_size(), nx = model.x_size(), ny = model.y_size(), nz = model.z_size();
  const bool full = model.eve_mode() == EveMode::Full;
  std::vector<double> mass(static_cast<std::size_t>(nu) * nx * ny * nz);
  std::size_t i = 0;
  for (int u = 0; u < nu; ++u)
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) {
        const double yb = h0 ? model.pyx()(x, y) : model.py()[y];
        for (int z = 0; z < nz; ++z, ++i) {
          double zc;
          if (full)
            zc = model.pzxy()(x * ny + y, z);
          else
            zc = h0 ? model.pzx_h0()(x, z) : model.qzx_h1()(x, z);
          mass[i] = model.px()[x] * aux.pux(x, u) * yb * zc;
        }
      }
  return JointPmf({nu, nx, ny, nz}, std::move(mass));
}

double xlog2x(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

}  // namespace

JointPmf build_joint_h0(const SourceModel& model, const AuxChannel& aux) {
  return build_joint(model, aux, true);
}

JointPmf build_joint_h1(const SourceModel& model, const AuxChannel& aux) {
  return build_joint(model, aux, false);
}

RegionPoint evaluate_point(const SourceModel& model, const AuxChannel& aux, double epsilon) {
  if (!(epsilon >= 0 && epsilon < 1))
    throw std::invalid_argument("evaluate_point: epsilon must lie in [0,1)");
  check_aux(model, aux);
  RegionEvaluator ev(model);
  return ev.point(aux.pux.flat(), aux.u_size(), epsilon);
}

RegionEvaluator::RegionEvaluator(const SourceModel& model)
    : nx_(model.x_size()),
      ny_(model.y_size()),
      nz_(model.z_size()),
      px_(model.px().probs()),
      pyx_(model.pyx().flat()),
      pzx0_(model.pzx_h0().flat()),
      qzx1_(model.qzx_h1().flat()),
      py_(model.py().probs()) {
  auto h_x_given_z = [&](const std::vector<double>& pzx) {
    // H(X|Z) = H(X,Z) - H(Z) from the pair joint px(x) pzx(z|x).
    double hxz = 0;
    std::vector<double> pz(static_cast<std::size_t>(nz_), 0.0);
    for (int x = 0; x < nx_; ++x)
      for (int z = 0; z < nz_; ++z) {
        const double j = px_[static_cast<std::size_t>(x)] * pzx[static_cast<std::size_t>(x) * nz_ + z];
        hxz -= xlog2x(j);
        pz[static_cast<std::size_t>(z)] += j;
      }
    double hz = 0;
    for (double v : pz) hz -= xlog2x(v);
    return hxz - hz;
  };
  hp_xz_ = h_x_given_z(pzx0_);
  hq_xz_ = h_x_given_z(qzx1_);
  h_x_ = 0;
  for (double v : px_) h_x_ -= xlog2x(v);
  // I(X;Y) = H(Y) - H(Y|X)
  double hy = 0;
  for (double v : py_) hy -= xlog2x(v);
  double hy_x = 0;
  for (int x = 0; x < nx_; ++x)
    for (int y = 0; y < ny_; ++y) {
      const double c = pyx_[static_cast<std::size_t>(x) * ny_ + y];
      hy_x -= px_[static_cast<std::size_t>(x)] * xlog2x(c);
    }
  i_xy_ = hy - hy_x;
}

RegionEvaluator::Values RegionEvaluator::evaluate(const std::vector<double>& w, int u_size) const {
  if (static_cast<int>(w.size()) != nx_ * u_size)
    throw std::invalid_argument("RegionEvaluator: aux matrix size mismatch");
  constexpr int kMaxU = 64;
  if (u_size < 1 || u_size > kMaxU)
    throw std::invalid_argument("RegionEvaluator: unsupported u_size");
  Values out;

  double pu[kMaxU] = {0};
  for (int x = 0; x < nx_; ++x) {
    const double p = px_[static_cast<std::size_t>(x)];
    for (int u = 0; u < u_size; ++u) pu[u] += p * w[static_cast<std::size_t>(x) * u_size + u];
  }

  // I(U;X) = sum_{x,u} px(x) w(u|x) log2(w(u|x)/pu(u))
  double iux = 0;
  for (int x = 0; x < nx_; ++x) {
    const double p = px_[static_cast<std::size_t>(x)];
    if (p <= 0) continue;
    for (int u = 0; u < u_size; ++u) {
      const double c = w[static_cast<std::size_t>(x) * u_size + u];
      if (c > 0) iux += p * c * std::log2(c / pu[u]);
    }
  }
  out.i_ux = iux;

  // I(U;Y) over p(u,y) = sum_x px(x) w(u|x) pyx(y|x)
  double iuy = 0;
  for (int u = 0; u < u_size; ++u) {
    if (pu[u] <= 0) continue;
    for (int y = 0; y < ny_; ++y) {
      double puy = 0;
      for (int x = 0; x < nx_; ++x)
        puy += px_[static_cast<std::size_t>(x)] * w[static_cast<std::size_t>(x) * u_size + u] *
               pyx_[static_cast<std::size_t>(x) * ny_ + y];
      if (puy > 0) iuy += puy * std::log2(puy / (pu[u] * py_[static_cast<std::size_t>(y)]));
    }
  }
  out.i_uy = iuy;

  // H(X|U,Z) = H(X,U,Z) - H(U,Z) over p(u,x,z) = px(x) w(u|x) pzx(z|x)
  auto h_x_given_uz = [&](const std::vector<double>& pzx) {
    double h = 0;
    for (int u = 0; u < u_size; ++u) {
      if (pu[u] <= 0) continue;
      for (int z = 0; z < nz_; ++z) {
        double s = 0;
        for (int x = 0; x < nx_; ++x) {
          const double j = px_[static_cast<std::size_t>(x)] *
                           w[static_cast<std::size_t>(x) * u_size + u] *
                           pzx[static_cast<std::size_t>(x) * nz_ + z];
          h -= xlog2x(j);
          s += j;
        }
        h += xlog2x(s);
      }
    }
    return h;
  };
  out.hp_x_uz = h_x_given_uz(pzx0_);
  out.hq_x_uz = h_x_given_uz(qzx1_);
  return out;
}

RegionPoint RegionEvaluator::point(const std::vector<double>& w, int u_size,
                                   double epsilon) const {
  const Values v = evaluate(w, u_size);
  RegionPoint pt;
  pt.rate_needed = v.i_ux;
  pt.exponent = v.i_uy;
  pt.delta0_cap = (1 - epsilon) * v.hp_x_uz + epsilon * hp_xz_;
  pt.delta1_cap = (1 - epsilon) * v.hq_x_uz + epsilon * hq_xz_;
  pt.epsilon = epsilon;
  return pt;
}

}  // namespace htsec
