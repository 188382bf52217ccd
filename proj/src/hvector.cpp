#include "bihyp/hvector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bihyp/error.hpp"

namespace bihyp {

HVector::HVector(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidInput, "vector dimension must be positive");
  for (auto& c : comps_) c.assign(dim, 0.0);
}

HVector HVector::from_components(Components comps) {
  const std::size_t n = comps[0].size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "vector dimension must be positive");
  for (const auto& c : comps) {
    if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "component vectors differ in length");
    for (double v : c) {
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidInput, "non-finite vector entry");
    }
  }
  HVector out(n);
  out.comps_ = std::move(comps);
  return out;
}

HVector HVector::from_entries(std::span<const Bihyperbolic> entries) {
  HVector out(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (std::size_t i = 0; i < 4; ++i) out.comps_[i][k] = entries[k][i];
  }
  return out;
}

HVector HVector::constant(std::size_t dim, const Bihyperbolic& value) {
  HVector out(dim);
  for (std::size_t i = 0; i < 4; ++i) out.comps_[i].assign(dim, value[i]);
  return out;
}

Bihyperbolic HVector::entry(std::size_t k) const {
  if (k >= dim_) throw Error(ErrorCode::BadIndex, "entry index out of range");
  return Bihyperbolic::from_lambda(comps_[0][k], comps_[1][k], comps_[2][k], comps_[3][k]);
}

bool HVector::is_zero(double tol) const noexcept { return max_abs() <= tol; }

double HVector::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : comps_) {
    for (double v : c) m = std::max(m, std::abs(v));
  }
  return m;
}

void require_same_dim(const HVector& x, const HVector& y) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension " + std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
  }
}

HVector& HVector::operator+=(const HVector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) comps_[i][k] += o.comps_[i][k];
  }
  return *this;
}

HVector& HVector::operator-=(const HVector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) comps_[i][k] -= o.comps_[i][k];
  }
  return *this;
}

HVector& HVector::operator*=(double s) noexcept {
  for (auto& c : comps_) {
    for (double& v : c) v *= s;
  }
  return *this;
}

HVector operator*(const Bihyperbolic& lambda, HVector x) noexcept {
  for (std::size_t i = 0; i < 4; ++i) {
    for (double& v : x.comps_[i]) v *= lambda[i];
  }
  return x;
}

HVector vec_add(const HVector& x, const HVector& y) { return x + y; }

HVector vec_scale(const Bihyperbolic& lambda, const HVector& x) noexcept { return lambda * x; }

HVector project(const HVector& x, int i) { return Bihyperbolic::idempotent(i) * x; }

double component_norm(ComponentNorm p, std::span<const double> v) noexcept {
  switch (p) {
    case ComponentNorm::P1: {
      double s = 0.0;
      for (double a : v) s += std::abs(a);
      return s;
    }
    case ComponentNorm::P2: {
      // Scaled accumulation keeps huge/tiny entries from overflowing.
      double scale = 0.0;
      for (double a : v) scale = std::max(scale, std::abs(a));
      if (scale == 0.0) return 0.0;
      double s = 0.0;
      for (double a : v) s += (a / scale) * (a / scale);
      return scale * std::sqrt(s);
    }
    case ComponentNorm::PInf: {
      double m = 0.0;
      for (double a : v) m = std::max(m, std::abs(a));
      return m;
    }
  }
  return 0.0;
}

Bihyperbolic canonical_norm_eval(const CanonicalNorm& norm, const HVector& x) {
  Bihyperbolic::Lambda out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = component_norm(norm.norms[i], x.component(i));
  return Bihyperbolic::from_lambda(out);
}

}  // namespace bihyp
