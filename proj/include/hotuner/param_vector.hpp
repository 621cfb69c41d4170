#pragma once
// Dense coordinate vector for parameter estimates. Complex-valued parameters
// (the frequency-domain problems) use the canonical real embedding: real and
// imaginary parts stored as independent reals, interleaved (re, im).

#include <cstddef>
#include <vector>

#include "hotuner/errors.hpp"
#include "hotuner/kernels.hpp"

namespace hot {

class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::size_t dim, double fill = 0.0)
      : e_(dim, fill) {}
  explicit ParamVector(std::vector<double> entries) : e_(std::move(entries)) {}
  ParamVector(std::initializer_list<double> entries) : e_(entries) {}

  static ParamVector zeros(std::size_t dim) { return ParamVector(dim); }

  std::size_t dim() const { return e_.size(); }
  double operator[](std::size_t i) const { return e_[i]; }
  double& operator[](std::size_t i) { return e_[i]; }
  const double* data() const { return e_.data(); }
  double* data() { return e_.data(); }
  const std::vector<double>& entries() const { return e_; }

  bool operator==(const ParamVector& o) const { return e_ == o.e_; }

  ParamVector& operator+=(const ParamVector& o) {
    check_dim(o);
    kernels::axpy(1.0, o.data(), data(), dim());
    return *this;
  }
  ParamVector& operator-=(const ParamVector& o) {
    check_dim(o);
    kernels::axpy(-1.0, o.data(), data(), dim());
    return *this;
  }
  ParamVector& operator*=(double a) {
    kernels::scale(a, data(), data(), dim());
    return *this;
  }

  // this += a * x
  ParamVector& axpy(double a, const ParamVector& x) {
    check_dim(x);
    kernels::axpy(a, x.data(), data(), dim());
    return *this;
  }

  friend ParamVector operator+(ParamVector a, const ParamVector& b) {
    a += b;
    return a;
  }
  friend ParamVector operator-(const ParamVector& a, const ParamVector& b) {
    a.check_dim(b);
    ParamVector r(a.dim());
    kernels::sub(a.data(), b.data(), r.data(), a.dim());
    return r;
  }
  friend ParamVector operator*(double a, const ParamVector& x) {
    ParamVector r(x.dim());
    kernels::scale(a, x.data(), r.data(), x.dim());
    return r;
  }

  // a*x + b*y
  static ParamVector combine(double a, const ParamVector& x, double b,
                             const ParamVector& y) {
    x.check_dim(y);
    ParamVector r(x.dim());
    kernels::combine(a, x.data(), b, y.data(), r.data(), x.dim());
    return r;
  }

  double dot(const ParamVector& o) const {
    check_dim(o);
    return kernels::dot(data(), o.data(), dim());
  }
  double norm_sq() const { return kernels::norm_sq(data(), dim()); }

  double distance_sq(const ParamVector& o) const {
    check_dim(o);
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
      const double d = e_[i] - o.e_[i];
      s += d * d;
    }
    return s;
  }

  bool is_finite() const {
    const double s = norm_sq();
    return s == s && s <= kDivergenceNorm * kDivergenceNorm;
  }

  void check_dim(const ParamVector& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("ParamVector dim mismatch");
  }

 private:
  std::vector<double> e_;
};

}  // namespace hot
