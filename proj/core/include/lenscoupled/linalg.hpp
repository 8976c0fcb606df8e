#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace lenscoupled {

using cplx = std::complex<double>;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// 3x3 complex tensor, row-major over (x, y, z) x (x, y, z).
class ComplexMat3 {
 public:
  constexpr ComplexMat3() = default;
  explicit constexpr ComplexMat3(const std::array<cplx, 9>& entries) : a_(entries) {}

  static constexpr ComplexMat3 identity() {
    ComplexMat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }

  /// v v^T
  static constexpr ComplexMat3 outer(const Vec3& v) {
    ComplexMat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = v[r] * v[c];
    return m;
  }

  constexpr cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(3 * r + c)]; }
  constexpr const cplx& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(3 * r + c)];
  }
  constexpr const std::array<cplx, 9>& entries() const { return a_; }

  constexpr ComplexMat3 transpose() const {
    ComplexMat3 t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
  }

  ComplexMat3 real() const { return map([](cplx v) { return cplx(v.real(), 0.0); }); }
  ComplexMat3 imag() const { return map([](cplx v) { return cplx(v.imag(), 0.0); }); }

  /// u . M . v for real vectors.
  constexpr cplx bilinear(const Vec3& u, const Vec3& v) const {
    cplx s = 0.0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) s += u[r] * (*this)(r, c) * v[c];
    return s;
  }

  constexpr ComplexMat3& operator+=(const ComplexMat3& o) {
    for (std::size_t i = 0; i < 9; ++i) a_[i] += o.a_[i];
    return *this;
  }
  constexpr ComplexMat3& operator-=(const ComplexMat3& o) {
    for (std::size_t i = 0; i < 9; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  constexpr ComplexMat3& operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend constexpr ComplexMat3 operator+(ComplexMat3 a, const ComplexMat3& b) { return a += b; }
  friend constexpr ComplexMat3 operator-(ComplexMat3 a, const ComplexMat3& b) { return a -= b; }
  friend constexpr ComplexMat3 operator*(ComplexMat3 a, cplx s) { return a *= s; }
  friend constexpr ComplexMat3 operator*(cplx s, ComplexMat3 a) { return a *= s; }

  friend constexpr ComplexMat3 operator*(const ComplexMat3& a, const ComplexMat3& b) {
    ComplexMat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 3; ++k) m(r, c) += a(r, k) * b(k, c);
    return m;
  }

  std::array<cplx, 3> apply(const Vec3& v) const {
    std::array<cplx, 3> out{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[c];
    return out;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  bool finite() const {
    for (const auto& v : a_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

 private:
  template <class F>
  ComplexMat3 map(F f) const {
    ComplexMat3 m;
    for (std::size_t i = 0; i < 9; ++i) m.a_[i] = f(a_[i]);
    return m;
  }

  std::array<cplx, 9> a_{};
};

}  // namespace lenscoupled
