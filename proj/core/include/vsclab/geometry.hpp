#ifndef VSCLAB_GEOMETRY_HPP
#define VSCLAB_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <complex>

namespace vsclab {

using Complex = std::complex<double>;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3() = default;
  Vec3(double px, double py, double pz) : x(px), y(py), z(pz) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double c) const { return {c * x, c * y, c * z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

// Vector in C^3.  dot() below is the bilinear (unconjugated) product.
struct CVec3 {
  Complex x{0.0, 0.0}, y{0.0, 0.0}, z{0.0, 0.0};

  CVec3() = default;
  CVec3(Complex px, Complex py, Complex pz) : x(px), y(py), z(pz) {}
  explicit CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

  CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  CVec3 operator*(Complex c) const { return {c * x, c * y, c * z}; }

  Vec3 real() const { return {x.real(), y.real(), z.real()}; }
  Vec3 imag() const { return {x.imag(), y.imag(), z.imag()}; }
};

inline Complex dot(const CVec3& a, const CVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Complex dot(const CVec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

using GammaIndex = std::array<int, 3>;

inline double gamma_norm_sq(const GammaIndex& g) {
  return double(g[0]) * g[0] + double(g[1]) * g[1] + double(g[2]) * g[2];
}

inline Vec3 gamma_to_vec(const GammaIndex& g) {
  return {double(g[0]), double(g[1]), double(g[2])};
}

}  // namespace vsclab

#endif
