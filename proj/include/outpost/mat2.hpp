// 2x2 complex matrices and 2-vectors: the carrier type for all parametrix
// evaluations.

#pragma once

#include "outpost/complex.hpp"

namespace outpost {

struct Vec2C {
  mp::Complex x, y;

  Vec2C() = default;
  Vec2C(mp::Complex a, mp::Complex b) : x(std::move(a)), y(std::move(b)) {}

  friend Vec2C operator+(const Vec2C& a, const Vec2C& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2C operator-(const Vec2C& a, const Vec2C& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2C operator*(const mp::Complex& s, const Vec2C& v) { return {s * v.x, s * v.y}; }
  Vec2C operator-() const { return {-x, -y}; }
};

// det of the 2x2 matrix with columns [a, b]
inline mp::Complex det2(const Vec2C& a, const Vec2C& b) { return a.x * b.y - a.y * b.x; }

struct Mat2C {
  // entries m[r][c]
  mp::Complex a11, a12, a21, a22;

  Mat2C() = default;
  Mat2C(mp::Complex m11, mp::Complex m12, mp::Complex m21, mp::Complex m22)
      : a11(std::move(m11)), a12(std::move(m12)), a21(std::move(m21)), a22(std::move(m22)) {}

  static Mat2C identity() { return {1L, 0L, 0L, 1L}; }
  static Mat2C from_columns(const Vec2C& c1, const Vec2C& c2) { return {c1.x, c2.x, c1.y, c2.y}; }
  static Mat2C diag_sigma3(const mp::Complex& d) {
    return {d, mp::Complex(0L), mp::Complex(0L), mp::Complex(1L) / d};
  }

  Vec2C col1() const { return {a11, a21}; }
  Vec2C col2() const { return {a12, a22}; }

  mp::Complex det() const { return a11 * a22 - a12 * a21; }
  mp::Complex trace() const { return a11 + a22; }

  Mat2C inverse() const {
    mp::Complex d = det();
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  friend Mat2C operator+(const Mat2C& a, const Mat2C& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
  }
  friend Mat2C operator-(const Mat2C& a, const Mat2C& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }
  friend Mat2C operator*(const Mat2C& a, const Mat2C& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend Vec2C operator*(const Mat2C& a, const Vec2C& v) {
    return {a.a11 * v.x + a.a12 * v.y, a.a21 * v.x + a.a22 * v.y};
  }
  friend Mat2C operator*(const mp::Complex& s, const Mat2C& a) {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
  }
};

// max-abs of entries
inline mp::Real mat_norm(const Mat2C& m) {
  using mp::abs;
  return mp::max(mp::max(abs(m.a11), abs(m.a12)), mp::max(abs(m.a21), abs(m.a22)));
}
inline mp::Real vec_norm(const Vec2C& v) { return mp::max(abs(v.x), abs(v.y)); }

}  // namespace outpost
