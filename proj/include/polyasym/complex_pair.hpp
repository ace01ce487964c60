#pragma once

#include "polyasym/precision.hpp"

namespace polyasym {

// Minimal complex value for the inversion-identity checks; everything else in
// the library is real. No transcendental complex functions are provided.
struct ComplexPair {
  ExtReal re{0};
  ExtReal im{0};

  ComplexPair() = default;
  ComplexPair(ExtReal r, ExtReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexPair(const ExtReal& r) : re(r), im(0) {}

  friend ComplexPair operator+(const ComplexPair& a, const ComplexPair& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexPair operator-(const ComplexPair& a, const ComplexPair& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexPair operator*(const ComplexPair& a, const ComplexPair& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexPair operator*(const ExtReal& s, const ComplexPair& a) {
    return {s * a.re, s * a.im};
  }
  friend ComplexPair operator/(const ComplexPair& a, const ComplexPair& b) {
    const ExtReal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend ComplexPair operator/(const ComplexPair& a, const ExtReal& s) {
    return {a.re / s, a.im / s};
  }
};

inline ComplexPair pow_int(const ComplexPair& z, int n) {
  ComplexPair r(ExtReal(1), ExtReal(0));
  for (int k = 0; k < n; ++k) r = r * z;
  return r;
}

}  // namespace polyasym
