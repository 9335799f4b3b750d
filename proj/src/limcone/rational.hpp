#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "limcone/errors.hpp"

namespace limcone {

// Exact arithmetic scalar used everywhere; no floating point in this library.
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "p", "-p" or "p/q".  Used by the JSON layer, where rationals travel
// as strings to avoid float loss.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) raise(ErrorKind::Parse, "empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      raise(ErrorKind::Parse, "bad rational literal: " + s);
  }
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    raise(ErrorKind::Parse, "bad rational literal: " + s);
  }
}

// Gaussian rational a + bi.  Step-section values live here so |f|^2 stays
// exact; matrixlie uses it as the scalar tower for every realization.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Gaussian conj() const { return Gaussian(re, -im); }
  // |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re + b.re, a.im + b.im);
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re - b.re, a.im - b.im);
  }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re, -a.im); }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.norm2();
    if (n == 0) raise(ErrorKind::Shape, "division by zero Gaussian rational");
    return Gaussian((a.re * b.re + a.im * b.im) / n,
                    (a.im * b.re - a.re * b.im) / n);
  }
  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
  Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) {
    return !(a == b);
  }
};

inline std::string to_string(const Gaussian& z) {
  if (z.im == 0) return z.re.str();
  if (z.re == 0) return z.im.str() + "i";
  std::string s = z.re.str();
  if (z.im > 0) s += "+";
  return s + z.im.str() + "i";
}

}  // namespace limcone
