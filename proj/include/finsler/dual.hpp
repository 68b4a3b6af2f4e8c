#pragma once

#include <cmath>
#include <type_traits>

#include <Eigen/Core>

namespace finsler {

/// First-order perturbation number: value `a` plus derivative `b` along a
/// single seeded direction. Nesting (Dual<Dual<double>> and deeper) yields
/// exact mixed partial derivatives of any order; all operations propagate
/// derivatives to machine rounding, with no truncation error.
template <class T>
struct Dual {
  T a{};  // value
  T b{};  // derivative along the seeded direction

  Dual() = default;
  Dual(double v) : a(v), b() {}  // NOLINT: implicit by design, lifts constants
  Dual(const T& value, const T& deriv) : a(value), b(deriv) {}

  Dual& operator+=(const Dual& o) { a += o.a; b += o.b; return *this; }
  Dual& operator-=(const Dual& o) { a -= o.a; b -= o.b; return *this; }
  Dual& operator*=(const Dual& o) {
    b = b * o.a + a * o.b;
    a = a * o.a;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    b = (b * o.a - a * o.b) / (o.a * o.a);
    a = a / o.a;
    return *this;
  }

  Dual operator-() const { return Dual(-a, -b); }
  Dual operator+() const { return *this; }
};

using D0 = double;
using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;
using D4 = Dual<D3>;

/// Innermost value of an arbitrarily nested dual.
inline double scalar_value(double x) { return x; }
template <class T>
double scalar_value(const Dual<T>& x) { return scalar_value(x.a); }

template <class T>
Dual<T> operator+(Dual<T> x, const Dual<T>& y) { return x += y; }
template <class T>
Dual<T> operator-(Dual<T> x, const Dual<T>& y) { return x -= y; }
template <class T>
Dual<T> operator*(Dual<T> x, const Dual<T>& y) { return x *= y; }
template <class T>
Dual<T> operator/(Dual<T> x, const Dual<T>& y) { return x /= y; }

template <class T>
Dual<T> operator+(Dual<T> x, double s) { x.a += s; return x; }
template <class T>
Dual<T> operator+(double s, Dual<T> x) { x.a += s; return x; }
template <class T>
Dual<T> operator-(Dual<T> x, double s) { x.a -= s; return x; }
template <class T>
Dual<T> operator-(double s, const Dual<T>& x) { return Dual<T>(s - x.a, -x.b); }
template <class T>
Dual<T> operator*(Dual<T> x, double s) { x.a *= s; x.b *= s; return x; }
template <class T>
Dual<T> operator*(double s, Dual<T> x) { x.a *= s; x.b *= s; return x; }
template <class T>
Dual<T> operator/(Dual<T> x, double s) { x.a /= s; x.b /= s; return x; }
template <class T>
Dual<T> operator/(double s, const Dual<T>& x) { return Dual<T>(s) / x; }

template <class T>
bool operator==(const Dual<T>& x, const Dual<T>& y) {
  return scalar_value(x) == scalar_value(y);
}
template <class T>
bool operator!=(const Dual<T>& x, const Dual<T>& y) { return !(x == y); }
template <class T>
bool operator<(const Dual<T>& x, const Dual<T>& y) {
  return scalar_value(x) < scalar_value(y);
}
template <class T>
bool operator>(const Dual<T>& x, const Dual<T>& y) {
  return scalar_value(x) > scalar_value(y);
}
template <class T>
bool operator<=(const Dual<T>& x, const Dual<T>& y) { return !(x > y); }
template <class T>
bool operator>=(const Dual<T>& x, const Dual<T>& y) { return !(x < y); }

using std::exp;
using std::log;
using std::pow;
using std::sqrt;

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  T r = sqrt(x.a);
  return Dual<T>(r, x.b / (2.0 * r));
}

template <class T>
Dual<T> exp(const Dual<T>& x) {
  T e = exp(x.a);
  return Dual<T>(e, x.b * e);
}

template <class T>
Dual<T> log(const Dual<T>& x) {
  return Dual<T>(log(x.a), x.b / x.a);
}

template <class T>
Dual<T> pow(const Dual<T>& x, double p) {
  return Dual<T>(pow(x.a, p), p * pow(x.a, p - 1.0) * x.b);
}

template <class T>
Dual<T> abs(const Dual<T>& x) {
  return scalar_value(x) < 0.0 ? -x : x;
}

using std::sin;
using std::cos;

template <class T>
Dual<T> sin(const Dual<T>& x) {
  return Dual<T>(sin(x.a), x.b * cos(x.a));
}

template <class T>
Dual<T> cos(const Dual<T>& x) {
  return Dual<T>(cos(x.a), -(x.b * sin(x.a)));
}

}  // namespace finsler

namespace Eigen {

// Dual numbers as Eigen scalars, so metric implementations can use vector
// expressions at any differentiation depth.
template <class T>
struct NumTraits<finsler::Dual<T>> : NumTraits<double> {
  using Real = finsler::Dual<T>;
  using NonInteger = finsler::Dual<T>;
  using Nested = finsler::Dual<T>;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2 * NumTraits<T>::ReadCost,
    AddCost = 2 * NumTraits<T>::AddCost,
    MulCost = 3 * NumTraits<T>::MulCost,
  };
};

template <class T, typename BinaryOp>
struct ScalarBinaryOpTraits<finsler::Dual<T>, double, BinaryOp> {
  using ReturnType = finsler::Dual<T>;
};
template <class T, typename BinaryOp>
struct ScalarBinaryOpTraits<double, finsler::Dual<T>, BinaryOp> {
  using ReturnType = finsler::Dual<T>;
};

}  // namespace Eigen
