#pragma once

#include <memory>
#include <utility>

#include <Eigen/Core>

#include "finsler/dual.hpp"
#include "finsler/errors.hpp"

namespace finsler {

template <class S>
using VecX = Eigen::VectorX<S>;

/// A scalar field f(x, y) evaluable at nested-dual depth up to 4. Depth 3 is
/// what third y-derivatives (or one x-derivative mixed with two y-derivatives)
/// require; depth 4 exists so that fields defined through one derivative of
/// another field (homothety h-vectors) still fit under a depth-3 jet.
class ScalarField {
 public:
  virtual ~ScalarField() = default;
  virtual int dim() const = 0;
  virtual D0 value(const VecX<D0>& x, const VecX<D0>& y) const = 0;
  virtual D1 value(const VecX<D1>& x, const VecX<D1>& y) const = 0;
  virtual D2 value(const VecX<D2>& x, const VecX<D2>& y) const = 0;
  virtual D3 value(const VecX<D3>& x, const VecX<D3>& y) const = 0;
  virtual D4 value(const VecX<D4>& x, const VecX<D4>& y) const = 0;
};

/// CRTP adapter: implement `template <class S> S eval(const VecX<S>&, const
/// VecX<S>&) const` once in Derived; the virtual overloads dispatch to it.
template <class Derived>
class ScalarFieldModel : public ScalarField {
 public:
  D0 value(const VecX<D0>& x, const VecX<D0>& y) const final {
    return self().template eval<D0>(x, y);
  }
  D1 value(const VecX<D1>& x, const VecX<D1>& y) const final {
    return self().template eval<D1>(x, y);
  }
  D2 value(const VecX<D2>& x, const VecX<D2>& y) const final {
    return self().template eval<D2>(x, y);
  }
  D3 value(const VecX<D3>& x, const VecX<D3>& y) const final {
    return self().template eval<D3>(x, y);
  }
  D4 value(const VecX<D4>& x, const VecX<D4>& y) const final {
    return self().template eval<D4>(x, y);
  }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

/// A covector field X_i(x, y), same depth contract as ScalarField.
class CovectorField {
 public:
  virtual ~CovectorField() = default;
  virtual int dim() const = 0;
  virtual VecX<D0> components(const VecX<D0>& x, const VecX<D0>& y) const = 0;
  virtual VecX<D1> components(const VecX<D1>& x, const VecX<D1>& y) const = 0;
  virtual VecX<D2> components(const VecX<D2>& x, const VecX<D2>& y) const = 0;
  virtual VecX<D3> components(const VecX<D3>& x, const VecX<D3>& y) const = 0;
  virtual VecX<D4> components(const VecX<D4>& x, const VecX<D4>& y) const = 0;
};

template <class Derived>
class CovectorFieldModel : public CovectorField {
 public:
  VecX<D0> components(const VecX<D0>& x, const VecX<D0>& y) const final {
    return self().template eval<D0>(x, y);
  }
  VecX<D1> components(const VecX<D1>& x, const VecX<D1>& y) const final {
    return self().template eval<D1>(x, y);
  }
  VecX<D2> components(const VecX<D2>& x, const VecX<D2>& y) const final {
    return self().template eval<D2>(x, y);
  }
  VecX<D3> components(const VecX<D3>& x, const VecX<D3>& y) const final {
    return self().template eval<D3>(x, y);
  }
  VecX<D4> components(const VecX<D4>& x, const VecX<D4>& y) const final {
    return self().template eval<D4>(x, y);
  }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

/// Evaluate a field one derivative order above the calling depth. The D4
/// overload is the interface ceiling; requesting a fifth nesting level means
/// jets deeper than the engine ever takes.
inline D1 field_value(const ScalarField& f, const VecX<D1>& x, const VecX<D1>& y) {
  return f.value(x, y);
}
inline D2 field_value(const ScalarField& f, const VecX<D2>& x, const VecX<D2>& y) {
  return f.value(x, y);
}
inline D3 field_value(const ScalarField& f, const VecX<D3>& x, const VecX<D3>& y) {
  return f.value(x, y);
}
inline D4 field_value(const ScalarField& f, const VecX<D4>& x, const VecX<D4>& y) {
  return f.value(x, y);
}
template <class S>
S field_value(const ScalarField&, const VecX<S>&, const VecX<S>&) {
  throw Error("jet-depth", "field nesting exceeds the depth-4 ceiling");
}

/// Lift a double vector to dual scalars with zero derivative parts.
template <class S>
VecX<S> lift(const Eigen::VectorXd& v) {
  VecX<S> out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = S(v[i]);
  return out;
}

/// Lift scalars one dual level: components become values, derivative parts zero.
template <class S>
VecX<Dual<S>> lift_once(const VecX<S>& v) {
  VecX<Dual<S>> out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = Dual<S>(v[i], S(0.0));
  return out;
}

/// dot(c, v) with a constant double covector and generic-scalar vector.
template <class S>
S dot_cs(const Eigen::VectorXd& c, const VecX<S>& v) {
  S s(0.0);
  for (int i = 0; i < v.size(); ++i) s += c[i] * v[i];
  return s;
}

/// Quadratic form v^T A v with a constant double matrix.
template <class S>
S quad_form(const Eigen::MatrixXd& a, const VecX<S>& v) {
  S s(0.0);
  for (int i = 0; i < v.size(); ++i)
    for (int j = 0; j < v.size(); ++j) s += a(i, j) * (v[i] * v[j]);
  return s;
}

/// Wrap a scalar-generic callable as a ScalarField (for tests and ad-hoc
/// fields). The callable must accept (VecX<S>, VecX<S>) for every dual depth.
template <class Fn>
class FunctionField final : public ScalarFieldModel<FunctionField<Fn>> {
 public:
  FunctionField(int n, Fn fn) : n_(n), fn_(std::move(fn)) {}
  int dim() const override { return n_; }

  template <class S>
  S eval(const VecX<S>& x, const VecX<S>& y) const {
    return fn_(x, y);
  }

 private:
  int n_;
  Fn fn_;
};

template <class Fn>
std::shared_ptr<const ScalarField> make_function_field(int n, Fn fn) {
  return std::make_shared<FunctionField<Fn>>(n, std::move(fn));
}

}  // namespace finsler
