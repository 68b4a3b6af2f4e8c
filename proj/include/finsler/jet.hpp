#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "finsler/fields.hpp"
#include "finsler/tensor3.hpp"

namespace finsler {

/// Derivative bundle of a scalar field f(x, y) at one point. y-derivatives up
/// to third order, x-derivatives to first order including mixed slots:
///   dy[k]        = df/dy^k
///   dy2(j,k)     = d2f/dy^j dy^k          (symmetric)
///   dy3(i,j,k)   = d3f/dy^i dy^j dy^k     (fully symmetric)
///   dx[k]        = df/dx^k
///   dx_dy(k,j)   = d2f/dx^k dy^j
///   dx_dy2(k,i,j)= d3f/dx^k dy^i dy^j     (symmetric in i,j)
/// Slots beyond the requested order are left empty. Symmetry is exact: each
/// unordered index set is evaluated once and mirrored.
struct Jet {
  double value = 0.0;
  Eigen::VectorXd dy;
  Eigen::MatrixXd dy2;
  Tensor3d dy3;
  Eigen::VectorXd dx;
  Eigen::MatrixXd dx_dy;
  Tensor3d dx_dy2;
  int order_y = 0;
  bool with_x = false;
};

/// Exact forward-mode jet of `f` at (x, y). order_y in 0..3; with_x adds the
/// dx, dx_dy and (if order_y >= 2) dx_dy2 slots. Throws EvaluationDomainError
/// if any computed component is non-finite.
Jet jet_eval(const ScalarField& f, const Eigen::VectorXd& x,
             const Eigen::VectorXd& y, int order_y, bool with_x = false);

/// First x- and y-derivatives of a covector field: dy(r,i) = dX_i/dy^r,
/// dx(j,i) = dX_i/dx^j, plus the values.
struct CovectorJet {
  Eigen::VectorXd values;
  Eigen::MatrixXd dy;  // (r, i): derivative of X_i along y^r
  Eigen::MatrixXd dx;  // (j, i): derivative of X_i along x^j
};

CovectorJet covector_jet(const CovectorField& X, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y, bool with_x = true);

/// Agreement report between jet_eval and central finite differences of
/// matching order (first/second in y, first in x, first mixed). Central
/// differences are a diagnostic only; deviations scale as O(step^2).
struct FdReport {
  double max_rel_dy = 0.0;
  double max_rel_dy2 = 0.0;
  double max_rel_dx = 0.0;
  double max_rel_dx_dy = 0.0;
  double max_rel = 0.0;
  bool step_underflow = false;  // differences cancelled to rounding noise
  std::string note;
};

FdReport fd_check(const ScalarField& f, const Eigen::VectorXd& x,
                  const Eigen::VectorXd& y, double step, int order_y = 2,
                  bool with_x = false);

}  // namespace finsler
