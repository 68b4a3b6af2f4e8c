#include "finsler/jet.hpp"

#include <cmath>

#include "finsler/errors.hpp"

namespace finsler {

namespace {

// Seed slots of a nested dual. Level 1 is the outermost dual; level d the
// innermost of a depth-d type.
inline void seed(D1& v, int level) { v.b = 1.0; (void)level; }

inline void seed(D2& v, int level) {
  if (level == 1)
    v.b.a = 1.0;
  else
    v.a.b = 1.0;
}

inline void seed(D3& v, int level) {
  if (level == 1)
    v.b.a.a = 1.0;
  else if (level == 2)
    v.a.b.a = 1.0;
  else
    v.a.a.b = 1.0;
}

inline double top(const D1& v) { return v.b; }
inline double top2(const D2& v) { return v.b.b; }
inline double top3(const D3& v) { return v.b.b.b; }

void require_finite(double v, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& y, const char* slot) {
  if (!std::isfinite(v))
    throw EvaluationDomainError(x, y, std::string("non-finite ") + slot);
}

}  // namespace

Jet jet_eval(const ScalarField& f, const Eigen::VectorXd& x,
             const Eigen::VectorXd& y, int order_y, bool with_x) {
  const int n = static_cast<int>(y.size());
  if (order_y < 0 || order_y > 3)
    throw Error("jet-order", "order_y must be in 0..3");
  if (y.norm() == 0.0) throw EvaluationDomainError(x, y, "zero direction");

  Jet jet;
  jet.order_y = order_y;
  jet.with_x = with_x;

  jet.value = f.value(x, y);
  require_finite(jet.value, x, y, "value");

  if (order_y >= 1) {
    jet.dy.resize(n);
    for (int k = 0; k < n; ++k) {
      VecX<D1> xd = lift<D1>(x), yd = lift<D1>(y);
      seed(yd[k], 1);
      jet.dy[k] = top(f.value(xd, yd));
      require_finite(jet.dy[k], x, y, "dy");
    }
  }
  if (order_y >= 2) {
    jet.dy2.resize(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        VecX<D2> xd = lift<D2>(x), yd = lift<D2>(y);
        seed(yd[j], 1);
        seed(yd[k], 2);
        double v = top2(f.value(xd, yd));
        require_finite(v, x, y, "dy2");
        jet.dy2(j, k) = jet.dy2(k, j) = v;
      }
  }
  if (order_y >= 3) {
    jet.dy3 = Tensor3d(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          VecX<D3> xd = lift<D3>(x), yd = lift<D3>(y);
          seed(yd[i], 1);
          seed(yd[j], 2);
          seed(yd[k], 3);
          double v = top3(f.value(xd, yd));
          require_finite(v, x, y, "dy3");
          jet.dy3(i, j, k) = jet.dy3(i, k, j) = jet.dy3(j, i, k) = v;
          jet.dy3(j, k, i) = jet.dy3(k, i, j) = jet.dy3(k, j, i) = v;
        }
  }
  if (with_x) {
    jet.dx.resize(n);
    for (int k = 0; k < n; ++k) {
      VecX<D1> xd = lift<D1>(x), yd = lift<D1>(y);
      seed(xd[k], 1);
      jet.dx[k] = top(f.value(xd, yd));
      require_finite(jet.dx[k], x, y, "dx");
    }
    if (order_y >= 1) {
      jet.dx_dy.resize(n, n);
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
          VecX<D2> xd = lift<D2>(x), yd = lift<D2>(y);
          seed(xd[k], 1);
          seed(yd[j], 2);
          jet.dx_dy(k, j) = top2(f.value(xd, yd));
          require_finite(jet.dx_dy(k, j), x, y, "dx_dy");
        }
    }
    if (order_y >= 2) {
      jet.dx_dy2 = Tensor3d(n);
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            VecX<D3> xd = lift<D3>(x), yd = lift<D3>(y);
            seed(xd[k], 1);
            seed(yd[i], 2);
            seed(yd[j], 3);
            double v = top3(f.value(xd, yd));
            require_finite(v, x, y, "dx_dy2");
            jet.dx_dy2(k, i, j) = jet.dx_dy2(k, j, i) = v;
          }
    }
  }
  return jet;
}

CovectorJet covector_jet(const CovectorField& X, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y, bool with_x) {
  const int n = static_cast<int>(y.size());
  CovectorJet out;
  out.values = X.components(x, y);
  out.dy.resize(n, n);
  for (int r = 0; r < n; ++r) {
    VecX<D1> xd = lift<D1>(x), yd = lift<D1>(y);
    seed(yd[r], 1);
    VecX<D1> comp = X.components(xd, yd);
    for (int i = 0; i < n; ++i) {
      out.dy(r, i) = comp[i].b;
      require_finite(out.dy(r, i), x, y, "covector dy");
    }
  }
  if (with_x) {
    out.dx.resize(n, n);
    for (int j = 0; j < n; ++j) {
      VecX<D1> xd = lift<D1>(x), yd = lift<D1>(y);
      seed(xd[j], 1);
      VecX<D1> comp = X.components(xd, yd);
      for (int i = 0; i < n; ++i) {
        out.dx(j, i) = comp[i].b;
        require_finite(out.dx(j, i), x, y, "covector dx");
      }
    }
  }
  return out;
}

namespace {

double rel_dev(double got, double ref) {
  return std::abs(got - ref) / (1.0 + std::abs(ref));
}

}  // namespace

FdReport fd_check(const ScalarField& f, const Eigen::VectorXd& x,
                  const Eigen::VectorXd& y, double step, int order_y,
                  bool with_x) {
  if (step <= 0.0) throw Error("fd-step", "step must be positive");
  const int n = static_cast<int>(y.size());
  const Jet jet = jet_eval(f, x, y, order_y, with_x);
  const double eps = std::numeric_limits<double>::epsilon();

  FdReport rep;
  auto eval = [&](const Eigen::VectorXd& xx, const Eigen::VectorXd& yy) {
    double v = f.value(xx, yy);
    if (!std::isfinite(v)) throw EvaluationDomainError(xx, yy, "non-finite value");
    return v;
  };
  auto note_underflow = [&](double diff, double scale) {
    if (std::abs(diff) <= 32.0 * eps * scale && scale > 0.0) {
      rep.step_underflow = true;
      rep.note = "central differences cancelled to rounding noise; increase step";
    }
  };

  if (order_y >= 1) {
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd yp = y, ym = y;
      yp[k] += step;
      ym[k] -= step;
      double fp = eval(x, yp), fm = eval(x, ym);
      note_underflow(fp - fm, std::max(std::abs(fp), std::abs(fm)));
      rep.max_rel_dy =
          std::max(rep.max_rel_dy, rel_dev((fp - fm) / (2 * step), jet.dy[k]));
    }
  }
  if (order_y >= 2) {
    const double f0 = eval(x, y);
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        double fd;
        if (j == k) {
          Eigen::VectorXd yp = y, ym = y;
          yp[j] += step;
          ym[j] -= step;
          fd = (eval(x, yp) - 2 * f0 + eval(x, ym)) / (step * step);
        } else {
          Eigen::VectorXd a = y, b = y, c = y, d = y;
          a[j] += step; a[k] += step;
          b[j] += step; b[k] -= step;
          c[j] -= step; c[k] += step;
          d[j] -= step; d[k] -= step;
          fd = (eval(x, a) - eval(x, b) - eval(x, c) + eval(x, d)) /
               (4 * step * step);
        }
        rep.max_rel_dy2 = std::max(rep.max_rel_dy2, rel_dev(fd, jet.dy2(j, k)));
      }
  }
  if (with_x) {
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd xp = x, xm = x;
      xp[k] += step;
      xm[k] -= step;
      double fp = eval(xp, y), fm = eval(xm, y);
      note_underflow(fp - fm, std::max(std::abs(fp), std::abs(fm)));
      rep.max_rel_dx =
          std::max(rep.max_rel_dx, rel_dev((fp - fm) / (2 * step), jet.dx[k]));
    }
    if (order_y >= 1) {
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
          Eigen::VectorXd xp = x, xm = x, yp = y, ym = y;
          xp[k] += step;
          xm[k] -= step;
          yp[j] += step;
          ym[j] -= step;
          double fd = (eval(xp, yp) - eval(xp, ym) - eval(xm, yp) + eval(xm, ym)) /
                      (4 * step * step);
          rep.max_rel_dx_dy =
              std::max(rep.max_rel_dx_dy, rel_dev(fd, jet.dx_dy(k, j)));
        }
    }
  }
  rep.max_rel = std::max({rep.max_rel_dy, rep.max_rel_dy2, rep.max_rel_dx,
                          rep.max_rel_dx_dy});
  return rep;
}

}  // namespace finsler
