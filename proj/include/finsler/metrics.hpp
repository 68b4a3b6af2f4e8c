#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "finsler/fields.hpp"
#include "finsler/jet.hpp"

namespace finsler {

enum class MetricKind { Euclidean, Riemannian, Randers, Kropina, Matsumoto, HExp };
enum class HVectorFamily { Constant, Gradient, Homothety, Mixed };

std::string to_string(MetricKind k);
std::string to_string(HVectorFamily f);

/// Riemannian part a_ij(x) = exp(2 w.x) * A with A constant SPD. w = 0 gives
/// a constant metric; A = I, w = 0 the Euclidean one.
struct RiemannPart {
  Eigen::MatrixXd A;
  Eigen::VectorXd w;
};

struct MetricSpec {
  MetricKind kind = MetricKind::Euclidean;
  int n = 2;
  RiemannPart riemann;       // alpha part for randers/kropina/matsumoto
  Eigen::VectorXd one_form;  // constant 1-form for randers/kropina/matsumoto
};

class HVectorField;

/// A fundamental function L(x, y), positively 1-homogeneous in y, evaluable
/// through nested-dual jets. Immutable value type; cheap to copy.
class MetricFunction {
 public:
  MetricFunction() = default;

  MetricKind kind() const { return kind_; }
  int dim() const { return n_; }
  const ScalarField& field() const { return *field_; }
  std::shared_ptr<const ScalarField> field_ptr() const { return field_; }

  /// L(x, y); throws EvaluationDomainError on non-finite results.
  double operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  Jet jet(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int order_y,
          bool with_x = false) const;

  /// True when (x, y) lies in the declared admissible cone: L > 0, the metric
  /// tensor nondegenerate, cone restrictions for kropina/matsumoto, and the
  /// change exponent in range for hexp metrics. Never throws.
  bool admissible(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Set for kind() == HExp, null otherwise.
  const MetricFunction* hexp_base() const { return hexp_base_.get(); }
  const HVectorField* hexp_hvector() const { return hexp_b_.get(); }

  friend MetricFunction make_metric(const MetricSpec& spec);
  friend MetricFunction hexp_apply(const MetricFunction& base,
                                   const HVectorField& b);

 private:
  std::shared_ptr<const ScalarField> field_;
  MetricKind kind_ = MetricKind::Euclidean;
  int n_ = 0;
  MetricSpec spec_;
  std::shared_ptr<const MetricFunction> hexp_base_;
  std::shared_ptr<const HVectorField> hexp_b_;
};

/// Build a zoo metric; probes admissibility at a few deterministic points and
/// throws InadmissibleMetricError naming the first bad probe.
MetricFunction make_metric(const MetricSpec& spec);

struct HVectorSpec {
  HVectorFamily family = HVectorFamily::Constant;
  Eigen::VectorXd a;  // constant covector part (constant / mixed)
  double c = 0.0;     // coefficient of l_i (homothety / mixed)
  // gradient family: b_i(x) = grad phi with phi = p.x + x^T Q x / 2
  Eigen::VectorXd p;
  Eigen::MatrixXd Q;
};

/// An h-vector candidate b_i(x, y) with its scalar rho, stored per family:
/// constant/gradient have rho = 0, homothety/mixed rho = c. The defining
/// axioms are checked by validate_hvector, not assumed.
class HVectorField {
 public:
  HVectorField() = default;

  HVectorFamily family() const { return family_; }
  double rho() const { return rho_; }
  int dim() const { return n_; }
  const CovectorField& field() const { return *field_; }
  std::shared_ptr<const CovectorField> field_ptr() const { return field_; }

  Eigen::VectorXd operator()(const Eigen::VectorXd& x,
                             const Eigen::VectorXd& y) const;

  friend HVectorField make_hvector(const HVectorSpec& spec,
                                   const MetricFunction& base);

 private:
  std::shared_ptr<const CovectorField> field_;
  HVectorFamily family_ = HVectorFamily::Constant;
  double rho_ = 0.0;
  int n_ = 0;
};

HVectorField make_hvector(const HVectorSpec& spec, const MetricFunction& base);

/// The changed metric *L = L exp(beta/L), beta = b_i y^i, as a directly
/// evaluable MetricFunction. Applying the tensor engine to the result gives
/// the oracle for every starred closed form. Evaluation throws
/// ChangeOverflowError when |beta/L| > 50.
MetricFunction hexp_apply(const MetricFunction& base, const HVectorField& b);

/// Sampling chart: x uniform in the box, y uniform on the Euclidean unit
/// sphere, rejected until admissible for the metric under test.
struct ChartSpec {
  int n = 2;
  Eigen::VectorXd box_lo, box_hi;
  std::uint64_t seed = 42;
  int samples = 128;
  double cone_margin = 0.2;  // kropina/matsumoto direction-cone margin

  static ChartSpec square(int n, double half_width, std::uint64_t seed = 42,
                          int samples = 128);
};

struct SamplePoint {
  Eigen::VectorXd x, y;
};

std::vector<SamplePoint> sample_chart(const ChartSpec& chart,
                                      const MetricFunction& L);

/// Residual report for the h-vector axioms over a chart sample. The change
/// definition only consumes the derivative identity L db_i/dy^j = rho h_ij;
/// the v-constancy and Cartan-contraction axioms are reported so that a
/// family's status is visible rather than assumed.
struct HVectorValidation {
  double deriv_identity_resid = 0.0;    // L db_i/dy^j - rho h_ij
  double v_constancy_resid = 0.0;       // b_i|_j
  double cartan_contract_resid = 0.0;   // L C^h_ij b_h - rho h_ij
  double rho_dir_resid = 0.0;           // d rho / dy (zero by construction)
  bool deriv_identity_holds = false;
  bool v_constancy_holds = false;
  bool cartan_contract_holds = false;
  int samples = 0;
};

HVectorValidation validate_hvector(const MetricFunction& base,
                                   const HVectorField& b,
                                   const ChartSpec& chart, double tol = 1e-9);

}  // namespace finsler
