#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace finsler {

/// Base class for all engine errors. `kind()` is a stable machine-readable
/// tag (e.g. "evaluation-domain", "change-overflow") used by the CLI to map
/// failures to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + " error: " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

namespace detail {
inline std::string point_string(const Eigen::VectorXd& x,
                                const Eigen::VectorXd& y) {
  std::string s = "at x=(";
  for (int i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  s += "), y=(";
  for (int i = 0; i < y.size(); ++i) s += (i ? "," : "") + std::to_string(y[i]);
  return s + ")";
}
}  // namespace detail

class EvaluationDomainError : public Error {
 public:
  EvaluationDomainError(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                        const std::string& what)
      : Error("evaluation-domain", what + " " + detail::point_string(x, y)),
        x_(x),
        y_(y) {}
  const Eigen::VectorXd& x() const { return x_; }
  const Eigen::VectorXd& y() const { return y_; }

 private:
  Eigen::VectorXd x_, y_;
};

class InadmissibleMetricError : public Error {
 public:
  explicit InadmissibleMetricError(const std::string& what)
      : Error("inadmissible-metric", what) {}
};

class DegenerateMetricError : public Error {
 public:
  explicit DegenerateMetricError(const std::string& what)
      : Error("degenerate-metric", what) {}
};

class ChangeOverflowError : public Error {
 public:
  explicit ChangeOverflowError(const std::string& what)
      : Error("change-overflow", what) {}
};

class ChangeSingularityError : public Error {
 public:
  explicit ChangeSingularityError(const std::string& what)
      : Error("change-singularity", what) {}
};

class ShermanMorrisonSingularityError : public Error {
 public:
  explicit ShermanMorrisonSingularityError(const std::string& what)
      : Error("sherman-morrison-singularity", what) {}
};

class InsufficientTraceError : public Error {
 public:
  explicit InsufficientTraceError(const std::string& what)
      : Error("insufficient-trace", what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

}  // namespace finsler
