#ifndef ZKSPEC_PCHIP_HPP
#define ZKSPEC_PCHIP_HPP

#include <vector>

namespace zk {

/// Monotone (shape-preserving) piecewise-cubic Hermite interpolant with
/// Fritsch-Carlson slope limiting.  Knots must be strictly increasing.
class Pchip {
public:
  Pchip(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;
  double derivative(double t) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

private:
  std::vector<double> x_, y_, d_;
};

} // namespace zk

#endif
