#include "zkspec/pchip.hpp"

#include <algorithm>
#include <cmath>

#include "zkspec/error.hpp"

namespace zk {

Pchip::Pchip(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 2 || y_.size() != n)
    throw Error(Errc::invalid_argument, "Pchip: need >= 2 matching knots");
  for (size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1]))
      throw Error(Errc::invalid_argument, "Pchip: knots must be increasing");

  std::vector<double> h(n - 1), delta(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }

  d_.assign(n, 0.0);
  // Interior slopes: weighted harmonic mean where the data is monotone,
  // zero across local extrema (Fritsch-Carlson).
  for (size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  // Endpoints: three-point one-sided estimate, clipped to preserve shape.
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (d * d0 <= 0.0)
      d = 0.0;
    else if (d0 * d1 < 0.0 && std::abs(d) > 3.0 * std::abs(d0))
      d = 3.0 * d0;
    return d;
  };
  if (n == 2) {
    d_[0] = d_[1] = delta[0];
  } else {
    d_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    d_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  }
}

double Pchip::operator()(double t) const {
  if (t < x_.front() || t > x_.back())
    throw Error(Errc::invalid_argument, "Pchip: evaluation outside knot range");
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  size_t k = (it == x_.begin()) ? 0 : static_cast<size_t>(it - x_.begin()) - 1;
  if (k >= x_.size() - 1) k = x_.size() - 2;

  const double h = x_[k + 1] - x_[k];
  const double s = (t - x_[k]) / h;
  const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
  const double h10 = s * (1.0 - s) * (1.0 - s);
  const double h01 = s * s * (3.0 - 2.0 * s);
  const double h11 = s * s * (s - 1.0);
  return h00 * y_[k] + h * h10 * d_[k] + h01 * y_[k + 1] + h * h11 * d_[k + 1];
}

double Pchip::derivative(double t) const {
  if (t < x_.front() || t > x_.back())
    throw Error(Errc::invalid_argument, "Pchip: evaluation outside knot range");
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  size_t k = (it == x_.begin()) ? 0 : static_cast<size_t>(it - x_.begin()) - 1;
  if (k >= x_.size() - 1) k = x_.size() - 2;

  const double h = x_[k + 1] - x_[k];
  const double s = (t - x_[k]) / h;
  const double g00 = 6.0 * s * (s - 1.0) / h;
  const double g10 = (3.0 * s - 1.0) * (s - 1.0);
  const double g01 = -g00;
  const double g11 = s * (3.0 * s - 2.0);
  return g00 * y_[k] + g10 * d_[k] + g01 * y_[k + 1] + g11 * d_[k + 1];
}

} // namespace zk
