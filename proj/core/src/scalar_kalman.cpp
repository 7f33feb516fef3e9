#include "meiga/scalar_kalman.hpp"

#include <cmath>
#include <stdexcept>

namespace meiga {

KalmanState kalman_new(double x0, double p0, double r, double q) {
  if (!(p0 > 0.0) || !std::isfinite(p0))
    throw std::invalid_argument("kalman: p0 must be > 0");
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("kalman: r must be > 0");
  if (!(q >= 0.0) || !std::isfinite(q))
    throw std::invalid_argument("kalman: q must be >= 0");
  if (!std::isfinite(x0)) throw std::invalid_argument("kalman: x0 not finite");

  KalmanState s;
  s.x_hat = x0;
  s.p = p0;
  s.r = r;
  s.q = q;
  return s;
}

KalmanUpdate kalman_update(const KalmanState& s, double z) {
  if (!std::isfinite(z)) {
    KalmanUpdate out{s, s.x_hat, false};
    out.state.rejected += 1;
    return out;
  }

  KalmanState n = s;
  const double denom = n.p + n.r;
  const double k = n.p / denom;                    // gain
  n.x_hat = n.x_hat + k * (z - n.x_hat);           // state update
  n.p = n.p * (n.r / denom);                       // covariance update, (1-K)P
  n.p = n.p + n.q;                                 // covariance prediction
  n.k_last = k;
  return {n, n.x_hat, true};
}

}  // namespace meiga
