#pragma once

#include <cstdint>

namespace meiga {

// Scalar static-model Kalman filter used to denoise one measurement
// channel. The prediction step is the identity (the estimated state carries
// over unchanged), so one update is:
//
//   K = P / (P + r)          gain
//   x <- x + K (z - x)       state update
//   P <- (1 - K) P           covariance update
//   P <- P + q               covariance prediction
//
// The covariance update is evaluated as P * (r / (P + r)), the same
// quantity without the 1 - K cancellation, which keeps diffuse priors
// (p0 >> r) accurate.
struct KalmanState {
  double x_hat = 0.0;
  double p = 1.0;    // estimate covariance, > 0
  double r = 1.0;    // measurement variance, > 0
  double q = 0.0;    // process variance, >= 0
  double k_last = 0.0;
  std::uint64_t rejected = 0;  // non-finite measurements dropped
};

// Throws std::invalid_argument unless p0 > 0, r > 0, q >= 0.
KalmanState kalman_new(double x0, double p0, double r, double q);

struct KalmanUpdate {
  KalmanState state;
  double value = 0.0;     // x_hat after the update
  bool accepted = false;  // false: z was non-finite, state unchanged
};

KalmanUpdate kalman_update(const KalmanState& s, double z);

}  // namespace meiga
