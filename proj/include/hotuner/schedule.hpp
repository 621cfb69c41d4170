#pragma once
// Deterministic scalar schedules driving the time-varying problem data.

namespace hot {

struct Schedule {
  enum class Kind { Constant, Step, Ramp, Sinusoid };

  Kind kind = Kind::Constant;
  // constant
  double value = 0.0;
  // step: pre for k < switch_at, post after
  double pre = 0.0, post = 0.0;
  long switch_at = 0;
  // ramp: from for k < k_start, linear in between, held at to for k >= k_end
  double from = 0.0, to = 0.0;
  long k_start = 0, k_end = 0;
  // sinusoid: offset + amplitude * sin(omega*k + phase)
  double offset = 0.0, amplitude = 0.0, omega = 0.0, phase = 0.0;

  static Schedule constant(double v);
  static Schedule step(double pre, double post, long switch_at);
  static Schedule ramp(double from, double to, long k_start, long k_end);
  static Schedule sinusoid(double offset, double amplitude, double omega,
                           double phase = 0.0);

  double operator()(long k) const;
  bool operator==(const Schedule&) const = default;
};

double evaluate_schedule(const Schedule& s, long k);

}  // namespace hot
