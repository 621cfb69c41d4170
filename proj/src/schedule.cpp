#include "hotuner/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace hot {

Schedule Schedule::constant(double v) {
  Schedule s;
  s.kind = Kind::Constant;
  s.value = v;
  return s;
}

Schedule Schedule::step(double pre, double post, long switch_at) {
  Schedule s;
  s.kind = Kind::Step;
  s.pre = pre;
  s.post = post;
  s.switch_at = switch_at;
  return s;
}

Schedule Schedule::ramp(double from, double to, long k_start, long k_end) {
  if (k_end <= k_start) throw std::invalid_argument("ramp needs k_end > k_start");
  Schedule s;
  s.kind = Kind::Ramp;
  s.from = from;
  s.to = to;
  s.k_start = k_start;
  s.k_end = k_end;
  return s;
}

Schedule Schedule::sinusoid(double offset, double amplitude, double omega,
                            double phase) {
  Schedule s;
  s.kind = Kind::Sinusoid;
  s.offset = offset;
  s.amplitude = amplitude;
  s.omega = omega;
  s.phase = phase;
  return s;
}

double Schedule::operator()(long k) const {
  switch (kind) {
    case Kind::Constant:
      return value;
    case Kind::Step:
      return k < switch_at ? pre : post;
    case Kind::Ramp:
      if (k < k_start) return from;
      if (k >= k_end) return to;
      return from + (to - from) * static_cast<double>(k - k_start) /
                        static_cast<double>(k_end - k_start);
    case Kind::Sinusoid:
      return offset + amplitude * std::sin(omega * static_cast<double>(k) + phase);
  }
  throw std::logic_error("unknown schedule kind");
}

double evaluate_schedule(const Schedule& s, long k) { return s(k); }

}  // namespace hot
