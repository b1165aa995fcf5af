#pragma once

// Deliberate-bug switches used by the mutation-sensitivity tests. Each one
// perturbs exactly one arithmetic step of the engine; all are off by default.

namespace qpentagon::fault {

enum class Mutation {
  none,
  /// nc_mul / torus_mul use q^(n1*m2 + 1) instead of q^(n1*m2) when reordering.
  twist_off_by_one,
  /// verify_pentagon uses l(+xy) as its middle factor.
  pentagon_middle_sign,
  /// q-Pascal recurrence drops the q^k factor: c(n,k) = c(n-1,k) + c(n-1,k-1).
  pascal_drop_qk,
};

Mutation active();
void set(Mutation m);

/// Activates a mutation for the lifetime of the guard.
class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m) : previous_(active()) { set(m); }
  ~ScopedMutation() { set(previous_); }
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation previous_;
};

}  // namespace qpentagon::fault
