#ifndef FERMAT_DEADLINE_HH
#define FERMAT_DEADLINE_HH

#include <chrono>

#include "fermat/errors.hh"

namespace fermat {

// Cooperative per-thread deadline. Long-running kernels poll check() and
// throw TimeoutError once the wall clock passes the limit.
class Deadline {
public:
  using Clock = std::chrono::steady_clock;

  static Deadline after_seconds(double seconds) {
    Deadline d;
    d.armed_ = seconds > 0;
    if (d.armed_)
      d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(seconds));
    return d;
  }

  bool expired() const { return armed_ && Clock::now() >= at_; }

private:
  bool armed_ = false;
  Clock::time_point at_{};
};

namespace detail {
inline thread_local const Deadline* current_deadline = nullptr;
}

// Installs a deadline for the current thread for the lifetime of the scope.
class DeadlineScope {
public:
  explicit DeadlineScope(const Deadline* d) : previous_(detail::current_deadline) {
    detail::current_deadline = d;
  }
  ~DeadlineScope() { detail::current_deadline = previous_; }
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

private:
  const Deadline* previous_;
};

inline void check_deadline() {
  const Deadline* d = detail::current_deadline;
  if (d != nullptr && d->expired()) throw TimeoutError("computation exceeded its deadline");
}

}  // namespace fermat

#endif  // FERMAT_DEADLINE_HH
