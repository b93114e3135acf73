// Retry with exponential backoff and full jitter. Only transient failures
// (rate limits, timeouts) are retried; the request payload is never altered
// between attempts.

#include <algorithm>
#include <random>
#include <thread>

#include "das/backend.hpp"

namespace das::llm {

namespace {

template <typename E>
[[noreturn]] void rethrow_with_attempts(const E& error, int attempts) {
  E annotated = error;
  annotated.attempts = attempts;
  throw annotated;
}

}  // namespace

Completion with_retry(Backend& backend, const ChatRequest& request, const RetryPolicy& policy) {
  if (policy.max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");

  auto sleeper = policy.sleeper
                     ? policy.sleeper
                     : [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  std::mt19937_64 rng(policy.jitter_seed ? *policy.jitter_seed : std::random_device{}());

  for (int attempt = 1;; ++attempt) {
    std::optional<std::chrono::milliseconds> retry_after;
    try {
      return backend.complete(request);
    } catch (const RateLimited& e) {
      if (attempt == policy.max_attempts) rethrow_with_attempts(e, attempt);
      retry_after = e.retry_after;
    } catch (const TimeoutError& e) {
      if (attempt == policy.max_attempts) rethrow_with_attempts(e, attempt);
    } catch (const AuthError& e) {
      rethrow_with_attempts(e, attempt);
    } catch (const MalformedResponse& e) {
      rethrow_with_attempts(e, attempt);
    } catch (const CacheMiss& e) {
      rethrow_with_attempts(e, attempt);
    } catch (const BackendError& e) {
      BackendError annotated = e;
      annotated.attempts = attempt;
      throw annotated;
    }

    // Full jitter: uniform over [0, base * 2^(attempt-1)], floored by any
    // server-provided retry-after.
    const auto cap = policy.base_delay.count() * (1LL << std::min(attempt - 1, 20));
    std::chrono::milliseconds delay{0};
    if (cap > 0) delay = std::chrono::milliseconds(static_cast<long long>(rng() % (cap + 1)));
    if (retry_after) delay = std::max(delay, *retry_after);
    if (delay.count() > 0) sleeper(delay);
  }
}

}  // namespace das::llm
