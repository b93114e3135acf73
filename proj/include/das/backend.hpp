// Chat-completion backend contract with three implementations: remote HTTP,
// deterministic mock, and a record/replay cache, plus a retry helper.
#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace das::llm {

// ---------------------------------------------------------------- requests

enum class Role { System, User, Assistant };

std::string_view role_name(Role role);  // "system" / "user" / "assistant"

struct Message {
  Role role = Role::User;
  std::string content;

  bool operator==(const Message&) const = default;
};

struct GenerationParams {
  std::string model;
  double temperature = 0.0;
  int max_output_tokens = 2048;
  std::optional<long> seed;

  bool operator==(const GenerationParams&) const = default;
};

struct ChatRequest {
  std::vector<Message> messages;
  GenerationParams params;

  bool operator==(const ChatRequest&) const = default;
};

struct TokenUsage {
  long prompt_tokens = 0;
  long completion_tokens = 0;
};

struct Completion {
  std::string text;
  std::optional<TokenUsage> usage;
  std::string backend_id;
  bool cached = false;
};

// ---------------------------------------------------------------- errors

class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  // Number of attempts made when rethrown by with_retry; 0 otherwise.
  int attempts = 0;
};

class AuthError : public BackendError {
 public:
  using BackendError::BackendError;
};

class RateLimited : public BackendError {
 public:
  explicit RateLimited(const std::string& what,
                       std::optional<std::chrono::milliseconds> retry_after = std::nullopt)
      : BackendError(what), retry_after(retry_after) {}
  std::optional<std::chrono::milliseconds> retry_after;
};

class TimeoutError : public BackendError {
 public:
  using BackendError::BackendError;
};

class MalformedResponse : public BackendError {
 public:
  using BackendError::BackendError;
};

class CacheMiss : public BackendError {
 public:
  using BackendError::BackendError;
};

// ---------------------------------------------------------------- contract

class Backend {
 public:
  virtual ~Backend() = default;
  virtual Completion complete(const ChatRequest& request) = 0;
  virtual std::string id() const = 0;
};

// Canonical serialization of (messages, params): sorted param fields,
// normalized line endings. Equal requests serialize identically.
std::string canonical_request_text(const ChatRequest& request);

// SHA-256 hex of canonical_request_text; the cache key.
std::string request_key(const ChatRequest& request);

std::string sha256_hex(std::string_view data);

// ---------------------------------------------------------------- mock

// Fully deterministic backend for tests and offline runs. Responses come
// from an exact fixture map (keyed by request_key) or a fallback handler.
// All requests are logged for instrumentation.
class MockBackend : public Backend {
 public:
  using Handler = std::function<std::string(const ChatRequest&)>;

  void add_fixture(const ChatRequest& request, std::string text);
  void add_fixture_key(std::string key, std::string text);
  void set_handler(Handler handler);

  Completion complete(const ChatRequest& request) override;
  std::string id() const override { return "mock"; }

  std::vector<ChatRequest> requests() const;
  void clear_requests();

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::string> fixtures_;
  Handler handler_;
  std::vector<ChatRequest> log_;
};

// ---------------------------------------------------------------- http

struct HttpBackendConfig {
  std::string base_url;                          // e.g. http://host:port/v1
  std::string api_key_env = "DAS_API_KEY";       // credential env var NAME
  std::string completions_path = "/chat/completions";
  bool forwards_seed = true;                     // else seed dropped with a notice
  int max_in_flight = 4;
  std::chrono::milliseconds timeout{60000};
};

// Speaks the de-facto chat-completions wire format. Enforces a bounded
// number of concurrent in-flight requests.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpBackendConfig config);
  ~HttpBackend() override;

  Completion complete(const ChatRequest& request) override;
  std::string id() const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ---------------------------------------------------------------- cache

// Record/replay persistence: one file per request key under `dir`, written
// atomically (temp file + rename). Record mode forwards misses to the
// delegate and stores the result; Replay mode fails misses with CacheMiss.
class CacheBackend : public Backend {
 public:
  enum class Mode { Record, Replay };

  CacheBackend(std::filesystem::path dir, Mode mode,
               std::shared_ptr<Backend> delegate = nullptr);

  Completion complete(const ChatRequest& request) override;
  std::string id() const override;

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  Mode mode_;
  std::shared_ptr<Backend> delegate_;
  std::mutex write_mutex_;
};

// ---------------------------------------------------------------- retry

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds base_delay{500};
  // Injectable for tests; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleeper;
  std::optional<uint64_t> jitter_seed;
};

// Retries RateLimited/Timeout with exponential backoff and full jitter,
// honoring any server-provided retry-after. AuthError/MalformedResponse and
// other errors propagate immediately. The final error is rethrown with its
// `attempts` field set.
Completion with_retry(Backend& backend, const ChatRequest& request, const RetryPolicy& policy);

}  // namespace das::llm
