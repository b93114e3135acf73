// Canonical request serialization and hashing. The cache key must be a pure
// function of (messages, params): any byte change in a message or any param
// field change produces a different key.

#include <openssl/sha.h>

#include <cstdio>

#include "das/backend.hpp"

namespace das::llm {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::System:
      return "system";
    case Role::User:
      return "user";
    case Role::Assistant:
      return "assistant";
  }
  return "user";
}

namespace {

std::string normalize_newlines(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r') {
      if (i + 1 < s.size() && s[i + 1] == '\n') continue;
      out.push_back('\n');
      continue;
    }
    out.push_back(s[i]);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string canonical_request_text(const ChatRequest& request) {
  std::string out = "params\n";
  out += "max_output_tokens=" + std::to_string(request.params.max_output_tokens) + "\n";
  out += "model=" + request.params.model + "\n";
  out += "seed=" + (request.params.seed ? std::to_string(*request.params.seed) : "none") + "\n";
  out += "temperature=" + format_double(request.params.temperature) + "\n";
  out += "messages\n";
  for (const Message& m : request.messages) {
    std::string content = normalize_newlines(m.content);
    out += std::string(role_name(m.role)) + " " + std::to_string(content.size()) + "\n";
    out += content;
    out += "\n";
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * SHA256_DIGEST_LENGTH);
  for (unsigned char b : digest) {
    out.push_back(hex[b >> 4]);
    out.push_back(hex[b & 0xf]);
  }
  return out;
}

std::string request_key(const ChatRequest& request) {
  return sha256_hex(canonical_request_text(request));
}

}  // namespace das::llm
