#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace writersroom {

struct Diagnostic;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration, missing credentials, unreadable input files.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, std::vector<std::string> details = {})
      : Error(what), details_(std::move(details)) {}
  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

class ProviderError : public Error {
 public:
  using Error::Error;
};

// Transport failed on every permitted attempt.
class ProviderUnavailable : public ProviderError {
 public:
  ProviderUnavailable(const std::string& what, int attempts)
      : ProviderError(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// The endpoint answered, but not with a chat-completions body.
class ProtocolError : public ProviderError {
 public:
  using ProviderError::ProviderError;
};

// A strict script has no entry for the requested key.
class ScriptMiss : public ProviderError {
 public:
  explicit ScriptMiss(std::string key)
      : ProviderError("script has no entry for " + key), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// A writer produced no usable sentence on any attempt.
class EmptyContribution : public Error {
 public:
  using Error::Error;
};

class SessionError : public Error {
 public:
  using Error::Error;
};

class SessionCollision : public SessionError {
 public:
  using SessionError::SessionError;
};

class SessionStateError : public SessionError {
 public:
  using SessionError::SessionError;
};

class DigestMismatch : public SessionError {
 public:
  using SessionError::SessionError;
};

class StorageError : public SessionError {
 public:
  using SessionError::SessionError;
};

// The stored transcript disagrees with what the engine is about to record.
class ReplayDivergence : public SessionError {
 public:
  using SessionError::SessionError;
};

class Interrupted : public Error {
 public:
  Interrupted() : Error("run interrupted") {}
};

}  // namespace writersroom
