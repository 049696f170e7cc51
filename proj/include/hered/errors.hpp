#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hered {

/// Input violates an operation's mathematical precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured exploration cap (degree, subset budget, ...) was exceeded.
/// `progress` carries whatever partial result the operation managed to
/// produce before giving up.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what, std::string progress = {})
      : std::runtime_error(what), progress_(std::move(progress)) {}
  const std::string& progress() const noexcept { return progress_; }

 private:
  std::string progress_;
};

/// A state that the algorithms guarantee cannot happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input (polynomial or field grammar).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  /// 1-based character position of the offending token.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hered
