#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace copoisson {

/// A value was requested beyond the degree bound a truncated table was built for.
class BoundError : public std::out_of_range {
 public:
  BoundError(const std::string& what, std::size_t required_bound)
      : std::out_of_range(what), required_bound_(required_bound) {}

  /// The smallest domain bound that would have satisfied the request.
  std::size_t required_bound() const noexcept { return required_bound_; }

 private:
  std::size_t required_bound_;
};

/// Malformed polynomial expression; column is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error(message + " at column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Structure file does not match the schema of its kind. `path` is a JSON pointer.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace copoisson
