#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewspec {

enum class Errc {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  NotBipartite,
  InvalidBipartition,
  NotSymmetric,
  UnderlyingGraphMismatch,
  OddCycle,
  NotACycle,
  CapExceeded,
  LengthMismatch,
  NotRegular,
  BudgetExceeded,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Base of every error raised by the library. `code()` identifies the
/// failure; the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised when a two-coloring does not exist. The witness is an odd closed
/// walk v0 v1 ... v_{L-1} (v_{L-1} adjacent to v0) with distinct vertices.
class NotBipartiteError : public Error {
 public:
  NotBipartiteError(std::vector<int> odd_cycle);
  const std::vector<int>& odd_cycle() const noexcept { return odd_cycle_; }

 private:
  std::vector<int> odd_cycle_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace skewspec
