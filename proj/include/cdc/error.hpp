#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a byte offset for graph6 and a
// 1-based line number for the line-oriented formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ContractionError : public GraphError {
 public:
  ContractionError(int u, int v, int common)
      : GraphError("contracting " + std::to_string(u) + "-" + std::to_string(v) +
                   " would create a parallel edge: triangle (" + std::to_string(u) + "," +
                   std::to_string(v) + "," + std::to_string(common) + ")"),
        u_(u), v_(v), common_(common) {}
  int u() const { return u_; }
  int v() const { return v_; }
  int common_neighbor() const { return common_; }

 private:
  int u_, v_, common_;
};

}  // namespace cdc
