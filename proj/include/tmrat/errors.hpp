#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmrat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A point was required to lie in the open unit disk but |z| >= 1 - 1e-9.
class OutsideDisk : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonFiniteIntegrand : public Error {
 public:
  explicit NonFiniteIntegrand(std::size_t node)
      : Error("non-finite integrand value at node " + std::to_string(node)), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

class RadiusEscapesDisk : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class AccuracyNotReached : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class CountOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class TrailingPolesMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class OrderTooSmall : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

}  // namespace tmrat
