#pragma once

#include <stdexcept>
#include <string>

namespace lfq {

// Input or precondition failure; the CLI maps it to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical failure inside an otherwise valid computation.
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lfq
