#pragma once

#include <stdexcept>
#include <string>

namespace wgcoe {

// Invalid input: malformed partitions, mismatched sizes, zero denominators.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Evaluation of a rational function at one of its poles.
class PoleError : public DomainError {
public:
  explicit PoleError(long long N)
      : DomainError("pole at N = " + std::to_string(N)), N_(N) {}
  long long at() const noexcept { return N_; }

private:
  long long N_;
};

// A cost guard refused the computation.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wgcoe
