#pragma once

#include <stdexcept>
#include <string>

namespace sysfill {

// Bad user-supplied values (q < 3, t <= 0, t below the balance point, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Iteration caps, non-convergence, tolerance violations in numeric kernels.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed permutation data, bad map files, inconsistent face tables.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A gluing that fails its own consistency checks (corner cycles).
class AssemblyError : public std::runtime_error {
 public:
  explicit AssemblyError(const std::string& what) : std::runtime_error(what) {}
};

// Geodesic search exceeded its configured ceiling; partial results available.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Exact and floating-point rank computations disagree.
class RankCertificationError : public std::runtime_error {
 public:
  explicit RankCertificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sysfill
