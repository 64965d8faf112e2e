#ifndef TREESPECTRA_ERRORS_HPP
#define TREESPECTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treespectra {

// Requested radius lies beyond the materialized part of the tree.
class HorizonExceededError : public std::runtime_error {
public:
  explicit HorizonExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A tail test could neither certify convergence nor divergence.
// Carries the partial sum accumulated up to the horizon.
class InconclusiveError : public std::runtime_error {
public:
  InconclusiveError(const std::string& what, double partial)
      : std::runtime_error(what), partial_sum(partial) {}
  double partial_sum;
};

class UnsupportedOperationError : public std::runtime_error {
public:
  explicit UnsupportedOperationError(const std::string& what)
      : std::runtime_error(what) {}
};

// Input data does not cover the region a computation needs.
class IncompleteDataError : public std::runtime_error {
public:
  explicit IncompleteDataError(const std::string& what)
      : std::runtime_error(what) {}
};

// A bound was requested outside its hypotheses; the message names the
// violated hypothesis.
class InapplicableError : public std::invalid_argument {
public:
  explicit InapplicableError(const std::string& what)
      : std::invalid_argument(what) {}
};

class SizeCapError : public std::runtime_error {
public:
  explicit SizeCapError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace treespectra

#endif  // TREESPECTRA_ERRORS_HPP
