#ifndef LATSEC_ERRORS_HPP
#define LATSEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latsec {

// Input fails a precondition (bad domain, malformed code, duplicate words, ...).
class validation_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Work would exceed a configured cap (message-space enumeration, pairwise scans).
class resource_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A construction produced a degenerate object (rank-deficient generator, ...).
class construction_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An evaluation cannot be normalized as requested (|C| != 2^(n/2), ...).
class normalization_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace latsec

#endif
