#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace prabhakar {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested feature exists in the theory but not in this library (e.g. m > 1).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series did not reach its tolerance within the term budget, or the
/// attainable precision (cancellation) is worse than the tolerance.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double partial_sum, double last_term,
                  std::size_t terms)
      : std::runtime_error(what),
        partial_sum_(partial_sum),
        last_term_(last_term),
        terms_(terms) {}

  double partial_sum() const noexcept { return partial_sum_; }
  double last_term() const noexcept { return last_term_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  double partial_sum_;
  double last_term_;
  std::size_t terms_;
};

/// Kernel/operator parameters (alpha, beta, gamma, omega).
struct PrabhakarTriplet {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double omega = 0.0;

  void validate() const {
    if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma) &&
          std::isfinite(omega)))
      throw DomainError("PrabhakarTriplet: all parameters must be finite");
    if (!(alpha > 0.0)) {
      std::ostringstream os;
      os << "PrabhakarTriplet: alpha must be positive, got " << alpha;
      throw DomainError(os.str());
    }
  }
};

/// Stopping rule shared by every series in the library: a term is negligible
/// when |term| <= rtol * |sum| + atol; summation stops after two negligible
/// terms in a row.
struct TruncationPolicy {
  double rtol = 1e-15;
  double atol = 0.0;
  std::size_t max_terms = 5000;

  void validate() const {
    if (!(rtol > 0.0) || !(atol >= 0.0) || max_terms < 1)
      throw DomainError("TruncationPolicy: need rtol > 0, atol >= 0, max_terms >= 1");
  }

  bool negligible(long double term, long double sum) const {
    using std::fabs;
    return fabs(term) <= static_cast<long double>(rtol) * fabs(sum) +
                             static_cast<long double>(atol);
  }
};

}  // namespace prabhakar
