#pragma once

#include <stdexcept>
#include <string>

namespace ecw {

// Input outside an operation's mathematical domain (zero where a unit or
// nonzero value is required, non-square-free twist parameter, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BadReduction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A bound was requested whose hypothesis does not hold for this curve.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The local solubility search hit its depth cap without a certificate.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ecw
