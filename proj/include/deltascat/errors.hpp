#pragma once

#include <stdexcept>

namespace deltascat {

/// Argument outside the range where an evaluation is accurate or defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Rejected input when constructing a problem or a schedule.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The complex bracket of the regularized expression has zero modulus.
class DegenerateBracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed form that diverges at the requested input.
class SingularInputError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace deltascat
