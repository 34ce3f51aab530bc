#ifndef TCB_ERRORS_HPP
#define TCB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcb {

/// Base class for all library errors.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. Carries the byte offset of the offending token.
class parse_error : public error {
  public:
    parse_error(std::size_t position, const std::string& message)
        : error("syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Operands live over different coefficient fields.
class field_mismatch : public error {
  public:
    using error::error;
};

/// Operands live over different variable sets or free modules of different shape.
class shape_mismatch : public error {
  public:
    using error::error;
};

/// Invalid field descriptor (non-prime modulus, zero denominator, ...).
class invalid_field : public error {
  public:
    using error::error;
};

/// A configured work limit (pair queue, denominator exponent) was exceeded.
class resource_exhausted : public error {
  public:
    using error::error;
};

/// The generators are not primary for the irrelevant maximal ideal.
class not_primary : public error {
  public:
    using error::error;
};

/// A vector that was expected to be a relation is not one, or does not lie
/// in the span of the given basis.
class not_a_relation : public error {
  public:
    using error::error;
};

/// The supplied columns do not form a free basis of the relation module.
class basis_not_free : public error {
  public:
    using error::error;
};

/// Splitting of the relation module could not be certified (some generator
/// involves z, so the two-variable base change does not apply).
class splitting_unavailable : public error {
  public:
    using error::error;
};

/// The curve fails the Jacobian criterion; membership decisions are disabled.
class singular_curve : public error {
  public:
    using error::error;
};

/// No linear change of coordinates made the defining polynomial monic in z.
class no_monic_coordinate : public error {
  public:
    using error::error;
};

/// Problem document violates the input schema.
class schema_error : public error {
  public:
    using error::error;
};

}  // namespace tcb

#endif
