#ifndef RBLA_ERRORS_HPP
#define RBLA_ERRORS_HPP

#include <stdexcept>

namespace rbla {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
struct shape_error : error {
  using error::error;
};

/// A precondition on the algebraic input is violated (invalid base,
/// weight mismatch, failing prerequisite check, ...).
struct invalid_input_error : error {
  using error::error;
};

/// A claimed subalgebra is not closed under the bracket or the operator.
struct closure_error : error {
  using error::error;
};

/// Supplied bases do not split the ambient space.
struct decomposition_error : error {
  using error::error;
};

/// A supplied projection is not a retraction onto the subalgebra.
struct projection_error : error {
  using error::error;
};

/// A transformation witness is unusable (singular v).
struct witness_error : error {
  using error::error;
};

/// Malformed document or scalar literal.
struct parse_error : error {
  using error::error;
};

struct arithmetic_error : error {
  using error::error;
};

} // namespace rbla

#endif
