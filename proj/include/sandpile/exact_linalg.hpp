#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sandpile/integer_matrix.hpp"

namespace sandpile {

/// Exact determinant via fraction-free (Bareiss) elimination.
/// Intermediate values stay integral; row swaps track the sign.
mpz_class det(const IntegerMatrix& m);

/// Upper bound on matrix dimensions accepted by minors_gcd.  The minor
/// enumeration is an oracle for small matrices, not a production path.
inline constexpr std::size_t kMinorsGcdMaxDim = 12;

/// Gcd of the absolute values of all t-by-t minors of m.  Returns 0 iff
/// every t-minor vanishes.  Brute-force enumeration over all row/column
/// subsets; refuses matrices larger than max_dim in either dimension.
mpz_class minors_gcd(const IntegerMatrix& m, std::size_t t,
                     std::size_t max_dim = kMinorsGcdMaxDim);

/// Smith normal form U*A*V = D with unimodular transforms.
struct SnfResult {
  /// min(rows, cols) diagonal entries: the invariant factors f_1 | f_2 | ...
  /// followed by zeros.  All entries nonnegative.
  std::vector<mpz_class> diag;
  std::size_t rank = 0;
  IntegerMatrix left;   ///< U, rows x rows, det +-1
  IntegerMatrix right;  ///< V, cols x cols, det +-1

  /// D assembled as a rows x cols matrix (diag on the main diagonal).
  IntegerMatrix diagonal_matrix() const;
};

SnfResult smith_normal_form(const IntegerMatrix& m);

/// Inverse of a square matrix with determinant +-1; the inverse is again
/// integral.  Throws std::invalid_argument for anything non-unimodular.
IntegerMatrix inverse_unimodular(const IntegerMatrix& u);

/// Exact rational solution of M*x = b, or nullopt when the system is
/// inconsistent.  Free variables are fixed to zero, so the result is one
/// particular solution; callers must not depend on which one.
std::optional<std::vector<mpq_class>> solve_rational(
    const IntegerMatrix& m, const std::vector<mpz_class>& b);

/// Integer solution of M*x = b when one exists (via the SNF transforms:
/// solve D*y = U*b, then x = V*y).  Absence of a solution is a valid
/// result, not an error.
std::optional<std::vector<mpz_class>> solve_integer(
    const IntegerMatrix& m, const std::vector<mpz_class>& b);

}  // namespace sandpile
