#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace sandpile {

/// Finite abelian group in invariant-factor form: an ordered divisibility
/// chain f_1 | f_2 | ... with every factor >= 2.  The trivial group is the
/// empty chain with order 1.
class AbelianGroup {
public:
  AbelianGroup() = default;

  /// Accepts a divisibility chain that may still contain unit factors;
  /// units are dropped.  Throws if the chain property fails or a factor
  /// is not positive.
  explicit AbelianGroup(std::vector<mpz_class> chain);

  const std::vector<mpz_class>& invariant_factors() const { return factors_; }
  const mpz_class& order() const { return order_; }
  bool trivial() const { return factors_.empty(); }

  bool operator==(const AbelianGroup&) const = default;

  /// "Z_2 x Z_138"; the trivial group prints as "0".
  std::string to_string() const;

private:
  std::vector<mpz_class> factors_;
  mpz_class order_ = 1;
};

/// Canonical invariant-factor form of Z_{n_1} + ... + Z_{n_k} for arbitrary
/// orders n_i >= 1, obtained as the SNF of diag(n_1, ..., n_k).
AbelianGroup canonicalize_group(const std::vector<mpz_class>& orders);

/// Canonical form is a complete isomorphism invariant.
bool groups_isomorphic(const AbelianGroup& g1, const AbelianGroup& g2);

}  // namespace sandpile
