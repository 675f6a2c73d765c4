#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sandpile/abelian_group.hpp"
#include "sandpile/multigraph.hpp"

namespace sandpile {

/// Integer vertex labelling of a multigraph.  Group elements are the
/// degree-0 divisors modulo the integer image of the Laplacian.
class Divisor {
public:
  explicit Divisor(std::vector<mpz_class> values);
  Divisor(std::initializer_list<long> values);

  static Divisor zero(std::size_t n);

  std::size_t size() const { return values_.size(); }
  const mpz_class& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<mpz_class>& values() const { return values_; }

  mpz_class degree() const;

  bool operator==(const Divisor&) const = default;

  std::string to_string() const;  // "(1,-1,0)"

private:
  std::vector<mpz_class> values_;
};

Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
Divisor operator*(const mpz_class& r, const Divisor& a);

/// Element of Q/Z kept as the canonical reduced representative in [0, 1):
/// 0 <= numerator < denominator, gcd 1, with denominator 1 encoding zero.
class RationalMod1 {
public:
  RationalMod1() = default;
  explicit RationalMod1(const mpq_class& q);

  const mpz_class& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// The representative in [0, 1) as an exact rational.
  mpq_class value() const { return mpq_class(num_, den_); }

  bool operator==(const RationalMod1&) const = default;

  std::string to_string() const;  // "2/3", or "0" for zero

private:
  mpz_class num_ = 0;
  mpz_class den_ = 1;
};

RationalMod1 operator+(const RationalMod1& x, const RationalMod1& y);
RationalMod1 operator*(const mpz_class& r, const RationalMod1& x);

/// Sandpile (critical) group: cokernel of the reduced Laplacian, in
/// invariant-factor form.  The result is the same for every sink; the
/// default sink is the last vertex.
AbelianGroup sandpile_group(const Multigraph& g,
                            std::optional<std::size_t> sink = std::nullopt);

/// Monodromy pairing <[a],[b]> in Q/Z for degree-0 divisors: a^T mu mod 1
/// where L mu = b.  The system is solved with one vertex grounded; the
/// value does not depend on the ground, the solution, or the chosen class
/// representatives.
RationalMod1 monodromy_pairing(const Multigraph& g, const Divisor& a,
                               const Divisor& b);

/// True iff a and b define the same divisor class: equal degrees and
/// a - b in the integer column span of the Laplacian.
bool divisor_class_equal(const Multigraph& g, const Divisor& a,
                         const Divisor& b);

}  // namespace sandpile
