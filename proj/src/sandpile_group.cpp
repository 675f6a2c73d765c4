#include "sandpile/sandpile_group.hpp"

#include <sstream>
#include <stdexcept>

#include "sandpile/exact_linalg.hpp"

namespace sandpile {

Divisor::Divisor(std::vector<mpz_class> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("Divisor: needs at least one vertex");
  }
}

Divisor::Divisor(std::initializer_list<long> values)
    : Divisor(std::vector<mpz_class>(values.begin(), values.end())) {}

Divisor Divisor::zero(std::size_t n) {
  return Divisor(std::vector<mpz_class>(n, 0));
}

mpz_class Divisor::degree() const {
  mpz_class d = 0;
  for (const mpz_class& v : values_) d += v;
  return d;
}

std::string Divisor::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out << ",";
    out << values_[i];
  }
  out << ")";
  return out.str();
}

namespace {

void check_same_size(const Divisor& a, const Divisor& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("Divisor: size mismatch");
  }
}

}  // namespace

Divisor operator+(const Divisor& a, const Divisor& b) {
  check_same_size(a, b);
  std::vector<mpz_class> v(a.values());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return Divisor(std::move(v));
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  check_same_size(a, b);
  std::vector<mpz_class> v(a.values());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
  return Divisor(std::move(v));
}

Divisor operator*(const mpz_class& r, const Divisor& a) {
  std::vector<mpz_class> v(a.values());
  for (mpz_class& x : v) x *= r;
  return Divisor(std::move(v));
}

RationalMod1::RationalMod1(const mpq_class& q) {
  mpq_class r(q);
  r.canonicalize();
  // Subtract the floor: num <- num mod den keeps the sign of den (> 0).
  mpz_fdiv_r(r.get_num_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  r.canonicalize();
  num_ = r.get_num();
  den_ = r.get_den();
}

std::string RationalMod1::to_string() const {
  if (num_ == 0) return "0";
  std::ostringstream out;
  out << num_ << "/" << den_;
  return out.str();
}

RationalMod1 operator+(const RationalMod1& x, const RationalMod1& y) {
  return RationalMod1(x.value() + y.value());
}

RationalMod1 operator*(const mpz_class& r, const RationalMod1& x) {
  return RationalMod1(mpq_class(r * x.numerator(), x.denominator()));
}

AbelianGroup sandpile_group(const Multigraph& g,
                            std::optional<std::size_t> sink) {
  const std::size_t n = g.vertex_count();
  const std::size_t s = sink.value_or(n - 1);
  if (s >= n) {
    throw std::invalid_argument("sandpile_group: sink out of range");
  }
  if (!g.connected()) {
    throw std::invalid_argument(
        "sandpile_group: graph is disconnected, the cokernel is infinite");
  }
  const SnfResult snf = smith_normal_form(reduced_laplacian(g, s));
  return AbelianGroup(snf.diag);
}

namespace {

// Exact solution of L mu = b with mu fixed to 0 at `ground`.  For a
// connected graph and deg(b) = 0 the reduced system is nonsingular and the
// grounded row holds automatically (rows of L and entries of b both sum
// to zero).
std::vector<mpq_class> grounded_potential(const Multigraph& g,
                                          const Divisor& b,
                                          std::size_t ground) {
  const std::size_t n = g.vertex_count();
  const IntegerMatrix lr = reduced_laplacian(g, ground);
  std::vector<mpz_class> rhs;
  rhs.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != ground) rhs.push_back(b[i]);
  }
  const auto reduced = solve_rational(lr, rhs);
  if (!reduced) {
    throw std::logic_error(
        "monodromy_pairing: reduced Laplacian system is inconsistent");
  }
  std::vector<mpq_class> mu(n, 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != ground) mu[i] = (*reduced)[k++];
  }
  return mu;
}

}  // namespace

RationalMod1 monodromy_pairing(const Multigraph& g, const Divisor& a,
                               const Divisor& b) {
  const std::size_t n = g.vertex_count();
  if (a.size() != n || b.size() != n) {
    throw std::invalid_argument(
        "monodromy_pairing: divisor size does not match the vertex count");
  }
  if (!g.connected()) {
    throw std::invalid_argument("monodromy_pairing: graph is disconnected");
  }
  if (a.degree() != 0 || b.degree() != 0) {
    throw std::domain_error(
        "monodromy_pairing: both divisors must have degree 0");
  }
  const std::vector<mpq_class> mu = grounded_potential(g, b, n - 1);
  mpq_class sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += mpq_class(a[i]) * mu[i];
  return RationalMod1(sum);
}

bool divisor_class_equal(const Multigraph& g, const Divisor& a,
                         const Divisor& b) {
  const std::size_t n = g.vertex_count();
  if (a.size() != n || b.size() != n) {
    throw std::invalid_argument(
        "divisor_class_equal: divisor size does not match the vertex count");
  }
  if (!g.connected()) {
    throw std::invalid_argument("divisor_class_equal: graph is disconnected");
  }
  if (a.degree() != b.degree()) return false;
  const Divisor d = a - b;
  return solve_integer(laplacian(g), d.values()).has_value();
}

}  // namespace sandpile
