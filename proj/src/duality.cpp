#include "sandpile/duality.hpp"

#include <stdexcept>

#include "sandpile/sandpile_group.hpp"
#include "sandpile/thick_cycle.hpp"

namespace sandpile {

namespace {

DualComparison compare_against_thick_cycle(MultiplicityVector a,
                                           const Multigraph& dual) {
  AbelianGroup closed = thick_cycle_group(a);
  AbelianGroup snf_thick = sandpile_group(build_thick_cycle(a));
  AbelianGroup snf_dual = sandpile_group(dual);
  const bool sides_match = groups_isomorphic(closed, snf_thick);
  const bool isomorphic = groups_isomorphic(snf_dual, closed);
  return DualComparison{std::move(a),        std::move(closed),
                        std::move(snf_thick), std::move(snf_dual),
                        sides_match,          isomorphic};
}

}  // namespace

DualComparison banana_dual(const std::vector<std::size_t>& lengths) {
  std::vector<mpz_class> mults(lengths.begin(), lengths.end());
  return compare_against_thick_cycle(MultiplicityVector(std::move(mults)),
                                     build_banana(lengths));
}

BookDualReport book_dual(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1) {
    throw std::invalid_argument("book_dual: requires n >= 2 and k >= 1");
  }
  // The dual thick (k+1)-cycle carries multiplicities (1, n-1, ..., n-1).
  std::vector<mpz_class> mults(k + 1, mpz_class(n) - 1);
  mults[0] = 1;
  DualComparison cmp = compare_against_thick_cycle(
      MultiplicityVector(std::move(mults)), build_book_graph(n, k));

  // Published closed form: k - 2 copies of Z_{n-1} (none when k <= 2;
  // unit factors vanish when n = 2).
  std::vector<mpz_class> claim;
  if (k > 2) claim.assign(k - 2, mpz_class(n) - 1);
  AbelianGroup published(std::move(claim));

  const bool matches = groups_isomorphic(published, cmp.snf_dual);
  return BookDualReport{n, k, std::move(cmp), std::move(published), matches};
}

}  // namespace sandpile
