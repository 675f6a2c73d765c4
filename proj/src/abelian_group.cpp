#include "sandpile/abelian_group.hpp"

#include <stdexcept>

#include "sandpile/exact_linalg.hpp"
#include "sandpile/integer_matrix.hpp"

namespace sandpile {

AbelianGroup::AbelianGroup(std::vector<mpz_class> chain) {
  for (const auto& f : chain) {
    if (f <= 0)
      throw std::invalid_argument("invariant factor " + f.get_str() +
                                  " is not positive");
    if (!factors_.empty() && f % factors_.back() != 0)
      throw std::invalid_argument("factors violate the divisibility chain: " +
                                  factors_.back().get_str() + " does not divide " +
                                  f.get_str());
    order_ *= f;
    if (f > 1) factors_.push_back(f);
  }
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z_" + factors_[i].get_str();
  }
  return s;
}

AbelianGroup canonicalize_group(const std::vector<mpz_class>& orders) {
  for (const auto& n : orders)
    if (n < 1)
      throw std::invalid_argument("group order " + n.get_str() +
                                  " must be >= 1");
  IntegerMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
  return AbelianGroup(smith_normal_form(d).diag);
}

bool groups_isomorphic(const AbelianGroup& g1, const AbelianGroup& g2) {
  return g1.invariant_factors() == g2.invariant_factors();
}

}  // namespace sandpile
