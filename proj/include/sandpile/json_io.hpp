#pragma once

#include <json.hpp>

#include <gmpxx.h>

#include "sandpile/abelian_group.hpp"
#include "sandpile/multigraph.hpp"
#include "sandpile/sandpile_group.hpp"

namespace sandpile {

/// Integers that fit in 64 bits are emitted as JSON numbers; anything
/// larger becomes a decimal string, so values survive the round trip
/// without floating-point truncation.
nlohmann::json mpz_to_json(const mpz_class& z);

/// Accepts JSON integers and decimal strings.  Throws std::invalid_argument
/// for anything else (including JSON floats: exactness is the point).
mpz_class mpz_from_json(const nlohmann::json& j);

/// Graph JSON: { "vertex_count": n, "edges": [[i, j, multiplicity], ...] },
/// 0-based endpoints with i < j, multiplicities >= 1, no duplicate pairs.
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

/// Group JSON: { "invariant_factors": [f_1, ...], "order": N }.
nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);

/// Divisor JSON: a plain integer array indexed by vertex.
nlohmann::json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const nlohmann::json& j);

}  // namespace sandpile
