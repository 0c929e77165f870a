// isomorphism.hpp
#pragma once

#include <optional>

#include "racklab/rack.hpp"

namespace racklab {

/// phi with (x |> y)phi = (x)phi |>' (y)phi.
struct Isomorphism {
    Permutation forward;
};

/// Backtracking over images with partial-homomorphism pruning. Returns
/// nullopt when the racks are not isomorphic (including different orders).
std::optional<Isomorphism> find_isomorphism(const Rack& a, const Rack& b);

/// True iff phi is a bijective homomorphism a -> b.
bool is_isomorphism(const Rack& a, const Rack& b, const Permutation& phi);

/// Lexicographically least operation table over all n! relabellings, found
/// by a prefix-pruned scan. Intended for n <= 8.
Table canonical_form(const Rack& rack);

}  // namespace racklab
