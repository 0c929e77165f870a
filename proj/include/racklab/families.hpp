// families.hpp
//
// Standard rack families and the small groups used to build them.
// Group tables are Tables with table.at(a, b) = a * b.
#pragma once

#include <vector>

#include "racklab/permutation.hpp"
#include "racklab/rack.hpp"

namespace racklab {

/// Checks closure, identity, inverses and associativity. Returns the
/// identity element; throws NotAGroup naming the failed axiom and a witness.
Element validate_group(const Table& group);

Table cyclic_group(std::size_t n);
Table direct_product(const Table& a, const Table& b);
/// Dihedral group of order 2m: element r^i s^e is encoded as i + m*e.
Table dihedral_group(std::size_t m);
/// Q8 = {±1, ±i, ±j, ±k}.
Table quaternion_group();
/// Sym(k) with elements in lexicographic order of image lists and
/// right-action composition (first a, then b).
Table symmetric_group(std::size_t k);

/// Brute-force automorphism list (identity first). Intended for order <= 8.
std::vector<Permutation> group_automorphisms(const Table& group);

/// x |> y = y^{-1} x y.
Rack conjugation_quandle(const Table& group);

/// x |> y = (x - y)tau + y over an abelian group written additively.
/// Throws NotAbelian / NotAutomorphism.
Rack alexander_quandle(const Table& add, const Permutation& tau);

/// Alexander quandle of Z_n with tau = negation: x |> y = 2y - x mod n.
Rack dihedral_quandle(std::size_t n);

}  // namespace racklab
