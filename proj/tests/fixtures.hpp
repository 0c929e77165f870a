// fixtures.hpp
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "racklab/families.hpp"
#include "racklab/rack.hpp"

namespace fixtures {

inline oracle::Tab to_tab(const racklab::Table& t) {
    oracle::Tab r(t.n, std::vector<unsigned>(t.n));
    for (std::size_t x = 0; x < t.n; ++x)
        for (std::size_t y = 0; y < t.n; ++y) r[x][y] = t.at(x, y);
    return r;
}

inline racklab::Table from_tab(const oracle::Tab& t) {
    racklab::Table r(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y) r.at(x, y) = t[x][y];
    return r;
}

inline racklab::Permutation to_perm(const oracle::Perm& p) {
    return racklab::Permutation::from_images(std::vector<racklab::Element>(p.begin(), p.end()));
}

struct Named {
    std::string name;
    racklab::Rack rack;
};

/// Trivial, dihedral, Alexander and conjugation quandles of order <= max_n
/// (max_n <= 8).
inline std::vector<Named> family_racks(std::size_t max_n = 8) {
    using namespace racklab;
    std::vector<Named> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.push_back({"trivial_" + std::to_string(n), trivial_rack(n)});
        out.push_back({"dihedral_" + std::to_string(n), dihedral_quandle(n)});
    }
    std::vector<std::pair<std::string, Table>> abelian;
    for (std::size_t n = 1; n <= max_n; ++n) abelian.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    if (max_n >= 4) abelian.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))});
    if (max_n >= 8) {
        abelian.push_back({"Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4))});
        abelian.push_back({"Z2xZ2xZ2", direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))});
    }
    for (const auto& [name, add] : abelian) {
        const auto autos = group_automorphisms(add);
        for (std::size_t i = 0; i < autos.size(); ++i) {
            out.push_back({"alexander_" + name + "_" + std::to_string(i), alexander_quandle(add, autos[i])});
        }
    }
    if (max_n >= 6) out.push_back({"conj_S3", conjugation_quandle(symmetric_group(3))});
    if (max_n >= 8) {
        out.push_back({"conj_D4", conjugation_quandle(dihedral_group(4))});
        out.push_back({"conj_Q8", conjugation_quandle(quaternion_group())});
    }
    for (std::size_t n = 1; n <= max_n; ++n) out.push_back({"conj_Z" + std::to_string(n), conjugation_quandle(cyclic_group(n))});
    return out;
}

}  // namespace fixtures
