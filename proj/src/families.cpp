// families.cpp
#include "racklab/families.hpp"

#include <algorithm>
#include <string>

#include "racklab/errors.hpp"

namespace racklab {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::vector<Element> inverses_of(const Table& g, Element e) {
    const std::size_t n = g.n;
    std::vector<Element> inv(n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (g.at(a, b) == e) inv[a] = b;
        }
    }
    return inv;
}

}  // namespace

Element validate_group(const Table& g) {
    const std::size_t n = g.n;
    if (n == 0 || g.cells.size() != n * n) throw NotAGroup("closure: table is not square");
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
        if (g.cells[i] >= n) throw NotAGroup("closure: product " + pair_str(i / n, i % n) + " out of range");
    }

    Element e = Element(n);
    for (Element c = 0; c < n && e == n; ++c) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a) ok = g.at(c, a) == a && g.at(a, c) == a;
        if (ok) e = c;
    }
    if (e == n) throw NotAGroup("identity: no two-sided identity element");

    for (Element a = 0; a < n; ++a) {
        bool found = false;
        for (Element b = 0; b < n && !found; ++b) found = g.at(a, b) == e && g.at(b, a) == e;
        if (!found) throw NotAGroup("inverses: element " + std::to_string(a) + " has no inverse");
    }

    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            for (Element c = 0; c < n; ++c) {
                if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c))) {
                    throw NotAGroup("associativity: fails at (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ", " + std::to_string(c) + ")");
                }
            }
        }
    }
    return e;
}

Table cyclic_group(std::size_t n) {
    Table t(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t.at(a, b) = Element((a + b) % n);
    }
    return t;
}

Table direct_product(const Table& a, const Table& b) {
    const std::size_t n = a.n * b.n;
    Table t(n);
    // (a1, b1) encoded as a1 * |B| + b1
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Element pa = a.at(x / b.n, y / b.n);
            const Element pb = b.at(x % b.n, y % b.n);
            t.at(x, y) = Element(pa * b.n + pb);
        }
    }
    return t;
}

Table dihedral_group(std::size_t m) {
    const std::size_t n = 2 * m;
    Table t(n);
    // s r = r^{-1} s, so r^i s^e * r^j s^f = r^{i + (-1)^e j} s^{e+f}
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t i = x % m, e = x / m, j = y % m, f = y / m;
            const std::size_t rot = e ? (i + m - j) % m : (i + j) % m;
            t.at(x, y) = Element(rot + m * ((e + f) % 2));
        }
    }
    return t;
}

Table quaternion_group() {
    // 0..3 = 1, i, j, k; 4..7 = their negatives.
    // Unit products: signs[a][b] and result index of basis a*b.
    static constexpr int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    Table t(8);
    for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t y = 0; y < 8; ++y) {
            const std::size_t bx = x % 4, by = y % 4;
            int s = sign[bx][by];
            if (x >= 4) s = -s;
            if (y >= 4) s = -s;
            t.at(x, y) = Element(basis[bx][by] + (s < 0 ? 4 : 0));
        }
    }
    return t;
}

Table symmetric_group(std::size_t k) {
    const auto perms = all_permutations(k);
    const std::size_t n = perms.size();
    Table t(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Permutation prod = perms[a] * perms[b];
            // perms is sorted, so binary search the product
            const auto it = std::lower_bound(perms.begin(), perms.end(), prod);
            t.at(a, b) = Element(it - perms.begin());
        }
    }
    return t;
}

std::vector<Permutation> group_automorphisms(const Table& group) {
    validate_group(group);
    std::vector<Permutation> out;
    for (const Permutation& p : all_permutations(group.n)) {
        bool hom = true;
        for (Element a = 0; a < group.n && hom; ++a) {
            for (Element b = 0; b < group.n && hom; ++b) {
                hom = p(group.at(a, b)) == group.at(p(a), p(b));
            }
        }
        if (hom) out.push_back(p);
    }
    return out;
}

Rack conjugation_quandle(const Table& group) {
    const Element e = validate_group(group);
    const auto inv = inverses_of(group, e);
    const std::size_t n = group.n;
    Table t(n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) t.at(x, y) = group.at(group.at(inv[y], x), y);
    }
    return expect_rack(rack_from_table(t));
}

Rack alexander_quandle(const Table& add, const Permutation& tau) {
    const Element zero = validate_group(add);
    const std::size_t n = add.n;
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (add.at(a, b) != add.at(b, a)) throw NotAbelian("group is not abelian at " + pair_str(a, b));
        }
    }
    if (tau.size() != n) throw NotAutomorphism("tau has the wrong size");
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (tau(add.at(a, b)) != add.at(tau(a), tau(b))) {
                throw NotAutomorphism("tau is not additive at " + pair_str(a, b));
            }
        }
    }
    const auto neg = inverses_of(add, zero);
    Table t(n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) t.at(x, y) = add.at(tau(add.at(x, neg[y])), y);
    }
    return expect_rack(rack_from_table(t));
}

Rack dihedral_quandle(std::size_t n) {
    if (n == 0) throw std::invalid_argument("rack order must be positive");
    // Z_n is a group by construction, so skip the O(n^3) group validation.
    Table t(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) t.at(x, y) = Element((2 * y + n - x) % n);
    }
    return expect_rack(rack_from_table(t));
}

}  // namespace racklab
