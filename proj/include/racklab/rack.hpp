// rack.hpp
//
// Finite racks on {0, ..., n-1}. A rack is stored both as its operation
// table (table(x, y) = x |> y) and as the right translations f_y with
// (x)f_y = x |> y. Racks are validated on construction and immutable.
#pragma once

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "racklab/permutation.hpp"

namespace racklab {

/// Square table of elements, row-major. Compared lexicographically by
/// concatenated rows, which is the order used for canonical forms.
struct Table {
    std::size_t n = 0;
    std::vector<Element> cells;

    Table() = default;
    explicit Table(std::size_t order) : n(order), cells(order * order, 0) {}

    static Table from_rows(const std::vector<std::vector<Element>>& rows);

    Element& at(std::size_t x, std::size_t y) { return cells[x * n + y]; }
    Element at(std::size_t x, std::size_t y) const { return cells[x * n + y]; }

    friend bool operator==(const Table&, const Table&) = default;
    friend std::strong_ordering operator<=>(const Table& a, const Table& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.cells <=> b.cells;
    }
};

enum class ViolationKind { NotBijective, SelfDistributivityFail, ConjugationFail };

std::string to_string(ViolationKind kind);

/// One failed axiom. NotBijective uses only `y` (the column). The other
/// kinds carry the first failing x for the (y, z) pair.
struct Violation {
    ViolationKind kind;
    Element x = 0;
    Element y = 0;
    Element z = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
    bool is_rack = false;
    bool is_quandle = false;
    std::vector<Violation> violations;
};

class Rack;

/// Either a validated rack or the report explaining why the table is not one.
using RackOrReport = std::variant<Rack, AxiomReport>;

class Rack {
public:
    std::size_t order() const { return maps_.size(); }

    Element op(Element x, Element y) const { return maps_[y](x); }
    const Permutation& map(Element y) const { return maps_[y]; }
    std::span<const Permutation> maps() const { return maps_; }
    const Table& table() const { return table_; }

    bool is_quandle() const;

    friend bool operator==(const Rack& a, const Rack& b) { return a.table_ == b.table_; }

private:
    friend RackOrReport rack_from_table(const Table& table);

    Rack(Table table, std::vector<Permutation> maps)
        : table_(std::move(table)), maps_(std::move(maps)) {}

    Table table_;
    std::vector<Permutation> maps_;
};

/// Validates every axiom eagerly. Throws MalformedTable on a bad shape or an
/// entry outside 0..n-1; axiom failures are returned as an AxiomReport.
RackOrReport rack_from_table(const Table& table);

/// Same as rack_from_table, with f_y = maps[y].
RackOrReport rack_from_maps(std::span<const Permutation> maps);

/// Unwraps a RackOrReport, throwing std::invalid_argument with the first
/// witness when the input is not a rack.
Rack expect_rack(RackOrReport result);

/// Full report. Columns are checked for bijectivity first; if all are
/// bijective, Eq. f_{(y)f_z} = f_z^{-1} f_y f_z is checked per (y, z) in
/// row-major order, otherwise self-distributivity is checked per (y, z).
AxiomReport check_axioms(const Table& table);

/// (x|>y)|>z == (x|>z)|>(y|>z) for all triples. Defined for any table.
bool is_self_distributive(const Table& table);

/// Every column bijective and f_{(y)f_z} == f_z^{-1} f_y f_z for all y, z,
/// computed with explicit inverses and composition.
bool satisfies_conjugation_identity(const Table& table);

/// x |> y = x.
Rack trivial_rack(std::size_t n);

/// Image of the rack under the relabelling x -> phi(x).
Rack relabel(const Rack& rack, const Permutation& phi);

/// True iff (z)f_y lies in `subset` for all y, z in `subset`.
/// `subset` lists distinct elements; order is irrelevant.
bool is_subrack(const Rack& rack, std::span<const Element> subset);

}  // namespace racklab
