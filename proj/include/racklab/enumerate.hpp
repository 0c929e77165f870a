// enumerate.hpp
//
// Exhaustive enumeration of racks of small order, labelled and up to
// isomorphism, plus a naive full-scan oracle that shares no search code
// with the pruned engine.
#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "racklab/rack.hpp"

namespace racklab {

inline constexpr std::size_t kMaxLabeledOrder = 7;
inline constexpr std::size_t kMaxClassOrder = 6;
inline constexpr std::size_t kMaxOracleOrder = 3;

struct EnumReport {
    std::size_t n = 0;
    std::size_t labeled_count = 0;
    std::size_t class_count = 0;
    std::size_t quandle_class_count = 0;
    std::chrono::milliseconds elapsed{0};
    /// Canonical (lexicographically least) table of each class, sorted.
    std::vector<Table> witnesses;
    /// Published small-order counts, surfaced for reference only. Never used
    /// as an assertion.
    std::optional<std::size_t> reference_racks;
    std::optional<std::size_t> reference_quandles;
};

/// Every rack on [n], sorted by concatenated table. Columns f_y are assigned
/// one at a time; once f_y and f_z are both known, f_{(y)f_z} is forced to
/// f_z^{-1} f_y f_z and conflicts prune the branch. Top-level branches (the
/// choice of f_0) run on up to `threads` workers. Throws OrderTooLarge for
/// n > kMaxLabeledOrder.
std::vector<Rack> enumerate_labeled(std::size_t n, unsigned threads = 1);

/// Labelled racks deduplicated up to isomorphism. Throws OrderTooLarge for
/// n > kMaxClassOrder.
EnumReport enumerate_classes(std::size_t n, unsigned threads = 1);

struct OracleReport {
    EnumReport summary;
    std::vector<Table> labeled;  // sorted
};

/// Scans all (n!)^n tuples of permutations through rack_from_table and
/// classifies by brute-force relabelling. Throws OrderTooLarge for
/// n > kMaxOracleOrder.
OracleReport oracle_enumerate(std::size_t n);

/// Known counts of racks / quandles up to isomorphism, orders 1..7.
std::optional<std::size_t> published_rack_count(std::size_t n);
std::optional<std::size_t> published_quandle_count(std::size_t n);

}  // namespace racklab
