// enumerate_oracle.cpp
//
// Naive reference enumeration. Deliberately independent of the pruned
// engine: it walks every tuple of n permutations, asks rack_from_table, and
// classifies by scanning all relabellings with std::next_permutation.
#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "racklab/enumerate.hpp"
#include "racklab/errors.hpp"

namespace racklab {

namespace {

std::vector<std::vector<Element>> naive_perms(std::size_t n) {
    std::vector<std::vector<Element>> out;
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Table least_relabelling(const Table& t) {
    const std::size_t n = t.n;
    std::vector<Element> phi(n);
    std::iota(phi.begin(), phi.end(), Element{0});
    Table best = t;
    do {
        Table r(n);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) r.at(phi[x], phi[y]) = phi[t.at(x, y)];
        }
        best = std::min(best, r);
    } while (std::next_permutation(phi.begin(), phi.end()));
    return best;
}

}  // namespace

OracleReport oracle_enumerate(std::size_t n) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    if (n > kMaxOracleOrder) {
        throw OrderTooLarge("oracle enumeration is capped at order " + std::to_string(kMaxOracleOrder));
    }
    const auto start = std::chrono::steady_clock::now();
    const auto perms = naive_perms(n);
    const std::size_t k = perms.size();

    OracleReport out;
    std::vector<std::size_t> digits(n, 0);  // odometer over perms^n
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= k;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Table t(n);
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t x = 0; x < n; ++x) t.at(x, y) = perms[digits[y]][x];
        }
        if (std::holds_alternative<Rack>(rack_from_table(t))) out.labeled.push_back(t);
        for (std::size_t d = 0; d < n && ++digits[d] == k; ++d) digits[d] = 0;
    }
    std::sort(out.labeled.begin(), out.labeled.end());

    std::set<Table> classes;
    for (const Table& t : out.labeled) classes.insert(least_relabelling(t));
    auto& s = out.summary;
    s.n = n;
    s.labeled_count = out.labeled.size();
    s.witnesses.assign(classes.begin(), classes.end());
    s.class_count = s.witnesses.size();
    for (const Table& t : s.witnesses) {
        bool q = true;
        for (std::size_t x = 0; x < n; ++x) q = q && t.at(x, x) == x;
        s.quandle_class_count += q;
    }
    s.reference_racks = published_rack_count(n);
    s.reference_quandles = published_quandle_count(n);
    s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return out;
}

}  // namespace racklab
