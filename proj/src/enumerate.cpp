// enumerate.cpp
#include "racklab/enumerate.hpp"

#include <array>
#include <set>

#include "racklab/errors.hpp"
#include "racklab/parallel.hpp"

namespace racklab {

namespace {

using Img = std::array<std::uint8_t, kMaxLabeledOrder>;

struct SearchState {
    std::array<Img, kMaxLabeledOrder> f{};
    std::array<bool, kMaxLabeledOrder> set{};
};

class LabeledSearch {
public:
    explicit LabeledSearch(std::size_t n) : n_(n) {
        for (const Permutation& p : all_permutations(n)) {
            Img img{};
            for (std::size_t x = 0; x < n; ++x) img[x] = std::uint8_t(p(Element(x)));
            perms_.push_back(img);
        }
    }

    std::size_t branch_count() const { return perms_.size(); }

    /// All racks whose f_0 is the `branch`-th permutation.
    std::vector<Table> run_branch(std::size_t branch) const {
        std::vector<Table> out;
        SearchState s;
        if (assign(s, 0, perms_[branch])) search(s, out);
        return out;
    }

private:
    // g^{-1} a g
    Img conj(const Img& a, const Img& g) const {
        Img inv{}, r{};
        for (std::size_t x = 0; x < n_; ++x) inv[g[x]] = std::uint8_t(x);
        for (std::size_t x = 0; x < n_; ++x) r[x] = g[a[inv[x]]];
        return r;
    }

    bool same(const Img& a, const Img& b) const {
        for (std::size_t x = 0; x < n_; ++x) {
            if (a[x] != b[x]) return false;
        }
        return true;
    }

    // Forces f_k = f_z^{-1} f_y f_z for k = (y)f_z.
    bool force_pair(SearchState& s, std::size_t y, std::size_t z, std::vector<std::size_t>& queue) const {
        const std::size_t k = s.f[z][y];
        const Img req = conj(s.f[y], s.f[z]);
        if (s.set[k]) return same(s.f[k], req);
        s.f[k] = req;
        s.set[k] = true;
        queue.push_back(k);
        return true;
    }

    bool assign(SearchState& s, std::size_t y, const Img& img) const {
        s.f[y] = img;
        s.set[y] = true;
        std::vector<std::size_t> queue{y};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t a = queue[head];
            for (std::size_t b = 0; b < n_; ++b) {
                if (!s.set[b]) continue;
                if (!force_pair(s, a, b, queue)) return false;
                if (b != a && !force_pair(s, b, a, queue)) return false;
            }
        }
        return true;
    }

    void search(const SearchState& s, std::vector<Table>& out) const {
        std::size_t y = 0;
        while (y < n_ && s.set[y]) ++y;
        if (y == n_) {
            Table t(n_);
            for (std::size_t x = 0; x < n_; ++x) {
                for (std::size_t c = 0; c < n_; ++c) t.at(x, c) = s.f[c][x];
            }
            out.push_back(std::move(t));
            return;
        }
        for (const Img& img : perms_) {
            SearchState next = s;
            if (assign(next, y, img)) search(next, out);
        }
    }

    std::size_t n_;
    std::vector<Img> perms_;
};

Table relabel_table(const Table& t, const Permutation& phi) {
    Table r(t.n);
    for (Element x = 0; x < t.n; ++x) {
        for (Element y = 0; y < t.n; ++y) r.at(phi(x), phi(y)) = phi(t.at(x, y));
    }
    return r;
}

bool diagonal_fixed(const Table& t) {
    for (std::size_t x = 0; x < t.n; ++x) {
        if (t.at(x, x) != x) return false;
    }
    return true;
}

}  // namespace

std::vector<Rack> enumerate_labeled(std::size_t n, unsigned threads) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    if (n > kMaxLabeledOrder) {
        throw OrderTooLarge("labelled enumeration is capped at order " + std::to_string(kMaxLabeledOrder));
    }
    const LabeledSearch search(n);
    std::vector<std::vector<Table>> per_branch(search.branch_count());
    parallel_for(per_branch.size(), threads, [&](std::size_t b) { per_branch[b] = search.run_branch(b); });

    std::vector<Table> tables;
    for (auto& v : per_branch) {
        for (auto& t : v) tables.push_back(std::move(t));
    }
    std::sort(tables.begin(), tables.end());
    std::vector<Rack> out;
    out.reserve(tables.size());
    for (const Table& t : tables) out.push_back(expect_rack(rack_from_table(t)));
    return out;
}

EnumReport enumerate_classes(std::size_t n, unsigned threads) {
    if (n > kMaxClassOrder) {
        throw OrderTooLarge("class enumeration is capped at order " + std::to_string(kMaxClassOrder));
    }
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Rack> racks = enumerate_labeled(n, threads);
    const auto relabellings = all_permutations(n);

    EnumReport rep;
    rep.n = n;
    rep.labeled_count = racks.size();
    // Racks arrive sorted, so the first member of each isomorphism class met
    // here is the least table of its orbit, i.e. its canonical form.
    std::set<Table> seen;
    for (const Rack& r : racks) {
        if (seen.count(r.table())) continue;
        for (const Permutation& phi : relabellings) seen.insert(relabel_table(r.table(), phi));
        rep.witnesses.push_back(r.table());
        rep.quandle_class_count += diagonal_fixed(r.table());
    }
    rep.class_count = rep.witnesses.size();
    rep.reference_racks = published_rack_count(n);
    rep.reference_quandles = published_quandle_count(n);
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

std::optional<std::size_t> published_rack_count(std::size_t n) {
    static constexpr std::size_t counts[] = {1, 2, 6, 19, 74, 353, 2080};
    if (n == 0 || n > std::size(counts)) return std::nullopt;
    return counts[n - 1];
}

std::optional<std::size_t> published_quandle_count(std::size_t n) {
    static constexpr std::size_t counts[] = {1, 1, 3, 7, 22, 73, 298};
    if (n == 0 || n > std::size(counts)) return std::nullopt;
    return counts[n - 1];
}

}  // namespace racklab
