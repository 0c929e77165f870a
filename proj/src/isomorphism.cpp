// isomorphism.cpp
#include "racklab/isomorphism.hpp"

#include <tuple>
#include <vector>

namespace racklab {

namespace {

constexpr Element kUnset = ~Element{0};

// Per-element invariants preserved by isomorphisms.
using Signature = std::tuple<std::size_t, std::size_t, bool>;

std::vector<Signature> signatures(const Rack& r) {
    const std::size_t n = r.order();
    std::vector<Signature> sig(n);
    std::vector<bool> seen(n);
    for (Element x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), false);
        std::size_t out = 0;
        for (Element j = 0; j < n; ++j) {
            const Element w = r.op(x, j);
            if (w != x && !seen[w]) {
                seen[w] = true;
                ++out;
            }
        }
        sig[x] = {out, r.map(x).support_size(), r.op(x, x) == x};
    }
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const Rack& a, const Rack& b)
        : a_(a), b_(b), n_(a.order()), phi_(n_, kUnset), used_(n_, false),
          sig_a_(signatures(a)), sig_b_(signatures(b)) {}

    std::optional<Isomorphism> run() {
        if (!search()) return std::nullopt;
        return Isomorphism{Permutation::from_images(phi_)};
    }

private:
    // Assigns x -> y and closes under the operation. Appends every new
    // assignment to trail_. Returns false on conflict.
    bool assign(Element x, Element y) {
        std::vector<Element> queue{x};
        if (used_[y] || sig_a_[x] != sig_b_[y]) return false;
        phi_[x] = y;
        used_[y] = true;
        trail_.push_back(x);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Element p = queue[head];
            for (Element q = 0; q < n_; ++q) {
                if (phi_[q] == kUnset) continue;
                for (const auto& [s, t] : {std::pair{p, q}, std::pair{q, p}}) {
                    const Element r = a_.op(s, t);
                    const Element target = b_.op(phi_[s], phi_[t]);
                    if (phi_[r] != kUnset) {
                        if (phi_[r] != target) return false;
                        continue;
                    }
                    if (used_[target] || sig_a_[r] != sig_b_[target]) return false;
                    phi_[r] = target;
                    used_[target] = true;
                    trail_.push_back(r);
                    queue.push_back(r);
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const Element x = trail_.back();
            trail_.pop_back();
            used_[phi_[x]] = false;
            phi_[x] = kUnset;
        }
    }

    bool search() {
        Element x = 0;
        while (x < n_ && phi_[x] != kUnset) ++x;
        if (x == n_) return true;
        for (Element y = 0; y < n_; ++y) {
            if (used_[y]) continue;
            const std::size_t mark = trail_.size();
            if (assign(x, y) && search()) return true;
            undo_to(mark);
        }
        return false;
    }

    const Rack& a_;
    const Rack& b_;
    std::size_t n_;
    std::vector<Element> phi_;
    std::vector<bool> used_;
    std::vector<Element> trail_;
    std::vector<Signature> sig_a_, sig_b_;
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Rack& r)
        : r_(r), n_(r.order()), best_(r.table().cells), psi_(n_, kUnset), pos_(n_, kUnset) {}

    Table run() {
        extend(0);
        Table t(n_);
        t.cells = best_;
        return t;
    }

private:
    // -1: prefix is already worse than best (prune). Otherwise keep going.
    int compare_prefix(std::size_t k) const {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (j >= k) return 0;
                const Element r = r_.op(psi_[i], psi_[j]);
                const Element cur = best_[i * n_ + j];
                if (pos_[r] == kUnset) {
                    // Unassigned elements receive labels >= k.
                    return cur < k ? -1 : 0;
                }
                if (pos_[r] != cur) return pos_[r] < cur ? 1 : -1;
            }
        }
        return 0;
    }

    void extend(std::size_t k) {
        if (k == n_) {
            std::vector<Element> cells(n_ * n_);
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = 0; j < n_; ++j) cells[i * n_ + j] = pos_[r_.op(psi_[i], psi_[j])];
            }
            if (cells < best_) best_ = std::move(cells);
            return;
        }
        for (Element x = 0; x < n_; ++x) {
            if (pos_[x] != kUnset) continue;
            psi_[k] = x;
            pos_[x] = Element(k);
            if (compare_prefix(k + 1) >= 0) extend(k + 1);
            pos_[x] = kUnset;
            psi_[k] = kUnset;
        }
    }

    const Rack& r_;
    std::size_t n_;
    std::vector<Element> best_;
    std::vector<Element> psi_;  // position -> original element
    std::vector<Element> pos_;  // original element -> position
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const Rack& a, const Rack& b) {
    if (a.order() != b.order()) return std::nullopt;
    return IsoSearch(a, b).run();
}

bool is_isomorphism(const Rack& a, const Rack& b, const Permutation& phi) {
    if (a.order() != b.order() || phi.size() != a.order()) return false;
    for (Element x = 0; x < a.order(); ++x) {
        for (Element y = 0; y < a.order(); ++y) {
            if (phi(a.op(x, y)) != b.op(phi(x), phi(y))) return false;
        }
    }
    return true;
}

Table canonical_form(const Rack& rack) { return CanonicalSearch(rack).run(); }

}  // namespace racklab
