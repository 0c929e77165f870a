// analysis.cpp
#include "racklab/analysis.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <algorithm>
#include <deque>
#include <iterator>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "racklab/codec.hpp"
#include "racklab/parallel.hpp"
#include "racklab/random.hpp"

namespace racklab {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void check_probability(double p, const char* name, bool allow_one) {
    if (!(p > 0.0) || p > 1.0 || (!allow_one && p == 1.0)) {
        throw std::invalid_argument(std::string(name) + " out of range");
    }
}

TailEstimate finish_tail(double threshold, std::size_t hits, std::size_t trials, double bound) {
    TailEstimate t;
    t.threshold = threshold;
    t.hits = hits;
    t.trials = trials;
    t.bound = bound;
    if (trials > 0) {
        t.estimate = double(hits) / double(trials);
        t.std_error = std::sqrt(t.estimate * (1.0 - t.estimate) / double(trials));
    }
    t.pass = t.estimate <= t.bound + 3.0 * t.std_error;
    return t;
}

std::size_t chunk_count(std::size_t trials) { return (trials + kTrialChunk - 1) / kTrialChunk; }

std::size_t chunk_size(std::size_t trials, std::size_t c) {
    return std::min(kTrialChunk, trials - c * kTrialChunk);
}

// q = 2^a * m with m odd
std::pair<unsigned, std::size_t> split_two(std::size_t q) {
    unsigned a = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++a;
    }
    return {a, q};
}

}  // namespace

EtaSequence EtaSequence::make(std::size_t n, std::vector<std::size_t> eta) {
    if (eta.size() != n + 1) throw std::invalid_argument("eta must have n + 1 entries");
    if (!eta.empty() && eta[0] != 0) throw std::invalid_argument("eta[0] must be 0");
    if (std::accumulate(eta.begin(), eta.end(), std::size_t{0}) != n) {
        throw std::invalid_argument("eta must sum to n");
    }
    return EtaSequence{n, std::move(eta)};
}

EtaSequence EtaSequence::concentrated(std::size_t n, std::size_t q) {
    if (q == 0 || q > n) throw std::invalid_argument("component size out of range");
    std::vector<std::size_t> eta(n + 1, 0);
    eta[q] = n;
    return EtaSequence{n, std::move(eta)};
}

double zeta_of(const EtaSequence& e) {
    double count = 0.0, weighted = 0.0;
    for (std::size_t q = 1; q < e.eta.size(); ++q) {
        if (e.eta[q] == 0) continue;
        const double share = double(e.eta[q]) / double(q);
        count += share;
        weighted += std::log2(double(q)) * share;
    }
    return count * weighted;
}

int compare_zeta_to_bound(const EtaSequence& e) {
    bool rational = true;
    for (std::size_t q = 1; q < e.eta.size(); ++q) {
        if (e.eta[q] != 0 && split_two(q).second != 1) rational = false;
    }
    if (rational) {
        Rational count = 0, weighted = 0;
        for (std::size_t q = 1; q < e.eta.size(); ++q) {
            if (e.eta[q] == 0) continue;
            const Rational share(e.eta[q], q);
            count += share;
            weighted += share * split_two(q).first;
        }
        const Rational lhs = count * weighted;
        const Rational rhs = Rational(e.n * e.n, 4);
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    // A positive combination of log2 of odd numbers > 1 is irrational, so zeta
    // cannot equal the rational n^2/4 here.
    const double diff = zeta_of(e) - double(e.n) * double(e.n) / 4.0;
    if (std::abs(diff) < 1e-9) throw std::runtime_error("zeta too close to n^2/4 to separate in double precision");
    return diff < 0 ? -1 : 1;
}

double claim_calc_gap(double x, double y) { return (x + y) * (x + y) / 8.0 - x * x / 9.0 - x * y / 3.0; }

ZetaSweepReport zeta_bound_sweep(std::size_t n, std::size_t trials, std::uint64_t seed, bool realizable_only) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    ZetaSweepReport rep;
    rep.n = n;
    rep.exhaustive = n <= 10;
    rep.realizable_only = realizable_only;
    rep.seed = seed;
    rep.bound = double(n) * double(n) / 4.0;
    rep.max_zeta = -1.0;
    const EtaSequence pair_split = n >= 2 ? EtaSequence::concentrated(n, 2) : EtaSequence{};
    bool pair_split_seen = false;

    auto visit = [&](const EtaSequence& e) {
        ++rep.sequences;
        const double z = zeta_of(e);
        const int cmp = compare_zeta_to_bound(e);
        if (cmp > 0) ++rep.violations;
        if (cmp == 0) {
            if (rep.attained == 0) {
                rep.max_zeta = z;
                rep.argmax = e;
            }
            ++rep.attained;
            if (!(e == pair_split)) rep.attained_only_at_eta2 = false;
        } else if (rep.attained == 0 && z > rep.max_zeta) {
            rep.max_zeta = z;
            rep.argmax = e;
        }
        if (n >= 2 && e == pair_split) pair_split_seen = true;
    };

    if (rep.exhaustive) {
        std::vector<std::size_t> eta(n + 1, 0);
        // Assign eta[q] for q = n down to 2; eta[1] takes the remainder.
        auto rec = [&](auto&& self, std::size_t q, std::size_t left) -> void {
            if (q == 1) {
                eta[1] = left;
                visit(EtaSequence{n, eta});
                eta[1] = 0;
                return;
            }
            for (std::size_t v = 0; v <= left; v += realizable_only ? q : 1) {
                eta[q] = v;
                self(self, q - 1, left - v);
            }
            eta[q] = 0;
        };
        rec(rec, n, n);
    } else {
        Rng rng(seed);
        if (n >= 2 && !(realizable_only && n % 2 != 0)) visit(pair_split);
        for (std::size_t t = 0; t < trials; ++t) {
            // Uniform weak composition via stars and bars: n - 1 bars among
            // 2n - 1 slots.
            std::vector<std::size_t> slots(2 * n - 1);
            std::iota(slots.begin(), slots.end(), std::size_t{0});
            for (std::size_t i = 0; i + 1 < n; ++i) {
                std::swap(slots[i], slots[i + rng.below(slots.size() - i)]);
            }
            std::vector<std::size_t> bars(slots.begin(), slots.begin() + (n - 1));
            std::sort(bars.begin(), bars.end());
            std::vector<std::size_t> eta(n + 1, 0);
            std::size_t prev = 0;
            for (std::size_t q = 1; q <= n; ++q) {
                const std::size_t end = q < n ? bars[q - 1] : 2 * n - 1;
                eta[q] = end - prev;
                prev = end + 1;
            }
            if (realizable_only) {
                // Round each size down to a multiple of q and put the rest in
                // singletons.
                std::size_t spare = 0;
                for (std::size_t q = 2; q <= n; ++q) {
                    spare += eta[q] % q;
                    eta[q] -= eta[q] % q;
                }
                eta[1] += spare;
            }
            visit(EtaSequence{n, std::move(eta)});
        }
    }

    const bool pair_split_allowed = n >= 2 && !(realizable_only && n % 2 != 0);
    rep.pass = rep.violations == 0 && rep.attained_only_at_eta2 &&
               (!pair_split_allowed || !pair_split_seen || rep.attained > 0);
    return rep;
}

ChernoffReport chernoff_check(std::size_t n, double p, double eps, std::size_t trials, std::uint64_t seed,
                              unsigned threads) {
    check_probability(p, "p", false);
    if (eps < 0.0 || eps >= 1.0) throw std::invalid_argument("eps out of range");
    ChernoffReport rep;
    rep.n = n;
    rep.p = p;
    rep.eps = eps;
    rep.trials = trials;
    rep.seed = seed;
    const double mean = double(n) * p;
    const double hi = (1.0 + eps) * mean, lo = (1.0 - eps) * mean;

    const std::size_t chunks = chunk_count(trials);
    std::vector<std::size_t> up(chunks, 0), down(chunks, 0);
    parallel_for(chunks, threads, [&](std::size_t c) {
        Rng rng(stream_seed(seed, c));
        for (std::size_t t = 0, m = chunk_size(trials, c); t < m; ++t) {
            std::size_t x = 0;
            for (std::size_t i = 0; i < n; ++i) x += rng.bernoulli(p);
            up[c] += double(x) >= hi;
            down[c] += double(x) <= lo;
        }
    });
    const auto sum = [](const std::vector<std::size_t>& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); };
    rep.upper = finish_tail(hi, sum(up), trials, std::exp(-eps * eps * mean / 3.0));
    rep.lower = finish_tail(lo, sum(down), trials, std::exp(-eps * eps * mean / 2.0));
    rep.pass = rep.upper.pass && rep.lower.pass;
    return rep;
}

std::size_t out_degree_within(const Rack& rack, Element v, std::span<const Element> colors) {
    std::vector<char> seen(rack.order(), 0);
    std::size_t d = 0;
    for (Element j : colors) {
        const Element u = rack.op(v, j);
        if (u != v && !seen[u]) {
            seen[u] = 1;
            ++d;
        }
    }
    return d;
}

RandomSubsetReport random_subset_check(const Rack& rack, double p, double eps, std::size_t trials,
                                       std::uint64_t seed, unsigned threads, std::size_t monitored) {
    check_probability(p, "p", true);
    if (eps < 0.0 || eps >= 1.0) throw std::invalid_argument("eps out of range");
    const std::size_t n = rack.order();
    RandomSubsetReport rep;
    rep.n = n;
    rep.p = p;
    rep.eps = eps;
    rep.trials = trials;
    rep.seed = seed;

    std::vector<Element> all(n);
    std::iota(all.begin(), all.end(), Element{0});
    std::vector<Element> positive;
    for (Element v = 0; v < n; ++v) {
        if (out_degree_within(rack, v, all) > 0) positive.push_back(v);
    }
    std::vector<Element> watch;
    const std::size_t k = std::min(monitored, positive.size());
    for (std::size_t i = 0; i < k; ++i) watch.push_back(positive[i * positive.size() / k]);

    // J_v: for each out-neighbour of v, the least colour reaching it.
    std::vector<std::vector<Element>> jv(watch.size());
    for (std::size_t w = 0; w < watch.size(); ++w) {
        std::vector<char> seen(n, 0);
        for (Element j = 0; j < n; ++j) {
            const Element u = rack.op(watch[w], j);
            if (u != watch[w] && !seen[u]) {
                seen[u] = 1;
                jv[w].push_back(j);
            }
        }
    }

    const double mean = double(n) * p;
    const double size_hi = (1.0 + eps) * mean;
    std::vector<double> vertex_lo(watch.size());
    for (std::size_t w = 0; w < watch.size(); ++w) vertex_lo[w] = (1.0 - eps) * double(jv[w].size()) * p;

    const std::size_t chunks = chunk_count(trials);
    std::vector<std::size_t> size_hits(chunks, 0);
    std::vector<std::vector<std::size_t>> vertex_hits(chunks, std::vector<std::size_t>(watch.size(), 0));
    parallel_for(chunks, threads, [&](std::size_t c) {
        Rng rng(stream_seed(seed, c));
        std::vector<Element> x;
        std::vector<std::uint32_t> stamp(n, 0);
        std::uint32_t tick = 0;
        for (std::size_t t = 0, m = chunk_size(trials, c); t < m; ++t) {
            x.clear();
            for (Element i = 0; i < n; ++i) {
                if (rng.bernoulli(p)) x.push_back(i);
            }
            size_hits[c] += double(x.size()) >= size_hi;
            for (std::size_t w = 0; w < watch.size(); ++w) {
                ++tick;
                std::size_t d = 0;
                for (Element j : x) {
                    const Element u = rack.op(watch[w], j);
                    if (u != watch[w] && stamp[u] != tick) {
                        stamp[u] = tick;
                        ++d;
                    }
                }
                vertex_hits[c][w] += double(d) <= vertex_lo[w];
            }
        }
    });

    std::size_t size_total = 0;
    for (std::size_t h : size_hits) size_total += h;
    rep.size_tail = finish_tail(size_hi, size_total, trials, std::exp(-eps * eps * mean / 3.0));
    rep.pass = rep.size_tail.pass;
    for (std::size_t w = 0; w < watch.size(); ++w) {
        std::size_t hits = 0;
        for (std::size_t c = 0; c < chunks; ++c) hits += vertex_hits[c][w];
        VertexTail vt;
        vt.v = watch[w];
        vt.degree = jv[w].size();
        vt.delta = double(vt.degree) * p;
        vt.tail = finish_tail(vertex_lo[w], hits, trials, std::exp(-eps * eps * vt.delta / 2.0));
        rep.pass = rep.pass && vt.tail.pass;
        rep.vertices.push_back(vt);
    }
    return rep;
}

WSearchResult find_W(const Rack& rack, std::size_t delta, double p, double bad_threshold,
                     std::size_t max_attempts, std::uint64_t seed) {
    check_probability(p, "p", true);
    const std::size_t n = rack.order();
    WSearchResult res;
    res.p = p;
    res.bad_threshold = bad_threshold;
    res.seed = seed;

    const VertexSet high = degree_split(rack, delta).high;
    if (high.empty()) {
        res.certified = true;
        return res;
    }

    Rng rng(seed);
    const double size_cap = 1.5 * double(n) * p;
    for (res.attempts = 1; res.attempts <= max_attempts; ++res.attempts) {
        VertexSet x;
        for (Element i = 0; i < n; ++i) {
            if (rng.bernoulli(p)) x.push_back(i);
        }
        if (double(x.size()) > size_cap) continue;
        bool bad = false;
        for (Element v : high) {
            if (double(out_degree_within(rack, v, x)) <= bad_threshold) {
                bad = true;
                break;
            }
        }
        if (bad) continue;

        const ColoredDigraph g = rack_graph(rack, x);
        const ComponentStructure cs = components(g);
        std::vector<std::vector<std::pair<Element, Element>>> out(n);  // (head, colour)
        for (const ColoredEdge& e : g.edges()) out[e.from].push_back({e.to, e.color});

        // Components of G_X refine those of G_R, so each lies wholly inside
        // or outside S_high.
        bool ok = true;
        for (const VertexSet& part : cs.parts) {
            if (!std::binary_search(high.begin(), high.end(), part.front())) continue;
            const Element rep = part.front();
            res.V.push_back(rep);
            std::vector<std::optional<Permutation>> known(n);
            known[rep] = rack.map(rep);
            std::deque<Element> queue{rep};
            while (!queue.empty()) {
                const Element w = queue.front();
                queue.pop_front();
                for (auto [u, i] : out[w]) {
                    if (known[u]) continue;
                    known[u] = conjugate(*known[w], rack.map(i));
                    queue.push_back(u);
                }
            }
            for (Element u : part) ok = ok && known[u] && *known[u] == rack.map(u);
        }
        res.X = x;
        std::set_union(x.begin(), x.end(), res.V.begin(), res.V.end(), std::back_inserter(res.W));
        res.certified = ok;
        return res;
    }
    res.attempts = max_attempts;
    res.exhausted = true;
    return res;
}

}  // namespace racklab
