// One line per acceptance criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "racklab/analysis.hpp"
#include "racklab/codec.hpp"
#include "racklab/enumerate.hpp"
#include "racklab/graph.hpp"
#include "racklab/parallel.hpp"

using namespace racklab;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.ok = false;
        o.detail += " (over time limit)";
    }
    failures += !o.ok;
    std::printf("%s  %-26s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", name, secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string num(std::size_t v) { return std::to_string(v); }

// Every rack the codec criteria run over.
std::vector<Rack> codec_corpus() {
    std::vector<Rack> racks;
    for (std::size_t n = 1; n <= 4; ++n)
        for (Rack& r : enumerate_labeled(n)) racks.push_back(std::move(r));
    const auto fam = fixtures::family_racks(8);
    for (const auto& f : fam) racks.push_back(f.rack);
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 1000; ++i) {
        const Rack& base = fam[rng() % fam.size()].rack;
        racks.push_back(relabel(base, fixtures::to_perm(oracle::random_perm(base.order(), rng))));
    }
    return racks;
}

EdgeSet random_edges(std::size_t n, std::size_t count, std::mt19937_64& rng) {
    EdgeSet e;
    while (e.size() < count) {
        const Element a = Element(rng() % n), b = Element(rng() % n);
        if (a != b) e.push_back({a, b});
    }
    return e;
}

EdgeSet concat(EdgeSet a, const EdgeSet& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

int main() {
    const unsigned threads = default_thread_count();
    std::printf("racklab acceptance, seed %llu, %u threads\n", (unsigned long long)kSeed, threads);

    criterion("axiom-equivalence", 10, [] {
        std::size_t tables = 0, racks = 0, mismatches = 0;
        auto one = [&](const Table& t) {
            ++tables;
            const oracle::Tab tab = fixtures::to_tab(t);
            const bool sd = oracle::columns_bijective(tab) && is_self_distributive(t);
            const bool conj = satisfies_conjugation_identity(t);
            racks += sd;
            mismatches += sd != conj;
        };
        const auto s2 = all_permutations(2);
        for (const auto& a : s2)
            for (const auto& b : s2) {
                Table t(2);
                for (Element x = 0; x < 2; ++x) {
                    t.at(x, 0) = a(x);
                    t.at(x, 1) = b(x);
                }
                one(t);
            }
        std::mt19937_64 rng(kSeed);
        for (int i = 0; i < 10000; ++i) {
            const std::size_t n = 1 + rng() % 5;
            one(fixtures::from_tab(i % 4 == 0 ? oracle::random_table(n, rng) : oracle::random_column_table(n, rng)));
        }
        // Relabelled racks so that the positive side is exercised too.
        for (std::size_t n = 1; n <= 4; ++n)
            for (const Rack& r : enumerate_labeled(n))
                one(relabel(r, fixtures::to_perm(oracle::random_perm(n, rng))).table());
        return Outcome{mismatches == 0, num(tables) + " tables, " + num(racks) + " racks, " + num(mismatches) + " mismatches"};
    });

    criterion("oracle-enumeration", 60, [] {
        bool ok = true;
        std::string detail;
        for (std::size_t n = 1; n <= 3; ++n) {
            const OracleReport o = oracle_enumerate(n);
            std::vector<Table> mine;
            for (const Rack& r : enumerate_labeled(n)) mine.push_back(r.table());
            const EnumReport e = enumerate_classes(n);
            ok = ok && mine == o.labeled && e.class_count == o.summary.class_count &&
                 e.quandle_class_count == o.summary.quandle_class_count && e.witnesses == o.summary.witnesses;
            if (n == 2) ok = ok && mine.size() == 2;
            detail += "n=" + num(n) + ": " + num(mine.size()) + "/" + num(e.class_count) + " ";
        }
        return Outcome{ok, detail + "(labelled/classes)"};
    });

    const std::vector<Rack> corpus = codec_corpus();

    criterion("codec-round-trip", 300, [&] {
        std::size_t runs = 0, bad = 0;
        for (const Rack& r : corpus) {
            const std::size_t n = r.order();
            std::vector<CodecParams> grid{default_params(n)};
            if (n <= 4)
                for (std::uint16_t d = 1; d < std::max<std::size_t>(n, 2); ++d)
                    for (std::uint16_t l = 0; l <= n; ++l) grid.push_back({d, l});
            for (const CodecParams& p : grid) {
                ++runs;
                bad += !(decode(encode(r, p)) == r);
            }
        }
        return Outcome{bad == 0, num(corpus.size()) + " racks, " + num(runs) + " encodings, " + num(bad) + " failures"};
    });

    criterion("residual-bound", 0, [&] {
        std::size_t bad = 0;
        double worst_slack = 1e300;
        for (const Rack& r : corpus) {
            const CodecStats s = encoding_stats(r, default_params(r.order()));
            const double cap = std::ceil(s.zeta) + double(s.cp);
            worst_slack = std::min(worst_slack, cap - double(s.residual_bits));
            bad += double(s.residual_bits) > cap || s.zeta > s.bound + 1e-9;
        }
        return Outcome{bad == 0, num(corpus.size()) + " racks, " + num(bad) + " violations, min slack " +
                                     std::to_string(worst_slack)};
    });

    criterion("zeta-extremal", 0, [] {
        bool ok = true;
        std::string detail;
        for (std::size_t n = 2; n <= 10; n += 2) {
            const ZetaSweepReport r = zeta_bound_sweep(n, 0, kSeed);
            ok = ok && r.exhaustive && r.violations == 0 && r.attained == 1 && r.attained_only_at_eta2 &&
                 r.argmax == EtaSequence::concentrated(n, 2) && r.max_zeta == double(n * n) / 4;
            detail += "n=" + num(n) + ":" + num(r.sequences) + " ";
        }
        return Outcome{ok, detail + "sequences, max at eta_2 = n only"};
    });

    criterion("merge-calculus", 30, [] {
        std::mt19937_64 rng(kSeed);
        std::size_t super = 0, stable = 0, bound = 0, stable_cases = 0;
        for (int t = 0; t < 10000; ++t) {
            const std::size_t n = 2 + rng() % 11;
            const EdgeSet g = random_edges(n, rng() % n, rng);
            const EdgeSet e1 = random_edges(n, rng() % 4, rng);
            const EdgeSet e2 = random_edges(n, rng() % 4, rng);
            const std::size_t cp_g = count_components_with(n, g, {});
            const std::size_t cp_1 = count_components_with(n, g, e1);
            super += cp_g - count_components_with(n, g, e2) < cp_1 - count_components_with(n, g, concat(e1, e2));
            bound += merged_components(n, g, e1).size() > 2 * (cp_g - cp_1);
            const EdgeSet e = random_edges(n, 1, rng);
            if (count_components_with(n, g, concat(e1, e)) == cp_1) {
                ++stable_cases;
                stable += merged_components(n, g, concat(e1, e)) != merged_components(n, g, e1);
            }
        }
        const std::size_t total = super + stable + bound;
        return Outcome{total == 0, "10000 instances, violations: supermodular " + num(super) + ", stability " +
                                       num(stable) + "/" + num(stable_cases) + ", merge size " + num(bound)};
    });

    criterion("regularity-and-orbits", 0, [] {
        std::size_t racks = 0, irregular = 0, orbit_bad = 0;
        for (std::size_t n = 1; n <= 4; ++n)
            for (const Rack& r : enumerate_labeled(n)) {
                ++racks;
                irregular += !irregular_components(rack_graph(r)).empty();
            }
        std::mt19937_64 rng(kSeed);
        for (int t = 0; t < 1000; ++t) {
            const std::size_t n = 1 + rng() % 12;
            std::map<Element, Permutation> sigma;
            std::vector<oracle::Perm> raw;
            for (Element c = 0, k = Element(rng() % 4); c < k; ++c) {
                raw.push_back(oracle::random_perm(n, rng));
                sigma[c] = fixtures::to_perm(raw.back());
            }
            const ComponentStructure cs = components(build_graph(n, sigma));
            const auto orbit = oracle::orbit_minima(n, raw);
            for (Element v = 0; v < n; ++v) orbit_bad += cs.parts[cs.part_of[v]].front() != orbit[v];
        }
        return Outcome{irregular + orbit_bad == 0, num(racks) + " racks, " + num(irregular) + " irregular; 1000 families, " +
                                                       num(orbit_bad) + " orbit mismatches"};
    });

    criterion("greedy-audit", 0, [] {
        std::size_t racks = 0, bad = 0;
        std::string first;
        auto audit = [&](const Rack& r) {
            ++racks;
            const AuditReport a = merge_bound_audit(r, default_params(r.order()));
            if (!a.passed()) {
                if (first.empty()) first = " first: " + a.failure->kind;
                ++bad;
            }
        };
        for (std::size_t n = 1; n <= 4; ++n)
            for (const Rack& r : enumerate_labeled(n)) audit(r);
        for (const auto& f : fixtures::family_racks(8)) audit(f.rack);
        return Outcome{bad == 0, num(racks) + " racks, " + num(bad) + " failures" + first};
    });

    criterion("probabilistic-chernoff", 0, [&] {
        const ChernoffReport c = chernoff_check(1000, 0.1, 0.5, 100000, kSeed, threads);
        return Outcome{c.pass, "upper " + std::to_string(c.upper.estimate) + " <= " + std::to_string(c.upper.bound) +
                                   ", lower " + std::to_string(c.lower.estimate) + " <= " +
                                   std::to_string(c.lower.bound) + " (+3 SE)"};
    });

    criterion("probabilistic-subset", 0, [&] {
        const RandomSubsetReport r = random_subset_check(dihedral_quandle(1000), 0.1, 0.5, 100000, kSeed, threads);
        double worst = 0;
        for (const VertexTail& v : r.vertices) worst = std::max(worst, v.tail.estimate - v.tail.bound);
        return Outcome{r.pass, "size " + std::to_string(r.size_tail.estimate) + " <= " +
                                   std::to_string(r.size_tail.bound) + ", " + num(r.vertices.size()) +
                                   " vertices, worst excess " + std::to_string(worst)};
    });

    criterion("probabilistic-find-w", 0, [] {
        const Rack s3 = conjugation_quandle(symmetric_group(3));
        const WSearchResult w = find_W(s3, 1, 0.8, 1.0, 100, kSeed);
        return Outcome{w.certified && !w.exhausted && w.attempts <= 100,
                       "|W| = " + num(w.W.size()) + " after " + num(w.attempts) + " attempts, " +
                           (w.certified ? "maps reproduced" : "not certified")};
    });

    criterion("format-conformance", 0, [] {
        const std::vector<std::uint8_t> frozen{0x52, 0x4B, 0x45, 0x31, 0x00, 0x03, 0x00, 0x02,
                                               0x00, 0x02, 0xFB, 0x0E, 0x1C, 0x20, 0x00};
        std::vector<std::vector<std::uint8_t>> seen(4);
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < seen.size(); ++i) pool.emplace_back([&, i] { seen[i] = encode(trivial_rack(3)); });
        for (auto& t : pool) t.join();
        bool ok = encode(trivial_rack(3), default_params(3)) == frozen;
        for (const auto& s : seen) ok = ok && s == frozen;
        return Outcome{ok, "15 bytes, checked on 4 threads"};
    });

    std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
