#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "racklab/analysis.hpp"
#include "racklab/codec.hpp"
#include "racklab/families.hpp"
#include "racklab/random.hpp"

using namespace racklab;

TEST_SUITE("analysis") {

TEST_CASE("rng is the standard mt19937_64") {
    Rng r(5489);
    std::mt19937_64 ref(5489);
    for (int i = 0; i < 100; ++i) CHECK(r.next() == ref());
    // The standard fixes the 10000th output for the default seed.
    Rng d(5489);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = d.next();
    CHECK(v == 9981545732273789042ULL);

    Rng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform01();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(u.below(7) < 7);
    }
}

TEST_CASE("zeta examples") {
    CHECK(zeta_of(EtaSequence::concentrated(5, 1)) == 0.0);
    CHECK(zeta_of(EtaSequence::concentrated(6, 2)) == doctest::Approx(9.0).epsilon(1e-15));
    const EtaSequence e = EtaSequence::make(4, {0, 1, 0, 3, 0});
    CHECK(zeta_of(e) == doctest::Approx(2 * std::log2(3.0)).epsilon(1e-12));
    CHECK(zeta_of(e) == doctest::Approx(3.1699).epsilon(1e-4));
    CHECK_THROWS_AS(EtaSequence::make(3, {0, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(EtaSequence::make(3, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("exact comparison with n^2/4") {
    CHECK(compare_zeta_to_bound(EtaSequence::concentrated(4, 2)) == 0);
    CHECK(compare_zeta_to_bound(EtaSequence::concentrated(4, 4)) < 0);
    CHECK(compare_zeta_to_bound(EtaSequence::concentrated(3, 3)) < 0);
    CHECK(compare_zeta_to_bound(EtaSequence::make(4, {0, 1, 0, 3, 0})) < 0);
    CHECK(compare_zeta_to_bound(EtaSequence::concentrated(1, 1)) < 0);
}

TEST_CASE("claim gap") {
    CHECK(claim_calc_gap(0, 0) == 0.0);
    CHECK(claim_calc_gap(3, 1) == doctest::Approx(0.0));
    CHECK(claim_calc_gap(1, 1) == doctest::Approx(4.0 / 72).epsilon(1e-12));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double x = u(rng), y = u(rng);
        const double g = claim_calc_gap(x, y);
        CHECK(g >= -1e-12);
        CHECK(std::abs(g - (x - 3 * y) * (x - 3 * y) / 72) <= 1e-12);
    }
}

TEST_CASE("zeta sweep") {
    const ZetaSweepReport r4 = zeta_bound_sweep(4, 0, 0);
    CHECK(r4.exhaustive);
    CHECK(r4.pass);
    CHECK(r4.max_zeta == 4.0);
    CHECK(r4.argmax == EtaSequence::concentrated(4, 2));
    CHECK(r4.sequences == 35);  // weak compositions of 4 into 4 parts

    const ZetaSweepReport r2 = zeta_bound_sweep(2, 0, 0);
    CHECK(r2.max_zeta == 1.0);
    CHECK(r2.argmax == EtaSequence::concentrated(2, 2));

    const ZetaSweepReport r1 = zeta_bound_sweep(1, 0, 0);
    CHECK(r1.max_zeta == 0.0);
    CHECK(r1.pass);
    CHECK(r1.attained == 0);

    for (std::size_t n = 2; n <= 10; n += 2) {
        const ZetaSweepReport r = zeta_bound_sweep(n, 0, 0);
        CHECK(r.pass);
        CHECK(r.attained == 1);
        CHECK(r.attained_only_at_eta2);
        CHECK(r.violations == 0);
    }
    // Odd n: eta_2 = n is still a valid sequence and attains the bound.
    CHECK(zeta_bound_sweep(5, 0, 0).attained == 1);
    // Realizable sequences need q | eta_q, so eta_2 = n needs n even.
    const ZetaSweepReport odd = zeta_bound_sweep(7, 0, 0, true);
    CHECK(odd.attained == 0);
    CHECK(odd.pass);

    const ZetaSweepReport big = zeta_bound_sweep(40, 2000, 17);
    CHECK_FALSE(big.exhaustive);
    CHECK(big.pass);
    CHECK(big.sequences == 2001);
    CHECK(big.argmax == EtaSequence::concentrated(40, 2));
}

TEST_CASE("zeta sweep agrees with the long double oracle") {
    // Brute-force max over all sequences of n = 7, recomputed independently.
    long double best = -1;
    std::vector<std::size_t> eta(8, 0);
    auto rec = [&](auto&& self, std::size_t q, std::size_t left) -> void {
        if (q == 1) {
            eta[1] = left;
            best = std::max(best, oracle::zeta(eta));
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            eta[q] = v;
            self(self, q - 1, left - v);
        }
        eta[q] = 0;
    };
    rec(rec, 7, 7);
    CHECK(zeta_bound_sweep(7, 0, 0).max_zeta == doctest::Approx(double(best)).epsilon(1e-12));
}

TEST_CASE("chernoff check") {
    const ChernoffReport r = chernoff_check(200, 0.2, 0.5, 20000, 7);
    CHECK(r.pass);
    CHECK(r.upper.bound == doctest::Approx(std::exp(-0.25 * 40 / 3)));
    CHECK(r.lower.bound == doctest::Approx(std::exp(-0.25 * 40 / 2)));
    CHECK(r.upper.trials == 20000);

    const ChernoffReport zero = chernoff_check(50, 0.3, 0.0, 1000, 1);
    CHECK(zero.upper.bound == 1.0);
    CHECK(zero.lower.bound == 1.0);
    CHECK(zero.pass);

    CHECK_THROWS(chernoff_check(10, 0.0, 0.5, 10, 1));
    CHECK_THROWS(chernoff_check(10, 0.5, 1.0, 10, 1));
}

TEST_CASE("seeded runs are reproducible and thread independent") {
    const ChernoffReport a = chernoff_check(100, 0.1, 0.5, 10000, 42, 1);
    const ChernoffReport b = chernoff_check(100, 0.1, 0.5, 10000, 42, 4);
    CHECK(a.upper.hits == b.upper.hits);
    CHECK(a.lower.hits == b.lower.hits);
    const ChernoffReport c = chernoff_check(100, 0.1, 0.5, 10000, 43, 1);
    CHECK((a.upper.hits != c.upper.hits || a.lower.hits != c.lower.hits));

    const Rack d = dihedral_quandle(30);
    const RandomSubsetReport x = random_subset_check(d, 0.3, 0.5, 5000, 9, 1);
    const RandomSubsetReport y = random_subset_check(d, 0.3, 0.5, 5000, 9, 3);
    CHECK(x.size_tail.hits == y.size_tail.hits);
    for (std::size_t i = 0; i < x.vertices.size(); ++i) CHECK(x.vertices[i].tail.hits == y.vertices[i].tail.hits);
}

TEST_CASE("random subset check") {
    const RandomSubsetReport t = random_subset_check(trivial_rack(10), 0.5, 0.5, 1000, 1);
    CHECK(t.vertices.empty());  // no vertex has positive out-degree
    CHECK(t.pass);

    const Rack s3 = conjugation_quandle(symmetric_group(3));
    const RandomSubsetReport r = random_subset_check(s3, 0.5, 0.5, 20000, 5);
    CHECK(r.pass);
    CHECK_FALSE(r.vertices.empty());
    for (const VertexTail& v : r.vertices) CHECK(v.degree == out_degree_within(s3, v.v, std::vector<Element>{0, 1, 2, 3, 4, 5}));

    // p = 1 keeps everything: |X| = n exactly, so the upper size event
    // |X| >= (1 + eps) n never happens.
    const RandomSubsetReport full = random_subset_check(s3, 1.0, 0.5, 100, 5);
    CHECK(full.size_tail.hits == 0);
    for (const VertexTail& v : full.vertices) CHECK(v.tail.hits == 0);
}

TEST_CASE("find_W") {
    // Nothing of high degree.
    const WSearchResult none = find_W(trivial_rack(6), 1, 0.5, 1.0, 10, 1);
    CHECK(none.W.empty());
    CHECK(none.certified);
    CHECK(none.attempts == 0);

    // p = 1: X = [n], one component of G_R of high degree.
    const Rack d5 = dihedral_quandle(5);
    const WSearchResult all = find_W(d5, 1, 1.0, 1.0, 10, 1);
    CHECK(all.certified);
    CHECK(all.W == VertexSet{0, 1, 2, 3, 4});

    const Rack s3 = conjugation_quandle(symmetric_group(3));
    const WSearchResult w = find_W(s3, 1, 0.8, 1.0, 100, 2024);
    CHECK(w.certified);
    CHECK_FALSE(w.exhausted);
    CHECK(w.attempts <= 100);
    const VertexSet high = degree_split(s3, 1).high;
    for (Element v : high) CHECK(double(out_degree_within(s3, v, w.W)) > 1.0);

    // A threshold above every degree cannot be met.
    const WSearchResult stuck = find_W(s3, 1, 0.8, 5.0, 20, 1);
    CHECK(stuck.exhausted);
    CHECK_FALSE(stuck.certified);
    CHECK(stuck.attempts == 20);
}

}
