#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "racklab/permutation.hpp"

using namespace racklab;

TEST_SUITE("core") {

TEST_CASE("permutation basics") {
    const Permutation id = Permutation::identity(4);
    CHECK(id.is_identity());
    CHECK(id.support_size() == 0);

    const Permutation p = Permutation::from_images({1, 2, 0, 3});
    CHECK(p(0) == 1);
    CHECK(p.support_size() == 3);
    CHECK(p * p.inverse() == id);
    CHECK(p.inverse() * p == id);
    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({0, 3}), std::invalid_argument);
}

TEST_CASE("composition applies the left factor first") {
    const Permutation a = Permutation::from_images({1, 0, 2});
    const Permutation b = Permutation::from_images({0, 2, 1});
    const Permutation ab = a * b;
    for (Element x = 0; x < 3; ++x) CHECK(ab(x) == b(a(x)));
}

TEST_CASE("conjugate is g^-1 p g acting on the right") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 7;
        const auto p = oracle::random_perm(n, rng), g = oracle::random_perm(n, rng);
        const Permutation c = conjugate(Permutation::from_images({p.begin(), p.end()}),
                                        Permutation::from_images({g.begin(), g.end()}));
        const auto gi = oracle::inverse(g);
        for (Element x = 0; x < n; ++x) CHECK(c(x) == g[p[gi[x]]]);
    }
}

TEST_CASE("lehmer code round trip and ordering") {
    for (std::size_t n = 0; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        std::size_t expected = 1;
        for (std::size_t k = 2; k <= n; ++k) expected *= k;
        CHECK(perms.size() == expected);
        CHECK(std::is_sorted(perms.begin(), perms.end()));
        for (const Permutation& p : perms) CHECK(from_lehmer_code(lehmer_code(p)) == p);
    }
}

TEST_CASE("is_bijection") {
    const std::vector<Element> ok{2, 0, 1}, dup{1, 1, 0}, range{0, 1, 5};
    CHECK(is_bijection(ok));
    CHECK_FALSE(is_bijection(dup));
    CHECK_FALSE(is_bijection(range));
}

}
