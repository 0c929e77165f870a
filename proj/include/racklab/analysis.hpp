// analysis.hpp
//
// Numerical and Monte Carlo checks of the auxiliary bounds behind the codec:
// the zeta <= n^2/4 inequality, the quadratic claim used in its proof,
// Chernoff tails, random-subset degree tails, and the W-set search for
// high-degree vertices.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "racklab/graph.hpp"
#include "racklab/rack.hpp"

namespace racklab {

/// Trials are split into chunks of this size; chunk c draws from
/// Rng(stream_seed(seed, c)), so results do not depend on the thread count.
inline constexpr std::size_t kTrialChunk = 4096;

struct EtaSequence {
    std::size_t n = 0;
    std::vector<std::size_t> eta;  // eta[q], q = 1..n; eta[0] = 0

    /// Throws std::invalid_argument unless eta has n + 1 entries, eta[0] = 0
    /// and the entries sum to n.
    static EtaSequence make(std::size_t n, std::vector<std::size_t> eta);
    /// All mass in size-q components: eta[q] = n.
    static EtaSequence concentrated(std::size_t n, std::size_t q);

    friend bool operator==(const EtaSequence&, const EtaSequence&) = default;
};

/// (sum_p eta_p / p) * (sum_q log2(q) eta_q / q)
double zeta_of(const EtaSequence& eta);

/// Sign of zeta - n^2/4, decided exactly: zeta is rational only when every
/// occupied size is a power of two, and that case is compared in rational
/// arithmetic. Otherwise zeta is irrational and the double comparison
/// decides (throws std::runtime_error if it is within 1e-9 of the bound).
int compare_zeta_to_bound(const EtaSequence& eta);

/// (x+y)^2/8 - x^2/9 - xy/3, which equals (x - 3y)^2/72.
double claim_calc_gap(double x, double y);

struct ZetaSweepReport {
    std::size_t n = 0;
    bool exhaustive = false;
    bool realizable_only = false;
    std::uint64_t seed = 0;
    std::size_t sequences = 0;
    double max_zeta = 0.0;
    EtaSequence argmax;
    double bound = 0.0;
    std::size_t violations = 0;  // zeta > n^2/4, exact
    std::size_t attained = 0;    // zeta == n^2/4, exact
    bool attained_only_at_eta2 = true;
    bool pass = false;
};

/// Exhaustive over every eta with sum n when n <= 10, otherwise `trials`
/// random sequences plus eta_2 = n. With realizable_only, only sequences
/// with q | eta_q are considered.
ZetaSweepReport zeta_bound_sweep(std::size_t n, std::size_t trials, std::uint64_t seed,
                                 bool realizable_only = false);

struct TailEstimate {
    double threshold = 0.0;  // event is X >= threshold (upper) or X <= threshold (lower)
    std::size_t hits = 0;
    std::size_t trials = 0;
    double estimate = 0.0;
    double std_error = 0.0;  // sqrt(estimate (1 - estimate) / trials)
    double bound = 0.0;
    bool pass = false;  // estimate <= bound + 3 std_error
};

struct ChernoffReport {
    std::size_t n = 0;
    double p = 0.0;
    double eps = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    TailEstimate upper;  // P(X >= (1+eps)np) vs exp(-eps^2 np / 3)
    TailEstimate lower;  // P(X <= (1-eps)np) vs exp(-eps^2 np / 2)
    bool pass = false;
};

/// X ~ Bin(n, p) simulated as n Bernoulli draws per trial.
ChernoffReport chernoff_check(std::size_t n, double p, double eps, std::size_t trials, std::uint64_t seed,
                              unsigned threads = 1);

struct VertexTail {
    Element v = 0;
    std::size_t degree = 0;  // d+_R(v)
    double delta = 0.0;      // d+_R(v) * p
    TailEstimate tail;       // P(d+_X(v) <= (1-eps) delta) vs exp(-eps^2 delta / 2)
};

struct RandomSubsetReport {
    std::size_t n = 0;
    double p = 0.0;
    double eps = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    TailEstimate size_tail;  // P(|X| >= (1+eps)np) vs exp(-eps^2 np / 3)
    std::vector<VertexTail> vertices;
    bool pass = false;
};

/// Samples X by keeping each element with probability p and checks both
/// tails for a random subset. Vertex tails are tracked for up to
/// `monitored` vertices of positive out-degree, evenly spread over [n].
RandomSubsetReport random_subset_check(const Rack& rack, double p, double eps, std::size_t trials,
                                       std::uint64_t seed, unsigned threads = 1, std::size_t monitored = 8);

struct WSearchResult {
    VertexSet W;  // X u V
    VertexSet X;  // the successful random sample
    VertexSet V;  // one representative per component of G_X inside S_high
    double p = 0.0;
    double bad_threshold = 0.0;
    std::uint64_t seed = 0;
    std::size_t attempts = 0;
    bool certified = false;
    bool exhausted = false;  // max_attempts reached without a good sample
};

/// Samples X until |X| <= 3np/2 and every v in S_high has d+_X(v) >
/// bad_threshold, then certifies that (f_i)_{i in W} determine every f_u,
/// u in S_high, by conjugating along directed paths of G_X and comparing
/// with the rack.
WSearchResult find_W(const Rack& rack, std::size_t delta, double p, double bad_threshold,
                     std::size_t max_attempts, std::uint64_t seed);

/// Number of distinct non-trivial images (v)f_j over j in `colors`.
std::size_t out_degree_within(const Rack& rack, Element v, std::span<const Element> colors);

}  // namespace racklab
