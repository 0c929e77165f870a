// codec.hpp
//
// Lossless rack codec. A rack R is split into revealed information I(R)
// (degree split, high-degree maps, the greedy set T, restrictions to T, the
// maps indexed by T+, merge lists and merged restrictions) plus a residual
// holding one index per (component representative, unmerged component) of
// G_T. The residual is what the counting bound charges for: its size is at
// most zeta + cp(G_T) bits, and zeta <= n^2/4.
//
// Stream layout is documented in docs/FORMAT.md.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "racklab/graph.hpp"
#include "racklab/rack.hpp"

namespace racklab {

inline constexpr std::array<std::uint8_t, 4> kRkeMagic = {0x52, 0x4B, 0x45, 0x31};  // "RKE1"
inline constexpr std::size_t kRkeHeaderBytes = 10;

struct CodecParams {
    std::uint16_t delta = 1;  // out-degree threshold
    std::uint16_t cap_L = 0;  // greedy size cap

    friend bool operator==(const CodecParams&, const CodecParams&) = default;
};

/// delta = ceil((log2 n)^3) clamped to [1, max(1, n-1)], cap_L = floor((log2 n)^2).
CodecParams default_params(std::size_t n);

/// Throws InvalidParams unless 1 <= delta <= n-1 (only checked for n >= 2).
void validate_params(std::size_t n, CodecParams params);

struct DegreeSplit {
    VertexSet low;   // out-degree in G_R^0 <= delta
    VertexSet high;  // out-degree > delta
};

DegreeSplit degree_split(const Rack& rack, std::size_t delta);

/// The full greedy ordering u_1, ..., u_s of `candidates`: each step picks
/// the vertex minimising cp(G_{chosen + v}), smallest label on ties.
std::vector<Element> greedy_order(const Rack& rack, std::span<const Element> candidates);

/// First min(cap_L, |S_low|) vertices of the greedy ordering of S_low.
std::vector<Element> greedy_T(const Rack& rack, std::size_t delta, std::size_t cap_L);

/// A map restricted to `domain` (sorted); images[i] is the image of domain[i].
struct PartialMap {
    VertexSet domain;
    std::vector<Element> images;

    /// Throws std::out_of_range if x is not in the domain.
    Element operator()(Element x) const;

    friend bool operator==(const PartialMap&, const PartialMap&) = default;
};

struct IndexedMap {
    Element index;
    Permutation map;

    friend bool operator==(const IndexedMap&, const IndexedMap&) = default;
};

/// M_j and f_j restricted to Y_j = union of M_j, for one j in S_low \ T.
struct MergeEntry {
    Element j;
    std::vector<std::size_t> merged;    // indices into InfoTuple::components.parts
    std::vector<VertexSet> merged_sets;  // the same components as vertex sets
    PartialMap restriction;              // domain is Y_j

    friend bool operator==(const MergeEntry&, const MergeEntry&) = default;
};

struct InfoTuple {
    std::size_t n = 0;
    VertexSet s_low;
    std::vector<IndexedMap> high_maps;        // f_j for j in S_high, ascending
    std::vector<Element> t_order;             // T in greedy order
    VertexSet t_set;                          // T sorted
    std::vector<PartialMap> t_restrictions;   // f_j|_T for every j in [n]
    VertexSet t_plus;                         // T u Gamma+(T)
    std::vector<IndexedMap> t_plus_maps;      // f_j for j in T+, ascending
    std::vector<MergeEntry> merges;           // j in S_low \ T, ascending

    /// Components of G_T (derived from t_plus_maps).
    ComponentStructure components;

    /// True when f_v is stored in full (v in S_high or v in T+).
    bool map_is_stored(Element v) const;
    const MergeEntry* merge_entry(Element j) const;

    friend bool operator==(const InfoTuple& a, const InfoTuple& b);
};

InfoTuple build_info(const Rack& rack, CodecParams params);

struct ResidualEntry {
    Element representative;
    std::vector<std::size_t> unmerged;  // component indices D not in M_v, ascending
    std::vector<Element> indices;       // position of (min D)f_v inside sorted D

    friend bool operator==(const ResidualEntry&, const ResidualEntry&) = default;
};

struct Residual {
    std::vector<ResidualEntry> entries;

    std::size_t index_count() const;
    friend bool operator==(const Residual&, const Residual&) = default;
};

/// Throws std::logic_error if some (min D)f_v falls outside D, which means
/// `info` was not built from `rack`.
Residual extract_residual(const Rack& rack, const InfoTuple& info);

struct EncodedRack {
    std::vector<std::uint8_t> bytes;
    std::size_t header_bits = 0;    // fixed header + serialized InfoTuple
    std::size_t residual_bits = 0;  // serialized Residual
};

EncodedRack encode_detailed(const Rack& rack, CodecParams params);
std::vector<std::uint8_t> encode(const Rack& rack, CodecParams params);
std::vector<std::uint8_t> encode(const Rack& rack);

/// u = (rep)word and f_u = word^{-1} f_rep word.
struct ConjugationStep {
    Element u;
    Element rep;
    Permutation word;
};

struct Reconstruction {
    std::vector<Permutation> maps;
    std::vector<ConjugationStep> steps;
};

/// Rebuilds every f_j from stored maps, merged restrictions, residual
/// propagation along G_T and conjugation along directed paths. Throws
/// InconsistentDecode if the pieces do not fit together.
Reconstruction reconstruct(const InfoTuple& info, const Residual& residual);

struct DecodedStream {
    CodecParams params;
    InfoTuple info;
    Residual residual;
};

/// Parses the stream without rebuilding the rack.
DecodedStream parse_stream(std::span<const std::uint8_t> bytes);

/// Throws CorruptStream on malformed input, InconsistentDecode when the
/// reconstructed maps are not a rack or do not re-encode to the same info.
Rack decode(std::span<const std::uint8_t> bytes);

struct CodecStats {
    std::size_t n = 0;
    std::vector<std::size_t> eta;  // eta[q], q = 1..n
    std::size_t cp = 0;
    double zeta = 0.0;
    std::size_t residual_bits = 0;
    std::size_t index_bits = 0;  // sum of ceil(log2 |D|) over stored indices
    std::size_t stored_indices = 0;
    std::size_t header_bits = 0;
    double bound = 0.0;  // n^2 / 4
};

CodecStats encoding_stats(const Rack& rack, CodecParams params);

struct AuditFailure {
    std::string kind;   // "x_increasing", "x_sum", "post_T_drop", "merge_size"
    std::size_t index;  // 1-based greedy index, or the offending j
};

struct AuditReport {
    std::vector<std::size_t> x;  // x_i = cp(H_{i-1}) - cp(H_i), i = 1..s
    std::vector<Element> order;  // greedy ordering of S_low
    std::size_t cap_L = 0;
    std::size_t cp_T = 0;
    /// (j, cp(G_T) - cp(G_T + E_j), |M_j|) for j in S_low \ T
    struct Drop {
        Element j;
        std::size_t drop;
        std::size_t merged;
    };
    std::vector<Drop> drops;
    std::optional<AuditFailure> failure;

    bool passed() const { return !failure.has_value(); }
};

/// Recomputes the greedy merge sequence and checks it is non-increasing,
/// sums to at most n, that every j outside T drops cp(G_T) by at most
/// x_{L+1} when |S_low| > L, and that |M_j| <= 2 * drop_j.
AuditReport merge_bound_audit(const Rack& rack, CodecParams params);

/// Lists j such that some component of G_T not merged by E_j is moved by f_j.
std::vector<Element> invariance_violations(const Rack& rack, const InfoTuple& info);

}  // namespace racklab
