// codec.cpp
#include "racklab/codec.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "racklab/bitstream.hpp"
#include "racklab/errors.hpp"

namespace racklab {

namespace {

constexpr Element kUnset = ~Element{0};

bool contains(const VertexSet& s, Element x) { return std::binary_search(s.begin(), s.end(), x); }

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

BigUint factorial(std::size_t n) {
    BigUint f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

BigUint lehmer_rank(const Permutation& p) {
    const auto code = lehmer_code(p);
    BigUint rank = 0;
    for (std::size_t i = 0; i < code.size(); ++i) rank = rank * (code.size() - i) + code[i];
    return rank;
}

Permutation lehmer_unrank(BigUint rank, std::size_t n) {
    std::vector<Element> code(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t radix = n - i;
        code[i] = Element(static_cast<unsigned long long>(rank % radix));
        rank /= radix;
    }
    return from_lehmer_code(code);
}

VertexSet union_of(const std::vector<VertexSet>& parts) {
    VertexSet out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

PartialMap restrict_map(const Permutation& f, const VertexSet& domain) {
    PartialMap m;
    m.domain = domain;
    m.images.reserve(domain.size());
    for (Element x : domain) m.images.push_back(f(x));
    return m;
}

EdgeSet t_graph_edges(std::span<const IndexedMap> maps, const VertexSet& t_set) {
    EdgeSet edges;
    for (const auto& im : maps) {
        if (!contains(t_set, im.index)) continue;
        for (Element u = 0; u < im.map.size(); ++u) {
            if (im.map(u) != u) edges.emplace_back(u, im.map(u));
        }
    }
    return edges;
}

// --- serialization -------------------------------------------------------

struct Widths {
    unsigned image;  // one element
    unsigned perm;   // one Lehmer rank
};

Widths widths_for(std::size_t n) { return {bits_for(std::uint64_t(n)), bits_for(factorial(n))}; }

void write_bitmap(BitWriter& w, std::size_t n, const VertexSet& s) {
    for (Element v = 0; v < n; ++v) w.write_bit(contains(s, v));
}

VertexSet read_bitmap(BitReader& r, std::size_t n) {
    VertexSet s;
    for (Element v = 0; v < n; ++v) {
        if (r.read_bit()) s.push_back(v);
    }
    return s;
}

void write_perm(BitWriter& w, const Widths& wd, const Permutation& p) { w.write_big(lehmer_rank(p), wd.perm); }

Permutation read_perm(BitReader& r, const Widths& wd, std::size_t n) {
    const BigUint rank = r.read_big(wd.perm);
    if (rank >= factorial(n)) throw CorruptStream("permutation rank out of range");
    return lehmer_unrank(rank, n);
}

void write_partial(BitWriter& w, std::size_t n, const Widths& wd, const PartialMap& m) {
    write_bitmap(w, n, m.domain);
    for (Element y : m.images) w.write(y, wd.image);
}

PartialMap read_partial(BitReader& r, std::size_t n, const Widths& wd, const VertexSet& expected_domain,
                        const char* what) {
    PartialMap m;
    m.domain = read_bitmap(r, n);
    if (m.domain != expected_domain) throw CorruptStream(std::string("unexpected domain for ") + what);
    for (std::size_t i = 0; i < m.domain.size(); ++i) {
        const auto y = r.read(wd.image);
        if (y >= n) throw CorruptStream(std::string("image out of range in ") + what);
        m.images.push_back(Element(y));
    }
    return m;
}

void write_info(BitWriter& w, const InfoTuple& info) {
    const std::size_t n = info.n;
    const Widths wd = widths_for(n);
    write_bitmap(w, n, info.s_low);
    for (const auto& hm : info.high_maps) write_perm(w, wd, hm.map);
    write_bitmap(w, n, info.t_set);
    for (const auto& pm : info.t_restrictions) write_partial(w, n, wd, pm);
    for (const auto& tm : info.t_plus_maps) write_perm(w, wd, tm.map);
    for (const auto& me : info.merges) {
        std::vector<bool> flag(info.components.cp, false);
        for (std::size_t c : me.merged) flag[c] = true;
        for (bool b : flag) w.write_bit(b);
        write_partial(w, n, wd, me.restriction);
    }
}

// Mixed-radix value of one representative's indices, most significant first.
BigUint residual_value(const ResidualEntry& e, const ComponentStructure& cs, BigUint& radix) {
    BigUint value = 0;
    radix = 1;
    for (std::size_t k = 0; k < e.unmerged.size(); ++k) {
        const std::size_t size = cs.parts[e.unmerged[k]].size();
        value = value * size + e.indices[k];
        radix *= size;
    }
    return value;
}

void write_residual(BitWriter& w, const InfoTuple& info, const Residual& res) {
    for (const auto& e : res.entries) {
        BigUint radix;
        const BigUint value = residual_value(e, info.components, radix);
        w.write_big(value, bits_for(radix));
    }
}

std::vector<std::size_t> unmerged_components(const InfoTuple& info, Element v) {
    const MergeEntry* me = info.merge_entry(v);
    std::vector<bool> merged(info.components.cp, false);
    if (me) {
        for (std::size_t c : me->merged) merged[c] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < info.components.cp; ++c) {
        if (!merged[c]) out.push_back(c);
    }
    return out;
}

void write_header(BitWriter& w, std::size_t n, CodecParams params) {
    for (auto b : kRkeMagic) w.write(b, 8);
    w.write(n, 16);
    w.write(params.delta, 16);
    w.write(params.cap_L, 16);
}

InfoTuple read_info(BitReader& r, std::size_t n) {
    const Widths wd = widths_for(n);
    InfoTuple info;
    info.n = n;
    info.s_low = read_bitmap(r, n);
    for (Element j = 0; j < n; ++j) {
        if (!contains(info.s_low, j)) info.high_maps.push_back({j, read_perm(r, wd, n)});
    }
    info.t_set = read_bitmap(r, n);
    if (!std::includes(info.s_low.begin(), info.s_low.end(), info.t_set.begin(), info.t_set.end())) {
        throw CorruptStream("T is not contained in S_low");
    }
    info.t_order = info.t_set;
    info.t_plus = info.t_set;
    for (Element j = 0; j < n; ++j) {
        info.t_restrictions.push_back(read_partial(r, n, wd, info.t_set, "restriction to T"));
        const auto& imgs = info.t_restrictions.back().images;
        info.t_plus.insert(info.t_plus.end(), imgs.begin(), imgs.end());
    }
    std::sort(info.t_plus.begin(), info.t_plus.end());
    info.t_plus.erase(std::unique(info.t_plus.begin(), info.t_plus.end()), info.t_plus.end());
    for (Element j : info.t_plus) info.t_plus_maps.push_back({j, read_perm(r, wd, n)});

    info.components = components(n, t_graph_edges(info.t_plus_maps, info.t_set));
    for (Element j : set_difference(info.s_low, info.t_set)) {
        MergeEntry me;
        me.j = j;
        for (std::size_t c = 0; c < info.components.cp; ++c) {
            if (r.read_bit()) {
                me.merged.push_back(c);
                me.merged_sets.push_back(info.components.parts[c]);
            }
        }
        me.restriction = read_partial(r, n, wd, union_of(me.merged_sets), "merged restriction");
        info.merges.push_back(std::move(me));
    }
    return info;
}

Residual read_residual(BitReader& r, const InfoTuple& info) {
    Residual res;
    for (const auto& part : info.components.parts) {
        const Element v = part.front();
        if (info.map_is_stored(v)) continue;
        ResidualEntry e;
        e.representative = v;
        e.unmerged = unmerged_components(info, v);
        BigUint radix = 1;
        for (std::size_t c : e.unmerged) radix *= info.components.parts[c].size();
        BigUint value = r.read_big(bits_for(radix));
        if (value >= radix) throw CorruptStream("residual value out of range");
        e.indices.assign(e.unmerged.size(), 0);
        for (std::size_t k = e.unmerged.size(); k-- > 0;) {
            const std::size_t size = info.components.parts[e.unmerged[k]].size();
            e.indices[k] = Element(static_cast<unsigned long long>(value % size));
            value /= size;
        }
        res.entries.push_back(std::move(e));
    }
    return res;
}

}  // namespace

// --- parameters and the information tuple ---------------------------------

CodecParams default_params(std::size_t n) {
    if (n <= 1) return {1, 0};
    const double lg = std::log2(double(n));
    const double delta = std::ceil(lg * lg * lg);
    const double cap = std::floor(lg * lg);
    const double max_delta = double(n - 1);
    return {std::uint16_t(std::clamp(delta, 1.0, max_delta)), std::uint16_t(cap)};
}

void validate_params(std::size_t n, CodecParams params) {
    if (n < 2) return;
    if (params.delta < 1 || params.delta > n - 1) {
        throw InvalidParams("delta must lie in [1, " + std::to_string(n - 1) + "], got " +
                            std::to_string(params.delta));
    }
}

DegreeSplit degree_split(const Rack& rack, std::size_t delta) {
    const auto deg = out_degrees(rack_graph(rack));
    DegreeSplit split;
    for (Element v = 0; v < rack.order(); ++v) (deg[v] <= delta ? split.low : split.high).push_back(v);
    return split;
}

std::vector<Element> greedy_order(const Rack& rack, std::span<const Element> candidates) {
    const std::size_t n = rack.order();
    std::vector<Element> remaining(candidates.begin(), candidates.end());
    std::sort(remaining.begin(), remaining.end());
    std::vector<Element> order;
    DisjointSets chosen(n);
    while (!remaining.empty()) {
        std::size_t best_i = 0;
        std::size_t best_cp = SIZE_MAX;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            DisjointSets trial = chosen;
            const Permutation& f = rack.map(remaining[i]);
            for (Element u = 0; u < n; ++u) trial.unite(u, f(u));
            if (trial.count() < best_cp) {
                best_cp = trial.count();
                best_i = i;
            }
        }
        const Permutation& f = rack.map(remaining[best_i]);
        for (Element u = 0; u < n; ++u) chosen.unite(u, f(u));
        order.push_back(remaining[best_i]);
        remaining.erase(remaining.begin() + std::ptrdiff_t(best_i));
    }
    return order;
}

std::vector<Element> greedy_T(const Rack& rack, std::size_t delta, std::size_t cap_L) {
    const DegreeSplit split = degree_split(rack, delta);
    if (split.low.empty()) return {};
    auto order = greedy_order(rack, split.low);
    order.resize(std::min(cap_L, order.size()));
    return order;
}

Element PartialMap::operator()(Element x) const {
    const auto it = std::lower_bound(domain.begin(), domain.end(), x);
    if (it == domain.end() || *it != x) throw std::out_of_range("element outside partial map domain");
    return images[std::size_t(it - domain.begin())];
}

bool InfoTuple::map_is_stored(Element v) const { return !contains(s_low, v) || contains(t_plus, v); }

const MergeEntry* InfoTuple::merge_entry(Element j) const {
    const auto it = std::lower_bound(merges.begin(), merges.end(), j,
                                     [](const MergeEntry& m, Element x) { return m.j < x; });
    return (it != merges.end() && it->j == j) ? &*it : nullptr;
}

bool operator==(const InfoTuple& a, const InfoTuple& b) {
    // t_order is informational: streams carry T as a set.
    return a.n == b.n && a.s_low == b.s_low && a.high_maps == b.high_maps && a.t_set == b.t_set &&
           a.t_restrictions == b.t_restrictions && a.t_plus == b.t_plus && a.t_plus_maps == b.t_plus_maps &&
           a.merges == b.merges;
}

InfoTuple build_info(const Rack& rack, CodecParams params) {
    const std::size_t n = rack.order();
    validate_params(n, params);
    InfoTuple info;
    info.n = n;

    const DegreeSplit split = degree_split(rack, params.delta);
    info.s_low = split.low;
    for (Element j : split.high) info.high_maps.push_back({j, rack.map(j)});

    info.t_order = greedy_order(rack, split.low);
    info.t_order.resize(std::min<std::size_t>(params.cap_L, info.t_order.size()));
    info.t_set = info.t_order;
    std::sort(info.t_set.begin(), info.t_set.end());

    info.t_plus = info.t_set;
    for (Element j = 0; j < n; ++j) {
        info.t_restrictions.push_back(restrict_map(rack.map(j), info.t_set));
        for (Element y : info.t_restrictions.back().images) info.t_plus.push_back(y);
    }
    std::sort(info.t_plus.begin(), info.t_plus.end());
    info.t_plus.erase(std::unique(info.t_plus.begin(), info.t_plus.end()), info.t_plus.end());
    for (Element j : info.t_plus) info.t_plus_maps.push_back({j, rack.map(j)});

    const ColoredDigraph g_t = rack_graph(rack, info.t_set);
    info.components = components(g_t);

    for (Element j : set_difference(info.s_low, info.t_set)) {
        MergeEntry me;
        me.j = j;
        const EdgeSet e_j = colour_edges(rack, j);
        std::vector<bool> merged(info.components.cp, false);
        for (const auto& [u, v] : e_j) {
            if (info.components.part_of[u] != info.components.part_of[v]) {
                merged[info.components.part_of[u]] = true;
                merged[info.components.part_of[v]] = true;
            }
        }
        for (std::size_t c = 0; c < info.components.cp; ++c) {
            if (merged[c]) {
                me.merged.push_back(c);
                me.merged_sets.push_back(info.components.parts[c]);
            }
        }
        me.restriction = restrict_map(rack.map(j), union_of(me.merged_sets));
        info.merges.push_back(std::move(me));
    }

    if (const auto bad = invariance_violations(rack, info); !bad.empty()) {
        throw std::logic_error("unmerged component of G_T moved by f_" + std::to_string(bad.front()));
    }
    return info;
}

std::vector<Element> invariance_violations(const Rack& rack, const InfoTuple& info) {
    std::vector<Element> bad;
    const auto& cs = info.components;
    for (Element j = 0; j < rack.order(); ++j) {
        std::vector<bool> merged(cs.cp, false);
        for (const auto& [u, v] : colour_edges(rack, j)) {
            if (cs.part_of[u] != cs.part_of[v]) merged[cs.part_of[u]] = merged[cs.part_of[v]] = true;
        }
        for (std::size_t c = 0; c < cs.cp; ++c) {
            if (merged[c]) continue;
            const bool moved = std::any_of(cs.parts[c].begin(), cs.parts[c].end(),
                                           [&](Element x) { return cs.part_of[rack.op(x, j)] != c; });
            if (moved) {
                bad.push_back(j);
                break;
            }
        }
    }
    return bad;
}

// --- residual --------------------------------------------------------------

std::size_t Residual::index_count() const {
    std::size_t k = 0;
    for (const auto& e : entries) k += e.indices.size();
    return k;
}

Residual extract_residual(const Rack& rack, const InfoTuple& info) {
    Residual res;
    const auto& cs = info.components;
    for (const auto& part : cs.parts) {
        const Element v = part.front();
        if (info.map_is_stored(v)) continue;
        ResidualEntry e;
        e.representative = v;
        e.unmerged = unmerged_components(info, v);
        for (std::size_t c : e.unmerged) {
            const VertexSet& d = cs.parts[c];
            const Element y = rack.op(d.front(), v);
            const auto it = std::lower_bound(d.begin(), d.end(), y);
            if (it == d.end() || *it != y) {
                throw std::logic_error("image of component minimum leaves its component; info does not match rack");
            }
            e.indices.push_back(Element(it - d.begin()));
        }
        res.entries.push_back(std::move(e));
    }
    return res;
}

// --- encode / decode -------------------------------------------------------

EncodedRack encode_detailed(const Rack& rack, CodecParams params) {
    const std::size_t n = rack.order();
    if (n > 65535) throw InvalidParams("order exceeds the 16-bit header field");
    validate_params(n, params);
    BitWriter w;
    write_header(w, n, params);
    EncodedRack out;
    if (n == 1) {
        out.header_bits = w.bit_count();
        out.bytes = w.finish();
        return out;
    }
    const InfoTuple info = build_info(rack, params);
    write_info(w, info);
    out.header_bits = w.bit_count();
    write_residual(w, info, extract_residual(rack, info));
    out.residual_bits = w.bit_count() - out.header_bits;
    out.bytes = w.finish();
    return out;
}

std::vector<std::uint8_t> encode(const Rack& rack, CodecParams params) {
    return encode_detailed(rack, params).bytes;
}

std::vector<std::uint8_t> encode(const Rack& rack) { return encode(rack, default_params(rack.order())); }

Reconstruction reconstruct(const InfoTuple& info, const Residual& residual) {
    const std::size_t n = info.n;
    std::vector<std::optional<Permutation>> known(n);
    for (const auto& hm : info.high_maps) known[hm.index] = hm.map;
    for (const auto& tm : info.t_plus_maps) known[tm.index] = tm.map;

    // G_T adjacency: out[w] = (u, i) with (w)f_i = u, i in T.
    std::vector<std::vector<std::pair<Element, Element>>> out(n);
    for (Element i : info.t_set) {
        const Permutation& f = *known[i];
        for (Element w = 0; w < n; ++w) {
            if (f(w) != w) out[w].emplace_back(f(w), i);
        }
    }

    const auto& cs = info.components;
    std::size_t next_entry = 0;
    Reconstruction rec;
    for (const auto& part : cs.parts) {
        const Element v = part.front();
        if (!known[v]) {
            if (next_entry >= residual.entries.size() || residual.entries[next_entry].representative != v) {
                throw InconsistentDecode("residual entries do not match component representatives");
            }
            const ResidualEntry& e = residual.entries[next_entry++];
            const MergeEntry* me = info.merge_entry(v);
            if (!me) throw InconsistentDecode("missing merge entry for representative");
            std::vector<Element> img(n, kUnset);
            for (std::size_t k = 0; k < me->restriction.domain.size(); ++k) {
                img[me->restriction.domain[k]] = me->restriction.images[k];
            }
            const PartialMap& on_t = info.t_restrictions[v];
            for (std::size_t k = 0; k < e.unmerged.size(); ++k) {
                const VertexSet& d = cs.parts[e.unmerged[k]];
                if (e.indices[k] >= d.size()) throw InconsistentDecode("residual index out of range");
                img[d.front()] = d[e.indices[k]];
                // (u)f_v = ((w)f_v)f_k along edges w -i-> u, k = (i)f_v
                std::deque<Element> queue{d.front()};
                while (!queue.empty()) {
                    const Element w = queue.front();
                    queue.pop_front();
                    for (const auto& [u, i] : out[w]) {
                        if (img[u] != kUnset) continue;
                        const Element kk = on_t(i);
                        if (!known[kk]) throw InconsistentDecode("propagation needs a map outside T+");
                        img[u] = (*known[kk])(img[w]);
                        queue.push_back(u);
                    }
                }
            }
            if (std::find(img.begin(), img.end(), kUnset) != img.end() || !is_bijection(img)) {
                throw InconsistentDecode("reconstructed representative map is not a permutation");
            }
            known[v] = Permutation::from_images_unchecked(std::move(img));
        }

        // Conjugate along directed paths of G_T: f_u = g^{-1} f_v g, (v)g = u.
        std::vector<std::optional<Permutation>> word(n);
        word[v] = Permutation::identity(n);
        std::deque<Element> queue{v};
        while (!queue.empty()) {
            const Element w = queue.front();
            queue.pop_front();
            for (const auto& [u, i] : out[w]) {
                if (word[u]) continue;
                word[u] = *word[w] * *known[i];
                queue.push_back(u);
            }
        }
        for (Element u : part) {
            if (u == v) continue;
            if (!word[u]) throw InconsistentDecode("component vertex unreachable along G_T");
            Permutation conj = conjugate(*known[v], *word[u]);
            if (known[u]) {
                if (*known[u] != conj) throw InconsistentDecode("stored map disagrees with conjugation");
                continue;
            }
            known[u] = conj;
            rec.steps.push_back({u, v, *word[u]});
        }
    }
    if (next_entry != residual.entries.size()) throw InconsistentDecode("unused residual entries");

    rec.maps.reserve(n);
    for (auto& m : known) rec.maps.push_back(std::move(*m));
    return rec;
}

DecodedStream parse_stream(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kRkeHeaderBytes) throw CorruptStream("stream shorter than header");
    if (!std::equal(kRkeMagic.begin(), kRkeMagic.end(), bytes.begin())) throw CorruptStream("bad magic");
    BitReader r(bytes);
    r.read(32);
    const std::size_t n = r.read(16);
    DecodedStream ds;
    ds.params.delta = std::uint16_t(r.read(16));
    ds.params.cap_L = std::uint16_t(r.read(16));
    if (n == 0) throw CorruptStream("order is zero");
    try {
        validate_params(n, ds.params);
    } catch (const InvalidParams& e) {
        throw CorruptStream(e.what());
    }
    ds.info.n = n;
    if (n == 1) {
        r.expect_end();
        ds.info.s_low = {0};
        return ds;
    }
    ds.info = read_info(r, n);
    ds.residual = read_residual(r, ds.info);
    r.expect_end();
    return ds;
}

Rack decode(std::span<const std::uint8_t> bytes) {
    const DecodedStream ds = parse_stream(bytes);
    if (ds.info.n == 1) return trivial_rack(1);
    const Reconstruction rec = reconstruct(ds.info, ds.residual);
    RackOrReport result = rack_from_maps(rec.maps);
    if (auto* report = std::get_if<AxiomReport>(&result)) {
        throw InconsistentDecode("decoded maps violate the rack axioms (" +
                                 to_string(report->violations.front().kind) + ")");
    }
    Rack rack = std::get<Rack>(std::move(result));
    if (build_info(rack, ds.params) != ds.info) {
        throw InconsistentDecode("decoded rack does not reproduce the stored information");
    }
    return rack;
}

// --- statistics and audit --------------------------------------------------

CodecStats encoding_stats(const Rack& rack, CodecParams params) {
    const std::size_t n = rack.order();
    CodecStats st;
    st.n = n;
    st.bound = double(n) * double(n) / 4.0;
    const EncodedRack enc = encode_detailed(rack, params);
    st.header_bits = enc.header_bits;
    st.residual_bits = enc.residual_bits;
    if (n == 1) {
        st.eta = {0, 1};
        st.cp = 1;
        st.zeta = 0.0;
        return st;
    }
    const InfoTuple info = build_info(rack, params);
    st.eta = info.components.eta;
    st.cp = info.components.cp;
    double comps = 0.0, logs = 0.0;
    for (std::size_t q = 1; q <= n; ++q) {
        comps += double(st.eta[q]) / double(q);
        logs += std::log2(double(q)) * double(st.eta[q]) / double(q);
    }
    st.zeta = comps * logs;
    const Residual res = extract_residual(rack, info);
    for (const auto& e : res.entries) {
        for (std::size_t c : e.unmerged) st.index_bits += bits_for(std::uint64_t(info.components.parts[c].size()));
        st.stored_indices += e.indices.size();
    }
    return st;
}

AuditReport merge_bound_audit(const Rack& rack, CodecParams params) {
    const std::size_t n = rack.order();
    validate_params(n, params);
    AuditReport rep;
    rep.cap_L = params.cap_L;
    const DegreeSplit split = degree_split(rack, params.delta);
    rep.order = greedy_order(rack, split.low);

    DisjointSets h(n);
    std::size_t sum = 0;
    for (Element u : rep.order) {
        const std::size_t before = h.count();
        const Permutation& f = rack.map(u);
        for (Element x = 0; x < n; ++x) h.unite(x, f(x));
        rep.x.push_back(before - h.count());
        sum += rep.x.back();
    }
    for (std::size_t i = 0; i + 1 < rep.x.size(); ++i) {
        if (rep.x[i] < rep.x[i + 1]) {
            rep.failure = AuditFailure{"x_increasing", i + 1};
            break;
        }
    }
    if (!rep.failure && sum > n) rep.failure = AuditFailure{"x_sum", rep.x.size()};

    const std::size_t t_size = std::min<std::size_t>(params.cap_L, rep.order.size());
    VertexSet t_set(rep.order.begin(), rep.order.begin() + std::ptrdiff_t(t_size));
    std::sort(t_set.begin(), t_set.end());
    const ColoredDigraph g_t = rack_graph(rack, t_set);
    const EdgeSet base = g_t.edge_set();
    rep.cp_T = components(n, base).cp;
    for (std::size_t k = t_size; k < rep.order.size(); ++k) {
        const Element j = rep.order[k];
        const EdgeSet e_j = colour_edges(rack, j);
        const std::size_t drop = rep.cp_T - count_components_with(n, base, e_j);
        const std::size_t merged = merged_components(n, base, e_j).size();
        rep.drops.push_back({j, drop, merged});
        if (rep.failure) continue;
        if (rep.order.size() > params.cap_L && drop > rep.x[params.cap_L]) {
            rep.failure = AuditFailure{"post_T_drop", j};
        } else if (merged > 2 * drop) {
            rep.failure = AuditFailure{"merge_size", j};
        }
    }
    std::sort(rep.drops.begin(), rep.drops.end(), [](const auto& a, const auto& b) { return a.j < b.j; });
    return rep;
}

}  // namespace racklab
