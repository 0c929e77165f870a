// cli.cpp
#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "racklab/analysis.hpp"
#include "racklab/codec.hpp"
#include "racklab/enumerate.hpp"
#include "racklab/errors.hpp"
#include "racklab/families.hpp"
#include "racklab/graph.hpp"
#include "racklab/parallel.hpp"
#include "racklab/rack.hpp"
#include "racklab/rack_io.hpp"

namespace racklab::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
    std::string path;
    std::string out;
    std::string format = "json";
    std::string rack_path;
    std::string dot;
    std::string check;
    std::size_t n = 0;
    std::optional<std::uint16_t> delta;
    std::optional<std::uint16_t> cap_l;
    double p = 0.1;
    double eps = 0.5;
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool oracle = false;
    double threshold = 1.0;
    std::size_t attempts = 100;
};

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Options& o, const json& j, std::ostream& out) {
    std::ostringstream text;
    if (o.format == "text") {
        flatten(j, "", text);
    } else {
        text << j.dump(2) << "\n";
    }
    out << text.str();
}

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open " + p.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write " + p.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw IoError("cannot write " + p.string());
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    out << text;
    if (!out) throw IoError("cannot write " + p.string());
}

json axiom_json(const AxiomReport& r) {
    json v = json::array();
    for (const Violation& w : r.violations) {
        json e = {{"kind", to_string(w.kind)}, {"y", w.y}};
        if (w.kind != ViolationKind::NotBijective) {
            e["x"] = w.x;
            e["z"] = w.z;
        }
        v.push_back(e);
    }
    return {{"is_rack", r.is_rack}, {"is_quandle", r.is_quandle}, {"violations", v}};
}

CodecParams params_for(const Options& o, std::size_t n) {
    CodecParams p = default_params(n);
    if (o.delta) p.delta = *o.delta;
    if (o.cap_l) p.cap_L = *o.cap_l;
    validate_params(n, p);
    return p;
}

json params_json(CodecParams p) { return {{"delta", p.delta}, {"cap_L", p.cap_L}}; }

json tail_json(const TailEstimate& t) {
    return {{"threshold", t.threshold}, {"hits", t.hits},       {"trials", t.trials}, {"estimate", t.estimate},
            {"std_error", t.std_error}, {"bound", t.bound},     {"pass", t.pass}};
}

Rack load_rack(const std::string& path, json* report) {
    const Table t = read_table_file(path);
    RackOrReport r = rack_from_table(t);
    if (auto* bad = std::get_if<AxiomReport>(&r)) {
        if (report) *report = axiom_json(*bad);
        throw std::domain_error("table is not a rack");
    }
    return std::get<Rack>(std::move(r));
}

int cmd_check(const Options& o, std::ostream& out) {
    const Table t = read_table_file(o.path);
    const AxiomReport r = check_axioms(t);
    json j = axiom_json(r);
    j["n"] = t.n;
    emit(o, j, out);
    return r.is_rack ? kOk : kDomainFailure;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n == 0) throw std::invalid_argument("--n must be positive");
    const EnumReport rep = enumerate_classes(o.n, o.threads);
    json j = {{"n", rep.n},
              {"labeled", rep.labeled_count},
              {"classes", rep.class_count},
              {"quandle_classes", rep.quandle_class_count},
              {"duration_ms", rep.elapsed.count()}};
    json ref = json::object();
    if (rep.reference_racks) ref["racks"] = *rep.reference_racks;
    if (rep.reference_quandles) ref["quandles"] = *rep.reference_quandles;
    j["reference_unverified"] = ref;

    int code = kOk;
    if (o.oracle) {
        const OracleReport oracle = oracle_enumerate(o.n);
        const std::vector<Rack> labeled = enumerate_labeled(o.n, o.threads);
        std::vector<Table> tables;
        for (const Rack& r : labeled) tables.push_back(r.table());
        const bool agree = tables == oracle.labeled && rep.witnesses == oracle.summary.witnesses &&
                           rep.quandle_class_count == oracle.summary.quandle_class_count;
        j["oracle"] = {{"labeled", oracle.summary.labeled_count},
                       {"classes", oracle.summary.class_count},
                       {"agree", agree}};
        if (!agree) {
            err << "enumerate: pruned search disagrees with the oracle\n";
            code = kDomainFailure;
        }
    }
    if (!o.out.empty()) {
        fs::create_directories(o.out);
        for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
            std::ostringstream name;
            name << "class_" << std::setw(4) << std::setfill('0') << i << ".rack";
            write_table_file(fs::path(o.out) / name.str(), rep.witnesses[i]);
        }
        write_text(fs::path(o.out) / "summary.json", j.dump(2) + "\n");
    }
    emit(o, j, out);
    return code;
}

int cmd_encode(const Options& o, std::ostream& out) {
    const Rack rack = load_rack(o.path, nullptr);
    const CodecParams p = params_for(o, rack.order());
    const EncodedRack enc = encode_detailed(rack, p);
    const fs::path dest = o.out.empty() ? fs::path(o.path).replace_extension(".rke") : fs::path(o.out);
    write_bytes(dest, enc.bytes);
    emit(o,
         {{"n", rack.order()},
          {"params", params_json(p)},
          {"output", dest.string()},
          {"bytes", enc.bytes.size()},
          {"header_bits", enc.header_bits},
          {"residual_bits", enc.residual_bits}},
         out);
    return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
    const Rack rack = decode(read_bytes(o.path));
    if (o.out.empty()) {
        out << format_table(rack.table());
    } else {
        write_table_file(o.out, rack.table());
    }
    return kOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
    const Rack rack = load_rack(o.path, nullptr);
    const CodecParams p = params_for(o, rack.order());
    const CodecStats s = encoding_stats(rack, p);
    json hist = json::object();
    for (std::size_t q = 1; q < s.eta.size(); ++q) {
        if (s.eta[q] != 0) hist[std::to_string(q)] = s.eta[q];
    }
    emit(o,
         {{"n", s.n},
          {"params", params_json(p)},
          {"cp", s.cp},
          {"eta", hist},
          {"zeta", s.zeta},
          {"n2_over_4", s.bound},
          {"residual_bits", s.residual_bits},
          {"index_bits", s.index_bits},
          {"stored_indices", s.stored_indices},
          {"header_bits", s.header_bits}},
         out);
    if (!o.dot.empty()) write_text(o.dot, to_dot(rack_graph(rack)));
    return kOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
    json axioms;
    std::optional<Rack> loaded;
    try {
        loaded = load_rack(o.path, &axioms);
    } catch (const std::domain_error&) {
        emit(o, {{"axioms", axioms}, {"pass", false}}, out);
        return kDomainFailure;
    }
    const Rack& rack = *loaded;
    const CodecParams p = params_for(o, rack.order());
    const AuditReport a = merge_bound_audit(rack, p);
    const InfoTuple info = build_info(rack, p);
    const std::vector<Element> moved = invariance_violations(rack, info);
    const std::vector<std::size_t> irregular = irregular_components(rack_graph(rack));

    json drops = json::array();
    for (const auto& d : a.drops) drops.push_back({{"j", d.j}, {"drop", d.drop}, {"merged", d.merged}});
    json audit = {{"x", a.x}, {"order", a.order}, {"cap_L", a.cap_L}, {"cp_T", a.cp_T}, {"drops", drops}};
    audit["failure"] = a.failure ? json{{"kind", a.failure->kind}, {"index", a.failure->index}} : json(nullptr);
    const bool pass = a.passed() && moved.empty() && irregular.empty();
    emit(o,
         {{"n", rack.order()},
          {"params", params_json(p)},
          {"merge_bound", audit},
          {"invariance_violations", moved},
          {"irregular_components", irregular},
          {"pass", pass}},
         out);
    return pass ? kOk : kDomainFailure;
}

json report(const std::string& check, json params, std::uint64_t seed, json statistic, json bound, bool pass) {
    return {{"check", check}, {"params", std::move(params)}, {"seed", seed},
            {"statistic", std::move(statistic)}, {"bound", std::move(bound)}, {"pass", pass}};
}

Rack analysis_rack(const Options& o, std::size_t fallback_n, bool symmetric) {
    if (!o.rack_path.empty()) return load_rack(o.rack_path, nullptr);
    return symmetric ? conjugation_quandle(symmetric_group(3)) : dihedral_quandle(fallback_n);
}

int cmd_analyze(Options o, std::ostream& out) {
    json j;
    if (o.check == "zeta-sweep") {
        const std::size_t n = o.n ? o.n : 8;
        const ZetaSweepReport r = zeta_bound_sweep(n, o.trials, o.seed);
        json argmax = json::object();
        for (std::size_t q = 1; q < r.argmax.eta.size(); ++q) {
            if (r.argmax.eta[q] != 0) argmax[std::to_string(q)] = r.argmax.eta[q];
        }
        j = report("zeta-sweep", {{"n", n}, {"trials", r.exhaustive ? 0 : o.trials}}, o.seed, r.max_zeta, r.bound,
                   r.pass);
        j["exhaustive"] = r.exhaustive;
        j["sequences"] = r.sequences;
        j["argmax"] = argmax;
        j["violations"] = r.violations;
        j["attained"] = r.attained;
        j["attained_only_at_eta2"] = r.attained_only_at_eta2;
    } else if (o.check == "chernoff") {
        const std::size_t n = o.n ? o.n : 1000;
        const ChernoffReport r = chernoff_check(n, o.p, o.eps, o.trials, o.seed, o.threads);
        j = report("chernoff", {{"n", n}, {"p", o.p}, {"eps", o.eps}, {"trials", o.trials}}, o.seed,
                   {{"upper", r.upper.estimate}, {"lower", r.lower.estimate}},
                   {{"upper", r.upper.bound}, {"lower", r.lower.bound}}, r.pass);
        j["upper"] = tail_json(r.upper);
        j["lower"] = tail_json(r.lower);
    } else if (o.check == "random-subset") {
        const Rack rack = analysis_rack(o, o.n ? o.n : 1000, false);
        const RandomSubsetReport r = random_subset_check(rack, o.p, o.eps, o.trials, o.seed, o.threads);
        json vs = json::array();
        json stat = {{"size", r.size_tail.estimate}};
        json bnd = {{"size", r.size_tail.bound}};
        for (const VertexTail& v : r.vertices) {
            json t = tail_json(v.tail);
            t["v"] = v.v;
            t["degree"] = v.degree;
            t["delta"] = v.delta;
            vs.push_back(t);
        }
        j = report("random-subset",
                   {{"n", rack.order()}, {"p", o.p}, {"eps", o.eps}, {"trials", o.trials}}, o.seed, stat, bnd,
                   r.pass);
        j["size_tail"] = tail_json(r.size_tail);
        j["vertices"] = vs;
    } else if (o.check == "find-w") {
        const Rack rack = analysis_rack(o, 0, true);
        const std::size_t delta = o.delta.value_or(1);
        const WSearchResult r = find_W(rack, delta, o.p, o.threshold, o.attempts, o.seed);
        j = report("find-w",
                   {{"n", rack.order()}, {"delta", delta}, {"p", o.p}, {"bad_threshold", o.threshold},
                    {"max_attempts", o.attempts}},
                   o.seed, r.attempts, o.attempts, r.certified);
        j["W"] = r.W;
        j["X"] = r.X;
        j["V"] = r.V;
        j["certified"] = r.certified;
        j["exhausted"] = r.exhausted;
    } else if (o.check == "claim-calc") {
        // Grid over [0, 3]^2 in steps of 0.05.
        double min_gap = 0.0, max_err = 0.0;
        bool first = true;
        for (int a = 0; a <= 60; ++a) {
            for (int b = 0; b <= 60; ++b) {
                const double x = a * 0.05, y = b * 0.05;
                const double g = claim_calc_gap(x, y);
                const double err = std::abs(g - (x - 3 * y) * (x - 3 * y) / 72.0);
                min_gap = first ? g : std::min(min_gap, g);
                max_err = std::max(max_err, err);
                first = false;
            }
        }
        const bool pass = min_gap >= -1e-12 && max_err <= 1e-12;
        j = report("claim-calc", {{"grid", "[0,3]^2 step 0.05"}}, o.seed, min_gap, 0.0, pass);
        j["max_identity_error"] = max_err;
    } else {
        throw std::invalid_argument("unknown check '" + o.check +
                                    "' (expected zeta-sweep, chernoff, random-subset, find-w, claim-calc)");
    }
    if (!o.out.empty()) write_text(o.out, j.dump(2) + "\n");
    emit(o, j, out);
    return j["pass"].get<bool>() ? kOk : kDomainFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"racklab: finite racks, enumeration, encoding and bound checks"};
    app.require_subcommand(1);
    Options o;
    o.threads = default_thread_count();

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        c->add_option("--out", o.out, "output path");
        c->add_option("--threads", o.threads, "worker threads (default: RACKLAB_THREADS or 1)")
            ->check(CLI::PositiveNumber);
    };
    auto add_params = [&](CLI::App* c) {
        c->add_option("--delta", o.delta, "out-degree threshold");
        c->add_option("--cap-l", o.cap_l, "greedy size cap");
    };

    auto* check = app.add_subcommand("check", "verify the rack axioms of a .rack table");
    check->add_option("path", o.path)->required();
    add_common(check);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate racks of order n up to isomorphism");
    enumerate->add_option("--n", o.n)->required();
    enumerate->add_flag("--oracle", o.oracle, "cross-check against the naive oracle (n <= 3)");
    add_common(enumerate);

    auto* encode_cmd = app.add_subcommand("encode", "encode a .rack table as .rke");
    encode_cmd->add_option("path", o.path)->required();
    add_common(encode_cmd);
    add_params(encode_cmd);

    auto* decode_cmd = app.add_subcommand("decode", "decode a .rke stream to a .rack table");
    decode_cmd->add_option("path", o.path)->required();
    add_common(decode_cmd);

    auto* stats = app.add_subcommand("stats", "component histogram, zeta and bit counts");
    stats->add_option("path", o.path)->required();
    stats->add_option("--dot", o.dot, "write G_R as DOT");
    add_common(stats);
    add_params(stats);

    auto* audit = app.add_subcommand("audit", "greedy merge audit, invariance and regularity");
    audit->add_option("path", o.path)->required();
    add_common(audit);
    add_params(audit);

    auto* analyze = app.add_subcommand("analyze", "numerical and Monte Carlo bound checks");
    analyze->add_option("check", o.check, "zeta-sweep, chernoff, random-subset, find-w, claim-calc")->required();
    analyze->add_option("--n", o.n);
    analyze->add_option("--p", o.p);
    analyze->add_option("--eps", o.eps);
    analyze->add_option("--trials", o.trials);
    analyze->add_option("--seed", o.seed);
    analyze->add_option("--delta", o.delta);
    analyze->add_option("--rack", o.rack_path, "rack for random-subset / find-w");
    analyze->add_option("--threshold", o.threshold, "find-w bad-vertex threshold");
    analyze->add_option("--attempts", o.attempts, "find-w attempt budget");
    add_common(analyze);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kIoError;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out, err);
        if (encode_cmd->parsed()) return cmd_encode(o, out);
        if (decode_cmd->parsed()) return cmd_decode(o, out);
        if (stats->parsed()) return cmd_stats(o, out);
        if (audit->parsed()) return cmd_audit(o, out);
        return cmd_analyze(o, out);
    } catch (const OrderTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kResourceCap;
    } catch (const InconsistentDecode& e) {
        err << "error: " << e.what() << "\n";
        return kDomainFailure;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
}

}  // namespace racklab::cli
