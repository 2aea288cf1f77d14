// Command line front end: gen, separator, verify, dfs, bench.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "plansep/dfs.hpp"
#include "plansep/oracle.hpp"
#include "plansep/separator.hpp"

using namespace plansep;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerify = 2, kInternal = 3 };

struct Common {
    std::string mode = "charged";
    int bits = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string schedule = "forward";
};

void add_common(CLI::App* app, Common& c, bool with_out = true) {
    app->add_option("--mode", c.mode, "literal or charged")->check(CLI::IsMember({"literal", "charged"}));
    app->add_option("--bits", c.bits, "message budget in bits (0: 4 ceil(log2(n+1)))");
    app->add_option("--seed", c.seed, "seed");
    app->add_option("--schedule", c.schedule, "node step order")->check(CLI::IsMember({"forward", "reverse", "threaded"}));
    if (with_out) app->add_option("--out", c.out, "output path (default stdout)");
}

SimConfig config(const Common& c) {
    SimConfig s;
    s.mode = c.mode == "literal" ? Mode::Literal : Mode::Charged;
    s.bits = c.bits;
    s.seed = c.seed;
    s.schedule = c.schedule == "reverse" ? Schedule::Reverse : c.schedule == "threaded" ? Schedule::Threaded : Schedule::Forward;
    return s;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::IoError, "cannot write " + path);
    out << text << "\n";
}

PlanarGraph generate(const std::string& kind, const std::vector<int>& a, std::uint64_t seed) {
    auto need = [&](std::size_t k) {
        if (a.size() != k) throw Error(Errc::InfeasibleParams, kind + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (kind == "grid") return need(1), gen::grid(a[0]);
    if (kind == "tri") return need(1), gen::random_triangulation(a[0], seed);
    if (kind == "planar") return need(2), gen::random_planar(a[0], a[1], seed);
    if (kind == "tree") return need(1), gen::random_tree(a[0], seed);
    if (kind == "path") return need(1), gen::path(a[0]);
    if (kind == "star") return need(1), gen::star(a[0]);
    if (kind == "cycle") return need(1), gen::cycle(a[0]);
    throw Error(Errc::InfeasibleParams, "unknown family " + kind);
}

Partition load_parts(const PlanarGraph& g, const std::string& which) {
    if (which.empty() || which == "single") return Partition::single(g.n());
    if (which == "quadrant") return quadrant_partition(g);
    json j;
    try {
        j = json::parse(slurp(which));
        if (j.is_object()) j = j.at("labels");
        return Partition::from_labels(j.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw Error(Errc::SchemaViolation, "partition file: " + std::string(e.what()));
    }
}

int cmd_gen(const std::string& kind, const std::vector<int>& params, const Common& c) {
    auto g = generate(kind, params, c.seed);
    emit(c.out, to_json(g));
    std::fprintf(stderr, "n=%zu m=%zu D=%d\n", g.n(), g.m(), g.n() ? diameter(g) : 0);
    return kOk;
}

int cmd_separator(const std::string& in, const std::string& parts, const Common& c) {
    auto g = load_json(in);
    auto p = load_parts(g, parts);
    Network net(g, config(c));
    auto res = compute_separators(net, p);
    json verdicts = json::array();
    bool ok = true;
    for (const auto& w : res.witnesses) {
        auto rep = verify_witness(g, p, w, &res.forest.parent);
        ok = ok && rep.ok;
        verdicts.push_back({{"part", w.part}, {"ok", rep.ok}, {"violation", rep.violation}});
    }
    json doc = json::parse(witnesses_to_json(res.witnesses));
    doc["verdicts"] = verdicts;
    doc["report"] = json::parse(net.report().to_json());
    emit(c.out, doc.dump());
    std::fprintf(stderr, "parts=%zu verified=%s invocations=%lld rounds_charged=%lld\n", res.witnesses.size(),
                 ok ? "yes" : "no", static_cast<long long>(net.report().invocations()),
                 static_cast<long long>(net.report().rounds_charged));
    return ok ? kOk : kVerify;
}

int cmd_verify(const std::string& in, const std::string& wfile, const std::string& parts) {
    auto g = load_json(in);
    auto p = load_parts(g, parts);
    std::vector<SeparatorWitness> ws;
    try {
        ws = witnesses_from_json(slurp(wfile));
    } catch (const Error& e) {
        if (e.code() != Errc::SchemaViolation) throw;
        std::fprintf(stderr, "violation: %s\n", e.what());
        return kVerify;
    }
    bool ok = ws.size() == p.parts.size();
    if (!ok) std::fprintf(stderr, "violation: %zu witnesses for %d parts\n", ws.size(), p.count());
    for (const auto& w : ws) {
        auto rep = verify_witness(g, p, w);
        if (!rep.ok) std::fprintf(stderr, "part %d: %s\n", w.part, rep.violation.c_str());
        ok = ok && rep.ok;
    }
    std::printf("%s\n", ok ? "ok" : "violation");
    return ok ? kOk : kVerify;
}

int cmd_dfs(const std::string& in, NodeId root, const Common& c) {
    auto g = load_json(in);
    Network net(g, config(c));
    auto res = build_dfs(net, root);
    auto v = oracle::check_dfs_tree(g, res.tree.parent, root);
    emit(c.out, dfs_to_json(res.tree));
    json summary = {{"phases", res.phases.size()},
                    {"phase_bound", phase_bound(g.n())},
                    {"verified", v.ok},
                    {"report", json::parse(net.report().to_json())}};
    if (!v.ok) summary["violation"] = v.reason;
    std::fprintf(stderr, "%s\n", summary.dump().c_str());
    return v.ok ? kOk : kVerify;
}

int cmd_bench(const std::string& family, const std::vector<int>& sizes, const Common& c) {
    std::ostringstream csv;
    csv << "n,diameter,rounds_charged,rounds_literal,invocations,phases\n";
    bool ok = true;
    for (int s : sizes) {
        std::vector<int> params{s};
        if (family == "planar") params.push_back(2 * s);
        auto g = generate(family, params, c.seed);
        Network net(g, config(c));
        auto res = build_dfs(net, 0);
        ok = ok && oracle::check_dfs_tree(g, res.tree.parent, 0).ok;
        const auto& r = net.report();
        csv << g.n() << "," << net.diameter() << "," << r.rounds_charged << "," << r.rounds_literal << ","
            << r.invocations() << "," << res.phases.size() << "\n";
    }
    std::string text = csv.str();
    text.pop_back();
    emit(c.out, text);
    return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar cycle separators and DFS trees on a CONGEST simulator"};
    app.require_subcommand(1);

    Common common;
    std::string kind, in, parts, wfile, family;
    std::vector<int> params, sizes;
    NodeId root = 0;

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("kind", kind, "grid|tri|planar|tree|path|star|cycle")->required();
    gen->add_option("params", params, "size parameters")->required();
    add_common(gen, common);

    auto* sep = app.add_subcommand("separator", "cycle separators for every part");
    sep->add_option("input", in, "graph JSON")->required();
    sep->add_option("--parts", parts, "single | quadrant | labels file");
    add_common(sep, common);

    auto* ver = app.add_subcommand("verify", "check a witness file");
    ver->add_option("input", in, "graph JSON")->required();
    ver->add_option("witnesses", wfile, "witness JSON")->required();
    ver->add_option("--parts", parts, "single | quadrant | labels file");

    auto* dfs = app.add_subcommand("dfs", "DFS tree");
    dfs->add_option("input", in, "graph JSON")->required();
    dfs->add_option("--root", root, "root node");
    add_common(dfs, common);

    auto* bench = app.add_subcommand("bench", "DFS cost per instance as CSV");
    bench->add_option("family", family, "grid|tri|planar")->required()->check(CLI::IsMember({"grid", "tri", "planar"}));
    bench->add_option("sizes", sizes, "grid side or node count")->required();
    add_common(bench, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen(kind, params, common);
        if (*sep) return cmd_separator(in, parts, common);
        if (*ver) return cmd_verify(in, wfile, parts);
        if (*dfs) return cmd_dfs(in, root, common);
        if (*bench) return cmd_bench(family, sizes, common);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.code()) {
            case Errc::VerificationFailed: return kVerify;
            case Errc::InternalWitnessMismatch:
            case Errc::RoundLimitExceeded:
            case Errc::OverflowBeyondBudget:
            case Errc::BitBudgetExceeded: return kInternal;
            default: return kUsage;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInternal;
    }
    return kUsage;
}
