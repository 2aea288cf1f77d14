#include "plansep/dfs.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "plansep/oracle.hpp"
#include "plansep/primitives.hpp"
#include "plansep/separator.hpp"
#include "plansep/tree.hpp"

namespace plansep {

namespace {

using Sz = std::size_t;
Sz ix(NodeId v) { return static_cast<Sz>(v); }

// Components of G restricted to nodes with keep[v] set.
Partition components_of(const PlanarGraph& g, const std::vector<char>& keep) {
    std::vector<int> label(g.n(), -1);
    int next = 0;
    for (Sz s = 0; s < g.n(); ++s) {
        if (!keep[s] || label[s] >= 0) continue;
        label[s] = next;
        std::vector<NodeId> q{static_cast<NodeId>(s)};
        for (Sz h = 0; h < q.size(); ++h)
            for (NodeId y : g.rotation(q[h]))
                if (keep[ix(y)] && label[ix(y)] < 0) label[ix(y)] = next, q.push_back(y);
        ++next;
    }
    return Partition::from_labels(label);
}

void validate_separators(const PlanarGraph& g, const PartialDfsTree& t, const Partition& comps,
                         const std::vector<std::vector<NodeId>>& seps) {
    auto bad = [](const std::string& why) { throw Error(Errc::NotASeparatorInput, why); };
    if (seps.size() != comps.parts.size()) bad("one separator per component expected");
    for (Sz i = 0; i < seps.size(); ++i) {
        const auto& S = seps[i];
        if (S.empty()) bad("empty separator for component " + std::to_string(i));
        for (Sz k = 0; k < S.size(); ++k) {
            NodeId x = S[k];
            if (x < 0 || ix(x) >= g.n() || comps.part_of[ix(x)] != static_cast<int>(i) || t.member[ix(x)])
                bad("separator node outside its component");
            if (k > 0 && !g.has_edge(S[k - 1], x)) bad("separator of component " + std::to_string(i) + " is not a path");
        }
        auto v = oracle::check_separator(g, comps.parts[i], S);
        if (!v.ok) bad("component " + std::to_string(i) + ": " + v.reason);
    }
}

}  // namespace

PartialDfsTree PartialDfsTree::start(std::size_t n, NodeId root) {
    PartialDfsTree t;
    t.root = root;
    t.member.assign(n, 0);
    t.parent.assign(n, kNone);
    t.depth.assign(n, -1);
    t.phase.assign(n, -1);
    t.member[ix(root)] = 1;
    t.depth[ix(root)] = 0;
    t.phase[ix(root)] = 0;
    return t;
}

std::size_t PartialDfsTree::size() const {
    return static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
}

JoinLedger join_separators(Network& net, PartialDfsTree& t, const Partition& components,
                           const std::vector<std::vector<NodeId>>& separators, int phase) {
    const PlanarGraph& g = net.graph();
    const Sz n = g.n();
    validate_partition(g, components);
    validate_separators(g, t, components, separators);

    std::vector<char> pending(n, 0);
    for (const auto& S : separators)
        for (NodeId x : S) pending[ix(x)] = 1;

    JoinLedger led;
    while (true) {
        int left = static_cast<int>(std::count(pending.begin(), pending.end(), 1));
        if (left == 0) break;
        led.unjoined.push_back(left);
        ++led.iterations;

        // Residual components that still hold separator nodes.
        std::vector<char> free(n, 0);
        for (Sz v = 0; v < n; ++v) free[v] = !t.member[v];
        Partition all = components_of(g, free);
        std::vector<char> live(static_cast<Sz>(all.count()), 0);
        for (Sz v = 0; v < n; ++v)
            if (pending[v]) live[static_cast<Sz>(all.part_of[v])] = 1;
        std::vector<int> dense(live.size(), -1);
        int used = 0;
        for (Sz c = 0; c < live.size(); ++c)
            if (live[c]) dense[c] = used++;
        std::vector<int> label(n, -1);
        for (Sz v = 0; v < n; ++v)
            if (free[v]) label[v] = dense[static_cast<Sz>(all.part_of[v])];
        Partition res = Partition::from_labels(label);
        const auto P = static_cast<Sz>(res.count());

        Forest f = build_part_trees(net, res, nullptr, &pending);

        // Deepest T_d neighbor, smallest id on ties; then smallest r_i.
        std::vector<std::optional<Message>> dep(n);
        for (Sz v = 0; v < n; ++v)
            if (t.member[v]) dep[v] = Message{static_cast<std::uint64_t>(t.depth[v])};
        auto in = neighbor_exchange_all(net, dep);
        Values key(n, 0);
        std::vector<char> elig(n, 0);
        std::vector<NodeId> best(n, kNone);
        for (Sz v = 0; v < n; ++v) {
            if (!f.member(static_cast<NodeId>(v))) continue;
            for (int i = 0; i < g.degree(static_cast<NodeId>(v)); ++i) {
                const auto& m = in[g.offset(static_cast<NodeId>(v)) + static_cast<Sz>(i)];
                if (!m) continue;
                NodeId y = g.rotation(static_cast<NodeId>(v))[static_cast<Sz>(i)];
                auto k = static_cast<std::int64_t>((*m)[0]) * static_cast<std::int64_t>(n) +
                         static_cast<std::int64_t>(n) - 1 - y;
                if (!elig[v] || k > key[v]) key[v] = k, best[v] = y;
                elig[v] = 1;
            }
        }
        PartContext ctx{net, f};
        auto r = find_extreme(ctx, Extreme::Max, key, &elig);
        std::vector<Corner> at(P);
        for (Sz i = 0; i < P; ++i) at[i] = Corner{r[i], g.index_of(r[i], best[ix(r[i])])};
        Forest h = reroot(net, f, at);
        PartContext hctx{net, h};

        // Shallowest pending node, then the deepest pending node below it.
        Values d(n, 0);
        for (Sz v = 0; v < n; ++v)
            if (h.member(static_cast<NodeId>(v))) d[v] = h.depth[v];
        auto top = find_extreme(hctx, Extreme::Min, d, &pending);
        auto rel = relation_to(hctx, top);
        std::vector<char> below(n, 0);
        for (Sz v = 0; v < n; ++v)
            below[v] = pending[v] && (rel[v] == Relation::Self || rel[v] == Relation::Descendant);
        auto far = find_extreme(hctx, Extreme::Max, d, &below);

        std::vector<PathQuery> q(P);
        for (Sz i = 0; i < P; ++i) q[i] = {r[i], far[i]};
        auto on = mark_path(net, h, q);
        for (Sz v = 0; v < n; ++v) {
            if (!on[v]) continue;
            auto V = static_cast<NodeId>(v);
            Sz i = static_cast<Sz>(h.part[v]);
            NodeId anchor = best[ix(r[i])];
            t.member[v] = 1;
            t.parent[v] = V == r[i] ? anchor : h.parent[v];
            t.depth[v] = t.depth[ix(anchor)] + 1 + h.depth[v];
            t.phase[v] = phase;
            pending[v] = 0;
        }
    }
    return led;
}

DfsResult build_dfs(Network& net, NodeId root) {
    const PlanarGraph& g = net.graph();
    const Sz n = g.n();
    if (root < 0 || ix(root) >= n) throw Error(Errc::NodeNotInPart, "root " + std::to_string(root) + " out of range");
    int cc = 0;
    components(g, &cc);
    if (cc != 1) throw Error(Errc::Disconnected, "graph has " + std::to_string(cc) + " components");

    DfsResult out;
    out.tree = PartialDfsTree::start(n, root);
    int phase = 0;
    while (out.tree.size() < n) {
        ++phase;
        std::vector<char> free(n, 0);
        for (Sz v = 0; v < n; ++v) free[v] = !out.tree.member[v];
        Partition comps = components_of(g, free);
        PhaseRecord rec;
        rec.phase = phase;
        rec.components = comps.count();
        for (const auto& c : comps.parts) rec.largest = std::max(rec.largest, static_cast<int>(c.size()));
        auto before = out.tree.size();

        auto sep = compute_separators(net, comps);
        out.separator_fallbacks += sep.stats.fallbacks;
        std::vector<std::vector<NodeId>> S;
        S.reserve(sep.witnesses.size());
        for (auto& w : sep.witnesses) S.push_back(std::move(w.S));
        rec.join = join_separators(net, out.tree, comps, S, phase);
        rec.joined = static_cast<int>(out.tree.size() - before);
        out.phases.push_back(std::move(rec));
    }
    return out;
}

int phase_bound(std::size_t n) {
    // Smallest k with 1.5^k >= n, i.e. 3^k >= n * 2^k.
    int k = 0;
    unsigned __int128 a = 1, b = n;
    while (a < b) a *= 3, b *= 2, ++k;
    return k + 1;
}

std::string dfs_to_json(const PartialDfsTree& t) {
    nlohmann::json j;
    j["root"] = t.root;
    j["parent"] = t.parent;
    j["depth"] = t.depth;
    j["phase"] = t.phase;
    return j.dump();
}

PartialDfsTree dfs_from_json(const std::string& text) {
    PartialDfsTree t;
    try {
        auto j = nlohmann::json::parse(text);
        t.root = j.at("root").get<NodeId>();
        t.parent = j.at("parent").get<std::vector<NodeId>>();
        t.depth = j.at("depth").get<std::vector<int>>();
        t.phase = j.at("phase").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::SchemaViolation, std::string("dfs json: ") + e.what());
    }
    if (t.depth.size() != t.parent.size() || t.phase.size() != t.parent.size())
        throw Error(Errc::SchemaViolation, "dfs json: array lengths differ");
    t.member.assign(t.parent.size(), 0);
    for (Sz v = 0; v < t.parent.size(); ++v) t.member[v] = t.depth[v] >= 0;
    return t;
}

}  // namespace plansep
