#include "plansep/primitives.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

namespace plansep {

namespace {

struct Item {
    std::int64_t val = 0;
    NodeId id = kNone;
    bool has = false;
};

enum class Kind { Sum, Min, Max, ExtremeMin, ExtremeMax, FirstId };
enum class Wave { Up, UpDown, Down };

Item combine(Kind k, const Item& a, const Item& b) {
    switch (k) {
        case Kind::Sum: return {a.val + b.val, kNone, true};
        case Kind::Min: return {std::min(a.val, b.val), kNone, true};
        case Kind::Max: return {std::max(a.val, b.val), kNone, true};
        case Kind::ExtremeMin:
        case Kind::ExtremeMax: {
            if (!a.has) return b;
            if (!b.has) return a;
            bool pick_a = k == Kind::ExtremeMin ? (a.val < b.val || (a.val == b.val && a.id < b.id))
                                                : (a.val > b.val || (a.val == b.val && a.id < b.id));
            return pick_a ? a : b;
        }
        case Kind::FirstId:
            if (!a.has) return b;
            if (!b.has) return a;
            return a.id < b.id ? a : b;
    }
    return a;
}

Message encode(Kind k, const Item& x) {
    switch (k) {
        case Kind::Sum:
        case Kind::Min:
        case Kind::Max: return Message{zz(x.val)};
        case Kind::ExtremeMin:
        case Kind::ExtremeMax:
            return x.has ? Message{zz(x.val), static_cast<std::uint64_t>(x.id) + 1} : Message{0, 0};
        case Kind::FirstId: return Message{x.has ? static_cast<std::uint64_t>(x.id) + 1 : 0};
    }
    return {};
}

Item decode(Kind k, const Message& m) {
    switch (k) {
        case Kind::Sum:
        case Kind::Min:
        case Kind::Max: return {unzz(m[0]), kNone, true};
        case Kind::ExtremeMin:
        case Kind::ExtremeMax:
            if (m[1] == 0) return {};
            return {unzz(m[0]), static_cast<NodeId>(m[1] - 1), true};
        case Kind::FirstId:
            if (m[0] == 0) return {};
            return {0, static_cast<NodeId>(m[0] - 1), true};
    }
    return {};
}

Kind kind_of(Fold op) {
    switch (op) {
        case Fold::Min: return Kind::Min;
        case Fold::Max: return Kind::Max;
        case Fold::Sum: return Kind::Sum;
    }
    return Kind::Sum;
}

void check_width(Kind k, const Item& x, int budget) {
    if (k == Kind::Sum && static_cast<int>(std::bit_width(zz(x.val))) > budget)
        throw Error(Errc::OverflowBeyondBudget, "partial sum " + std::to_string(x.val) + " needs more than " +
                                                    std::to_string(budget) + " bits");
}

// Convergecast and/or broadcast over the part trees.
class WaveProgram : public NodeProgram {
public:
    WaveProgram(const Forest& f, Kind k, Wave w, const std::vector<Item>& own, int budget)
        : f_(f), k_(k), w_(w), own_(own), budget_(budget), acc_(f.n()), result_(f.n()),
          pending_(f.n(), 0), waiting_down_(f.n(), 0), kids_(f.n()) {
        for (std::size_t v = 0; v < f.n(); ++v)
            for (NodeId c : f.children[v]) kids_[v].push_back(f.g->index_of(static_cast<NodeId>(v), c));
    }

    Status step(NodeId v, std::int64_t round, Inbox in, Outbox out) override {
        auto V = static_cast<std::size_t>(v);
        if (!f_.member(v)) return Status::Halted;
        auto send_down = [&](const Item& x) {
            for (int p : kids_[V]) out[static_cast<std::size_t>(p)] = encode(k_, x);
        };
        int pp = f_.parent_port[V];
        if (w_ == Wave::Down) {
            if (pp < 0) {
                result_[V] = own_[V];
            } else {
                if (!in[static_cast<std::size_t>(pp)]) return Status::Idle;
                result_[V] = combine(k_, decode(k_, *in[static_cast<std::size_t>(pp)]), own_[V]);
                check_width(k_, result_[V], budget_);
            }
            send_down(result_[V]);
            return Status::Halted;
        }
        if (waiting_down_[V]) {
            if (!in[static_cast<std::size_t>(pp)]) return Status::Idle;
            result_[V] = decode(k_, *in[static_cast<std::size_t>(pp)]);
            send_down(result_[V]);
            return Status::Halted;
        }
        if (round == 1) {
            acc_[V] = own_[V];
            pending_[V] = static_cast<int>(kids_[V].size());
        }
        for (int p : kids_[V])
            if (in[static_cast<std::size_t>(p)]) {
                acc_[V] = combine(k_, acc_[V], decode(k_, *in[static_cast<std::size_t>(p)]));
                check_width(k_, acc_[V], budget_);
                --pending_[V];
            }
        if (pending_[V] > 0) return Status::Idle;
        if (pp < 0) {
            result_[V] = acc_[V];
            if (w_ == Wave::UpDown) send_down(result_[V]);
            return Status::Halted;
        }
        out[static_cast<std::size_t>(pp)] = encode(k_, acc_[V]);
        if (w_ == Wave::Up) {
            result_[V] = acc_[V];
            return Status::Halted;
        }
        waiting_down_[V] = 1;
        return Status::Idle;
    }

    const std::vector<Item>& result() const { return result_; }

private:
    const Forest& f_;
    Kind k_;
    Wave w_;
    const std::vector<Item>& own_;
    int budget_;
    std::vector<Item> acc_, result_;
    std::vector<int> pending_;
    std::vector<char> waiting_down_;
    std::vector<std::vector<int>> kids_;
};

// Sequential equivalent of WaveProgram.
std::vector<Item> fold_direct(const Forest& f, Kind k, Wave w, const std::vector<Item>& own, int budget) {
    std::vector<Item> res(f.n());
    auto order = f.bfs_order();
    if (w == Wave::Down) {
        for (NodeId v : order) {
            auto V = static_cast<std::size_t>(v);
            NodeId p = f.parent[V];
            res[V] = p == kNone ? own[V] : combine(k, res[static_cast<std::size_t>(p)], own[V]);
            check_width(k, res[V], budget);
        }
        return res;
    }
    for (NodeId v : order) res[static_cast<std::size_t>(v)] = own[static_cast<std::size_t>(v)];
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto V = static_cast<std::size_t>(*it);
        NodeId p = f.parent[V];
        if (p != kNone) {
            auto P = static_cast<std::size_t>(p);
            res[P] = combine(k, res[P], res[V]);
            check_width(k, res[P], budget);
        }
    }
    if (w == Wave::UpDown)
        for (NodeId v : order) {
            auto V = static_cast<std::size_t>(v);
            NodeId p = f.parent[V];
            if (p != kNone) res[V] = res[static_cast<std::size_t>(p)];
        }
    return res;
}

std::vector<Item> wave(PartContext& ctx, Kind k, Wave w, const std::vector<Item>& own) {
    int budget = ctx.net.bit_budget();
    if (ctx.net.mode() == Mode::Literal) {
        WaveProgram prog(ctx.forest, k, w, own, budget);
        ctx.net.run(prog);
        return prog.result();
    }
    return fold_direct(ctx.forest, k, w, own, budget);
}

std::vector<Item> lift(const Forest& f, const Values& in) {
    if (in.size() != f.n()) throw Error(Errc::SchemaViolation, "input vector size differs from n");
    std::vector<Item> own(f.n());
    for (std::size_t v = 0; v < f.n(); ++v) own[v] = {in[v], static_cast<NodeId>(v), true};
    return own;
}

Values lower(const Forest& f, const std::vector<Item>& r) {
    Values out(f.n(), 0);
    for (std::size_t v = 0; v < f.n(); ++v)
        if (f.part[v] >= 0) out[v] = r[v].val;
    return out;
}

std::vector<NodeId> per_part_id(const Forest& f, const std::vector<Item>& r) {
    std::vector<NodeId> out(static_cast<std::size_t>(f.parts()), kNone);
    for (int p = 0; p < f.parts(); ++p) {
        const Item& x = r[static_cast<std::size_t>(f.roots[static_cast<std::size_t>(p)])];
        if (x.has) out[static_cast<std::size_t>(p)] = x.id;
    }
    return out;
}

}  // namespace

Values partwise_aggregate(PartContext& ctx, Fold op, const Values& in) {
    ctx.net.invoke("partwise_aggregate");
    return lower(ctx.forest, wave(ctx, kind_of(op), Wave::UpDown, lift(ctx.forest, in)));
}

Values ancestor_sum(PartContext& ctx, Fold op, const Values& in) {
    ctx.net.invoke("ancestor_sum");
    return lower(ctx.forest, wave(ctx, kind_of(op), Wave::Down, lift(ctx.forest, in)));
}

Values descendant_sum(PartContext& ctx, Fold op, const Values& in) {
    ctx.net.invoke("descendant_sum");
    return lower(ctx.forest, wave(ctx, kind_of(op), Wave::Up, lift(ctx.forest, in)));
}

std::vector<NodeId> find_extreme(PartContext& ctx, Extreme which, const Values& in,
                                 const std::vector<char>* eligible) {
    ctx.net.invoke("find_extreme");
    auto own = lift(ctx.forest, in);
    if (eligible)
        for (std::size_t v = 0; v < own.size(); ++v) own[v].has = (*eligible)[v] != 0;
    Kind k = which == Extreme::Min ? Kind::ExtremeMin : Kind::ExtremeMax;
    return per_part_id(ctx.forest, wave(ctx, k, Wave::UpDown, own));
}

std::vector<NodeId> find_in_range(PartContext& ctx, const Values& in, const std::vector<Range>& ranges) {
    ctx.net.invoke("find_in_range");
    const Forest& f = ctx.forest;
    if (ranges.size() != static_cast<std::size_t>(f.parts()))
        throw Error(Errc::SchemaViolation, "one range per part expected");
    auto own = lift(f, in);
    for (std::size_t v = 0; v < f.n(); ++v)
        own[v].has = f.part[v] >= 0 && ranges[static_cast<std::size_t>(f.part[v])].contains(in[v]);
    return per_part_id(f, wave(ctx, Kind::FirstId, Wave::UpDown, own));
}

std::vector<Relation> relation_to(PartContext& ctx, const std::vector<NodeId>& v0) {
    ctx.net.invoke("relation_to");
    const Forest& f = ctx.forest;
    if (v0.size() != static_cast<std::size_t>(f.parts())) throw Error(Errc::SchemaViolation, "one v0 per part expected");
    Values mark(f.n(), 0);
    for (std::size_t p = 0; p < v0.size(); ++p) {
        NodeId x = v0[p];
        if (x == kNone) continue;
        if (f.part[static_cast<std::size_t>(x)] != static_cast<int>(p))
            throw Error(Errc::NodeNotInPart, "v0 " + std::to_string(x) + " is not in part " + std::to_string(p));
        mark[static_cast<std::size_t>(x)] = 1;
    }
    auto above = lower(f, wave(ctx, Kind::Max, Wave::Up, lift(f, mark)));
    auto below = lower(f, wave(ctx, Kind::Max, Wave::Down, lift(f, mark)));
    std::vector<Relation> out(f.n(), Relation::Neither);
    for (std::size_t v = 0; v < f.n(); ++v) {
        if (f.part[v] < 0) continue;
        if (mark[v]) out[v] = Relation::Self;
        else if (above[v]) out[v] = Relation::Ancestor;
        else if (below[v]) out[v] = Relation::Descendant;
    }
    return out;
}

namespace {

class TreeFlood : public NodeProgram {
public:
    TreeFlood(const Forest& f, std::vector<std::optional<Message>>& got) : f_(f), got_(got), ports_(f.n()) {
        for (std::size_t v = 0; v < f.n(); ++v) {
            if (f.part[v] < 0) continue;
            if (f.parent_port[v] >= 0) ports_[v].push_back(f.parent_port[v]);
            for (NodeId c : f.children[v]) ports_[v].push_back(f.g->index_of(static_cast<NodeId>(v), c));
        }
    }
    Status step(NodeId v, std::int64_t round, Inbox in, Outbox out) override {
        auto V = static_cast<std::size_t>(v);
        if (!f_.member(v)) return Status::Halted;
        int from = -1;
        if (round == 1) {
            if (!got_[V]) return Status::Idle;
        } else {
            for (int p : ports_[V])
                if (in[static_cast<std::size_t>(p)]) {
                    got_[V] = *in[static_cast<std::size_t>(p)];
                    from = p;
                    break;
                }
            if (from < 0) return Status::Idle;
        }
        for (int p : ports_[V])
            if (p != from) out[static_cast<std::size_t>(p)] = *got_[V];
        return Status::Halted;
    }

private:
    const Forest& f_;
    std::vector<std::optional<Message>>& got_;
    std::vector<std::vector<int>> ports_;
};

class Exchange : public NodeProgram {
public:
    Exchange(const PlanarGraph& g, const std::vector<std::optional<Message>>& out,
             std::vector<std::optional<Message>>& got)
        : g_(g), out_(out), got_(got) {}
    Status step(NodeId v, std::int64_t round, Inbox in, Outbox out) override {
        std::size_t off = g_.offset(v);
        if (round == 1) {
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = out_[off + i];
            return Status::Idle;
        }
        for (std::size_t i = 0; i < in.size(); ++i)
            if (in[i]) got_[off + i] = in[i];
        return Status::Halted;
    }

private:
    const PlanarGraph& g_;
    const std::vector<std::optional<Message>>& out_;
    std::vector<std::optional<Message>>& got_;
};

}  // namespace

std::vector<std::optional<Message>> broadcast_within_part(PartContext& ctx,
                                                          const std::vector<std::pair<NodeId, Message>>& sources) {
    ctx.net.invoke("broadcast");
    const Forest& f = ctx.forest;
    std::vector<std::optional<Message>> got(f.n());
    std::vector<char> has_source(static_cast<std::size_t>(f.parts()), 0);
    for (const auto& [s, m] : sources) {
        int p = f.part[static_cast<std::size_t>(s)];
        if (p < 0) throw Error(Errc::NodeNotInPart, "source " + std::to_string(s) + " is in no part");
        if (has_source[static_cast<std::size_t>(p)]) throw Error(Errc::MultipleSources, "part " + std::to_string(p));
        has_source[static_cast<std::size_t>(p)] = 1;
        got[static_cast<std::size_t>(s)] = m;
    }
    if (ctx.net.mode() == Mode::Literal) {
        TreeFlood prog(f, got);
        ctx.net.run(prog);
        return got;
    }
    for (const auto& [s, m] : sources) {
        int p = f.part[static_cast<std::size_t>(s)];
        for (std::size_t v = 0; v < f.n(); ++v)
            if (f.part[v] == p) got[v] = m;
    }
    return got;
}

std::vector<std::optional<Message>> neighbor_exchange(Network& net, const std::vector<std::optional<Message>>& out) {
    net.invoke("exchange", false);
    std::vector<std::optional<Message>> got(net.graph().dart_count());
    Exchange prog(net.graph(), out, got);
    net.run(prog);
    return got;
}

std::vector<std::optional<Message>> neighbor_exchange_all(Network& net, const std::vector<std::optional<Message>>& per_node) {
    const PlanarGraph& g = net.graph();
    std::vector<std::optional<Message>> out(g.dart_count());
    for (std::size_t k = 0; k < g.dart_count(); ++k) out[k] = per_node[static_cast<std::size_t>(g.owner(k))];
    return neighbor_exchange(net, out);
}

}  // namespace plansep
