#include "dqc/workload.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dqc/rng.hpp"

namespace dqc {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Mutable edge pool with O(1) uniform pick and O(1) removal (swap-with-last).
class EdgePool {
public:
    explicit EdgePool(const DynamicGraph& g) {
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            for (VertexId v : g.neighbors(u)) {
                if (u < v) push(u, v);
            }
        }
    }

    std::size_t size() const { return edges_.size(); }

    std::pair<VertexId, VertexId> pick(Rng& rng) const { return edges_[rng.bounded(edges_.size())]; }

    bool contains(VertexId u, VertexId v) const { return pos_.count(pair_key(u, v)) != 0; }

    void push(VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        pos_[pair_key(u, v)] = edges_.size();
        edges_.push_back({u, v});
    }

    void remove(VertexId u, VertexId v) {
        auto it = pos_.find(pair_key(u, v));
        const std::size_t i = it->second;
        pos_.erase(it);
        if (i + 1 != edges_.size()) {
            edges_[i] = edges_.back();
            pos_[pair_key(edges_[i].first, edges_[i].second)] = i;
        }
        edges_.pop_back();
    }

private:
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::unordered_map<std::uint64_t, std::size_t> pos_;
};

std::pair<VertexId, VertexId> random_pair(Rng& rng, std::size_t n) {
    const auto u = static_cast<VertexId>(rng.bounded(n));
    auto v = static_cast<VertexId>(rng.bounded(n - 1));
    if (v >= u) ++v;
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

std::vector<std::pair<VertexId, VertexId>> all_non_edges(const EdgePool& pool, std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u + 1 < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (!pool.contains(u, v)) out.push_back({u, v});
        }
    }
    return out;
}

} // namespace

OperationStream gen_random(const DynamicGraph& g, std::size_t q, std::uint64_t seed) {
    OperationStream s;
    s.declared_q = q;
    s.seed = seed;
    s.flavor = "rand";
    const std::size_t n = g.vertex_count();
    if (n < 2) return s;
    const std::size_t total_pairs = n * (n - 1) / 2;

    Rng rng(seed);
    EdgePool pool(g);
    s.ops.reserve(q);
    for (std::size_t i = 0; i < q; ++i) {
        bool insert = rng.coin();
        if (insert && pool.size() == total_pairs) insert = false;
        if (!insert && pool.size() == 0) insert = true;
        if (insert) {
            // Rejection sampling; dense graphs fall back to enumeration so the
            // loop cannot stall.
            std::pair<VertexId, VertexId> e{};
            bool found = false;
            for (int t = 0; t < 64 && !found; ++t) {
                e = random_pair(rng, n);
                found = !pool.contains(e.first, e.second);
            }
            if (!found) {
                auto rest = all_non_edges(pool, n);
                e = rest[rng.bounded(rest.size())];
            }
            pool.push(e.first, e.second);
            s.ops.push_back({OpKind::Insert, e.first, e.second});
        } else {
            auto e = pool.pick(rng);
            pool.remove(e.first, e.second);
            s.ops.push_back({OpKind::Delete, e.first, e.second});
        }
    }
    return s;
}

OperationStream gen_incremental(const DynamicGraph& g, std::size_t q, std::uint64_t seed) {
    OperationStream s;
    s.declared_q = q;
    s.seed = seed;
    s.flavor = "inc";
    const std::size_t n = g.vertex_count();
    if (n < 2) return s;

    Rng rng(seed);
    EdgePool pool(g); // doubles as the "already chosen or present" membership test
    const std::size_t total_pairs = n * (n - 1) / 2;
    const std::size_t avail = total_pairs - pool.size();
    const std::size_t take = std::min(q, avail);
    for (std::size_t i = 0; i < take; ++i) {
        // Sampling without replacement; switch to enumeration once the pool
        // is mostly used up.
        std::pair<VertexId, VertexId> e{};
        bool found = false;
        for (int t = 0; t < 64 && !found; ++t) {
            e = random_pair(rng, n);
            found = !pool.contains(e.first, e.second);
        }
        if (!found) {
            auto rest = all_non_edges(pool, n);
            e = rest[rng.bounded(rest.size())];
        }
        pool.push(e.first, e.second);
        s.ops.push_back({OpKind::Insert, e.first, e.second});
    }
    return s;
}

OperationStream gen_decremental(const DynamicGraph& g, std::size_t q, std::uint64_t seed) {
    OperationStream s;
    s.declared_q = q;
    s.seed = seed;
    s.flavor = "del";

    Rng rng(seed);
    EdgePool pool(g);
    const std::size_t take = std::min(q, pool.size());
    for (std::size_t i = 0; i < take; ++i) {
        auto e = pool.pick(rng);
        pool.remove(e.first, e.second);
        s.ops.push_back({OpKind::Delete, e.first, e.second});
    }
    return s;
}

TemporalWorkload from_temporal(const std::vector<TemporalEvent>& events, std::size_t n, std::size_t q,
                               std::uint64_t seed, bool draw_missing_ends, double gamma, GammaRule rule) {
    Rng rng(seed);
    std::int64_t horizon = 0;
    for (const auto& e : events) {
        horizon = std::max(horizon, e.start);
        if (e.end) horizon = std::max(horizon, *e.end);
    }

    struct Point {
        std::int64_t time;
        std::size_t order; // input position, breaks time ties
        bool arrive;
        VertexId u, v;
    };
    std::vector<Point> points;
    points.reserve(events.size() * 2);
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& e = events[i];
        points.push_back({e.start, i, true, e.u, e.v});
        std::optional<std::int64_t> end = e.end;
        if (!end && draw_missing_ends) {
            const std::int64_t span = horizon - e.start;
            end = e.start + (span >= 1 ? rng.range(1, span) : 1);
        }
        if (end && draw_missing_ends) {
            points.push_back({*end, i, false, e.u, e.v});
        } else if (end && !draw_missing_ends) {
            // insert-only flavor: ends dropped entirely
        }
    }
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
        if (a.time != b.time) return a.time < b.time;
        if (a.order != b.order) return a.order < b.order;
        return a.arrive && !b.arrive; // arrival precedes its own departure at equal times
    });

    // Live-interval counting per pair coalesces overlapping windows into a
    // valid insert/delete alternation.
    std::unordered_map<std::uint64_t, std::size_t> live;
    DynamicGraph initial(n, gamma, rule);
    OperationStream s;
    s.declared_q = q;
    s.seed = seed;
    s.flavor = draw_missing_ends ? "temp" : "tinc";
    for (const auto& p : points) {
        if (p.u == p.v) continue;
        const std::uint64_t key = pair_key(p.u, p.v);
        if (p.arrive) {
            if (++live[key] == 1) {
                if (p.time <= 0) {
                    initial.insert_edge(p.u, p.v);
                } else if (s.ops.size() < q) {
                    s.ops.push_back({OpKind::Insert, p.u, p.v});
                }
            }
        } else {
            auto it = live.find(key);
            if (it == live.end() || it->second == 0) continue;
            if (--it->second == 0) {
                if (p.time <= 0) {
                    initial.delete_edge(p.u, p.v);
                } else if (s.ops.size() < q) {
                    s.ops.push_back({OpKind::Delete, p.u, p.v});
                }
            }
        }
    }
    initial.gamma_degree_init();
    return {std::move(initial), std::move(s)};
}

std::string serialize_stream(const OperationStream& s) {
    std::ostringstream out;
    out << "%q " << s.ops.size() << " %seed " << s.seed << " %flavor " << s.flavor << "\n";
    for (const auto& op : s.ops) {
        out << static_cast<char>(op.kind) << ' ' << op.u << ' ' << op.v << "\n";
    }
    return out.str();
}

OperationStream parse_stream(std::istream& in) {
    OperationStream s;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        if (line[i] == '%') {
            if (!header_seen && line.compare(i, 2, "%q") == 0) {
                std::istringstream hs(line.substr(i));
                std::string tag;
                while (hs >> tag) {
                    if (tag == "%q") hs >> s.declared_q;
                    else if (tag == "%seed") hs >> s.seed;
                    else if (tag == "%flavor") hs >> s.flavor;
                }
                header_seen = true;
            }
            continue;
        }
        std::istringstream ls(line);
        char kind = 0;
        std::uint64_t u = 0, v = 0;
        if (!(ls >> kind >> u >> v) || (kind != '+' && kind != '-')) {
            throw std::runtime_error("malformed stream line " + std::to_string(lineno));
        }
        s.ops.push_back({kind == '+' ? OpKind::Insert : OpKind::Delete, static_cast<VertexId>(u),
                         static_cast<VertexId>(v)});
        s.lines.push_back(lineno);
    }
    return s;
}

OperationStream load_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stream file: " + path);
    return parse_stream(in);
}

void save_stream(const OperationStream& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write stream file: " + path);
    out << serialize_stream(s);
}

std::optional<std::size_t> first_replay_collision(const OperationStream& s, DynamicGraph g) {
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        const auto& op = s.ops[i];
        const bool ok = op.kind == OpKind::Insert ? g.insert_edge(op.u, op.v) : g.delete_edge(op.u, op.v);
        if (!ok) return i;
    }
    return std::nullopt;
}

LoadedGraph load_edge_list(const std::string& path, double gamma, GammaRule rule) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::size_t skipped = 0, self_loops = 0;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#' || line[i] == '%') continue;
        std::istringstream ls(line);
        std::uint64_t a = 0, b = 0;
        if (!(ls >> a >> b)) {
            ++skipped;
            continue;
        }
        if (a == b) {
            ++self_loops;
            continue;
        }
        raw.push_back({a, b});
    }

    std::unordered_map<std::uint64_t, VertexId> id_map;
    std::vector<std::uint64_t> original;
    auto dense = [&](std::uint64_t orig) {
        auto [it, fresh] = id_map.try_emplace(orig, static_cast<VertexId>(original.size()));
        if (fresh) original.push_back(orig);
        return it->second;
    };
    for (auto& [a, b] : raw) {
        dense(a);
        dense(b);
    }

    DynamicGraph g(original.size(), gamma, rule);
    std::size_t duplicates = 0;
    for (auto& [a, b] : raw) {
        if (!g.insert_edge(id_map[a], id_map[b])) ++duplicates;
    }
    g.gamma_degree_init();
    return {std::move(g), std::move(original), std::move(id_map), skipped, self_loops, duplicates};
}

LoadedTemporal load_temporal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open temporal edge list: " + path);

    LoadedTemporal out;
    std::unordered_map<std::uint64_t, VertexId> id_map;
    auto dense = [&](std::uint64_t orig) {
        auto [it, fresh] = id_map.try_emplace(orig, static_cast<VertexId>(out.original_id.size()));
        if (fresh) out.original_id.push_back(orig);
        return it->second;
    };

    std::string line;
    while (std::getline(in, line)) {
        const std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#' || line[i] == '%') continue;
        std::istringstream ls(line);
        std::uint64_t a = 0, b = 0;
        std::int64_t start = 0, end = 0;
        if (!(ls >> a >> b >> start)) {
            ++out.skipped_lines;
            continue;
        }
        if (a == b) {
            ++out.skipped_lines;
            continue;
        }
        TemporalEvent ev{dense(a), dense(b), start, std::nullopt};
        if (ls >> end) ev.end = end;
        out.events.push_back(ev);
    }
    out.vertex_count = out.original_id.size();
    return out;
}

} // namespace dqc
