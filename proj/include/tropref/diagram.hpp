#pragma once

// Floor diagrams: weighted acyclic graphs whose vertices (floors) carry one left and
// one right slope, together with their multiplicities and marking counts.

#include "tropref/integer.hpp"
#include "tropref/polygon.hpp"
#include "tropref/series.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tropref {

struct Edge {
    long src = 0;
    long dst = 0;
    long weight = 1;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class FloorDiagram {
public:
    struct Unchecked {};

    /// Floors are numbered 0..a-1. `sources[v]` / `sinks[v]` count the ends attached to floor v.
    FloorDiagram(std::shared_ptr<const SurfaceClass> cls, std::vector<long> left, std::vector<long> right,
                 std::vector<Edge> edges, std::vector<long> sources, std::vector<long> sinks)
        : FloorDiagram(Unchecked{}, std::move(cls), std::move(left), std::move(right), std::move(edges),
                       std::move(sources), std::move(sinks)) {
        validate();
    }

    FloorDiagram(Unchecked, std::shared_ptr<const SurfaceClass> cls, std::vector<long> left, std::vector<long> right,
                 std::vector<Edge> edges, std::vector<long> sources, std::vector<long> sinks)
        : cls_(std::move(cls)),
          left_(std::move(left)),
          right_(std::move(right)),
          edges_(std::move(edges)),
          sources_(std::move(sources)),
          sinks_(std::move(sinks)) {
        std::sort(edges_.begin(), edges_.end());
    }

    const SurfaceClass& surface() const { return *cls_; }
    const std::shared_ptr<const SurfaceClass>& surface_ptr() const { return cls_; }
    long floor_count() const { return static_cast<long>(left_.size()); }
    long left(long v) const { return left_.at(static_cast<std::size_t>(v)); }
    long right(long v) const { return right_.at(static_cast<std::size_t>(v)); }
    const std::vector<long>& lefts() const { return left_; }
    const std::vector<long>& rights() const { return right_; }
    const std::vector<Edge>& edges() const { return edges_; }
    long sources(long v) const { return sources_.at(static_cast<std::size_t>(v)); }
    long sinks(long v) const { return sinks_.at(static_cast<std::size_t>(v)); }
    const std::vector<long>& source_counts() const { return sources_; }
    const std::vector<long>& sink_counts() const { return sinks_; }

    long divergence(long v) const {
        long d = sources(v) - sinks(v);
        for (const Edge& e : edges_) {
            if (e.dst == v) d += e.weight;
            if (e.src == v) d -= e.weight;
        }
        return d;
    }

    /// Throws std::invalid_argument describing the first violated condition.
    void validate() const {
        const SurfaceClass& s = *cls_;
        const long a = s.a;
        auto fail = [](const std::string& m) { throw std::invalid_argument("invalid floor diagram: " + m); };
        if (floor_count() != a || static_cast<long>(right_.size()) != a) fail("wrong number of floors");
        if (static_cast<long>(sources_.size()) != a || static_cast<long>(sinks_.size()) != a)
            fail("end counts must be given per floor");
        auto sorted = [](std::vector<long> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(left_) != s.b_left) fail("left slopes are not a permutation of the class multiset");
        if (sorted(right_) != s.b_right) fail("right slopes are not a permutation of the class multiset");
        long ns = 0, nt = 0;
        for (long v = 0; v < a; ++v) {
            if (sources(v) < 0 || sinks(v) < 0) fail("negative end count");
            ns += sources(v);
            nt += sinks(v);
        }
        if (ns != s.b_bot) fail("number of sources differs from the bottom side length");
        if (nt != s.b_top) fail("number of sinks differs from the top side length");
        for (const Edge& e : edges_) {
            if (e.src < 0 || e.src >= a || e.dst < 0 || e.dst >= a) fail("edge endpoint out of range");
            if (e.src == e.dst) fail("loop edge");
            if (e.weight < 1) fail("edge weight must be positive");
        }
        if (topological_order().size() != static_cast<std::size_t>(a)) fail("graph has an oriented cycle");
        if (!is_connected()) fail("graph is disconnected");
        for (long v = 0; v < a; ++v)
            if (divergence(v) != left(v) + right(v))
                fail("divergence of floor " + std::to_string(v + 1) + " is " + std::to_string(divergence(v)) +
                     ", expected " + std::to_string(left(v) + right(v)));
    }

    /// Some topological order of the floors; shorter than a if there is a cycle.
    std::vector<long> topological_order() const {
        const long a = floor_count();
        std::vector<long> indeg(static_cast<std::size_t>(a), 0), order;
        for (const Edge& e : edges_) ++indeg[static_cast<std::size_t>(e.dst)];
        std::vector<long> ready;
        for (long v = a - 1; v >= 0; --v)
            if (indeg[v] == 0) ready.push_back(v);
        while (!ready.empty()) {
            long v = ready.back();
            ready.pop_back();
            order.push_back(v);
            for (const Edge& e : edges_)
                if (e.src == v && --indeg[static_cast<std::size_t>(e.dst)] == 0) ready.push_back(e.dst);
        }
        return order;
    }

    bool is_connected() const {
        const long a = floor_count();
        std::vector<long> parent(static_cast<std::size_t>(a));
        std::iota(parent.begin(), parent.end(), 0L);
        auto find = [&](long x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        long comps = a;
        for (const Edge& e : edges_) {
            long r1 = find(e.src), r2 = find(e.dst);
            if (r1 != r2) {
                parent[r1] = r2;
                --comps;
            }
        }
        return comps == 1;
    }

private:
    std::shared_ptr<const SurfaceClass> cls_;
    std::vector<long> left_, right_;
    std::vector<Edge> edges_;
    std::vector<long> sources_, sinks_;
};

inline long genus(const FloorDiagram& d) {
    return static_cast<long>(d.edges().size()) - d.floor_count() + 1;
}

/// Twice the degree of the cleared multiplicity.
inline long degree2(const FloorDiagram& d) {
    long s = d.surface().b_top + d.surface().b_bot;
    for (const Edge& e : d.edges()) s += 2 * e.weight;
    return s;
}

inline long codegree(const FloorDiagram& d) {
    long diff = lattice_invariants(d.surface()).area2 - degree2(d);
    return diff / 2;
}

/// Product of squared quantum integers of the edge weights.
inline SymLaurent bg_multiplicity(const FloorDiagram& d) {
    SymLaurent m = SymLaurent::constant(1);
    for (const Edge& e : d.edges()) m *= quantum_integer(e.weight).pow(2);
    return m;
}

/// Multiplicity with denominators cleared: one factor (q^{1/2}-q^{-1/2}) per end and two per bounded edge.
inline SymLaurent cleared_multiplicity(const FloorDiagram& d) {
    SymLaurent m = half_difference(1).pow(static_cast<unsigned long>(d.surface().b_top + d.surface().b_bot));
    for (const Edge& e : d.edges()) m *= half_difference(e.weight).pow(2);
    return m;
}

/// x^codeg (1+x)^s (1-x)^{ends-s} prod_e (1-x^w)^2, truncated at x^order.
inline TruncSeries x_multiplicity(const FloorDiagram& d, long order, long s = 0) {
    const long ends = d.surface().b_top + d.surface().b_bot;
    if (s < 0 || s > ends) throw std::invalid_argument("pair count s out of range");
    long c = codegree(d);
    TruncSeries r = TruncSeries::monomial(c, order);
    if (c > order) return r;
    TruncSeries one_minus_x = TruncSeries::one(order) - TruncSeries::monomial(1, order);
    TruncSeries one_plus_x = TruncSeries::one(order) + TruncSeries::monomial(1, order);
    r = r * one_minus_x.pow(ends - s) * one_plus_x.pow(s);
    for (const Edge& e : d.edges()) {
        TruncSeries f = TruncSeries::one(order) - TruncSeries::monomial(e.weight, order);
        r = r * f * f;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Canonical labelling and automorphisms

struct CanonicalForm {
    std::vector<long> encoding;  ///< minimal encoding over all topological relabellings
    long optimal_orders = 0;     ///< number of relabellings attaining it (floor automorphisms)
};

namespace detail {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const FloorDiagram& d) : d_(d), a_(d.floor_count()) {
        in_.resize(static_cast<std::size_t>(a_));
        out_.resize(static_cast<std::size_t>(a_));
        for (const Edge& e : d.edges()) {
            in_[e.dst].push_back(e);
            out_[e.src].push_back(e.dst);
        }
        pos_.assign(static_cast<std::size_t>(a_), -1);
        indeg_.assign(static_cast<std::size_t>(a_), 0);
        for (const Edge& e : d.edges()) ++indeg_[e.dst];
    }

    CanonicalForm run() {
        blocks_.clear();
        dfs(0);
        CanonicalForm f;
        for (const auto& b : best_) f.encoding.insert(f.encoding.end(), b.begin(), b.end());
        f.optimal_orders = count_;
        return f;
    }

    /// Encoding of the diagram under its own labelling (requires edges to go upward).
    static std::vector<long> identity_encoding(const FloorDiagram& d) {
        std::vector<long> enc;
        const long a = d.floor_count();
        std::vector<std::vector<std::pair<long, long>>> in(static_cast<std::size_t>(a));
        for (const Edge& e : d.edges()) in[e.dst].emplace_back(e.src, e.weight);
        for (long v = 0; v < a; ++v) {
            std::sort(in[v].begin(), in[v].end());
            enc.insert(enc.end(), {d.left(v), d.right(v), d.sources(v), d.sinks(v), static_cast<long>(in[v].size())});
            for (auto [p, w] : in[v]) enc.insert(enc.end(), {p, w});
        }
        return enc;
    }

private:
    std::vector<long> block(long v) const {
        std::vector<std::pair<long, long>> in;
        for (const Edge& e : in_[v]) in.emplace_back(pos_[e.src], e.weight);
        std::sort(in.begin(), in.end());
        std::vector<long> b{d_.left(v), d_.right(v), d_.sources(v), d_.sinks(v), static_cast<long>(in.size())};
        for (auto [p, w] : in) b.insert(b.end(), {p, w});
        return b;
    }

    bool prefix_matches_best(long depth) const {
        return std::equal(blocks_.begin(), blocks_.begin() + depth, best_.begin());
    }

    void dfs(long depth) {
        if (depth == a_) {
            if (best_.empty() || blocks_ < best_) {
                best_ = blocks_;
                count_ = 1;
            } else if (blocks_ == best_) {
                ++count_;
            }
            return;
        }
        for (long v = 0; v < a_; ++v) {
            if (pos_[v] >= 0 || indeg_[v] != 0) continue;
            pos_[v] = depth;
            std::vector<long> b = block(v);
            if (!best_.empty() && prefix_matches_best(depth) && b > best_[depth]) {
                pos_[v] = -1;
                continue;
            }
            blocks_.push_back(std::move(b));
            for (long w : out_[v]) --indeg_[w];
            dfs(depth + 1);
            for (long w : out_[v]) ++indeg_[w];
            blocks_.pop_back();
            pos_[v] = -1;
        }
    }

    const FloorDiagram& d_;
    long a_;
    std::vector<std::vector<Edge>> in_;
    std::vector<std::vector<long>> out_;
    std::vector<long> pos_, indeg_;
    std::vector<std::vector<long>> blocks_, best_;
    long count_ = 0;
};

}  // namespace detail

inline CanonicalForm canonical_form(const FloorDiagram& d) { return detail::CanonicalSearch(d).run(); }

/// True when the labelling (0..a-1, edges upward) is the canonical representative of its class.
inline bool is_canonical_labelling(const FloorDiagram& d) {
    return detail::CanonicalSearch::identity_encoding(d) == canonical_form(d).encoding;
}

/// Order of the automorphism group of the diagram (floors, parallel edges and ends).
inline Integer automorphism_count(const FloorDiagram& d) {
    Integer aut = canonical_form(d).optimal_orders;
    std::map<Edge, long> groups;
    for (const Edge& e : d.edges()) ++groups[e];
    for (const auto& [e, m] : groups) aut *= factorial(m);
    for (long v = 0; v < d.floor_count(); ++v) aut *= factorial(d.sources(v)) * factorial(d.sinks(v));
    return aut;
}

// ---------------------------------------------------------------------------
// Linear extensions of the poset on floors, edges and ends

enum class ElementKind { Floor, Edge, Source, Sink };

/// A class of interchangeable poset elements: ends at one floor, or all edges between two floors.
struct TwinClass {
    ElementKind kind;
    long floor = -1;  ///< for Floor/Source/Sink
    long src = -1, dst = -1;  ///< for Edge
    long size = 0;
    std::vector<std::size_t> preds;
};

inline std::vector<TwinClass> twin_classes(const FloorDiagram& d) {
    std::vector<TwinClass> cls;
    const long a = d.floor_count();
    std::vector<std::size_t> floor_idx(static_cast<std::size_t>(a));
    for (long v = 0; v < a; ++v) {
        floor_idx[v] = cls.size();
        cls.push_back({ElementKind::Floor, v, -1, -1, 1, {}});
    }
    std::map<std::pair<long, long>, long> pair_count;
    for (const Edge& e : d.edges()) ++pair_count[{e.src, e.dst}];
    for (const auto& [p, m] : pair_count) {
        std::size_t id = cls.size();
        cls.push_back({ElementKind::Edge, -1, p.first, p.second, m, {floor_idx[p.first]}});
        cls[floor_idx[p.second]].preds.push_back(id);
    }
    for (long v = 0; v < a; ++v) {
        if (d.sources(v) > 0) {
            cls[floor_idx[v]].preds.push_back(cls.size());
            cls.push_back({ElementKind::Source, v, -1, -1, d.sources(v), {}});
        }
        if (d.sinks(v) > 0) cls.push_back({ElementKind::Sink, v, -1, -1, d.sinks(v), {floor_idx[v]}});
    }
    return cls;
}

namespace detail {

using StateKey = unsigned __int128;

struct StateHash {
    std::size_t operator()(StateKey k) const {
        auto lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
        return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

/// Counts sequences of twin classes forming a linear extension; the first `pairs`
/// consecutive pairs must satisfy `pair_ok`.
template <class PairOk>
Integer count_class_sequences(const std::vector<TwinClass>& cls, long pairs, PairOk pair_ok) {
    const std::size_t n = cls.size();
    std::vector<StateKey> stride(n);
    StateKey total = 1;
    long elements = 0;
    for (std::size_t i = 0; i < n; ++i) {
        stride[i] = total;
        StateKey radix = static_cast<StateKey>(cls[i].size + 1);
        if (total > (~StateKey(0)) / radix) throw std::length_error("poset too large for exact marking count");
        total *= radix;
        elements += cls[i].size;
    }
    if (2 * pairs > elements) return 0;

    auto count_of = [&](StateKey k, std::size_t i) {
        return static_cast<long>((k / stride[i]) % static_cast<StateKey>(cls[i].size + 1));
    };
    auto addable = [&](StateKey k, std::size_t i) {
        if (count_of(k, i) >= cls[i].size) return false;
        for (std::size_t p : cls[i].preds)
            if (count_of(k, p) != cls[p].size) return false;
        return true;
    };

    std::unordered_map<StateKey, Integer, StateHash> layer{{StateKey(0), Integer(1)}}, next;
    long placed = 0;
    for (long step = 0; step < pairs; ++step) {
        next.clear();
        for (const auto& [k, c] : layer)
            for (std::size_t i = 0; i < n; ++i) {
                if (!addable(k, i)) continue;
                StateKey k1 = k + stride[i];
                for (std::size_t j = 0; j < n; ++j)
                    if (addable(k1, j) && pair_ok(cls[i], cls[j])) next[k1 + stride[j]] += c;
            }
        layer.swap(next);
        placed += 2;
    }
    for (; placed < elements; ++placed) {
        next.clear();
        for (const auto& [k, c] : layer)
            for (std::size_t i = 0; i < n; ++i)
                if (addable(k, i)) next[k + stride[i]] += c;
        layer.swap(next);
    }
    Integer sum = 0;
    for (const auto& [k, c] : layer) sum += c;
    return sum;
}

inline Integer labelled_factor(const std::vector<TwinClass>& cls) {
    Integer f = 1;
    for (const auto& c : cls) f *= factorial(c.size);
    return f;
}

}  // namespace detail

/// Number of linear extensions of the poset with every element distinguished.
inline Integer linear_extension_count(const FloorDiagram& d) {
    auto cls = twin_classes(d);
    return detail::count_class_sequences(cls, 0, [](const TwinClass&, const TwinClass&) { return true; }) *
           detail::labelled_factor(cls);
}

/// Two poset elements may share a pair of an s-compatible marking: an edge or end together
/// with a floor it is attached to, or two edges/ends entering (or leaving) the same floor.
inline bool compatible_pair(const TwinClass& x, const TwinClass& y) {
    auto enters = [](const TwinClass& c, long v) {
        return (c.kind == ElementKind::Edge && c.dst == v) || (c.kind == ElementKind::Source && c.floor == v);
    };
    auto leaves = [](const TwinClass& c, long v) {
        return (c.kind == ElementKind::Edge && c.src == v) || (c.kind == ElementKind::Sink && c.floor == v);
    };
    if (x.kind == ElementKind::Floor && y.kind == ElementKind::Floor) return false;
    if (x.kind == ElementKind::Floor || y.kind == ElementKind::Floor) {
        const TwinClass& f = x.kind == ElementKind::Floor ? x : y;
        const TwinClass& e = x.kind == ElementKind::Floor ? y : x;
        return enters(e, f.floor) || leaves(e, f.floor);
    }
    auto endpoints = [](const TwinClass& c) {
        if (c.kind == ElementKind::Edge) return std::pair{c.src, c.dst};
        if (c.kind == ElementKind::Source) return std::pair{-1L, c.floor};
        return std::pair{c.floor, -1L};
    };
    auto [xs, xd] = endpoints(x);
    auto [ys, yd] = endpoints(y);
    return (xd >= 0 && xd == yd) || (xs >= 0 && xs == ys);
}

/// Number of markings up to isomorphism.
inline Integer count_markings(const FloorDiagram& d) {
    Integer ext = linear_extension_count(d), aut = automorphism_count(d);
    if (ext % aut != 0) throw std::logic_error("automorphism group does not divide linear extensions");
    return ext / aut;
}

/// Number of s-compatible markings up to isomorphism.
inline Integer count_s_markings(const FloorDiagram& d, long s) {
    if (s < 0) throw std::invalid_argument("negative pair count");
    if (s == 0) return count_markings(d);
    auto cls = twin_classes(d);
    Integer ext = detail::count_class_sequences(cls, s, compatible_pair) * detail::labelled_factor(cls);
    Integer aut = automorphism_count(d);
    if (ext % aut != 0) throw std::logic_error("automorphism group does not divide s-compatible extensions");
    return ext / aut;
}

}  // namespace tropref
