#pragma once

// Enumeration of floor diagrams of a given class and genus, optionally restricted
// to codegree at most a budget. Each isomorphism class is produced exactly once,
// labelled by its canonical topological order.

#include "tropref/diagram.hpp"
#include "tropref/polygon.hpp"
#include "tropref/series.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace tropref {

/// Raised when a full enumeration is requested for a class above the size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    std::optional<long> codeg_budget;  ///< unset: all diagrams
    unsigned threads = 1;
    long area2_cap = 30;  ///< largest twice-area allowed for a full enumeration
};

namespace detail {

/// Arrangements of a sorted multiset along floors 0..a-1 with inversion cost at most `budget`.
inline std::vector<std::pair<std::vector<long>, long>> arrangements(const std::vector<long>& sorted, long budget) {
    std::vector<long> values, counts;
    for (long v : sorted) {
        if (values.empty() || values.back() != v) {
            values.push_back(v);
            counts.push_back(0);
        }
        ++counts.back();
    }
    std::vector<std::pair<std::vector<long>, long>> out;
    std::vector<long> seq;
    std::function<void(long)> rec = [&](long cost) {
        if (seq.size() == sorted.size()) {
            out.emplace_back(seq, cost);
            return;
        }
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (counts[i] == 0) continue;
            long add = 0;
            for (long y : seq)
                if (y > values[i]) add += y - values[i];
            if (cost + add > budget) continue;
            --counts[i];
            seq.push_back(values[i]);
            rec(cost + add);
            seq.pop_back();
            ++counts[i];
        }
    };
    rec(0);
    return out;
}

/// Distributions of `total` ends over floors 0..a-1 where an end on floor v costs cost_of(v).
template <class CostOf>
std::vector<std::pair<std::vector<long>, long>> end_distributions(long a, long total, long budget, CostOf cost_of) {
    std::vector<std::pair<std::vector<long>, long>> out;
    std::vector<long> cnt(static_cast<std::size_t>(a), 0);
    std::function<void(long, long, long)> rec = [&](long v, long left, long cost) {
        if (v == a - 1) {
            long c = cost + left * cost_of(v);
            if (c <= budget) {
                cnt[v] = left;
                out.emplace_back(cnt, c);
                cnt[v] = 0;
            }
            return;
        }
        for (long k = left; k >= 0; --k) {
            long c = cost + k * cost_of(v);
            if (c > budget) continue;
            cnt[v] = k;
            rec(v + 1, left - k, c);
        }
        cnt[v] = 0;
    };
    if (a == 1) {
        cnt[0] = total;
        out.emplace_back(cnt, total * cost_of(0));
        if (out.back().second > budget) out.clear();
        return out;
    }
    rec(0, total, 0);
    return out;
}

class DiagramGenerator {
public:
    using Visit = std::function<void(const FloorDiagram&)>;

    DiagramGenerator(std::shared_ptr<const SurfaceClass> cls, long g, long budget)
        : cls_(std::move(cls)), a_(cls_->a), genus_(g), max_edges_(cls_->a - 1 + g), budget_(budget) {}

    /// Everything below a fixed left arrangement.
    void run(const std::vector<long>& left, long cost, const Visit& visit) {
        if (max_edges_ < a_ - 1) return;
        left_ = left;
        visit_ = &visit;
        for (auto& [right, rc] : arrangements(cls_->b_right, budget_ - cost)) {
            right_ = right;
            long c1 = cost + rc;
            for (auto& [src, sc] : end_distributions(a_, cls_->b_bot, budget_ - c1, [](long v) { return v; })) {
                long c2 = c1 + sc;
                for (auto& [snk, tc] :
                     end_distributions(a_, cls_->b_top, budget_ - c2, [&](long v) { return a_ - 1 - v; })) {
                    src_ = src;
                    snk_ = snk;
                    if (!compute_cuts()) continue;
                    edges_.clear();
                    open_.clear();
                    floor_step(0, c2 + tc);
                }
            }
        }
    }

private:
    struct Group {
        long start, weight, mult;
    };

    bool compute_cuts() {
        cut_.assign(static_cast<std::size_t>(a_), 0);
        long x = 0;
        for (long v = 0; v < a_; ++v) {
            x += src_[v] - snk_[v] - left_[v] - right_[v];
            cut_[v] = x;
            if (v + 1 < a_ && x < 1) return false;
        }
        return x == 0;
    }

    void floor_step(long m, long cost) {
        if (m == a_) {
            finish();
            return;
        }
        close_groups(m, 0, cost);
    }

    // Decide how many edges of open group gi end at floor m; the rest pass over it.
    void close_groups(long m, std::size_t gi, long cost) {
        if (gi == open_.size()) {
            after_closing(m, cost);
            return;
        }
        const Group grp = open_[gi];
        const long lo = (m == a_ - 1) ? grp.mult : 0;
        for (long k = grp.mult; k >= lo; --k) {
            long pass_cost = (grp.mult - k) * grp.weight;
            if (cost + pass_cost > budget_) continue;
            for (long i = 0; i < k; ++i) edges_.push_back({grp.start, m, grp.weight});
            open_[gi].mult = grp.mult - k;
            close_groups(m, gi + 1, cost + pass_cost);
            open_[gi].mult = grp.mult;
            edges_.resize(edges_.size() - static_cast<std::size_t>(k));
        }
    }

    void after_closing(long m, long cost) {
        long w_rem = 0, n_open = 0;
        for (const Group& grp : open_) {
            w_rem += grp.mult * grp.weight;
            n_open += grp.mult;
        }
        if (m == a_ - 1) {
            floor_step(m + 1, cost);
            return;
        }
        long need = cut_[m] - w_rem;
        if (need < 0) return;
        long cycles = closed_cycles(m);
        if (cycles > genus_) return;
        long room = max_edges_ - static_cast<long>(edges_.size()) - n_open;
        if (room < 0) return;
        // Beyond the first, each new edge either closes a cycle or skips a floor.
        room = std::min(room, 1 + (genus_ - cycles) + (budget_ - cost));
        // Drop exhausted groups while the new edges of this floor are chosen.
        std::vector<Group> saved = open_;
        std::vector<Group> kept;
        for (const Group& grp : open_)
            if (grp.mult > 0) kept.push_back(grp);
        open_ = kept;
        std::vector<long> parts;
        partitions(m, need, need, room, parts, cost);
        open_ = saved;
    }

    // Independent cycles formed by the edges already closed among floors 0..m.
    long closed_cycles(long m) const {
        std::vector<long> parent(static_cast<std::size_t>(m + 1));
        std::iota(parent.begin(), parent.end(), 0L);
        auto find = [&](long x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        long cycles = 0;
        for (const Edge& e : edges_) {
            long r1 = find(e.src), r2 = find(e.dst);
            if (r1 == r2) ++cycles;
            else parent[r1] = r2;
        }
        return cycles;
    }

    void partitions(long m, long remaining, long max_part, long room, std::vector<long>& parts, long cost) {
        if (remaining == 0) {
            std::size_t base = open_.size();
            for (std::size_t i = 0; i < parts.size();) {
                std::size_t j = i;
                while (j < parts.size() && parts[j] == parts[i]) ++j;
                open_.push_back({m, parts[i], static_cast<long>(j - i)});
                i = j;
            }
            floor_step(m + 1, cost);
            open_.resize(base);
            return;
        }
        if (room == 0) return;
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            partitions(m, remaining - p, p, room - 1, parts, cost);
            parts.pop_back();
        }
    }

    void finish() {
        if (static_cast<long>(edges_.size()) != max_edges_) return;
        FloorDiagram d(FloorDiagram::Unchecked{}, cls_, left_, right_, edges_, src_, snk_);
        if (!d.is_connected()) return;
        if (!is_canonical_labelling(d)) return;
        (*visit_)(d);
    }

    std::shared_ptr<const SurfaceClass> cls_;
    long a_, genus_, max_edges_, budget_;
    const Visit* visit_ = nullptr;
    std::vector<long> left_, right_, src_, snk_, cut_;
    std::vector<Edge> edges_;
    std::vector<Group> open_;
};

inline long full_budget(const SurfaceClass& s) {
    long sum = 0;
    for (long w : slice_widths(s)) sum += w;
    return sum;
}

inline long effective_budget(const SurfaceClass& s, const EnumerationOptions& opt) {
    if (opt.codeg_budget) return *opt.codeg_budget;
    long area2 = lattice_invariants(s).area2;
    if (area2 > opt.area2_cap)
        throw CapExceeded("full enumeration needs twice-area " + std::to_string(area2) + " above the cap " +
                          std::to_string(opt.area2_cap) + "; pass a codegree budget or raise the cap");
    return full_budget(s);
}

/// Runs one accumulator per top-level task (left arrangement) on a pool of threads;
/// the returned accumulators are in task order, so merging them is deterministic.
template <class Acc, class Fn>
std::vector<Acc> run_parallel(std::size_t tasks, unsigned threads, Fn fn) {
    std::vector<Acc> out(tasks);
    if (threads <= 1 || tasks <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) fn(i, out[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, tasks); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < tasks;) {
                try {
                    fn(i, out[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace detail

/// Calls `visit` once per isomorphism class of genus-g diagrams of codegree <= budget, sequentially.
inline void for_each_diagram(const SurfaceClass& s, long g, const EnumerationOptions& opt,
                             const std::function<void(const FloorDiagram&)>& visit) {
    long budget = detail::effective_budget(s, opt);
    if (g < 0 || budget < 0) return;
    auto cls = std::make_shared<const SurfaceClass>(s);
    detail::DiagramGenerator gen(cls, g, budget);
    for (auto& [left, cost] : detail::arrangements(s.b_left, budget)) gen.run(left, cost, visit);
}

/// All genus-g diagrams (codegree <= budget when set), in a deterministic order.
inline std::vector<FloorDiagram> enumerate_diagrams(const SurfaceClass& s, long g,
                                                    const EnumerationOptions& opt = {}) {
    long budget = detail::effective_budget(s, opt);
    if (g < 0 || budget < 0) return {};
    auto cls = std::make_shared<const SurfaceClass>(s);
    auto lefts = detail::arrangements(s.b_left, budget);
    auto parts = detail::run_parallel<std::vector<FloorDiagram>>(
        lefts.size(), opt.threads, [&](std::size_t i, std::vector<FloorDiagram>& acc) {
            detail::DiagramGenerator gen(cls, g, budget);
            gen.run(lefts[i].first, lefts[i].second, [&](const FloorDiagram& d) { acc.push_back(d); });
        });
    std::vector<FloorDiagram> all;
    for (auto& p : parts)
        for (auto& d : p) all.push_back(std::move(d));
    return all;
}

struct WeightedSum {
    TruncSeries series;
    long diagram_count = 0;
};

/// Sum over diagrams of codegree <= order of (number of s-compatible markings) * x-multiplicity.
inline WeightedSum enumerate_weighted(const SurfaceClass& s, long g, long order, long pairs = 0,
                                      unsigned threads = 1) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    WeightedSum res{TruncSeries(order), 0};
    if (g < 0) return res;
    auto cls = std::make_shared<const SurfaceClass>(s);
    auto lefts = detail::arrangements(s.b_left, order);
    auto parts = detail::run_parallel<WeightedSum>(lefts.size(), threads, [&](std::size_t i, WeightedSum& acc) {
        acc.series = TruncSeries(order);
        detail::DiagramGenerator gen(cls, g, order);
        gen.run(lefts[i].first, lefts[i].second, [&](const FloorDiagram& d) {
            Integer marks = count_s_markings(d, pairs);
            ++acc.diagram_count;
            if (marks == 0) return;
            acc.series += x_multiplicity(d, order, pairs) * marks;
        });
    });
    for (auto& p : parts) {
        res.series += p.series;
        res.diagram_count += p.diagram_count;
    }
    return res;
}

}  // namespace tropref
