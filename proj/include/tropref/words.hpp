#pragma once

// Word, sentence and pearl encodings of genus-0 marked floor diagrams whose floors
// form a chain, used as an independent route to the truncated genus-0 invariants.

#include "tropref/diagram.hpp"
#include "tropref/enumerate.hpp"
#include "tropref/integer.hpp"
#include "tropref/polygon.hpp"
#include "tropref/series.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropref {

// ---------------------------------------------------------------------------
// Letters and words

struct Letter {
    enum class Kind { F, E, B, T };
    Kind kind = Kind::F;
    long index = 0;       ///< for b_j, t_j
    bool sloped = false;  ///< f carries an explicit (left, right) slope pair
    long l = 0, r = 0;

    static Letter f() { return {Kind::F}; }
    static Letter f(long l, long r) { return {Kind::F, 0, true, l, r}; }
    static Letter e() { return {Kind::E}; }
    static Letter b(long j) { return {Kind::B, j}; }
    static Letter t(long j) { return {Kind::T, j}; }

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline std::string format_letter(const Letter& x) {
    switch (x.kind) {
        case Letter::Kind::F: return x.sloped ? "f" + std::to_string(x.l) + "," + std::to_string(x.r) : "f";
        case Letter::Kind::E: return "e";
        case Letter::Kind::B: return "b" + std::to_string(x.index);
        case Letter::Kind::T: return "t" + std::to_string(x.index);
    }
    return "?";
}

inline std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + format_letter(w[i]);
    return s;
}

inline Letter parse_letter(const std::string& tok) {
    auto bad = [&] { return std::invalid_argument("bad letter '" + tok + "'"); };
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw bad();
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != s.size()) throw bad();
        return v;
    };
    if (tok == "f") return Letter::f();
    if (tok == "e") return Letter::e();
    if (tok.size() >= 2 && (tok[0] == 'b' || tok[0] == 't')) {
        long j = parse_int(tok.substr(1));
        if (j < 0) throw bad();
        return tok[0] == 'b' ? Letter::b(j) : Letter::t(j);
    }
    if (tok.size() >= 4 && tok[0] == 'f') {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw bad();
        return Letter::f(parse_int(tok.substr(1, comma - 1)), parse_int(tok.substr(comma + 1)));
    }
    throw bad();
}

/// Whitespace-separated letters: f, e, b<j>, t<j>, f<l>,<r>.
inline Word parse_word(const std::string& text) {
    std::istringstream in(text);
    Word w;
    for (std::string tok; in >> tok;) w.push_back(parse_letter(tok));
    return w;
}

/// Sum of the b/t indices plus the inversions of the slope sequences read off the f letters.
inline long word_codegree(const Word& w) {
    long c = 0;
    std::vector<long> ls, rs;
    for (const Letter& x : w) {
        if (x.kind == Letter::Kind::B || x.kind == Letter::Kind::T) c += x.index;
        if (x.kind == Letter::Kind::F && x.sloped) {
            ls.push_back(x.l);
            rs.push_back(x.r);
        }
    }
    auto inv = [](const std::vector<long>& v) {
        long s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] > v[j]) s += v[i] - v[j];
        return s;
    };
    return c + inv(ls) + inv(rs);
}

namespace detail {
inline bool constant_slopes(const SurfaceClass& s) {
    return s.b_left.front() == s.b_left.back() && s.b_right.front() == s.b_right.back();
}
}  // namespace detail

/// Checks the word against the class; throws std::invalid_argument naming the violated rule.
inline void validate_word(const Word& w, const SurfaceClass& s) {
    const long a = s.a;
    long nf = 0, nb = 0, nt = 0;
    std::vector<Letter::Kind> core;
    std::vector<long> ls, rs;
    bool any_sloped = false, any_plain = false;
    for (const Letter& x : w) {
        switch (x.kind) {
            case Letter::Kind::F:
                ++nf;
                core.push_back(x.kind);
                (x.sloped ? any_sloped : any_plain) = true;
                ls.push_back(x.l);
                rs.push_back(x.r);
                break;
            case Letter::Kind::E: core.push_back(x.kind); break;
            case Letter::Kind::B: ++nb; break;
            case Letter::Kind::T: ++nt; break;
        }
    }
    auto fail = [](const std::string& m) { throw std::invalid_argument("invalid word: " + m); };
    if (nf != a) fail("expected " + std::to_string(a) + " letters f, found " + std::to_string(nf));
    for (std::size_t i = 0; i < core.size(); ++i)
        if (core[i] != (i % 2 == 0 ? Letter::Kind::F : Letter::Kind::E)) fail("core is not (f e)^(a-1) f");
    if (core.size() != static_cast<std::size_t>(2 * a - 1)) fail("core is not (f e)^(a-1) f");
    if (nb != s.b_bot) fail("expected " + std::to_string(s.b_bot) + " letters b, found " + std::to_string(nb));
    if (nt != s.b_top) fail("expected " + std::to_string(s.b_top) + " letters t, found " + std::to_string(nt));
    long seen_f = 0;
    for (const Letter& x : w) {
        if (x.kind == Letter::Kind::F) ++seen_f;
        if (x.kind == Letter::Kind::B && (x.index < seen_f || x.index > a - 1))
            fail("b" + std::to_string(x.index) + " placed after " + std::to_string(seen_f) + " floors");
        if (x.kind == Letter::Kind::T && (x.index < a - seen_f || x.index > a - 1))
            fail("t" + std::to_string(x.index) + " placed before " + std::to_string(a - seen_f) + " floors");
    }
    if (any_sloped && any_plain) fail("mixes sloped and plain floor letters");
    if (any_sloped) {
        std::sort(ls.begin(), ls.end());
        std::sort(rs.begin(), rs.end());
        if (ls != s.b_left || rs != s.b_right) fail("slope pairs do not match the class multisets");
    } else if (!detail::constant_slopes(s)) {
        fail("class has several slopes on a side, floor letters must carry them");
    }
}

// ---------------------------------------------------------------------------
// Marked diagrams

struct MarkElement {
    ElementKind kind;
    long floor = -1;          ///< Floor, Source, Sink
    long src = -1, dst = -1;  ///< Edge

    friend bool operator==(const MarkElement&, const MarkElement&) = default;
};

struct MarkedDiagram {
    FloorDiagram diagram;
    std::vector<MarkElement> marking;  ///< element carrying each marked point, in order
};

struct WordDecoding {
    std::optional<MarkedDiagram> marked;  ///< empty when some elevator weight is not positive
    std::vector<long> weights;           ///< weights of the elevators between consecutive floors
};

/// The marked chain diagram encoded by a valid word.
inline WordDecoding decode_word(const Word& w, const SurfaceClass& s) {
    validate_word(w, s);
    const long a = s.a;
    std::vector<long> left, right, src(static_cast<std::size_t>(a), 0), snk(static_cast<std::size_t>(a), 0);
    std::vector<MarkElement> marking;
    long floors = 0;
    for (const Letter& x : w) {
        switch (x.kind) {
            case Letter::Kind::F:
                left.push_back(x.sloped ? x.l : s.b_left.front());
                right.push_back(x.sloped ? x.r : s.b_right.front());
                marking.push_back({ElementKind::Floor, floors++});
                break;
            case Letter::Kind::E: marking.push_back({ElementKind::Edge, -1, floors - 1, floors}); break;
            case Letter::Kind::B:
                ++src[x.index];
                marking.push_back({ElementKind::Source, x.index});
                break;
            case Letter::Kind::T:
                ++snk[a - 1 - x.index];
                marking.push_back({ElementKind::Sink, a - 1 - x.index});
                break;
        }
    }
    WordDecoding out;
    long cut = 0;
    bool positive = true;
    std::vector<Edge> edges;
    for (long v = 0; v + 1 < a; ++v) {
        cut += src[v] - snk[v] - left[v] - right[v];
        out.weights.push_back(cut);
        if (cut < 1) positive = false;
        edges.push_back({v, v + 1, cut});
    }
    if (!positive) return out;
    out.marked = MarkedDiagram{FloorDiagram(std::make_shared<const SurfaceClass>(s), left, right, edges, src, snk),
                               std::move(marking)};
    return out;
}

/// The word of a marked diagram whose floors form the chain 0 -> 1 -> ... -> a-1.
inline Word encode_word(const MarkedDiagram& md, bool sloped) {
    const FloorDiagram& d = md.diagram;
    const long a = d.floor_count();
    if (static_cast<long>(d.edges().size()) != a - 1)
        throw std::invalid_argument("only genus-0 chain diagrams have words");
    for (long v = 0; v + 1 < a; ++v)
        if (d.edges()[v].src != v || d.edges()[v].dst != v + 1)
            throw std::invalid_argument("floors do not form a chain in label order");
    Word w;
    for (const MarkElement& m : md.marking) {
        switch (m.kind) {
            case ElementKind::Floor:
                w.push_back(sloped ? Letter::f(d.left(m.floor), d.right(m.floor)) : Letter::f());
                break;
            case ElementKind::Edge: w.push_back(Letter::e()); break;
            case ElementKind::Source: w.push_back(Letter::b(m.floor)); break;
            case ElementKind::Sink: w.push_back(Letter::t(a - 1 - m.floor)); break;
        }
    }
    return w;
}

/// Class read off a list of words: height from the f letters, sides from the b/t letters,
/// slopes from the sloped letters or, for plain letters, spread uniformly on the right.
inline SurfaceClass infer_class(const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("no words to infer a class from");
    const Word& w = words.front();
    long a = 0, nb = 0, nt = 0;
    std::vector<long> ls, rs;
    bool sloped = false;
    for (const Letter& x : w) {
        if (x.kind == Letter::Kind::F) {
            ++a;
            sloped = sloped || x.sloped;
            ls.push_back(x.l);
            rs.push_back(x.r);
        }
        nb += x.kind == Letter::Kind::B;
        nt += x.kind == Letter::Kind::T;
    }
    if (a == 0) throw std::invalid_argument("word has no floor letter");
    if (!sloped) {
        if ((nb - nt) % a != 0)
            throw std::invalid_argument("cannot infer slopes: ends differ by a non-multiple of the height");
        ls.assign(static_cast<std::size_t>(a), 0);
        rs.assign(static_cast<std::size_t>(a), (nb - nt) / a);
    }
    return make_surface_class(a, nt, nb, ls, rs);
}

/// Enumerates the valid words of codegree <= budget (the first 2*pairs letters equal in pairs).
inline void for_each_word(const SurfaceClass& s, long budget, long pairs,
                          const std::function<void(const Word&, long)>& visit) {
    const long a = s.a;
    const bool sloped = !detail::constant_slopes(s);
    Word w;
    std::vector<long> left, right;
    std::function<void(long, long, long, long, long)> rec = [&](long core, long nb, long nt, long seen_f,
                                                                long cost) {
        const long pos = static_cast<long>(w.size());
        if (core == 2 * a - 1 && nb == 0 && nt == 0) {
            visit(w, cost);
            return;
        }
        const bool must_repeat = pos < 2 * pairs && pos % 2 == 1;
        auto try_letter = [&](const Letter& x, long ncore, long nnb, long nnt, long nseen, long ncost) {
            if (must_repeat && !(x == w.back())) return;
            w.push_back(x);
            rec(ncore, nnb, nnt, nseen, ncost);
            w.pop_back();
        };
        if (core < 2 * a - 1) {
            if (core % 2 == 0) {
                Letter f = sloped ? Letter::f(left[seen_f], right[seen_f]) : Letter::f();
                try_letter(f, core + 1, nb, nt, seen_f + 1, cost);
            } else {
                try_letter(Letter::e(), core + 1, nb, nt, seen_f, cost);
            }
        }
        if (nb > 0)
            for (long k = seen_f; k <= a - 1 && cost + k <= budget; ++k)
                try_letter(Letter::b(k), core, nb - 1, nt, seen_f, cost + k);
        if (nt > 0)
            for (long k = a - seen_f; k <= a - 1 && cost + k <= budget; ++k)
                try_letter(Letter::t(k), core, nb, nt - 1, seen_f, cost + k);
    };
    auto run = [&](long cost) { rec(0, s.b_bot, s.b_top, 0, cost); };
    if (!sloped) {
        run(0);
        return;
    }
    for (auto& [l, lc] : detail::arrangements(s.b_left, budget))
        for (auto& [r, rc] : detail::arrangements(s.b_right, budget - lc)) {
            left = l;
            right = r;
            run(lc + rc);
        }
}

struct WordSum {
    TruncSeries series;
    long word_count = 0;
    long nonpositive = 0;  ///< words whose elevators are not all positive (not diagrams)
};

/// Sum of the x-multiplicities of the diagrams encoded by words of codegree <= order.
inline WordSum word_series(const SurfaceClass& s, long order, long pairs = 0) {
    WordSum res{TruncSeries(order), 0, 0};
    const long ends = s.b_top + s.b_bot;
    TruncSeries one = TruncSeries::one(order), x = TruncSeries::monomial(1, order);
    TruncSeries ends_factor = (one - x).pow(ends - pairs) * (one + x).pow(pairs);
    for_each_word(s, order, pairs, [&](const Word& w, long cost) {
        ++res.word_count;
        WordDecoding dec = decode_word(w, s);
        if (!dec.marked) {
            ++res.nonpositive;
            return;
        }
        TruncSeries m = TruncSeries::monomial(cost, order) * ends_factor;
        for (long wt : dec.weights) {
            TruncSeries f = one - TruncSeries::monomial(wt, order);
            m = m * f * f;
        }
        res.series += m;
    });
    return res;
}

// ---------------------------------------------------------------------------
// Sentences

/// (1-x)^n ((1+x)/(1-x))^pairs times the number of sentences of total length n by codegree,
/// truncated at x^order. A sentence is a family (S_0, S_j^(1), S_j^(2)) of words in
/// non-negative indices, letters of S_j^(k) being at least j.
inline TruncSeries sentence_series(long n, long order, long pairs = 0) {
    if (n < 0 || order < 0 || pairs < 0) throw std::invalid_argument("negative sentence parameter");
    std::vector<Integer> count(static_cast<std::size_t>(order) + 1, Integer(0));
    // slot 0 is S_0; slot 2j-1, 2j are S_j^(1), S_j^(2)
    const long slots = 1 + 2 * order;
    std::function<void(long, long, long, long, long)> fill;  // slot, letters left, cost, pos in slot, prev
    std::function<void(long, long, long)> next_slot = [&](long slot, long left, long cost) {
        if (slot == slots) {
            if (left == 0) count[static_cast<std::size_t>(cost)] += 1;
            return;
        }
        fill(slot, left, cost, 0, -1);
    };
    fill = [&](long slot, long left, long cost, long pos, long prev) {
        if (slot == 0 && pos < 2 * pairs) {
            if (left == 0) return;
            if (pos % 2 == 1) {
                fill(slot, left - 1, cost + prev, pos + 1, prev);
                return;
            }
        } else {
            next_slot(slot + 1, left, cost);  // close this word here
        }
        if (left == 0) return;
        const long lo = slot == 0 ? 0 : (slot + 1) / 2;
        const long copies = (slot == 0 && pos < 2 * pairs) ? 2 : 1;
        for (long k = lo; cost + copies * k <= order; ++k) fill(slot, left - 1, cost + k, pos + 1, k);
    };
    next_slot(0, n, 0);
    TruncSeries r = TruncSeries::from_coeffs(count);
    TruncSeries one = TruncSeries::one(order), x = TruncSeries::monomial(1, order);
    return r * (one - x).pow(n - pairs) * (one + x).pow(pairs);
}

// ---------------------------------------------------------------------------
// Pearls: bi-infinite sequences of full and hollow beads, full at -infinity and
// hollow at +infinity, stored by u_j = number of full beads with j hollow ones to their left.

struct Pearl {
    std::vector<long> u;  ///< u[0] is u_1; no trailing zeros

    long codegree() const {
        long c = 0;
        for (std::size_t j = 0; j < u.size(); ++j) c += static_cast<long>(j + 1) * u[j];
        return c;
    }

    static Pearl from_u(std::vector<long> u) {
        for (long v : u)
            if (v < 0) throw std::invalid_argument("pearl counts must be non-negative");
        while (!u.empty() && u.back() == 0) u.pop_back();
        return Pearl{std::move(u)};
    }

    friend bool operator==(const Pearl&, const Pearl&) = default;
};

/// Reads a finite window of beads; '*' or U+2022 is full, 'o' or U+2218 is hollow.
inline Pearl parse_pearl(const std::string& text) {
    std::vector<bool> hollow;
    for (std::size_t i = 0; i < text.size();) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == '*' || c == 'o' || c == 'O') {
            hollow.push_back(c != '*');
            ++i;
        } else if (text.compare(i, 3, "•") == 0) {
            hollow.push_back(false);
            i += 3;
        } else if (text.compare(i, 3, "∘") == 0 || text.compare(i, 3, "◦") == 0) {
            hollow.push_back(true);
            i += 3;
        } else if (std::isspace(c)) {
            ++i;
        } else {
            throw std::invalid_argument("bad pearl character in '" + text + "'");
        }
    }
    std::vector<long> u;
    long seen_hollow = 0;
    for (bool h : hollow) {
        if (h) {
            ++seen_hollow;
            continue;
        }
        if (seen_hollow == 0) continue;
        if (static_cast<long>(u.size()) < seen_hollow) u.resize(static_cast<std::size_t>(seen_hollow), 0);
        ++u[static_cast<std::size_t>(seen_hollow - 1)];
    }
    if (std::find(hollow.begin(), hollow.end(), true) == hollow.end() && !hollow.empty())
        return Pearl{};
    return Pearl::from_u(u);
}

/// Normal form: one full bead, then for j = 0, 1, ... a hollow bead followed by u_{j+1} full ones, then a hollow bead.
inline std::string format_pearl(const Pearl& p, bool ascii = false) {
    const std::string full = ascii ? "*" : "•", hollow = ascii ? "o" : "∘";
    std::string s = full + hollow;
    for (long k : p.u) {
        for (long i = 0; i < k; ++i) s += full;
        s += hollow;
    }
    return s;
}

/// All pearls of codegree <= order, with u supported on 1..order.
inline void for_each_pearl(long order, const std::function<void(const Pearl&)>& visit) {
    std::vector<long> u(static_cast<std::size_t>(std::max(order, 0L)), 0);
    std::function<void(long, long)> rec = [&](long j, long cost) {
        if (j > order) {
            visit(Pearl::from_u(u));
            return;
        }
        for (long k = 0; cost + j * k <= order; ++k) {
            u[static_cast<std::size_t>(j - 1)] = k;
            rec(j + 1, cost + j * k);
        }
        u[static_cast<std::size_t>(j - 1)] = 0;
    };
    rec(1, 0);
}

/// sum over pearls of x^codeg.
inline TruncSeries pearl_series(long order) {
    TruncSeries r(order);
    for_each_pearl(order, [&](const Pearl& p) { r[p.codegree()] += 1; });
    return r;
}

/// sum over pearls of codeg * x^codeg.
inline TruncSeries pearl_weighted_series(long order) {
    TruncSeries r(order);
    for_each_pearl(order, [&](const Pearl& p) { r[p.codegree()] += p.codegree(); });
    return r;
}

struct CornerPearl {
    long low = 0;  ///< the corner between slopes low and low + 1
    Pearl pearl;

    friend bool operator==(const CornerPearl&, const CornerPearl&) = default;
};

/// One pearl per pair of consecutive slope values (low -> full, low+1 -> hollow).
/// Every inversion of the tuple must be between consecutive values.
inline std::vector<CornerPearl> pearls_from_sloping(const std::vector<long>& tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] - tuple[j] >= 2)
                throw std::invalid_argument("slope tuple has an inversion of size at least two");
    std::vector<long> values(tuple);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<CornerPearl> out;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        long p = values[k];
        if (values[k + 1] != p + 1) continue;
        std::string beads;
        for (long v : tuple)
            if (v == p || v == p + 1) beads += v == p ? '*' : 'o';
        out.push_back({p, parse_pearl(beads)});
    }
    return out;
}

/// Rebuilds a slope tuple from the pearl of each corner and the multiplicity of each slope.
inline std::vector<long> sloping_from_pearls(const std::vector<CornerPearl>& pearls,
                                             const std::map<long, long>& multiplicity) {
    std::map<long, std::vector<long>> window;  // truncated pearl from its first hollow to its last full bead
    for (const CornerPearl& cp : pearls) {
        std::vector<long> seq;
        if (!cp.pearl.u.empty()) {
            seq.push_back(cp.low + 1);
            for (std::size_t j = 0; j < cp.pearl.u.size(); ++j) {
                for (long i = 0; i < cp.pearl.u[j]; ++i) seq.push_back(cp.low);
                if (j + 1 < cp.pearl.u.size()) seq.push_back(cp.low + 1);
            }
        }
        window[cp.low] = seq;
    }
    std::vector<long> out;
    for (auto it = multiplicity.begin(); it != multiplicity.end(); ++it) {
        long v = it->first;
        long used = 0;
        auto below = window.find(v - 1), here = window.find(v);
        if (below != window.end()) used += std::count(below->second.begin(), below->second.end(), v);
        if (here != window.end()) used += std::count(here->second.begin(), here->second.end(), v);
        long pad = it->second - used;
        if (pad < 0) throw std::invalid_argument("pearls use slope " + std::to_string(v) + " too often");
        out.insert(out.end(), static_cast<std::size_t>(pad), v);
        if (here != window.end()) out.insert(out.end(), here->second.begin(), here->second.end());
    }
    for (const auto& [low, seq] : window)
        if (!multiplicity.count(low) || (!seq.empty() && !multiplicity.count(low + 1)))
            throw std::invalid_argument("pearl given for a corner the tuple does not have");
    return out;
}

}  // namespace tropref
