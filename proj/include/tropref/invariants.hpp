#pragma once

// Refined tropical invariants as sums over floor diagrams.

#include "tropref/diagram.hpp"
#include "tropref/enumerate.hpp"
#include "tropref/polygon.hpp"
#include "tropref/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tropref {

struct InvariantOptions {
    EnumerationOptions enumeration;
    bool checks = true;  ///< verify degree and symmetry of the results
};

namespace detail {
inline void check_laurent(const SymLaurent& p, int sign, long max_half, const char* what) {
    if (!p.is_palindromic(sign)) throw std::logic_error(std::string(what) + " is not (anti)symmetric");
    if (!p.is_zero() && p.half_max() > max_half) throw std::logic_error(std::string(what) + " exceeds its degree bound");
}
}  // namespace detail

/// sum over genus-g diagrams of (s-compatible markings) * product of [w]^2.
inline SymLaurent bg(const SurfaceClass& s, long g, long pairs = 0, const InvariantOptions& opt = {}) {
    EnumerationOptions e = opt.enumeration;
    e.codeg_budget.reset();
    SymLaurent sum;
    for (const FloorDiagram& d : enumerate_diagrams(s, g, e)) {
        Integer m = count_s_markings(d, pairs);
        if (m != 0) sum += bg_multiplicity(d) * m;
    }
    if (opt.checks) {
        long g_max = lattice_invariants(s).g_max;
        detail::check_laurent(sum, 1, 2 * (g_max - g), "invariant");
    }
    return sum;
}

/// The invariant times (q^{1/2} - q^{-1/2})^{ends + 2 * bounded edges}, a Laurent polynomial in q^{1/2}.
inline SymLaurent bg_cleared(const SurfaceClass& s, long g, long pairs = 0, const InvariantOptions& opt = {}) {
    EnumerationOptions e = opt.enumeration;
    e.codeg_budget.reset();
    SymLaurent sum;
    for (const FloorDiagram& d : enumerate_diagrams(s, g, e)) {
        Integer m = count_s_markings(d, pairs);
        if (m != 0) sum += cleared_multiplicity(d) * m;
    }
    if (opt.checks) {
        LatticeInvariants inv = lattice_invariants(s);
        int sign = (inv.k_dot_beta % 2 == 0) ? 1 : -1;
        detail::check_laurent(sum, sign, inv.area2, "cleared invariant");
    }
    return sum;
}

struct TruncatedInvariant {
    TruncSeries series;
    long diagram_count = 0;
    std::vector<std::string> warnings;
};

/// Conditions under which counting s-compatible markings is known to compute the invariant with
/// point conditions in pairs; returned as human-readable warnings.
inline std::vector<std::string> hypothesis_warnings(const SurfaceClass& s, long order, long pairs) {
    std::vector<std::string> w;
    if (pairs > 0 && s.b_bot < order + 2 * pairs)
        w.push_back("bottom side length " + std::to_string(s.b_bot) + " is below truncation + 2s = " +
                    std::to_string(order + 2 * pairs));
    return w;
}

/// The invariant in the variable x, known modulo x^{order+1}, from diagrams of codegree <= order.
inline TruncatedInvariant bg_truncated(const SurfaceClass& s, long g, long order, long pairs = 0,
                                       unsigned threads = 1) {
    WeightedSum ws = enumerate_weighted(s, g, order, pairs, threads);
    return {ws.series, ws.diagram_count, hypothesis_warnings(s, order, pairs)};
}

}  // namespace tropref
