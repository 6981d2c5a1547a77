#pragma once

// Closed forms for the stable coefficients of the refined invariants of large classes,
// and a checker comparing them against diagram enumeration.

#include "tropref/integer.hpp"
#include "tropref/invariants.hpp"
#include "tropref/polygon.hpp"
#include "tropref/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropref {

namespace detail {
inline TruncSeries one_plus_u_pow(long e, long order) {
    return (TruncSeries::one(order) + TruncSeries::monomial(1, order)).pow(e);
}
inline TruncSeries u_pow(long e, long order) { return TruncSeries::monomial(e, order); }
}  // namespace detail

/// Leading coefficient as a series in the genus variable u: (1+u)^{g_max}.
inline TruncSeries ar_codeg0(long g_max, long u_order) { return detail::one_plus_u_pow(g_max, u_order); }

/// Next-to-leading coefficient as a series in u, from the intersection numbers of the class.
inline TruncSeries ar_codeg1(const LatticeInvariants& inv, long u_order) {
    using detail::one_plus_u_pow, detail::u_pow;
    const long G = u_order;
    TruncSeries inner = u_pow(3, G) * one_plus_u_pow(-3, G) * Integer(-inv.beta_sq) +
                        u_pow(2, G) * one_plus_u_pow(-3, G) * Integer(2 * inv.k_dot_beta) +
                        one_plus_u_pow(-1, G) * Integer(inv.chi) -
                        u_pow(1, G) * one_plus_u_pow(-3, G) * Integer(inv.k_sq);
    return one_plus_u_pow(inv.g_max, G) * inner;
}

/// The next-to-leading coefficient split by the kind of diagram producing it.
struct Codeg1Contributions {
    TruncSeries codeg0;          ///< degree-one terms of codegree-0 diagrams
    TruncSeries infinite_side;   ///< an end attached one floor away from the extreme one
    TruncSeries bounded_side;    ///< a bounded edge skipping one floor
    TruncSeries slope_inversion; ///< two consecutive floors with swapped slopes

    TruncSeries sum() const { return codeg0 + infinite_side + bounded_side + slope_inversion; }
};

inline Codeg1Contributions ar_codeg1_contributions(const SurfaceClass& s, long u_order) {
    using detail::one_plus_u_pow, detail::u_pow;
    if (s.a < 3) throw std::invalid_argument("contribution formulas need at least three floors");
    const long G = u_order;
    const LatticeInvariants inv = lattice_invariants(s);
    const std::vector<long> w = slice_widths(s);
    const long a = s.a, ends = s.b_top + s.b_bot;
    TruncSeries top = one_plus_u_pow(inv.g_max, G);
    TruncSeries two_plus_u = TruncSeries::constant(2, G) + u_pow(1, G);

    Codeg1Contributions c;
    c.codeg0 = top * (TruncSeries::constant(-ends, G) -
                      u_pow(2, G) * one_plus_u_pow(-2, G) * Integer(2 * inv.g_max) -
                      u_pow(1, G) * two_plus_u * one_plus_u_pow(-2, G) * Integer(2 * (a - 1)));
    c.infinite_side = top * (u_pow(1, G) * one_plus_u_pow(-2, G) * Integer(w.front() + w.back() - 2) +
                             one_plus_u_pow(-1, G) * Integer(ends) + two_plus_u * one_plus_u_pow(-2, G) * Integer(2));
    long pair_sum = 0;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) pair_sum += w[j] + w[j + 1] - 2;
    c.bounded_side = top * (u_pow(2, G) * one_plus_u_pow(-3, G) * Integer(pair_sum) +
                            u_pow(1, G) * two_plus_u * one_plus_u_pow(-3, G) * Integer(2 * (a - 2)));
    c.slope_inversion = one_plus_u_pow(inv.g_max - 1, G) * Integer(inv.chi - 4);
    return c;
}

/// Genus-0 stable series p(x)^chi.
inline TruncSeries ar_genus0(long chi, long order) { return partition_series(order).pow(chi); }

/// Genus-1 stable series p(x)^chi (g_max + 2s x/(1-x) - 12 E_2(x)).
inline TruncSeries ar_genus1(long chi, long g_max, long order, long pairs = 0) {
    TruncSeries inner = TruncSeries::constant(g_max, order) + bracket_series(1, order) * Integer(2 * pairs) -
                        eisenstein_e2(order) * Integer(12);
    return ar_genus0(chi, order) * inner;
}

/// Conjectured joint series modulo u^2: p^chi (1+u)^{g_max} (1 - (chi + K^2) u E_2).
inline BiTruncSeries conjecture_mod_u2(long chi, long k_sq, long g_max, long order) {
    BiTruncSeries p_chi = BiTruncSeries::from_x(ar_genus0(chi, order), 1);
    BiTruncSeries lift = BiTruncSeries::from_u(ar_codeg0(g_max, 1), order);
    BiTruncSeries corr = BiTruncSeries::one(1, order) -
                         BiTruncSeries::monomial(1, 0, 1, order) * BiTruncSeries::from_x(eisenstein_e2(order), 1) *
                             Integer(chi + k_sq);
    return p_chi * lift * corr;
}

// ---------------------------------------------------------------------------

enum class VerifyMode { Codeg0, Codeg1, Genus0, Genus1, Conjecture };

inline VerifyMode parse_verify_mode(const std::string& s) {
    if (s == "codeg0") return VerifyMode::Codeg0;
    if (s == "codeg1") return VerifyMode::Codeg1;
    if (s == "genus0") return VerifyMode::Genus0;
    if (s == "genus1") return VerifyMode::Genus1;
    if (s == "conjecture") return VerifyMode::Conjecture;
    throw std::invalid_argument("unknown verify mode '" + s + "'");
}

struct VerifyOptions {
    long order = 1;      ///< x-truncation (genus modes) or largest genus (codegree modes)
    long pairs = 0;
    bool force = false;  ///< run even when the class is too small for the closed form to apply
    unsigned threads = 1;
};

struct VerifyRow {
    std::string label;
    Integer enumerated, closed_form;
    bool ok = false;
};

struct VerifyReport {
    enum class Status { Pass, Fail, Inconclusive };
    Status status = Status::Pass;
    std::vector<std::string> unmet;  ///< size conditions the class does not satisfy
    std::vector<VerifyRow> rows;
};

inline const char* status_name(VerifyReport::Status s) {
    switch (s) {
        case VerifyReport::Status::Pass: return "pass";
        case VerifyReport::Status::Fail: return "fail";
        case VerifyReport::Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// Size conditions under which the closed form of `mode` is expected to match at the given order.
inline std::vector<std::string> unmet_conditions(const SurfaceClass& s, VerifyMode mode, long order, long pairs) {
    std::vector<std::string> out;
    if (mode == VerifyMode::Codeg0) return out;
    const long bound = mode == VerifyMode::Codeg1 ? 2 : 2 * order;
    if (!is_h_horizontal(s)) out.push_back("polygon needs both horizontal sides");
    if (!is_nonsingular(s)) out.push_back("polygon has a singular vertex");
    if (s.a <= bound) out.push_back("height a = " + std::to_string(s.a) + " must exceed " + std::to_string(bound));
    for (long len : side_lengths(s))
        if (len <= bound) {
            out.push_back("a side of length " + std::to_string(len) + " must exceed " + std::to_string(bound));
            break;
        }
    if (pairs > 0 && s.b_bot < order + 2 * pairs)
        out.push_back("bottom side length must be at least truncation + 2s = " + std::to_string(order + 2 * pairs));
    return out;
}

inline VerifyReport verify(const SurfaceClass& s, VerifyMode mode, const VerifyOptions& opt) {
    VerifyReport rep;
    rep.unmet = unmet_conditions(s, mode, opt.order, opt.pairs);
    if (!rep.unmet.empty() && !opt.force) {
        rep.status = VerifyReport::Status::Inconclusive;
        return rep;
    }
    const LatticeInvariants inv = lattice_invariants(s);
    auto add = [&](std::string label, const Integer& got, const Integer& want) {
        rep.rows.push_back({std::move(label), got, want, got == want});
    };
    auto compare_series = [&](const std::string& prefix, const TruncSeries& got, const TruncSeries& want) {
        for (long i = 0; i <= got.order(); ++i) add(prefix + "[x^" + std::to_string(i) + "]", got[i], want[i]);
    };
    switch (mode) {
        case VerifyMode::Codeg0:
        case VerifyMode::Codeg1: {
            const long xi = mode == VerifyMode::Codeg0 ? 0 : 1;
            TruncSeries want = xi == 0 ? ar_codeg0(inv.g_max, opt.order) : ar_codeg1(inv, opt.order);
            for (long g = 0; g <= opt.order; ++g) {
                TruncatedInvariant t = bg_truncated(s, g, xi, opt.pairs, opt.threads);
                add("genus " + std::to_string(g) + " [x^" + std::to_string(xi) + "]", t.series[xi], want[g]);
            }
            break;
        }
        case VerifyMode::Genus0:
            compare_series("genus 0 ", bg_truncated(s, 0, opt.order, opt.pairs, opt.threads).series,
                           ar_genus0(inv.chi, opt.order));
            break;
        case VerifyMode::Genus1:
            compare_series("genus 1 ", bg_truncated(s, 1, opt.order, opt.pairs, opt.threads).series,
                           ar_genus1(inv.chi, inv.g_max, opt.order, opt.pairs));
            break;
        case VerifyMode::Conjecture: {
            BiTruncSeries want = conjecture_mod_u2(inv.chi, inv.k_sq, inv.g_max, opt.order);
            compare_series("genus 0 ", bg_truncated(s, 0, opt.order, 0, opt.threads).series, want.u_slice(0));
            compare_series("genus 1 ", bg_truncated(s, 1, opt.order, 0, opt.threads).series, want.u_slice(1));
            break;
        }
    }
    rep.status = VerifyReport::Status::Pass;
    for (const auto& r : rep.rows)
        if (!r.ok) rep.status = VerifyReport::Status::Fail;
    return rep;
}

}  // namespace tropref
