#pragma once

// Exact truncated power series, bi-graded series in (u, x), and symmetric
// Laurent polynomials in q^{1/2}, all with arbitrary-precision coefficients.

#include "tropref/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropref {

/// A power series in x known modulo x^{order+1}.
class TruncSeries {
public:
    explicit TruncSeries(long order = 0) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        c_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
    }

    static TruncSeries from_coeffs(std::vector<Integer> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
        TruncSeries s;
        s.c_ = std::move(coeffs);
        return s;
    }

    static TruncSeries from_ints(const std::vector<long>& coeffs) {
        std::vector<Integer> c;
        c.reserve(coeffs.size());
        for (long v : coeffs) c.emplace_back(v);
        return from_coeffs(std::move(c));
    }

    static TruncSeries constant(const Integer& v, long order) {
        TruncSeries s(order);
        s.c_[0] = v;
        return s;
    }

    static TruncSeries one(long order) { return constant(1, order); }

    /// coeff * x^k, truncated at `order`
    static TruncSeries monomial(long k, long order, const Integer& coeff = 1) {
        TruncSeries s(order);
        if (k < 0) throw std::invalid_argument("negative exponent in power series");
        if (k <= order) s.c_[static_cast<std::size_t>(k)] = coeff;
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }

    const Integer& operator[](long k) const { return c_.at(static_cast<std::size_t>(k)); }
    Integer& operator[](long k) { return c_.at(static_cast<std::size_t>(k)); }

    /// Coefficient of x^k, zero beyond the stored range is not allowed.
    Integer coeff(long k) const {
        if (k < 0) return 0;
        if (k > order()) throw std::out_of_range("coefficient beyond truncation order");
        return c_[static_cast<std::size_t>(k)];
    }

    TruncSeries truncated(long new_order) const {
        if (new_order > order())
            throw std::invalid_argument("cannot raise truncation order from " + std::to_string(order()) +
                                        " to " + std::to_string(new_order));
        TruncSeries r(new_order);
        std::copy(c_.begin(), c_.begin() + new_order + 1, r.c_.begin());
        return r;
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return v == 0; });
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncSeries& operator*=(const Integer& k) {
        for (auto& v : c_) v *= k;
        return *this;
    }
    TruncSeries& operator*=(const TruncSeries& o) {
        *this = *this * o;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(TruncSeries a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend TruncSeries operator*(TruncSeries a, const Integer& k) { return a *= k; }
    friend TruncSeries operator*(const Integer& k, TruncSeries a) { return a *= k; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_same(b);
        const long n = a.order();
        TruncSeries r(n);
        for (long i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; i + j <= n; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    /// Multiplicative inverse; the constant term must be +1 or -1.
    TruncSeries inverse() const {
        const Integer& c0 = c_[0];
        if (c0 != 1 && c0 != -1)
            throw std::domain_error("series is not invertible over the integers (constant term " +
                                    to_decimal(c0) + ")");
        const long n = order();
        TruncSeries r(n);
        r.c_[0] = c0;  // 1/c0 == c0 for units
        for (long k = 1; k <= n; ++k) {
            Integer acc = 0;
            for (long j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -acc * c0;
        }
        return r;
    }

    /// Integer power; negative exponents go through the inverse.
    TruncSeries pow(long e) const {
        TruncSeries base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        TruncSeries r = one(order());
        while (k) {
            if (k & 1UL) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
        os << '[';
        for (std::size_t i = 0; i < s.c_.size(); ++i) os << (i ? "," : "") << s.c_[i].get_str();
        return os << ']';
    }

private:
    void check_same(const TruncSeries& o) const {
        if (o.order() != order())
            throw std::invalid_argument("truncation mismatch: x^" + std::to_string(order() + 1) + " vs x^" +
                                        std::to_string(o.order() + 1));
    }

    std::vector<Integer> c_;
};

/// A series in two variables u, x known modulo (u^{u_order+1}, x^{x_order+1}).
class BiTruncSeries {
public:
    BiTruncSeries(long u_order = 0, long x_order = 0) : g_(u_order), n_(x_order) {
        if (u_order < 0 || x_order < 0) throw std::invalid_argument("negative truncation order");
        c_.assign(static_cast<std::size_t>((g_ + 1) * (n_ + 1)), Integer(0));
    }

    static BiTruncSeries one(long u_order, long x_order) {
        BiTruncSeries s(u_order, x_order);
        s.at(0, 0) = 1;
        return s;
    }

    static BiTruncSeries monomial(long ue, long xe, long u_order, long x_order, const Integer& c = 1) {
        BiTruncSeries s(u_order, x_order);
        if (ue < 0 || xe < 0) throw std::invalid_argument("negative exponent in power series");
        if (ue <= u_order && xe <= x_order) s.at(ue, xe) = c;
        return s;
    }

    /// Embeds a series in x (constant in u).
    static BiTruncSeries from_x(const TruncSeries& s, long u_order) {
        BiTruncSeries r(u_order, s.order());
        for (long i = 0; i <= s.order(); ++i) r.at(0, i) = s[i];
        return r;
    }

    /// Embeds a series in u (constant in x).
    static BiTruncSeries from_u(const TruncSeries& s, long x_order) {
        BiTruncSeries r(s.order(), x_order);
        for (long g = 0; g <= s.order(); ++g) r.at(g, 0) = s[g];
        return r;
    }

    long u_order() const { return g_; }
    long x_order() const { return n_; }

    Integer& at(long ue, long xe) { return c_.at(idx(ue, xe)); }
    const Integer& at(long ue, long xe) const { return c_.at(idx(ue, xe)); }

    /// Coefficient of u^g as a series in x.
    TruncSeries u_slice(long g) const {
        TruncSeries r(n_);
        for (long i = 0; i <= n_; ++i) r[i] = at(g, i);
        return r;
    }

    /// Coefficient of x^i as a series in u.
    TruncSeries x_slice(long i) const {
        TruncSeries r(g_);
        for (long g = 0; g <= g_; ++g) r[g] = at(g, i);
        return r;
    }

    BiTruncSeries& operator+=(const BiTruncSeries& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    BiTruncSeries& operator-=(const BiTruncSeries& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    BiTruncSeries& operator*=(const Integer& k) {
        for (auto& v : c_) v *= k;
        return *this;
    }

    friend BiTruncSeries operator+(BiTruncSeries a, const BiTruncSeries& b) { return a += b; }
    friend BiTruncSeries operator-(BiTruncSeries a, const BiTruncSeries& b) { return a -= b; }
    friend BiTruncSeries operator-(BiTruncSeries a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend BiTruncSeries operator*(BiTruncSeries a, const Integer& k) { return a *= k; }
    friend BiTruncSeries operator*(const Integer& k, BiTruncSeries a) { return a *= k; }

    friend BiTruncSeries operator*(const BiTruncSeries& a, const BiTruncSeries& b) {
        a.check_same(b);
        BiTruncSeries r(a.g_, a.n_);
        for (long g1 = 0; g1 <= a.g_; ++g1)
            for (long i1 = 0; i1 <= a.n_; ++i1) {
                const Integer& x = a.at(g1, i1);
                if (x == 0) continue;
                for (long g2 = 0; g1 + g2 <= a.g_; ++g2)
                    for (long i2 = 0; i1 + i2 <= a.n_; ++i2) {
                        const Integer& y = b.at(g2, i2);
                        if (y != 0) r.at(g1 + g2, i1 + i2) += x * y;
                    }
            }
        return r;
    }

    BiTruncSeries inverse() const {
        const Integer c0 = at(0, 0);
        if (c0 != 1 && c0 != -1)
            throw std::domain_error("bi-series is not invertible over the integers");
        // r = c0 * sum_k (1 - c0*s)^k, nilpotent part vanishes after g+n steps
        BiTruncSeries nil = one(g_, n_) - (*this) * c0;
        BiTruncSeries r = one(g_, n_);
        BiTruncSeries term = one(g_, n_);
        for (long k = 1; k <= g_ + n_; ++k) {
            term = term * nil;
            r += term;
        }
        return r * c0;
    }

    BiTruncSeries pow(long e) const {
        BiTruncSeries base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        BiTruncSeries r = one(g_, n_);
        while (k) {
            if (k & 1UL) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    friend bool operator==(const BiTruncSeries& a, const BiTruncSeries& b) {
        return a.g_ == b.g_ && a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BiTruncSeries& a, const BiTruncSeries& b) { return !(a == b); }

private:
    std::size_t idx(long ue, long xe) const {
        if (ue < 0 || ue > g_ || xe < 0 || xe > n_) throw std::out_of_range("bi-series index out of range");
        return static_cast<std::size_t>(ue * (n_ + 1) + xe);
    }
    void check_same(const BiTruncSeries& o) const {
        if (o.g_ != g_ || o.n_ != n_) throw std::invalid_argument("truncation mismatch between bi-series");
    }

    long g_, n_;
    std::vector<Integer> c_;
};

/// Laurent polynomial in q^{1/2}: coefficient of q^{h/2} is stored at half-exponent h.
class SymLaurent {
public:
    SymLaurent() = default;

    SymLaurent(long half_min, std::vector<Integer> coeffs) : lo_(half_min), c_(std::move(coeffs)) { normalize(); }

    static SymLaurent constant(const Integer& v) { return SymLaurent(0, {v}); }
    static SymLaurent monomial(long half_exp, const Integer& v = 1) { return SymLaurent(half_exp, {v}); }

    bool is_zero() const { return c_.empty(); }
    long half_min() const { return c_.empty() ? 0 : lo_; }
    long half_max() const { return c_.empty() ? 0 : lo_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer coeff(long h) const {
        if (c_.empty() || h < lo_ || h > half_max()) return 0;
        return c_[static_cast<std::size_t>(h - lo_)];
    }

    SymLaurent& operator+=(const SymLaurent& o) { return *this = combine(*this, o, 1); }
    SymLaurent& operator-=(const SymLaurent& o) { return *this = combine(*this, o, -1); }
    friend SymLaurent operator+(const SymLaurent& a, const SymLaurent& b) { return combine(a, b, 1); }
    friend SymLaurent operator-(const SymLaurent& a, const SymLaurent& b) { return combine(a, b, -1); }
    friend SymLaurent operator*(SymLaurent a, const Integer& k) {
        for (auto& v : a.c_) v *= k;
        a.normalize();
        return a;
    }
    friend SymLaurent operator*(const Integer& k, SymLaurent a) { return std::move(a) * k; }

    friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return SymLaurent(a.lo_ + b.lo_, std::move(r));
    }
    SymLaurent& operator*=(const SymLaurent& o) { return *this = *this * o; }

    SymLaurent pow(unsigned long e) const {
        SymLaurent r = constant(1), base = *this;
        while (e) {
            if (e & 1UL) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    Integer eval_at_one() const {
        Integer s = 0;
        for (const auto& v : c_) s += v;
        return s;
    }

    /// Value at q = -1; only defined when every exponent is an integer power of q.
    Integer eval_at_minus_one() const {
        Integer s = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            long h = lo_ + static_cast<long>(i);
            if (h % 2 != 0) throw std::domain_error("half-integer power of q has no real value at q = -1");
            if ((h / 2) % 2 == 0) s += c_[i];
            else s -= c_[i];
        }
        return s;
    }

    /// True when coeff(h) == sign * coeff(-h) for all h.
    bool is_palindromic(int sign) const {
        for (long h = half_min(); h <= half_max(); ++h)
            if (coeff(h) != coeff(-h) * sign) return false;
        return true;
    }

    friend bool operator==(const SymLaurent& a, const SymLaurent& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const SymLaurent& a, const SymLaurent& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const SymLaurent& p) {
        if (p.is_zero()) return os << '0';
        bool first = true;
        for (long h = p.half_max(); h >= p.half_min(); --h) {
            Integer v = p.coeff(h);
            if (v == 0) continue;
            os << (first ? "" : (v > 0 ? " + " : " - "));
            if (first && v < 0) os << '-';
            Integer m = abs(v);
            if (m != 1 || h == 0) os << m.get_str();
            if (h != 0) {
                if (m != 1) os << '*';
                if (h == 2) os << 'q';
                else if (h % 2 == 0) os << "q^" << h / 2;
                else os << "q^(" << h << "/2)";
            }
            first = false;
        }
        return os;
    }

private:
    static SymLaurent combine(const SymLaurent& a, const SymLaurent& b, int sign) {
        if (a.is_zero()) return sign > 0 ? b : b * Integer(-1);
        if (b.is_zero()) return a;
        long lo = std::min(a.lo_, b.lo_), hi = std::max(a.half_max(), b.half_max());
        std::vector<Integer> r(static_cast<std::size_t>(hi - lo + 1), Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[a.lo_ - lo + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            if (sign > 0) r[b.lo_ - lo + i] += b.c_[i];
            else r[b.lo_ - lo + i] -= b.c_[i];
        }
        return SymLaurent(lo, std::move(r));
    }

    void normalize() {
        std::size_t first = 0;
        while (first < c_.size() && c_[first] == 0) ++first;
        if (first == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        std::size_t last = c_.size();
        while (c_[last - 1] == 0) --last;
        c_ = std::vector<Integer>(c_.begin() + static_cast<long>(first), c_.begin() + static_cast<long>(last));
        lo_ += static_cast<long>(first);
    }

    long lo_ = 0;
    std::vector<Integer> c_;
};

/// Quantum integer [n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}).
inline SymLaurent quantum_integer(long n) {
    if (n < 0) throw std::invalid_argument("quantum integer of a negative number");
    if (n == 0) return {};
    std::vector<Integer> c(static_cast<std::size_t>(2 * n - 1), Integer(0));
    for (long k = 0; k < n; ++k) c[static_cast<std::size_t>(2 * k)] = 1;
    return SymLaurent(-(n - 1), std::move(c));
}

/// q^{w/2} - q^{-w/2}
inline SymLaurent half_difference(long w) {
    if (w == 0) return {};
    return SymLaurent::monomial(w) - SymLaurent::monomial(-w);
}

/// Re-expands a Laurent polynomial as a series in x by sending q^{h/2} to x^{(area2 - h)/2}.
inline TruncSeries laurent_to_trunc(const SymLaurent& p, long area2, long order) {
    TruncSeries r(order);
    for (long h = p.half_min(); h <= p.half_max(); ++h) {
        Integer v = p.coeff(h);
        if (v == 0) continue;
        long d = area2 - h;
        if (d < 0 || d % 2 != 0)
            throw std::domain_error("exponent q^(" + std::to_string(h) + "/2) does not fit twice-area " +
                                    std::to_string(area2));
        if (d / 2 <= order) r[d / 2] += v;
    }
    return r;
}

/// Generating function of integer partitions, computed by the coin-change recurrence.
inline TruncSeries partition_series(long order) {
    TruncSeries p = TruncSeries::one(order);
    for (long part = 1; part <= order; ++part)
        for (long k = part; k <= order; ++k) p[k] += p[k - part];
    return p;
}

/// sum_{n>=1} sigma_1(n) x^n from divisor sums.
inline TruncSeries eisenstein_e2(long order) {
    TruncSeries e(order);
    for (long d = 1; d <= order; ++d)
        for (long m = d; m <= order; m += d) e[m] += d;
    return e;
}

/// <m> = x^m / (1 - x^m)
inline TruncSeries bracket_series(long m, long order) {
    if (m <= 0) throw std::invalid_argument("bracket series needs a positive index");
    TruncSeries r(order);
    for (long k = m; k <= order; k += m) r[k] = 1;
    return r;
}

/// sum_{n>=1} n x^n / (1 - x^n), via series inversion.
inline TruncSeries eisenstein_e2_lambert(long order) {
    TruncSeries r(order);
    for (long n = 1; n <= order; ++n) {
        TruncSeries den = TruncSeries::one(order) - TruncSeries::monomial(n, order);
        r += TruncSeries::monomial(n, order, n) * den.inverse();
    }
    return r;
}

/// sum_{n>=1} x^n / (1 - x^n)^2, via series inversion.
inline TruncSeries eisenstein_e2_squared(long order) {
    TruncSeries r(order);
    for (long n = 1; n <= order; ++n) {
        TruncSeries den = TruncSeries::one(order) - TruncSeries::monomial(n, order);
        r += TruncSeries::monomial(n, order) * den.pow(-2);
    }
    return r;
}

}  // namespace tropref
