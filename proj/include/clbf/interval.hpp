#ifndef CLBF_INTERVAL_HPP
#define CLBF_INTERVAL_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "clbf/error.hpp"

namespace clbf {

/// Closed interval [lo, hi] with a containment guarantee: every operation
/// returns an interval that contains the exact real image of its arguments.
/// Finite-precision rounding is absorbed by widening each computed bound
/// outward by at least one ulp (transcendentals by a few, covering libm's
/// documented error), so containment never depends on the rounding mode.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double l, double h) : lo(l), hi(h) {}
    static Interval point(double v) { return {v, v}; }
    static Interval entire() {
        const double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }

    double width() const { return hi - lo; }
    double mid() const {
        if (lo == hi) return lo;
        double m = 0.5 * (lo + hi);
        if (!std::isfinite(m)) m = 0.5 * lo + 0.5 * hi;
        if (!std::isfinite(m)) m = 0.0;
        return m;
    }
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool empty() const { return !(lo <= hi); } // NaN bounds also count as empty
};

namespace detail {
inline double step_down(double v) {
    if (v == -std::numeric_limits<double>::infinity()) return v;
    return std::nextafter(v, -std::numeric_limits<double>::infinity());
}
inline double step_up(double v) {
    if (v == std::numeric_limits<double>::infinity()) return v;
    return std::nextafter(v, std::numeric_limits<double>::infinity());
}
// Wider slack for libm calls (sin/cos/exp/log): a handful of ulps plus a tiny
// absolute floor covers any faithful implementation.
inline double loose_down(double v) {
    double r = v - (std::fabs(v) * 0x1.0p-48 + 0x1.0p-1022);
    return step_down(r);
}
inline double loose_up(double v) {
    double r = v + (std::fabs(v) * 0x1.0p-48 + 0x1.0p-1022);
    return step_up(r);
}
} // namespace detail

inline Interval widen(double lo, double hi) { return {detail::step_down(lo), detail::step_up(hi)}; }

inline Interval operator+(Interval a, Interval b) { return widen(a.lo + b.lo, a.hi + b.hi); }
inline Interval operator-(Interval a, Interval b) { return widen(a.lo - b.hi, a.hi - b.lo); }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
    const double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : c) {
        if (std::isnan(v)) return Interval::entire(); // 0 * inf
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return widen(lo, hi);
}

/// Division where the denominator interval must not contain zero.
/// `straddle_is_entire` selects the policy for denominators containing 0:
/// prover-internal evaluation wants the sound catch-all [-inf, inf], the
/// public ieval reports the condition to its caller.
inline Interval idiv(Interval a, Interval b, bool straddle_is_entire) {
    if (b.lo <= 0.0 && 0.0 <= b.hi) {
        if (straddle_is_entire) return Interval::entire();
        fail(Errc::DivisorStraddlesZero, "interval division: denominator contains zero");
    }
    const double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : c) {
        if (std::isnan(v)) return Interval::entire();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return widen(lo, hi);
}

namespace detail {
// x^k with directed rounding for x >= 0, by repeated widened multiplication.
inline double pow_nonneg_down(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = step_down(r * x);
    return std::max(r, 0.0);
}
inline double pow_nonneg_up(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = step_up(r * x);
    return r;
}
} // namespace detail

/// Integer power, exact envelope over sign cases (k >= 0).
inline Interval ipow(Interval a, int k) {
    if (k == 0) return Interval::point(1.0);
    if (k == 1) return a;
    if (k % 2 == 0) {
        const double m = a.mag();
        const double hi = detail::pow_nonneg_up(m, k);
        if (a.contains_zero()) return {0.0, hi};
        const double lo_abs = std::min(std::fabs(a.lo), std::fabs(a.hi));
        return {detail::pow_nonneg_down(lo_abs, k), hi};
    }
    // odd: monotone
    const double lo = a.lo >= 0.0 ? detail::pow_nonneg_down(a.lo, k) : -detail::pow_nonneg_up(-a.lo, k);
    const double hi = a.hi >= 0.0 ? detail::pow_nonneg_up(a.hi, k) : -detail::pow_nonneg_down(-a.hi, k);
    return {lo, hi};
}

inline Interval iexp(Interval a) {
    const double lo = detail::loose_down(std::exp(a.lo));
    const double hi = detail::loose_up(std::exp(a.hi));
    return {std::max(lo, 0.0), hi};
}

/// log over the positive part of a; caller guarantees a.hi > 0.
inline Interval ilog_pos(Interval a) {
    const double lo = a.lo <= 0.0 ? -std::numeric_limits<double>::infinity()
                                  : detail::loose_down(std::log(a.lo));
    return {lo, detail::loose_up(std::log(a.hi))};
}

namespace detail {
// Does [lo, hi] contain a point pi/2 + 2k*pi (sin max) / analogous shifts?
// The test inflates the interval slightly so a critical point can only be
// included spuriously (which merely widens the result), never missed.
inline bool contains_shifted_multiple(double lo, double hi, double shift) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double a = lo - shift;
    const double b = hi - shift;
    const double pad = 0x1.0p-40 * (1.0 + std::max(std::fabs(a), std::fabs(b)));
    const double k = std::ceil((a - pad) / two_pi);
    return k * two_pi <= b + pad;
}
} // namespace detail

inline Interval isin(Interval a) {
    constexpr double two_pi_lo = 6.283185307179586; // <= 2*pi
    if (!a.is_finite() || a.width() >= two_pi_lo) return {-1.0, 1.0};
    constexpr double half_pi = 1.5707963267948966;
    const double s1 = std::sin(a.lo);
    const double s2 = std::sin(a.hi);
    double lo = std::min(s1, s2);
    double hi = std::max(s1, s2);
    lo = detail::loose_down(lo);
    hi = detail::loose_up(hi);
    if (detail::contains_shifted_multiple(a.lo, a.hi, half_pi)) hi = 1.0;
    if (detail::contains_shifted_multiple(a.lo, a.hi, -half_pi)) lo = -1.0;
    return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

inline Interval icos(Interval a) {
    constexpr double two_pi_lo = 6.283185307179586;
    if (!a.is_finite() || a.width() >= two_pi_lo) return {-1.0, 1.0};
    constexpr double pi = 3.141592653589793;
    const double c1 = std::cos(a.lo);
    const double c2 = std::cos(a.hi);
    double lo = std::min(c1, c2);
    double hi = std::max(c1, c2);
    lo = detail::loose_down(lo);
    hi = detail::loose_up(hi);
    if (detail::contains_shifted_multiple(a.lo, a.hi, 0.0)) hi = 1.0;
    if (detail::contains_shifted_multiple(a.lo, a.hi, pi)) lo = -1.0;
    return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

inline Interval imin(Interval a, Interval b) { return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)}; }
inline Interval imax(Interval a, Interval b) { return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }

inline Interval intersect(Interval a, Interval b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

inline Interval hull(Interval a, Interval b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

/// Axis-aligned box: one closed interval per dimension.
struct Box {
    std::vector<Interval> dims;

    Box() = default;
    explicit Box(std::vector<Interval> d) : dims(std::move(d)) {}
    static Box point(const std::vector<double>& x) {
        Box b;
        b.dims.reserve(x.size());
        for (double v : x) b.dims.push_back(Interval::point(v));
        return b;
    }

    int size() const { return static_cast<int>(dims.size()); }
    Interval& operator[](int i) { return dims[static_cast<std::size_t>(i)]; }
    const Interval& operator[](int i) const { return dims[static_cast<std::size_t>(i)]; }

    bool contains(const std::vector<double>& x) const {
        if (x.size() != dims.size()) return false;
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (!dims[i].contains(x[i])) return false;
        return true;
    }

    std::vector<double> center() const {
        std::vector<double> c(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i) c[i] = dims[i].mid();
        return c;
    }

    Box concat(const Box& other) const {
        Box b = *this;
        b.dims.insert(b.dims.end(), other.dims.begin(), other.dims.end());
        return b;
    }

    void check_valid() const {
        if (dims.empty()) fail(Errc::DegenerateDomain, "empty box");
        for (const Interval& d : dims)
            if (!(d.lo <= d.hi)) fail(Errc::DegenerateDomain, "box interval with lo > hi");
    }
};

} // namespace clbf

#endif
