#ifndef IETK_INTERVAL_HPP
#define IETK_INTERVAL_HPP

#include <string>

#include "ietk/quadreal.hpp"

namespace ietk {

/// Bounded interval over exact reals with explicit closure flags on each end.
/// Half-openness is load-bearing throughout the cut-and-project machinery and
/// is never approximated.
struct Interval {
    QuadReal lo, hi;
    bool lo_closed = false;
    bool hi_closed = true;

    /// (lo, hi]
    static Interval left_open(const QuadReal& lo, const QuadReal& hi) {
        return Interval{lo, hi, false, true};
    }
    /// [lo, hi)
    static Interval right_open(const QuadReal& lo, const QuadReal& hi) {
        return Interval{lo, hi, true, false};
    }
    /// [lo, hi]
    static Interval closed(const QuadReal& lo, const QuadReal& hi) {
        return Interval{lo, hi, true, true};
    }

    bool empty() const {
        int c = compare(lo, hi);
        if (c > 0)
            return true;
        if (c == 0)
            return !(lo_closed && hi_closed);
        return false;
    }

    bool contains(const QuadReal& x) const {
        int cl = compare(x, lo);
        if (cl < 0 || (cl == 0 && !lo_closed))
            return false;
        int ch = compare(x, hi);
        if (ch > 0 || (ch == 0 && !hi_closed))
            return false;
        return true;
    }

    QuadReal length() const { return hi - lo; }

    /// {x + t | x in this}
    Interval translated(const QuadReal& t) const { return Interval{lo + t, hi + t, lo_closed, hi_closed}; }

    /// {s x | x in this}; a negative scale swaps and re-flags the endpoints.
    Interval scaled(const QuadReal& s) const;

    Interval intersect(const Interval& other) const;

    std::string to_string() const;
};

/// Exact number of integers contained in the interval.
Int count_integers(const Interval& iv);

} // namespace ietk

#endif
