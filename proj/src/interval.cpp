#include "ietk/interval.hpp"

namespace ietk {

Interval Interval::scaled(const QuadReal& s) const {
    int sg = s.sign();
    if (sg >= 0)
        return Interval{lo * s, hi * s, lo_closed, hi_closed};
    return Interval{hi * s, lo * s, hi_closed, lo_closed};
}

Interval Interval::intersect(const Interval& other) const {
    Interval r = *this;
    int cl = compare(other.lo, r.lo);
    if (cl > 0) {
        r.lo = other.lo;
        r.lo_closed = other.lo_closed;
    } else if (cl == 0) {
        r.lo_closed = r.lo_closed && other.lo_closed;
    }
    int ch = compare(other.hi, r.hi);
    if (ch < 0) {
        r.hi = other.hi;
        r.hi_closed = other.hi_closed;
    } else if (ch == 0) {
        r.hi_closed = r.hi_closed && other.hi_closed;
    }
    return r;
}

std::string Interval::to_string() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo.to_string();
    s += ",";
    s += hi.to_string();
    s += hi_closed ? ']' : ')';
    return s;
}

Int count_integers(const Interval& iv) {
    if (iv.empty())
        return 0;
    auto [flo, frlo] = iv.lo.floor_frac();
    // Smallest admissible integer.
    Int first = flo;
    bool lo_is_int = frlo.sign() == 0;
    if (!lo_is_int || !iv.lo_closed)
        first += 1;
    auto [fhi, frhi] = iv.hi.floor_frac();
    Int last = fhi;
    bool hi_is_int = frhi.sign() == 0;
    if (hi_is_int && !iv.hi_closed)
        last -= 1;
    if (last < first)
        return 0;
    return last - first + 1;
}

} // namespace ietk
