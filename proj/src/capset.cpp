#include "ietk/capset.hpp"

#include <algorithm>

#include "ietk/monoid.hpp"

namespace ietk {

ConversionResult from_iet(const Iet3Params& p, const RealParam& x0) {
    if (p.closure != Closure::LeftClosed)
        fail(Errc::Unsupported, "conversion is defined for left-closed domains");
    Iet3Exact t = make_exact_iet(p);
    const QuadReal& start = exact_value(x0);
    if (!t.in_domain(start))
        fail(Errc::OutOfDomain, "starting point outside the exchanged interval");
    QuadReal denom = t.total() + t.beta(); // alpha + 2 beta + gamma
    ConversionResult r{(t.beta() + t.gamma()) / denom, t.total() / denom, start / denom};
    // Parameter bounds follow from positivity; a violation is a bug.
    bool ok = r.eps.sign() > 0 && compare(r.eps, QuadReal(1)) < 0;
    ok = ok && compare(r.eps, r.l) < 0 && compare(QuadReal(1) - r.eps, r.l) < 0;
    ok = ok && compare(r.l, QuadReal(1)) <= 0;
    ok = ok && (r.c - r.l).sign() < 0 && r.c.sign() >= 0;
    if (!ok)
        fail(Errc::ConversionBug, "normalized parameters violate their bounds");
    return r;
}

PointedWord CapSet::gap_word() const {
    if (origin_pos < 0)
        fail(Errc::OutOfDomain, "window does not contain the origin point");
    size_t origin = static_cast<size_t>(origin_pos);
    std::string right = gap_letters.substr(origin);
    std::string left = gap_letters.substr(0, origin);
    std::reverse(left.begin(), left.end());
    return PointedWord(Alphabet::Ternary, std::move(left), std::move(right));
}

CapSet generate(const ConversionResult& cp, const QuadReal& eta, long n_lo, long n_hi) {
    if (eta.sign() <= 0)
        fail(Errc::OutOfDomain, "eta must be positive");
    if (n_lo > n_hi)
        fail(Errc::OutOfDomain, "empty index range");
    CapSet out;
    out.n_lo = n_lo;
    out.n_hi = n_hi;
    // Walk c + n eps incrementally: the fractional part moves by eps mod 1.
    QuadReal shift = cp.c + cp.eps * QuadReal(Rational(Int(n_lo)));
    auto [k0, fr] = shift.floor_frac();
    Int k = k0;
    QuadReal eta_acc = eta * QuadReal(Rational(Int(n_lo)));
    const QuadReal one(1);
    const QuadReal break_a = cp.l - cp.eps;
    const QuadReal break_b = one - cp.eps;
    std::string pending_labels;
    for (long n = n_lo;; ++n) {
        if (compare(fr, cp.l) < 0) {
            out.indices.push_back(n);
            out.points.push_back(QuadReal(Rational(k)) + eta_acc);
            if (n == 0)
                out.origin_pos = static_cast<std::ptrdiff_t>(out.points.size()) - 1;
            // Gap to the right neighbour, read off the fractional position.
            char label;
            if (compare(fr, break_a) < 0)
                label = 'A';
            else if (compare(fr, break_b) < 0)
                label = 'B';
            else
                label = 'C';
            pending_labels += label;
        }
        if (n == n_hi)
            break;
        fr += cp.eps;
        if (compare(fr, one) >= 0) {
            fr -= one;
            k += 1;
        }
        eta_acc += eta;
    }
    if (!pending_labels.empty())
        pending_labels.pop_back(); // the last point has no right neighbour in range
    out.gap_letters = std::move(pending_labels);
    return out;
}

QuadReal tilde_T(const ConversionResult& cp, const QuadReal& x) {
    if (x.sign() < 0 || compare(x, cp.l) >= 0)
        fail(Errc::OutOfDomain, "point outside [0, l)");
    const QuadReal one(1);
    if (compare(x, cp.l - cp.eps) < 0)
        return x + cp.eps;
    if (compare(x, one - cp.eps) < 0)
        return x + cp.eps + cp.eps - one;
    return x + cp.eps - one;
}

namespace {

constexpr long kMaxScanRange = 20000000;

// Integer range [b_lo, b_hi] of lattice coordinates that can contribute a
// point of the selection to J.
bool lattice_coordinate_range(const CapParams& cp, const Interval& j, long& b_lo, long& b_hi) {
    if (j.empty() || cp.omega.empty())
        return false;
    QuadReal s = cp.eps + cp.eta;
    if (s.sign() == 0)
        fail(Errc::HypothesisFailed, "eps + eta must be nonzero");
    QuadReal q1 = (j.lo - cp.omega.hi) / s;
    QuadReal q2 = (j.hi - cp.omega.lo) / s;
    Int lo = (compare(q1, q2) < 0 ? q1 : q2).floor() - 1;
    Int hi = (compare(q1, q2) < 0 ? q2 : q1).floor() + 2;
    if (hi - lo > kMaxScanRange || !lo.fits_slong_p() || !hi.fits_slong_p())
        fail(Errc::BoundTooLarge, "selection scan range too large");
    b_lo = lo.get_si();
    b_hi = hi.get_si();
    return true;
}

// Integer values a admissible for a fixed b: a + b eta in J and a - b eps in omega.
Interval admissible_a(const CapParams& cp, const Interval& j, long b) {
    QuadReal b_eta = cp.eta * QuadReal(Rational(Int(b)));
    QuadReal b_eps = cp.eps * QuadReal(Rational(Int(b)));
    Interval from_j{j.lo - b_eta, j.hi - b_eta, j.lo_closed, j.hi_closed};
    Interval from_omega{cp.omega.lo + b_eps, cp.omega.hi + b_eps, cp.omega.lo_closed,
                        cp.omega.hi_closed};
    return from_j.intersect(from_omega);
}

} // namespace

Int count_in(const CapParams& cp, const Interval& j) {
    long b_lo, b_hi;
    if (!lattice_coordinate_range(cp, j, b_lo, b_hi))
        return 0;
    Int total = 0;
    for (long b = b_lo; b <= b_hi; ++b)
        total += count_integers(admissible_a(cp, j, b));
    return total;
}

std::vector<QuadReal> points_in(const CapParams& cp, const Interval& j) {
    std::vector<QuadReal> pts;
    long b_lo, b_hi;
    if (!lattice_coordinate_range(cp, j, b_lo, b_hi))
        return pts;
    for (long b = b_lo; b <= b_hi; ++b) {
        Interval rng = admissible_a(cp, j, b);
        if (rng.empty())
            continue;
        auto [flo, frlo] = rng.lo.floor_frac();
        Int first = flo;
        if (frlo.sign() != 0 || !rng.lo_closed)
            first += 1;
        auto [fhi, frhi] = rng.hi.floor_frac();
        Int last = fhi;
        if (frhi.sign() == 0 && !rng.hi_closed)
            last -= 1;
        QuadReal b_eta = cp.eta * QuadReal(Rational(Int(b)));
        for (Int a = first; a <= last; a += 1)
            pts.push_back(QuadReal(Rational(a)) + b_eta);
    }
    std::sort(pts.begin(), pts.end(), [](const QuadReal& x, const QuadReal& y) {
        return compare(x, y) < 0;
    });
    return pts;
}

namespace {

// lambda * (Z + eps Z) = Z + eps Z with |norm(lambda)| = 1.
bool is_compatible_unit(const QuadReal& lambda, const QuadReal& eps) {
    Rational n = lambda.norm();
    if (!(n == 1 || n == -1))
        return false;
    if (!z_module_coordinates(lambda, eps) || !z_module_coordinates(lambda * eps, eps))
        return false;
    return true;
}

bool same_point_lists(const std::vector<QuadReal>& xs, const std::vector<QuadReal>& ys) {
    if (xs.size() != ys.size())
        return false;
    for (size_t i = 0; i < xs.size(); ++i)
        if (!(xs[i] == ys[i]))
            return false;
    return true;
}

} // namespace

bool unit_scaling_check(const QuadReal& eps, const QuadReal& lambda, const Interval& omega,
                        const Interval& window) {
    if (eps.is_rational())
        fail(Errc::NotAUnit, "eps must be a quadratic irrational");
    if (lambda.is_rational() && !(QuadReal(1) == lambda || QuadReal(-1) == lambda))
        fail(Errc::NotAUnit, "lambda must be a quadratic unit");
    if (!is_compatible_unit(lambda, eps))
        fail(Errc::NotAUnit, "lambda does not preserve Z + eps Z with unit norm");
    QuadReal scale = lambda.conjugate();
    CapParams base{eps, -eps.conjugate(), omega};
    std::vector<QuadReal> lhs = points_in(base, window.scaled(QuadReal(1) / scale));
    for (QuadReal& x : lhs)
        x *= scale;
    std::sort(lhs.begin(), lhs.end(),
              [](const QuadReal& x, const QuadReal& y) { return compare(x, y) < 0; });
    CapParams scaled_window{eps, -eps.conjugate(), omega.scaled(lambda)};
    std::vector<QuadReal> rhs = points_in(scaled_window, window);
    return same_point_lists(lhs, rhs);
}

bool renorm_check(const QuadReal& eps_hat, const QuadReal& eta_hat, const Interval& omega_hat,
                  const Interval& window) {
    // Window-inflation identity from the unimodular lattice substitution
    // (a, b) -> (a, b - 2a): the value form picks up 1 - 2 eta and the
    // selection form 1 + 2 eps, so
    //   selection{eps, eta}((1+2 eps) W) = (1-2 eta) selection{eps', eta'}(W)
    // with eps' = eps/(1+2 eps) and eta' = eta/(1-2 eta).
    QuadReal d1 = QuadReal(1) + eps_hat + eps_hat;
    QuadReal d2 = QuadReal(1) - eta_hat - eta_hat;
    if (d1.sign() == 0 || d2.sign() == 0)
        fail(Errc::SingularRenorm, "renormalization denominators vanish");
    QuadReal scale = d2;
    CapParams lhs_params{eps_hat, eta_hat, omega_hat.scaled(d1)};
    std::vector<QuadReal> lhs = points_in(lhs_params, window);
    CapParams rhs_params{eps_hat / d1, eta_hat / d2, omega_hat};
    std::vector<QuadReal> rhs = points_in(rhs_params, window.scaled(QuadReal(1) / scale));
    for (QuadReal& x : rhs)
        x *= scale;
    std::sort(rhs.begin(), rhs.end(),
              [](const QuadReal& x, const QuadReal& y) { return compare(x, y) < 0; });
    return same_point_lists(lhs, rhs);
}

Int q_count(const QuadReal& eps, const QuadReal& eta, const Interval& j, const QuadReal& z) {
    CapParams cp{eps, eta, Interval::left_open(z - QuadReal(1), z)};
    return count_in(cp, j);
}

QuadReal q_count_bound(const QuadReal& eps, const QuadReal& eta) {
    QuadReal s = eps + eta;
    if (s.sign() == 0)
        fail(Errc::HypothesisFailed, "eps + eta must be nonzero");
    if (s.sign() < 0)
        s = -s;
    return (QuadReal(1) + QuadReal(1) / s) * QuadReal(2);
}

PnResult pn_experiment(const QuadReal& eps, const QuadReal& lambda, const Interval& omega,
                       int n_max, int samples) {
    if (eps.is_rational() || eps.sign() <= 0 || compare(eps, QuadReal(1)) >= 0)
        fail(Errc::HypothesisFailed, "eps must be a quadratic irrational in (0,1)");
    if (eps.conjugate().sign() >= 0)
        fail(Errc::HypothesisFailed, "the conjugate of eps must be negative");
    if (lambda.sign() <= 0 || compare(lambda, QuadReal(1)) >= 0)
        fail(Errc::HypothesisFailed, "lambda must lie in (0,1)");
    QuadReal big = lambda.conjugate();
    if (compare(big, QuadReal(1)) <= 0)
        fail(Errc::HypothesisFailed, "the conjugate of lambda must exceed 1");
    if (!is_compatible_unit(lambda, eps))
        fail(Errc::HypothesisFailed, "lambda is not a compatible unit");
    if (n_max < 0 || samples < 2)
        fail(Errc::OutOfDomain, "need n_max >= 0 and at least two samples");

    QuadReal eta = -eps.conjugate();
    CapParams cp{eps, eta, omega};
    QuadReal win_base = QuadReal(1) + eta + eta;

    PnResult res;
    // Bound carried through the window-inflation chain with the roles of the
    // two parameters swapped (the counted window sits on the value side).
    QuadReal d1 = QuadReal(1) + eta + eta;
    QuadReal d2 = QuadReal(1) - eps - eps;
    if (d1.sign() == 0 || d2.sign() == 0)
        fail(Errc::HypothesisFailed, "degenerate renormalization of the bound");
    QuadReal r_bound = q_count_bound(eta / d1, eps / d2);
    res.r_bound = r_bound.to_double();

    long max_diff = 0;
    QuadReal win_len = win_base;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Int> row;
        Int lo_count, hi_count;
        for (int s = 0; s < samples; ++s) {
            // Deterministic spread of base points, rational and irrational.
            QuadReal x = QuadReal(make_rational(7 * s - 3 * samples, 3));
            if (s % 2)
                x += eps * QuadReal(Rational(s));
            Int c = count_in(cp, Interval::left_open(x, x + win_len));
            if (row.empty()) {
                lo_count = hi_count = c;
            } else {
                lo_count = std::min(lo_count, c);
                hi_count = std::max(hi_count, c);
            }
            row.push_back(c);
        }
        Int spread = hi_count - lo_count;
        max_diff = std::max(max_diff, spread.get_si());
        res.counts.push_back(std::move(row));
        win_len *= big;
    }
    res.max_difference = max_diff;
    res.within_bound = compare(QuadReal(Rational(max_diff)), r_bound) <= 0;
    return res;
}

SelfSimilarResult selfsimilar_check(const Morphism& m, long gaps_to_check) {
    PrimitivityResult prim = is_primitive(m);
    if (!prim.primitive)
        fail(Errc::NotPrimitive, "self-similarity needs a primitive morphism");
    IntMatrix mat = incidence_matrix(m);
    std::optional<QuadReal> lambda = perron_root(mat);
    if (!lambda)
        fail(Errc::FieldMismatch, "dominant eigenvalue not in a quadratic field");
    std::optional<std::vector<QuadReal>> vec = eigenvector(mat, *lambda, false);
    if (!vec)
        fail(Errc::FieldMismatch, "no exact dominant eigenvector");
    std::vector<QuadReal> lengths = *vec;
    int flip = 0;
    for (const QuadReal& x : lengths) {
        if (x.sign() != 0) {
            flip = x.sign();
            break;
        }
    }
    if (flip < 0)
        for (QuadReal& x : lengths)
            x = -x;
    for (const QuadReal& x : lengths)
        if (x.sign() <= 0)
            fail(Errc::FieldMismatch, "dominant eigenvector is not positive");
    // Normalize the first length to 1.
    QuadReal unit = lengths[0];
    for (QuadReal& x : lengths)
        x /= unit;

    auto seed = find_fixed_point_seed(m, 1);
    if (!seed)
        fail(Errc::NotAFixedPointSeed, "no one-step fixed-point seed");

    size_t min_len = static_cast<size_t>(4 * gaps_to_check);
    for (int attempt = 0; attempt < 12; ++attempt, min_len *= 2) {
        PointedWord w = fixed_point_window(m, seed->left, seed->right, min_len);
        // Geometric points: t_0 = 0 and steps read off the letters.
        long left = w.left_size(), right = w.right_size();
        std::vector<QuadReal> pts;
        pts.reserve(static_cast<size_t>(left + right + 1));
        QuadReal acc(0);
        std::vector<QuadReal> left_part;
        for (long n = -1; n >= -left; --n) {
            acc -= lengths[static_cast<size_t>(letter_index(m.alphabet(), w.at(n)))];
            left_part.push_back(acc);
        }
        std::reverse(left_part.begin(), left_part.end());
        pts = std::move(left_part);
        acc = QuadReal(0);
        pts.push_back(acc);
        for (long n = 0; n < right; ++n) {
            acc += lengths[static_cast<size_t>(letter_index(m.alphabet(), w.at(n)))];
            pts.push_back(acc);
        }
        std::ptrdiff_t origin = left; // pts[origin] == 0, gap k is (pts[k], pts[k+1])
        long half = gaps_to_check / 2;
        if (origin - half < 0 || origin + (gaps_to_check - half) + 1 >= static_cast<long>(pts.size()))
            continue;
        // The scaled check region must stay inside the built extent.
        QuadReal lo_needed = *lambda * pts[static_cast<size_t>(origin - half)];
        QuadReal hi_needed = *lambda * pts[static_cast<size_t>(origin + (gaps_to_check - half) + 1)];
        if (compare(lo_needed, pts.front()) < 0 || compare(hi_needed, pts.back()) > 0)
            continue;

        auto less = [](const QuadReal& x, const QuadReal& y) { return compare(x, y) < 0; };
        auto index_le = [&](const QuadReal& x) {
            return std::upper_bound(pts.begin(), pts.end(), x, less) - pts.begin();
        };
        SelfSimilarResult res;
        res.lambda = *lambda;
        res.lengths = lengths;
        res.scaling_ok = true;
        res.gap_counts_ok = true;
        for (long g = -half; g < gaps_to_check - half; ++g) {
            // The letter at index g labels the gap (pts[origin+g], pts[origin+g+1]).
            size_t i = static_cast<size_t>(origin + g);
            QuadReal lo = *lambda * pts[i];
            QuadReal hi = *lambda * pts[i + 1];
            // The scaled point must itself belong to the set.
            auto it = std::lower_bound(pts.begin(), pts.end(), lo, less);
            if (it == pts.end() || !(*it == lo))
                res.scaling_ok = false;
            long count = static_cast<long>(index_le(hi) - index_le(lo));
            long img_len = static_cast<long>(m.image(w.at(g)).size());
            if (count != img_len)
                res.gap_counts_ok = false;
            ++res.gaps_checked;
        }
        return res;
    }
    fail(Errc::BoundTooLarge, "could not build a window covering the scaled region");
}

} // namespace ietk
