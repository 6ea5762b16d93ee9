#include "ietk/iet.hpp"

#include <cmath>

namespace ietk {

const char* to_string(IetClass::Kind k) {
    switch (k) {
    case IetClass::Periodic: return "Periodic";
    case IetClass::Degenerate: return "Degenerate";
    case IetClass::NonDegenerate: return "NonDegenerate";
    }
    return "?";
}

Iet3Exact::Iet3Exact(QuadReal alpha, QuadReal beta, QuadReal gamma, Closure closure)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)),
      closure_(closure) {
    if (alpha_.sign() <= 0 || beta_.sign() <= 0 || gamma_.sign() <= 0)
        fail(Errc::OutOfDomain, "interval lengths must be positive");
    ab_ = alpha_ + beta_;
    bc_ = beta_ + gamma_;
    total_ = ab_ + gamma_;
}

bool Iet3Exact::in_domain(const QuadReal& x) const {
    int lo = x.sign();
    int hi = compare(x, total_);
    if (closure_ == Closure::LeftClosed)
        return lo >= 0 && hi < 0;
    return lo > 0 && hi <= 0;
}

char Iet3Exact::letter_at(const QuadReal& x) const {
    if (!in_domain(x))
        fail(Errc::OutOfDomain, "point " + x.to_string() + " outside the exchanged interval");
    int ca = compare(x, alpha_);
    int cab = compare(x, ab_);
    if (closure_ == Closure::LeftClosed) {
        if (ca < 0)
            return 'A';
        return cab < 0 ? 'B' : 'C';
    }
    if (ca <= 0)
        return 'A';
    return cab <= 0 ? 'B' : 'C';
}

QuadReal Iet3Exact::apply(const QuadReal& x) const {
    switch (letter_at(x)) {
    case 'A': return x + bc_;
    case 'B': return x - alpha_ + gamma_;
    default: return x - ab_;
    }
}

QuadReal Iet3Exact::inverse(const QuadReal& x) const {
    if (!in_domain(x))
        fail(Errc::OutOfDomain, "point " + x.to_string() + " outside the exchanged interval");
    // Images sit in order T(I_C) < T(I_B) < T(I_A) with lengths gamma, beta, alpha.
    int cg = compare(x, gamma_);
    int cbc = compare(x, bc_);
    bool in_c_img, in_b_img;
    if (closure_ == Closure::LeftClosed) {
        in_c_img = cg < 0;
        in_b_img = !in_c_img && cbc < 0;
    } else {
        in_c_img = cg <= 0;
        in_b_img = !in_c_img && cbc <= 0;
    }
    if (in_c_img)
        return x + ab_;
    if (in_b_img)
        return x + alpha_ - gamma_;
    return x - bc_;
}

Iet3Exact make_exact_iet(const Iet3Params& p) {
    return Iet3Exact(exact_value(p.alpha), exact_value(p.beta), exact_value(p.gamma), p.closure);
}

namespace {

// Float twin of Iet3Exact for Approx parameters. Membership ties resolve
// toward the lower interval.
struct Iet3Approx {
    double alpha, beta, gamma, ab, bc, total;
    Closure closure;

    Iet3Approx(const Iet3Params& p)
        : alpha(approx_value(p.alpha)), beta(approx_value(p.beta)), gamma(approx_value(p.gamma)),
          closure(p.closure) {
        if (alpha <= 0 || beta <= 0 || gamma <= 0)
            fail(Errc::OutOfDomain, "interval lengths must be positive");
        ab = alpha + beta;
        bc = beta + gamma;
        total = ab + gamma;
    }

    bool in_domain(double x) const {
        return closure == Closure::LeftClosed ? (x >= 0 && x < total) : (x > 0 && x <= total);
    }

    // Ties at a float breakpoint resolve toward the lower interval.
    char letter_at(double x) const {
        if (!in_domain(x))
            fail(Errc::OutOfDomain, "point outside the exchanged interval");
        if (x <= alpha)
            return 'A';
        return x <= ab ? 'B' : 'C';
    }

    double apply(double x) const {
        switch (letter_at(x)) {
        case 'A': return x + bc;
        case 'B': return x - alpha + gamma;
        default: return x - ab;
        }
    }

    double inverse(double x) const {
        if (!in_domain(x))
            fail(Errc::OutOfDomain, "point outside the exchanged interval");
        if (x <= gamma)
            return x + ab;
        if (x <= bc)
            return x + alpha - gamma;
        return x - bc;
    }
};

} // namespace

RealParam t3_apply(const Iet3Params& p, const RealParam& x) {
    if (p.all_exact() && is_exact(x))
        return make_exact_iet(p).apply(exact_value(x));
    Iet3Approx t(p);
    return Approx{t.apply(approx_value(x)), 0.0};
}

RealParam t3_inverse(const Iet3Params& p, const RealParam& x) {
    if (p.all_exact() && is_exact(x))
        return make_exact_iet(p).inverse(exact_value(x));
    Iet3Approx t(p);
    return Approx{t.inverse(approx_value(x)), 0.0};
}

namespace {

template <typename Engine, typename Point>
void code_orbit(const Engine& t, const Point& x0, long n_lo, long n_hi, std::string& left,
                std::string& right, std::vector<Point>& points) {
    if (n_lo > 0 || n_hi < 0)
        fail(Errc::OutOfDomain, "coding range must contain index 0");
    points.assign(static_cast<size_t>(n_hi - n_lo + 1), x0);
    size_t origin = static_cast<size_t>(-n_lo);
    Point x = x0;
    for (long n = 0; n < n_hi; ++n) {
        x = t.apply(x);
        points[origin + static_cast<size_t>(n) + 1] = x;
    }
    x = x0;
    for (long n = 0; n > n_lo; --n) {
        x = t.inverse(x);
        points[origin - static_cast<size_t>(-n) - 1] = x;
    }
    right.clear();
    left.clear();
    for (size_t i = origin; i < points.size(); ++i)
        right += t.letter_at(points[i]);
    for (size_t i = origin; i-- > 0;)
        left += t.letter_at(points[i]);
}

} // namespace

OrbitWindow t3_code(const Iet3Params& p, const RealParam& x0, long n_lo, long n_hi) {
    std::string left, right;
    if (p.all_exact() && is_exact(x0)) {
        std::vector<QuadReal> points;
        Iet3Exact t = make_exact_iet(p);
        code_orbit(t, exact_value(x0), n_lo, n_hi, left, right, points);
        return OrbitWindow{PointedWord(Alphabet::Ternary, std::move(left), std::move(right)),
                           n_lo, n_hi, std::move(points), {}, false};
    }
    std::vector<double> points;
    Iet3Approx t(p);
    code_orbit(t, approx_value(x0), n_lo, n_hi, left, right, points);
    return OrbitWindow{PointedWord(Alphabet::Ternary, std::move(left), std::move(right)),
                       n_lo, n_hi, {}, std::move(points), true};
}

PointedWord t3_code_word(const Iet3Params& p, const RealParam& x0, long n_lo, long n_hi) {
    if (n_lo > 0 || n_hi < 0)
        fail(Errc::OutOfDomain, "coding range must contain index 0");
    if (!(p.all_exact() && is_exact(x0)))
        return t3_code(p, x0, n_lo, n_hi).word;
    Iet3Exact t = make_exact_iet(p);
    std::string left, right;
    right.reserve(static_cast<size_t>(n_hi + 1));
    left.reserve(static_cast<size_t>(-n_lo));
    QuadReal x = exact_value(x0);
    right += t.letter_at(x);
    for (long n = 0; n < n_hi; ++n) {
        x = t.apply(x);
        right += t.letter_at(x);
    }
    x = exact_value(x0);
    for (long n = 0; n > n_lo; --n) {
        x = t.inverse(x);
        left += t.letter_at(x);
    }
    return PointedWord(Alphabet::Ternary, std::move(left), std::move(right));
}

PointedWord t2_code(const Iet2Params& p, long n_lo, long n_hi) {
    if (n_lo > 0 || n_hi < 0)
        fail(Errc::OutOfDomain, "coding range must contain index 0");
    if (is_exact(p.slope) && is_exact(p.intercept)) {
        const QuadReal& a = exact_value(p.slope);
        const QuadReal& x0 = exact_value(p.intercept);
        if (a.sign() <= 0 || compare(a, QuadReal(1)) >= 0)
            fail(Errc::OutOfDomain, "slope must lie in (0,1)");
        auto letter = [&](long n) -> char {
            QuadReal lo = a * QuadReal(Rational(Int(n))) + x0;
            QuadReal hi = lo + a;
            Int diff;
            if (p.kind == Iet2Params::Lower) {
                diff = hi.floor() - lo.floor();
            } else {
                // ceil(x) = -floor(-x)
                diff = (-lo).floor() - (-hi).floor();
            }
            return diff == 0 ? '0' : '1';
        };
        std::string left, right;
        for (long n = 0; n <= n_hi; ++n)
            right += letter(n);
        for (long n = -1; n >= n_lo; --n)
            left += letter(n);
        return PointedWord(Alphabet::Binary, std::move(left), std::move(right));
    }
    double a = approx_value(p.slope);
    double x0 = approx_value(p.intercept);
    auto letter = [&](long n) -> char {
        double lo = a * static_cast<double>(n) + x0;
        double hi = lo + a;
        double diff = p.kind == Iet2Params::Lower ? std::floor(hi) - std::floor(lo)
                                                  : std::ceil(hi) - std::ceil(lo);
        return diff == 0.0 ? '0' : '1';
    };
    std::string left, right;
    for (long n = 0; n <= n_hi; ++n)
        right += letter(n);
    for (long n = -1; n >= n_lo; --n)
        left += letter(n);
    return PointedWord(Alphabet::Binary, std::move(left), std::move(right));
}

PointedWord sigma_project(const PointedWord& w) {
    if (w.alphabet() != Alphabet::Ternary)
        fail(Errc::AlphabetMismatch, "sigma projection expects a ternary word");
    auto image = [](char c) -> std::string_view {
        switch (c) {
        case 'A': return "0";
        case 'B': return "01";
        default: return "1";
        }
    };
    std::string right;
    for (char c : w.right_store())
        right += image(c);
    std::string left; // nearest-to-mark first: reversed images
    for (char c : w.left_store()) {
        std::string_view im = image(c);
        left.append(im.rbegin(), im.rend());
    }
    return PointedWord(Alphabet::Binary, std::move(left), std::move(right));
}

Iet2Params sigma_image_params(const Iet3Params& p, const RealParam& x0) {
    if (!(p.all_exact() && is_exact(x0))) {
        double d = approx_value(p.alpha) + 2 * approx_value(p.beta) + approx_value(p.gamma);
        return Iet2Params{Approx{(approx_value(p.beta) + approx_value(p.gamma)) / d, 0.0},
                          Approx{approx_value(x0) / d, 0.0},
                          p.closure == Closure::LeftClosed ? Iet2Params::Lower
                                                           : Iet2Params::Upper};
    }
    const QuadReal& a = exact_value(p.alpha);
    const QuadReal& b = exact_value(p.beta);
    const QuadReal& g = exact_value(p.gamma);
    QuadReal denom = a + b + b + g;
    return Iet2Params{(b + g) / denom, exact_value(x0) / denom,
                      p.closure == Closure::LeftClosed ? Iet2Params::Lower : Iet2Params::Upper};
}

IetClass classify(const Iet3Params& p) {
    if (!p.all_exact())
        fail(Errc::ExactnessRequired, "classification needs exact parameters");
    Iet3Exact t = make_exact_iet(p); // validates positivity and field compatibility
    QuadReal u = t.alpha() + t.beta();
    QuadReal v = t.beta() + t.gamma();
    QuadReal w = t.total();
    auto [u1, u2] = u.rational_decompose();
    auto [v1, v2] = v.rational_decompose();
    auto [w1, w2] = w.rational_decompose();

    Rational det = u1 * v2 - u2 * v1;
    if (sgn(det) == 0) {
        // u and v are rationally dependent: a periodic triple. The ratio u/v is
        // a positive rational p/q, giving the witness K = q, L = -p.
        Rational ratio = (sgn(v2) != 0) ? Rational(u2 / v2) : Rational(u1 / v1);
        Int K(ratio.get_den());
        Int L(-ratio.get_num());
        return IetClass{IetClass::Periodic, K, L};
    }
    // Unique rational solution of K u + L v = w over the basis {1, sqrt(d)}.
    Rational K = (w1 * v2 - w2 * v1) / det;
    Rational L = (u1 * w2 - u2 * w1) / det;
    if (is_integer(K) && is_integer(L))
        return IetClass{IetClass::Degenerate, Int(K.get_num()), Int(L.get_num())};
    return IetClass{IetClass::NonDegenerate, 0, 0};
}

bool is_minimal(const Iet3Params& p) { return classify(p).kind != IetClass::Periodic; }

} // namespace ietk
