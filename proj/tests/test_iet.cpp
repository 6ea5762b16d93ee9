#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "ietk/iet.hpp"

using namespace ietk;

namespace {

QuadReal qr(long num, long den = 1) { return QuadReal(make_rational(num, den)); }
QuadReal sqrt2() { return QuadReal::square_root_of(2); }

Iet3Params params(const QuadReal& a, const QuadReal& b, const QuadReal& g,
                  Closure cl = Closure::LeftClosed) {
    return Iet3Params::exact(a, b, g, cl);
}

// Independent classification oracle: scan integer pairs |K|,|L| <= 10 against
// the defining equations before trusting the linear solver.
IetClass brute_classify(const QuadReal& a, const QuadReal& b, const QuadReal& g) {
    QuadReal u = a + b, v = b + g, w = a + b + g;
    for (long K = -10; K <= 10; ++K)
        for (long L = -10; L <= 10; ++L) {
            if (K == 0 || L == 0)
                continue;
            if ((u * qr(K) + v * qr(L)).sign() == 0)
                return IetClass{IetClass::Periodic, K, L};
        }
    for (long K = -10; K <= 10; ++K)
        for (long L = -10; L <= 10; ++L)
            if (compare(u * qr(K) + v * qr(L), w) == 0)
                return IetClass{IetClass::Degenerate, K, L};
    return IetClass{IetClass::NonDegenerate, 0, 0};
}

} // namespace

TEST_CASE("three-interval exchange on sample points") {
    Iet3Params p = params(qr(1), sqrt2(), qr(2));
    CHECK(exact_value(t3_apply(p, RealParam(QuadReal(0)))) == sqrt2() + qr(2));
    CHECK(exact_value(t3_apply(p, RealParam(qr(1)))) == qr(2));

    Iet3Params unit = params(qr(1), qr(1), qr(1));
    CHECK(exact_value(t3_apply(unit, RealParam(qr(5, 2)))) == qr(1, 2));

    CHECK_THROWS_AS(t3_apply(p, RealParam(qr(-1))), Error);
    CHECK_THROWS_AS(t3_apply(p, RealParam(qr(5) + sqrt2())), Error);
}

TEST_CASE("inverse branches") {
    Iet3Params p = params(qr(1), sqrt2(), qr(2));
    // image of I_C is [0, 2): undone by adding alpha + beta
    CHECK(exact_value(t3_inverse(p, RealParam(qr(0)))) == qr(1) + sqrt2());
    CHECK(exact_value(t3_inverse(p, RealParam(qr(3, 2)))) == qr(5, 2) + sqrt2());
    // image of I_B is [2, 2+sqrt2): undone by adding alpha - gamma
    CHECK(exact_value(t3_inverse(p, RealParam(qr(2)))) == qr(1));
}

TEST_CASE("the exchange is a bijection") {
    Iet3Params p = params(qr(1), sqrt2(), sqrt2());
    Iet3Exact t = make_exact_iet(p);
    std::mt19937_64 eng(41);
    for (int i = 0; i < 1000; ++i) {
        QuadReal x = t.total() * QuadReal(make_rational(static_cast<long>(eng() % 997), 997));
        CHECK(t.inverse(t.apply(x)) == x);
        CHECK(t.apply(t.inverse(x)) == x);
    }
}

TEST_CASE("image intervals tile the domain") {
    Iet3Params p = params(qr(2, 3), sqrt2(), qr(1) + sqrt2());
    Iet3Exact t = make_exact_iet(p);
    // T shifts I_A by beta+gamma, I_B by gamma-alpha, I_C by -(alpha+beta).
    QuadReal c_lo = qr(0), c_hi = t.gamma();
    QuadReal b_lo = t.alpha() + (t.gamma() - t.alpha()), b_hi = t.alpha() + t.beta() + (t.gamma() - t.alpha());
    QuadReal a_lo = t.beta() + t.gamma(), a_hi = t.total();
    CHECK(c_hi == b_lo);
    CHECK(b_hi == a_lo);
    CHECK(c_lo == qr(0));
    CHECK(a_hi == t.total());
}

TEST_CASE("orbit coding with exact points") {
    Iet3Params p = params(qr(1), sqrt2(), sqrt2());
    OrbitWindow w = t3_code(p, RealParam(QuadReal(0)), -50, 50);
    REQUIRE(w.points.size() == 101);
    CHECK(!w.approx);
    Iet3Exact t = make_exact_iet(p);
    for (size_t i = 0; i < w.points.size(); ++i) {
        CHECK(t.in_domain(w.points[i]));
        CHECK(w.word.at(w.n_lo + static_cast<long>(i)) == t.letter_at(w.points[i]));
        if (i + 1 < w.points.size())
            CHECK(t.apply(w.points[i]) == w.points[i + 1]);
    }
    CHECK(t3_code_word(p, RealParam(QuadReal(0)), -50, 50) == w.word);
}

TEST_CASE("coding windows agree when re-seeded from an orbit point") {
    // disjoint ranges computed independently must glue to the sequential word
    Iet3Params p = params(qr(1), sqrt2(), sqrt2());
    OrbitWindow whole = t3_code(p, RealParam(qr(1, 3)), -60, 60);
    const QuadReal& mid = whole.points[90]; // orbit point at index 30
    PointedWord tail = t3_code_word(p, RealParam(mid), 0, 30);
    for (long k = 0; k <= 30; ++k)
        CHECK(tail.at(k) == whole.word.at(30 + k));
    PointedWord head = t3_code_word(p, RealParam(mid), -30, 0);
    for (long k = -30; k <= 0; ++k)
        CHECK(head.at(k) == whole.word.at(30 + k));
}

TEST_CASE("periodic parameters give a periodic coding") {
    Iet3Params p = params(qr(1), qr(2), qr(3));
    OrbitWindow w = t3_code(p, RealParam(QuadReal(0)), 0, 30);
    // exact cycle length of the orbit of 0
    std::optional<long> cycle;
    for (size_t i = 1; i < w.points.size() && !cycle; ++i)
        if (w.points[i] == w.points[0])
            cycle = static_cast<long>(i);
    REQUIRE(cycle.has_value());
    CHECK(*cycle == 6);
    for (long n = 0; n + *cycle <= 30; ++n)
        CHECK(w.word.at(n) == w.word.at(n + *cycle));
}

TEST_CASE("single-index coding returns the letter of the starting interval") {
    Iet3Params p = params(qr(1), qr(1), qr(1));
    OrbitWindow w = t3_code(p, RealParam(qr(3, 2)), 0, 0);
    CHECK(w.word.to_string() == "|B");
}

TEST_CASE("approximate parameters are flagged and match the exact letters") {
    Iet3Params exact = params(qr(1), sqrt2(), sqrt2());
    Iet3Params approx{RealParam(Approx{1.0, 0}), RealParam(Approx{std::sqrt(2.0), 0}),
                      RealParam(Approx{std::sqrt(2.0), 0}), Closure::LeftClosed};
    // the orbit of 1/3 never meets a breakpoint exactly
    OrbitWindow we = t3_code(exact, RealParam(qr(1, 3)), -200, 200);
    OrbitWindow wa = t3_code(approx, RealParam(Approx{1.0 / 3.0, 0}), -200, 200);
    CHECK(wa.approx);
    CHECK(we.word.to_string() == wa.word.to_string());
}

TEST_CASE("float breakpoint ties resolve toward the lower interval") {
    // The backward orbit of 0 lands exactly on the middle discontinuity:
    // the inverse of 0 is alpha + beta. Exact left-closed coding reads C
    // there; the float path deliberately resolves the tie downward to B.
    Iet3Params exact = params(qr(1), sqrt2(), sqrt2());
    Iet3Params approx{RealParam(Approx{1.0, 0}), RealParam(Approx{std::sqrt(2.0), 0}),
                      RealParam(Approx{std::sqrt(2.0), 0}), Closure::LeftClosed};
    OrbitWindow we = t3_code(exact, RealParam(QuadReal(0)), -1, 0);
    OrbitWindow wa = t3_code(approx, RealParam(Approx{0.0, 0}), -1, 0);
    CHECK(we.points[0] == qr(1) + sqrt2());
    CHECK(we.word.at(-1) == 'C');
    CHECK(wa.word.at(-1) == 'B');
}

TEST_CASE("right-closed domain convention") {
    Iet3Params p = params(qr(1), sqrt2(), qr(2), Closure::RightClosed);
    Iet3Exact t = make_exact_iet(p);
    CHECK_THROWS_AS(t.letter_at(qr(0)), Error);
    CHECK(t.letter_at(qr(1)) == 'A');             // (0, 1] is closed on the right
    CHECK(t.letter_at(t.total()) == 'C');
    CHECK(t.apply(t.total()) == qr(2));           // x - alpha - beta
    Iet3Params q = params(qr(1), sqrt2(), qr(2), Closure::LeftClosed);
    CHECK(make_exact_iet(q).letter_at(qr(1)) == 'B');
}

TEST_CASE("mechanical words match the floor-difference formula") {
    Iet2Params p{sqrt2() - qr(1), QuadReal(0), Iet2Params::Lower};
    PointedWord w = t2_code(p, 0, 10);
    QuadReal alpha = sqrt2() - qr(1);
    for (long n = 0; n <= 10; ++n) {
        Int expect = (alpha * qr(n + 1)).floor() - (alpha * qr(n)).floor();
        CHECK((w.at(n) == '1') == (expect == 1));
    }
}

TEST_CASE("rational slope gives the periodic mechanical word") {
    Iet2Params p{qr(1, 3), QuadReal(0), Iet2Params::Lower};
    PointedWord w = t2_code(p, 0, 8);
    CHECK(w.to_string() == "|001001001");
}

TEST_CASE("upper and lower kinds differ exactly on boundary hits") {
    QuadReal alpha = sqrt2() - qr(1);
    PointedWord lower = t2_code({alpha, QuadReal(0), Iet2Params::Lower}, -10, 10);
    PointedWord upper = t2_code({alpha, QuadReal(0), Iet2Params::Upper}, -10, 10);
    for (long n = -10; n <= 10; ++n) {
        bool hit = (n == 0) || (n == -1); // the orbit of 0 meets the break only there
        CHECK((lower.at(n) != upper.at(n)) == hit);
    }
}

TEST_CASE("mechanical word via orbit membership cross-check") {
    // letters from the fractional-part membership test rather than floors
    QuadReal alpha = sqrt2() - qr(1);
    QuadReal x0 = qr(1, 3);
    PointedWord w = t2_code({alpha, x0, Iet2Params::Lower}, -100, 100);
    QuadReal one_minus = qr(1) - alpha;
    for (long n = -100; n <= 100; ++n) {
        auto [k, fr] = (alpha * qr(n) + x0).floor_frac();
        char expect = compare(fr, one_minus) < 0 ? '0' : '1';
        CHECK(w.at(n) == expect);
    }
}

TEST_CASE("sigma projection concatenates letter images") {
    CHECK(sigma_project(PointedWord::parse("|ABC", Alphabet::Ternary)).to_string() == "|0011");
    CHECK(sigma_project(PointedWord::parse("B|A", Alphabet::Ternary)).to_string() == "01|0");
    CHECK(sigma_project(PointedWord::parse("|", Alphabet::Ternary)).to_string() == "|");
    CHECK_THROWS_AS(sigma_project(PointedWord::parse("|01", Alphabet::Binary)), Error);
}

TEST_CASE("sigma projection equals the merged two-interval coding") {
    Iet3Params p = params(qr(1), sqrt2(), sqrt2());
    RealParam x0{qr(1, 2)};
    PointedWord u = t3_code_word(p, x0, -250, 250);
    PointedWord projected = sigma_project(u);
    Iet2Params sp = sigma_image_params(p, x0);
    PointedWord direct = t2_code(sp, -projected.left_size(), projected.right_size() - 1);
    CHECK(projected.to_string() == direct.to_string());
}

TEST_CASE("sigma projection matches the merged coding on right-closed domains") {
    Iet3Params p = params(qr(1), sqrt2(), sqrt2(), Closure::RightClosed);
    for (const RealParam& x0 : {RealParam(qr(1, 2)), RealParam(qr(1) + sqrt2())}) {
        PointedWord u = t3_code_word(p, x0, -150, 150);
        PointedWord projected = sigma_project(u);
        Iet2Params sp = sigma_image_params(p, x0);
        CHECK(sp.kind == Iet2Params::Upper);
        PointedWord direct = t2_code(sp, -projected.left_size(), projected.right_size() - 1);
        CHECK(projected.to_string() == direct.to_string());
    }
}

TEST_CASE("classification witnesses match the brute-force oracle") {
    struct Case {
        QuadReal a, b, g;
        IetClass expect;
    };
    std::vector<Case> cases = {
        {qr(1), sqrt2(), qr(2), IetClass{IetClass::Degenerate, -1, 2}},
        {qr(1), sqrt2(), sqrt2(), IetClass{IetClass::NonDegenerate, 0, 0}},
        {qr(1), qr(2), qr(3), IetClass{IetClass::Periodic, 5, -3}},
        {sqrt2(), sqrt2() + sqrt2(), sqrt2() * qr(3), IetClass{IetClass::Periodic, 5, -3}},
    };
    for (const Case& c : cases) {
        IetClass got = classify(params(c.a, c.b, c.g));
        IetClass oracle = brute_classify(c.a, c.b, c.g);
        CHECK(got.kind == oracle.kind);
        CHECK(got == c.expect);
        // the returned witness satisfies its defining equation exactly
        QuadReal u = c.a + c.b, v = c.b + c.g;
        if (got.kind == IetClass::Periodic)
            CHECK((u * QuadReal(Rational(got.K)) + v * QuadReal(Rational(got.L))).sign() == 0);
        if (got.kind == IetClass::Degenerate)
            CHECK(u * QuadReal(Rational(got.K)) + v * QuadReal(Rational(got.L)) == c.a + c.b + c.g);
    }
}

TEST_CASE("classification on random samples agrees with the oracle") {
    std::mt19937_64 eng(43);
    for (int i = 0; i < 300; ++i) {
        QuadReal a(make_rational(1 + static_cast<long>(eng() % 6), 1 + static_cast<long>(eng() % 2)),
                   make_rational(static_cast<long>(eng() % 5) - 2, 2), 2);
        QuadReal b(make_rational(1 + static_cast<long>(eng() % 6), 1), make_rational(static_cast<long>(eng() % 3) - 1, 1), 2);
        QuadReal g(make_rational(1 + static_cast<long>(eng() % 6), 1), make_rational(static_cast<long>(eng() % 3) - 1, 1), 2);
        if (a.sign() <= 0 || b.sign() <= 0 || g.sign() <= 0)
            continue;
        IetClass got = classify(params(a, b, g));
        IetClass oracle = brute_classify(a, b, g);
        QuadReal u = a + b, v = b + g, w = a + b + g;
        // The solver's witnesses must satisfy their defining equations.
        if (got.kind == IetClass::Periodic)
            CHECK((u * QuadReal(Rational(got.K)) + v * QuadReal(Rational(got.L))).sign() == 0);
        if (got.kind == IetClass::Degenerate)
            CHECK(u * QuadReal(Rational(got.K)) + v * QuadReal(Rational(got.L)) == w);
        // The oracle's scan is bounded: it confirms what it can reach. A
        // periodic triple with a large witness may look degenerate to it.
        if (oracle.kind == IetClass::Periodic)
            CHECK(got.kind == IetClass::Periodic);
        if (oracle.kind == IetClass::Degenerate)
            CHECK(got.kind != IetClass::NonDegenerate);
        if (oracle.kind == IetClass::Degenerate && got.kind == IetClass::Degenerate)
            CHECK(got == oracle);
        if (got.kind == IetClass::NonDegenerate)
            CHECK(oracle.kind == IetClass::NonDegenerate);
    }
}

TEST_CASE("classification is invariant under positive rational scaling") {
    std::mt19937_64 eng(47);
    std::vector<std::array<QuadReal, 3>> triples = {
        {qr(1), sqrt2(), qr(2)},
        {qr(1), sqrt2(), sqrt2()},
        {qr(1), qr(2), qr(3)},
    };
    for (const auto& t : triples) {
        IetClass base = classify(params(t[0], t[1], t[2]));
        for (int i = 0; i < 20; ++i) {
            QuadReal s = qr(1 + static_cast<long>(eng() % 9), 1 + static_cast<long>(eng() % 9));
            IetClass scaled = classify(params(t[0] * s, t[1] * s, t[2] * s));
            CHECK(scaled == base);
        }
    }
}

TEST_CASE("classification requires exact parameters") {
    Iet3Params p{RealParam(Approx{1.0, 0}), RealParam(QuadReal(1)), RealParam(QuadReal(1)),
                 Closure::LeftClosed};
    CHECK_THROWS_AS(classify(p), Error);
}

TEST_CASE("minimality") {
    CHECK(is_minimal(params(qr(1), sqrt2(), sqrt2())));
    CHECK(!is_minimal(params(qr(1), qr(2), qr(3))));
    CHECK(is_minimal(params(qr(1), sqrt2(), qr(2)))); // degenerate but aperiodic
}

TEST_CASE("aperiodic windows from different intercepts share factor sets") {
    Iet3Params p = params(qr(1), sqrt2(), sqrt2());
    QuadReal total = qr(1) + sqrt2() + sqrt2();
    const size_t n_max = 12;
    const long half = 3000 * static_cast<long>(n_max) / 2;
    PointedWord w1 = t3_code_word(p, RealParam(QuadReal(0)), -half, half);
    PointedWord w2 = t3_code_word(p, RealParam(total * QuadReal(make_rational(17, 64))), -half, half);
    auto lang1 = language_of(w1, n_max);
    auto lang2 = language_of(w2, n_max);
    for (size_t n = 1; n <= n_max; ++n)
        CHECK(lang1[n - 1].factors == lang2[n - 1].factors);
}

TEST_CASE("window complexity: full for non-degenerate, affine for degenerate") {
    Iet3Params nd = params(qr(1), sqrt2(), sqrt2());
    PointedWord w = t3_code_word(nd, RealParam(QuadReal(0)), -22500, 22500);
    auto profile = complexity_profile(w, 15);
    for (size_t n = 1; n <= 15; ++n)
        CHECK(profile[n - 1] == 2 * n + 1);

    Iet3Params dg = params(qr(1), sqrt2(), qr(2));
    PointedWord wd = t3_code_word(dg, RealParam(QuadReal(0)), -22500, 22500);
    auto pd = complexity_profile(wd, 15);
    long diff = static_cast<long>(pd[9]) - 10;
    for (size_t n = 10; n <= 15; ++n)
        CHECK(static_cast<long>(pd[n - 1]) - static_cast<long>(n) == diff);
}
