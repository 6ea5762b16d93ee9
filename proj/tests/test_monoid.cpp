#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ietk/monoid.hpp"
#include "ietk/morphism.hpp"

using namespace ietk;

namespace {

IntMatrix m_phi() { return IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}); }
IntMatrix m_xi() { return IntMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); }
IntMatrix m_phi0() { return IntMatrix::from_rows({{0, 1, 0}, {0, 2, 1}, {1, 0, 2}}); }
IntMatrix m_open() { return IntMatrix::from_rows({{0, 2, 1}, {2, 3, 5}, {3, 0, 5}}); }
IntMatrix m_ones() { return IntMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}); }

IntMatrix random_product(std::mt19937_64& eng, int max_len) {
    IntMatrix acc = IntMatrix::identity(3);
    int len = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(max_len));
    for (int i = 0; i < len; ++i) {
        switch (eng() % 3) {
        case 0: acc = acc * m_phi(); break;
        case 1: acc = acc * m_xi(); break;
        default: acc = acc * m_phi0(); break;
        }
    }
    return acc;
}

} // namespace

TEST_CASE("the alternating form matrix") {
    const IntMatrix& e = e3_matrix();
    CHECK(e == IntMatrix::from_rows({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(e.at(i, j) == -e.at(j, i));
    CHECK(sgn(e.det()) == 0);
}

TEST_CASE("matrix parsing") {
    CHECK(IntMatrix::parse("0,2,1;2,3,5;3,0,5") == m_open());
    CHECK(IntMatrix::parse("1,0;0,1") == IntMatrix::identity(2));
    CHECK_THROWS_AS(IntMatrix::parse("1,2;3"), Error);
    CHECK_THROWS_AS(IntMatrix::parse("1/2,0;0,1"), Error);
}

TEST_CASE("conjugation by the form") {
    CHECK(symplectic_like_check(IntMatrix::identity(3)) == 1);
    CHECK(symplectic_like_check(m_xi()) == -1);
    CHECK(symplectic_like_check(m_phi()) == 1);
    CHECK(symplectic_like_check(m_phi0()) == 1);
    CHECK(symplectic_like_check(m_open()) == 1);
    CHECK(symplectic_like_check(m_ones()) == 0);
}

TEST_CASE("determinants") {
    CHECK(det3(m_phi0()) == 1);
    CHECK(det3(m_xi()) == -1);
    CHECK(det3(m_open()) == 1);
    CHECK(det3(m_ones()) == 0);
}

TEST_CASE("alternating left eigenvector identity") {
    CHECK(left_eigen_check(m_phi0()));
    CHECK(left_eigen_check(m_phi()));
    CHECK(left_eigen_check(m_xi()));
    CHECK(!left_eigen_check(m_ones()));
}

TEST_CASE("row sum identity") {
    CHECK(row_sum_check(m_phi0())); // (1+3) - 3 = 1 = det
    CHECK(row_sum_check(IntMatrix::identity(3)));
    CHECK(row_sum_check(m_xi()));
}

TEST_CASE("lattice checks") {
    for (const IntMatrix& m : {m_phi(), m_xi(), m_phi0()}) {
        LatticeChecks lc = lattice_checks(m);
        CHECK(lc.subspace_ok);
        CHECK(lc.basis_ok);
        CHECK(lc.translate_ok);
    }
    LatticeChecks id = lattice_checks(IntMatrix::identity(3));
    CHECK(id.delta == 1);
    CHECK((id.subspace_ok && id.basis_ok && id.translate_ok));
    CHECK(!lattice_checks(m_ones()).basis_ok);
}

TEST_CASE("monoid membership") {
    CHECK(e3n_membership(m_open()));
    CHECK(e3n_membership(m_phi()));
    CHECK(e3n_membership(m_xi()));
    CHECK(e3n_membership(m_phi0()));
    std::mt19937_64 eng(71);
    for (int i = 0; i < 100; ++i)
        CHECK(e3n_membership(random_product(eng, 8)));
    IntMatrix neg = IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, -1, 1}});
    CHECK(!e3n_membership(neg));
    CHECK(!e3n_membership(m_ones()));
}

TEST_CASE("sign multiplicativity over the form") {
    std::mt19937_64 eng(73);
    for (int i = 0; i < 60; ++i) {
        IntMatrix a = random_product(eng, 6), b = random_product(eng, 6);
        int sa = symplectic_like_check(a), sb = symplectic_like_check(b);
        REQUIRE(sa != 0);
        REQUIRE(sb != 0);
        CHECK(symplectic_like_check(a * b) == sa * sb);
    }
}

TEST_CASE("matrix report composes the predicates") {
    MatrixReport r = matrix_report(m_open());
    CHECK(r.det == 1);
    CHECK(r.symplectic_sign == 1);
    CHECK(r.e3n_member);
    CHECK(r.left_eigen_ok);
    CHECK(r.row_sum_ok);
    CHECK(r.lattice_ok);
    REQUIRE(r.delta.has_value());
    CHECK((*r.delta == 1 || *r.delta == -1));
}

TEST_CASE("enumeration at small bounds") {
    std::vector<IntMatrix> bound1 = enumerate_e3n(1);
    auto contains = [&](const IntMatrix& m) {
        return std::any_of(bound1.begin(), bound1.end(), [&](const IntMatrix& x) { return x == m; });
    };
    CHECK(contains(IntMatrix::identity(3)));
    CHECK(contains(m_xi()));
    for (const IntMatrix& m : bound1)
        CHECK(e3n_membership(m));
    CHECK_THROWS_AS(enumerate_e3n(7), Error);
}

TEST_CASE("structured enumeration matches the brute-force scan") {
    for (int bound = 0; bound <= 2; ++bound) {
        std::vector<IntMatrix> fast = enumerate_e3n(bound);
        std::vector<IntMatrix> slow = enumerate_e3n_naive(bound);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i)
            CHECK(fast[i] == slow[i]);
    }
}

TEST_CASE("membership implies the whole identity chain") {
    std::vector<IntMatrix> members = enumerate_e3n(3);
    CHECK(members.size() > 0);
    for (const IntMatrix& m : members) {
        CHECK(left_eigen_check(m));
        CHECK(row_sum_check(m));
        LatticeChecks lc = lattice_checks(m);
        CHECK(lc.subspace_ok);
        CHECK(lc.basis_ok);
        CHECK(lc.translate_ok);
    }
}

TEST_CASE("products of enumerated members stay in the monoid") {
    std::vector<IntMatrix> members = enumerate_e3n(2);
    std::mt19937_64 eng(79);
    for (int i = 0; i < 50; ++i) {
        const IntMatrix& a = members[eng() % members.size()];
        const IntMatrix& b = members[eng() % members.size()];
        IntMatrix p = a * b;
        Int d = p.det();
        CHECK((d == 1 || d == -1));
        CHECK(symplectic_like_check(p) != 0);
    }
}

TEST_CASE("order-2 specialization: unimodular iff form-compatible") {
    IntMatrix e2 = IntMatrix::from_rows({{0, 1}, {-1, 0}});
    IntMatrix e2neg = IntMatrix::from_rows({{0, -1}, {1, 0}});
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b)
            for (long c = 0; c <= 5; ++c)
                for (long d = 0; d <= 5; ++d) {
                    IntMatrix m = IntMatrix::from_rows({{a, b}, {c, d}});
                    IntMatrix f = m * e2 * m.transpose();
                    bool symp = (f == e2) || (f == e2neg);
                    Int dm = m.det();
                    bool uni = dm == 1 || dm == -1;
                    CHECK(symp == uni);
                }
}

TEST_CASE("spectrum of the worked matrices") {
    SpectrumReport r0 = spectrum_report(m_phi0());
    CHECK(r0.split_eigenvalue == 1);
    CHECK(r0.quad_trace == 3);
    CHECK(r0.quad_constant == 1);
    CHECK(r0.discriminant == 5);
    REQUIRE(r0.perron.has_value());
    CHECK(*r0.perron == QuadReal(make_rational(3, 2), make_rational(1, 2), 5));

    SpectrumReport rid = spectrum_report(IntMatrix::identity(3));
    REQUIRE(rid.rational_eigenvalues.size() == 3);
    for (const Rational& ev : rid.rational_eigenvalues)
        CHECK(ev == Rational(1));

    SpectrumReport rxi = spectrum_report(m_xi());
    REQUIRE(rxi.rational_eigenvalues.size() == 3);
    int pos = 0, negs = 0;
    for (const Rational& ev : rxi.rational_eigenvalues)
        (ev == Rational(1) ? pos : negs)++;
    CHECK(pos == 2);
    CHECK(negs == 1);

    CHECK_THROWS_AS(spectrum_report(m_ones()), Error);
}

TEST_CASE("dominant roots and eigenvectors") {
    IntMatrix fib = IntMatrix::from_rows({{1, 1}, {1, 2}});
    auto lam = perron_root(fib);
    REQUIRE(lam.has_value());
    QuadReal tau(make_rational(1, 2), make_rational(1, 2), 5);
    CHECK(*lam == tau * tau);
    auto v = eigenvector(fib, *lam, false);
    REQUIRE(v.has_value());
    CHECK((*v)[1] / (*v)[0] == tau);

    auto lam0 = perron_root(m_phi0());
    REQUIRE(lam0.has_value());
    CHECK(*lam0 == tau * tau);
    auto left = eigenvector(m_phi0(), *lam0, true);
    REQUIRE(left.has_value());
    CHECK((*left)[1] / (*left)[0] == tau);
    CHECK((*left)[2] / (*left)[0] == tau * tau);

    CHECK(!eigenvector(fib, QuadReal(7), false).has_value());
}
