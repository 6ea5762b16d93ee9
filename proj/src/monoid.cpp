#include "ietk/monoid.hpp"

#include <algorithm>

namespace ietk {

const IntMatrix& e3_matrix() {
    static const IntMatrix e = [] {
        IntMatrix m = IntMatrix::from_rows({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
        // Antisymmetry and det 0, verified once on first use.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (m.at(i, j) != -m.at(j, i))
                    fail(Errc::ConversionBug, "E is not antisymmetric");
        if (sgn(m.det()) != 0)
            fail(Errc::ConversionBug, "E must be singular");
        return m;
    }();
    return e;
}

namespace {

IntMatrix negated(const IntMatrix& m) {
    IntMatrix out(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            out.at(i, j) = -m.at(i, j);
    return out;
}

void require_order3(const IntMatrix& m) {
    if (m.order() != 3)
        fail(Errc::OutOfDomain, "expected a 3x3 matrix");
}

// (1,-1,1) M
std::array<Int, 3> alternating_row_action(const IntMatrix& m) {
    std::array<Int, 3> v;
    for (int j = 0; j < 3; ++j)
        v[static_cast<size_t>(j)] = m.at(0, j) - m.at(1, j) + m.at(2, j);
    return v;
}

// Coordinate matrix of M restricted to span{(1,1,0),(0,1,1)}.
IntMatrix restricted_matrix(const IntMatrix& m) {
    IntMatrix r(2);
    r.at(0, 0) = m.at(0, 0) + m.at(0, 1);
    r.at(0, 1) = m.at(0, 1) + m.at(0, 2);
    r.at(1, 0) = m.at(2, 0) + m.at(2, 1);
    r.at(1, 1) = m.at(2, 1) + m.at(2, 2);
    return r;
}

} // namespace

int symplectic_like_check(const IntMatrix& m) {
    require_order3(m);
    const IntMatrix& e = e3_matrix();
    IntMatrix lhs = m * e * m.transpose();
    if (lhs == e)
        return 1;
    if (lhs == negated(e))
        return -1;
    return 0;
}

Int det3(const IntMatrix& m) {
    require_order3(m);
    return m.det();
}

bool left_eigen_check(const IntMatrix& m) {
    require_order3(m);
    auto v = alternating_row_action(m);
    Int d = m.det();
    bool plus = v[0] == d && v[1] == -d && v[2] == d;
    bool minus = v[0] == -d && v[1] == d && v[2] == -d;
    return plus || minus;
}

bool row_sum_check(const IntMatrix& m) {
    require_order3(m);
    Int rows13 = 0, row2 = 0;
    for (int j = 0; j < 3; ++j) {
        rows13 += m.at(0, j) + m.at(2, j);
        row2 += m.at(1, j);
    }
    Int d = m.det();
    Int diff = rows13 - row2;
    return diff == d || diff == -d;
}

LatticeChecks lattice_checks(const IntMatrix& m) {
    require_order3(m);
    LatticeChecks out;
    // Images of the basis vectors of the invariant plane stay in it iff they
    // are annihilated by (1,-1,1).
    Int x1_resid = (m.at(0, 0) + m.at(0, 1)) - (m.at(1, 0) + m.at(1, 1)) + (m.at(2, 0) + m.at(2, 1));
    Int x2_resid = (m.at(0, 1) + m.at(0, 2)) - (m.at(1, 1) + m.at(1, 2)) + (m.at(2, 1) + m.at(2, 2));
    out.subspace_ok = sgn(x1_resid) == 0 && sgn(x2_resid) == 0;
    out.delta = restricted_matrix(m).det();
    out.basis_ok = out.delta == 1 || out.delta == -1;
    // M(1,1,1)^T - delta det (1,1,1)^T must be of the shape (K, K+L, L).
    Int dd = out.delta * m.det();
    std::array<Int, 3> w;
    for (int i = 0; i < 3; ++i)
        w[static_cast<size_t>(i)] = m.at(i, 0) + m.at(i, 1) + m.at(i, 2) - dd;
    out.translate_ok = w[1] == w[0] + w[2];
    return out;
}

bool e3n_membership(const IntMatrix& m) {
    require_order3(m);
    if (!m.nonnegative())
        return false;
    Int d = m.det();
    if (d != 1 && d != -1)
        return false;
    return symplectic_like_check(m) != 0;
}

MatrixReport matrix_report(const IntMatrix& m) {
    MatrixReport r;
    r.det = det3(m);
    r.symplectic_sign = symplectic_like_check(m);
    LatticeChecks lc = lattice_checks(m);
    if (lc.basis_ok)
        r.delta = lc.delta;
    r.left_eigen_ok = left_eigen_check(m);
    r.row_sum_ok = row_sum_check(m);
    r.lattice_ok = lc.subspace_ok && lc.basis_ok && lc.translate_ok;
    r.e3n_member = e3n_membership(m);
    return r;
}

std::vector<IntMatrix> enumerate_e3n(int entry_bound) {
    if (entry_bound < 0 || entry_bound > 6)
        fail(Errc::BoundTooLarge, "entry bound must be between 0 and 6");
    std::vector<IntMatrix> out;
    long b = entry_bound;
    // Row 2 is determined by rows 1 and 3 and the sign s of the split
    // eigenvalue: m2j = m1j + m3j -+ s with the middle column getting +s.
    for (int s : {1, -1})
        for (long m11 = 0; m11 <= b; ++m11)
            for (long m12 = 0; m12 <= b; ++m12)
                for (long m13 = 0; m13 <= b; ++m13)
                    for (long m31 = 0; m31 <= b; ++m31)
                        for (long m32 = 0; m32 <= b; ++m32)
                            for (long m33 = 0; m33 <= b; ++m33) {
                                long m21 = m11 + m31 - s;
                                long m22 = m12 + m32 + s;
                                long m23 = m13 + m33 - s;
                                if (m21 < 0 || m21 > b || m22 < 0 || m22 > b || m23 < 0 ||
                                    m23 > b)
                                    continue;
                                IntMatrix m = IntMatrix::from_rows(
                                    {{m11, m12, m13}, {m21, m22, m23}, {m31, m32, m33}});
                                if (e3n_membership(m))
                                    out.push_back(std::move(m));
                            }
    std::sort(out.begin(), out.end(),
              [](const IntMatrix& a, const IntMatrix& b2) { return a.lex_less(b2); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IntMatrix> enumerate_e3n_naive(int entry_bound) {
    if (entry_bound < 0 || entry_bound > 3)
        fail(Errc::BoundTooLarge, "naive enumeration is capped at bound 3");
    std::vector<IntMatrix> out;
    long b = entry_bound;
    std::array<long, 9> e{};
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == 9) {
            IntMatrix m = IntMatrix::from_rows(
                {{e[0], e[1], e[2]}, {e[3], e[4], e[5]}, {e[6], e[7], e[8]}});
            if (e3n_membership(m))
                out.push_back(std::move(m));
            return;
        }
        for (long v = 0; v <= b; ++v) {
            e[static_cast<size_t>(idx)] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const IntMatrix& a, const IntMatrix& b2) { return a.lex_less(b2); });
    return out;
}

namespace {

// Squarefree part: disc = f^2 * d with d squarefree. Trial division; inputs
// beyond the guard raise NotInClass.
std::pair<Int, Int> squarefree_split(const Int& disc) {
    if (disc > Int("1000000000000"))
        fail(Errc::NotInClass, "discriminant too large for exact squarefree extraction");
    long n = disc.get_si();
    long f = 1, d = 1;
    for (long p = 2; p * p <= n; ++p) {
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (long i = 0; i < e / 2; ++i)
            f *= p;
        if (e % 2)
            d *= p;
    }
    d *= n;
    return {Int(f), Int(d)};
}

} // namespace

SpectrumReport spectrum_report(const IntMatrix& m) {
    require_order3(m);
    if (!left_eigen_check(m))
        fail(Errc::NotInClass, "matrix lacks the alternating left eigenvector");
    SpectrumReport r;
    auto v = alternating_row_action(m);
    r.split_eigenvalue = v[0]; // c with (1,-1,1) M = c (1,-1,1)
    // char(x) = (x - c)(x^2 - t x + q)
    r.quad_trace = m.trace() - r.split_eigenvalue;
    Int minors = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) + m.at(0, 0) * m.at(2, 2) -
                 m.at(0, 2) * m.at(2, 0) + m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
    r.quad_constant = minors - r.split_eigenvalue * r.quad_trace;
    if (r.split_eigenvalue * r.quad_constant != m.det())
        fail(Errc::NotInClass, "characteristic polynomial does not split off the eigenvalue");
    r.discriminant = r.quad_trace * r.quad_trace - 4 * r.quad_constant;
    if (sgn(r.discriminant) == 0) {
        r.rational_eigenvalues.push_back(Rational(r.split_eigenvalue));
        r.rational_eigenvalues.push_back(Rational(r.quad_trace) / 2);
        r.rational_eigenvalues.push_back(Rational(r.quad_trace) / 2);
    } else if (sgn(r.discriminant) > 0) {
        auto [f, d] = squarefree_split(r.discriminant);
        if (d == 1) {
            // Perfect square: all eigenvalues rational.
            Rational sq(f);
            r.rational_eigenvalues.push_back(Rational(r.split_eigenvalue));
            r.rational_eigenvalues.push_back((Rational(r.quad_trace) + sq) / 2);
            r.rational_eigenvalues.push_back((Rational(r.quad_trace) - sq) / 2);
            r.perron = QuadReal((Rational(r.quad_trace) + sq) / 2);
        } else {
            r.perron = QuadReal(Rational(r.quad_trace) / 2, Rational(f) / 2, d.get_si());
        }
    }
    return r;
}

namespace {

// Real roots of x^2 - t x + q over Q(sqrt(disc-part)); empty when disc < 0.
std::vector<QuadReal> quadratic_roots(const Int& t, const Int& q) {
    Int disc = t * t - 4 * q;
    std::vector<QuadReal> roots;
    if (sgn(disc) < 0)
        return roots;
    if (sgn(disc) == 0) {
        roots.emplace_back(Rational(t) / 2);
        return roots;
    }
    auto [f, d] = squarefree_split(disc);
    if (d == 1) {
        roots.emplace_back((Rational(t) + Rational(f)) / 2);
        roots.emplace_back((Rational(t) - Rational(f)) / 2);
    } else {
        roots.emplace_back(QuadReal(Rational(t) / 2, Rational(f) / 2, d.get_si()));
        roots.emplace_back(QuadReal(Rational(t) / 2, Rational(-f) / 2, d.get_si()));
    }
    return roots;
}

} // namespace

std::optional<QuadReal> perron_root(const IntMatrix& m) {
    std::vector<QuadReal> roots;
    if (m.order() == 2) {
        roots = quadratic_roots(m.trace(), m.det());
    } else {
        Int tr = m.trace();
        Int minors = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) +
                     m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0) +
                     m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
        Int d = m.det();
        // Integer root r of x^3 - tr x^2 + minors x - d; candidates divide d.
        std::optional<Int> root;
        auto is_root = [&](const Int& r) {
            return r * r * r - tr * r * r + minors * r - d == 0;
        };
        if (sgn(d) == 0 && is_root(0))
            root = Int(0);
        Int ad = abs(d);
        if (!root && sgn(ad) != 0 && ad <= 1000000) {
            long dl = ad.get_si();
            for (long v = 1; v * v <= dl && !root; ++v) {
                if (dl % v)
                    continue;
                for (long cand : {v, dl / v, -v, -dl / v}) {
                    if (is_root(Int(cand))) {
                        root = Int(cand);
                        break;
                    }
                }
            }
        }
        if (!root)
            return std::nullopt;
        // Synthetic division by (x - r).
        Int t = tr - *root;
        Int q = *root * *root - tr * *root + minors;
        roots = quadratic_roots(t, q);
        roots.emplace_back(Rational(*root));
    }
    if (roots.empty())
        return std::nullopt;
    QuadReal best = roots.front();
    for (const QuadReal& r : roots)
        if (compare(r, best) > 0)
            best = r;
    return best;
}

std::optional<std::vector<QuadReal>> eigenvector(const IntMatrix& m, const QuadReal& lambda,
                                                 bool left) {
    int n = m.order();
    // Rows of (M - lambda I), transposed for the left variant.
    std::vector<std::vector<QuadReal>> a(static_cast<size_t>(n),
                                         std::vector<QuadReal>(static_cast<size_t>(n), QuadReal(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int e = left ? m.at(j, i) : m.at(i, j);
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = QuadReal(Rational(e));
            if (i == j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -= lambda;
        }
    // Gaussian elimination tracking pivot columns.
    std::vector<int> pivot_col(static_cast<size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row)
            if (a[static_cast<size_t>(row)][static_cast<size_t>(col)].sign() != 0) {
                sel = row;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(a[static_cast<size_t>(sel)], a[static_cast<size_t>(rank)]);
        QuadReal inv = QuadReal(1) / a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int j = col; j < n; ++j)
            a[static_cast<size_t>(rank)][static_cast<size_t>(j)] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == rank)
                continue;
            QuadReal factor = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (factor.sign() == 0)
                continue;
            for (int j = col; j < n; ++j)
                a[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                    factor * a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        pivot_col[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    if (rank == n)
        return std::nullopt; // lambda is not an eigenvalue
    // Free column = first non-pivot; set it to 1 and back-substitute.
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int r = 0; r < rank; ++r)
        is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
    int free_col = 0;
    while (is_pivot[static_cast<size_t>(free_col)])
        ++free_col;
    std::vector<QuadReal> v(static_cast<size_t>(n), QuadReal(0));
    v[static_cast<size_t>(free_col)] = QuadReal(1);
    for (int r = 0; r < rank; ++r) {
        int pc = pivot_col[static_cast<size_t>(r)];
        v[static_cast<size_t>(pc)] = -a[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
    }
    return v;
}

} // namespace ietk
