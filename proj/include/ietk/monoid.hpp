#ifndef IETK_MONOID_HPP
#define IETK_MONOID_HPP

#include <optional>
#include <vector>

#include "ietk/morphism.hpp"
#include "ietk/quadreal.hpp"

namespace ietk {

/// The fixed antisymmetric matrix E = (0 1 1; -1 0 1; -1 -1 0).
const IntMatrix& e3_matrix();

/// +1 or -1 when M E M^T equals +E or -E exactly; 0 when neither.
int symplectic_like_check(const IntMatrix& m);

Int det3(const IntMatrix& m);

/// (1,-1,1) M = +/- det(M) (1,-1,1), exact with either sign.
bool left_eigen_check(const IntMatrix& m);

/// Sum of rows 1 and 3 minus the sum of row 2 equals +/- det(M).
bool row_sum_check(const IntMatrix& m);

struct LatticeChecks {
    bool subspace_ok = false;  // M maps span{(1,1,0),(0,1,1)} into itself
    bool basis_ok = false;     // restricted 2x2 coordinate matrix has det +/-1
    bool translate_ok = false; // M(1,1,1)^T lies in delta*det*(1,1,1)^T + lattice
    Int delta = 0;             // det of the restricted coordinate matrix
};

LatticeChecks lattice_checks(const IntMatrix& m);

/// Entries >= 0, M E M^T = +/-E, and |det M| = 1.
bool e3n_membership(const IntMatrix& m);

struct MatrixReport {
    Int det = 0;
    int symplectic_sign = 0;   // 0 = identity fails with either sign
    std::optional<Int> delta;  // present when the restricted det is +/-1
    bool left_eigen_ok = false;
    bool row_sum_ok = false;
    bool lattice_ok = false;
    bool e3n_member = false;
};

MatrixReport matrix_report(const IntMatrix& m);

/// All monoid members with entries <= entry_bound, via the row-2
/// parameterization (rows 1 and 3 free, row 2 forced by the sign of the split
/// eigenvalue), filtered by the full predicate; sorted lexicographically.
std::vector<IntMatrix> enumerate_e3n(int entry_bound);

/// Brute-force enumeration over all 9 entries; cross-validation oracle for
/// small bounds.
std::vector<IntMatrix> enumerate_e3n_naive(int entry_bound);

/// Characteristic polynomial split (x - c)(x^2 - t x + q) with c the
/// eigenvalue on (1,-1,1); reports the quadratic factor and its dominant root.
struct SpectrumReport {
    Int split_eigenvalue = 0; // c = +/- det
    Int quad_trace = 0;       // t
    Int quad_constant = 0;    // q
    Int discriminant = 0;     // t^2 - 4q
    std::optional<QuadReal> perron;              // (t + sqrt(disc))/2 when disc > 0
    std::vector<Rational> rational_eigenvalues;  // all roots when disc is a perfect square
};

SpectrumReport spectrum_report(const IntMatrix& m); // NotInClass when the split fails

/// Dominant real eigenvalue when it lives in a rational or quadratic field:
/// splits an integer root off the characteristic polynomial and solves the
/// remaining quadratic. Empty when no such factorization exists.
std::optional<QuadReal> perron_root(const IntMatrix& m);

/// Nonzero solution of v M = lambda v (left) or M v = lambda v (right), exact
/// over the field of lambda; empty if lambda is not an eigenvalue.
std::optional<std::vector<QuadReal>> eigenvector(const IntMatrix& m, const QuadReal& lambda,
                                                 bool left);

} // namespace ietk

#endif
