#ifndef IETK_CAPSET_HPP
#define IETK_CAPSET_HPP

#include <vector>

#include "ietk/iet.hpp"
#include "ietk/interval.hpp"
#include "ietk/morphism.hpp"

namespace ietk {

/// Cut-and-project data in the selection form: the point a + b*eta is kept
/// when a - b*eps falls in the acceptance window omega.
struct CapParams {
    QuadReal eps;
    QuadReal eta;
    Interval omega;
};

/// Normalized parameters of a three-interval exchange seen as a
/// cut-and-project set: eps in (0,1), max(eps, 1-eps) < l <= 1, and the
/// window (c-l, c] containing 0.
struct ConversionResult {
    QuadReal eps, l, c;

    Interval omega() const { return Interval::left_open(c - l, c); }
};

/// Rescales a left-closed three-interval exchange and its starting point to
/// the normalized cut-and-project form. The stated parameter bounds are
/// asserted; a violation is a bug, not an input error.
ConversionResult from_iet(const Iet3Params& p, const RealParam& x0);

/// Sorted selected points over a range of lattice indices, with the letter of
/// each gap ('A': eta, 'B': 1+2*eta, 'C': 1+eta).
struct CapSet {
    std::vector<long> indices;     // lattice index n of each point
    std::vector<QuadReal> points;  // strictly increasing
    std::string gap_letters;       // gap_letters[i] labels (points[i], points[i+1])
    long n_lo = 0, n_hi = 0;
    std::ptrdiff_t origin_pos = -1; // position of the point 0, when selected

    /// Gap labels as a pointed word, index 0 = the gap just right of 0.
    PointedWord gap_word() const;
};

/// Scans lattice indices n in [n_lo, n_hi] and keeps floor(c + n eps) + n eta
/// whenever the fractional part of c + n eps falls in [0, l).
CapSet generate(const ConversionResult& cp, const QuadReal& eta, long n_lo, long n_hi);

/// The exchange induced on the fractional parts over [0, l).
QuadReal tilde_T(const ConversionResult& cp, const QuadReal& x);

/// Exact number of selected points inside J.
Int count_in(const CapParams& cp, const Interval& j);

/// The selected points inside J, sorted.
std::vector<QuadReal> points_in(const CapParams& cp, const Interval& j);

/// Scaling by the conjugate of a compatible quadratic unit maps the point set
/// with window omega onto the one with window lambda*omega. Both sides are
/// enumerated inside `window` and compared exactly.
bool unit_scaling_check(const QuadReal& eps, const QuadReal& lambda, const Interval& omega,
                        const Interval& window);

/// Window-inflation identity: selection with window (1+2 eps)*omega equals
/// the (1-2 eta)-scaled set of the reparameterized selection. Exact
/// comparison inside `window`.
bool renorm_check(const QuadReal& eps_hat, const QuadReal& eta_hat, const Interval& omega_hat,
                  const Interval& window);

/// #(J intersected with the selection through window (z-1, z]).
Int q_count(const QuadReal& eps, const QuadReal& eta, const Interval& j, const QuadReal& z);

/// Closed-form bound 2(1 + 1/|s|) on count differences for sliding windows,
/// where s is the progression step of the selected points.
QuadReal q_count_bound(const QuadReal& eps, const QuadReal& eta);

struct PnResult {
    long max_difference = 0;  // over sampled pairs at equal n
    double r_bound = 0;       // the closed-form bound the counts must respect
    bool within_bound = false;
    std::vector<std::vector<Int>> counts; // counts[n][sample]
};

/// Window-count stability experiment: counts in (x, x + (1+2 eta) Lambda^n]
/// across sampled x for n <= n_max, with eta = -eps', Lambda = lambda'.
/// Hypotheses on eps and lambda are verified, never derived.
PnResult pn_experiment(const QuadReal& eps, const QuadReal& lambda, const Interval& omega,
                       int n_max, int samples);

struct SelfSimilarResult {
    bool scaling_ok = false;     // Lambda * Sigma stays inside Sigma
    bool gap_counts_ok = false;  // points in (Lambda t_n, Lambda t_{n+1}] = image length
    long gaps_checked = 0;
    QuadReal lambda;
    std::vector<QuadReal> lengths; // letter lengths from the right eigenvector
};

/// Builds the geometric representation of a fixed point of m (letter lengths
/// from the dominant right eigenvector) and checks its self-similarity.
SelfSimilarResult selfsimilar_check(const Morphism& m, long gaps_to_check);

} // namespace ietk

#endif
