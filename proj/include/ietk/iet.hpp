#ifndef IETK_IET_HPP
#define IETK_IET_HPP

#include <array>
#include <vector>

#include "ietk/quadreal.hpp"
#include "ietk/words.hpp"

namespace ietk {

/// Whether subinterval boundaries are taken as [x, y) or (x, y].
enum class Closure { LeftClosed, RightClosed };

/// Exchange of three intervals of lengths alpha, beta, gamma under the
/// order-reversing permutation: the images appear as T(I_C) < T(I_B) < T(I_A).
struct Iet3Params {
    RealParam alpha, beta, gamma;
    Closure closure = Closure::LeftClosed;

    static Iet3Params exact(QuadReal a, QuadReal b, QuadReal g,
                            Closure cl = Closure::LeftClosed) {
        return Iet3Params{RealParam(std::move(a)), RealParam(std::move(b)),
                          RealParam(std::move(g)), cl};
    }

    bool all_exact() const {
        return is_exact(alpha) && is_exact(beta) && is_exact(gamma);
    }
};

/// Rotation-style exchange of two intervals on the unit interval, encoded as
/// a mechanical-word generator.
struct Iet2Params {
    enum Kind { Lower, Upper };
    RealParam slope;     // in (0, 1)
    RealParam intercept; // in [0, 1)
    Kind kind = Lower;
};

/// Classification of three-interval parameters: Periodic carries nonzero
/// integers with K(alpha+beta) + L(beta+gamma) = 0; Degenerate carries the
/// unique integers with alpha+beta+gamma = K(alpha+beta) + L(beta+gamma).
struct IetClass {
    enum Kind { Periodic, Degenerate, NonDegenerate };
    Kind kind = NonDegenerate;
    Int K = 0, L = 0;

    bool operator==(const IetClass& o) const {
        if (kind != o.kind)
            return false;
        if (kind == NonDegenerate)
            return true;
        return K == o.K && L == o.L;
    }
};

const char* to_string(IetClass::Kind k);

/// Orbit coding window together with the exact orbit points it was read from.
struct OrbitWindow {
    PointedWord word;
    long n_lo = 0, n_hi = 0;
    std::vector<QuadReal> points;       // points[i] = T^(n_lo+i)(x0), exact path
    std::vector<double> approx_points;  // approx path
    bool approx = false;                // generated from float parameters
};

/// Exact three-interval exchange engine over one quadratic field.
class Iet3Exact {
public:
    Iet3Exact(QuadReal alpha, QuadReal beta, QuadReal gamma, Closure closure);

    const QuadReal& alpha() const { return alpha_; }
    const QuadReal& beta() const { return beta_; }
    const QuadReal& gamma() const { return gamma_; }
    const QuadReal& total() const { return total_; }
    Closure closure() const { return closure_; }

    bool in_domain(const QuadReal& x) const;
    /// 'A', 'B' or 'C' of the subinterval containing x.
    char letter_at(const QuadReal& x) const;
    QuadReal apply(const QuadReal& x) const;
    QuadReal inverse(const QuadReal& x) const;

private:
    QuadReal alpha_, beta_, gamma_;
    QuadReal ab_, bc_, total_; // alpha+beta, beta+gamma, alpha+beta+gamma
    Closure closure_;
};

Iet3Exact make_exact_iet(const Iet3Params& p); // ExactnessRequired on Approx params

RealParam t3_apply(const Iet3Params& p, const RealParam& x);
RealParam t3_inverse(const Iet3Params& p, const RealParam& x);

/// Codes the orbit of x0 over indices n_lo..n_hi (n_lo <= 0 <= n_hi);
/// negative indices walk the explicit inverse exchange.
OrbitWindow t3_code(const Iet3Params& p, const RealParam& x0, long n_lo, long n_hi);

/// Same letters as t3_code without retaining orbit points.
PointedWord t3_code_word(const Iet3Params& p, const RealParam& x0, long n_lo, long n_hi);

/// Mechanical word: floor differences for Lower, ceiling differences for Upper.
PointedWord t2_code(const Iet2Params& p, long n_lo, long n_hi);

/// A -> 0, B -> 01, C -> 1. On a three-interval coding this produces the
/// two-interval coding of the same point under the merged exchange.
PointedWord sigma_project(const PointedWord& w);

/// The two-interval parameters whose coding matches sigma_project of a coding
/// of p: slope (beta+gamma)/(alpha+2 beta+gamma), intercept x0 scaled the
/// same way, kind according to the closure convention.
Iet2Params sigma_image_params(const Iet3Params& p, const RealParam& x0);

/// Exact classification; parameters must be exact and share a field.
IetClass classify(const Iet3Params& p);

/// True iff the parameters are not periodic.
bool is_minimal(const Iet3Params& p);

} // namespace ietk

#endif
