#ifndef IETK_PRESERVE_HPP
#define IETK_PRESERVE_HPP

#include <array>
#include <cstdint>
#include <string>

#include "ietk/iet.hpp"
#include "ietk/monoid.hpp"
#include "ietk/morphism.hpp"

namespace ietk {

/// Left action (alpha, beta, gamma) M: the parameters of the image word.
/// TransportOutOfCone when a component fails to stay positive.
std::array<QuadReal, 3> predicted_params(const IntMatrix& m, const std::array<QuadReal, 3>& abc);

/// Column coefficients of the transport, e.g. "a+b+g" per output component.
std::array<std::string, 3> symbolic_transport(const IntMatrix& m);

/// Outcome of the empirical image-language test. The harness never claims
/// "preserving": the verdict is Falsified with a concrete witness, or
/// Consistent at the tested scale.
struct PreservationReport {
    std::string morphism_text;
    MatrixReport matrix;
    int trials = 0;
    bool falsified = false;
    std::string witness;        // offending factor or violation description
    int witness_trial = -1;
    size_t checked_factor_length = 0;
    std::array<std::string, 3> parameter_transport;
    std::uint64_t seed = 0;
};

/// For each trial: sample exact non-degenerate parameters over Q(sqrt(2)),
/// code a window, push it through m, and test the image against the language
/// predicted by the transported parameters (factor containment and the 2n+1
/// complexity ceiling). The language window spans language_scale * factor_len
/// letters.
PreservationReport test_preservation(const Morphism& m, int trials, long window_len,
                                     size_t factor_len, std::uint64_t seed = 20240207,
                                     long language_scale = 3000);

/// Determinant dichotomy on the image parameters: unimodular matrices must
/// map non-degenerate samples to non-degenerate images; singular matrices in
/// the class degenerate every sample, witnessed by exact lattice integers
/// K, L with M(1,1,1)^T = M(K,K+L,L)^T.
struct DegeneracyTransportReport {
    Int det = 0;
    bool singular_case = false;
    Int K = 0, L = 0; // witness for the singular case
    int samples = 0;
    bool all_ok = false;
    std::string detail;
};

DegeneracyTransportReport degeneracy_transport_check(const IntMatrix& m, int samples = 8,
                                                     std::uint64_t seed = 20240211);

/// Fixed point of some power of a primitive morphism, tested for containment
/// in the language of the left-eigenvector parameters.
struct FixedPointWordReport {
    int power = 0;
    char seed_left = 0, seed_right = 0;
    bool contained = false;
    std::string offending;
    std::array<QuadReal, 3> params; // left dominant eigenvector
    size_t checked_factor_length = 0;
};

FixedPointWordReport fixed_point_3iet_check(const Morphism& m, size_t factor_len = 15,
                                            long language_scale = 3000);

} // namespace ietk

#endif
