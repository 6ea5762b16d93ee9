#ifndef IETK_MORPHISM_HPP
#define IETK_MORPHISM_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ietk/quadreal.hpp"
#include "ietk/words.hpp"

namespace ietk {

/// Square integer matrix of order 2 or 3 with exact entries.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n * n), Int(0)) {}

    static IntMatrix identity(int n);
    /// Rows separated by ';', entries by ',': "0,2,1;2,3,5;3,0,5".
    static IntMatrix parse(std::string_view text);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    int order() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i * n_ + j)]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i * n_ + j)]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& rhs) const = default;

    Int det() const;
    Int trace() const;
    bool nonnegative() const;
    bool positive() const;

    /// Lexicographic on the row-major entry list.
    bool lex_less(const IntMatrix& rhs) const;

    std::string to_string() const;

private:
    int n_;
    std::vector<Int> a_;
};

/// Non-erasing morphism: every letter maps to a nonempty word over the same
/// alphabet.
class Morphism {
public:
    Morphism(Alphabet alphabet, std::vector<std::string> images);

    /// "A->AC;B->BC;C->C" (ternary) or "0->01;1->0" (binary).
    static Morphism parse(std::string_view text);

    static Morphism identity(Alphabet a);

    Alphabet alphabet() const { return alphabet_; }
    const std::string& image(char letter) const;
    const std::vector<std::string>& images() const { return images_; }

    std::string to_string() const;

private:
    Alphabet alphabet_;
    std::vector<std::string> images_;
};

/// Row i counts the letters of each kind in the image of letter i.
IntMatrix incidence_matrix(const Morphism& m);

std::string image_of(const Morphism& m, std::string_view word);

/// Image of a pointed word; the mark stays immediately before the image of
/// the letter at index 0.
PointedWord apply(const Morphism& m, const PointedWord& w);

/// compose(phi, psi) maps a |-> phi(psi(a)); its incidence matrix is
/// M_psi * M_phi.
Morphism compose(const Morphism& phi, const Morphism& psi);

Morphism power(const Morphism& m, int p);

struct PrimitivityResult {
    bool primitive = false;
    int witness_power = 0; // minimal k with M^k entrywise positive
};

/// Positivity of some power M^k, searched up to k = 2 * n^2.
PrimitivityResult is_primitive(const Morphism& m);
PrimitivityResult is_primitive(const IntMatrix& m);

/// Normalized left action rho M / (rho M 1). DegenerateTransport if the
/// image vector vanishes.
std::vector<QuadReal> density_transport(const IntMatrix& m, std::span<const QuadReal> rho);

/// Window of the fixed point lim m^k(seed_left) | m^k(seed_right). Requires
/// m(seed_right) to start with seed_right and m(seed_left) to end with
/// seed_left; iterates until both sides hold at least min_len letters.
PointedWord fixed_point_window(const Morphism& m, char seed_left, char seed_right,
                               size_t min_len);

struct FixedPointSeed {
    int power = 1;
    char left = 0, right = 0;
};

/// Smallest power p <= max_power such that m^p admits a fixed-point seed pair,
/// scanning all letter pairs.
std::optional<FixedPointSeed> find_fixed_point_seed(const Morphism& m, int max_power);

} // namespace ietk

#endif
