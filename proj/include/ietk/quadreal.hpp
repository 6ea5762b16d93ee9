#ifndef IETK_QUADREAL_HPP
#define IETK_QUADREAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "ietk/numbers.hpp"

namespace ietk {

/// Exact element a + b*sqrt(d) of a real quadratic field (or of Q when b = 0).
///
/// d is a squarefree integer >= 2 whenever b != 0; rational values are kept in
/// canonical form with d = 0. Two operands of a binary operation must live in
/// the same field, or one of them must be rational; anything else raises
/// IncompatibleField rather than building a field tower.
///
/// All predicates (sign, comparisons, floor) are exact: they reduce to integer
/// comparisons and never consult floating point for correctness.
class QuadReal {
public:
    QuadReal() : a_(0), b_(0), d_(0) {}
    QuadReal(const Rational& a) : a_(a), b_(0), d_(0) {}
    QuadReal(const Int& a) : a_(Rational(a)), b_(0), d_(0) {}
    QuadReal(long a) : a_(Rational(a)), b_(0), d_(0) {}
    QuadReal(const Rational& a, const Rational& b, long d);

    /// sqrt(d) for squarefree d >= 2.
    static QuadReal square_root_of(long d);

    const Rational& rat_part() const { return a_; }
    const Rational& irr_part() const { return b_; }
    /// Field tag: 0 for rational values, else the squarefree radicand.
    long field() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    /// Exact sign in {-1, 0, +1} by case analysis on the signs of a, b and an
    /// integer comparison of a^2 against b^2 d.
    int sign() const;

    /// Galois conjugate a - b*sqrt(d); the identity on rationals.
    QuadReal conjugate() const;

    /// Field norm x * conj(x) = a^2 - b^2 d, always rational.
    Rational norm() const;

    /// Largest integer <= value, found by a float-seeded search whose every
    /// step is validated with exact sign tests.
    Int floor() const;
    /// (floor, fractional part) with 0 <= frac < 1 and floor + frac == value.
    std::pair<Int, QuadReal> floor_frac() const;

    /// (a, b) such that value = a + b*sqrt(d).
    std::pair<Rational, Rational> rational_decompose() const { return {a_, b_}; }

    double to_double() const;

    /// "p/q", "r/s*sqrt(d)", or "p/q+r/s*sqrt(d)" (minus sign folded in).
    std::string to_string() const;

    QuadReal operator-() const;
    QuadReal& operator+=(const QuadReal& rhs);
    QuadReal& operator-=(const QuadReal& rhs);
    QuadReal& operator*=(const QuadReal& rhs);
    QuadReal& operator/=(const QuadReal& rhs);

    friend QuadReal operator+(QuadReal lhs, const QuadReal& rhs) { return lhs += rhs; }
    friend QuadReal operator-(QuadReal lhs, const QuadReal& rhs) { return lhs -= rhs; }
    friend QuadReal operator*(QuadReal lhs, const QuadReal& rhs) { return lhs *= rhs; }
    friend QuadReal operator/(QuadReal lhs, const QuadReal& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadReal& x, const QuadReal& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    void canonicalize();
    // Common field of the two operands, or IncompatibleField.
    static long joint_field(const QuadReal& x, const QuadReal& y);

    Rational a_, b_;
    long d_;
};

inline int sign(const QuadReal& x) { return x.sign(); }

/// sign(x - y) as an exact three-way comparison.
int compare(const QuadReal& x, const QuadReal& y);

inline bool operator<(const QuadReal& x, const QuadReal& y) { return compare(x, y) < 0; }
inline bool operator<=(const QuadReal& x, const QuadReal& y) { return compare(x, y) <= 0; }
inline bool operator>(const QuadReal& x, const QuadReal& y) { return compare(x, y) > 0; }
inline bool operator>=(const QuadReal& x, const QuadReal& y) { return compare(x, y) >= 0; }

/// Accepts "p/q", "sqrt(d)", "sqrtD", "r/s*sqrt(d)" and signed sums thereof,
/// e.g. "1/2+3/4*sqrt(2)", "2-sqrt(2)", "-sqrt(5)".
QuadReal parse_quadreal(std::string_view text);

/// Exact value or a float standing in for one; floats are accepted for
/// generation only and are rejected by classification-grade operations.
struct Approx {
    double value = 0.0;
    double tolerance = 0.0;
};

using RealParam = std::variant<QuadReal, Approx>;

inline bool is_exact(const RealParam& p) { return std::holds_alternative<QuadReal>(p); }

const QuadReal& exact_value(const RealParam& p); // ExactnessRequired on Approx
double approx_value(const RealParam& p);

/// If x lies in Z + e*Z, returns the integer coordinates (m, n) with
/// x = m + n*e. Requires e irrational in the same field as x.
std::optional<std::pair<Int, Int>> z_module_coordinates(const QuadReal& x, const QuadReal& e);

} // namespace ietk

#endif
