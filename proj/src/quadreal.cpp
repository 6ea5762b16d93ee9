#include "ietk/quadreal.hpp"

#include <cctype>
#include <cmath>

namespace ietk {

namespace {

bool is_squarefree(long d) {
    if (d < 2)
        return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0)
            return false;
    }
    return true;
}

} // namespace

QuadReal::QuadReal(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (sgn(b_) != 0 && !is_squarefree(d_))
        fail(Errc::ParseError, "radicand " + std::to_string(d) + " is not squarefree >= 2");
    canonicalize();
}

QuadReal QuadReal::square_root_of(long d) { return QuadReal(Rational(0), Rational(1), d); }

void QuadReal::canonicalize() {
    if (sgn(b_) == 0)
        d_ = 0;
}

long QuadReal::joint_field(const QuadReal& x, const QuadReal& y) {
    if (x.d_ == 0)
        return y.d_;
    if (y.d_ == 0 || y.d_ == x.d_)
        return x.d_;
    fail(Errc::IncompatibleField, "mixed radicands sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                                      std::to_string(y.d_) + ")");
}

int QuadReal::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // Opposite signs: |a| vs |b| sqrt(d) decided by squaring.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    if (c == 0)
        return 0; // unreachable for squarefree d >= 2
    return c > 0 ? sa : sb;
}

int compare(const QuadReal& x, const QuadReal& y) { return (x - y).sign(); }

QuadReal QuadReal::conjugate() const {
    QuadReal r = *this;
    r.b_ = -r.b_;
    r.canonicalize();
    return r;
}

Rational QuadReal::norm() const { return a_ * a_ - b_ * b_ * d_; }

QuadReal QuadReal::operator-() const {
    QuadReal r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadReal& QuadReal::operator+=(const QuadReal& rhs) {
    long d = joint_field(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    d_ = d;
    canonicalize();
    return *this;
}

QuadReal& QuadReal::operator-=(const QuadReal& rhs) {
    long d = joint_field(*this, rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    d_ = d;
    canonicalize();
    return *this;
}

QuadReal& QuadReal::operator*=(const QuadReal& rhs) {
    long d = joint_field(*this, rhs);
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    canonicalize();
    return *this;
}

QuadReal& QuadReal::operator/=(const QuadReal& rhs) {
    long d = joint_field(*this, rhs);
    Rational n = rhs.norm();
    if (sgn(n) == 0) {
        if (sgn(rhs.a_) == 0 && sgn(rhs.b_) == 0)
            fail(Errc::DivByZero, "division by zero");
        fail(Errc::DivByZero, "division by element of zero norm"); // unreachable in a real field
    }
    // x / y = x * conj(y) / norm(y)
    Rational a = (a_ * rhs.a_ - b_ * rhs.b_ * d) / n;
    Rational b = (b_ * rhs.a_ - a_ * rhs.b_) / n;
    a_ = a;
    b_ = b;
    d_ = d;
    canonicalize();
    return *this;
}

double QuadReal::to_double() const {
    double v = a_.get_d();
    if (sgn(b_) != 0)
        v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

Int QuadReal::floor() const {
    if (is_rational())
        return rat_floor(a_);
    // Float estimate seeds the search; exact sign tests settle it.
    double est = to_double();
    Int k;
    if (std::isfinite(est)) {
        mpz_set_d(k.get_mpz_t(), std::floor(est));
    } else {
        k = rat_floor(a_);
    }
    Int step = 1;
    while ((*this - QuadReal(Rational(k))).sign() < 0) {
        k -= step;
        step *= 2;
    }
    // Here k <= value; expand upward to bracket, then bisect.
    Int hi = k + 1;
    step = 1;
    while ((*this - QuadReal(Rational(hi))).sign() >= 0) {
        hi += step;
        step *= 2;
    }
    while (hi - k > 1) {
        Int mid = (hi + k) / 2;
        if ((*this - QuadReal(Rational(mid))).sign() >= 0)
            k = mid;
        else
            hi = mid;
    }
    return k;
}

std::pair<Int, QuadReal> QuadReal::floor_frac() const {
    Int k = floor();
    return {k, *this - QuadReal(Rational(k))};
}

std::string QuadReal::to_string() const {
    if (is_rational())
        return ietk::to_string(a_);
    std::string irr;
    if (b_ == 1)
        irr = "sqrt(" + std::to_string(d_) + ")";
    else if (b_ == -1)
        irr = "-sqrt(" + std::to_string(d_) + ")";
    else
        irr = ietk::to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
    if (sgn(a_) == 0)
        return irr;
    if (sgn(b_) > 0)
        return ietk::to_string(a_) + "+" + irr;
    return ietk::to_string(a_) + irr; // '-' comes with the coefficient
}

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }

    Rational parse_unsigned_rational() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            fail(Errc::ParseError, "expected number in '" + std::string(text) + "'");
        Int num(std::string(text.substr(start, pos - start)), 10);
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart)
                fail(Errc::ParseError, "expected denominator in '" + std::string(text) + "'");
            Int den(std::string(text.substr(dstart, pos - dstart)), 10);
            return make_rational(num, den);
        }
        return Rational(num);
    }

    long parse_radicand() {
        bool paren = eat('(');
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            fail(Errc::ParseError, "expected radicand in '" + std::string(text) + "'");
        long d = std::stol(std::string(text.substr(start, pos - start)));
        if (paren && !eat(')'))
            fail(Errc::ParseError, "missing ')' in '" + std::string(text) + "'");
        return d;
    }

    // term := rational ['*' sqrt] | sqrt
    QuadReal parse_term(int sign) {
        Rational coef(sign);
        bool have_coef = false;
        if (peek_digit()) {
            coef *= parse_unsigned_rational();
            have_coef = true;
        }
        if (eat_word("sqrt")) {
            long d = parse_radicand();
            return QuadReal(Rational(0), coef, d);
        }
        if (have_coef && eat('*')) {
            if (!eat_word("sqrt"))
                fail(Errc::ParseError, "expected sqrt after '*' in '" + std::string(text) + "'");
            long d = parse_radicand();
            return QuadReal(Rational(0), coef, d);
        }
        if (!have_coef)
            fail(Errc::ParseError, "expected term in '" + std::string(text) + "'");
        return QuadReal(coef);
    }

    QuadReal parse() {
        int sign = eat('-') ? -1 : (eat('+'), 1);
        QuadReal value = parse_term(sign);
        for (;;) {
            skip_ws();
            if (eat('+'))
                value += parse_term(1);
            else if (eat('-'))
                value += parse_term(-1);
            else
                break;
        }
        skip_ws();
        if (pos != text.size())
            fail(Errc::ParseError, "trailing input in '" + std::string(text) + "'");
        return value;
    }
};

} // namespace

QuadReal parse_quadreal(std::string_view text) {
    Parser p{text};
    return p.parse();
}

const QuadReal& exact_value(const RealParam& p) {
    if (const QuadReal* q = std::get_if<QuadReal>(&p))
        return *q;
    fail(Errc::ExactnessRequired, "operation requires exact parameters");
}

double approx_value(const RealParam& p) {
    if (const QuadReal* q = std::get_if<QuadReal>(&p))
        return q->to_double();
    return std::get<Approx>(p).value;
}

std::optional<std::pair<Int, Int>> z_module_coordinates(const QuadReal& x, const QuadReal& e) {
    if (e.is_rational())
        fail(Errc::HypothesisFailed, "Z-module generator must be irrational");
    if (!x.is_rational() && x.field() != e.field())
        return std::nullopt;
    // x = m + n e  <=>  x_b = n e_b and x_a = m + n e_a over the basis {1, sqrt(d)}.
    Rational n = x.irr_part() / e.irr_part();
    if (!is_integer(n))
        return std::nullopt;
    Rational m = x.rat_part() - n * e.rat_part();
    if (!is_integer(m))
        return std::nullopt;
    return std::make_pair(Int(m.get_num()), Int(n.get_num()));
}

} // namespace ietk
