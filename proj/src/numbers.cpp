#include "ietk/numbers.hpp"

#include <cctype>

namespace ietk {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::IncompatibleField: return "IncompatibleField";
    case Errc::DivByZero: return "DivByZero";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::WindowTooShort: return "WindowTooShort";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::IncompleteLanguage: return "IncompleteLanguage";
    case Errc::ExactnessRequired: return "ExactnessRequired";
    case Errc::DegenerateTransport: return "DegenerateTransport";
    case Errc::NotAFixedPointSeed: return "NotAFixedPointSeed";
    case Errc::NoFixedPointFound: return "NoFixedPointFound";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::NotInClass: return "NotInClass";
    case Errc::ConversionBug: return "ConversionBug";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::SingularRenorm: return "SingularRenorm";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::TransportOutOfCone: return "TransportOutOfCone";
    case Errc::ParseError: return "ParseError";
    case Errc::Unsupported: return "Unsupported";
    }
    return "UnknownError";
}

Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        fail(Errc::DivByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Int rat_floor(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int rat_ceil(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational parse_rational(std::string_view text) {
    size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string body(text.substr(begin, end - begin));
    if (body.empty())
        fail(Errc::ParseError, "empty rational literal");
    for (size_t i = 0; i < body.size(); ++i) {
        char ch = body[i];
        bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
                  ((ch == '-' || ch == '+') && i == 0);
        if (!ok)
            fail(Errc::ParseError, "bad rational literal '" + body + "'");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), body.c_str(), 10) != 0)
        fail(Errc::ParseError, "bad rational literal '" + body + "'");
    if (sgn(Int(q.get_den())) == 0)
        fail(Errc::DivByZero, "rational with zero denominator");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

} // namespace ietk
