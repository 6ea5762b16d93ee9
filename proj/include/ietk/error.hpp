#ifndef IETK_ERROR_HPP
#define IETK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ietk {

/// Typed failure conditions surfaced by the library.
enum class Errc {
    IncompatibleField,
    DivByZero,
    OutOfDomain,
    AlphabetMismatch,
    WindowTooShort,
    EmptyWord,
    IncompleteLanguage,
    ExactnessRequired,
    DegenerateTransport,
    NotAFixedPointSeed,
    NoFixedPointFound,
    NotPrimitive,
    BoundTooLarge,
    NotInClass,
    ConversionBug,
    NotAUnit,
    SingularRenorm,
    HypothesisFailed,
    FieldMismatch,
    TransportOutOfCone,
    ParseError,
    Unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace ietk

#endif
