#ifndef CLBF_ERROR_HPP
#define CLBF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace clbf {

enum class Errc {
    DimensionMismatch,
    DivisionByZero,
    NonFinite,
    NonDifferentiable,
    DivisorStraddlesZero,
    SyntaxError,
    UnknownIdentifier,
    GrammarIncomplete,
    DegenerateDomain,
    ConfigInvalid,
    ObjectiveNonFinite,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace clbf

#endif
