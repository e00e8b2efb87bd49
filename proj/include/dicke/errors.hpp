// errors.hpp — typed error hierarchy shared by the library and the CLI

#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

// Exit-code classes used by tools/dicke_lab:
//   0 success, 2 invalid params, 3 boundary, 4 numeric failure.
enum class ErrorCode : int {
    InvalidParams = 2,
    Boundary = 3,
    Numeric = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parameter values outside the model's domain (omega <= 0, negative couplings, ...).
struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& w) : Error(ErrorCode::InvalidParams, w) {}
};

// Parameters are valid for the finite simulator but outside the analytic derivations
// (omega0 != omega).
struct UnsupportedParamsError : Error {
    explicit UnsupportedParamsError(const std::string& w) : Error(ErrorCode::InvalidParams, w) {}
};

// A coupling point sits on a critical line; the equivalent-oscillator picture degenerates.
struct OnBoundaryError : Error {
    explicit OnBoundaryError(const std::string& w) : Error(ErrorCode::Boundary, w) {}
};

// |mu| = |delta| in the quadratic form: no oscillator normal form exists.
struct DegenerateFormError : Error {
    explicit DegenerateFormError(const std::string& w) : Error(ErrorCode::Boundary, w) {}
};

struct CutoffTooSmallError : Error {
    explicit CutoffTooSmallError(const std::string& w) : Error(ErrorCode::InvalidParams, w) {}
};

struct NonConvergenceError : Error {
    explicit NonConvergenceError(const std::string& w) : Error(ErrorCode::Numeric, w) {}
};

struct NormDriftError : Error {
    explicit NormDriftError(const std::string& w) : Error(ErrorCode::Numeric, w) {}
};

struct NonPositiveEchoError : Error {
    explicit NonPositiveEchoError(const std::string& w) : Error(ErrorCode::Numeric, w) {}
};

struct MalformedCsvError : Error {
    explicit MalformedCsvError(const std::string& w) : Error(ErrorCode::InvalidParams, w) {}
};

struct WindowTooShortError : Error {
    explicit WindowTooShortError(const std::string& w) : Error(ErrorCode::Numeric, w) {}
};

} // namespace dicke
