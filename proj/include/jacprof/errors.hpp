#ifndef JACPROF_ERRORS_HPP
#define JACPROF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacprof {

enum class ErrorKind {
    DivisionByZero,
    CtxMismatch,
    NoSquareRoot,
    ZeroPolynomial,
    InternalMismatch,
    BadBranch,
    InsufficientPrecision,
    NotMonic,
    WrongDegree,
    Inseparable,
    PointNotOnCurve,
    DegreeMismatch,
    AlreadyReduced,
    InvalidOrder,
    InfeasibleAVector,
    WrongN,
    CurveGenusMismatch,
    BadParity,
    TTooSmall,
    NonPolynomialQuotient,
    MaxRetriesExceeded,
    BadW,
    GenusTooSmall,
    UnsupportedN,
    InvalidArgument,
};

inline const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CtxMismatch: return "CtxMismatch";
    case ErrorKind::NoSquareRoot: return "NoSquareRoot";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::BadBranch: return "BadBranch";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::Inseparable: return "Inseparable";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::AlreadyReduced: return "AlreadyReduced";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InfeasibleAVector: return "InfeasibleAVector";
    case ErrorKind::WrongN: return "WrongN";
    case ErrorKind::CurveGenusMismatch: return "CurveGenusMismatch";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::TTooSmall: return "TTooSmall";
    case ErrorKind::NonPolynomialQuotient: return "NonPolynomialQuotient";
    case ErrorKind::MaxRetriesExceeded: return "MaxRetriesExceeded";
    case ErrorKind::BadW: return "BadW";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    /* internal invariant breach, as opposed to bad input */
    bool internal() const noexcept { return kind_ == ErrorKind::InternalMismatch; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw error(kind, what);
}

} // namespace jacprof

#endif
