#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polarprior {

enum class ErrorKind {
    NotPositiveDefinite,
    RankDeficient,
    DomainError,
    DimensionMismatch,
    LengthMismatch,
    NotPsd,
    NotOrthogonal,
    Overflow,
    Underflow,
    Divergence,
    AllDivergent,
    GradientAuditFailed,
    TooFewDraws,
    EmptyChain,
    NoObservedDyads,
    SingleClass,
    ParseError,
    ValidationError,
    Ragged,
    NonBinary,
    Asymmetric,
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }
    /// Message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace polarprior
