#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace structkit {

enum class ErrorKind {
    InvalidArgument,
    DegenerateElement,
    DegenerateGeometry,
    Configuration,
    Validation,
    SingularSystem,
    IllConditioned,
    NoBucklingMode,
    ComplexSpectrum,
    Parse,
    Io,
};

// Stable, machine-readable names; the CLI reports these verbatim.
constexpr std::string_view error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::DegenerateElement: return "degenerate-element";
        case ErrorKind::DegenerateGeometry: return "degenerate-geometry";
        case ErrorKind::Configuration: return "configuration-error";
        case ErrorKind::Validation: return "invalid-model";
        case ErrorKind::SingularSystem: return "singular-system";
        case ErrorKind::IllConditioned: return "ill-conditioned";
        case ErrorKind::NoBucklingMode: return "no-buckling-mode";
        case ErrorKind::ComplexSpectrum: return "numerically-complex-spectrum";
        case ErrorKind::Parse: return "parse-error";
        case ErrorKind::Io: return "io-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

} // namespace structkit
