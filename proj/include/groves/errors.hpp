#pragma once

#include <stdexcept>
#include <string>

namespace groves {

// All library failures derive from Error so callers can catch one type.
// Each subclass names the precondition or internal assumption that failed.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

struct SingularLaplacian : Error {
    SingularLaplacian() : Error("Dirichlet Laplacian is singular") {}
};

struct GeneratorMismatch : Error {
    explicit GeneratorMismatch(const std::string& what) : Error(what) {}
};

// The assembled numerator of a grove ratio must vanish to order m before the
// finite answer appears; a nonzero low-order coefficient means the input
// tables were inconsistent or a truncation assumption broke.
struct PrefixNotZero : Error {
    explicit PrefixNotZero(const std::string& what) : Error(what) {}
};

struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("jet has zero constant term") {}
};

struct NotAnnular : Error {
    NotAnnular() : Error("pairing does not embed in the annulus") {}
};

struct NonReducible : Error {
    explicit NonReducible(const std::string& what) : Error(what) {}
};

struct WindowExceeded : Error {
    explicit WindowExceeded(const std::string& what) : Error(what) {}
};

struct DegenerateCut : Error {
    explicit DegenerateCut(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

// A response-matrix identity failed against direct grove enumeration; the
// message pins down the graph, the identity, and both values.
struct MismatchReport : Error {
    explicit MismatchReport(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct InvalidCutSet : Error {
    explicit InvalidCutSet(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace groves
