#pragma once

#include <stdexcept>
#include <string>

namespace hopffill {

// Domain errors carry a stable name that the CLI prints on the diagnostic
// stream. Everything here derives from std::runtime_error so callers can
// catch broadly or by exact kind.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error("InvalidInput", what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error("SingularMatrix", what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error("NotSymmetric", what) {}
};

struct NotNegativeDefinite : Error {
    explicit NotNegativeDefinite(const std::string& what) : Error("NotNegativeDefinite", what) {}
};

struct MissingCurve : Error {
    explicit MissingCurve(const std::string& what) : Error("MissingCurve", what) {}
};

struct InconsistentPairs : Error {
    explicit InconsistentPairs(const std::string& what) : Error("InconsistentPairs", what) {}
};

struct BoundsExceeded : Error {
    explicit BoundsExceeded(const std::string& what) : Error("BoundsExceeded", what) {}
};

struct CaseUnsupported : Error {
    explicit CaseUnsupported(const std::string& what) : Error("CaseUnsupported", what) {}
};

} // namespace hopffill
