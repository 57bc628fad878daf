#pragma once

#include <stdexcept>
#include <string>

namespace tightcx {

/// Base class for every error the library raises. `kind()` is a stable
/// machine-readable tag used by the CLI and the JSON reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TIGHTCX_DEFINE_ERROR(Name, tag)                                      \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(tag, what) {}         \
    }

TIGHTCX_DEFINE_ERROR(CapacityError, "capacity");
TIGHTCX_DEFINE_ERROR(EmptyComplexError, "empty-complex");
TIGHTCX_DEFINE_ERROR(MalformedFaceError, "malformed-face");
TIGHTCX_DEFINE_ERROR(LookupError, "lookup");
TIGHTCX_DEFINE_ERROR(DisjointnessError, "disjointness");
TIGHTCX_DEFINE_ERROR(StructureError, "structure");
TIGHTCX_DEFINE_ERROR(MalformedVectorError, "malformed-vector");
TIGHTCX_DEFINE_ERROR(FieldError, "field");
TIGHTCX_DEFINE_ERROR(MoveError, "move");
TIGHTCX_DEFINE_ERROR(PreconditionError, "precondition");
TIGHTCX_DEFINE_ERROR(HypothesisError, "hypothesis");
TIGHTCX_DEFINE_ERROR(ParseError, "parse");
TIGHTCX_DEFINE_ERROR(IntegrityError, "integrity");
TIGHTCX_DEFINE_ERROR(UnknownTheoremError, "unknown-theorem");

#undef TIGHTCX_DEFINE_ERROR

}  // namespace tightcx
