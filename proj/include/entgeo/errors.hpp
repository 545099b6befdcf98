// Exception types shared by all entgeo components. Every error carries a
// short machine-readable kind tag (also the prefix of what()) so the CLI can
// emit single-line parsable diagnostics.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entgeo {

class Error : public std::runtime_error {
public:
    Error(std::string_view kind, const std::string& msg)
        : std::runtime_error(std::string(kind) + ": " + msg), kind_(kind) {}

    std::string_view kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ENTGEO_DEFINE_ERROR(Name)                                       \
    struct Name : Error {                                               \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}    \
    }

// state construction
ENTGEO_DEFINE_ERROR(LengthMismatch);
ENTGEO_DEFINE_ERROR(ZeroVector);
ENTGEO_DEFINE_ERROR(NotNormalized);
ENTGEO_DEFINE_ERROR(InvalidParameters);
ENTGEO_DEFINE_ERROR(UnknownName);

// geometry / entropy
ENTGEO_DEFINE_ERROR(InvalidBipartition);
ENTGEO_DEFINE_ERROR(DimensionMismatch);
ENTGEO_DEFINE_ERROR(NotThreeParty);
ENTGEO_DEFINE_ERROR(NotThreeQubit);
ENTGEO_DEFINE_ERROR(NotDensityMatrix);
ENTGEO_DEFINE_ERROR(InvalidSubset);
ENTGEO_DEFINE_ERROR(OverlappingSubsets);

// teleportation
ENTGEO_DEFINE_ERROR(BadOutcomeIndex);

#undef ENTGEO_DEFINE_ERROR

// Parse-time rejections always carry the byte offset into the source text.
class ParseError : public Error {
public:
    ParseError(std::string_view kind, const std::string& msg, std::size_t pos)
        : Error(kind, msg + " at position " + std::to_string(pos)), position_(pos) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct SyntaxError : ParseError {
    SyntaxError(const std::string& msg, std::size_t pos)
        : ParseError("SyntaxError", msg, pos) {}
};

struct InconsistentKetLength : ParseError {
    InconsistentKetLength(const std::string& msg, std::size_t pos)
        : ParseError("InconsistentKetLength", msg, pos) {}
};

struct DigitExceedsDimension : ParseError {
    DigitExceedsDimension(const std::string& msg, std::size_t pos)
        : ParseError("DigitExceedsDimension", msg, pos) {}
};

}  // namespace entgeo
