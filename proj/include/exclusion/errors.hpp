#pragma once

#include <stdexcept>
#include <string>

namespace exclusion {

// Base class for all toolkit errors. Specific types below carry the
// failure kind in the type itself so callers can catch selectively.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

struct ThetaOutOfRange : Error {
    explicit ThetaOutOfRange(const std::string& what) : Error(what) {}
};

struct NTooLarge : Error {
    explicit NTooLarge(const std::string& what) : Error(what) {}
};

struct InvalidN : Error {
    explicit InvalidN(const std::string& what) : Error(what) {}
};

struct WrongMode : Error {
    explicit WrongMode(const std::string& what) : Error(what) {}
};

struct IndexCountMismatch : Error {
    explicit IndexCountMismatch(const std::string& what) : Error(what) {}
};

struct InvalidPovm : Error {
    explicit InvalidPovm(const std::string& what) : Error(what) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

struct SizeOverflow : Error {
    explicit SizeOverflow(const std::string& what) : Error(what) {}
};

struct UnknownPreset : Error {
    explicit UnknownPreset(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace exclusion
