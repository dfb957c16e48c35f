#pragma once

#include <stdexcept>
#include <string>

namespace genchar {

// Failure categories raised by the library. Each value corresponds to a
// documented error condition of some operation; everything else is a plain
// std::logic_error (programming bug).
enum class Errc {
    NotDivisible,
    NonSquare,
    NegativeSeriesExponent,
    NonUnitConstantTerm,
    NonInvertibleImage,
    NotMonic,
    WrongDegree,
    F0NotOne,
    NegativePartWrongOrder,
    NonInvertibleLeadingCoefficient,
    LengthExceedsN,
    NegativePartsUnsupported,
    OddHalfExponentResidue,
    CapTooSmall,
    SplitMismatch,
    NotConstantTermFree,
    HypothesisViolated,
    BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace genchar
