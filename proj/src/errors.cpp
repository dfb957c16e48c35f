#include "genchar/errors.hpp"

namespace genchar {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::NonSquare: return "NonSquare";
        case Errc::NegativeSeriesExponent: return "NegativeSeriesExponent";
        case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case Errc::NonInvertibleImage: return "NonInvertibleImage";
        case Errc::NotMonic: return "NotMonic";
        case Errc::WrongDegree: return "WrongDegree";
        case Errc::F0NotOne: return "F0NotOne";
        case Errc::NegativePartWrongOrder: return "NegativePartWrongOrder";
        case Errc::NonInvertibleLeadingCoefficient: return "NonInvertibleLeadingCoefficient";
        case Errc::LengthExceedsN: return "LengthExceedsN";
        case Errc::NegativePartsUnsupported: return "NegativePartsUnsupported";
        case Errc::OddHalfExponentResidue: return "OddHalfExponentResidue";
        case Errc::CapTooSmall: return "CapTooSmall";
        case Errc::SplitMismatch: return "SplitMismatch";
        case Errc::NotConstantTermFree: return "NotConstantTermFree";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::BadInput: return "BadInput";
    }
    return "UnknownError";
}

} // namespace genchar
