#include "baystow/error.hpp"

namespace baystow {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidDims: return "InvalidDims";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::CellEmpty: return "CellEmpty";
    case ErrorCode::NonPositiveDate: return "NonPositiveDate";
    case ErrorCode::InvalidArrangement: return "InvalidArrangement";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::EmptyPopulation: return "EmptyPopulation";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace baystow
