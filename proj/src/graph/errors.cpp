#include "locdom/errors.hpp"

namespace locdom {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
        case ErrorCode::MalformedHeader: return "MalformedHeader";
        case ErrorCode::TruncatedBody: return "TruncatedBody";
        case ErrorCode::NonZeroPadding: return "NonZeroPadding";
        case ErrorCode::ByteOutOfRange: return "ByteOutOfRange";
        case ErrorCode::TrailingData: return "TrailingData";
        case ErrorCode::MalformedEdgeList: return "MalformedEdgeList";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::NotSubcubic: return "NotSubcubic";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

std::string_view hypothesis_name(Hypothesis h) {
    switch (h) {
        case Hypothesis::Connected: return "Connected";
        case Hypothesis::Subcubic: return "Subcubic";
        case Hypothesis::NoLeafTwins: return "NoLeafTwins";
        case Hypothesis::NoDegreeTwoTwins: return "NoDegreeTwoTwins";
        case Hypothesis::NotExcluded: return "NotExcluded";
        case Hypothesis::NonTrivialOrder: return "NonTrivialOrder";
        case Hypothesis::Cubic: return "Cubic";
        case Hypothesis::LocatingDominating: return "LocatingDominating";
    }
    return "Unknown";
}

}  // namespace locdom
