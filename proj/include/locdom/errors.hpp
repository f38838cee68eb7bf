#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace locdom {

enum class ErrorCode {
    IndexOutOfRange,
    LoopEdge,
    EdgeNotPresent,
    MalformedHeader,
    TruncatedBody,
    NonZeroPadding,
    ByteOutOfRange,
    TrailingData,
    MalformedEdgeList,
    IsolatedVertex,
    NotSubcubic,
    BudgetExceeded,
    HypothesisViolated,
    BadParameter,
    OrderTooLarge,
    Io,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown by the exact solvers when the search exceeds its budget. Carries the
// best bounds proven so far so callers can still report something useful.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(int lower, int upper, long long nodes)
        : Error(ErrorCode::BudgetExceeded,
                "search budget exhausted (bounds " + std::to_string(lower) + ".." +
                    std::to_string(upper) + " after " + std::to_string(nodes) + " nodes)"),
          lower_bound(lower), upper_bound(upper), nodes_explored(nodes) {}

    int lower_bound;
    int upper_bound;
    long long nodes_explored;
};

enum class Hypothesis {
    Connected,
    Subcubic,
    NoLeafTwins,
    NoDegreeTwoTwins,
    NotExcluded,
    NonTrivialOrder,
    Cubic,
    LocatingDominating,  // the input set must already be locating-dominating
};

std::string_view hypothesis_name(Hypothesis h);

class HypothesisViolated : public Error {
public:
    HypothesisViolated(Hypothesis which, std::vector<int> witness, const std::string& detail)
        : Error(ErrorCode::HypothesisViolated,
                std::string(hypothesis_name(which)) + ": " + detail),
          hypothesis(which), witness_vertices(std::move(witness)) {}

    Hypothesis hypothesis;
    std::vector<int> witness_vertices;
};

}  // namespace locdom
