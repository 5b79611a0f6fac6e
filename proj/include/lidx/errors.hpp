#pragma once

#include <stdexcept>
#include <string>

namespace lidx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a decision would depend on a digit beyond the known
/// precision window. Callers may retry at a higher working precision.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what = "precision exhausted")
        : Error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero")
        : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "singular matrix")
        : Error(what) {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what = "rank deficient")
        : Error(what) {}
};

struct NotContained : Error {
    explicit NotContained(const std::string& what = "module not contained")
        : Error(what) {}
};

struct IllFormedMap : Error {
    explicit IllFormedMap(const std::string& what = "ill-formed module map")
        : Error(what) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& what = "diagram not admissible")
        : Error(what) {}
};

struct NotAPoset : Error {
    explicit NotAPoset(const std::string& what = "relation is not a partial order")
        : Error(what) {}
};

struct TreeNotCollapsible : Error {
    explicit TreeNotCollapsible(const std::string& what = "tree image not admissible after collapse")
        : Error(what) {}
};

struct ConditionViolated : Error {
    char condition;  // 'a'..'d'
    explicit ConditionViolated(char c, const std::string& what = "")
        : Error(what.empty() ? std::string("condition (") + c + ") violated" : what),
          condition(c) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what = "enumeration budget exceeded")
        : Error(what) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& what = "unknown suite")
        : Error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace lidx
