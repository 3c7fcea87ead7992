#ifndef GRAPHFAIR_ERRORS_HPP
#define GRAPHFAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphfair {

// Base for all domain errors so callers can catch one type at the CLI boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct LexicographicNotNumeric : Error {
    explicit LexicographicNotNumeric(const std::string& msg = "lexicographic valuations carry no numeric value")
        : Error(msg) {}
};

struct ChoresUnsupported : Error {
    explicit ChoresUnsupported(const std::string& msg = "operation requires a goods-only instance")
        : Error(msg) {}
};

struct NotAdditive : Error {
    explicit NotAdditive(const std::string& msg = "operation requires additive valuations") : Error(msg) {}
};

struct NotConsistent : Error {
    explicit NotConsistent(const std::string& msg = "agents do not share a compatible ranking") : Error(msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& reason) : Error("shape mismatch: " + reason) {}
};

struct NotACover : Error {
    explicit NotACover(const std::string& msg) : Error(msg) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& msg = "search space exhausted without a certified allocation")
        : Error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

struct OrderTooShort : Error {
    explicit OrderTooShort(const std::string& msg = "picking order does not cover all goods") : Error(msg) {}
};

struct DiameterTooSmall : Error {
    explicit DiameterTooSmall(const std::string& msg = "graph has no vertex pair at distance >= 4")
        : Error(msg) {}
};

struct NotLexicographic : Error {
    explicit NotLexicographic(const std::string& msg = "operation requires lexicographic valuations")
        : Error(msg) {}
};

struct BadSize : Error {
    explicit BadSize(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace graphfair

#endif  // GRAPHFAIR_ERRORS_HPP
