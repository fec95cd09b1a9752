#pragma once

#include <stdexcept>
#include <string>

namespace arcspace {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

// Series division by something that is not a unit (positive or undetermined order).
struct NonUnitDivision : std::runtime_error {
    explicit NonUnitDivision(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePresentation : std::runtime_error {
    explicit DegeneratePresentation(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientPrecision : std::runtime_error {
    explicit InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

struct NotGenericallyTransverse : std::runtime_error {
    explicit NotGenericallyTransverse(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what, int level_reached = -1)
        : std::runtime_error(what), level_reached(level_reached) {}
    int level_reached;
};

// Integrand whose weight does not grow along an unbounded stratum parameter.
struct NonSummableWeight : std::runtime_error {
    explicit NonSummableWeight(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arcspace
