#pragma once

#include <stdexcept>
#include <string>

namespace confpersist {

enum class Errc {
    invalid_input,
    non_integer_weight,
    metric_contradiction,
    budget_exceeded,
    index_out_of_range,
    non_monotone_filtration,
    scale_mismatch,
    not_a_cocycle,
    guard_violated,
    cocycle_violation,
    not_k2,
    odd_coboundary,
    tolerance_invalid,
    k_too_large,
    not_inherited,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::non_integer_weight: return "NonIntegerWeight";
    case Errc::metric_contradiction: return "MetricContradiction";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::non_monotone_filtration: return "NonMonotoneFiltration";
    case Errc::scale_mismatch: return "ScaleMismatch";
    case Errc::not_a_cocycle: return "NotACocycle";
    case Errc::guard_violated: return "GuardViolated";
    case Errc::cocycle_violation: return "CocycleViolation";
    case Errc::not_k2: return "NotK2";
    case Errc::odd_coboundary: return "OddCoboundary";
    case Errc::tolerance_invalid: return "ToleranceInvalid";
    case Errc::k_too_large: return "KTooLarge";
    case Errc::not_inherited: return "NotInherited";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace confpersist
