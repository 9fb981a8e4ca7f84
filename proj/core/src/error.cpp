#include "bouquet/error.hpp"

#include <utility>

namespace bouquet {

Error::Error(std::string where, const std::string& message)
    : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

BudgetError::BudgetError(std::string where, const std::string& message,
                         std::uint64_t offending_power)
    : Error(std::move(where), message), offending_power_(offending_power) {}

ConvergenceError::ConvergenceError(std::string where,
                                   const std::string& message, double residual)
    : Error(std::move(where), message), residual_(residual) {}

}  // namespace bouquet
