#pragma once

#include <stdexcept>
#include <string>

namespace chromakit {

/// Thrown when a brute-force computation would exceed its configured work
/// budget. Signals misuse of a desk-scale tool, not an internal failure.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chromakit
