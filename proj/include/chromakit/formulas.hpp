#pragma once

#include <cstddef>

#include "chromakit/polynomial.hpp"

namespace chromakit {

/// (λ-1)^n + (-1)^n (λ-1), built by symbolic expansion. n = 0 is an error.
Polynomial cycle_closed_form(std::size_t n);

/// λ (λ-1)^(n-1). n = 0 is an error.
Polynomial path_closed_form(std::size_t n);

/// Falling factorial λ (λ-1) ... (λ-k+1); k = 0 gives the constant 1.
Polynomial complete_closed_form(std::size_t k);

}  // namespace chromakit
