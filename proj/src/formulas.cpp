#include "chromakit/formulas.hpp"

#include <stdexcept>

namespace chromakit {

Polynomial cycle_closed_form(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cycle_closed_form: n must be positive");
    const Polynomial lambda_minus_one = Polynomial::variable() - Polynomial::constant(1);
    const Polynomial sign = Polynomial::constant(n % 2 == 0 ? 1 : -1);
    return lambda_minus_one.pow(n) + sign * lambda_minus_one;
}

Polynomial path_closed_form(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path_closed_form: n must be positive");
    const Polynomial lambda_minus_one = Polynomial::variable() - Polynomial::constant(1);
    return Polynomial::variable() * lambda_minus_one.pow(n - 1);
}

Polynomial complete_closed_form(std::size_t k) {
    Polynomial result = Polynomial::constant(1);
    for (std::size_t j = 0; j < k; ++j) {
        result = result * (Polynomial::variable() - Polynomial::constant(BigInt(j)));
    }
    return result;
}

}  // namespace chromakit
