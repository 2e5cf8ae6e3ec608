#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chromakit/bigint.hpp"

namespace chromakit {

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored by ascending power of the color variable.
/// Canonical form: trailing zero coefficients are stripped, and the zero
/// polynomial is the empty coefficient sequence. All values are immutable.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coefficients);

    static Polynomial constant(BigInt c);
    /// The monomial coeff * x^degree.
    static Polynomial monomial(std::size_t degree, BigInt coeff = 1);
    /// The color variable itself.
    static Polynomial variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// Coefficient of x^power; zero beyond the degree.
    BigInt coefficient(std::size_t power) const;

    /// Exact Horner evaluation.
    BigInt evaluate(const BigInt& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial pow(unsigned long exponent) const;

    bool operator==(const Polynomial&) const = default;

    /// {"coeffs":["c0","c1",...]} with coefficients as decimal strings.
    std::string to_json() const;
    /// Human-readable form, highest power first, e.g. "λ^3 - 3*λ^2 + 2*λ".
    std::string to_pretty() const;

private:
    void strip_trailing_zeros();

    std::vector<BigInt> coeffs_;
};

}  // namespace chromakit
