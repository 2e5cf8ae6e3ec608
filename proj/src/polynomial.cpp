#include "chromakit/polynomial.hpp"

#include <sstream>
#include <utility>

namespace chromakit {

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    strip_trailing_zeros();
}

void Polynomial::strip_trailing_zeros() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(BigInt c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(std::size_t degree, BigInt coeff) {
    Polynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, BigInt(0));
        p.coeffs_[degree] = std::move(coeff);
    }
    return p;
}

BigInt Polynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned long exponent) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::string Polynomial::to_json() const {
    std::ostringstream out;
    out << "{\"coeffs\":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out << ',';
        out << '"' << coeffs_[i].str() << '"';
    }
    out << "]}";
    return out.str();
}

std::string Polynomial::to_pretty() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const BigInt magnitude = abs(c);
        if (i == 0) {
            out << magnitude.str();
        } else {
            if (magnitude != 1) out << magnitude.str() << '*';
            out << "λ";
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

}  // namespace chromakit
