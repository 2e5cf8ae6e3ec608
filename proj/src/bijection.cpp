#include "chromakit/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chromakit {

namespace {

void require_size(const std::vector<int>& t, const char* where) {
    if (t.empty()) throw std::invalid_argument(std::string(where) + ": tuple must be non-empty");
}

// Descent flags, 0-based: flag[i] is set when t[i] > t[i+1] cyclically.
std::vector<bool> descent_flags(const std::vector<int>& t) {
    const std::size_t n = t.size();
    std::vector<bool> flags(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i] > t[(i + 1) % n]) flags[i] = true;
    }
    return flags;
}

}  // namespace

std::vector<std::size_t> cyclic_descents(const std::vector<int>& t) {
    require_size(t, "cyclic_descents");
    const auto flags = descent_flags(t);
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i]) positions.push_back(i + 1);
    }
    return positions;
}

CodeWord encode_phi(const Coloring& omega, std::int64_t lambda) {
    require_size(omega, "encode_phi");
    const std::size_t n = omega.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (omega[i] < 1 || omega[i] > lambda) {
            throw std::invalid_argument("encode_phi: entry at position " + std::to_string(i + 1) +
                                        " is outside 1.." + std::to_string(lambda));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (omega[i] == omega[(i + 1) % n]) {
            throw std::invalid_argument(
                "encode_phi: not a proper cycle coloring (positions " + std::to_string(i + 1) +
                " and " + std::to_string((i + 1) % n + 1) + " are equal neighbors)");
        }
    }
    const auto flags = descent_flags(omega);
    CodeWord sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = omega[i] - (flags[i] ? 1 : 0);
    return sigma;
}

bool is_constant(const CodeWord& sigma) {
    return std::all_of(sigma.begin(), sigma.end(), [&](int x) { return x == sigma.front(); });
}

DecodeTrace decode_psi_trace(const CodeWord& sigma, std::int64_t lambda) {
    require_size(sigma, "decode_psi");
    const std::size_t n = sigma.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (sigma[i] < 1 || sigma[i] > lambda - 1) {
            throw std::invalid_argument("decode_psi: entry at position " + std::to_string(i + 1) +
                                        " is outside 1.." + std::to_string(lambda - 1));
        }
    }
    if (is_constant(sigma)) {
        throw std::domain_error("decode_psi: constant word is in Z_" + std::to_string(n) +
                                ", outside the decodable domain");
    }

    const auto flags = descent_flags(sigma);
    CodeWord sigma_bar(n);
    for (std::size_t i = 0; i < n; ++i) sigma_bar[i] = sigma[i] + (flags[i] ? 1 : 0);

    // sigma_bar is non-constant whenever sigma is, so every run terminates.
    Coloring omega(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t run = 1;
        while (sigma_bar[(i + run) % n] == sigma_bar[i]) ++run;
        omega[i] = sigma_bar[i] + (run % 2 == 0 ? 1 : 0);
    }
    return DecodeTrace{std::move(sigma_bar), std::move(omega)};
}

Coloring decode_psi(const CodeWord& sigma, std::int64_t lambda) {
    return decode_psi_trace(sigma, lambda).omega;
}

std::vector<Coloring> exceptional_colorings(std::size_t n, std::int64_t lambda) {
    if (n == 0) throw std::invalid_argument("exceptional_colorings: n must be positive");
    if (lambda < 1) {
        throw std::invalid_argument("exceptional_colorings: lambda must be >= 1, got " +
                                    std::to_string(lambda));
    }
    std::vector<Coloring> out;
    if (n % 2 != 0) return out;
    for (int i = 1; i < lambda; ++i) {
        Coloring high_first(n), low_first(n);
        for (std::size_t j = 0; j < n; ++j) {
            high_first[j] = (j % 2 == 0) ? i + 1 : i;
            low_first[j] = (j % 2 == 0) ? i : i + 1;
        }
        out.push_back(std::move(high_first));
        out.push_back(std::move(low_first));
    }
    return out;
}

BijectionCount count_via_bijection(std::size_t n, std::int64_t lambda) {
    if (n == 0) throw std::invalid_argument("count_via_bijection: n must be positive");
    if (lambda < 0) {
        throw std::invalid_argument("count_via_bijection: lambda must be non-negative, got " +
                                    std::to_string(lambda));
    }
    BijectionCount result;
    result.n = n;
    result.lambda = lambda;
    const BigInt lm1 = lambda - 1;
    result.bijective_part = big_pow(lm1, n) - lm1;
    result.exceptional_part = (n % 2 == 0) ? BigInt(2 * lm1) : BigInt(0);
    result.total = result.bijective_part + result.exceptional_part;
    return result;
}

}  // namespace chromakit
