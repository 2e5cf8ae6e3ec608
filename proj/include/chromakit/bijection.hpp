#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chromakit/bigint.hpp"
#include "chromakit/oracle.hpp"

namespace chromakit {

/// An n-tuple with entries in {1..λ-1}.
using CodeWord = std::vector<int>;

/// The parity-split count of proper cycle colorings: the code words reached
/// bijectively, plus the exceptional alternating colorings that exist only
/// for even n.
struct BijectionCount {
    std::size_t n = 0;
    std::int64_t lambda = 0;
    BigInt bijective_part;    ///< (λ-1)^n - (λ-1)
    BigInt exceptional_part;  ///< 2(λ-1) for even n, 0 for odd n
    BigInt total;             ///< bijective_part + exceptional_part
};

/// 1-based positions i with t[i] > t[i+1], indices cyclic (t[n+1] = t[1]).
std::vector<std::size_t> cyclic_descents(const std::vector<int>& t);

/// Encode a proper cycle coloring ω into a code word σ: at each cyclic
/// descent σ_i = ω_i - 1, elsewhere σ_i = ω_i. Because a maximal color λ is
/// always a descent, the result lies in {1..λ-1}^n. Improper or
/// out-of-range input is an error.
CodeWord encode_phi(const Coloring& omega, std::int64_t lambda);

/// Constant words are the codomain's excluded set; decode_psi rejects them.
bool is_constant(const CodeWord& sigma);

struct DecodeTrace {
    CodeWord sigma_bar;  ///< intermediate word after the descent lift
    Coloring omega;      ///< decoded proper coloring
};

/// Decode a non-constant code word σ back to a proper coloring, exposing
/// the intermediate word. Two phases:
///   (i)  lift descents: σ̄_i = σ_i + 1 at cyclic descents of σ, else σ_i;
///   (ii) for each position i, take the run length ℓ = smallest k >= 1 with
///        σ̄_{i+k} != σ̄_i (cyclic); ω_i = σ̄_i + 1 when ℓ is even, else σ̄_i.
/// The result has no equal cyclic neighbors and encode_phi(ω) = σ.
/// A constant σ is a domain error; out-of-range entries are errors.
DecodeTrace decode_psi_trace(const CodeWord& sigma, std::int64_t lambda);

Coloring decode_psi(const CodeWord& sigma, std::int64_t lambda);

/// The colorings whose encoding is constant: for even n, the alternating
/// pairs (i+1, i, ..., i+1, i) and (i, i+1, ..., i, i+1) for each color
/// i in 1..λ-1; for odd n there are none.
std::vector<Coloring> exceptional_colorings(std::size_t n, std::int64_t lambda);

/// (λ-1)^n - (λ-1), plus 2(λ-1) when n is even. The total equals the number
/// of proper λ-colorings of C_n.
BijectionCount count_via_bijection(std::size_t n, std::int64_t lambda);

}  // namespace chromakit
