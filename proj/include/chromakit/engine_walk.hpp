#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chromakit/bigint.hpp"
#include "chromakit/multigraph.hpp"

namespace chromakit {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    BigInt& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const BigInt& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    IntMatrix operator*(const IntMatrix& other) const;
    BigInt trace() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<BigInt> data_;
};

/// A[i][j] = number of edges between v_i and v_j for i != j;
/// A[i][i] = number of loops at v_i (each loop is one walk step).
IntMatrix adjacency_matrix(const Multigraph& g);

/// Exact power by repeated squaring; the 0th power is the identity.
IntMatrix matrix_power(const IntMatrix& m, std::uint64_t n);

/// trace(A^n): closed walks of length n, summed over all start vertices.
BigInt count_closed_walks(const Multigraph& g, std::uint64_t n);

/// Closed walks of length n in the complete graph K_λ from its known
/// spectrum {λ-1, -1, ..., -1}: (λ-1)^n + (λ-1)(-1)^n, in pure integer
/// arithmetic. λ >= 1.
BigInt complete_graph_closed_walks(std::int64_t lambda, std::uint64_t n);

/// λ-colorings of the cycle C_n counted as closed walks of length n in K_λ.
BigInt chromatic_count_via_walks(std::size_t n, std::int64_t lambda);

}  // namespace chromakit
