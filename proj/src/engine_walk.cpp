#include "chromakit/engine_walk.hpp"

#include <stdexcept>
#include <string>

namespace chromakit {

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("matrix product: dimensions differ (" + std::to_string(dim_) +
                                    " vs " + std::to_string(other.dim_) + ")");
    }
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const BigInt& left = at(i, k);
            if (left == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                out.at(i, j) += left * other.at(k, j);
            }
        }
    }
    return out;
}

BigInt IntMatrix::trace() const {
    BigInt sum = 0;
    for (std::size_t i = 0; i < dim_; ++i) sum += at(i, i);
    return sum;
}

IntMatrix adjacency_matrix(const Multigraph& g) {
    IntMatrix m(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            m.at(e.a, e.a) += 1;
        } else {
            m.at(e.a, e.b) += 1;
            m.at(e.b, e.a) += 1;
        }
    }
    return m;
}

IntMatrix matrix_power(const IntMatrix& m, std::uint64_t n) {
    IntMatrix result = IntMatrix::identity(m.dim());
    IntMatrix base = m;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

BigInt count_closed_walks(const Multigraph& g, std::uint64_t n) {
    return matrix_power(adjacency_matrix(g), n).trace();
}

BigInt complete_graph_closed_walks(std::int64_t lambda, std::uint64_t n) {
    if (lambda < 1) {
        throw std::invalid_argument("complete_graph_closed_walks: lambda must be >= 1, got " +
                                    std::to_string(lambda));
    }
    const BigInt dominant = big_pow(BigInt(lambda - 1), n);
    const BigInt rest = BigInt(lambda - 1) * (n % 2 == 0 ? 1 : -1);
    return dominant + rest;
}

BigInt chromatic_count_via_walks(std::size_t n, std::int64_t lambda) {
    if (n == 0) throw std::invalid_argument("chromatic_count_via_walks: n must be positive");
    return complete_graph_closed_walks(lambda, n);
}

}  // namespace chromakit
