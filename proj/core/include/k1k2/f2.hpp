#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace k1k2::f2 {

/// Bit-packed vector over the two-element field.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void xor_with(const BitVec& other);
    /// Parity of the bitwise AND with `other` (a GF(2) dot product).
    bool dot(const BitVec& other) const;

    bool any() const;
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() if none.
    std::size_t first_set() const;

    bool operator==(const BitVec&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Matrix over GF(2) with bit-packed rows. Entries are created zero.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix from_entries(std::size_t rows, std::size_t cols,
                               const std::vector<std::pair<std::size_t, std::size_t>>& ones);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);

    const BitVec& row(std::size_t r) const { return data_[r]; }
    BitVec column(std::size_t c) const;
    /// Matrix-vector product; `v` must have cols() bits.
    BitVec apply(const BitVec& v) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

/// Rank over GF(2). Columns are pivoted left to right, so results are
/// deterministic for a fixed column order.
std::size_t rank(const Matrix& m);

/// Basis of {v : m.v = 0}, one vector per free column, in ascending
/// free-column order. size() == cols; count == cols - rank(m).
std::vector<BitVec> kernel_basis(const Matrix& m);

/// dim((im m + span(subspace)) / span(subspace)). Subspace vectors live in
/// the codomain of m; a length mismatch is rejected.
std::size_t image_dim_into_quotient(const Matrix& m, const std::vector<BitVec>& subspace);

/// Rank of the span of a list of equal-length vectors.
std::size_t rank_of_span(std::vector<BitVec> vectors);

/// True iff v lies in the column space of m.
bool in_column_space(const Matrix& m, const BitVec& v);

}  // namespace k1k2::f2
