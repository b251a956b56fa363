#include "k1k2/f2.hpp"

#include <bit>
#include <stdexcept>

namespace k1k2::f2 {

void BitVec::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= bit;
    else
        words_[i >> 6] &= ~bit;
}

void BitVec::xor_with(const BitVec& other) {
    if (other.size_ != size_)
        throw std::invalid_argument("BitVec::xor_with: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
}

bool BitVec::dot(const BitVec& other) const {
    if (other.size_ != size_)
        throw std::invalid_argument("BitVec::dot: size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1u;
}

bool BitVec::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += std::popcount(w);
    return n;
}

std::size_t BitVec::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
    return size_;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

Matrix Matrix::from_entries(std::size_t rows, std::size_t cols,
                            const std::vector<std::pair<std::size_t, std::size_t>>& ones) {
    Matrix m(rows, cols);
    for (auto [r, c] : ones) {
        if (r >= rows || c >= cols)
            throw std::invalid_argument("Matrix::from_entries: position out of bounds");
        m.data_[r].set(c);  // repeated positions collapse: presence = 1
    }
    return m;
}

bool Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Matrix::get: out of bounds");
    return data_[r].get(c);
}

void Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Matrix::set: out of bounds");
    data_[r].set(c, value);
}

BitVec Matrix::column(std::size_t c) const {
    if (c >= cols_)
        throw std::out_of_range("Matrix::column: out of bounds");
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].get(c)) v.set(r);
    return v;
}

BitVec Matrix::apply(const BitVec& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("Matrix::apply: vector length != cols");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(v)) out.set(r);
    return out;
}

namespace {

// In-place reduced row echelon form. Returns the pivot columns in order;
// rows [rank..] end up zero.
std::vector<std::size_t> rref(std::vector<BitVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i].get(c)) { pivot = i; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i].xor_with(rows[r]);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<BitVec> matrix_rows(const Matrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return rows;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    auto rows = matrix_rows(m);
    return rref(rows, m.cols()).size();
}

std::size_t rank_of_span(std::vector<BitVec> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t len = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != len)
            throw std::invalid_argument("rank_of_span: vectors of unequal length");
    return rref(vectors, len).size();
}

std::vector<BitVec> kernel_basis(const Matrix& m) {
    auto rows = matrix_rows(m);
    const auto pivots = rref(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].get(f)) v.set(pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t image_dim_into_quotient(const Matrix& m, const std::vector<BitVec>& subspace) {
    for (const auto& v : subspace)
        if (v.size() != m.rows())
            throw std::invalid_argument(
                "image_dim_into_quotient: subspace vector length != codomain dimension");

    std::vector<BitVec> rows = subspace;
    const std::size_t sub_rank = rank_of_span(rows);
    for (std::size_t c = 0; c < m.cols(); ++c)
        rows.push_back(m.column(c));
    const std::size_t total = rows.empty() ? 0 : rref(rows, m.rows()).size();
    return total - sub_rank;
}

bool in_column_space(const Matrix& m, const BitVec& v) {
    if (v.size() != m.rows())
        throw std::invalid_argument("in_column_space: vector length != codomain dimension");
    std::vector<BitVec> rows;
    for (std::size_t c = 0; c < m.cols(); ++c)
        rows.push_back(m.column(c));
    const std::size_t r0 = rank_of_span(rows);
    rows.push_back(v);
    return rank_of_span(std::move(rows)) == r0;
}

}  // namespace k1k2::f2
