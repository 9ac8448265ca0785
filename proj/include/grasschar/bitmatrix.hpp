#pragma once

// Dense GF(2) matrices, bit-packed row-major. Vectors are coefficient
// columns and maps act on the left; the kernel is the right null space.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace grasschar {

class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (words_[r * stride_ + c / 64] >> (c % 64)) & 1;
    }

    void set(std::size_t r, std::size_t c, bool v = true) {
        check(r, c);
        const std::uint64_t bit = std::uint64_t(1) << (c % 64);
        if (v) words_[r * stride_ + c / 64] |= bit;
        else words_[r * stride_ + c / 64] &= ~bit;
    }

    BitMatrix transposed() const {
        BitMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) out.set(c, r);
        return out;
    }

    /// Stacks two matrices with equal column counts, top over bottom.
    static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
        if (top.cols_ != bottom.cols_)
            throw std::invalid_argument("BitMatrix::vstack: column counts differ");
        BitMatrix out(top.rows_ + bottom.rows_, top.cols_);
        std::copy(top.words_.begin(), top.words_.end(), out.words_.begin());
        std::copy(bottom.words_.begin(), bottom.words_.end(),
                  out.words_.begin() + static_cast<std::ptrdiff_t>(top.rows_ * top.stride_));
        return out;
    }

    std::size_t rank() const {
        BitMatrix m = *this;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t pivot = rank;
            while (pivot < rows_ && !m.get(pivot, c)) ++pivot;
            if (pivot == rows_) continue;
            m.swap_rows(rank, pivot);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rank && m.get(r, c)) m.xor_row(r, rank);
            ++rank;
        }
        return rank;
    }

    /// Deterministic basis of the right null space {x : M x = 0}; one vector
    /// per free column, in ascending column order. Empty iff M is injective.
    std::vector<std::vector<bool>> kernel_basis() const {
        BitMatrix m = *this;
        std::vector<std::size_t> pivot_col;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t pivot = rank;
            while (pivot < rows_ && !m.get(pivot, c)) ++pivot;
            if (pivot == rows_) continue;
            m.swap_rows(rank, pivot);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rank && m.get(r, c)) m.xor_row(r, rank);
            pivot_col.push_back(c);
            ++rank;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivot_col) is_pivot[c] = true;

        std::vector<std::vector<bool>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<bool> v(cols_, false);
            v[free] = true;
            for (std::size_t r = 0; r < pivot_col.size(); ++r)
                if (m.get(r, free)) v[pivot_col[r]] = true;
            basis.push_back(std::move(v));
        }
        return basis;
    }

    bool operator==(const BitMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && words_ == other.words_;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix: index out of range");
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < stride_; ++w)
            std::swap(words_[a * stride_ + w], words_[b * stride_ + w]);
    }
    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < stride_; ++w) words_[dst * stride_ + w] ^= words_[src * stride_ + w];
    }

    std::size_t rows_, cols_, stride_;
    std::vector<std::uint64_t> words_;
};

inline std::vector<std::vector<bool>> matrix_kernel_basis(const BitMatrix& m) {
    return m.kernel_basis();
}

}  // namespace grasschar
