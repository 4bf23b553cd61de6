#pragma once

#include <cstddef>
#include <vector>

#include "kimura/errors.hpp"
#include "kimura/rational.hpp"

namespace kimura {

// Small dense matrix over exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const Rational& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (at(r, c) != Rational(r == c ? 1 : 0)) return false;
        return true;
    }

    RatMatrix& operator+=(const RatMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw UsageError("matrix sum: shape mismatch");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw UsageError("matrix product: shape mismatch");
        RatMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& v = a.at(r, k);
                if (v.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    out.at(r, c) += v * b.at(k, c);
            }
        return out;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// One exact solution of A x = b by Gaussian elimination, with free variables
// set to zero.  Returns false when the system is inconsistent.
bool solve_linear_system(RatMatrix a, std::vector<Rational> b, std::vector<Rational>& x);

}  // namespace kimura
