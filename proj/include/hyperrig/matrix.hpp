#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "hyperrig/field.hpp"

namespace hyperrig {

// Dense row-major matrix over field F, carrying the field for constants.
template <class F>
class ExactMatrix {
public:
    using Element = typename F::Element;

    ExactMatrix(F field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * cols, field.zero())
    {
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Element& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Element& operator()(int i, int j) const
    {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    std::vector<Element> row(int i) const
    {
        auto b = data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_;
        return std::vector<Element>(b, b + cols_);
    }

    ExactMatrix transpose() const
    {
        ExactMatrix t(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    ExactMatrix select_rows(const std::vector<int>& idx) const
    {
        ExactMatrix s(field_, static_cast<int>(idx.size()), cols_);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (int j = 0; j < cols_; ++j) s(static_cast<int>(r), j) = (*this)(idx[r], j);
        return s;
    }

    // Appends the rows of `other` below this matrix.
    void append_rows(const ExactMatrix& other)
    {
        if (other.cols_ != cols_) throw std::invalid_argument("column mismatch when stacking");
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        rows_ += other.rows_;
    }

    std::vector<Element> multiply(const std::vector<Element>& x) const
    {
        assert(static_cast<int>(x.size()) == cols_);
        std::vector<Element> y(rows_, field_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j)) && !is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    // w^T * M
    std::vector<Element> left_multiply(const std::vector<Element>& w) const
    {
        assert(static_cast<int>(w.size()) == rows_);
        std::vector<Element> y(cols_, field_.zero());
        for (int i = 0; i < rows_; ++i) {
            if (is_zero(w[i])) continue;
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) y[j] += w[i] * (*this)(i, j);
        }
        return y;
    }

    ExactMatrix operator*(const ExactMatrix& o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
        ExactMatrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int l = 0; l < cols_; ++l) {
                const Element& a = (*this)(i, l);
                if (is_zero(a)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    if (!is_zero(o(l, j))) r(i, j) += a * o(l, j);
            }
        return r;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    F field_;
    int rows_;
    int cols_;
    std::vector<Element> data_;
};

}  // namespace hyperrig
