#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

namespace mbh {

// All integer arithmetic in the library is exact.  Matrix entries use
// arbitrary precision because Smith normal form intermediates can grow well
// past 64 bits even for small inputs.
using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols), Int(0)) {
        assert(rows >= 0 && cols >= 0);
    }
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        data_.reserve(size_t(rows_) * size_t(cols_));
        for (const auto& row : init) {
            assert(int(row.size()) == cols_);
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[size_t(i) * size_t(cols_) + size_t(j)];
    }
    const Int& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[size_t(i) * size_t(cols_) + size_t(j)];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        assert(cols_ == o.rows_);
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Int& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        IntMatrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        IntMatrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i += k * row j
    void add_row(int i, int j, const Int& k) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
    }
    // col i += k * col j
    void add_col(int i, int j, const Int& k) {
        for (int r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }
    void negate_col(int j) {
        for (int r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += (*this)(i, j).str();
            }
            s += "]\n";
        }
        return s;
    }

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

} // namespace mbh
