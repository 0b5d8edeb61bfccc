#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

using Vec = std::vector<FieldValue>;

/// Dense matrix of exact field elements, row-major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
        : spec_(spec), rows_(rows), cols_(cols), e_(rows * cols, FieldValue::integer(spec, 0)) {}

    static Matrix identity(const FieldSpec& spec, std::size_t n) {
        Matrix m(spec, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldValue::integer(spec, 1);
        return m;
    }

    static Matrix from_rows(const FieldSpec& spec, const std::vector<Vec>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(spec, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionMismatch();
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldValue& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const FieldValue& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }
    Vec col(std::size_t j) const {
        Vec v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
        return v;
    }

    Matrix transpose() const {
        Matrix t(spec_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch();
        Matrix r(spec_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw DimensionMismatch();
        Vec r(rows_, FieldValue::integer(spec_, 0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    /// Rows of this matrix flattened into one vector (row-major).
    Vec vec() const { return e_; }

    static Matrix from_vec(const FieldSpec& spec, std::size_t rows, std::size_t cols, Vec entries) {
        if (entries.size() != rows * cols) throw DimensionMismatch();
        Matrix m(spec, rows, cols);
        m.e_ = std::move(entries);
        return m;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

  private:
    FieldSpec spec_;
    std::size_t rows_ = 0, cols_ = 0;
    Vec e_;
};

inline Matrix stack_rows(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch();
    Matrix r(a.spec(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

struct RrefResult {
    Matrix mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan over the exact field. Deterministic pivot choice: first
/// nonzero entry in column order.
inline RrefResult rref(Matrix m) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        FieldValue inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldValue f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    // drop zero rows
    Matrix out(m.spec(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return {out, r, pivots};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Linear subspace given by a reduced-echelon basis, one vector per row.
struct Subspace {
    std::size_t ambient = 0;
    Matrix basis;  // RREF, full row rank
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.rows(); }

    /// Membership by elimination against the pivots.
    bool contains(Vec v) const {
        if (v.size() != ambient) throw DimensionMismatch();
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            const FieldValue& f = v[pivots[i]];
            if (f.is_zero()) continue;
            FieldValue coef = f;
            for (std::size_t j = 0; j < ambient; ++j)
                v[j] = v[j] - coef * basis.at(i, j);
        }
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.basis.rows(); ++i)
            if (!contains(other.basis.row(i))) return false;
        return true;
    }
};

inline Subspace row_space(const Matrix& m) {
    RrefResult r = rref(m);
    return {m.cols(), r.mat, r.pivots};
}

/// Kernel of m, basis in RREF.
inline Subspace nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> rows;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), FieldValue::integer(m.spec(), 0));
        v[c] = FieldValue::integer(m.spec(), 1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.mat.at(i, c);
        rows.push_back(std::move(v));
    }
    return row_space(Matrix::from_rows(m.spec(), rows));
}

/// Solve m y = b; empty optional when inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionMismatch();
    Matrix aug(m.spec(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    Vec y(m.cols(), FieldValue::integer(m.spec(), 0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;  // pivot in augmented column
        y[r.pivots[i]] = r.mat.at(i, m.cols());
    }
    return y;
}

/// Matrix whose nullspace equals the span of s (dot-product annihilator).
inline Matrix annihilator(const Subspace& s) {
    Subspace k = nullspace(s.basis);
    if (k.dim() == 0) return Matrix(s.basis.spec(), 0, s.ambient);
    return k.basis;
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw DimensionMismatch();
    return nullspace(stack_rows(annihilator(a), annihilator(b)));
}

/// Incrementally maintained row space; add() reports whether the span grew.
class SpanBuilder {
  public:
    SpanBuilder(const FieldSpec& spec, std::size_t ambient) : spec_(spec), ambient_(ambient) {}

    bool add(Vec v) {
        if (v.size() != ambient_) throw DimensionMismatch();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const FieldValue& f = v[pivots_[i]];
            if (f.is_zero()) continue;
            FieldValue coef = f;
            for (std::size_t j = 0; j < ambient_; ++j) v[j] = v[j] - coef * rows_[i][j];
        }
        std::size_t pc = ambient_;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!v[j].is_zero()) {
                pc = j;
                break;
            }
        if (pc == ambient_) return false;
        FieldValue inv = v[pc].inv();
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = v[j] * inv;
        // back-substitute into existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const FieldValue& f = rows_[i][pc];
            if (f.is_zero()) continue;
            FieldValue coef = f;
            for (std::size_t j = 0; j < ambient_; ++j)
                rows_[i][j] = rows_[i][j] - coef * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < pc) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, pc);
        return true;
    }

    std::size_t dim() const { return rows_.size(); }

    Subspace subspace() const {
        return {ambient_, Matrix::from_rows(spec_, rows_), pivots_};
    }

  private:
    FieldSpec spec_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace dickson
