#include "mmt/matrix.hpp"

#include "mmt/errors.hpp"

#include <sstream>

namespace mmt {

ExactMatrix::ExactMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(rows * cols, field_->zero()) {
    if (rows == 0 || cols == 0)
        throw ShapeError("matrix dimensions must be positive");
}

ExactMatrix ExactMatrix::identity(const FieldPtr& field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field->one());
    return m;
}

ExactMatrix ExactMatrix::diagonal(const FieldPtr& field,
                                  const std::vector<CycScalar>& diag) {
    ExactMatrix m(field, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldPtr& field,
                                   const std::vector<std::vector<CycScalar>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw ShapeError("matrix dimensions must be positive");
    ExactMatrix m(field, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw ShapeError("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_rationals(const FieldPtr& field,
                                        const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<CycScalar>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<CycScalar> row;
        row.reserve(r.size());
        for (const auto& q : r) row.push_back(field->rational(q));
        conv.push_back(std::move(row));
    }
    return from_rows(field, conv);
}

ExactMatrix ExactMatrix::from_ints(const FieldPtr& field,
                                   const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return from_rationals(field, conv);
}

const CycScalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    return entries_[i * cols_ + j];
}

void ExactMatrix::set(std::size_t i, std::size_t j, CycScalar v) {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    require_same_field(entries_[0], v);
    entries_[i * cols_ + j] = std::move(v);
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool ExactMatrix::is_diagonal() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool ExactMatrix::is_scalar() const {
    if (!is_diagonal()) return false;
    for (std::size_t i = 1; i < rows_; ++i)
        if (at(i, i) != at(0, 0)) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

CycScalar ExactMatrix::trace() const {
    if (rows_ != cols_) throw ShapeError("trace of a non-square matrix");
    CycScalar s = field_->zero();
    for (std::size_t i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

CycScalar ExactMatrix::determinant() const {
    if (rows_ != cols_) throw ShapeError("determinant of a non-square matrix");
    ExactMatrix w(*this);
    CycScalar det = field_->one();
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return field_->zero();
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) {
                CycScalar tmp = w.at(col, j);
                w.set(col, j, w.at(pivot, j));
                w.set(pivot, j, tmp);
            }
            det = -det;
        }
        det *= w.at(col, col);
        CycScalar inv = w.at(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (w.at(i, col).is_zero()) continue;
            CycScalar f = w.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                w.set(i, j, w.at(i, j) - f * w.at(col, j));
        }
    }
    return det;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse of a non-square matrix");
    ExactMatrix w(*this);
    ExactMatrix inv = identity(field_, rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) throw SingularMatrixError("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) {
                CycScalar tmp = w.at(col, j);
                w.set(col, j, w.at(pivot, j));
                w.set(pivot, j, tmp);
                tmp = inv.at(col, j);
                inv.set(col, j, inv.at(pivot, j));
                inv.set(pivot, j, tmp);
            }
        }
        CycScalar scale = w.at(col, col).inverse();
        for (std::size_t j = 0; j < cols_; ++j) {
            w.set(col, j, w.at(col, j) * scale);
            inv.set(col, j, inv.at(col, j) * scale);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            CycScalar f = w.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                w.set(i, j, w.at(i, j) - f * w.at(col, j));
                inv.set(i, j, inv.at(i, j) - f * inv.at(col, j));
            }
        }
    }
    return inv;
}

ExactMatrix ExactMatrix::pow(long e) const {
    if (rows_ != cols_) throw ShapeError("power of a non-square matrix");
    if (e < 0) return inverse().pow(-e);
    ExactMatrix acc = identity(field_, rows_);
    ExactMatrix base(*this);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

ExactMatrix ExactMatrix::scaled(const CycScalar& s) const {
    ExactMatrix r(*this);
    for (auto& e : r.entries_) e *= s;
    return r;
}

std::vector<CycScalar> ExactMatrix::vec() const {
    return entries_;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("matrix addition shape mismatch");
    ExactMatrix r(a);
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("matrix subtraction shape mismatch");
    ExactMatrix r(a);
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    ExactMatrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.set(i, j, r.at(i, j) + aik * b.at(k, j));
            }
        }
    return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i] != b.entries_[i]) return false;
    return true;
}

bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

int ExactMatrix::compare(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        int c = CycScalar::compare(a.entries_[i], b.entries_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    out << "]";
    return out.str();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.set(i * b.rows() + k, j * b.cols() + l, a.at(i, j) * b.at(k, l));
                }
        }
    return r;
}

std::vector<std::vector<CycScalar>> echelon_basis(
    std::vector<std::vector<CycScalar>> rows) {
    std::vector<std::vector<CycScalar>> basis;
    for (auto& row : rows) {
        // reduce against existing pivots
        for (const auto& b : basis) {
            std::size_t pivot = 0;
            while (pivot < b.size() && b[pivot].is_zero()) ++pivot;
            if (pivot < row.size() && !row[pivot].is_zero()) {
                CycScalar f = row[pivot];
                for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * b[j];
            }
        }
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size()) continue; // dependent
        CycScalar inv = row[lead].inverse();
        for (auto& e : row) e *= inv;
        // clear the new pivot column in earlier basis rows
        for (auto& b : basis) {
            if (!b[lead].is_zero()) {
                CycScalar f = b[lead];
                for (std::size_t j = 0; j < b.size(); ++j) b[j] -= f * row[j];
            }
        }
        basis.push_back(std::move(row));
    }
    // sort by pivot position for a deterministic result
    std::sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) {
        std::size_t px = 0, py = 0;
        while (px < x.size() && x[px].is_zero()) ++px;
        while (py < y.size() && y[py].is_zero()) ++py;
        return px < py;
    });
    return basis;
}

} // namespace mmt
