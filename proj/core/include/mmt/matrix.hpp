#pragma once

#include "mmt/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mmt {

/// Dense matrix over Q(zeta_N), row-major. Shapes are tiny (at most 9x9
/// after Kronecker products), so everything is plain exact elimination.
class ExactMatrix {
  public:
    ExactMatrix(FieldPtr field, std::size_t rows, std::size_t cols); // zero-filled

    static ExactMatrix identity(const FieldPtr& field, std::size_t n);
    static ExactMatrix diagonal(const FieldPtr& field, const std::vector<CycScalar>& diag);
    static ExactMatrix from_rows(const FieldPtr& field,
                                 const std::vector<std::vector<CycScalar>>& rows);
    /// Convenience for tests and fixtures: rational entries.
    static ExactMatrix from_rationals(const FieldPtr& field,
                                      const std::vector<std::vector<Rational>>& rows);
    static ExactMatrix from_ints(const FieldPtr& field,
                                 const std::vector<std::vector<long>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const CycScalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, CycScalar v);

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;
    /// True iff the matrix is a scalar multiple of the identity.
    bool is_scalar() const;

    ExactMatrix transpose() const;
    CycScalar trace() const;
    CycScalar determinant() const;
    ExactMatrix inverse() const;      // throws SingularMatrixError
    ExactMatrix pow(long e) const;    // negative exponents via inverse

    ExactMatrix scaled(const CycScalar& s) const;

    /// Row-major flattening, length rows*cols.
    std::vector<CycScalar> vec() const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b);

    /// Lexicographic order over (rows, cols, entries), for canonical sorting.
    static int compare(const ExactMatrix& a, const ExactMatrix& b);

    std::string to_string() const;

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<CycScalar> entries_;
};

/// Kronecker product, (a.rows*b.rows) x (a.cols*b.cols).
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Reduced row echelon basis of the span of the given vectors; entries in
/// each pivot column are cleared and pivots normalized to 1.
std::vector<std::vector<CycScalar>> echelon_basis(
    std::vector<std::vector<CycScalar>> rows);

} // namespace mmt
