#pragma once

#include "mmt/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mmt {

/// The format <m,n,p> of a matrix multiplication map: m x n times n x p.
/// The three factor spaces have dimensions m*n, n*p and p*m.
struct Shape {
    std::size_t m = 0, n = 0, p = 0;

    Shape() = default;
    Shape(std::size_t m_, std::size_t n_, std::size_t p_);

    std::size_t dim_x() const { return m * n; }
    std::size_t dim_y() const { return n * p; }
    std::size_t dim_z() const { return p * m; }

    friend bool operator==(const Shape& a, const Shape& b) = default;
    std::string to_string() const; // "<m,n,p>"
};

/// Order-3 tensor in M_{m x n} (x) M_{n x p} (x) M_{p x m}, stored dense.
/// Coordinates are indexed by the row-major flattenings of the three
/// matrix factors.
class DenseTensor {
  public:
    DenseTensor(FieldPtr field, Shape shape); // zero

    const FieldPtr& field() const { return field_; }
    const Shape& shape() const { return shape_; }

    const CycScalar& at(std::size_t r, std::size_t s, std::size_t t) const;
    void set(std::size_t r, std::size_t s, std::size_t t, CycScalar v);
    void add(std::size_t r, std::size_t s, std::size_t t, const CycScalar& v);

    bool is_zero() const;
    std::size_t nonzero_count() const;

    struct Coord {
        std::size_t r, s, t;
        CycScalar value;
    };
    std::vector<Coord> nonzero_coords() const;

    friend DenseTensor operator+(const DenseTensor& a, const DenseTensor& b);
    friend DenseTensor operator-(const DenseTensor& a, const DenseTensor& b);
    friend bool operator==(const DenseTensor& a, const DenseTensor& b);
    friend bool operator!=(const DenseTensor& a, const DenseTensor& b);

  private:
    FieldPtr field_;
    Shape shape_;
    std::vector<CycScalar> coords_;

    std::size_t index(std::size_t r, std::size_t s, std::size_t t) const;
};

/// The structure tensor of <m,n,p>: sum over (i,j,k) of
/// e_ij (x) e_jk (x) e_ki. Has exactly m*n*p unit coordinates.
DenseTensor matmul_tensor(const FieldPtr& field, const Shape& shape);

/// An elementary (rank-one) tensor x (x) y (x) z with nonzero factors of
/// shapes m x n, n x p, p x m.
class RankOneTerm {
  public:
    RankOneTerm(ExactMatrix x, ExactMatrix y, ExactMatrix z);

    const ExactMatrix& x() const { return x_; }
    const ExactMatrix& y() const { return y_; }
    const ExactMatrix& z() const { return z_; }
    Shape shape() const;
    const FieldPtr& field() const { return x_.field(); }

    /// Lexicographic order over the factor entries, for multiset sorting.
    static int compare(const RankOneTerm& a, const RankOneTerm& b);
    friend bool operator==(const RankOneTerm& a, const RankOneTerm& b);

  private:
    ExactMatrix x_, y_, z_;
};

/// Scale-canonical representative of the same elementary tensor: the
/// first nonzero entry of x (row-major) and of y are scaled to 1 and both
/// factors pushed into z. Idempotent; two terms represent the same tensor
/// iff their canonical forms are equal entrywise.
RankOneTerm canonical_term(const RankOneTerm& t);

/// A multiset of rank-one terms for a given shape. Terms are stored in
/// canonical form and canonically sorted, so multiset equality is
/// entrywise equality and term indices are well defined positions.
class Decomposition {
  public:
    Decomposition(FieldPtr field, Shape shape, std::vector<RankOneTerm> terms);

    const FieldPtr& field() const { return field_; }
    const Shape& shape() const { return shape_; }
    const std::vector<RankOneTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// True iff some canonical term occurs more than once.
    bool has_duplicate_terms() const;

    friend bool operator==(const Decomposition& a, const Decomposition& b);
    friend bool operator!=(const Decomposition& a, const Decomposition& b);

  private:
    FieldPtr field_;
    Shape shape_;
    std::vector<RankOneTerm> terms_;
};

/// Exact sum of the outer products of the flattened factors.
DenseTensor expand(const Decomposition& d);
DenseTensor expand_terms(const FieldPtr& field, const Shape& shape,
                         std::span<const RankOneTerm> terms);

/// Result of checking a decomposition against the matmul tensor of its
/// shape: either valid or the nonzero residual expand(d) - <m,n,p>.
struct VerifyResult {
    bool valid = false;
    std::optional<DenseTensor> residual;
};
VerifyResult verify(const Decomposition& d);

/// Basis (echelon, flattened) of the span of the selected factor's
/// matrices; factor is 1, 2 or 3 for x, y, z.
std::vector<ExactMatrix> projection(std::span<const RankOneTerm> terms, int factor);

/// Placement of a tensor of shape <|rows|,|cols|,|depth|> inside a larger
/// matmul-structured space: index lists map each summand axis into the
/// ambient axes (all entries distinct, within the ambient shape).
struct BlockEmbedding {
    std::vector<std::size_t> rows;   ///< into [0, ambient.m)
    std::vector<std::size_t> cols;   ///< into [0, ambient.n)
    std::vector<std::size_t> depth;  ///< into [0, ambient.p)
};

/// Direct sum of tensors placed by the given embeddings. The images of
/// the summands must occupy disjoint coordinate subspaces in each of the
/// three factor spaces; overlapping blocks are rejected.
DenseTensor direct_sum(const std::vector<std::pair<DenseTensor, BlockEmbedding>>& summands,
                       const Shape& ambient);

/// Convenience two-summand direct sum in leading/trailing block position;
/// the ambient shape is the coordinatewise sum of the two shapes.
DenseTensor direct_sum(const DenseTensor& w1, const DenseTensor& w2);

/// Recursion exponent tau = 3*ln(l) / ln(m*n*p) of a length-l algorithm
/// for <m,n,p>. Display-grade floating point; the only inexact value in
/// the library.
double tau_exponent(const Shape& shape, std::size_t l);

} // namespace mmt
