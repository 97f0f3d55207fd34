#pragma once

#include "mmt/matrix.hpp"

#include <string>
#include <vector>

namespace mmt {

/// Univariate polynomial over Q(zeta_N), dense, constant coefficient
/// first, no trailing zero coefficients (the zero polynomial is empty).
class Poly {
  public:
    explicit Poly(FieldPtr field);                          // zero polynomial
    Poly(FieldPtr field, std::vector<CycScalar> coeffs);    // trimmed on entry

    const FieldPtr& field() const { return field_; }
    const std::vector<CycScalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const CycScalar& leading() const;

    Poly monic() const;
    Poly derivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Division with remainder, b nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    /// Monic gcd (monic normalization at every step and on the result).
    static Poly gcd(const Poly& a, const Poly& b);

    bool is_squarefree() const;

    CycScalar eval(const CycScalar& x) const;
    ExactMatrix eval(const ExactMatrix& a) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    FieldPtr field_;
    std::vector<CycScalar> coeffs_;
};

/// Monic polynomial of least degree annihilating the matrix, found by
/// linear algebra on the flattened powers of a.
Poly minimal_polynomial(const ExactMatrix& a);

/// True iff the minimal polynomial is squarefree.
bool is_diagonalizable(const ExactMatrix& a);

} // namespace mmt
