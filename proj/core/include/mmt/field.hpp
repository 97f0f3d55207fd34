#pragma once

#include "mmt/rational.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace mmt {

class CycScalar;
class CyclotomicField;

/// Shared handle to an immutable field description. One instance exists
/// per order N; every scalar in a workspace carries one.
using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// The cyclotomic field Q(zeta_N). Elements are written in the power
/// basis {1, z, ..., z^(phi(N)-1)} of z = zeta_N, a primitive N-th root
/// of unity, and reduced modulo the N-th cyclotomic polynomial.
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
  public:
    /// Cached accessor; all callers asking for the same N share one object.
    static FieldPtr get(unsigned order);

    unsigned order() const { return order_; }       ///< N
    unsigned degree() const { return degree_; }     ///< phi(N)

    /// Monic modulus Phi_N, as its degree+1 coefficients (constant first).
    const std::vector<Rational>& modulus() const { return modulus_; }

    CycScalar zero() const;
    CycScalar one() const;
    CycScalar rational(const Rational& q) const;
    CycScalar integer(long v) const;
    CycScalar from_coeffs(std::vector<Rational> coeffs) const;

    /// zeta_N^k for any integer k (negative means inverse powers).
    CycScalar zeta(long k = 1) const;

    /// zeta_m^k where m must divide N.
    CycScalar root_of_unity(unsigned m, long k = 1) const;

    /// All roots of unity contained in the field: the cyclic group
    /// generated by -1 and zeta_N, of order lcm(2, N).
    std::vector<CycScalar> all_roots_of_unity() const;

    /// An m-th root of lambda of the form (positive rational) * (root of
    /// unity), if the field contains one. Throws FieldError otherwise.
    CycScalar scalar_root(const CycScalar& lambda, unsigned m) const;

  private:
    explicit CyclotomicField(unsigned order);

    unsigned order_;
    unsigned degree_;
    std::vector<Rational> modulus_;
    // power_table_[i] = coefficients of x^(degree_+i) mod Phi_N.
    std::vector<std::vector<Rational>> power_table_;

    friend class CycScalar;
};

/// An element of Q(zeta_N). Immutable value type; all arithmetic is exact.
class CycScalar {
  public:
    CycScalar() = delete;

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    /// The rational value of a rational element. Throws FieldError if the
    /// element has nonzero coefficients on higher basis powers.
    Rational rational_value() const;

    CycScalar operator-() const;
    CycScalar inverse() const;
    CycScalar pow(long e) const;

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b);
    CycScalar& operator+=(const CycScalar& b);
    CycScalar& operator-=(const CycScalar& b);
    CycScalar& operator*=(const CycScalar& b);
    CycScalar& operator/=(const CycScalar& b);

    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b);

    /// Total order for canonical sorting: lexicographic over the
    /// coefficient vector. Not compatible with field arithmetic.
    static int compare(const CycScalar& a, const CycScalar& b);

    /// Human-readable form, e.g. "1/2 - z^2" with z = zeta_N.
    std::string to_string() const;

  private:
    CycScalar(FieldPtr field, std::vector<Rational> coeffs);

    CycScalar mul(const CycScalar& b) const;

    FieldPtr field_;
    std::vector<Rational> coeffs_; // length phi(N)

    friend class CyclotomicField;
};

/// Throws FieldError unless both scalars live in fields of the same order.
void require_same_field(const CycScalar& a, const CycScalar& b);

} // namespace mmt
