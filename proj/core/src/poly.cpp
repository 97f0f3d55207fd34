#include "mmt/poly.hpp"

#include "mmt/errors.hpp"

#include <sstream>

namespace mmt {

namespace {

void trim(std::vector<CycScalar>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

} // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<CycScalar> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

const CycScalar& Poly::leading() const {
    if (is_zero()) throw FieldError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    CycScalar inv = leading().inverse();
    std::vector<CycScalar> c(coeffs_);
    for (auto& x : c) x *= inv;
    return Poly(field_, std::move(c));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(field_);
    std::vector<CycScalar> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * field_->integer(static_cast<long>(i)));
    return Poly(field_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<CycScalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                             a.field_->zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<CycScalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                             a.field_->zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<CycScalar> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                             a.field_->zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.field_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw FieldError("polynomial division by zero");
    std::vector<CycScalar> rem(a.coeffs_);
    std::vector<CycScalar> quot(a.coeffs_.size(), a.field_->zero());
    CycScalar lead_inv = b.leading().inverse();
    while (rem.size() >= b.coeffs_.size() && !rem.empty()) {
        if (rem.back().is_zero()) {
            rem.pop_back();
            continue;
        }
        std::size_t shift = rem.size() - b.coeffs_.size();
        CycScalar f = rem.back() * lead_inv;
        quot[shift] = f;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            rem[shift + i] -= f * b.coeffs_[i];
        trim(rem);
    }
    return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a.monic(), y = b.monic();
    if (x.is_zero()) return y;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

bool Poly::is_squarefree() const {
    if (is_zero()) return false;
    if (degree() == 0) return true;
    return gcd(*this, derivative()).degree() == 0;
}

CycScalar Poly::eval(const CycScalar& x) const {
    CycScalar acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

ExactMatrix Poly::eval(const ExactMatrix& a) const {
    if (a.rows() != a.cols()) throw ShapeError("polynomial of a non-square matrix");
    ExactMatrix acc(a.field(), a.rows(), a.cols());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * a;
        if (!coeffs_[i].is_zero())
            acc = acc + ExactMatrix::identity(a.field(), a.rows()).scaled(coeffs_[i]);
    }
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const bool unit = coeffs_[i].is_one();
        const bool composite = !coeffs_[i].is_rational();
        if (i == 0 || !unit) {
            if (composite) out << "(" << coeffs_[i].to_string() << ")";
            else out << coeffs_[i].to_string();
            if (i > 0) out << "*";
        }
        if (i >= 1) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Poly minimal_polynomial(const ExactMatrix& a) {
    if (a.rows() != a.cols())
        throw ShapeError("minimal polynomial of a non-square matrix");
    const FieldPtr& field = a.field();
    const std::size_t dim = a.rows() * a.cols();

    // Flattened powers a^0, a^1, ...; an echelon basis with bookkeeping of
    // the combination that produced each reduced row.
    std::vector<std::vector<CycScalar>> basis;        // echelon rows
    std::vector<std::vector<CycScalar>> combos;       // expression in powers
    ExactMatrix power = ExactMatrix::identity(field, a.rows());
    for (std::size_t d = 0;; ++d) {
        std::vector<CycScalar> row = power.vec();
        std::vector<CycScalar> combo(d + 1, field->zero());
        combo[d] = field->one();
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::size_t pivot = 0;
            while (pivot < dim && basis[b][pivot].is_zero()) ++pivot;
            if (pivot < dim && !row[pivot].is_zero()) {
                CycScalar f = row[pivot];
                for (std::size_t j = 0; j < dim; ++j) row[j] -= f * basis[b][j];
                for (std::size_t j = 0; j < combos[b].size(); ++j)
                    combo[j] -= f * combos[b][j];
            }
        }
        std::size_t lead = 0;
        while (lead < dim && row[lead].is_zero()) ++lead;
        if (lead == dim) {
            // dependency found: combo gives the minimal polynomial
            return Poly(field, std::move(combo)).monic();
        }
        CycScalar inv = row[lead].inverse();
        for (auto& e : row) e *= inv;
        for (auto& e : combo) e *= inv;
        basis.push_back(std::move(row));
        combos.push_back(std::move(combo));
        power = power * a;
        if (d > dim + 1)
            throw FieldError("internal: minimal polynomial search did not terminate");
    }
}

bool is_diagonalizable(const ExactMatrix& a) {
    return minimal_polynomial(a).is_squarefree();
}

} // namespace mmt
