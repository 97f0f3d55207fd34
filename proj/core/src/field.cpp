#include "mmt/field.hpp"

#include "mmt/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mmt {

namespace {

// Plain polynomials over Q, dense, constant coefficient first. Used only
// for building Phi_N and for inverses modulo Phi_N.
using QPoly = std::vector<Rational>;

void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int q_deg(const QPoly& p) {
    return static_cast<int>(p.size()) - 1;
}

// Quotient of exact division (used where divisibility is guaranteed),
// remainder discarded by the caller when irrelevant.
QPoly q_divmod(QPoly num, const QPoly& den, QPoly* remainder_out) {
    QPoly quot(num.size(), Rational(0));
    const int dd = q_deg(den);
    while (q_deg(num) >= dd && dd >= 0) {
        const int k = q_deg(num) - dd;
        Rational c = num.back() / den.back();
        quot[k] = c;
        for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
        q_trim(num);
    }
    q_trim(quot);
    if (remainder_out) *remainder_out = std::move(num);
    return quot;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Phi_N via Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
QPoly cyclotomic_poly(unsigned n) {
    QPoly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = q_divmod(num, cyclotomic_poly(d), nullptr);
    }
    return num;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a + (...)*b = g, g monic.
// Invariant through the loop: a = u0 * a_orig (mod b_orig) and
// b = u1 * a_orig (mod b_orig), so the gcd's coefficient is u0 at exit.
std::pair<QPoly, QPoly> q_half_ext_gcd(QPoly a, QPoly b) {
    QPoly u0{Rational(1)}, u1{};
    while (!b.empty()) {
        QPoly rem;
        QPoly q = q_divmod(a, b, &rem);
        a = std::move(b);
        b = std::move(rem);
        QPoly qu1 = q_mul(q, u1);
        QPoly next(std::max(u0.size(), qu1.size()), Rational(0));
        for (std::size_t i = 0; i < u0.size(); ++i) next[i] += u0[i];
        for (std::size_t i = 0; i < qu1.size(); ++i) next[i] -= qu1[i];
        q_trim(next);
        u0 = std::move(u1);
        u1 = std::move(next);
    }
    if (a.empty()) throw FieldError("gcd of zero polynomials");
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    return {std::move(a), std::move(u0)};
}

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
    if (order == 0) throw FieldError("cyclotomic order must be positive");
    modulus_ = cyclotomic_poly(order);
    degree_ = static_cast<unsigned>(q_deg(modulus_));
    if (degree_ != euler_phi(order))
        throw FieldError("internal: cyclotomic degree mismatch");

    // x^(degree + i) mod Phi_N for i = 0 .. degree-2, enough to reduce any
    // product of two reduced elements.
    if (degree_ >= 1) {
        std::vector<Rational> cur(degree_, Rational(0));
        // x^degree = -(lower part of Phi_N)
        for (unsigned i = 0; i < degree_; ++i) cur[i] = -modulus_[i];
        power_table_.push_back(cur);
        for (unsigned i = 1; i + 1 < degree_; ++i) {
            std::vector<Rational> next(degree_, Rational(0));
            // multiply by x, fold the overflowing top term
            Rational top = cur[degree_ - 1];
            for (unsigned j = degree_ - 1; j >= 1; --j) next[j] = cur[j - 1];
            next[0] = 0;
            if (top != 0)
                for (unsigned j = 0; j < degree_; ++j)
                    next[j] += top * power_table_[0][j];
            power_table_.push_back(next);
            cur = power_table_.back();
        }
    }
}

FieldPtr CyclotomicField::get(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    FieldPtr f(new CyclotomicField(order));
    cache.emplace(order, f);
    return f;
}

CycScalar CyclotomicField::zero() const {
    return CycScalar(shared_from_this(), std::vector<Rational>(degree_, Rational(0)));
}

CycScalar CyclotomicField::one() const {
    return rational(Rational(1));
}

CycScalar CyclotomicField::rational(const Rational& q) const {
    std::vector<Rational> c(degree_, Rational(0));
    c[0] = q;
    return CycScalar(shared_from_this(), std::move(c));
}

CycScalar CyclotomicField::integer(long v) const {
    return rational(Rational(v));
}

CycScalar CyclotomicField::from_coeffs(std::vector<Rational> coeffs) const {
    if (coeffs.size() != degree_)
        throw FieldError("expected " + std::to_string(degree_) +
                         " coefficients, got " + std::to_string(coeffs.size()));
    return CycScalar(shared_from_this(), std::move(coeffs));
}

CycScalar CyclotomicField::zeta(long k) const {
    long r = k % static_cast<long>(order_);
    if (r < 0) r += order_;
    // x^r reduced mod Phi_N
    std::vector<Rational> c(degree_, Rational(0));
    if (static_cast<unsigned>(r) < degree_) {
        c[static_cast<unsigned>(r)] = 1;
        return CycScalar(shared_from_this(), std::move(c));
    }
    // reduce by repeated multiplication: start from x^(degree-1), multiply by x
    std::vector<Rational> cur(degree_, Rational(0));
    cur[degree_ - 1] = 1;
    for (long step = degree_ - 1; step < r; ++step) {
        std::vector<Rational> next(degree_, Rational(0));
        Rational top = cur[degree_ - 1];
        for (unsigned j = degree_ - 1; j >= 1; --j) next[j] = cur[j - 1];
        if (top != 0)
            for (unsigned j = 0; j < degree_; ++j) next[j] += top * power_table_[0][j];
        cur = std::move(next);
    }
    return CycScalar(shared_from_this(), std::move(cur));
}

CycScalar CyclotomicField::root_of_unity(unsigned m, long k) const {
    if (m == 0 || order_ % m != 0)
        throw FieldError("zeta_" + std::to_string(m) + " does not lie in Q(zeta_" +
                         std::to_string(order_) + "): order must divide " +
                         std::to_string(order_));
    return zeta(static_cast<long>(order_ / m) * k);
}

std::vector<CycScalar> CyclotomicField::all_roots_of_unity() const {
    std::vector<CycScalar> roots;
    for (unsigned k = 0; k < order_; ++k) {
        CycScalar z = zeta(k);
        roots.push_back(z);
        CycScalar neg = -z;
        if (std::none_of(roots.begin(), roots.end(),
                         [&](const CycScalar& r) { return r == neg; }))
            roots.push_back(neg);
    }
    // drop duplicates from even orders where -zeta^k is again a power
    std::sort(roots.begin(), roots.end(),
              [](const CycScalar& a, const CycScalar& b) { return CycScalar::compare(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

CycScalar CyclotomicField::scalar_root(const CycScalar& lambda, unsigned m) const {
    if (m == 0) throw FieldError("root order must be positive");
    if (lambda.is_zero()) throw FieldError("zero has no invertible root");
    // try the trivial root-of-unity part first so that inputs which are
    // already m-th powers of positive rationals get the plain root
    std::vector<CycScalar> candidates = {one()};
    for (const CycScalar& w : all_roots_of_unity())
        if (!w.is_one()) candidates.push_back(w);
    for (const CycScalar& w : candidates) {
        CycScalar y = lambda / w.pow(static_cast<long>(m));
        if (!y.is_rational()) continue;
        auto root = exact_rational_root(y.rational_value(), m);
        if (root) return rational(*root) * w;
    }
    throw FieldError("no " + std::to_string(m) + "-th root of " + lambda.to_string() +
                     " in Q(zeta_" + std::to_string(order_) +
                     "); consider a larger cyclotomic order");
}

CycScalar::CycScalar(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

bool CycScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool CycScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool CycScalar::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

Rational CycScalar::rational_value() const {
    if (!is_rational())
        throw FieldError("scalar " + to_string() + " is not rational");
    return coeffs_[0];
}

void require_same_field(const CycScalar& a, const CycScalar& b) {
    if (a.field()->order() != b.field()->order())
        throw FieldError("mixed cyclotomic orders " +
                         std::to_string(a.field()->order()) + " and " +
                         std::to_string(b.field()->order()));
}

CycScalar CycScalar::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return CycScalar(field_, std::move(c));
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    require_same_field(a, b);
    std::vector<Rational> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return CycScalar(a.field_, std::move(c));
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) {
    require_same_field(a, b);
    std::vector<Rational> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
    return CycScalar(a.field_, std::move(c));
}

CycScalar CycScalar::mul(const CycScalar& b) const {
    require_same_field(*this, b);
    const unsigned d = field_->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * b.coeffs_[j];
        }
    }
    std::vector<Rational> c(prod.begin(), prod.begin() + d);
    for (unsigned k = d; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const auto& row = field_->power_table_[k - d];
        for (unsigned j = 0; j < d; ++j)
            if (row[j] != 0) c[j] += prod[k] * row[j];
    }
    return CycScalar(field_, std::move(c));
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    return a.mul(b);
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (is_rational()) return field_->rational(Rational(1) / coeffs_[0]);
    QPoly a(coeffs_);
    q_trim(a);
    auto [g, u] = q_half_ext_gcd(std::move(a), field_->modulus());
    if (q_deg(g) != 0)
        throw FieldError("internal: modulus not coprime to element");
    if (u.size() > field_->degree()) {
        QPoly rem;
        q_divmod(std::move(u), field_->modulus(), &rem);
        u = std::move(rem);
    }
    std::vector<Rational> c(field_->degree(), Rational(0));
    for (std::size_t i = 0; i < u.size(); ++i) c[i] = u[i];
    return CycScalar(field_, std::move(c));
}

CycScalar operator/(const CycScalar& a, const CycScalar& b) {
    return a * b.inverse();
}

CycScalar& CycScalar::operator+=(const CycScalar& b) { return *this = *this + b; }
CycScalar& CycScalar::operator-=(const CycScalar& b) { return *this = *this - b; }
CycScalar& CycScalar::operator*=(const CycScalar& b) { return *this = *this * b; }
CycScalar& CycScalar::operator/=(const CycScalar& b) { return *this = *this / b; }

CycScalar CycScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar base = *this;
    CycScalar acc = field_->one();
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return acc;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    require_same_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

int CycScalar::compare(const CycScalar& a, const CycScalar& b) {
    require_same_field(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycScalar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (abs_c == 1);
        if (i == 0) {
            out << rational_to_string(abs_c);
        } else {
            if (!unit) out << rational_to_string(abs_c) << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace mmt
