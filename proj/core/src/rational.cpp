#include "mmt/rational.hpp"

#include "mmt/errors.hpp"

#include <cctype>

namespace mmt {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text))
            throw ParseError("invalid rational: '" + text + "'");
        return Rational(mpz_class(text, 10));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("invalid rational: '" + text + "'");
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(mpz_class(num, 10), d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

Rational rational_pow(const Rational& q, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rational> exact_rational_root(const Rational& q, unsigned long m) {
    if (m == 0 || sgn(q) <= 0) return std::nullopt;
    if (m == 1) return q;
    mpz_class num_root, den_root;
    const bool num_exact =
        mpz_root(num_root.get_mpz_t(), q.get_num().get_mpz_t(), m) != 0;
    const bool den_exact =
        mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(), m) != 0;
    if (!num_exact || !den_exact) return std::nullopt;
    Rational r(num_root, den_root);
    r.canonicalize();
    return r;
}

} // namespace mmt
