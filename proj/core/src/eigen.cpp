#include "mmt/eigen.hpp"

#include "mmt/errors.hpp"

namespace mmt {

EigenStructure finite_order_eigensplit(const ExactMatrix& a, unsigned m) {
    if (a.rows() != a.cols()) throw ShapeError("eigensplit of a non-square matrix");
    if (m == 0) throw OrderError("order must be positive");
    const FieldPtr& field = a.field();
    if (field->order() % m != 0)
        throw FieldError("order " + std::to_string(m) + " does not divide the cyclotomic order " +
                         std::to_string(field->order()));

    std::vector<ExactMatrix> powers;
    powers.reserve(m);
    powers.push_back(ExactMatrix::identity(field, a.rows()));
    for (unsigned j = 1; j < m; ++j) powers.push_back(powers.back() * a);
    if (!(powers.back() * a).is_identity())
        throw OrderError("matrix does not satisfy a^" + std::to_string(m) + " = identity");

    EigenStructure s;
    s.order = m;
    const CycScalar inv_m = field->rational(Rational(1, static_cast<long>(m)));
    for (unsigned k = 0; k < m; ++k) {
        ExactMatrix p(field, a.rows(), a.rows());
        for (unsigned j = 0; j < m; ++j) {
            CycScalar chi = field->root_of_unity(m, -static_cast<long>(k) * static_cast<long>(j));
            p = p + powers[j].scaled(chi);
        }
        p = p.scaled(inv_m);
        if (p.is_zero()) continue;
        CycScalar tr = p.trace();
        if (!tr.is_rational() || !is_integer(tr.rational_value()) || tr.rational_value() <= 0)
            throw OrderError("internal: projector trace is not a positive integer");
        s.eigenvalues.push_back(field->root_of_unity(m, static_cast<long>(k)));
        s.projectors.push_back(std::move(p));
        s.multiplicities.push_back(static_cast<std::size_t>(tr.rational_value().get_num().get_si()));
    }

    std::size_t total = 0;
    for (std::size_t mult : s.multiplicities) total += mult;
    if (total != a.rows())
        throw OrderError("internal: multiplicities do not sum to the dimension");
    return s;
}

} // namespace mmt
