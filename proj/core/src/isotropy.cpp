#include "mmt/isotropy.hpp"

#include "mmt/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mmt {

namespace {

struct SymData {
    std::array<std::size_t, 3> from; // new slot i holds old factor from[i]
    bool transpose;
};

// Order matches the FactorSymmetry enum.
constexpr std::array<SymData, 6> kSymData = {{
    {{0, 1, 2}, false}, // Id
    {{2, 0, 1}, false}, // S
    {{1, 2, 0}, false}, // S2
    {{1, 0, 2}, true},  // R
    {{2, 1, 0}, true},  // SR
    {{0, 2, 1}, true},  // S2R
}};

const SymData& data(FactorSymmetry q) {
    return kSymData[static_cast<std::size_t>(q)];
}

FactorSymmetry from_data(const std::array<std::size_t, 3>& from, bool transpose) {
    for (std::size_t i = 0; i < kSymData.size(); ++i)
        if (kSymData[i].from == from && kSymData[i].transpose == transpose)
            return static_cast<FactorSymmetry>(i);
    throw Error("internal: unknown factor symmetry data");
}

} // namespace

FactorSymmetry compose(FactorSymmetry g, FactorSymmetry h) {
    const SymData& dg = data(g);
    const SymData& dh = data(h);
    std::array<std::size_t, 3> from{};
    for (std::size_t i = 0; i < 3; ++i) from[i] = dh.from[dg.from[i]];
    return from_data(from, dg.transpose != dh.transpose);
}

FactorSymmetry inverse(FactorSymmetry q) {
    switch (q) {
        case FactorSymmetry::S: return FactorSymmetry::S2;
        case FactorSymmetry::S2: return FactorSymmetry::S;
        default: return q; // identity and the three reflections are involutions
    }
}

std::array<std::size_t, 3> factor_permutation(FactorSymmetry q) {
    const auto& from = data(q).from;
    std::array<std::size_t, 3> go{};
    for (std::size_t i = 0; i < 3; ++i) go[from[i]] = i;
    return go;
}

bool transposes(FactorSymmetry q) { return data(q).transpose; }

const char* symmetry_tag(FactorSymmetry q) {
    switch (q) {
        case FactorSymmetry::Id: return "id";
        case FactorSymmetry::S: return "s";
        case FactorSymmetry::S2: return "s2";
        case FactorSymmetry::R: return "r";
        case FactorSymmetry::SR: return "sr";
        case FactorSymmetry::S2R: return "s2r";
    }
    throw Error("internal: bad factor symmetry");
}

FactorSymmetry parse_symmetry(const std::string& s) {
    for (int i = 0; i < 6; ++i) {
        auto q = static_cast<FactorSymmetry>(i);
        if (s == symmetry_tag(q)) return q;
    }
    throw ParseError("unknown factor symmetry '" + s + "' (expected id, s, s2, r, sr, s2r)");
}

std::string factor_permutation_cycles(FactorSymmetry q) {
    auto go = factor_permutation(q);
    std::array<bool, 3> seen{};
    std::ostringstream out;
    bool any = false;
    for (std::size_t start = 0; start < 3; ++start) {
        if (seen[start] || go[start] == start) continue;
        any = true;
        out << "(";
        std::size_t cur = start;
        bool first = true;
        do {
            seen[cur] = true;
            if (!first) out << "";
            first = false;
            out << (cur + 1);
            cur = go[cur];
        } while (cur != start);
        out << ")";
    }
    return any ? out.str() : "id";
}

Shape symmetry_image_shape(FactorSymmetry q, const Shape& shape) {
    const SymData& d = data(q);
    // factor dims of <m,n,p>: slot 0 is m x n, slot 1 is n x p, slot 2 is p x m
    std::array<std::pair<std::size_t, std::size_t>, 3> dims = {{
        {shape.m, shape.n}, {shape.n, shape.p}, {shape.p, shape.m}}};
    std::array<std::pair<std::size_t, std::size_t>, 3> img{};
    for (std::size_t i = 0; i < 3; ++i) {
        img[i] = dims[d.from[i]];
        if (d.transpose) std::swap(img[i].first, img[i].second);
    }
    return Shape(img[0].first, img[0].second, img[1].second);
}

bool symmetry_admissible(FactorSymmetry q, const Shape& shape) {
    return symmetry_image_shape(q, shape) == shape;
}

RankOneTerm apply_symmetry(FactorSymmetry q, const RankOneTerm& t) {
    const SymData& d = data(q);
    std::array<const ExactMatrix*, 3> f = {&t.x(), &t.y(), &t.z()};
    auto pick = [&](std::size_t i) {
        return d.transpose ? f[d.from[i]]->transpose() : *f[d.from[i]];
    };
    return RankOneTerm(pick(0), pick(1), pick(2));
}

IsotropyElement::IsotropyElement(FactorSymmetry q, ExactMatrix a, ExactMatrix b,
                                 ExactMatrix c)
    : q_(q), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      a_inv_(a_.inverse()), b_inv_(b_.inverse()), c_inv_(c_.inverse()) {
    if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || c_.rows() != c_.cols())
        throw ShapeError("sandwich matrices must be square");
    if (a_.field()->order() != b_.field()->order() ||
        a_.field()->order() != c_.field()->order())
        throw FieldError("sandwich matrices live in different fields");
    if (!symmetry_admissible(q_, shape()))
        throw ShapeError("factor symmetry '" + std::string(symmetry_tag(q_)) +
                         "' is not admissible for shape " + shape().to_string());
}

IsotropyElement IsotropyElement::sandwich(ExactMatrix a, ExactMatrix b, ExactMatrix c) {
    return IsotropyElement(FactorSymmetry::Id, std::move(a), std::move(b), std::move(c));
}

IsotropyElement IsotropyElement::identity(const FieldPtr& field, const Shape& shape) {
    return IsotropyElement(FactorSymmetry::Id, ExactMatrix::identity(field, shape.m),
                           ExactMatrix::identity(field, shape.n),
                           ExactMatrix::identity(field, shape.p));
}

IsotropyElement IsotropyElement::symmetry(const FieldPtr& field, const Shape& shape,
                                          FactorSymmetry q) {
    return IsotropyElement(q, ExactMatrix::identity(field, shape.m),
                           ExactMatrix::identity(field, shape.n),
                           ExactMatrix::identity(field, shape.p));
}

Shape IsotropyElement::shape() const {
    return Shape(a_.rows(), b_.rows(), c_.rows());
}

namespace {

ExactMatrix projective_normal(const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return m.scaled(m.at(i, j).inverse());
    throw SingularMatrixError("zero matrix in projective normalization");
}

} // namespace

int IsotropyElement::compare_projective(const IsotropyElement& g, const IsotropyElement& h) {
    if (g.q_ != h.q_)
        return static_cast<int>(g.q_) < static_cast<int>(h.q_) ? -1 : 1;
    int c = ExactMatrix::compare(projective_normal(g.a_), projective_normal(h.a_));
    if (c != 0) return c;
    c = ExactMatrix::compare(projective_normal(g.b_), projective_normal(h.b_));
    if (c != 0) return c;
    return ExactMatrix::compare(projective_normal(g.c_), projective_normal(h.c_));
}

std::string IsotropyElement::to_string() const {
    std::ostringstream out;
    out << symmetry_tag(q_) << " . T(a,b,c) with\na = " << a_.to_string()
        << "\nb = " << b_.to_string() << "\nc = " << c_.to_string();
    return out.str();
}

RankOneTerm apply_to_term(const IsotropyElement& g, const RankOneTerm& t) {
    if (!(t.shape() == g.shape()))
        throw ShapeError("term shape " + t.shape().to_string() +
                         " does not match element shape " + g.shape().to_string());
    RankOneTerm sandwiched(g.a() * t.x() * g.b_inv(), g.b() * t.y() * g.c_inv(),
                           g.c() * t.z() * g.a_inv());
    return canonical_term(apply_symmetry(g.q(), sandwiched));
}

Decomposition act_on_decomposition(const IsotropyElement& g, const Decomposition& d) {
    std::vector<RankOneTerm> images;
    images.reserve(d.size());
    for (const auto& t : d.terms()) images.push_back(apply_to_term(g, t));
    return Decomposition(d.field(), d.shape(), std::move(images));
}

namespace {

// q T(a,b,c) q^-1 = T(conjugate_triple(q, a, b, c))
std::array<ExactMatrix, 3> conjugate_triple(FactorSymmetry q, const ExactMatrix& a,
                                            const ExactMatrix& b, const ExactMatrix& c) {
    auto it = [](const ExactMatrix& m) { return m.inverse().transpose(); };
    switch (q) {
        case FactorSymmetry::Id: return {a, b, c};
        case FactorSymmetry::S: return {c, a, b};
        case FactorSymmetry::S2: return {b, c, a};
        case FactorSymmetry::R: return {it(c), it(b), it(a)};
        case FactorSymmetry::SR: return {it(a), it(c), it(b)};
        case FactorSymmetry::S2R: return {it(b), it(a), it(c)};
    }
    throw Error("internal: bad factor symmetry");
}

} // namespace

IsotropyElement compose(const IsotropyElement& g, const IsotropyElement& h) {
    if (!(g.shape() == h.shape()))
        throw ShapeError("cannot compose elements of shapes " + g.shape().to_string() +
                         " and " + h.shape().to_string());
    FactorSymmetry q = compose(g.q(), h.q());
    auto moved = conjugate_triple(inverse(h.q()), g.a(), g.b(), g.c());
    return IsotropyElement(q, moved[0] * h.a(), moved[1] * h.b(), moved[2] * h.c());
}

IsotropyElement inverse(const IsotropyElement& g) {
    auto moved = conjugate_triple(g.q(), g.a_inv(), g.b_inv(), g.c_inv());
    return IsotropyElement(inverse(g.q()), std::move(moved[0]), std::move(moved[1]),
                           std::move(moved[2]));
}

bool equal_elements(const IsotropyElement& g, const IsotropyElement& h) {
    if (!(g.shape() == h.shape())) return false;
    return IsotropyElement::compare_projective(g, h) == 0;
}

unsigned element_order(const IsotropyElement& g, unsigned cap) {
    IsotropyElement id = IsotropyElement::identity(g.field(), g.shape());
    IsotropyElement power = g;
    for (unsigned k = 1; k <= cap; ++k) {
        if (equal_elements(power, id)) return k;
        power = compose(power, g);
    }
    throw CapError("element order exceeds cap " + std::to_string(cap));
}

std::string SymmetryReport::alpha_cycle_type() const {
    std::vector<bool> seen(alpha.size(), false);
    std::map<std::size_t, std::size_t> counts; // cycle length -> multiplicity
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, cur = i;
        do {
            seen[cur] = true;
            cur = alpha[cur];
            ++len;
        } while (cur != i);
        ++counts[len];
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [len, mult] : counts) {
        if (!first) out << " ";
        first = false;
        out << len;
        if (mult > 1) out << "^" << mult;
    }
    return out.str();
}

std::optional<SymmetryReport> is_automorphism(const IsotropyElement& g,
                                              const Decomposition& d) {
    const auto& terms = d.terms();
    std::vector<bool> used(terms.size(), false);
    SymmetryReport report;
    report.alpha.resize(terms.size());
    report.beta = g.q();
    report.alpha_unique = !d.has_duplicate_terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        RankOneTerm image = apply_to_term(g, terms[i]);
        // lowest free index among equal stored terms
        auto lower = std::lower_bound(terms.begin(), terms.end(), image,
                                      [](const RankOneTerm& a, const RankOneTerm& b) {
                                          return RankOneTerm::compare(a, b) < 0;
                                      });
        bool matched = false;
        for (auto it = lower; it != terms.end() && RankOneTerm::compare(*it, image) == 0;
             ++it) {
            std::size_t idx = static_cast<std::size_t>(it - terms.begin());
            if (!used[idx]) {
                used[idx] = true;
                report.alpha[i] = idx;
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    return report;
}

std::vector<IsotropyElement> group_closure(std::span<const IsotropyElement> generators,
                                           std::size_t cap) {
    if (cap == 0) throw CapError("closure cap must be positive");
    if (generators.empty()) return {};
    auto less = [](const IsotropyElement& a, const IsotropyElement& b) {
        return IsotropyElement::compare_projective(a, b) < 0;
    };
    std::set<IsotropyElement, decltype(less)> seen(less);
    std::vector<IsotropyElement> queue;
    for (const auto& g : generators) {
        if (!(g.shape() == generators.front().shape()))
            throw ShapeError("generators of mixed shapes");
        if (seen.insert(g).second) queue.push_back(g);
    }
    while (!queue.empty()) {
        IsotropyElement g = std::move(queue.back());
        queue.pop_back();
        for (const auto& h : generators) {
            IsotropyElement prod = compose(g, h);
            if (seen.insert(prod).second) {
                if (seen.size() > cap)
                    throw CapError("group closure exceeded cap " + std::to_string(cap) +
                                   " (group may be infinite)");
                queue.push_back(std::move(prod));
            }
        }
    }
    return std::vector<IsotropyElement>(seen.begin(), seen.end());
}

InjectivityResult injectivity_certificate(const Decomposition& d,
                                          std::span<const IsotropyElement> group) {
    InjectivityResult result;
    result.reports.reserve(group.size());
    for (const auto& g : group) {
        auto report = is_automorphism(g, d);
        if (!report)
            throw Error("supplied group element is not an automorphism of the decomposition");
        result.reports.push_back(std::move(*report));
    }
    for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j) {
            if (result.reports[i].alpha == result.reports[j].alpha &&
                result.reports[i].beta == result.reports[j].beta) {
                result.injective = false;
                result.witness = {i, j};
                return result;
            }
        }
    result.injective = true;
    return result;
}

bool termwise_fix_check(const IsotropyElement& g, const Decomposition& d) {
    for (const auto& t : d.terms())
        if (!(apply_to_term(g, t) == t)) return false;
    return true;
}

namespace {

// An m-th root of lambda where mat^m = lambda * E. Tries the field's
// rational-times-root-of-unity search; when that fails and gcd(m, n) = 1
// for n the dimension, det(mat)^m = lambda^n gives the Bezout root
// lambda^y * det(mat)^x with x*n + y*m = 1.
CycScalar power_scalar_root(const ExactMatrix& mat, const CycScalar& lambda, unsigned m) {
    const FieldPtr& field = mat.field();
    try {
        return field->scalar_root(lambda, m);
    } catch (const FieldError&) {
        const long n = static_cast<long>(mat.rows());
        const long mm = static_cast<long>(m);
        if (std::gcd(n, mm) != 1) throw;
        long x = 0;
        while ((x * n) % mm != 1 % mm) ++x;
        const long y = (1 - x * n) / mm;
        CycScalar s = lambda.pow(y) * mat.determinant().pow(x);
        if (s.pow(mm) != lambda) throw Error("internal: Bezout root check failed");
        return s;
    }
}

} // namespace

IsotropyElement normalize_to_finite_order(const IsotropyElement& g, unsigned m) {
    if (m == 0) throw OrderError("order must be positive");
    if (!g.is_sandwich())
        throw OrderError("only sandwich elements can be order-normalized");

    auto scalar_of_power = [&](const ExactMatrix& mat, const char* name) {
        ExactMatrix p = mat.pow(static_cast<long>(m));
        if (!p.is_scalar())
            throw OrderError(std::string("element does not have order dividing ") +
                             std::to_string(m) + ": " + name + "^" + std::to_string(m) +
                             " is not scalar");
        return p.at(0, 0);
    };
    CycScalar la = scalar_of_power(g.a(), "a");
    CycScalar mu = scalar_of_power(g.b(), "b");
    CycScalar nu = scalar_of_power(g.c(), "c");

    ExactMatrix a1 = g.a().scaled(power_scalar_root(g.a(), la, m).inverse());
    ExactMatrix b1 = g.b().scaled(power_scalar_root(g.b(), mu, m).inverse());
    ExactMatrix c1 = g.c().scaled(power_scalar_root(g.c(), nu, m).inverse());
    if (!a1.pow(m).is_identity() || !b1.pow(m).is_identity() || !c1.pow(m).is_identity())
        throw Error("internal: order normalization failed");
    return IsotropyElement::sandwich(std::move(a1), std::move(b1), std::move(c1));
}

} // namespace mmt
