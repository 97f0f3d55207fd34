#include "mmt/tensor.hpp"

#include "mmt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace mmt {

Shape::Shape(std::size_t m_, std::size_t n_, std::size_t p_) : m(m_), n(n_), p(p_) {
    if (m == 0 || n == 0 || p == 0)
        throw ShapeError("shape dimensions must be positive");
}

std::string Shape::to_string() const {
    std::ostringstream out;
    out << "<" << m << "," << n << "," << p << ">";
    return out.str();
}

DenseTensor::DenseTensor(FieldPtr field, Shape shape)
    : field_(std::move(field)), shape_(shape),
      coords_(shape.dim_x() * shape.dim_y() * shape.dim_z(), field_->zero()) {}

std::size_t DenseTensor::index(std::size_t r, std::size_t s, std::size_t t) const {
    if (r >= shape_.dim_x() || s >= shape_.dim_y() || t >= shape_.dim_z())
        throw ShapeError("tensor coordinate out of range");
    return (r * shape_.dim_y() + s) * shape_.dim_z() + t;
}

const CycScalar& DenseTensor::at(std::size_t r, std::size_t s, std::size_t t) const {
    return coords_[index(r, s, t)];
}

void DenseTensor::set(std::size_t r, std::size_t s, std::size_t t, CycScalar v) {
    coords_[index(r, s, t)] = std::move(v);
}

void DenseTensor::add(std::size_t r, std::size_t s, std::size_t t, const CycScalar& v) {
    coords_[index(r, s, t)] += v;
}

bool DenseTensor::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const CycScalar& c) { return c.is_zero(); });
}

std::size_t DenseTensor::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& c : coords_)
        if (!c.is_zero()) ++n;
    return n;
}

std::vector<DenseTensor::Coord> DenseTensor::nonzero_coords() const {
    std::vector<Coord> out;
    for (std::size_t r = 0; r < shape_.dim_x(); ++r)
        for (std::size_t s = 0; s < shape_.dim_y(); ++s)
            for (std::size_t t = 0; t < shape_.dim_z(); ++t) {
                const CycScalar& v = at(r, s, t);
                if (!v.is_zero()) out.push_back({r, s, t, v});
            }
    return out;
}

DenseTensor operator+(const DenseTensor& a, const DenseTensor& b) {
    if (!(a.shape_ == b.shape_)) throw ShapeError("tensor addition shape mismatch");
    DenseTensor r(a);
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
}

DenseTensor operator-(const DenseTensor& a, const DenseTensor& b) {
    if (!(a.shape_ == b.shape_)) throw ShapeError("tensor subtraction shape mismatch");
    DenseTensor r(a);
    for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
    return r;
}

bool operator==(const DenseTensor& a, const DenseTensor& b) {
    if (!(a.shape_ == b.shape_)) return false;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        if (a.coords_[i] != b.coords_[i]) return false;
    return true;
}

bool operator!=(const DenseTensor& a, const DenseTensor& b) { return !(a == b); }

DenseTensor matmul_tensor(const FieldPtr& field, const Shape& shape) {
    DenseTensor t(field, shape);
    const CycScalar one = field->one();
    for (std::size_t i = 0; i < shape.m; ++i)
        for (std::size_t j = 0; j < shape.n; ++j)
            for (std::size_t k = 0; k < shape.p; ++k)
                t.set(i * shape.n + j, j * shape.p + k, k * shape.m + i, one);
    return t;
}

RankOneTerm::RankOneTerm(ExactMatrix x, ExactMatrix y, ExactMatrix z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
    if (x_.is_zero() || y_.is_zero() || z_.is_zero())
        throw ShapeError("rank-one term with a zero factor");
    if (x_.cols() != y_.rows() || y_.cols() != z_.rows() || z_.cols() != x_.rows())
        throw ShapeError("rank-one term factors do not chain: " +
                         std::to_string(x_.rows()) + "x" + std::to_string(x_.cols()) + ", " +
                         std::to_string(y_.rows()) + "x" + std::to_string(y_.cols()) + ", " +
                         std::to_string(z_.rows()) + "x" + std::to_string(z_.cols()));
}

Shape RankOneTerm::shape() const {
    return Shape(x_.rows(), x_.cols(), y_.cols());
}

int RankOneTerm::compare(const RankOneTerm& a, const RankOneTerm& b) {
    int c = ExactMatrix::compare(a.x_, b.x_);
    if (c != 0) return c;
    c = ExactMatrix::compare(a.y_, b.y_);
    if (c != 0) return c;
    return ExactMatrix::compare(a.z_, b.z_);
}

bool operator==(const RankOneTerm& a, const RankOneTerm& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
}

namespace {

CycScalar first_nonzero(const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return m.at(i, j);
    throw ShapeError("zero matrix has no nonzero entry");
}

} // namespace

RankOneTerm canonical_term(const RankOneTerm& t) {
    CycScalar sx = first_nonzero(t.x());
    CycScalar sy = first_nonzero(t.y());
    return RankOneTerm(t.x().scaled(sx.inverse()),
                       t.y().scaled(sy.inverse()),
                       t.z().scaled(sx * sy));
}

Decomposition::Decomposition(FieldPtr field, Shape shape, std::vector<RankOneTerm> terms)
    : field_(std::move(field)), shape_(shape) {
    terms_.reserve(terms.size());
    for (const auto& t : terms) {
        if (!(t.shape() == shape_))
            throw ShapeError("term shape " + t.shape().to_string() +
                             " does not match decomposition shape " + shape_.to_string());
        if (t.field()->order() != field_->order())
            throw FieldError("term field does not match decomposition field");
        terms_.push_back(canonical_term(t));
    }
    std::sort(terms_.begin(), terms_.end(), [](const RankOneTerm& a, const RankOneTerm& b) {
        return RankOneTerm::compare(a, b) < 0;
    });
}

bool Decomposition::has_duplicate_terms() const {
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i] == terms_[i - 1]) return true;
    return false;
}

bool operator==(const Decomposition& a, const Decomposition& b) {
    if (!(a.shape_ == b.shape_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i] == b.terms_[i])) return false;
    return true;
}

bool operator!=(const Decomposition& a, const Decomposition& b) { return !(a == b); }

DenseTensor expand_terms(const FieldPtr& field, const Shape& shape,
                         std::span<const RankOneTerm> terms) {
    DenseTensor acc(field, shape);
    for (const auto& term : terms) {
        if (!(term.shape() == shape)) throw ShapeError("term shape mismatch in expansion");
        const auto vx = term.x().vec();
        const auto vy = term.y().vec();
        const auto vz = term.z().vec();
        for (std::size_t r = 0; r < vx.size(); ++r) {
            if (vx[r].is_zero()) continue;
            for (std::size_t s = 0; s < vy.size(); ++s) {
                if (vy[s].is_zero()) continue;
                CycScalar xy = vx[r] * vy[s];
                for (std::size_t t = 0; t < vz.size(); ++t) {
                    if (vz[t].is_zero()) continue;
                    acc.add(r, s, t, xy * vz[t]);
                }
            }
        }
    }
    return acc;
}

DenseTensor expand(const Decomposition& d) {
    return expand_terms(d.field(), d.shape(), d.terms());
}

VerifyResult verify(const Decomposition& d) {
    DenseTensor diff = expand(d) - matmul_tensor(d.field(), d.shape());
    if (diff.is_zero()) return {true, std::nullopt};
    return {false, std::move(diff)};
}

std::vector<ExactMatrix> projection(std::span<const RankOneTerm> terms, int factor) {
    if (factor < 1 || factor > 3) throw ShapeError("factor must be 1, 2 or 3");
    if (terms.empty()) return {};
    const Shape shape = terms.front().shape();
    const FieldPtr& field = terms.front().field();
    std::vector<std::vector<CycScalar>> rows;
    rows.reserve(terms.size());
    for (const auto& t : terms) {
        if (!(t.shape() == shape)) throw ShapeError("inconsistent term shapes");
        rows.push_back(factor == 1 ? t.x().vec() : factor == 2 ? t.y().vec() : t.z().vec());
    }
    auto basis = echelon_basis(std::move(rows));
    std::size_t r = factor == 1 ? shape.m : factor == 2 ? shape.n : shape.p;
    std::size_t c = factor == 1 ? shape.n : factor == 2 ? shape.p : shape.m;
    std::vector<ExactMatrix> out;
    out.reserve(basis.size());
    for (const auto& row : basis) {
        ExactMatrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, row[i * c + j]);
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

void check_embedding_axis(const std::vector<std::size_t>& map, std::size_t need,
                          std::size_t bound) {
    if (map.size() != need)
        throw ShapeError("embedding index list length does not match summand shape");
    std::set<std::size_t> seen;
    for (std::size_t v : map) {
        if (v >= bound) throw ShapeError("embedding index out of the ambient shape");
        if (!seen.insert(v).second) throw ShapeError("repeated embedding index");
    }
}

} // namespace

DenseTensor direct_sum(const std::vector<std::pair<DenseTensor, BlockEmbedding>>& summands,
                       const Shape& ambient) {
    if (summands.empty()) throw ShapeError("direct sum of nothing");
    const FieldPtr& field = summands.front().first.field();
    DenseTensor out(field, ambient);

    // factor-space coordinates touched so far, per factor
    std::set<std::pair<std::size_t, std::size_t>> used_x, used_y, used_z;

    for (const auto& [w, emb] : summands) {
        const Shape& s = w.shape();
        check_embedding_axis(emb.rows, s.m, ambient.m);
        check_embedding_axis(emb.cols, s.n, ambient.n);
        check_embedding_axis(emb.depth, s.p, ambient.p);

        for (std::size_t i = 0; i < s.m; ++i)
            for (std::size_t j = 0; j < s.n; ++j)
                if (!used_x.insert({emb.rows[i], emb.cols[j]}).second)
                    throw ShapeError("overlapping blocks in the first factor");
        for (std::size_t j = 0; j < s.n; ++j)
            for (std::size_t k = 0; k < s.p; ++k)
                if (!used_y.insert({emb.cols[j], emb.depth[k]}).second)
                    throw ShapeError("overlapping blocks in the second factor");
        for (std::size_t k = 0; k < s.p; ++k)
            for (std::size_t i = 0; i < s.m; ++i)
                if (!used_z.insert({emb.depth[k], emb.rows[i]}).second)
                    throw ShapeError("overlapping blocks in the third factor");

        for (std::size_t i = 0; i < s.m; ++i)
            for (std::size_t j = 0; j < s.n; ++j)
                for (std::size_t jp = 0; jp < s.n; ++jp)
                    for (std::size_t k = 0; k < s.p; ++k)
                        for (std::size_t kp = 0; kp < s.p; ++kp)
                            for (std::size_t ip = 0; ip < s.m; ++ip) {
                                const CycScalar& v = w.at(i * s.n + j, jp * s.p + k,
                                                          kp * s.m + ip);
                                if (v.is_zero()) continue;
                                out.add(emb.rows[i] * ambient.n + emb.cols[j],
                                        emb.cols[jp] * ambient.p + emb.depth[k],
                                        emb.depth[kp] * ambient.m + emb.rows[ip], v);
                            }
    }
    return out;
}

DenseTensor direct_sum(const DenseTensor& w1, const DenseTensor& w2) {
    const Shape& a = w1.shape();
    const Shape& b = w2.shape();
    Shape ambient(a.m + b.m, a.n + b.n, a.p + b.p);
    BlockEmbedding e1, e2;
    for (std::size_t i = 0; i < a.m; ++i) e1.rows.push_back(i);
    for (std::size_t j = 0; j < a.n; ++j) e1.cols.push_back(j);
    for (std::size_t k = 0; k < a.p; ++k) e1.depth.push_back(k);
    for (std::size_t i = 0; i < b.m; ++i) e2.rows.push_back(a.m + i);
    for (std::size_t j = 0; j < b.n; ++j) e2.cols.push_back(a.n + j);
    for (std::size_t k = 0; k < b.p; ++k) e2.depth.push_back(a.p + k);
    return direct_sum({{w1, e1}, {w2, e2}}, ambient);
}

double tau_exponent(const Shape& shape, std::size_t l) {
    const std::size_t mnp = shape.m * shape.n * shape.p;
    if (l == 0) throw ShapeError("decomposition length must be positive");
    if (mnp < 2) {
        if (l > 1)
            throw ShapeError("degenerate shape <1,1,1> admits no length above 1");
        throw ShapeError("tau is undefined for <1,1,1>");
    }
    return 3.0 * std::log(static_cast<double>(l)) / std::log(static_cast<double>(mnp));
}

} // namespace mmt
