#include "mmt/bounds.hpp"

#include "mmt/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace mmt {

RankTable::RankTable() {
    auto put = [this](std::size_t a, std::size_t b, std::size_t c, unsigned lo, unsigned hi) {
        std::array<std::size_t, 3> key{a, b, c};
        std::sort(key.begin(), key.end());
        entries_.push_back({key, RankBounds{lo, hi}});
    };
    // <m,n,1> = mn for m, n up to 3
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = m; n <= 3; ++n)
            put(m, n, 1, static_cast<unsigned>(m * n), static_cast<unsigned>(m * n));
    put(2, 2, 2, 7, 7);
    put(2, 2, 3, 11, 11);
    put(2, 3, 3, 14, 15);
    put(3, 3, 3, 19, 23);
}

const RankTable& RankTable::standard() {
    static const RankTable table;
    return table;
}

RankBounds RankTable::at(std::size_t p, std::size_t q, std::size_t r) const {
    std::array<std::size_t, 3> key{p, q, r};
    std::sort(key.begin(), key.end());
    for (const auto& [k, v] : entries_)
        if (k == key) return v;
    std::ostringstream out;
    out << "no rank table entry for <" << p << "," << q << "," << r << ">";
    throw Error(out.str());
}

unsigned rank_lower(std::size_t p, std::size_t q, std::size_t r) {
    return RankTable::standard().at(p, q, r).lower;
}

Partition3::Partition3(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    std::sort(parts_.rbegin(), parts_.rend());
    std::size_t sum = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
    if (sum != 3 || parts_.empty() || parts_.back() == 0)
        throw Error("not a partition of 3");
}

std::vector<Partition3> Partition3::all() {
    return {Partition3({3}), Partition3({2, 1}), Partition3({1, 1, 1})};
}

Partition3 Partition3::parse(const std::string& text) {
    std::vector<std::size_t> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        if (tok.size() != 1 || tok[0] < '1' || tok[0] > '3')
            throw ParseError("bad partition '" + text + "' (expected e.g. \"3\" or \"2,1\")");
        parts.push_back(static_cast<std::size_t>(tok[0] - '0'));
        pos = next + 1;
    }
    try {
        return Partition3(std::move(parts));
    } catch (const Error&) {
        throw ParseError("'" + text + "' does not sum to 3");
    }
}

std::string Partition3::to_string() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << "}";
    return out.str();
}

EigenSplitPlan split_by_eigenvalues(const ExactMatrix& a, const ExactMatrix& b,
                                    unsigned order_a, unsigned order_b) {
    const unsigned n = a.field()->order();
    const unsigned l = std::lcm(order_a, order_b);
    if (n % l != 0)
        throw FieldError("lcm of the orders (" + std::to_string(l) +
                         ") does not divide the cyclotomic order " + std::to_string(n));
    EigenSplitPlan plan{finite_order_eigensplit(a, order_a),
                        finite_order_eigensplit(b, order_b),
                        {}};
    for (std::size_t i = 0; i < plan.a_structure.count(); ++i)
        for (std::size_t j = 0; j < plan.b_structure.count(); ++j) {
            CycScalar sigma =
                plan.a_structure.eigenvalues[i] * plan.b_structure.eigenvalues[j].inverse();
            auto it = std::find_if(plan.classes.begin(), plan.classes.end(),
                                   [&](const SigmaClass& c) { return c.sigma == sigma; });
            if (it == plan.classes.end()) {
                plan.classes.push_back({sigma, {{i, j}}});
            } else {
                it->pairs.push_back({i, j});
            }
        }
    std::sort(plan.classes.begin(), plan.classes.end(),
              [](const SigmaClass& x, const SigmaClass& y) {
                  return CycScalar::compare(x.sigma, y.sigma) < 0;
              });
    return plan;
}

DenseTensor tensor_component(const EigenSplitPlan& plan, std::size_t class_index,
                             std::size_t p) {
    if (class_index >= plan.classes.size()) throw Error("class index out of range");
    const FieldPtr& field = plan.a_structure.projectors.front().field();
    const std::size_t m = plan.a_structure.projectors.front().rows();
    const std::size_t n = plan.b_structure.projectors.front().rows();
    const Shape shape(m, n, p);
    const DenseTensor whole = matmul_tensor(field, shape);
    DenseTensor out(field, shape);
    const SigmaClass& cls = plan.classes[class_index];
    for (std::size_t s = 0; s < shape.dim_y(); ++s)
        for (std::size_t t = 0; t < shape.dim_z(); ++t) {
            // first-factor fiber as an m x n matrix
            ExactMatrix fiber(field, m, n);
            bool any = false;
            for (std::size_t r = 0; r < shape.dim_x(); ++r) {
                const CycScalar& v = whole.at(r, s, t);
                if (v.is_zero()) continue;
                fiber.set(r / n, r % n, v);
                any = true;
            }
            if (!any) continue;
            ExactMatrix image(field, m, n);
            for (const auto& [i, j] : cls.pairs) {
                image = image + plan.a_structure.projectors[i] * fiber *
                                    plan.b_structure.projectors[j];
            }
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!image.at(i, j).is_zero()) out.set(i * n + j, s, t, image.at(i, j));
        }
    return out;
}

unsigned class_rank_lower(const EigenSplitPlan& plan, std::size_t class_index,
                          std::size_t p) {
    if (class_index >= plan.classes.size()) throw Error("class index out of range");
    const SigmaClass& cls = plan.classes[class_index];
    // distinctness of first and of second indices within a class
    for (std::size_t u = 0; u < cls.pairs.size(); ++u)
        for (std::size_t v = u + 1; v < cls.pairs.size(); ++v)
            if (cls.pairs[u].first == cls.pairs[v].first ||
                cls.pairs[u].second == cls.pairs[v].second)
                throw Error("class violates the index distinctness invariant");
    unsigned sum = 0;
    for (const auto& [i, j] : cls.pairs)
        sum += rank_lower(plan.a_structure.multiplicities[i],
                          plan.b_structure.multiplicities[j], p);
    return sum;
}

unsigned invariant_length_bound(const Partition3& dbar, const Partition3& fbar) {
    unsigned sum = 0;
    for (std::size_t d : dbar.parts())
        for (std::size_t f : fbar.parts()) sum += rank_lower(d, f, 3);
    return sum;
}

unsigned invariant_length_bound(const ExactMatrix& a, const ExactMatrix& b,
                                unsigned order_a, unsigned order_b) {
    EigenSplitPlan plan = split_by_eigenvalues(a, b, order_a, order_b);
    std::vector<std::size_t> dparts(plan.a_structure.multiplicities.begin(),
                                    plan.a_structure.multiplicities.end());
    std::vector<std::size_t> fparts(plan.b_structure.multiplicities.begin(),
                                    plan.b_structure.multiplicities.end());
    return invariant_length_bound(Partition3(std::move(dparts)),
                                  Partition3(std::move(fparts)));
}

std::vector<CaseRow> partition_case_table() {
    std::vector<CaseRow> rows;
    for (const Partition3& dbar : Partition3::all()) {
        if (dbar.count() < 2) continue; // a scalar first matrix is excluded
        for (const Partition3& fbar : Partition3::all()) {
            CaseRow row{dbar, fbar, {}, 0};
            for (std::size_t d : dbar.parts())
                for (std::size_t f : fbar.parts()) {
                    unsigned r = rank_lower(d, f, 3);
                    row.summands.push_back(r);
                    row.bound += r;
                }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

unsigned case_table_minimum() {
    unsigned best = 0;
    bool first = true;
    for (const auto& row : partition_case_table()) {
        if (first || row.bound < best) best = row.bound;
        first = false;
    }
    return best;
}

} // namespace mmt
