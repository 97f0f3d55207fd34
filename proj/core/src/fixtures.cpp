#include "mmt/fixtures.hpp"

#include "mmt/errors.hpp"

#include <sstream>

namespace mmt {

namespace {

ExactMatrix from_flat(const FieldPtr& field, std::size_t rows, std::size_t cols,
                      const int* data) {
    ExactMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (data[i * cols + j] != 0)
                m.set(i, j, field->integer(data[i * cols + j]));
    return m;
}

// A bilinear scheme as coefficient tables: u[t] over the left input,
// v[t] over the right input, and w[t] the output coefficients indexed
// (row, col) of the product. The z factor of the tensor term is w[t]
// transposed.
template <std::size_t L, std::size_t XS, std::size_t YS, std::size_t WS>
Decomposition scheme_to_decomposition(const FieldPtr& field, const Shape& shape,
                                      const int (&u)[L][XS], const int (&v)[L][YS],
                                      const int (&w)[L][WS]) {
    std::vector<RankOneTerm> terms;
    terms.reserve(L);
    for (std::size_t t = 0; t < L; ++t) {
        ExactMatrix x = from_flat(field, shape.m, shape.n, u[t]);
        ExactMatrix y = from_flat(field, shape.n, shape.p, v[t]);
        ExactMatrix wt = from_flat(field, shape.m, shape.p, w[t]);
        terms.emplace_back(std::move(x), std::move(y), wt.transpose());
    }
    return Decomposition(field, shape, std::move(terms));
}

} // namespace

Decomposition classical_decomposition(const FieldPtr& field, const Shape& shape) {
    std::vector<RankOneTerm> terms;
    terms.reserve(shape.m * shape.n * shape.p);
    for (std::size_t i = 0; i < shape.m; ++i)
        for (std::size_t j = 0; j < shape.n; ++j)
            for (std::size_t k = 0; k < shape.p; ++k) {
                ExactMatrix x(field, shape.m, shape.n);
                ExactMatrix y(field, shape.n, shape.p);
                ExactMatrix z(field, shape.p, shape.m);
                x.set(i, j, field->one());
                y.set(j, k, field->one());
                z.set(k, i, field->one());
                terms.emplace_back(std::move(x), std::move(y), std::move(z));
            }
    return Decomposition(field, shape, std::move(terms));
}

Decomposition strassen_222(const FieldPtr& field) {
    static const int u[7][4] = {
        {1, 0, 0, 1},   // a11 + a22
        {0, 0, 1, 1},   // a21 + a22
        {1, 0, 0, 0},   // a11
        {0, 0, 0, 1},   // a22
        {1, 1, 0, 0},   // a11 + a12
        {-1, 0, 1, 0},  // a21 - a11
        {0, 1, 0, -1},  // a12 - a22
    };
    static const int v[7][4] = {
        {1, 0, 0, 1},   // b11 + b22
        {1, 0, 0, 0},   // b11
        {0, 1, 0, -1},  // b12 - b22
        {-1, 0, 1, 0},  // b21 - b11
        {0, 0, 0, 1},   // b22
        {1, 1, 0, 0},   // b11 + b12
        {0, 0, 1, 1},   // b21 + b22
    };
    static const int w[7][4] = {
        {1, 0, 0, 1},   // c11, c22
        {0, 0, 1, -1},  // c21, -c22
        {0, 1, 0, 1},   // c12, c22
        {1, 0, 1, 0},   // c11, c21
        {-1, 1, 0, 0},  // -c11, c12
        {0, 0, 0, 1},   // c22
        {1, 0, 0, 0},   // c11
    };
    return scheme_to_decomposition(field, Shape(2, 2, 2), u, v, w);
}

Decomposition laderman_333(const FieldPtr& field) {
    static const int u[23][9] = {
        {1, 1, 1, -1, -1, 0, 0, -1, -1},  // a11+a12+a13-a21-a22-a32-a33
        {1, 0, 0, -1, 0, 0, 0, 0, 0},     // a11-a21
        {0, 0, 0, 0, 1, 0, 0, 0, 0},      // a22
        {-1, 0, 0, 1, 1, 0, 0, 0, 0},     // -a11+a21+a22
        {0, 0, 0, 1, 1, 0, 0, 0, 0},      // a21+a22
        {1, 0, 0, 0, 0, 0, 0, 0, 0},      // a11
        {-1, 0, 0, 0, 0, 0, 1, 1, 0},     // -a11+a31+a32
        {-1, 0, 0, 0, 0, 0, 1, 0, 0},     // -a11+a31
        {0, 0, 0, 0, 0, 0, 1, 1, 0},      // a31+a32
        {1, 1, 1, 0, -1, -1, -1, -1, 0},  // a11+a12+a13-a22-a23-a31-a32
        {0, 0, 0, 0, 0, 0, 0, 1, 0},      // a32
        {0, 0, -1, 0, 0, 0, 0, 1, 1},     // -a13+a32+a33
        {0, 0, 1, 0, 0, 0, 0, 0, -1},     // a13-a33
        {0, 0, 1, 0, 0, 0, 0, 0, 0},      // a13
        {0, 0, 0, 0, 0, 0, 0, 1, 1},      // a32+a33
        {0, 0, -1, 0, 1, 1, 0, 0, 0},     // -a13+a22+a23
        {0, 0, 1, 0, 0, -1, 0, 0, 0},     // a13-a23
        {0, 0, 0, 0, 1, 1, 0, 0, 0},      // a22+a23
        {0, 1, 0, 0, 0, 0, 0, 0, 0},      // a12
        {0, 0, 0, 0, 0, 1, 0, 0, 0},      // a23
        {0, 0, 0, 1, 0, 0, 0, 0, 0},      // a21
        {0, 0, 0, 0, 0, 0, 1, 0, 0},      // a31
        {0, 0, 0, 0, 0, 0, 0, 0, 1},      // a33
    };
    static const int v[23][9] = {
        {0, 0, 0, 0, 1, 0, 0, 0, 0},        // b22
        {0, -1, 0, 0, 1, 0, 0, 0, 0},       // -b12+b22
        {-1, 1, 0, 1, -1, -1, -1, 0, 1},    // -b11+b12+b21-b22-b23-b31+b33
        {1, -1, 0, 0, 1, 0, 0, 0, 0},       // b11-b12+b22
        {-1, 1, 0, 0, 0, 0, 0, 0, 0},       // -b11+b12
        {1, 0, 0, 0, 0, 0, 0, 0, 0},        // b11
        {1, 0, -1, 0, 0, 1, 0, 0, 0},       // b11-b13+b23
        {0, 0, 1, 0, 0, -1, 0, 0, 0},       // b13-b23
        {-1, 0, 1, 0, 0, 0, 0, 0, 0},       // -b11+b13
        {0, 0, 0, 0, 0, 1, 0, 0, 0},        // b23
        {-1, 0, 1, 1, -1, -1, -1, 1, 0},    // -b11+b13+b21-b22-b23-b31+b32
        {0, 0, 0, 0, 1, 0, 1, -1, 0},       // b22+b31-b32
        {0, 0, 0, 0, 1, 0, 0, -1, 0},       // b22-b32
        {0, 0, 0, 0, 0, 0, 1, 0, 0},        // b31
        {0, 0, 0, 0, 0, 0, -1, 1, 0},       // -b31+b32
        {0, 0, 0, 0, 0, 1, 1, 0, -1},       // b23+b31-b33
        {0, 0, 0, 0, 0, 1, 0, 0, -1},       // b23-b33
        {0, 0, 0, 0, 0, 0, -1, 0, 1},       // -b31+b33
        {0, 0, 0, 1, 0, 0, 0, 0, 0},        // b21
        {0, 0, 0, 0, 0, 0, 0, 1, 0},        // b32
        {0, 0, 1, 0, 0, 0, 0, 0, 0},        // b13
        {0, 1, 0, 0, 0, 0, 0, 0, 0},        // b12
        {0, 0, 0, 0, 0, 0, 0, 0, 1},        // b33
    };
    static const int w[23][9] = {
        {0, 1, 0, 0, 0, 0, 0, 0, 0},  // c12
        {0, 0, 0, 1, 1, 0, 0, 0, 0},  // c21, c22
        {0, 0, 0, 1, 0, 0, 0, 0, 0},  // c21
        {0, 1, 0, 1, 1, 0, 0, 0, 0},  // c12, c21, c22
        {0, 1, 0, 0, 1, 0, 0, 0, 0},  // c12, c22
        {1, 1, 1, 1, 1, 0, 1, 0, 1},  // c11, c12, c13, c21, c22, c31, c33
        {0, 0, 1, 0, 0, 0, 1, 0, 1},  // c13, c31, c33
        {0, 0, 0, 0, 0, 0, 1, 0, 1},  // c31, c33
        {0, 0, 1, 0, 0, 0, 0, 0, 1},  // c13, c33
        {0, 0, 1, 0, 0, 0, 0, 0, 0},  // c13
        {0, 0, 0, 0, 0, 0, 1, 0, 0},  // c31
        {0, 1, 0, 0, 0, 0, 1, 1, 0},  // c12, c31, c32
        {0, 0, 0, 0, 0, 0, 1, 1, 0},  // c31, c32
        {1, 1, 1, 1, 0, 1, 1, 1, 0},  // c11, c12, c13, c21, c23, c31, c32
        {0, 1, 0, 0, 0, 0, 0, 1, 0},  // c12, c32
        {0, 0, 1, 1, 0, 1, 0, 0, 0},  // c13, c21, c23
        {0, 0, 0, 1, 0, 1, 0, 0, 0},  // c21, c23
        {0, 0, 1, 0, 0, 1, 0, 0, 0},  // c13, c23
        {1, 0, 0, 0, 0, 0, 0, 0, 0},  // c11
        {0, 0, 0, 0, 1, 0, 0, 0, 0},  // c22
        {0, 0, 0, 0, 0, 1, 0, 0, 0},  // c23
        {0, 0, 0, 0, 0, 0, 0, 1, 0},  // c32
        {0, 0, 0, 0, 0, 0, 0, 0, 1},  // c33
    };
    return scheme_to_decomposition(field, Shape(3, 3, 3), u, v, w);
}

std::vector<Fixture> bundled_fixtures(const FieldPtr& field) {
    std::vector<Fixture> out;
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::size_t p = 1; p <= 3; ++p) {
                std::ostringstream name;
                name << "classical_" << m << n << p;
                out.push_back({name.str(), classical_decomposition(field, Shape(m, n, p))});
            }
    out.push_back({"strassen_222", strassen_222(field)});
    out.push_back({"laderman_333", laderman_333(field)});
    return out;
}

} // namespace mmt
