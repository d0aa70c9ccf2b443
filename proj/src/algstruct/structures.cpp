#include "semisep/algstruct/structures.hpp"

#include "semisep/algstruct/constructions.hpp"
#include "semisep/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace semisep::algstruct {

using linalg::kron;
using linalg::unit_vector;
using linalg::zero_vector;

Vector FDAlgebra::multiply(const Vector& a, const Vector& b) const {
    Vector out = zero_vector(dim, field);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            linalg::axpy(out, a[i] * b[j], mult[i * dim + j]);
        }
    }
    return out;
}

Matrix FDAlgebra::left_mult(const Vector& a) const {
    return linalg::matrix_of(dim, dim, field, [&](const Vector& x) { return multiply(a, x); });
}

Matrix FDAlgebra::right_mult(const Vector& a) const {
    return linalg::matrix_of(dim, dim, field, [&](const Vector& x) { return multiply(x, a); });
}

bool operator==(const FDAlgebra& a, const FDAlgebra& b) {
    return a.field == b.field && a.dim == b.dim && a.mult == b.mult && a.unit == b.unit;
}

Matrix Bimodule::left_action(const Vector& r) const {
    Matrix m(dim, dim, field());
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!r[i].is_zero()) m = m + r[i] * left[i];
    return m;
}

Matrix Bimodule::right_action(const Vector& s) const {
    Matrix m(dim, dim, field());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_zero()) m = m + s[i] * right[i];
    return m;
}

Vector FDCoalgebra::coproduct(const Vector& c) const {
    Vector out = zero_vector(dim * dim, field);
    for (std::size_t i = 0; i < dim; ++i)
        if (!c[i].is_zero()) linalg::axpy(out, c[i], comult[i]);
    return out;
}

Scalar FDCoalgebra::eps(const Vector& c) const {
    Scalar s = Scalar::zero(field);
    for (std::size_t i = 0; i < dim; ++i) s += c[i] * counit[i];
    return s;
}

namespace {

std::string tuple(std::initializer_list<std::size_t> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto x : xs) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

bool sized(const Vector& v, std::size_t n) { return v.size() == n; }
bool sized(const Matrix& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; }

// (Δ⊗I)x and (I⊗Δ)x for x in the flat tensor of a coalgebra-like map d (d² × d).
Vector delta_left(const Matrix& d, const Vector& x, std::size_t n, Field) { return tensor_left(d, x, n); }
Vector delta_right(const Matrix& d, const Vector& x, std::size_t n, Field) { return tensor_right(n, d, x); }

Matrix comult_matrix(const FDCoalgebra& c) { return Matrix::from_columns(c.comult, c.dim * c.dim, c.field); }

}  // namespace

std::vector<std::string> validate(const FDAlgebra& a) {
    std::vector<std::string> v;
    const std::size_t n = a.dim;
    if (a.basis.size() != n) v.push_back("basis has " + std::to_string(a.basis.size()) + " labels, dim is " + std::to_string(n));
    if (a.mult.size() != n * n || !sized(a.unit, n)) {
        v.push_back("structure constants have the wrong shape");
        return v;
    }
    for (const auto& m : a.mult)
        if (!sized(m, n)) {
            v.push_back("structure constants have the wrong shape");
            return v;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto bi = a.basis_vector(i), bj = a.basis_vector(j), bk = a.basis_vector(k);
                if (a.multiply(a.multiply(bi, bj), bk) != a.multiply(bi, a.multiply(bj, bk)))
                    v.push_back("associativity fails at " + tuple({i, j, k}));
            }
    for (std::size_t i = 0; i < n; ++i) {
        auto bi = a.basis_vector(i);
        if (a.multiply(a.unit, bi) != bi) v.push_back("left unit law fails at " + tuple({i}));
        if (a.multiply(bi, a.unit) != bi) v.push_back("right unit law fails at " + tuple({i}));
    }
    return v;
}

std::vector<std::string> validate(const Bimodule& m) {
    std::vector<std::string> v;
    for (auto& e : validate(m.left_algebra)) v.push_back("left algebra: " + e);
    for (auto& e : validate(m.right_algebra)) v.push_back("right algebra: " + e);
    if (!v.empty()) return v;
    const auto& r = m.left_algebra;
    const auto& s = m.right_algebra;
    const std::size_t n = m.dim;
    if (m.left.size() != r.dim || m.right.size() != s.dim) {
        v.push_back("wrong number of action matrices");
        return v;
    }
    for (const auto& x : m.left)
        if (!sized(x, n, n)) v.push_back("left action matrix has the wrong shape");
    for (const auto& x : m.right)
        if (!sized(x, n, n)) v.push_back("right action matrix has the wrong shape");
    if (!v.empty()) return v;
    const auto id = Matrix::identity(n, m.field());
    for (std::size_t i = 0; i < r.dim; ++i)
        for (std::size_t j = 0; j < r.dim; ++j)
            if (m.left_action(r.mult[i * r.dim + j]) != m.left[i] * m.left[j])
                v.push_back("left action not associative at " + tuple({i, j}));
    if (m.left_action(r.unit) != id) v.push_back("left unit does not act as identity");
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j)
            if (m.right_action(s.mult[i * s.dim + j]) != m.right[j] * m.right[i])
                v.push_back("right action not associative at " + tuple({i, j}));
    if (m.right_action(s.unit) != id) v.push_back("right unit does not act as identity");
    for (std::size_t i = 0; i < r.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j)
            if (m.left[i] * m.right[j] != m.right[j] * m.left[i])
                v.push_back("actions do not commute at " + tuple({i, j}));
    return v;
}

std::vector<std::string> validate(const FDCoalgebra& c) {
    std::vector<std::string> v;
    const std::size_t n = c.dim;
    if (c.basis.size() != n) v.push_back("basis has " + std::to_string(c.basis.size()) + " labels, dim is " + std::to_string(n));
    if (c.comult.size() != n || !sized(c.counit, n)) {
        v.push_back("structure constants have the wrong shape");
        return v;
    }
    for (const auto& x : c.comult)
        if (!sized(x, n * n)) {
            v.push_back("structure constants have the wrong shape");
            return v;
        }
    const auto d = comult_matrix(c);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = c.comult[i];
        if (delta_left(d, x, n, c.field) != delta_right(d, x, n, c.field))
            v.push_back("coassociativity fails at " + tuple({i}));
        Vector l = zero_vector(n, c.field), r = zero_vector(n, c.field);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                l[k] += c.counit[j] * x[j * n + k];
                r[j] += x[j * n + k] * c.counit[k];
            }
        if (l != unit_vector(n, i, c.field)) v.push_back("left counit law fails at " + tuple({i}));
        if (r != unit_vector(n, i, c.field)) v.push_back("right counit law fails at " + tuple({i}));
    }
    return v;
}

std::vector<std::string> validate(const Coring& c) {
    std::vector<std::string> v = validate(c.C);
    if (!v.empty()) return v;
    const auto& r = c.base();
    if (!(c.C.left_algebra == c.C.right_algebra)) {
        v.push_back("coring bimodule must have equal left and right algebras");
        return v;
    }
    const std::size_t n = c.C.dim;
    const Field f = r.field;
    if (!sized(c.delta, n * n, n) || !sized(c.eps, r.dim, n)) {
        v.push_back("comultiplication or counit has the wrong shape");
        return v;
    }
    auto cc = balanced_tensor(c.C, c.C);
    const auto& pp = cc.quotient.projection;
    for (std::size_t a = 0; a < r.dim; ++a) {
        const auto ra = r.basis_vector(a);
        if (c.eps * c.C.left[a] != r.left_mult(ra) * c.eps) v.push_back("counit not left R-linear at " + tuple({a}));
        if (c.eps * c.C.right[a] != r.right_mult(ra) * c.eps) v.push_back("counit not right R-linear at " + tuple({a}));
        bool left_ok = true, right_ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            const Vector x = c.delta.col(i);
            left_ok = left_ok && pp.apply(c.delta.apply(c.C.left[a].col(i))) == pp.apply(tensor_left(c.C.left[a], x, n));
            right_ok = right_ok && pp.apply(c.delta.apply(c.C.right[a].col(i))) == pp.apply(tensor_right(n, c.C.right[a], x));
        }
        if (!left_ok) v.push_back("comultiplication not left R-linear at " + tuple({a}));
        if (!right_ok) v.push_back("comultiplication not right R-linear at " + tuple({a}));
    }
    const auto t = triple_tensor(c.C);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = c.delta.col(i);
        if (t.project(delta_left(c.delta, x, n, f)) != t.project(delta_right(c.delta, x, n, f)))
            v.push_back("coassociativity fails at " + tuple({i}));
        Vector l = zero_vector(n, f), rr = zero_vector(n, f);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& s = x[j * n + k];
                if (s.is_zero()) continue;
                linalg::axpy(l, s, c.C.act_left(c.eps.col(j), unit_vector(n, k, f)));
                linalg::axpy(rr, s, c.C.act_right(unit_vector(n, j, f), c.eps.col(k)));
            }
        if (l != unit_vector(n, i, f)) v.push_back("left counit law fails at " + tuple({i}));
        if (rr != unit_vector(n, i, f)) v.push_back("right counit law fails at " + tuple({i}));
    }
    return v;
}

std::vector<std::string> validate(const Bialgebra& b) {
    std::vector<std::string> v;
    for (auto& e : validate(b.algebra)) v.push_back("algebra: " + e);
    for (auto& e : validate(b.coalgebra)) v.push_back("coalgebra: " + e);
    if (!v.empty()) return v;
    const auto& a = b.algebra;
    const auto& c = b.coalgebra;
    if (a.dim != c.dim || !(a.field == c.field)) {
        v.push_back("algebra and coalgebra live on different spaces");
        return v;
    }
    const std::size_t n = a.dim;
    auto tensor_mult = [&](const Vector& x, const Vector& y) {
        Vector out = zero_vector(n * n, a.field);
        for (std::size_t p = 0; p < n * n; ++p) {
            if (x[p].is_zero()) continue;
            for (std::size_t q = 0; q < n * n; ++q) {
                if (y[q].is_zero()) continue;
                auto left = a.multiply(a.basis_vector(p / n), a.basis_vector(q / n));
                auto right = a.multiply(a.basis_vector(p % n), a.basis_vector(q % n));
                linalg::axpy(out, x[p] * y[q], kron(left, right));
            }
        }
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto bij = a.mult[i * n + j];
            if (c.coproduct(bij) != tensor_mult(c.comult[i], c.comult[j]))
                v.push_back("comultiplication not multiplicative at " + tuple({i, j}));
            if (c.eps(bij) != c.counit[i] * c.counit[j])
                v.push_back("counit not multiplicative at " + tuple({i, j}));
        }
    if (c.coproduct(a.unit) != kron(a.unit, a.unit)) v.push_back("comultiplication does not preserve the unit");
    if (!c.eps(a.unit).is_one()) v.push_back("counit does not preserve the unit");
    return v;
}

std::vector<std::string> validate(const AlgebraMap& f) {
    std::vector<std::string> v;
    for (auto& e : validate(f.source)) v.push_back("source: " + e);
    for (auto& e : validate(f.target)) v.push_back("target: " + e);
    if (!v.empty()) return v;
    if (!sized(f.matrix, f.target.dim, f.source.dim)) {
        v.push_back("map matrix has the wrong shape");
        return v;
    }
    if (f(f.source.unit) != f.target.unit) v.push_back("map is not unital");
    const auto& s = f.source;
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j)
            if (f(s.mult[i * s.dim + j]) != f.target.multiply(f.matrix.col(i), f.matrix.col(j)))
                v.push_back("map not multiplicative at " + tuple({i, j}));
    return v;
}

std::vector<std::string> validate(const CoalgebraMap& f) {
    std::vector<std::string> v;
    for (auto& e : validate(f.source)) v.push_back("source: " + e);
    for (auto& e : validate(f.target)) v.push_back("target: " + e);
    if (!v.empty()) return v;
    if (!sized(f.matrix, f.target.dim, f.source.dim)) {
        v.push_back("map matrix has the wrong shape");
        return v;
    }
    const auto ff = kron(f.matrix, f.matrix);
    for (std::size_t i = 0; i < f.source.dim; ++i) {
        if (f.target.coproduct(f.matrix.col(i)) != ff.apply(f.source.comult[i]))
            v.push_back("map not comultiplicative at " + tuple({i}));
        if (f.target.eps(f.matrix.col(i)) != f.source.counit[i])
            v.push_back("map does not preserve the counit at " + tuple({i}));
    }
    return v;
}

template <class T>
void require_valid(const T& x, const std::string& what) {
    auto v = validate(x);
    if (v.empty()) return;
    std::string msg = what + " is invalid:";
    for (const auto& e : v) msg += "\n  " + e;
    throw InputError(msg);
}

template void require_valid(const FDAlgebra&, const std::string&);
template void require_valid(const Bimodule&, const std::string&);
template void require_valid(const FDCoalgebra&, const std::string&);
template void require_valid(const Coring&, const std::string&);
template void require_valid(const Bialgebra&, const std::string&);
template void require_valid(const AlgebraMap&, const std::string&);
template void require_valid(const CoalgebraMap&, const std::string&);

namespace {

FDAlgebra from_products(Field f, std::vector<std::string> names,
                        const std::function<Vector(std::size_t, std::size_t)>& prod, Vector unit) {
    FDAlgebra a;
    a.field = f;
    a.dim = names.size();
    a.basis = std::move(names);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) a.mult.push_back(prod(i, j));
    a.unit = std::move(unit);
    return a;
}

}  // namespace

FDAlgebra ground_algebra(Field f) { return truncated_polynomial(f, 1); }

FDAlgebra truncated_polynomial(Field f, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    return from_products(
        f, names,
        [&](std::size_t i, std::size_t j) { return i + j < n ? unit_vector(n, i + j, f) : zero_vector(n, f); },
        unit_vector(n, 0, f));
}

FDAlgebra diagonal_algebra(Field f, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    Vector one(n, Scalar::one(f));
    return from_products(
        f, names, [&](std::size_t i, std::size_t j) { return i == j ? unit_vector(n, i, f) : zero_vector(n, f); },
        one);
}

FDAlgebra matrix_algebra(Field f, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    const std::size_t d = n * n;
    Vector one = zero_vector(d, f);
    for (std::size_t a = 0; a < n; ++a) one[a * n + a] = Scalar::one(f);
    return from_products(
        f, names,
        [&](std::size_t i, std::size_t j) {
            return i % n == j / n ? unit_vector(d, (i / n) * n + j % n, f) : zero_vector(d, f);
        },
        one);
}

FDAlgebra product(const FDAlgebra& a, const FDAlgebra& b) {
    const Field f = a.field;
    const std::size_t d = a.dim + b.dim;
    std::vector<std::string> names;
    for (const auto& s : a.basis) names.push_back("(" + s + ",0)");
    for (const auto& s : b.basis) names.push_back("(0," + s + ")");
    Vector one = a.unit;
    one.insert(one.end(), b.unit.begin(), b.unit.end());
    return from_products(
        f, names,
        [&](std::size_t i, std::size_t j) {
            Vector out = zero_vector(d, f);
            if (i < a.dim && j < a.dim) {
                const auto& x = a.mult[i * a.dim + j];
                std::copy(x.begin(), x.end(), out.begin());
            } else if (i >= a.dim && j >= a.dim) {
                const auto& x = b.mult[(i - a.dim) * b.dim + (j - a.dim)];
                std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(a.dim));
            }
            return out;
        },
        one);
}

FDAlgebra monoid_algebra(Field f, const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                         std::vector<std::string> names) {
    const std::size_t n = table.size();
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    if (names.size() != n || unit >= n) throw InputError("monoid table and names disagree");
    for (const auto& row : table) {
        if (row.size() != n) throw InputError("monoid table is not square");
        for (auto x : row)
            if (x >= n) throw InputError("monoid table entry out of range");
    }
    auto a = from_products(
        f, names, [&](std::size_t i, std::size_t j) { return unit_vector(n, table[i][j], f); },
        unit_vector(n, unit, f));
    require_valid(a, "monoid algebra");
    return a;
}

Bimodule regular_bimodule(const FDAlgebra& a) {
    Bimodule m{a, a, a.dim, {}, {}};
    for (std::size_t i = 0; i < a.dim; ++i) {
        m.left.push_back(a.left_mult(a.basis_vector(i)));
        m.right.push_back(a.right_mult(a.basis_vector(i)));
    }
    return m;
}

Bimodule vector_bimodule(Field f, std::size_t n) {
    auto k = ground_algebra(f);
    return Bimodule{k, k, n, {Matrix::identity(n, f)}, {Matrix::identity(n, f)}};
}

Bimodule restrict(const Bimodule& m, const AlgebraMap& f, const AlgebraMap& g) {
    if (!(f.target == m.left_algebra) || !(g.target == m.right_algebra))
        throw InputError("restriction maps do not land in the module's algebras");
    Bimodule out{f.source, g.source, m.dim, {}, {}};
    for (std::size_t i = 0; i < f.source.dim; ++i) out.left.push_back(m.left_action(f.matrix.col(i)));
    for (std::size_t i = 0; i < g.source.dim; ++i) out.right.push_back(m.right_action(g.matrix.col(i)));
    return out;
}

AlgebraMap identity_map(const FDAlgebra& a) { return {a, a, Matrix::identity(a.dim, a.field)}; }

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
    if (!(f.target == g.source)) throw InputError("algebra maps are not composable");
    return {f.source, g.target, g.matrix * f.matrix};
}

Coring trivial_coring(const FDAlgebra& r) {
    Coring c{regular_bimodule(r), Matrix(r.dim * r.dim, r.dim, r.field), Matrix::identity(r.dim, r.field)};
    for (std::size_t i = 0; i < r.dim; ++i) c.delta.set_col(i, kron(r.basis_vector(i), r.unit));
    return c;
}

}  // namespace semisep::algstruct
