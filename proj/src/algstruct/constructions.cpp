#include "semisep/algstruct/constructions.hpp"

#include "semisep/errors.hpp"

namespace semisep::algstruct {

using linalg::kron;
using linalg::matrix_of;
using linalg::span_basis;
using linalg::unit_vector;
using linalg::zero_vector;

namespace {

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

std::string label_of(const FDAlgebra& a, const Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        if (!v[i].is_one()) s += v[i].to_string() + "*";
        s += a.basis[i];
    }
    return s.empty() ? "0" : s;
}

FDAlgebra algebra_on(const FDAlgebra& a, const std::vector<Vector>& basis) {
    FDAlgebra out;
    out.field = a.field;
    out.dim = basis.size();
    for (const auto& b : basis) out.basis.push_back(label_of(a, b));
    for (const auto& x : basis)
        for (const auto& y : basis) {
            auto c = coordinates_in(basis, a.multiply(x, y));
            if (!c) throw PreconditionError("span is not closed under multiplication");
            out.mult.push_back(*c);
        }
    return out;
}

}  // namespace

std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
    if (basis.empty()) return linalg::is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
    const Field f = basis.front().front().field();
    Vector c;
    Vector rebuilt = zero_vector(v.size(), f);
    for (const auto& b : basis) {
        std::size_t p = 0;
        while (b[p].is_zero()) ++p;
        c.push_back(v[p] / b[p]);
        linalg::axpy(rebuilt, c.back(), b);
    }
    if (rebuilt != v) return std::nullopt;
    return c;
}

BalancedTensor balanced_tensor(const Bimodule& m, const Bimodule& n) {
    if (!(m.right_algebra == n.left_algebra)) throw InputError("balanced tensor: middle algebras differ");
    const Field f = m.field();
    const auto& r = m.right_algebra;
    const std::size_t dm = m.dim, dn = n.dim, flat = dm * dn;
    std::vector<Vector> rel;
    for (std::size_t k = 0; k < r.dim; ++k)
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) {
                auto x = linalg::sub(kron(m.right[k].col(i), unit_vector(dn, j, f)),
                                     kron(unit_vector(dm, i, f), n.left[k].col(j)));
                if (!linalg::is_zero(x)) rel.push_back(std::move(x));
            }
    BalancedTensor t;
    t.left_dim = dm;
    t.right_dim = dn;
    t.quotient = linalg::quotient(rel, flat, f);
    const auto& p = t.quotient.projection;
    const auto& s = t.quotient.section;
    t.bimodule = Bimodule{m.left_algebra, n.right_algebra, t.quotient.dim(), {}, {}};
    const std::size_t q = t.quotient.dim();
    for (const auto& l : m.left)
        t.bimodule.left.push_back(matrix_of(q, q, f, [&](const Vector& x) { return p.apply(tensor_left(l, s.apply(x), dn)); }));
    for (const auto& rr : n.right)
        t.bimodule.right.push_back(matrix_of(q, q, f, [&](const Vector& x) { return p.apply(tensor_right(dm, rr, s.apply(x))); }));
    require_valid(t.bimodule, "balanced tensor");
    return t;
}

Vector tensor_left(const Matrix& a, const Vector& x, std::size_t n) {
    const std::size_t m = a.cols();
    Vector out = zero_vector(a.rows() * n, a.field());
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& v = x[k * n + j];
            if (v.is_zero()) continue;
            for (std::size_t i = 0; i < a.rows(); ++i)
                if (!a(i, k).is_zero()) out[i * n + j] += a(i, k) * v;
        }
    return out;
}

Vector tensor_right(std::size_t m, const Matrix& b, const Vector& x) {
    const std::size_t n = b.cols();
    Vector out = zero_vector(m * b.rows(), b.field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& v = x[i * n + k];
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < b.rows(); ++j)
                if (!b(j, k).is_zero()) out[i * b.rows() + j] += b(j, k) * v;
        }
    return out;
}

TripleTensor triple_tensor(const Bimodule& c) {
    TripleTensor t{balanced_tensor(c, c), {}};
    t.three = balanced_tensor(t.two.bimodule, c);
    return t;
}

Vector TripleTensor::project(const Vector& flat) const {
    return three.project(tensor_left(two.quotient.projection, flat, three.right_dim));
}

std::vector<Matrix> bimodule_map_space(const Bimodule& m, const Bimodule& n) {
    if (!(m.left_algebra == n.left_algebra) || !(m.right_algebra == n.right_algebra))
        throw InputError("bimodule maps: algebra pairs differ");
    const Field f = m.field();
    const std::size_t rows = n.dim, cols = m.dim;
    const std::size_t eqs = (m.left.size() + m.right.size()) * rows * cols;
    auto a = matrix_of(rows * cols, eqs, f, [&](const Vector& u) {
        auto x = linalg::unflatten(u, rows, cols, f);
        Vector out;
        for (std::size_t i = 0; i < m.left.size(); ++i) append(out, linalg::flatten(x * m.left[i] - n.left[i] * x));
        for (std::size_t i = 0; i < m.right.size(); ++i)
            append(out, linalg::flatten(x * m.right[i] - n.right[i] * x));
        return out;
    });
    std::vector<Matrix> out;
    for (const auto& v : span_basis(linalg::kernel(a), rows * cols, f)) out.push_back(linalg::unflatten(v, rows, cols, f));
    return out;
}

std::vector<Vector> invariants(const Bimodule& m) {
    if (!(m.left_algebra == m.right_algebra)) throw InputError("invariants need a bimodule over a single algebra");
    const Field f = m.field();
    auto a = matrix_of(m.dim, m.left.size() * m.dim, f, [&](const Vector& x) {
        Vector out;
        for (std::size_t i = 0; i < m.left.size(); ++i) append(out, linalg::sub(m.left[i].apply(x), m.right[i].apply(x)));
        return out;
    });
    return span_basis(linalg::kernel(a), m.dim, f);
}

std::vector<Vector> invariants_by_intersection(const Bimodule& m) {
    if (!(m.left_algebra == m.right_algebra)) throw InputError("invariants need a bimodule over a single algebra");
    const Field f = m.field();
    std::vector<Vector> acc;
    for (std::size_t j = 0; j < m.dim; ++j) acc.push_back(unit_vector(m.dim, j, f));
    for (std::size_t i = 0; i < m.left.size(); ++i)
        acc = linalg::subspace_intersection(acc, linalg::kernel(m.left[i] - m.right[i]), m.dim, f);
    return span_basis(acc, m.dim, f);
}

Matrix DualModule::functional(const Vector& coords) const {
    const auto& s = bimodule.left_algebra;
    Matrix f(s.dim, maps.empty() ? 0 : maps.front().cols(), s.field);
    if (maps.empty()) return f;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) f = f + coords[i] * maps[i];
    return f;
}

Vector DualModule::coordinates(const Matrix& f) const {
    std::vector<Vector> flat;
    for (const auto& m : maps) flat.push_back(linalg::flatten(m));
    auto c = coordinates_in(flat, linalg::flatten(f));
    if (!c) throw PreconditionError("functional is not right S-linear");
    return *c;
}

DualModule dual_module(const Bimodule& m) {
    const auto& s = m.right_algebra;
    const Field f = m.field();
    const std::size_t rows = s.dim, cols = m.dim;
    std::vector<Matrix> rmult;
    for (std::size_t i = 0; i < s.dim; ++i) rmult.push_back(s.right_mult(s.basis_vector(i)));
    auto a = matrix_of(rows * cols, s.dim * rows * cols, f, [&](const Vector& u) {
        auto x = linalg::unflatten(u, rows, cols, f);
        Vector out;
        for (std::size_t i = 0; i < s.dim; ++i) append(out, linalg::flatten(x * m.right[i] - rmult[i] * x));
        return out;
    });
    DualModule d;
    for (const auto& v : span_basis(linalg::kernel(a), rows * cols, f)) d.maps.push_back(linalg::unflatten(v, rows, cols, f));
    const std::size_t n = d.maps.size();
    d.bimodule = Bimodule{s, m.left_algebra, n, {}, {}};
    for (std::size_t i = 0; i < s.dim; ++i) {
        auto l = s.left_mult(s.basis_vector(i));
        d.bimodule.left.push_back(matrix_of(n, n, f, [&](const Vector& c) { return d.coordinates(l * d.functional(c)); }));
    }
    for (std::size_t i = 0; i < m.left_algebra.dim; ++i)
        d.bimodule.right.push_back(
            matrix_of(n, n, f, [&](const Vector& c) { return d.coordinates(d.functional(c) * m.left[i]); }));
    require_valid(d.bimodule, "dual module");
    return d;
}

CenterReport center_and_idempotent(const FDAlgebra& a, const std::optional<Vector>& z) {
    const Field f = a.field;
    CenterReport rep;
    auto commutator = matrix_of(a.dim, a.dim * a.dim, f, [&](const Vector& x) {
        Vector out;
        for (std::size_t i = 0; i < a.dim; ++i)
            append(out, linalg::sub(a.multiply(a.basis_vector(i), x), a.multiply(x, a.basis_vector(i))));
        return out;
    });
    rep.center = span_basis(linalg::kernel(commutator), a.dim, f);
    if (!z) return rep;
    rep.checked = true;
    rep.central = true;
    for (std::size_t i = 0; i < a.dim; ++i)
        if (a.multiply(a.basis_vector(i), *z) != a.multiply(*z, a.basis_vector(i))) rep.central = false;
    rep.idempotent = a.multiply(*z, *z) == *z;

    // End(_A A) as the commutant of the left multiplications.
    const auto rz = a.right_mult(*z);
    std::vector<Matrix> lm;
    for (std::size_t i = 0; i < a.dim; ++i) lm.push_back(a.left_mult(a.basis_vector(i)));
    auto lin = matrix_of(a.dim * a.dim, a.dim * a.dim * a.dim, f, [&](const Vector& u) {
        auto x = linalg::unflatten(u, a.dim, a.dim, f);
        Vector out;
        for (const auto& l : lm) append(out, linalg::flatten(x * l - l * x));
        return out;
    });
    bool ok = rz * rz == rz;
    for (const auto& l : lm) ok = ok && rz * l == l * rz;
    for (const auto& v : linalg::kernel(lin)) {
        auto e = linalg::unflatten(v, a.dim, a.dim, f);
        ok = ok && e * rz == rz * e;
    }
    rep.endomorphism_central_idempotent = ok;
    return rep;
}

TraceReport trace_ideal_and_fgp(const Bimodule& m) {
    const Field f = m.field();
    const auto& s = m.right_algebra;
    TraceReport rep;
    rep.dual = dual_module(m);
    const auto& d = rep.dual;
    const std::size_t nd = d.maps.size(), n = m.dim;
    std::vector<Vector> values;
    for (const auto& g : d.maps)
        for (std::size_t j = 0; j < n; ++j) values.push_back(g.col(j));
    rep.trace_ideal = span_basis(values, s.dim, f);
    rep.generator = rep.trace_ideal.size() == s.dim;

    auto a = matrix_of(n * nd, n * n, f, [&](const Vector& u) {
        Vector out;
        for (std::size_t j = 0; j < n; ++j) {
            Vector acc = zero_vector(n, f);
            for (std::size_t i = 0; i < n; ++i) {
                Vector c(u.begin() + static_cast<std::ptrdiff_t>(i * nd),
                         u.begin() + static_cast<std::ptrdiff_t>((i + 1) * nd));
                auto val = nd ? d.functional(c).col(j) : zero_vector(s.dim, f);
                linalg::axpy(acc, Scalar::one(f), m.act_right(unit_vector(n, i, f), val));
            }
            append(out, acc);
        }
        return out;
    });
    Vector target;
    for (std::size_t j = 0; j < n; ++j) append(target, unit_vector(n, j, f));
    auto sol = linalg::solve_affine(a, target);
    rep.fgp = sol.feasible;
    rep.dual_basis_directions = sol.kernel;
    if (sol.feasible)
        for (std::size_t i = 0; i < n; ++i) {
            rep.dual_basis_elements.push_back(unit_vector(n, i, f));
            rep.dual_basis_functionals.emplace_back(sol.particular.begin() + static_cast<std::ptrdiff_t>(i * nd),
                                                    sol.particular.begin() + static_cast<std::ptrdiff_t>((i + 1) * nd));
        }
    return rep;
}

CornerAlgebra corner_algebra(const FDAlgebra& a, const Vector& z) {
    std::vector<Vector> span;
    for (std::size_t i = 0; i < a.dim; ++i) span.push_back(a.multiply(a.basis_vector(i), z));
    auto basis = span_basis(span, a.dim, a.field);
    CornerAlgebra c;
    c.algebra = algebra_on(a, basis);
    auto u = coordinates_in(basis, z);
    if (!u) throw PreconditionError("z does not lie in Az");
    c.algebra.unit = *u;
    require_valid(c.algebra, "corner algebra");
    c.inclusion = Matrix::from_columns(basis, a.dim, a.field);
    c.projection = matrix_of(a.dim, basis.size(), a.field, [&](const Vector& x) { return *coordinates_in(basis, a.multiply(x, z)); });
    return c;
}

Subalgebra subalgebra(const FDAlgebra& a, const std::vector<Vector>& spanning) {
    auto basis = span_basis(spanning, a.dim, a.field);
    Subalgebra s;
    s.algebra = algebra_on(a, basis);
    auto u = coordinates_in(basis, a.unit);
    if (!u) throw PreconditionError("span does not contain the unit");
    s.algebra.unit = *u;
    require_valid(s.algebra, "subalgebra");
    s.inclusion = Matrix::from_columns(basis, a.dim, a.field);
    return s;
}

}  // namespace semisep::algstruct
