#include "semisep/sepcheck/verify.hpp"

namespace semisep::sepcheck::verify {

using algstruct::FDAlgebra;
using linalg::Field;
using linalg::Scalar;

namespace {

Vector zeros(std::size_t n, Field f) { return Vector(n, Scalar::zero(f)); }

Vector basis(std::size_t n, std::size_t i, Field f) {
    Vector v = zeros(n, f);
    v[i] = Scalar::one(f);
    return v;
}

Vector mul(const FDAlgebra& a, const Vector& x, const Vector& y) {
    Vector out = zeros(a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Scalar c = x[i] * y[j];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < a.dim; ++k) out[k] += c * a.mult[i * a.dim + j][k];
        }
    return out;
}

Vector app(const Matrix& m, const Vector& v) {
    Vector out = zeros(m.rows(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

// Σ_k coeffs[k] acts[k] applied to v.
Vector act(const std::vector<Matrix>& acts, const Vector& coeffs, const Vector& v, Field f) {
    Vector out = zeros(v.size(), f);
    for (std::size_t k = 0; k < acts.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        Vector w = app(acts[k], v);
        for (std::size_t i = 0; i < w.size(); ++i) out[i] += coeffs[k] * w[i];
    }
    return out;
}

bool is_identity(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != (i == j ? Scalar::one(m.field()) : Scalar::zero(m.field()))) return false;
    return true;
}

Matrix product(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

}  // namespace

Certificates ring_ext(const AlgebraMap& phi, const Matrix& E, Kind kind) {
    const auto& r = phi.source;
    const auto& s = phi.target;
    const Field f = r.field;
    Certificates out;
    bool shape = E.rows() == r.dim && E.cols() == s.dim;
    out.push_back({"witness shape", shape, ""});
    if (!shape) return out;
    bool bilinear = true;
    for (std::size_t i = 0; i < r.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) {
            Vector ri = basis(r.dim, i, f), sj = basis(s.dim, j, f);
            Vector pr = app(phi.matrix, ri);
            bilinear = bilinear && app(E, mul(s, pr, sj)) == mul(r, ri, app(E, sj));
            bilinear = bilinear && app(E, mul(s, sj, pr)) == mul(r, app(E, sj), ri);
        }
    out.push_back({"E is an R-bimodule map", bilinear, ""});
    switch (kind) {
        case Kind::semiseparable:
            out.push_back({"phi(E(1)) = 1", app(phi.matrix, app(E, s.unit)) == s.unit, ""});
            break;
        case Kind::separable:
            out.push_back({"E o phi = Id", is_identity(product(E, phi.matrix)), ""});
            break;
        case Kind::naturally_full:
            out.push_back({"phi o E = Id", is_identity(product(phi.matrix, E)), ""});
            break;
    }
    return out;
}

Certificates coalg_map(const CoalgebraMap& psi, const Matrix& chi, Kind kind) {
    const auto& c = psi.source;
    const auto& d = psi.target;
    const Field f = c.field;
    Certificates out;
    bool shape = chi.rows() == c.dim && chi.cols() == d.dim;
    out.push_back({"witness shape", shape, ""});
    if (!shape) return out;
    // Left coaction (ψ⊗C)Δ and right coaction (C⊗ψ)Δ, compared on each basis y of D.
    bool left = true, right = true;
    for (std::size_t y = 0; y < d.dim; ++y) {
        Vector x = app(chi, basis(d.dim, y, f));
        Vector l1 = zeros(d.dim * c.dim, f), r1 = zeros(c.dim * d.dim, f);
        for (std::size_t i = 0; i < c.dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t a = 0; a < c.dim; ++a)
                for (std::size_t b = 0; b < c.dim; ++b) {
                    Scalar w = x[i] * c.comult[i][a * c.dim + b];
                    if (w.is_zero()) continue;
                    for (std::size_t p = 0; p < d.dim; ++p) {
                        l1[p * c.dim + b] += w * psi.matrix(p, a);
                        r1[a * d.dim + p] += w * psi.matrix(p, b);
                    }
                }
        }
        Vector l2 = zeros(d.dim * c.dim, f), r2 = zeros(c.dim * d.dim, f);
        for (std::size_t p = 0; p < d.dim; ++p)
            for (std::size_t q = 0; q < d.dim; ++q) {
                Scalar w = d.comult[y][p * d.dim + q];
                if (w.is_zero()) continue;
                for (std::size_t i = 0; i < c.dim; ++i) {
                    l2[p * c.dim + i] += w * chi(i, q);
                    r2[i * d.dim + q] += w * chi(i, p);
                }
            }
        left = left && l1 == l2;
        right = right && r1 == r2;
    }
    out.push_back({"chi left D-colinear", left, ""});
    out.push_back({"chi right D-colinear", right, ""});
    switch (kind) {
        case Kind::semiseparable: {
            bool ok = true;
            for (std::size_t j = 0; j < c.dim; ++j) {
                Vector v = app(chi, app(psi.matrix, basis(c.dim, j, f)));
                Scalar e = Scalar::zero(f);
                for (std::size_t i = 0; i < c.dim; ++i) e += c.counit[i] * v[i];
                ok = ok && e == c.counit[j];
            }
            out.push_back({"eps o chi o psi = eps", ok, ""});
            break;
        }
        case Kind::separable:
            out.push_back({"psi o chi = Id", is_identity(product(psi.matrix, chi)), ""});
            break;
        case Kind::naturally_full:
            out.push_back({"chi o psi = Id", is_identity(product(chi, psi.matrix)), ""});
            break;
    }
    return out;
}

Certificates coring(const Coring& c, const Vector& z, Kind kind) {
    const auto& r = c.C.left_algebra;
    const auto& m = c.C;
    const Field f = r.field;
    Certificates out;
    bool inv = true;
    for (std::size_t a = 0; a < r.dim; ++a) inv = inv && app(m.left[a], z) == app(m.right[a], z);
    out.push_back({"z in C^R", inv, ""});
    const Vector ez = app(c.eps, z);
    switch (kind) {
        case Kind::semiseparable: {
            bool ok = true;
            for (std::size_t j = 0; j < m.dim; ++j)
                ok = ok && act(m.left, ez, basis(m.dim, j, f), f) == basis(m.dim, j, f);
            out.push_back({"eps(z) c = c", ok, ""});
            break;
        }
        case Kind::separable:
            out.push_back({"eps(z) = 1", ez == r.unit, ""});
            break;
        case Kind::naturally_full: {
            bool ok = true;
            for (std::size_t j = 0; j < m.dim; ++j)
                ok = ok && act(m.left, c.eps.col(j), z, f) == basis(m.dim, j, f);
            out.push_back({"c = eps(c) z", ok, ""});
            break;
        }
    }
    return out;
}

Certificates bimodule(const Bimodule& m, const std::vector<Matrix>& functionals, const Vector& tensor, bool separable) {
    const auto& r = m.left_algebra;
    const auto& s = m.right_algebra;
    const Field f = s.field;
    const std::size_t n = m.dim, nd = functionals.size(), fl = s.dim * n;
    Certificates out;
    bool linear = true;
    for (const auto& g : functionals)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < s.dim; ++k) {
                Vector sk = basis(s.dim, k, f);
                linear = linear && app(g, app(m.right[k], basis(n, j, f))) == mul(s, app(g, basis(n, j, f)), sk);
            }
    out.push_back({"functionals right S-linear", linear, ""});

    // Embed M*⊗M into Hom(M,S)⊗M (index (row·n + col)·n + b).
    auto embed = [&](const Matrix& g, const Vector& v) {
        Vector x = zeros(fl * n, f);
        for (std::size_t i = 0; i < s.dim; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (g(i, j).is_zero()) continue;
                for (std::size_t b = 0; b < n; ++b) x[(i * n + j) * n + b] += g(i, j) * v[b];
            }
        return x;
    };
    std::vector<Vector> relations;
    for (const auto& g : functionals)
        for (std::size_t a = 0; a < r.dim; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Vector x = embed(product(g, m.left[a]), basis(n, b, f));
                Vector y = embed(g, app(m.left[a], basis(n, b, f)));
                for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
                relations.push_back(std::move(x));
            }
    bool central = true;
    for (std::size_t k = 0; k < s.dim; ++k) {
        Vector sk = basis(s.dim, k, f);
        Matrix lk(s.dim, s.dim, f);
        for (std::size_t j = 0; j < s.dim; ++j) lk.set_col(j, mul(s, sk, basis(s.dim, j, f)));
        Vector diff = zeros(fl * n, f);
        for (std::size_t a = 0; a < nd; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& c = tensor[a * n + b];
                if (c.is_zero()) continue;
                Vector x = embed(product(lk, functionals[a]), basis(n, b, f));
                Vector y = embed(functionals[a], app(m.right[k], basis(n, b, f)));
                for (std::size_t i = 0; i < x.size(); ++i) diff[i] += c * (x[i] - y[i]);
            }
        central = central && linalg::in_span(relations, diff, fl * n, f);
    }
    out.push_back({"tensor central", central, ""});

    Vector z = zeros(s.dim, f);
    for (std::size_t a = 0; a < nd; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& c = tensor[a * n + b];
            if (c.is_zero()) continue;
            Vector v = functionals[a].col(b);
            for (std::size_t i = 0; i < s.dim; ++i) z[i] += c * v[i];
        }
    if (separable) {
        out.push_back({"sum f_i(m_i) = 1", z == s.unit, ""});
    } else {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) ok = ok && act(m.right, z, basis(n, j, f), f) == basis(n, j, f);
        out.push_back({"sum m f_i(m_i) = m", ok, ""});
    }
    return out;
}

}  // namespace semisep::sepcheck::verify
