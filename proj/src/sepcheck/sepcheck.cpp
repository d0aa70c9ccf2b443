#include "semisep/sepcheck/sepcheck.hpp"

#include "semisep/errors.hpp"

#include <stdexcept>

namespace semisep::sepcheck {

using algstruct::BalancedTensor;
using algstruct::coordinates_in;
using linalg::Field;
using linalg::flatten;
using linalg::kron;
using linalg::matrix_of;
using linalg::Scalar;
using linalg::unit_vector;
using linalg::zero_vector;

namespace {

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

Matrix combine(const std::vector<Matrix>& basis, const Vector& c, std::size_t rows, std::size_t cols, Field f) {
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!c[i].is_zero()) m = m + c[i] * basis[i];
    return m;
}

Vector combine(const std::vector<Vector>& basis, const Vector& c, std::size_t n, Field f) {
    Vector v = zero_vector(n, f);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!c[i].is_zero()) linalg::axpy(v, c[i], basis[i]);
    return v;
}

/// Solves map(c) = target for c ∈ k^nvars.
linalg::AffineSolution solve(std::size_t nvars, const Vector& target, Field f,
                             const std::function<Vector(const Vector&)>& map) {
    return linalg::solve_affine(matrix_of(nvars, target.size(), f, map), target);
}

Certificate cert(std::string law, bool holds, std::string detail = "") {
    return {std::move(law), holds, std::move(detail)};
}

Vector concat_units(std::size_t n, Field f) {
    Vector v;
    for (std::size_t j = 0; j < n; ++j) append(v, unit_vector(n, j, f));
    return v;
}

Matrix coords_matrix(const std::vector<Vector>& basis, const Matrix& m) {
    Matrix out(basis.size(), m.cols(), m.field());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto c = coordinates_in(basis, m.col(j));
        if (!c) throw std::logic_error("vector outside the expected span");
        out.set_col(j, *c);
    }
    return out;
}

}  // namespace

Bimodule extension_bimodule(const AlgebraMap& phi) {
    return algstruct::restrict(algstruct::regular_bimodule(phi.target), phi, phi);
}

RingExtReport ring_ext_analyze(const AlgebraMap& phi) {
    algstruct::require_valid(phi, "ring map");
    const auto& r = phi.source;
    const auto& s = phi.target;
    const Field f = r.field;
    const auto maps = algstruct::bimodule_map_space(extension_bimodule(phi), algstruct::regular_bimodule(r));
    const std::size_t k = maps.size();
    auto E_of = [&](const Vector& c) { return combine(maps, c, r.dim, s.dim, f); };

    RingExtReport rep;
    auto semi = solve(k, s.unit, f, [&](const Vector& c) { return phi(E_of(c).apply(s.unit)); });
    auto sep = solve(k, flatten(Matrix::identity(r.dim, f)), f,
                     [&](const Vector& c) { return flatten(E_of(c) * phi.matrix); });
    auto nat = solve(k, flatten(Matrix::identity(s.dim, f)), f,
                     [&](const Vector& c) { return flatten(phi.matrix * E_of(c)); });
    rep.semiseparable = Verdict::of(semi);
    rep.separable = Verdict::of(sep);
    rep.naturally_full = Verdict::of(nat);
    if (sep.feasible) rep.E_separable = E_of(sep.particular);
    if (nat.feasible) rep.E_naturally_full = E_of(nat.particular);
    if (!semi.feasible) return rep;

    const Matrix E = E_of(semi.particular);
    rep.E = E;
    const Vector z = E.apply(s.unit);
    rep.z = z;
    rep.z_unique = true;
    for (const auto& dir : semi.kernel)
        if (!linalg::is_zero(E_of(dir).apply(s.unit))) rep.z_unique = false;

    auto& cs = rep.certificates;
    cs.push_back(cert("phi(E(1)) = 1", phi(z) == s.unit));
    auto ci = algstruct::center_and_idempotent(r, z);
    cs.push_back(cert("z central", ci.central));
    cs.push_back(cert("z idempotent", ci.idempotent));
    cs.push_back(cert("right multiplication by z is a central idempotent endomorphism", ci.endomorphism_central_idempotent));
    cs.push_back(cert("z unique", rep.z_unique));

    auto corner = algstruct::corner_algebra(r, z);
    const Matrix tau = phi.matrix * corner.inclusion;
    const Matrix pi = corner.projection * E;
    cs.push_back(cert("pi o tau = Id on Rz", pi * tau == Matrix::identity(corner.algebra.dim, f)));

    std::vector<Vector> cols;
    for (std::size_t j = 0; j < r.dim; ++j) cols.push_back(phi.matrix.col(j));
    auto image_basis = linalg::span_basis(cols, s.dim, f);
    auto image = algstruct::subalgebra(s, cols);
    const Matrix lambda = coords_matrix(image_basis, tau);
    cs.push_back(cert("lambda: Rz -> phi(R) bijective",
                      lambda.rows() == lambda.cols() && linalg::rank(lambda) == lambda.rows()));
    cs.push_back(cert("lambda(rz) = phi(r)", lambda * corner.projection == coords_matrix(image_basis, phi.matrix)));

    // Inclusion part: phi(R) -> S is split by phi o E as phi(R)-bimodules.
    const Matrix e_iota = coords_matrix(image_basis, phi.matrix * E);
    bool iota_ok = e_iota * image.inclusion == Matrix::identity(image_basis.size(), f);
    for (const auto& a : image_basis)
        for (std::size_t j = 0; j < s.dim; ++j) {
            auto b = s.basis_vector(j);
            iota_ok = iota_ok && phi(E.apply(s.multiply(a, b))) == s.multiply(a, phi(E.apply(b)));
            iota_ok = iota_ok && phi(E.apply(s.multiply(b, a))) == s.multiply(phi(E.apply(b)), a);
        }
    cs.push_back(cert("inclusion part separable", iota_ok));

    // Image part: R -> phi(R) is split by E restricted to phi(R) as R-bimodules.
    const Matrix d = E * image.inclusion;
    bool image_ok = coords_matrix(image_basis, phi.matrix * d) == Matrix::identity(image_basis.size(), f);
    for (std::size_t i = 0; i < r.dim; ++i)
        for (const auto& x : image_basis) {
            auto ri = r.basis_vector(i);
            image_ok = image_ok && E.apply(s.multiply(phi(ri), x)) == r.multiply(ri, E.apply(x));
            image_ok = image_ok && E.apply(s.multiply(x, phi(ri))) == r.multiply(E.apply(x), ri);
        }
    cs.push_back(cert("image part naturally full", image_ok));
    rep.corner = std::move(corner);
    rep.image = std::move(image);
    return rep;
}

CoalgMapReport coalg_map_analyze(const CoalgebraMap& psi) {
    algstruct::require_valid(psi, "coalgebra map");
    const auto& c = psi.source;
    const auto& d = psi.target;
    const Field f = c.field;
    const Matrix dc = Matrix::from_columns(c.comult, c.dim * c.dim, f);
    const Matrix dd = Matrix::from_columns(d.comult, d.dim * d.dim, f);
    const Matrix ic = Matrix::identity(c.dim, f), id = Matrix::identity(d.dim, f);
    const Matrix left = kron(psi.matrix, ic) * dc;
    const Matrix right = kron(ic, psi.matrix) * dc;
    auto eqs = matrix_of(c.dim * d.dim, 2 * d.dim * c.dim * d.dim, f, [&](const Vector& u) {
        auto chi = linalg::unflatten(u, c.dim, d.dim, f);
        Vector out = flatten(left * chi - kron(id, chi) * dd);
        append(out, flatten(right * chi - kron(chi, id) * dd));
        return out;
    });
    std::vector<Matrix> maps;
    for (const auto& v : linalg::span_basis(linalg::kernel(eqs), c.dim * d.dim, f))
        maps.push_back(linalg::unflatten(v, c.dim, d.dim, f));
    CoalgMapReport rep;
    rep.bicomodule_maps = maps.size();
    auto chi_of = [&](const Vector& x) { return combine(maps, x, c.dim, d.dim, f); };
    const Matrix eps_c = Matrix::from_rows({c.counit}, c.dim, f);
    auto semi = solve(maps.size(), c.counit, f, [&](const Vector& x) { return (eps_c * chi_of(x) * psi.matrix).row(0); });
    auto sep = solve(maps.size(), flatten(id), f, [&](const Vector& x) { return flatten(psi.matrix * chi_of(x)); });
    auto nat = solve(maps.size(), flatten(ic), f, [&](const Vector& x) { return flatten(chi_of(x) * psi.matrix); });
    rep.semiseparable = Verdict::of(semi);
    rep.separable = Verdict::of(sep);
    rep.naturally_full = Verdict::of(nat);
    if (semi.feasible) rep.chi = chi_of(semi.particular);
    if (sep.feasible) rep.chi_separable = chi_of(sep.particular);
    if (nat.feasible) rep.chi_naturally_full = chi_of(nat.particular);
    return rep;
}

CoringReport coring_analyze(const Coring& c) {
    algstruct::require_valid(c, "coring");
    const auto& r = c.base();
    const auto& m = c.C;
    const Field f = r.field;
    const std::size_t n = m.dim;
    const auto inv = algstruct::invariants(m);
    auto z_of = [&](const Vector& x) { return combine(inv, x, n, f); };
    CoringReport rep;

    auto semi = solve(inv.size(), concat_units(n, f), f, [&](const Vector& x) {
        const Vector ez = c.eps.apply(z_of(x));
        Vector out;
        for (std::size_t j = 0; j < n; ++j) append(out, m.act_left(ez, unit_vector(n, j, f)));
        return out;
    });
    Vector eps_cols;
    for (std::size_t j = 0; j < n; ++j) append(eps_cols, c.eps.col(j));
    auto equiv = solve(inv.size(), eps_cols, f, [&](const Vector& x) {
        const Vector ez = c.eps.apply(z_of(x));
        Vector out;
        for (std::size_t j = 0; j < n; ++j) append(out, r.multiply(ez, c.eps.col(j)));
        return out;
    });
    auto cosplit = solve(inv.size(), r.unit, f, [&](const Vector& x) { return c.eps.apply(z_of(x)); });
    auto natfull = solve(inv.size(), concat_units(n, f), f, [&](const Vector& x) {
        const Vector z = z_of(x);
        Vector out;
        for (std::size_t j = 0; j < n; ++j) append(out, m.act_left(c.eps.col(j), z));
        return out;
    });
    rep.semicosplit = Verdict::of(semi);
    rep.cosplit = Verdict::of(cosplit);
    rep.natfull_G = Verdict::of(natfull);
    rep.equivalent_form_agrees = semi.feasible == equiv.feasible;
    if (semi.feasible) rep.z = z_of(semi.particular);
    if (cosplit.feasible) rep.z_cosplit = z_of(cosplit.particular);
    if (natfull.feasible) rep.z_natfull = z_of(natfull.particular);

    const auto alphas = algstruct::bimodule_map_space(algstruct::regular_bimodule(r), m);
    auto reg = solve(alphas.size(), flatten(c.eps), f,
                     [&](const Vector& x) { return flatten(c.eps * combine(alphas, x, n, r.dim, f) * c.eps); });
    rep.eps_regular = Verdict::of(reg);
    if (reg.feasible) rep.alpha = combine(alphas, reg.particular, n, r.dim, f);
    rep.regularity_agrees = reg.feasible == semi.feasible;

    // Cointegral δ: C⊗_R C → R, an R-bimodule map with δ∘Δ = ε and
    // c₁δ(c₂⊗c′) = δ(c⊗c′₁)c′₂.
    const BalancedTensor t = algstruct::balanced_tensor(m, m);
    const std::size_t q = t.bimodule.dim;
    const Matrix pd = t.quotient.projection * c.delta;
    Vector target = zero_vector(2 * r.dim * r.dim * q, f);
    append(target, flatten(c.eps));
    append(target, zero_vector(n * n * n, f));
    const Matrix& pr = t.quotient.projection;
    auto coint = solve(r.dim * q, target, f, [&](const Vector& u) {
        const Matrix delta = linalg::unflatten(u, r.dim, q, f);
        Vector out;
        for (std::size_t a = 0; a < r.dim; ++a) {
            auto ra = r.basis_vector(a);
            append(out, flatten(delta * t.bimodule.left[a] - r.left_mult(ra) * delta));
            append(out, flatten(delta * t.bimodule.right[a] - r.right_mult(ra) * delta));
        }
        append(out, flatten(delta * pd));
        Vector col = zero_vector(n * n * n, f);
        for (std::size_t x = 0; x < u.size(); ++x) {
            if (u[x].is_zero()) continue;
            const std::size_t rho = x / q, kappa = x % q;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Vector& di = c.delta.col(i);
                    const Vector& dj = c.delta.col(j);
                    Scalar* o = &col[(i * n + j) * n];
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b) {
                            const Scalar& wl = di[a * n + b];
                            if (!wl.is_zero() && !pr(kappa, b * n + j).is_zero()) {
                                const Scalar w = u[x] * wl * pr(kappa, b * n + j);
                                for (std::size_t e = 0; e < n; ++e) o[e] += w * m.right[rho](e, a);
                            }
                            const Scalar& wr = dj[a * n + b];
                            if (!wr.is_zero() && !pr(kappa, i * n + a).is_zero()) {
                                const Scalar w = u[x] * wr * pr(kappa, i * n + a);
                                for (std::size_t e = 0; e < n; ++e) o[e] -= w * m.left[rho](e, b);
                            }
                        }
                }
        }
        append(out, col);
        return out;
    });
    rep.coseparable = Verdict::of(coint);
    if (coint.feasible) rep.cointegral = linalg::unflatten(coint.particular, r.dim, q, f);
    return rep;
}

CoringFactorization coring_factorize(const Coring& c, const CoringReport& report) {
    if (!report.semicosplit.holds() || !report.z) throw PreconditionError("coring is not semicosplit");
    const auto& r = c.base();
    const auto& m = c.C;
    const Field f = r.field;
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.dim; ++j) cols.push_back(c.eps.col(j));
    const auto basis = linalg::span_basis(cols, r.dim, f);
    const std::size_t ni = basis.size();

    CoringFactorization out;
    out.inclusion = Matrix::from_columns(basis, r.dim, f);
    out.psi = coords_matrix(basis, c.eps);
    const Vector zhat = c.eps.apply(*report.z);
    out.unit = *coordinates_in(basis, zhat);

    Bimodule ib{r, r, ni, {}, {}};
    for (std::size_t a = 0; a < r.dim; ++a) {
        ib.left.push_back(coords_matrix(basis, r.left_mult(r.basis_vector(a)) * out.inclusion));
        ib.right.push_back(coords_matrix(basis, r.right_mult(r.basis_vector(a)) * out.inclusion));
    }
    Matrix delta(ni * ni, ni, f);
    for (std::size_t j = 0; j < ni; ++j) delta.set_col(j, kron(unit_vector(ni, j, f), out.unit));
    out.ideal = Coring{ib, delta, out.inclusion};
    auto& cs = out.certificates;
    cs.push_back(cert("ideal coring valid", algstruct::validate(out.ideal).empty()));

    out.nu = Matrix(m.dim, ni, f);
    for (std::size_t j = 0; j < ni; ++j) out.nu.set_col(j, m.act_left(basis[j], *report.z));
    cs.push_back(cert("psi o nu = Id", out.psi * out.nu == Matrix::identity(ni, f)));
    cs.push_back(cert("counit preserved", out.inclusion * out.psi == c.eps));
    const auto ii = algstruct::balanced_tensor(ib, ib);
    cs.push_back(cert("comultiplication preserved", ii.quotient.projection * kron(out.psi, out.psi) * c.delta ==
                                                        ii.quotient.projection * delta * out.psi));
    bool lin = true;
    for (std::size_t a = 0; a < r.dim; ++a)
        lin = lin && out.psi * m.left[a] == ib.left[a] * out.psi && out.psi * m.right[a] == ib.right[a] * out.psi;
    cs.push_back(cert("psi R-bilinear", lin));
    const Vector zc = out.unit;
    cs.push_back(cert("unit of I is grouplike", delta.apply(zc) == kron(zc, zc)));
    return out;
}

Evaluation evaluation(const Bimodule& m) {
    Evaluation e;
    e.dual = algstruct::dual_module(m);
    e.tensor = algstruct::balanced_tensor(e.dual.bimodule, m);
    const auto& s = m.right_algebra;
    const std::size_t nd = e.dual.maps.size(), n = m.dim;
    e.ev_flat = Matrix(s.dim, nd * n, s.field);
    for (std::size_t a = 0; a < nd; ++a)
        for (std::size_t b = 0; b < n; ++b) e.ev_flat.set_col(a * n + b, e.dual.maps[a].col(b));
    e.ev = e.ev_flat * e.tensor.quotient.section;
    return e;
}

namespace {

struct BimoduleSystems {
    Evaluation ev;
    std::vector<Vector> inv;
    linalg::AffineSolution semi;
    linalg::AffineSolution sep;
};

BimoduleSystems bimodule_systems(const Bimodule& m) {
    BimoduleSystems b{evaluation(m), {}, {}, {}};
    const auto& s = m.right_algebra;
    const Field f = s.field;
    const std::size_t n = m.dim, q = b.ev.tensor.bimodule.dim;
    b.inv = algstruct::invariants(b.ev.tensor.bimodule);
    auto t_of = [&](const Vector& x) { return combine(b.inv, x, q, f); };
    b.semi = solve(b.inv.size(), concat_units(n, f), f, [&](const Vector& x) {
        const Vector z = b.ev.ev.apply(t_of(x));
        Vector out;
        for (std::size_t j = 0; j < n; ++j) append(out, m.act_right(unit_vector(n, j, f), z));
        return out;
    });
    b.sep = solve(b.inv.size(), s.unit, f, [&](const Vector& x) { return b.ev.ev.apply(t_of(x)); });
    return b;
}

}  // namespace

BimoduleReport bimodule_analyze(const Bimodule& m) {
    algstruct::require_valid(m, "bimodule");
    const auto& r = m.left_algebra;
    const auto& s = m.right_algebra;
    const Field f = s.field;
    const std::size_t n = m.dim;
    auto sys = bimodule_systems(m);
    const auto& ev = sys.ev;
    const std::size_t q = ev.tensor.bimodule.dim;
    auto t_of = [&](const Vector& x) { return combine(sys.inv, x, q, f); };

    BimoduleReport rep;
    rep.dual_maps = ev.dual.maps;
    rep.M_semisep = Verdict::of(sys.semi);
    rep.M_sep = Verdict::of(sys.sep);
    if (sys.sep.feasible) {
        rep.separable_tensor = t_of(sys.sep.particular);
        rep.separable_tensor_flat = ev.tensor.lift(*rep.separable_tensor);
    }

    const auto gammas = algstruct::bimodule_map_space(algstruct::regular_bimodule(s), ev.tensor.bimodule);
    rep.ev_regular = Verdict::of(solve(gammas.size(), flatten(ev.ev), f, [&](const Vector& x) {
        return flatten(ev.ev * combine(gammas, x, q, s.dim, f) * ev.ev);
    }));
    std::vector<Vector> images;
    for (std::size_t b = 0; b < q; ++b) {
        const Vector val = ev.ev.col(b);
        for (std::size_t a = 0; a < n; ++a) images.push_back(m.act_right(unit_vector(n, a, f), val));
    }
    const std::size_t image_rank = linalg::span_basis(images, n, f).size();
    rep.ev_tensor_surjective =
        Verdict::of(image_rank == n, "image rank " + std::to_string(image_rank) + " of " + std::to_string(n));

    rep.trace = algstruct::trace_ideal_and_fgp(m);
    rep.generator = Verdict::of(rep.trace.generator, "trace ideal dimension " + std::to_string(rep.trace.trace_ideal.size()) +
                                                         " of " + std::to_string(s.dim));
    rep.fgp = Verdict::of(rep.trace.fgp);
    rep.thm_agrees = rep.M_semisep.holds() == (rep.ev_regular.holds() && rep.ev_tensor_surjective.holds());
    rep.cor_agrees = rep.M_sep.holds() == (rep.M_semisep.holds() && rep.generator.holds());
    rep.certificates.push_back(cert("evaluation is balanced", ev.ev * ev.tensor.quotient.projection == ev.ev_flat));
    if (!sys.semi.feasible) return rep;

    const Vector t = t_of(sys.semi.particular);
    rep.central_tensor = t;
    rep.central_tensor_flat = ev.tensor.lift(t);
    const Vector z = ev.ev.apply(t);
    rep.z = z;
    auto& cs = rep.certificates;
    auto ci = algstruct::center_and_idempotent(s, z);
    cs.push_back(cert("z central idempotent", ci.central && ci.idempotent));
    bool mz = true;
    for (std::size_t j = 0; j < n; ++j) mz = mz && m.act_right(unit_vector(n, j, f), z) == unit_vector(n, j, f);
    cs.push_back(cert("m z = m", mz));
    auto corner = algstruct::corner_algebra(s, z);
    Bimodule restricted{r, corner.algebra, n, m.left, {}};
    for (std::size_t k = 0; k < corner.algebra.dim; ++k) restricted.right.push_back(m.right_action(corner.inclusion.col(k)));
    const bool valid = algstruct::validate(restricted).empty();
    cs.push_back(cert("M is an (R,Sz)-bimodule", valid));
    cs.push_back(cert("Sz is M-separable", valid && bimodule_systems(restricted).sep.feasible));
    return rep;
}

Coring comatrix_coring(const Bimodule& m, const std::vector<Vector>& elements, const std::vector<Vector>& functionals) {
    const Field f = m.field();
    const std::size_t n = m.dim;
    const auto ev = evaluation(m);
    const std::size_t nd = ev.dual.maps.size();
    if (elements.size() != functionals.size()) throw PreconditionError("dual basis lists differ in length");
    for (std::size_t j = 0; j < n; ++j) {
        Vector acc = zero_vector(n, f);
        for (std::size_t i = 0; i < elements.size(); ++i)
            linalg::axpy(acc, Scalar::one(f),
                         m.act_right(elements[i], ev.dual.functional(functionals[i]).col(j)));
        if (acc != unit_vector(n, j, f)) throw PreconditionError("not a dual basis");
    }
    const auto& t = ev.tensor;
    const std::size_t q = t.bimodule.dim;
    Matrix delta(q * q, q, f);
    for (std::size_t b = 0; b < q; ++b) {
        const Vector flat = t.quotient.section.col(b);
        Vector out = zero_vector(q * q, f);
        for (std::size_t a = 0; a < nd; ++a)
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& coef = flat[a * n + c];
                if (coef.is_zero()) continue;
                for (std::size_t i = 0; i < elements.size(); ++i)
                    linalg::axpy(out, coef,
                                 kron(t.element(unit_vector(nd, a, f), elements[i]),
                                      t.element(functionals[i], unit_vector(n, c, f))));
            }
        delta.set_col(b, out);
    }
    Coring c{t.bimodule, delta, ev.ev};
    auto v = algstruct::validate(c);
    if (!v.empty()) throw std::logic_error("comatrix coring failed validation: " + v.front());
    return c;
}

Coring comatrix_coring(const Bimodule& m) {
    auto tr = algstruct::trace_ideal_and_fgp(m);
    if (!tr.fgp) throw PreconditionError("module is not finitely generated projective");
    return comatrix_coring(m, tr.dual_basis_elements, tr.dual_basis_functionals);
}

EndoReport endo_ring_analyze(const Bimodule& m) {
    algstruct::require_valid(m, "bimodule");
    const auto& r = m.left_algebra;
    const Field f = m.field();
    const std::size_t n = m.dim;
    auto eqs = matrix_of(n * n, m.right.size() * n * n, f, [&](const Vector& u) {
        auto x = linalg::unflatten(u, n, n, f);
        Vector out;
        for (const auto& rho : m.right) append(out, flatten(x * rho - rho * x));
        return out;
    });
    const auto basis = linalg::span_basis(linalg::kernel(eqs), n * n, f);
    EndoReport rep;
    auto& e = rep.endo;
    e.field = f;
    e.dim = basis.size();
    for (std::size_t i = 0; i < e.dim; ++i) e.basis.push_back("E" + std::to_string(i + 1));
    for (const auto& x : basis)
        for (const auto& y : basis)
            e.mult.push_back(*coordinates_in(
                basis, flatten(linalg::unflatten(x, n, n, f) * linalg::unflatten(y, n, n, f))));
    e.unit = *coordinates_in(basis, flatten(Matrix::identity(n, f)));
    algstruct::require_valid(e, "endomorphism ring");
    rep.phi = AlgebraMap{r, e, Matrix(e.dim, r.dim, f)};
    for (std::size_t i = 0; i < r.dim; ++i) rep.phi.matrix.set_col(i, *coordinates_in(basis, flatten(m.left[i])));
    rep.report = ring_ext_analyze(rep.phi);

    auto tr = algstruct::trace_ideal_and_fgp(m);
    if (!tr.fgp) return rep;
    // M⊗_S M* with (m⊗f)(m′⊗f′) = m f(m′)⊗f′.
    const auto& d = tr.dual;
    const std::size_t nd = d.maps.size();
    const auto w = algstruct::balanced_tensor(m, d.bimodule);
    const std::size_t q = w.bimodule.dim;
    auto flat_mult = [&](const Vector& x, const Vector& y) {
        Vector out = zero_vector(n * nd, f);
        for (std::size_t p = 0; p < n * nd; ++p) {
            if (x[p].is_zero()) continue;
            for (std::size_t p2 = 0; p2 < n * nd; ++p2) {
                if (y[p2].is_zero()) continue;
                const Vector val = d.maps[p % nd].col(p2 / nd);
                linalg::axpy(out, x[p] * y[p2],
                             kron(m.act_right(unit_vector(n, p / nd, f), val), unit_vector(nd, p2 % nd, f)));
            }
        }
        return out;
    };
    FDAlgebra alg;
    alg.field = f;
    alg.dim = q;
    for (std::size_t i = 0; i < q; ++i) alg.basis.push_back("w" + std::to_string(i + 1));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            alg.mult.push_back(w.project(flat_mult(w.quotient.section.col(i), w.quotient.section.col(j))));
    auto coev = [&](const Matrix& act) {
        Vector out = zero_vector(n * nd, f);
        for (std::size_t i = 0; i < tr.dual_basis_elements.size(); ++i)
            linalg::axpy(out, Scalar::one(f), kron(act.apply(tr.dual_basis_elements[i]), tr.dual_basis_functionals[i]));
        return w.project(out);
    };
    alg.unit = coev(Matrix::identity(n, f));
    algstruct::require_valid(alg, "tensor endomorphism ring");
    AlgebraMap phi2{r, alg, Matrix(q, r.dim, f)};
    for (std::size_t i = 0; i < r.dim; ++i) phi2.matrix.set_col(i, coev(m.left[i]));
    rep.report_tensor = ring_ext_analyze(phi2);
    rep.phi_tensor = std::move(phi2);
    rep.agrees = rep.report.semiseparable.holds() == rep.report_tensor->semiseparable.holds() &&
                 rep.report.separable.holds() == rep.report_tensor->separable.holds() &&
                 rep.report.naturally_full.holds() == rep.report_tensor->naturally_full.holds();
    return rep;
}

Coring build_sweedler_coring(const AlgebraMap& phi) {
    algstruct::require_valid(phi, "ring map");
    const auto& s = phi.target;
    const Field f = s.field;
    const auto reg = algstruct::regular_bimodule(s);
    const auto ids = algstruct::identity_map(s);
    const auto t = algstruct::balanced_tensor(algstruct::restrict(reg, ids, phi), algstruct::restrict(reg, phi, ids));
    const std::size_t q = t.bimodule.dim, d = s.dim;

    Matrix mult_flat(d, d * d, f);
    for (std::size_t p = 0; p < d * d; ++p) mult_flat.set_col(p, s.mult[p]);
    Matrix delta(q * q, q, f);
    for (std::size_t b = 0; b < q; ++b) {
        const Vector flat = t.quotient.section.col(b);
        Vector out = zero_vector(q * q, f);
        for (std::size_t p = 0; p < d * d; ++p)
            if (!flat[p].is_zero())
                linalg::axpy(out, flat[p],
                             kron(t.element(s.basis_vector(p / d), s.unit), t.element(s.unit, s.basis_vector(p % d))));
        delta.set_col(b, out);
    }
    return Coring{t.bimodule, delta, mult_flat * t.quotient.section};
}

SweedlerReport sweedler_coring(const AlgebraMap& phi) {
    const auto& r = phi.source;
    const auto& s = phi.target;
    const Field f = s.field;
    SweedlerReport rep{build_sweedler_coring(phi), {}, {}, {}, false, {}, {}, false};
    rep.report = coring_analyze(rep.coring);
    const auto& t = rep.coring.C;
    const std::size_t q = t.dim, d = s.dim;

    // Separability idempotent: e ∈ S⊗_R S with s·e = e·s and mult(e) = 1.
    Vector target = zero_vector(d * q, f);
    append(target, s.unit);
    auto idem = solve(q, target, f, [&](const Vector& e) {
        Vector out;
        for (std::size_t i = 0; i < d; ++i) append(out, linalg::sub(t.left[i].apply(e), t.right[i].apply(e)));
        append(out, rep.coring.eps.apply(e));
        return out;
    });
    rep.separability_idempotent = Verdict::of(idem);
    if (idem.feasible) rep.idempotent = idem.particular;
    rep.sweed1_agrees = rep.report.semicosplit.holds() == idem.feasible;

    rep.ring = ring_ext_analyze(phi);
    // The E-condition solved on raw R.dim × S.dim matrices.
    Vector t2 = zero_vector(2 * r.dim * d * r.dim, f);
    append(t2, s.unit);
    auto econd = solve(r.dim * d, t2, f, [&](const Vector& u) {
        const Matrix e = linalg::unflatten(u, r.dim, d, f);
        Vector out;
        for (std::size_t i = 0; i < r.dim; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Vector ri = r.basis_vector(i), sj = s.basis_vector(j);
                append(out, linalg::sub(e.apply(s.multiply(phi(ri), sj)), r.multiply(ri, e.apply(sj))));
                append(out, linalg::sub(e.apply(s.multiply(sj, phi(ri))), r.multiply(e.apply(sj), ri)));
            }
        append(out, phi(e.apply(s.unit)));
        return out;
    });
    rep.e_condition = Verdict::of(econd);
    rep.sweed2_agrees = rep.ring.semiseparable.holds() == econd.feasible &&
                        (!econd.feasible || rep.report.coseparable.holds());
    return rep;
}

}  // namespace semisep::sepcheck
