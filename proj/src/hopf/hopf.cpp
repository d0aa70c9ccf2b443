#include "semisep/hopf/hopf.hpp"

#include "semisep/errors.hpp"

namespace semisep::hopf {

using linalg::kron;
using linalg::Scalar;
using linalg::unit_vector;
using linalg::zero_vector;

AntipodeProperties verify_antipode_properties(const Bialgebra& b, const Matrix& s) {
    const auto& a = b.algebra;
    const auto& c = b.coalgebra;
    const std::size_t n = a.dim;
    if (s.rows() != n || s.cols() != n) throw InputError("antipode has the wrong dimension");
    AntipodeProperties p{true, true, true};
    for (std::size_t i = 0; i < n; ++i) {
        const Vector& d = c.comult[i];
        Vector conv = zero_vector(n, a.field);
        Vector flip = zero_vector(n * n, a.field);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& w = d[j * n + k];
                if (w.is_zero()) continue;
                linalg::axpy(conv, w, a.multiply(a.basis_vector(j), s.col(k)));
                linalg::axpy(flip, w, kron(s.col(k), s.col(j)));
            }
        if (conv != linalg::scale(c.counit[i], a.unit)) p.right_antipode = false;
        if (c.coproduct(s.col(i)) != flip) p.anti_comult = false;
        for (std::size_t j = 0; j < n; ++j)
            if (s.apply(a.mult[i * n + j]) != a.multiply(s.col(j), s.col(i))) p.anti_mult = false;
    }
    return p;
}

AntipodeSearch find_right_antipode(const Bialgebra& b, std::size_t bound) {
    algstruct::require_valid(b, "bialgebra");
    const auto& a = b.algebra;
    const auto& c = b.coalgebra;
    const std::size_t n = a.dim;
    const auto f = a.field;
    Vector target;
    for (std::size_t i = 0; i < n; ++i) {
        auto v = linalg::scale(c.counit[i], a.unit);
        target.insert(target.end(), v.begin(), v.end());
    }
    auto sys = linalg::matrix_of(n * n, n * n, f, [&](const Vector& u) {
        const Matrix s = linalg::unflatten(u, n, n, f);
        Vector out;
        for (std::size_t i = 0; i < n; ++i) {
            Vector conv = zero_vector(n, f);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!c.comult[i][j * n + k].is_zero())
                        linalg::axpy(conv, c.comult[i][j * n + k], a.multiply(a.basis_vector(j), s.col(k)));
            out.insert(out.end(), conv.begin(), conv.end());
        }
        return out;
    });
    auto sol = linalg::solve_affine(sys, target);
    AntipodeSearch out;
    out.linear = Verdict::of(sol);
    if (!sol.feasible) return out;
    out.particular = linalg::unflatten(sol.particular, n, n, f);
    for (const auto& k : sol.kernel) out.directions.push_back(linalg::unflatten(k, n, n, f));
    out.scanned = 1;
    if (verify_antipode_properties(b, *out.particular).all()) {
        out.status = Status::holds;
        out.S = out.particular;
        return out;
    }
    if (out.directions.empty()) return out;
    if (f.is_rational()) {
        out.status = Status::indeterminate;
        return out;
    }
    const std::size_t p = f.characteristic(), k = out.directions.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > bound / p) {
            out.status = Status::indeterminate;
            return out;
        }
        total *= p;
    }
    std::vector<std::size_t> digits(k, 0);
    for (std::size_t idx = 1; idx < total; ++idx) {
        for (std::size_t i = 0; i < k; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        Matrix s = *out.particular;
        for (std::size_t i = 0; i < k; ++i)
            if (digits[i]) s = s + Scalar(static_cast<long long>(digits[i]), f) * out.directions[i];
        ++out.scanned;
        if (verify_antipode_properties(b, s).all()) {
            out.status = Status::holds;
            out.S = s;
            return out;
        }
    }
    return out;
}

HopfVerdict coinvariant_verdict(const Bialgebra& b, std::size_t bound) {
    auto search = find_right_antipode(b, bound);
    HopfVerdict v;
    v.right_antipode_exists = search.linear;
    if (!search.linear.holds()) {
        v.anti_mult = v.anti_comult = Verdict::of(false, "no right antipode");
        v.coinvariant_semiseparable = Verdict::of(false, search.linear.detail);
        return v;
    }
    if (search.status == Status::holds) {
        auto p = verify_antipode_properties(b, *search.S);
        v.anti_mult = Verdict::of(p.anti_mult);
        v.anti_comult = Verdict::of(p.anti_comult);
        v.coinvariant_semiseparable = Verdict::of(p.all());
        v.S = search.S;
        return v;
    }
    auto p = verify_antipode_properties(b, *search.particular);
    const std::string note = search.status == Status::indeterminate
                                 ? "quadratic conditions unresolved on a positive-dimensional solution set"
                                 : "no right antipode satisfies the quadratic conditions";
    v.anti_mult = p.anti_mult ? Verdict::of(true) : Verdict{search.status, note, 0, 0};
    v.anti_comult = p.anti_comult ? Verdict::of(true) : Verdict{search.status, note, 0, 0};
    v.coinvariant_semiseparable = Verdict{search.status, note, 0, 0};
    return v;
}

FDCoalgebra grouplike_coalgebra(Field f, std::vector<std::string> names) {
    FDCoalgebra c;
    c.field = f;
    c.dim = names.size();
    c.basis = std::move(names);
    for (std::size_t i = 0; i < c.dim; ++i) c.comult.push_back(kron(unit_vector(c.dim, i, f), unit_vector(c.dim, i, f)));
    c.counit = Vector(c.dim, Scalar::one(f));
    return c;
}

Bialgebra monoid_bialgebra(Field f, const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                           std::vector<std::string> names) {
    auto a = algstruct::monoid_algebra(f, table, unit, std::move(names));
    Bialgebra b{a, grouplike_coalgebra(f, a.basis)};
    algstruct::require_valid(b, "monoid bialgebra");
    return b;
}

Bialgebra group_algebra(Field f, const std::vector<std::vector<std::size_t>>& table, std::size_t unit,
                        std::vector<std::string> names) {
    auto b = monoid_bialgebra(f, table, unit, std::move(names));
    for (std::size_t g = 0; g < table.size(); ++g) {
        bool inv = false;
        for (std::size_t h = 0; h < table.size(); ++h) inv = inv || (table[g][h] == unit && table[h][g] == unit);
        if (!inv) throw InputError("table is not a group: element " + std::to_string(g) + " has no inverse");
    }
    return b;
}

Bialgebra sweedler_h4(Field f) {
    auto v = [&](long long a, long long b, long long c, long long d) {
        return Vector{Scalar(a, f), Scalar(b, f), Scalar(c, f), Scalar(d, f)};
    };
    algstruct::FDAlgebra a;
    a.field = f;
    a.dim = 4;
    a.basis = {"1", "g", "x", "gx"};
    a.mult = {
        v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1),   // 1·_
        v(0, 1, 0, 0), v(1, 0, 0, 0), v(0, 0, 0, 1), v(0, 0, 1, 0),   // g·_
        v(0, 0, 1, 0), v(0, 0, 0, -1), v(0, 0, 0, 0), v(0, 0, 0, 0),  // x·_
        v(0, 0, 0, 1), v(0, 0, -1, 0), v(0, 0, 0, 0), v(0, 0, 0, 0),  // gx·_
    };
    a.unit = v(1, 0, 0, 0);
    FDCoalgebra c;
    c.field = f;
    c.dim = 4;
    c.basis = a.basis;
    auto e = [&](std::size_t i) { return unit_vector(4, i, f); };
    c.comult = {kron(e(0), e(0)), kron(e(1), e(1)), linalg::add(kron(e(2), e(0)), kron(e(1), e(2))),
                linalg::add(kron(e(3), e(1)), kron(e(0), e(3)))};
    c.counit = v(1, 1, 0, 0);
    Bialgebra b{a, c};
    algstruct::require_valid(b, "Sweedler algebra");
    return b;
}

bool is_grouplike(const FDCoalgebra& c, const Vector& g) {
    return c.coproduct(g) == kron(g, g) && c.eps(g).is_one();
}

std::vector<std::size_t> grouplike_verify(const FDCoalgebra& c, const std::vector<Vector>& candidates) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidates[i].size() == c.dim && is_grouplike(c, candidates[i])) out.push_back(i);
    return out;
}

bool coalgebra_map_verify(const Matrix& f, const FDCoalgebra& c, const FDCoalgebra& d) {
    return algstruct::validate(algstruct::CoalgebraMap{c, d, f}).empty();
}

std::vector<Vector> enumerate_grouplikes(const FDCoalgebra& c, std::size_t bound) {
    if (c.field.is_rational()) throw PreconditionError("grouplike enumeration needs a finite field");
    const std::size_t p = c.field.characteristic();
    std::size_t total = 1;
    for (std::size_t i = 0; i < c.dim; ++i) {
        if (total > bound / p) throw BoundExceeded("grouplike scan exceeds the bound");
        total *= p;
    }
    std::vector<Vector> out;
    Vector g = zero_vector(c.dim, c.field);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t x = idx;
        for (std::size_t i = 0; i < c.dim; ++i, x /= p) g[i] = Scalar(static_cast<long long>(x % p), c.field);
        if (is_grouplike(c, g)) out.push_back(g);
    }
    return out;
}

}  // namespace semisep::hopf
