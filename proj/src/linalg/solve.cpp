#include "semisep/linalg/solve.hpp"

#include <stdexcept>
#include <utility>

namespace semisep::linalg {

namespace {

struct RowEchelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan on a list of rows of length n. Rows past the rank are dropped.
RowEchelon eliminate(std::vector<Vector> rows, std::size_t n, std::size_t pivot_limit) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Scalar inv = rows[r][c].inverse();
        for (std::size_t j = c; j < n; ++j)
            if (!rows[r][j].is_zero()) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j < n; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

std::vector<Vector> rows_of(const Matrix& a) {
    std::vector<Vector> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    return rows;
}

std::vector<Vector> kernel_from(const RowEchelon& e, std::size_t n, Field f) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> ker;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vector v = zero_vector(n, f);
        v[j] = Scalar::one(f);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][j];
        ker.push_back(std::move(v));
    }
    return ker;
}

}  // namespace

Echelon rref(const Matrix& a) {
    auto e = eliminate(rows_of(a), a.cols(), a.cols());
    Matrix m(a.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < e.rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = e.rows[i][j];
    return {m, e.pivots};
}

std::size_t rank(const Matrix& a) { return eliminate(rows_of(a), a.cols(), a.cols()).pivots.size(); }

KernelImage kernel_and_image(const Matrix& a) {
    auto e = eliminate(rows_of(a), a.cols(), a.cols());
    KernelImage out;
    out.rank = e.pivots.size();
    out.kernel = kernel_from(e, a.cols(), a.field());
    out.image = eliminate(rows_of(a.transpose()), a.rows(), a.rows()).rows;
    return out;
}

std::vector<Vector> kernel(const Matrix& a) {
    return kernel_from(eliminate(rows_of(a), a.cols(), a.cols()), a.cols(), a.field());
}

AffineSolution solve_affine(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: dimension mismatch");
    const std::size_t n = a.cols();
    std::vector<Vector> rows = rows_of(a);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i] + Scalar::zero(a.field()));
    auto e = eliminate(std::move(rows), n + 1, n + 1);
    AffineSolution out;
    out.rank_augmented = e.pivots.size();
    out.rank_a = e.pivots.size();
    if (!e.pivots.empty() && e.pivots.back() == n) {
        --out.rank_a;
        return out;
    }
    out.feasible = true;
    out.particular = zero_vector(n, a.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.particular[e.pivots[i]] = e.rows[i][n];
    RowEchelon coeff;
    coeff.pivots = e.pivots;
    for (auto& r : e.rows) coeff.rows.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    out.kernel = kernel_from(coeff, n, a.field());
    return out;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t ambient, Field f) {
    std::vector<Vector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw std::invalid_argument("span_basis: dimension mismatch");
        Vector w = v;
        for (auto& x : w) x += Scalar::zero(f);
        rows.push_back(std::move(w));
    }
    return eliminate(std::move(rows), ambient, ambient).rows;
}

bool in_span(const std::vector<Vector>& vectors, const Vector& v, std::size_t ambient, Field f) {
    auto base = span_basis(vectors, ambient, f);
    auto more = base;
    more.push_back(v);
    return span_basis(more, ambient, f).size() == base.size();
}

std::vector<Vector> subspace_sum(const std::vector<Vector>& u, const std::vector<Vector>& w, std::size_t ambient,
                                 Field f) {
    std::vector<Vector> all = u;
    all.insert(all.end(), w.begin(), w.end());
    return span_basis(all, ambient, f);
}

std::vector<Vector> subspace_intersection(const std::vector<Vector>& u, const std::vector<Vector>& w,
                                          std::size_t ambient, Field f) {
    auto bu = span_basis(u, ambient, f);
    auto bw = span_basis(w, ambient, f);
    if (bu.empty() || bw.empty()) return {};
    // Solve Σ a_i u_i − Σ b_j w_j = 0.
    Matrix m(ambient, bu.size() + bw.size(), f);
    for (std::size_t i = 0; i < bu.size(); ++i)
        for (std::size_t k = 0; k < ambient; ++k) m(k, i) = bu[i][k];
    for (std::size_t j = 0; j < bw.size(); ++j)
        for (std::size_t k = 0; k < ambient; ++k) m(k, bu.size() + j) = -bw[j][k];
    std::vector<Vector> gens;
    for (const auto& sol : kernel(m)) {
        Vector x = zero_vector(ambient, f);
        for (std::size_t i = 0; i < bu.size(); ++i) axpy(x, sol[i], bu[i]);
        gens.push_back(std::move(x));
    }
    return span_basis(gens, ambient, f);
}

Quotient quotient(const std::vector<Vector>& u, const std::vector<Vector>& w, std::size_t ambient, Field f) {
    auto ue = eliminate(span_basis(u, ambient, f), ambient, ambient);
    auto reduce = [&](Vector v) {
        for (std::size_t i = 0; i < ue.rows.size(); ++i) {
            Scalar c = v[ue.pivots[i]];
            if (!c.is_zero()) axpy(v, -c, ue.rows[i]);
        }
        return v;
    };
    auto wb = span_basis(w, ambient, f);
    if (subspace_sum(ue.rows, wb, ambient, f).size() != wb.size())
        throw std::invalid_argument("quotient: U is not contained in W");
    std::vector<Vector> reduced;
    for (const auto& v : wb) reduced.push_back(reduce(v));
    auto re = eliminate(std::move(reduced), ambient, ambient);

    Quotient q;
    q.representatives = re.rows;
    const std::size_t d = re.rows.size();
    q.projection = Matrix(d, ambient, f);
    for (std::size_t j = 0; j < ambient; ++j) {
        Vector r = reduce(unit_vector(ambient, j, f));
        for (std::size_t k = 0; k < d; ++k) q.projection(k, j) = r[re.pivots[k]];
    }
    q.section = Matrix::from_columns(q.representatives, ambient, f);
    return q;
}

Quotient quotient(const std::vector<Vector>& u, std::size_t ambient, Field f) {
    // Representatives are the free unit vectors of rref(U); a pivot unit
    // vector reduces to minus the free part of its row.
    auto ue = eliminate(u, ambient, ambient);
    std::vector<long> free_index(ambient, -1);
    std::vector<bool> is_pivot(ambient, false);
    for (auto c : ue.pivots) is_pivot[c] = true;
    Quotient q;
    for (std::size_t j = 0; j < ambient; ++j)
        if (!is_pivot[j]) {
            free_index[j] = static_cast<long>(q.representatives.size());
            q.representatives.push_back(unit_vector(ambient, j, f));
        }
    const std::size_t d = q.representatives.size();
    q.projection = Matrix(d, ambient, f);
    for (std::size_t j = 0; j < ambient; ++j)
        if (!is_pivot[j]) q.projection(static_cast<std::size_t>(free_index[j]), j) = Scalar::one(f);
    for (std::size_t i = 0; i < ue.rows.size(); ++i) {
        const std::size_t p = ue.pivots[i];
        for (std::size_t j = 0; j < ambient; ++j)
            if (!is_pivot[j] && !ue.rows[i][j].is_zero())
                q.projection(static_cast<std::size_t>(free_index[j]), p) = -ue.rows[i][j];
    }
    q.section = Matrix::from_columns(q.representatives, ambient, f);
    return q;
}

Matrix matrix_of(std::size_t n_in, std::size_t n_out, Field f, const std::function<Vector(const Vector&)>& map) {
    Matrix m(n_out, n_in, f);
    for (std::size_t j = 0; j < n_in; ++j) {
        Vector c = map(unit_vector(n_in, j, f));
        if (c.size() != n_out) throw std::invalid_argument("matrix_of: output length mismatch");
        m.set_col(j, c);
    }
    return m;
}

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols, Field f) {
    if (v.size() != rows * cols) throw std::invalid_argument("unflatten: length mismatch");
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

Vector flatten(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Vector> rows = rows_of(a);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e = unit_vector(n, i, a.field());
        rows[i].insert(rows[i].end(), e.begin(), e.end());
    }
    auto e = eliminate(std::move(rows), 2 * n, n);
    if (e.pivots.size() != n) return std::nullopt;
    Matrix inv(n, n, a.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
    return inv;
}

}  // namespace semisep::linalg
