#include "dgc/linalg.hpp"

#include <algorithm>

namespace dgc {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Vec Mat::apply(const Field& F, const Vec& x) const {
    if (int(x.size()) != cols_) throw Error("linalg: matrix-vector size mismatch");
    Vec y(rows_, F.zero());
    for (int r = 0; r < rows_; ++r) {
        Scalar acc = F.zero();
        for (int c = 0; c < cols_; ++c)
            if (!F.is_zero(at(r, c)) && !F.is_zero(x[c])) acc = F.add(acc, F.mul(at(r, c), x[c]));
        y[r] = acc;
    }
    return y;
}

Mat Mat::mul(const Field& F, const Mat& other) const {
    if (cols_ != other.rows_) throw Error("linalg: matrix product size mismatch");
    Mat m(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (F.is_zero(at(r, k))) continue;
            for (int c = 0; c < other.cols_; ++c)
                m.at(r, c) = F.add(m.at(r, c), F.mul(at(r, k), other.at(k, c)));
        }
    return m;
}

Mat Mat::hcat(const Mat& other) const {
    if (rows_ != other.rows_) throw Error("linalg: hcat row mismatch");
    Mat m(rows_, cols_ + other.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (int c = 0; c < other.cols_; ++c) m.at(r, cols_ + c) = other.at(r, c);
    }
    return m;
}

bool Mat::is_zero() const {
    for (const auto& s : a_)
        if (s != 0) return false;
    return true;
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("linalg: vector size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("linalg: vector size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& F, const Scalar& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& s : a)
        if (s != 0) return false;
    return true;
}

Echelon rref(const Field& F, const Mat& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        Vec row(m.cols());
        for (int c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
        rows.push_back(std::move(row));
    }
    Echelon e;
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < int(rows.size()); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < int(rows.size()); ++r)
            if (!F.is_zero(rows[r][col])) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Scalar inv = F.inv(rows[pivot_row][col]);
        for (int c = col; c < m.cols(); ++c) rows[pivot_row][c] = F.mul(inv, rows[pivot_row][c]);
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == pivot_row || F.is_zero(rows[r][col])) continue;
            Scalar factor = rows[r][col];
            for (int c = col; c < m.cols(); ++c)
                rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[pivot_row][c]));
        }
        e.pivots.push_back(col);
        ++pivot_row;
    }
    e.rows.assign(rows.begin(), rows.begin() + pivot_row);
    return e;
}

int rank(const Field& F, const Mat& m) { return int(rref(F, m).pivots.size()); }

int rank_bareiss(const Field& F, const Mat& m) {
    if (F.kind() == Field::Kind::Prime) {
        // Same arithmetic, different elimination order: eliminate from the last
        // column backwards so pivots and row operations differ from rref().
        std::vector<Vec> rows;
        for (int r = 0; r < m.rows(); ++r) {
            Vec row(m.cols());
            for (int c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
            rows.push_back(std::move(row));
        }
        int rk = 0;
        for (int col = m.cols() - 1; col >= 0; --col) {
            int sel = -1;
            for (int r = rk; r < int(rows.size()); ++r)
                if (!F.is_zero(rows[r][col])) { sel = r; break; }
            if (sel < 0) continue;
            std::swap(rows[rk], rows[sel]);
            for (int r = rk + 1; r < int(rows.size()); ++r) {
                if (F.is_zero(rows[r][col])) continue;
                Scalar factor = F.div(rows[r][col], rows[rk][col]);
                for (int c = 0; c <= col; ++c)
                    rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[rk][c]));
            }
            ++rk;
        }
        return rk;
    }
    // Clear denominators row-wise, then integer fraction-free elimination.
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (int r = 0; r < nr; ++r) {
        mpz_class lcm_den(1);
        for (int c = 0; c < nc; ++c) {
            mpz_class den = m.at(r, c).get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        for (int c = 0; c < nc; ++c) {
            mpq_class v = m.at(r, c) * mpq_class(lcm_den);
            v.canonicalize();
            a[r][c] = v.get_num();
        }
    }
    mpz_class prev(1);
    int rk = 0;
    for (int col = 0; col < nc && rk < nr; ++col) {
        int sel = -1;
        for (int r = rk; r < nr; ++r)
            if (a[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(a[rk], a[sel]);
        for (int r = rk + 1; r < nr; ++r) {
            for (int c = col + 1; c < nc; ++c)
                a[r][c] = (a[rk][col] * a[r][c] - a[r][col] * a[rk][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

std::vector<Vec> kernel_basis(const Field& F, const Mat& m) {
    Echelon e = rref(F, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), F.zero());
        v[c] = F.one();
        for (size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivots[r]] = F.neg(e.rows[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> image_basis(const Field& F, const Mat& m) {
    // Pivot columns of the rref give an independent generating set.
    Echelon e = rref(F, m);
    std::vector<Vec> basis;
    for (int p : e.pivots) {
        Vec col(m.rows());
        for (int r = 0; r < m.rows(); ++r) col[r] = m.at(r, p);
        basis.push_back(std::move(col));
    }
    return basis;
}

std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b) {
    if (int(b.size()) != m.rows()) throw Error("linalg: solve size mismatch");
    Mat aug = m.hcat(Mat(m.rows(), 1));
    for (int r = 0; r < m.rows(); ++r) aug.at(r, m.cols()) = b[r];
    Echelon e = rref(F, aug);
    Vec x(m.cols(), F.zero());
    for (size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;  // 0 = 1 row
        x[e.pivots[r]] = e.rows[r][m.cols()];
    }
    return x;
}

std::optional<Vec> coordinates_in_span(const Field& F, const std::vector<Vec>& span, const Vec& v) {
    size_t dim = v.size();
    Mat m(int(dim), int(span.size()));
    for (size_t j = 0; j < span.size(); ++j) {
        if (span[j].size() != dim) throw Error("linalg: span vector size mismatch");
        for (size_t i = 0; i < dim; ++i) m.at(int(i), int(j)) = span[j][i];
    }
    return solve(F, m, v);
}

}  // namespace dgc
