#include "adjalex/linalg.hpp"

namespace adjalex {

void Matrix::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    require(row.size() == cols_, ErrorKind::Precondition, "matrix row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, ErrorKind::Precondition, "matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o.at(k, j)) != 0) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Echelon rref(const Matrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && sgn(a[p][c]) == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t k = c; k < m.cols(); ++k) a[r][k] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = c; k < m.cols(); ++k)
                if (sgn(a[r][k]) != 0) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon e;
    e.reduced = Matrix(0, m.cols());
    for (std::size_t i = 0; i < r; ++i) e.reduced.append_row(a[i]);
    e.pivots = std::move(pivots);
    return e;
}

std::size_t rank(const Matrix& m) {
    RowSpace rs(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
        rs.add(std::move(v));
    }
    return rs.rank();
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

void RowSpace::reduce(std::vector<Rational>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& x = v[piv_[i]];
        if (sgn(x) == 0) continue;
        Rational f = x;
        const auto& row = rows_[i];
        for (std::size_t k = piv_[i]; k < dim_; ++k)
            if (sgn(row[k]) != 0) v[k] -= f * row[k];
    }
}

bool RowSpace::add(std::vector<Rational> v) {
    require(v.size() == dim_, ErrorKind::Precondition, "row space dimension mismatch");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / v[p];
    for (std::size_t k = p; k < dim_; ++k) v[k] *= inv;
    // keep earlier rows reduced against the new pivot
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        Rational f = row[p];
        for (std::size_t k = p; k < dim_; ++k)
            if (sgn(v[k]) != 0) row[k] -= f * v[k];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
    require(v.size() == dim_, ErrorKind::Precondition, "row space dimension mismatch");
    reduce(v);
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

}  // namespace adjalex
