#include "supercone/linalg.hpp"

#include <algorithm>

#include "supercone/errors.hpp"

namespace supercone {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::times(const Mat& other) const {
    if (cols_ != other.rows_) throw InvalidInput("matrix product shape mismatch");
    Mat r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                if (other.at(k, j) != 0) r.at(i, j) += v * other.at(k, j);
        }
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatVec Mat::apply(const RatVec& v) const {
    if (int(v.size()) != cols_) throw InvalidInput("matrix apply shape mismatch");
    RatVec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

bool Mat::operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

bool Mat::operator<(const Mat& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    return vec_less(a_, other.a_);
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Mat m) { return int(rref(m).size()); }

std::vector<RatVec> kernel_basis(const Mat& m) {
    Mat e = m;
    std::vector<int> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        RatVec v(m.cols(), Rat(0));
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(int(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const Mat& m, const RatVec& b) {
    if (int(b.size()) != m.rows()) throw InvalidInput("solve shape mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    RatVec x(m.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), m.cols());
    return x;
}

void SparseMat::add(int r, int c, const Rat& v) {
    if (v == 0) return;
    auto& entries = col[c];
    auto it = std::lower_bound(entries.begin(), entries.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != entries.end() && it->first == r) {
        it->second += v;
        if (it->second == 0) entries.erase(it);
    } else {
        entries.insert(it, {r, v});
    }
}

RatVec SparseMat::apply(const RatVec& v) const {
    if (int(v.size()) != cols) throw InvalidInput("sparse apply shape mismatch");
    RatVec r(rows, Rat(0));
    for (int c = 0; c < cols; ++c) {
        if (v[c] == 0) continue;
        for (const auto& [row, val] : col[c]) r[row] += val * v[c];
    }
    return r;
}

SparseMat SparseMat::times(const SparseMat& other) const {
    if (cols != other.rows) throw InvalidInput("sparse product shape mismatch");
    SparseMat r(rows, other.cols);
    for (int c = 0; c < other.cols; ++c)
        for (const auto& [k, v] : other.col[c])
            for (const auto& [row, w] : col[k]) r.add(row, c, v * w);
    return r;
}

SparseMat SparseMat::plus(const SparseMat& other, const Rat& scale) const {
    if (rows != other.rows || cols != other.cols) throw InvalidInput("sparse sum shape mismatch");
    SparseMat r = *this;
    for (int c = 0; c < cols; ++c)
        for (const auto& [row, v] : other.col[c]) r.add(row, c, v * scale);
    return r;
}

SparseMat SparseMat::scaled(const Rat& s) const {
    SparseMat r(rows, cols);
    if (s == 0) return r;
    r = *this;
    for (auto& entries : r.col)
        for (auto& [row, v] : entries) v *= s;
    return r;
}

Mat SparseMat::dense() const {
    Mat m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (const auto& [row, v] : col[c]) m.at(row, c) = v;
    return m;
}

bool SparseMat::is_zero() const {
    for (const auto& entries : col)
        if (!entries.empty()) return false;
    return true;
}

size_t SparseMat::nnz() const {
    size_t n = 0;
    for (const auto& entries : col) n += entries.size();
    return n;
}

bool SparseMat::operator==(const SparseMat& other) const {
    return rows == other.rows && cols == other.cols && col == other.col;
}

bool SpanTracker::add(const RatVec& v) {
    if (int(v.size()) != dim_) throw InvalidInput("span tracker dimension mismatch");
    RatVec w = v;
    RatVec expr(size_t(n_accepted_) + 1, Rat(0));
    expr.back() = 1;
    for (const auto& row : rows_) {
        const Rat& f = w[row.pivot];
        if (f == 0) continue;
        Rat c = f;  // row.v has pivot entry 1
        for (int j = 0; j < dim_; ++j) w[j] -= c * row.v[j];
        for (size_t j = 0; j < row.expr.size(); ++j) expr[j] -= c * row.expr[j];
    }
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
        if (w[j] != 0) { pivot = j; break; }
    if (pivot < 0) return false;
    Rat inv = 1 / w[pivot];
    for (auto& x : w) x *= inv;
    for (auto& x : expr) x *= inv;
    rows_.push_back({std::move(w), std::move(expr), pivot});
    ++n_accepted_;
    return true;
}

std::optional<RatVec> SpanTracker::express(const RatVec& v) const {
    RatVec w = v;
    RatVec coords(size_t(n_accepted_), Rat(0));
    for (const auto& row : rows_) {
        const Rat& f = w[row.pivot];
        if (f == 0) continue;
        Rat c = f;
        for (int j = 0; j < dim_; ++j) w[j] -= c * row.v[j];
        for (size_t j = 0; j < row.expr.size(); ++j) coords[j] += c * row.expr[j];
    }
    for (const auto& x : w)
        if (x != 0) return std::nullopt;
    return coords;
}

bool SpanTracker::contains(const RatVec& v) const { return express(v).has_value(); }

}  // namespace supercone
