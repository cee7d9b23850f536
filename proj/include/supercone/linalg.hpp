#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "supercone/rational.hpp"

namespace supercone {

/// Dense rational matrix, row-major.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Mat times(const Mat& other) const;
    Mat transposed() const;
    RatVec apply(const RatVec& v) const;

    bool operator==(const Mat& other) const;
    /// Lexicographic order on (rows, cols, entries); lets Mat key a std::set.
    bool operator<(const Mat& other) const;

  private:
    int rows_ = 0, cols_ = 0;
    RatVec a_;
};

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Basis of the right null space {v : m v = 0}.
std::vector<RatVec> kernel_basis(const Mat& m);

/// One exact solution of m x = b, or nullopt if inconsistent.
std::optional<RatVec> solve(const Mat& m, const RatVec& b);

/// Column-compressed sparse matrix; per-column entries sorted by row.
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, Rat>>> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(c) {}

    void add(int r, int c, const Rat& v);  // accumulates, drops zeros
    RatVec apply(const RatVec& v) const;
    SparseMat times(const SparseMat& other) const;
    SparseMat plus(const SparseMat& other, const Rat& scale) const;
    SparseMat scaled(const Rat& s) const;
    Mat dense() const;
    bool is_zero() const;
    size_t nnz() const;
    bool operator==(const SparseMat& other) const;
};

/// Incremental row-space tracker: feeds vectors one at a time, keeps a reduced
/// echelon basis and remembers how each echelon row decomposes over the
/// accepted input vectors, so members of the span can be re-expressed in terms
/// of the inputs accepted so far.
class SpanTracker {
  public:
    explicit SpanTracker(int dim) : dim_(dim) {}

    /// Returns true when v enlarged the span (v is then "accepted").
    bool add(const RatVec& v);

    /// Coordinates of v over the accepted vectors, or nullopt if v is outside.
    std::optional<RatVec> express(const RatVec& v) const;

    bool contains(const RatVec& v) const;

    int rank() const { return int(rows_.size()); }
    int accepted() const { return n_accepted_; }
    int dim() const { return dim_; }

  private:
    struct EchRow {
        RatVec v;     // reduced vector, leading entry 1
        RatVec expr;  // coordinates of v over accepted inputs
        int pivot;
    };
    int dim_;
    int n_accepted_ = 0;
    std::vector<EchRow> rows_;
};

}  // namespace supercone
