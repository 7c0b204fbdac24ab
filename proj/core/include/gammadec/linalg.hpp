#ifndef GAMMADEC_LINALG_HPP
#define GAMMADEC_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace gammadec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Sparse integer row: (column, coefficient) pairs sorted by column.
using SparseIntRow = std::vector<std::pair<int, Int>>;

/// Exact rank of an integer matrix by fraction-free sparse elimination
/// with fill-reducing (Markowitz-style) pivot selection.  Rows are
/// consumed.
int sparse_int_rank(std::vector<SparseIntRow> rows, int ncols);

/// Dense matrix of exact rationals with optional row/column labels,
/// used for restriction maps and debug dumps.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rat>> entries;  // rows x cols
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    static RationalMatrix zero(int r, int c) {
        RationalMatrix m;
        m.rows = r;
        m.cols = c;
        m.entries.assign(r, std::vector<Rat>(c, Rat(0)));
        return m;
    }
    Rat& at(int r, int c) { return entries[r][c]; }
    const Rat& at(int r, int c) const { return entries[r][c]; }

    static RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b);
    /// Stack matrices with equal column counts vertically.
    static RationalMatrix vstack(const std::vector<RationalMatrix>& blocks);

    int rank() const;

    /// Debug dump: "p/q" entries with labels.
    std::string dump() const;
};

/// Incremental reduced row echelon form over the rationals on a fixed
/// column universe.  Columns are pivoted in ascending index order, so
/// callers control basis choice by how they number columns.  Non-pivot
/// columns form a basis of the quotient space (column space modulo the
/// row space).
class RationalEchelon {
public:
    explicit RationalEchelon(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

    /// Reduce a row against the current echelon and absorb it if
    /// independent.  Returns true if the rank grew.
    bool add_row(std::vector<std::pair<int, Rat>> row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }

    bool is_pivot(int col) const { return pivot_of_col_[col] >= 0; }
    /// Non-pivot columns in ascending order.
    std::vector<int> free_columns() const;

    /// Class of the unit vector e_col in the quotient, as coordinates
    /// over the free columns (in free_columns() order).
    std::vector<Rat> reduce_unit(int col) const;

private:
    struct Row {
        int lead;
        std::vector<std::pair<int, Rat>> v;  // sorted by column, v[0].first == lead
    };
    void back_reduce(std::vector<std::pair<int, Rat>>& v) const;

    int ncols_;
    std::vector<Row> rows_;
    std::vector<int> pivot_of_col_;
};

}  // namespace gammadec

#endif
