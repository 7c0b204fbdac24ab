#include "gammadec/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace gammadec {

namespace {

void normalize_content(SparseIntRow& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
    if (!row.empty() && row.front().second < 0)
        for (auto& [c, v] : row) v = -v;
}

// row := (pivot[pcol] * row - row[pcol] * pivot) / content.
void eliminate(SparseIntRow& row, const SparseIntRow& pivot, int pcol, const Int& row_pc,
               const Int& piv_pc) {
    SparseIntRow out;
    out.reserve(row.size() + pivot.size());
    auto a = row.begin();
    auto b = pivot.begin();
    while (a != row.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
            out.emplace_back(a->first, piv_pc * a->second);
            ++a;
        } else if (a == row.end() || b->first < a->first) {
            out.emplace_back(b->first, -row_pc * b->second);
            ++b;
        } else {
            Int v = piv_pc * a->second - row_pc * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    normalize_content(out);
    row = std::move(out);
}

}  // namespace

int sparse_int_rank(std::vector<SparseIntRow> rows, int ncols) {
    for (auto& r : rows) normalize_content(r);
    std::vector<int> col_count(ncols, 0);
    for (const auto& r : rows)
        for (const auto& [c, v] : r) ++col_count[c];

    int rank = 0;
    std::vector<bool> done(rows.size(), false);
    while (true) {
        // Markowitz-style pivot: the sparsest remaining row, and within
        // it the entry whose column occurs in fewest rows.
        int best = -1;
        std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            if (rows[i].size() < best_nnz) {
                best_nnz = rows[i].size();
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        const SparseIntRow& piv = rows[best];
        int pcol = piv.front().first;
        int pcount = col_count[pcol];
        for (const auto& [c, v] : piv)
            if (col_count[c] < pcount) {
                pcol = c;
                pcount = col_count[c];
            }
        Int piv_pc;
        for (const auto& [c, v] : piv)
            if (c == pcol) piv_pc = v;

        done[best] = true;
        ++rank;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), pcol,
                                       [](const auto& p, int c) { return p.first < c; });
            if (it == rows[i].end() || it->first != pcol) continue;
            Int row_pc = it->second;
            for (const auto& [c, v] : rows[i]) --col_count[c];
            eliminate(rows[i], piv, pcol, row_pc, piv_pc);
            for (const auto& [c, v] : rows[i]) ++col_count[c];
        }
        for (const auto& [c, v] : piv) --col_count[c];
    }
    return rank;
}

RationalMatrix RationalMatrix::product(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix m = zero(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.entries[i][k] == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.entries[k][j] != 0) m.entries[i][j] += a.entries[i][k] * b.entries[k][j];
        }
    m.row_labels = a.row_labels;
    m.col_labels = b.col_labels;
    return m;
}

RationalMatrix RationalMatrix::vstack(const std::vector<RationalMatrix>& blocks) {
    RationalMatrix m;
    for (const auto& b : blocks) {
        if (m.cols == 0) m.cols = b.cols;
        if (b.cols != m.cols) throw std::invalid_argument("vstack: column mismatch");
        m.entries.insert(m.entries.end(), b.entries.begin(), b.entries.end());
        if (!b.row_labels.empty())
            m.row_labels.insert(m.row_labels.end(), b.row_labels.begin(), b.row_labels.end());
        m.col_labels = b.col_labels;
    }
    m.rows = static_cast<int>(m.entries.size());
    return m;
}

int RationalMatrix::rank() const {
    std::vector<SparseIntRow> sparse;
    sparse.reserve(entries.size());
    for (const auto& row : entries) {
        // Clear denominators per row; rank is unaffected.
        Int denom = 1;
        for (const Rat& x : row)
            if (x != 0) denom = boost::multiprecision::lcm(denom, Int(denominator(x)));
        SparseIntRow r;
        for (int c = 0; c < cols; ++c)
            if (row[c] != 0)
                r.emplace_back(c, Int(numerator(row[c])) * (denom / Int(denominator(row[c]))));
        if (!r.empty()) sparse.push_back(std::move(r));
    }
    return sparse_int_rank(std::move(sparse), cols);
}

std::string RationalMatrix::dump() const {
    std::string s;
    for (int i = 0; i < rows; ++i) {
        if (i < static_cast<int>(row_labels.size())) s += row_labels[i] + ": ";
        for (int j = 0; j < cols; ++j) {
            if (j) s += " ";
            s += numerator(entries[i][j]).str();
            if (denominator(entries[i][j]) != 1) s += "/" + denominator(entries[i][j]).str();
        }
        s += "\n";
    }
    return s;
}

bool RationalEchelon::add_row(std::vector<std::pair<int, Rat>> row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge duplicate columns.
    std::vector<std::pair<int, Rat>> v;
    for (auto& [c, x] : row) {
        if (!v.empty() && v.back().first == c) v.back().second += x;
        else v.emplace_back(c, std::move(x));
    }
    std::erase_if(v, [](const auto& p) { return p.second == 0; });

    back_reduce(v);
    if (v.empty()) return false;

    const int lead = v.front().first;
    const Rat inv = Rat(1) / v.front().second;
    for (auto& [c, x] : v) x *= inv;

    // Back-substitute into existing rows.
    for (Row& r : rows_) {
        auto it = std::lower_bound(r.v.begin(), r.v.end(), lead,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it == r.v.end() || it->first != lead) continue;
        const Rat coef = it->second;
        std::vector<std::pair<int, Rat>> merged;
        auto a = r.v.begin();
        auto b = v.begin();
        while (a != r.v.end() || b != v.end()) {
            if (b == v.end() || (a != r.v.end() && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == r.v.end() || b->first < a->first) {
                merged.emplace_back(b->first, -coef * b->second);
                ++b;
            } else {
                Rat val = a->second - coef * b->second;
                if (val != 0) merged.emplace_back(a->first, std::move(val));
                ++a;
                ++b;
            }
        }
        r.v = std::move(merged);
    }

    pivot_of_col_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(Row{lead, std::move(v)});
    return true;
}

void RationalEchelon::back_reduce(std::vector<std::pair<int, Rat>>& v) const {
    // Repeatedly clear the leading entry while it sits on a pivot column.
    bool changed = true;
    while (changed && !v.empty()) {
        changed = false;
        const int lead = v.front().first;
        const int pi = pivot_of_col_[lead];
        if (pi < 0) {
            // Leading column free: still clear any later pivot columns so
            // reduce_unit yields pure free-column coordinates.
            std::vector<std::pair<int, Rat>> acc = std::move(v);
            v.clear();
            for (std::size_t i = 0; i < acc.size(); ++i) {
                const int c = acc[i].first;
                const int pj = pivot_of_col_[c];
                if (pj < 0 || c == lead) {
                    v.push_back(std::move(acc[i]));
                } else {
                    const Rat coef = acc[i].second;
                    for (const auto& [cc, xx] : rows_[pj].v) {
                        if (cc == c) continue;
                        acc.emplace_back(cc, -coef * xx);
                    }
                }
                // Keep acc consistent: re-sort lazily below.
            }
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<std::pair<int, Rat>> merged;
            for (auto& [c, x] : v) {
                if (!merged.empty() && merged.back().first == c) merged.back().second += x;
                else merged.emplace_back(c, std::move(x));
            }
            std::erase_if(merged, [](const auto& p) { return p.second == 0; });
            v = std::move(merged);
            return;
        }
        const Rat coef = v.front().second;
        const auto& pv = rows_[pi].v;
        std::vector<std::pair<int, Rat>> merged;
        auto a = v.begin();
        auto b = pv.begin();
        while (a != v.end() || b != pv.end()) {
            if (b == pv.end() || (a != v.end() && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == v.end() || b->first < a->first) {
                merged.emplace_back(b->first, -coef * b->second);
                ++b;
            } else {
                Rat val = a->second - coef * b->second;
                if (val != 0) merged.emplace_back(a->first, std::move(val));
                ++a;
                ++b;
            }
        }
        v = std::move(merged);
        changed = true;
    }
}

std::vector<int> RationalEchelon::free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
        if (pivot_of_col_[c] < 0) out.push_back(c);
    return out;
}

std::vector<Rat> RationalEchelon::reduce_unit(int col) const {
    std::vector<std::pair<int, Rat>> v{{col, Rat(1)}};
    back_reduce(v);
    const std::vector<int> free = free_columns();
    std::vector<Rat> coords(free.size(), Rat(0));
    std::size_t fi = 0;
    for (const auto& [c, x] : v) {
        while (fi < free.size() && free[fi] < c) ++fi;
        if (fi < free.size() && free[fi] == c) coords[fi] = x;
        else throw std::logic_error("reduce_unit: residue on a pivot column");
    }
    return coords;
}

}  // namespace gammadec
