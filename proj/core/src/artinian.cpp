#include "gammadec/artinian.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammadec {

std::string monomial_to_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    std::size_t i = 0;
    while (i < m.size()) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(m[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

namespace {

Face support(const Monomial& m) {
    Face f;
    for (int v : m) f = f.with(v);
    return f;
}

bool squarefree(const Monomial& m) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1]) return false;
    return true;
}

void compositions(const std::vector<int>& verts, int deg, std::size_t at, Monomial& cur,
                  std::vector<Monomial>& out) {
    const int remaining_slots = static_cast<int>(verts.size() - at);
    if (remaining_slots == 0) {
        if (deg == 0) out.push_back(cur);
        return;
    }
    // Each remaining vertex gets exponent >= 1.
    for (int e = 1; e + (remaining_slots - 1) <= deg; ++e) {
        for (int t = 0; t < e; ++t) cur.push_back(verts[at]);
        compositions(verts, deg - e, at + 1, cur, out);
        for (int t = 0; t < e; ++t) cur.pop_back();
    }
}

/// All monomials of total degree `deg` whose support is a face of K.
std::vector<Monomial> face_monomials(const SimplicialComplex& k, int deg) {
    std::vector<Monomial> out;
    if (deg == 0) {
        out.push_back({});
        return out;
    }
    for (int s = 1; s <= std::min(deg, k.dim() + 1); ++s) {
        for (Face f : k.faces_of_dim(s - 1)) {
            Monomial cur;
            compositions(f.vertices(), deg, 0, cur, out);
        }
    }
    return out;
}

}  // namespace

LsopResult is_lsop(const SimplicialComplex& k, const std::vector<LinearForm>& forms) {
    if (static_cast<int>(forms.size()) != k.dim() + 1)
        throw std::invalid_argument("is_lsop: expected dim K + 1 forms");
    for (Face fac : k.facets()) {
        const std::vector<int> verts = fac.vertices();
        std::vector<SparseIntRow> rows;
        for (const LinearForm& form : forms) {
            SparseIntRow row;
            for (std::size_t j = 0; j < verts.size(); ++j) {
                auto it = form.coeffs.find(verts[j]);
                if (it != form.coeffs.end() && it->second != 0)
                    row.emplace_back(static_cast<int>(j), it->second);
            }
            rows.push_back(std::move(row));
        }
        if (sparse_int_rank(std::move(rows), static_cast<int>(verts.size())) !=
            static_cast<int>(verts.size()))
            return {false, fac};
    }
    return {true, std::nullopt};
}

std::vector<LinearForm> random_lsop(const SimplicialComplex& k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-1000, 1000);
    const int d = k.dim() + 1;
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<LinearForm> forms(d);
        for (LinearForm& f : forms)
            for (int v : k.vertex_set().vertices()) f.coeffs[v] = coef(rng);
        if (is_lsop(k, forms).ok) return forms;
    }
    throw std::runtime_error("random_lsop: no l.s.o.p. found in 16 draws");
}

std::vector<Int> artinian_dims(const SimplicialComplex& k, const std::vector<LinearForm>& forms) {
    const auto check = is_lsop(k, forms);
    if (!check.ok)
        throw std::invalid_argument("artinian_dims: forms are not an l.s.o.p. (witness facet " +
                                    check.witness_facet->to_string() + ")");
    const int d = static_cast<int>(forms.size());
    std::vector<Int> dims{1};
    std::vector<Monomial> prev = face_monomials(k, 0);
    for (int deg = 1; deg <= d; ++deg) {
        std::vector<Monomial> cur = face_monomials(k, deg);
        std::map<Monomial, int> index;
        for (std::size_t i = 0; i < cur.size(); ++i) index[cur[i]] = static_cast<int>(i);
        std::vector<SparseIntRow> rows;
        rows.reserve(prev.size() * forms.size());
        for (const Monomial& m : prev) {
            const Face supp = support(m);
            for (const LinearForm& form : forms) {
                std::map<int, Int> acc;
                for (const auto& [p, c] : form.coeffs) {
                    if (c == 0) continue;
                    if (!supp.contains(p) && !k.contains(supp.with(p))) continue;
                    Monomial prod = m;
                    prod.insert(std::upper_bound(prod.begin(), prod.end(), p), p);
                    acc[index.at(prod)] += c;
                }
                SparseIntRow row;
                for (auto& [col, v] : acc)
                    if (v != 0) row.emplace_back(col, std::move(v));
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
        const int rank = sparse_int_rank(std::move(rows), static_cast<int>(cur.size()));
        dims.push_back(Int(static_cast<long long>(cur.size()) - rank));
        prev = std::move(cur);
    }
    return dims;
}

ArtinianReduction::ArtinianReduction(SimplicialComplex k, std::vector<LinearForm> forms)
    : complex_(std::move(k)), forms_(std::move(forms)) {
    const auto check = is_lsop(complex_, forms_);
    if (!check.ok)
        throw std::invalid_argument("ArtinianReduction: forms are not an l.s.o.p. (witness facet " +
                                    check.witness_facet->to_string() + ")");
    degrees_.resize(forms_.size() + 1);
}

const ArtinianReduction::Degree& ArtinianReduction::degree(int deg) const {
    if (deg < 0 || deg > num_forms())
        throw std::invalid_argument("ArtinianReduction: degree out of range");
    auto& slot = degrees_[static_cast<std::size_t>(deg)];
    if (slot) return *slot;

    Degree d;
    std::vector<Monomial> monos = face_monomials(complex_, deg);
    // Non-squarefree columns first so they are eliminated; the surviving
    // free columns are squarefree in revlex order.
    std::stable_sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
        const bool sa = squarefree(a), sb = squarefree(b);
        if (sa != sb) return !sa;
        if (sa) return support(a) < support(b);
        return a < b;
    });
    d.columns = std::move(monos);
    for (std::size_t i = 0; i < d.columns.size(); ++i) d.index[d.columns[i]] = static_cast<int>(i);

    d.ech = RationalEchelon(static_cast<int>(d.columns.size()));
    if (deg > 0) {
        for (const Monomial& m : face_monomials(complex_, deg - 1)) {
            const Face supp = support(m);
            for (const LinearForm& form : forms_) {
                std::vector<std::pair<int, Rat>> row;
                for (const auto& [p, c] : form.coeffs) {
                    if (c == 0) continue;
                    if (!supp.contains(p) && !complex_.contains(supp.with(p))) continue;
                    Monomial prod = m;
                    prod.insert(std::upper_bound(prod.begin(), prod.end(), p), p);
                    row.emplace_back(d.index.at(prod), Rat(c));
                }
                if (!row.empty()) d.ech.add_row(std::move(row));
            }
        }
    }
    d.free_cols = d.ech.free_columns();
    for (int c : d.free_cols) {
        if (!squarefree(d.columns[static_cast<std::size_t>(c)]))
            throw std::logic_error("ArtinianReduction: non-squarefree basis column survived");
        d.basis.push_back(d.columns[static_cast<std::size_t>(c)]);
    }
    slot = std::move(d);
    return *slot;
}

int ArtinianReduction::dim_at(int k) const { return static_cast<int>(degree(k).basis.size()); }

std::vector<Int> ArtinianReduction::dims() const {
    std::vector<Int> out;
    for (int k = 0; k <= num_forms(); ++k) out.push_back(dim_at(k));
    return out;
}

const std::vector<Monomial>& ArtinianReduction::basis(int k) const { return degree(k).basis; }

std::vector<Rat> ArtinianReduction::normal_form(int k, const Monomial& m) const {
    const Degree& d = degree(k);
    if (static_cast<int>(m.size()) != k)
        throw std::invalid_argument("normal_form: monomial degree mismatch");
    if (!complex_.contains(support(m))) return std::vector<Rat>(d.basis.size(), Rat(0));
    return d.ech.reduce_unit(d.index.at(m));
}

namespace {

std::vector<LinearForm> restrict_forms(const std::vector<LinearForm>& forms, Face support) {
    std::vector<LinearForm> out;
    out.reserve(forms.size());
    for (const LinearForm& f : forms) out.push_back(f.restricted_to(support));
    return out;
}

RationalMatrix restriction_between(const ArtinianReduction& src, const ArtinianReduction& dst,
                                   int deg) {
    const auto& sb = src.basis(deg);
    const auto& db = dst.basis(deg);
    RationalMatrix m = RationalMatrix::zero(static_cast<int>(db.size()), static_cast<int>(sb.size()));
    for (std::size_t j = 0; j < sb.size(); ++j) {
        Face supp;
        for (int v : sb[j]) supp = supp.with(v);
        if (!dst.complex().contains(supp)) continue;  // x^H = 0 in the star
        const std::vector<Rat> nf = dst.normal_form(deg, sb[j]);
        for (std::size_t i = 0; i < nf.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = nf[i];
    }
    for (const Monomial& b : db) m.row_labels.push_back(monomial_to_string(b));
    for (const Monomial& b : sb) m.col_labels.push_back(monomial_to_string(b));
    return m;
}

}  // namespace

RationalMatrix restriction_map(const SimplicialComplex& k, const std::vector<LinearForm>& forms,
                               int p, int deg) {
    if (!k.vertex_set().contains(p))
        throw std::invalid_argument("restriction_map: not a vertex: " + std::to_string(p));
    ArtinianReduction src(k, forms);
    const SimplicialComplex st = k.star(Face::of({p}));
    ArtinianReduction dst(st, restrict_forms(forms, st.vertex_set()));
    return restriction_between(src, dst, deg);
}

InjectivityResult partition_of_unity_check(const SimplicialComplex& k,
                                           const std::vector<LinearForm>& forms, int deg) {
    if (deg >= static_cast<int>(forms.size()))
        throw std::invalid_argument("partition_of_unity_check: need k < d");
    ArtinianReduction src(k, forms);
    std::vector<RationalMatrix> blocks;
    for (Face v : k.faces_of_dim(0)) {
        const SimplicialComplex st = k.star(v);
        ArtinianReduction dst(st, restrict_forms(forms, st.vertex_set()));
        blocks.push_back(restriction_between(src, dst, deg));
    }
    const RationalMatrix stacked = RationalMatrix::vstack(blocks);
    InjectivityResult res;
    res.source_dim = src.dim_at(deg);
    res.target_dim = stacked.rows;
    res.rank = stacked.rank();
    res.injective = res.rank == res.source_dim;
    return res;
}

InjectivityResult edge_partition_check(const SimplicialComplex& k,
                                       const std::vector<LinearForm>& forms, int deg) {
    if (!k.is_flag().flag)
        throw std::invalid_argument(
            "edge_partition_check: K must be flag (the link intersection identity fails otherwise)");
    if (deg > static_cast<int>(forms.size()) - 2)
        throw std::invalid_argument("edge_partition_check: need k <= d - 2");
    ArtinianReduction src(k, forms);
    std::vector<RationalMatrix> blocks;
    for (Face v : k.faces_of_dim(0)) {
        const int p = v.min_vertex();
        const SimplicialComplex st_p = k.star(v);
        ArtinianReduction mid(st_p, restrict_forms(forms, st_p.vertex_set()));
        const RationalMatrix m1 = restriction_between(src, mid, deg);
        for (Face w : st_p.faces_of_dim(0)) {
            const int q = w.min_vertex();
            if (q == p) continue;
            const SimplicialComplex st_pq = st_p.star(w);
            ArtinianReduction dst(st_pq, restrict_forms(forms, st_pq.vertex_set()));
            const RationalMatrix m2 = restriction_between(mid, dst, deg);
            blocks.push_back(RationalMatrix::product(m2, m1));
        }
    }
    const RationalMatrix stacked = RationalMatrix::vstack(blocks);
    InjectivityResult res;
    res.source_dim = src.dim_at(deg);
    res.target_dim = stacked.rows;
    res.rank = stacked.rank();
    res.injective = res.rank == res.source_dim;
    return res;
}

}  // namespace gammadec
