#include "gammadec/balanced.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammadec {

int Coloring::color_of(int v) const {
    auto it = colors.find(v);
    if (it == colors.end()) throw std::invalid_argument("coloring: no color for vertex " + std::to_string(v));
    return it->second;
}

std::vector<int> Coloring::colors_of(Face f) const {
    std::vector<int> out;
    for (int v : f.vertices()) out.push_back(color_of(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool Coloring::proper_on(const SimplicialComplex& k) const {
    return !improper_edge(k).has_value();
}

std::optional<Face> Coloring::improper_edge(const SimplicialComplex& k) const {
    for (Face e : k.faces_of_dim(1)) {
        const auto v = e.vertices();
        if (color_of(v[0]) == color_of(v[1])) return e;
    }
    return std::nullopt;
}

std::optional<Coloring> find_proper_coloring(const SimplicialComplex& k, int d) {
    const std::vector<int> verts = k.vertex_set().vertices();
    const int n = static_cast<int>(verts.size());
    if (n == 0) return Coloring{d, {}};
    if (d <= 0) return std::nullopt;

    // Adjacency among vertex positions.
    std::vector<Face> adj(n);
    std::vector<int> pos_of(kMaxVertices, -1);
    for (int i = 0; i < n; ++i) pos_of[verts[i]] = i;
    for (Face e : k.faces_of_dim(1)) {
        const auto v = e.vertices();
        adj[pos_of[v[0]]] = adj[pos_of[v[0]]].with(pos_of[v[1]]);
        adj[pos_of[v[1]]] = adj[pos_of[v[1]]].with(pos_of[v[0]]);
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
        return verts[a] < verts[b];
    });

    std::vector<int> assigned(n, 0);  // 0 = uncolored
    std::vector<std::vector<int>> forbidden(n, std::vector<int>(d + 1, 0));

    // Plain exhaustive backtracking; completeness makes a failed search a
    // proof of non-colorability.
    int depth = 0;
    std::vector<int> trail(n, 0);
    while (true) {
        if (depth == n) {
            Coloring c{d, {}};
            for (int i = 0; i < n; ++i) c.colors[verts[i]] = assigned[i];
            return c;
        }
        const int u = order[depth];
        int col = trail[depth] + 1;
        while (col <= d && forbidden[u][col] > 0) ++col;
        if (col > d) {
            trail[depth] = 0;
            if (depth == 0) return std::nullopt;
            --depth;
            const int w = order[depth];
            for (int nb : adj[w].vertices()) --forbidden[nb][assigned[w]];
            assigned[w] = 0;
            continue;
        }
        trail[depth] = col;
        assigned[u] = col;
        for (int nb : adj[u].vertices()) ++forbidden[nb][col];
        ++depth;
    }
}

bool is_balanced(const SimplicialComplex& k, const Coloring& c) {
    return c.d == k.dim() + 1 && c.proper_on(k);
}

LinearForm LinearForm::restricted_to(Face support) const {
    LinearForm out;
    for (const auto& [v, x] : coeffs)
        if (support.contains(v)) out.coeffs[v] = x;
    return out;
}

bool LinearForm::zero() const {
    for (const auto& [v, x] : coeffs)
        if (x != 0) return false;
    return true;
}

std::vector<LinearForm> coloring_lsop(const SimplicialComplex& k, const Coloring& c) {
    if (!c.proper_on(k)) throw std::invalid_argument("coloring_lsop: coloring is not proper");
    std::vector<LinearForm> forms(c.d);
    for (int v : k.vertex_set().vertices()) forms[c.color_of(v) - 1].coeffs[v] = 1;
    return forms;
}

std::string SquarefreePoly::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [f, coef] : terms) {
        if (!s.empty()) s += " + ";
        s += coef.str();
        if (!f.empty()) s += "*x^" + f.to_string();
    }
    return s;
}

SquarefreePoly multiply_forms_in_B(const SimplicialComplex& k,
                                   const std::vector<LinearForm>& forms) {
    SquarefreePoly acc;
    acc.terms[Face{}] = 1;
    for (const LinearForm& form : forms) {
        SquarefreePoly next;
        for (const auto& [mono, coef] : acc.terms) {
            for (const auto& [v, c] : form.coeffs) {
                if (c == 0) continue;
                if (mono.contains(v)) continue;  // x_v^2 = 0
                const Face m = mono.with(v);
                if (!k.contains(m)) continue;  // Stanley-Reisner nonface relation
                next.terms[m] += coef * c;
            }
        }
        std::erase_if(next.terms, [](const auto& t) { return t.second == 0; });
        acc = std::move(next);
    }
    return acc;
}

SquarefreePoly theta_square_in_B(const SimplicialComplex& k, const Coloring& c, int color) {
    const auto lsop = coloring_lsop(k, c);
    if (color < 1 || color > c.d) throw std::invalid_argument("theta_square_in_B: color out of range");
    return multiply_forms_in_B(k, {lsop[color - 1], lsop[color - 1]});
}

SquarefreePoly theta_monomial_in_B(const SimplicialComplex& k, const Coloring& c,
                                   const std::vector<int>& colorset) {
    const auto lsop = coloring_lsop(k, c);
    std::vector<LinearForm> forms;
    for (int i : colorset) {
        if (i < 1 || i > c.d) throw std::invalid_argument("theta_monomial_in_B: color out of range");
        forms.push_back(lsop[i - 1]);
    }
    return multiply_forms_in_B(k, forms);
}

}  // namespace gammadec
