#include "gammadec/vectors.hpp"

#include <stdexcept>

namespace gammadec {

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::string to_string(VectorKind k) {
    switch (k) {
        case VectorKind::F: return "f";
        case VectorKind::H: return "h";
        case VectorKind::Gamma: return "gamma";
    }
    return "?";
}

namespace {
std::vector<Int> lift(const std::vector<long long>& e) {
    return std::vector<Int>(e.begin(), e.end());
}
}  // namespace

IntegerVector IntegerVector::f(const std::vector<long long>& e) { return f(lift(e)); }
IntegerVector IntegerVector::h(const std::vector<long long>& e) { return h(lift(e)); }
IntegerVector IntegerVector::gamma(const std::vector<long long>& e, int d) {
    return gamma(lift(e), d);
}

std::string IntegerVector::to_string() const {
    std::string s = gammadec::to_string(kind) + "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += entries[i].str();
    }
    return s + ")";
}

IntegerVector f_vector(const SimplicialComplex& k) {
    std::vector<Int> e;
    for (std::uint64_t c : k.face_counts()) e.push_back(c);
    return IntegerVector::f(std::move(e));
}

IntegerVector h_from_f(const IntegerVector& f) {
    if (f.kind != VectorKind::F) throw std::invalid_argument("h_from_f: expected an f-vector");
    const int d = f.d;
    auto f_at = [&](int j) -> Int { return j == 0 ? Int(1) : f.entries[j - 1]; };
    std::vector<Int> h(d + 1);
    for (int i = 0; i <= d; ++i) {
        Int acc = 0;
        for (int j = 0; j <= i; ++j) {
            Int term = binomial(d - j, i - j) * f_at(j);
            if ((i - j) % 2) acc -= term;
            else acc += term;
        }
        h[i] = acc;
    }
    return IntegerVector::h(std::move(h));
}

IntegerVector f_from_h(const IntegerVector& h) {
    if (h.kind != VectorKind::H) throw std::invalid_argument("f_from_h: expected an h-vector");
    const int d = h.d;
    std::vector<Int> f(d);
    for (int i = 1; i <= d; ++i) {
        Int acc = 0;
        for (int j = 0; j <= i; ++j) acc += binomial(d - j, i - j) * h.entries[j];
        f[i - 1] = acc;
    }
    return IntegerVector::f(std::move(f));
}

IntegerVector h_vector(const SimplicialComplex& k) { return h_from_f(f_vector(k)); }

bool is_palindromic(const IntegerVector& h) {
    if (h.kind != VectorKind::H) throw std::invalid_argument("is_palindromic: expected h");
    const int d = h.d;
    for (int i = 0; i <= d; ++i)
        if (h.entries[i] != h.entries[d - i]) return false;
    return true;
}

IntegerVector gamma_from_h(const IntegerVector& h) {
    if (h.kind != VectorKind::H) throw std::invalid_argument("gamma_from_h: expected h");
    if (!is_palindromic(h))
        throw std::invalid_argument(
            "gamma_from_h: h is not palindromic (the basis x^i (x+1)^{d-2i} spans only "
            "palindromic polynomials)");
    const int d = h.d;
    std::vector<Int> residual = h.entries;
    std::vector<Int> g(d / 2 + 1);
    for (int i = 0; i <= d / 2; ++i) {
        g[i] = residual[i];
        if (g[i] == 0) continue;
        // Subtract g_i * x^i (x+1)^{d-2i}.
        for (int j = 0; j <= d - 2 * i; ++j) residual[i + j] -= g[i] * binomial(d - 2 * i, j);
    }
    for (const Int& r : residual)
        if (r != 0) throw std::logic_error("gamma_from_h: nonzero residual on palindromic input");
    return IntegerVector::gamma(std::move(g), d);
}

IntegerVector gamma_to_h(const IntegerVector& g, int d) {
    if (g.kind != VectorKind::Gamma) throw std::invalid_argument("gamma_to_h: expected gamma");
    if (static_cast<int>(g.entries.size()) != d / 2 + 1)
        throw std::invalid_argument("gamma_to_h: gamma must have floor(d/2)+1 entries");
    std::vector<Int> h(d + 1);
    for (int i = 0; i <= d / 2; ++i)
        for (int j = 0; j <= d - 2 * i; ++j) h[i + j] += g.entries[i] * binomial(d - 2 * i, j);
    return IntegerVector::h(std::move(h));
}

IntegerVector f_from_gamma(const IntegerVector& g, int d) {
    if (g.kind != VectorKind::Gamma) throw std::invalid_argument("f_from_gamma: expected gamma");
    std::vector<Int> f(d);
    for (int i = 1; i <= d; ++i) {
        Int acc = 0;
        for (int j = 0; j < static_cast<int>(g.entries.size()); ++j)
            acc += g.entries[j] * binomial(d - 2 * j, i - j);
        f[i - 1] = acc;
    }
    return IntegerVector::f(std::move(f));
}

IntegerVector gamma_vector(const SimplicialComplex& k) { return gamma_from_h(h_vector(k)); }

Int charney_davis_gamma_top(const IntegerVector& h) {
    if (h.kind != VectorKind::H) throw std::invalid_argument("charney_davis: expected h");
    if (h.d % 2) throw std::invalid_argument("charney_davis: d must be even");
    Int acc = 0;
    for (int i = 0; i <= h.d; ++i) {
        if (i % 2) acc -= h.entries[i];
        else acc += h.entries[i];
    }
    if ((h.d / 2) % 2) acc = -acc;
    return acc;
}

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace gammadec
