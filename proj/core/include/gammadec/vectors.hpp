#ifndef GAMMADEC_VECTORS_HPP
#define GAMMADEC_VECTORS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gammadec/complex.hpp"

namespace gammadec {

using Int = boost::multiprecision::cpp_int;

Int binomial(long long n, long long k);

enum class VectorKind { F, H, Gamma };

std::string to_string(VectorKind k);

/// An f-, h-, or gamma-vector with its degree parameter d.
///   F:     entries (f_0, ..., f_{d-1}); f_{-1} = 1 is implicit.
///   H:     entries (h_0, ..., h_d).
///   Gamma: entries (gamma_0, ..., gamma_{floor(d/2)}).
struct IntegerVector {
    VectorKind kind = VectorKind::F;
    int d = 0;
    std::vector<Int> entries;

    static IntegerVector f(std::vector<Int> e) {
        return {VectorKind::F, static_cast<int>(e.size()), std::move(e)};
    }
    static IntegerVector f(const std::vector<long long>& e);
    static IntegerVector h(std::vector<Int> e) {
        return {VectorKind::H, static_cast<int>(e.size()) - 1, std::move(e)};
    }
    static IntegerVector h(const std::vector<long long>& e);
    static IntegerVector gamma(std::vector<Int> e, int d) {
        return {VectorKind::Gamma, d, std::move(e)};
    }
    static IntegerVector gamma(const std::vector<long long>& e, int d);

    const Int& operator[](std::size_t i) const { return entries[i]; }
    std::size_t size() const { return entries.size(); }

    friend bool operator==(const IntegerVector& a, const IntegerVector& b) {
        return a.kind == b.kind && a.d == b.d && a.entries == b.entries;
    }

    std::string to_string() const;
};

/// f_k = number of k-dimensional faces, k = 0..dim.
IntegerVector f_vector(const SimplicialComplex& k);

/// h_i = sum_j (-1)^{i-j} C(d-j, i-j) f_{j-1}, with f_{-1} = 1.
IntegerVector h_from_f(const IntegerVector& f);

/// Inverse transform: f_{i-1} = sum_j C(d-j, i-j) h_j.
IntegerVector f_from_h(const IntegerVector& h);

IntegerVector h_vector(const SimplicialComplex& k);

bool is_palindromic(const IntegerVector& h);

/// Coordinates of a palindromic h in the basis x^i (x+1)^{d-2i},
/// i = 0..floor(d/2).  Throws if h is not palindromic.
IntegerVector gamma_from_h(const IntegerVector& h);

/// Expand sum_i gamma_i x^i (x+1)^{d-2i} back to an h-vector.
IntegerVector gamma_to_h(const IntegerVector& g, int d);

/// The f-vector forced on a Boolean-decomposed complex:
/// f_{i-1} = sum_j gamma_j C(d-2j, i-j), i = 1..d.
IntegerVector f_from_gamma(const IntegerVector& g, int d);

IntegerVector gamma_vector(const SimplicialComplex& k);

/// (-1)^{d/2} h(-1) for even d; equals the top gamma entry.
Int charney_davis_gamma_top(const IntegerVector& h);

/// Convolution, used for gamma of joins (h-polynomials multiply).
std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace gammadec

#endif
