#ifndef GAMMADEC_FACE_HPP
#define GAMMADEC_FACE_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammadec {

/// Maximum number of vertex ids per complex; faces are 64-bit masks.
inline constexpr int kMaxVertices = 64;

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A face of a simplicial complex: a set of vertex ids in [0, 64),
/// stored as a bit mask.  The empty face is Face{} and is a valid face.
///
/// The canonical order on faces used throughout is reverse lexicographic:
/// A < B iff max(A triangle B) lies in B, which coincides with numeric
/// order of the masks.
class Face {
public:
    constexpr Face() = default;
    explicit constexpr Face(std::uint64_t bits) : bits_(bits) {}

    static Face of(std::initializer_list<int> vertices) {
        Face f;
        for (int v : vertices) f = f.with(v);
        return f;
    }
    static Face of(const std::vector<int>& vertices) {
        Face f;
        for (int v : vertices) f = f.with(v);
        return f;
    }
    /// The face {0, 1, ..., n-1}.
    static Face full(int n) {
        if (n < 0 || n > kMaxVertices) throw CapacityError("vertex count out of range");
        return n == kMaxVertices ? Face(~std::uint64_t{0}) : Face((std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int v) const { return check(v), (bits_ >> v) & 1; }
    Face with(int v) const { return check(v), Face(bits_ | (std::uint64_t{1} << v)); }
    Face without(int v) const { return check(v), Face(bits_ & ~(std::uint64_t{1} << v)); }

    bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    bool disjoint_from(Face other) const { return (bits_ & other.bits_) == 0; }

    friend Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
    friend Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
    /// Set difference.
    friend Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }

    friend bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }
    friend bool operator!=(Face a, Face b) { return a.bits_ != b.bits_; }
    /// Reverse lexicographic order.
    friend bool operator<(Face a, Face b) { return a.bits_ < b.bits_; }

    int min_vertex() const { return std::countr_zero(bits_); }
    int max_vertex() const { return 63 - std::countl_zero(bits_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        if (empty()) return "{}";
        std::string s = "{";
        for (int v : vertices()) {
            if (s.size() > 1) s += ",";
            s += std::to_string(v);
        }
        return s + "}";
    }

private:
    static void check(int v) {
        if (v < 0 || v >= kMaxVertices) throw CapacityError("vertex id out of range [0,64)");
    }
    std::uint64_t bits_ = 0;
};

/// All subsets of `f` of cardinality `k`, in reverse lexicographic order.
std::vector<Face> subsets_of_size(Face f, int k);

/// All subsets of `f` (including the empty face), in reverse lexicographic order.
std::vector<Face> all_subsets(Face f);

/// The first `count` k-element subsets of {0,1,2,...} in reverse
/// lexicographic order.  Throws CapacityError if they do not fit in the
/// 64-vertex universe.
std::vector<Face> first_ksubsets_revlex(int k, std::uint64_t count);

}  // namespace gammadec

#endif
