#include "gammadec/face.hpp"

#include <algorithm>

namespace gammadec {

std::vector<Face> subsets_of_size(Face f, int k) {
    std::vector<Face> out;
    if (k < 0 || k > f.size()) return out;
    if (k == 0) {
        out.push_back(Face{});
        return out;
    }
    const std::vector<int> verts = f.vertices();
    const int n = static_cast<int>(verts.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Face g;
        for (int i : idx) g = g.with(verts[i]);
        out.push_back(g);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> all_subsets(Face f) {
    std::vector<Face> out;
    const std::uint64_t m = f.bits();
    out.reserve(std::size_t{1} << f.size());
    // Standard submask walk, ascending.
    std::uint64_t s = 0;
    while (true) {
        out.push_back(Face(s));
        if (s == m) break;
        s = (s - m) & m;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> first_ksubsets_revlex(int k, std::uint64_t count) {
    std::vector<Face> out;
    if (count == 0) return out;
    if (k <= 0) {
        if (k == 0) out.push_back(Face{});
        return out;
    }
    if (k > kMaxVertices) throw CapacityError("subset size exceeds 64-vertex universe");
    std::uint64_t mask = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    const std::uint64_t last = mask << (64 - k);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(Face(mask));
        if (i + 1 == count) break;
        if (mask == last) throw CapacityError("revlex prefix exceeds 64-vertex universe");
        // Gosper's hack: next mask with the same popcount.
        std::uint64_t c = mask & (~mask + 1);
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

}  // namespace gammadec
