#include "generator_spec.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "gammadec/decomposition.hpp"
#include "gammadec/generators.hpp"
#include "gammadec/vectors.hpp"

namespace gammadec::tools {

namespace {

int parse_int(const std::string& s, const std::string& what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad " + what + ": '" + s + "'");
    return value;
}

std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<long long> out;
    std::size_t at = 0;
    while (at <= s.size()) {
        const std::size_t comma = s.find(',', at);
        const std::string tok = s.substr(at, comma == std::string::npos ? comma : comma - at);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad " + what + ": '" + s + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return out;
}

}  // namespace

SimplicialComplex resolve_input(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        const std::string rest = spec.substr(colon + 1);
        if (head == "polygon") return polygon(parse_int(rest, "polygon vertex count"));
        if (head == "cross") return cross_polytope_boundary(parse_int(rest, "cross dimension"));
        if (head == "simplex") return simplex_boundary(parse_int(rest, "simplex vertex count"));
        if (head == "sd") return barycentric_subdivision(resolve_input(rest));
        if (head == "join") {
            // The separating comma is whichever one splits `rest` into two
            // resolvable inputs (inner specs may contain commas themselves).
            std::string err;
            for (std::size_t at = rest.find(','); at != std::string::npos;
                 at = rest.find(',', at + 1)) {
                try {
                    SimplicialComplex a = resolve_input(rest.substr(0, at));
                    SimplicialComplex b = resolve_input(rest.substr(at + 1));
                    return SimplicialComplex::join(a, b);
                } catch (const std::exception& e) {
                    err = e.what();
                }
            }
            throw std::invalid_argument("bad join spec '" + spec + "'" +
                                        (err.empty() ? "" : " (" + err + ")"));
        }
        if (head == "compress") {
            const IntegerVector h = IntegerVector::h(parse_int_list(rest, "h-vector"));
            const IntegerVector g = gamma_from_h(h);
            return build_gamma_complex(g, h.d).first;
        }
    }
    return read_complex_file(spec);
}

}  // namespace gammadec::tools
