#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "gammadec/artinian.hpp"
#include "gammadec/decomposition.hpp"
#include "gammadec/generators.hpp"
#include "gammadec/homology.hpp"
#include "json_io.hpp"

namespace gammadec::tools {

using nlohmann::json;

bool SuiteReport::all_pass() const {
    return std::all_of(records.begin(), records.end(), [](const SuiteRecord& r) { return r.pass; });
}

json SuiteReport::to_json() const {
    json recs = json::array();
    for (const SuiteRecord& r : records)
        recs.push_back({{"instance", r.instance}, {"pass", r.pass}, {"detail", r.detail}});
    return {{"suite", suite},   {"seed", seed},
            {"params", params}, {"records", recs},
            {"all_pass", all_pass()}, {"wall_seconds", wall_seconds}};
}

std::string SuiteReport::to_csv() const {
    std::string out = "suite,instance,pass,detail\n";
    for (const SuiteRecord& r : records) {
        std::string detail = r.detail.dump();
        std::string quoted = "\"";
        for (char c : detail) {
            quoted += c;
            if (c == '"') quoted += '"';
        }
        quoted += "\"";
        out += suite + "," + r.instance + "," + (r.pass ? "true" : "false") + "," + quoted + "\n";
    }
    return out;
}

namespace {

std::vector<Int> prepend_one_padded(const SimplicialComplex& s, std::size_t len) {
    std::vector<Int> fs{1};
    for (std::uint64_t c : s.face_counts()) fs.push_back(c);
    if (fs.size() < len) fs.resize(len, 0);
    return fs;
}

Coloring cross_coloring(int d) {
    Coloring c{d, {}};
    for (int i = 0; i < d; ++i) {
        c.colors[2 * i] = i + 1;
        c.colors[2 * i + 1] = i + 1;
    }
    return c;
}

void suite_polygons(SuiteReport& rep) {
    for (int n = 4; n <= 64; ++n) {
        const IntegerVector g = gamma_vector(polygon(n));
        const bool pass = g.entries == std::vector<Int>{1, n - 4};
        rep.records.push_back({"polygon:" + std::to_string(n), pass, {{"gamma", vector_json(g)}}});
    }
}

void suite_joins(SuiteReport& rep) {
    for (int n = 4; n <= 8; ++n) {
        for (int m = n; m <= 8; ++m) {
            const SimplicialComplex jn = SimplicialComplex::join(polygon(n), polygon(m));
            const IntegerVector g = gamma_vector(jn);
            const std::vector<Int> oracle =
                convolve(gamma_vector(polygon(n)).entries, gamma_vector(polygon(m)).entries);
            bool pass = g.entries == oracle;
            json detail{{"gamma", vector_json(g)}};
            if (pass) {
                auto [built, dec] = build_gamma_complex(g, 4);
                const ExtractionResult ex = extract_boolean_decomposition(built, 4);
                pass = ex.ok() && verify_gamma_interpretation(jn, *ex.decomposition);
                detail["round_trip"] = pass;
            }
            rep.records.push_back(
                {"join:polygon:" + std::to_string(n) + ",polygon:" + std::to_string(m), pass,
                 detail});
        }
    }
}

void suite_subdivisions(SuiteReport& rep) {
    for (int d : {4, 5}) {
        const SimplicialComplex base = simplex_boundary(d);
        const SimplicialComplex sd = barycentric_subdivision(base);
        const IntegerVector h = h_vector(sd);
        const IntegerVector g = gamma_from_h(h);
        bool pass = std::all_of(g.entries.begin(), g.entries.end(),
                                [](const Int& e) { return e >= 0; });
        std::vector<Int> tail(g.entries.begin() + 1, g.entries.end());
        while (!tail.empty() && tail.back() == 0) tail.pop_back();
        pass = pass && kk_is_valid_fvector(IntegerVector::f(tail));
        json detail{{"h", vector_json(h)}, {"gamma", vector_json(g)}};
        if (pass) {
            auto [built, dec] = build_gamma_complex(g, sd.dim() + 1);
            detail["f_gamma"] = vector_json(f_vector(built));
            const auto forms = coloring_lsop(sd, barycentric_coloring(base));
            const std::vector<Int> dims = artinian_dims(sd, forms);
            pass = dims == h.entries;
            detail["artinian_dims"] = vector_json(IntegerVector::h(dims));
        }
        rep.records.push_back({"sd:simplex:" + std::to_string(d), pass, detail});
    }
}

void suite_pou(SuiteReport& rep, std::uint64_t seed) {
    struct Inst {
        std::string name;
        SimplicialComplex k;
        std::optional<Coloring> coloring;
    };
    std::vector<Inst> insts;
    for (int d = 2; d <= 4; ++d)
        insts.push_back({"cross:" + std::to_string(d), cross_polytope_boundary(d),
                         cross_coloring(d)});
    insts.push_back({"join:polygon:5,polygon:5",
                     SimplicialComplex::join(polygon(5), polygon(5)), std::nullopt});

    std::mt19937_64 rng(seed);
    for (const Inst& inst : insts) {
        const int d = inst.k.dim() + 1;
        const IntegerVector h = h_vector(inst.k);
        const auto forms = inst.coloring ? coloring_lsop(inst.k, *inst.coloring)
                                         : random_lsop(inst.k, rng);
        bool pass = artinian_dims(inst.k, forms) == h.entries;
        json ranks = json::array();
        for (int k = 0; k < d && pass; ++k) {
            const InjectivityResult r = partition_of_unity_check(inst.k, forms, k);
            pass = pass && r.injective;
            ranks.push_back({{"k", k}, {"rank", r.rank}, {"source_dim", r.source_dim}});
        }
        json edge_ranks = json::array();
        for (int k = 0; k + 1 < d && pass; ++k) {
            const InjectivityResult r = edge_partition_check(inst.k, forms, k);
            pass = pass && r.injective;
            edge_ranks.push_back({{"k", k}, {"rank", r.rank}, {"source_dim", r.source_dim}});
        }
        rep.records.push_back({inst.name, pass,
                               {{"h", vector_json(h)},
                                {"vertex_ranks", ranks},
                                {"edge_ranks", edge_ranks}}});
    }
}

bool theta_checks(const SimplicialComplex& k, const Coloring& c, json& detail) {
    for (int i = 1; i <= c.d; ++i)
        if (!theta_square_in_B(k, c, i).terms.empty()) {
            detail["nonzero_square_color"] = i;
            return false;
        }
    // Squarefree theta-monomials vanish exactly when no rainbow face
    // matches the color set.
    for (Face cs : all_subsets(Face::full(c.d))) {
        std::vector<int> colorset;
        for (int b : cs.vertices()) colorset.push_back(b + 1);
        bool rainbow = false;
        for (Face f : k.all_faces())
            if (c.colors_of(f) == colorset) {
                rainbow = true;
                break;
            }
        const bool nonzero = !theta_monomial_in_B(k, c, colorset).terms.empty();
        if (nonzero != rainbow) {
            detail["mismatched_colorset"] = colorset;
            return false;
        }
    }
    return true;
}

void suite_theta(SuiteReport& rep, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 50; ++t) {
        auto [k, c] = random_balanced_complex(rng);
        json detail{{"vertices", k.vertex_count()}, {"d", c.d}};
        const bool pass = theta_checks(k, c, detail);
        rep.records.push_back({"random#" + std::to_string(t), pass, detail});
    }
    for (int d = 2; d <= 4; ++d) {
        json detail;
        const bool pass = theta_checks(cross_polytope_boundary(d), cross_coloring(d), detail);
        rep.records.push_back({"cross:" + std::to_string(d), pass, detail});
    }
}

bool completion_checks(const SimplicialComplex& g, const Coloring& c, int d, json& detail) {
    const ShelledComplex comp = color_completion(g, c, d);
    std::vector<Int> expected{1};
    for (std::uint64_t cnt : g.face_counts()) expected.push_back(cnt);
    expected.resize(static_cast<std::size_t>(d) + 1, 0);
    const IntegerVector h = h_vector(comp.complex);
    detail["h"] = vector_json(h);
    if (h.entries != expected) return false;
    const ShellingCheckResult shell = shelling_partition_check(comp);
    if (!shell.ok) {
        detail["shelling_failure"] = shell.reason;
        return false;
    }
    std::vector<Face> restr = comp.restrictions;
    std::vector<Face> faces = g.all_faces();
    std::sort(restr.begin(), restr.end());
    std::sort(faces.begin(), faces.end());
    return restr == faces;
}

void suite_completion(SuiteReport& rep, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 100; ++t) {
        auto [g, c] = random_balanced_complex(rng);
        json detail{{"vertices", g.vertex_count()}, {"d", c.d}};
        const bool pass = completion_checks(g, c, c.d, detail);
        rep.records.push_back({"random#" + std::to_string(t), pass, detail});
    }
    // The one-edge-plus-a-point gamma complex of the pentagon.
    auto [g5, dec5] = build_gamma_complex(IntegerVector::gamma(std::vector<long long>{1, 1}, 2), 2);
    const auto c5 = find_proper_coloring(g5, 2);
    json detail;
    const bool pass = c5 && completion_checks(g5, *c5, 2, detail);
    rep.records.push_back({"pentagon-gamma", pass, detail});
}

bool roundtrip_one(const IntegerVector& g, int d, json& detail) {
    auto [built, dec] = build_gamma_complex(g, d);
    if (f_vector(built).entries != f_from_gamma(g, d).entries) {
        detail["failure"] = "face-count identity";
        return false;
    }
    const ExtractionResult ex = extract_boolean_decomposition(built, d);
    if (!ex.ok()) {
        detail["failure"] = ex.failure;
        return false;
    }
    const std::vector<Int> fs = prepend_one_padded(ex.decomposition->gamma_complex, g.size());
    if (fs != g.entries) {
        detail["failure"] = "f(S) != gamma tail";
        return false;
    }
    if (ex.decomposition->gamma_complex.dim() > d / 2 - 1) {
        detail["failure"] = "dim S bound";
        return false;
    }
    detail["faces"] = static_cast<std::uint64_t>(built.face_count());
    return true;
}

void suite_roundtrip(SuiteReport& rep, std::uint64_t seed) {
    for (int n = 4; n <= 12; ++n) {
        json detail;
        const bool pass = roundtrip_one(gamma_vector(polygon(n)), 2, detail);
        rep.records.push_back({"gamma(polygon:" + std::to_string(n) + ")", pass, detail});
    }
    for (int n = 4; n <= 8; ++n) {
        for (int m = n; m <= 8; ++m) {
            const std::vector<Int> conv =
                convolve(gamma_vector(polygon(n)).entries, gamma_vector(polygon(m)).entries);
            json detail;
            const bool pass = roundtrip_one(IntegerVector::gamma(conv, 4), 4, detail);
            rep.records.push_back(
                {"gamma(C" + std::to_string(n) + "*C" + std::to_string(m) + ")", pass, detail});
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dd(2, 8);
    for (int t = 0; t < 20; ++t) {
        const int d = dd(rng);
        const IntegerVector g = random_kk_valid_gamma(rng, d);
        json detail{{"gamma", vector_json(g)}, {"d", d}};
        const bool pass = roundtrip_one(g, d, detail);
        rep.records.push_back({"random#" + std::to_string(t), pass, detail});
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "polygons", "joins", "subdivisions", "pou", "theta", "completion", "roundtrip"};
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    if (name == "polygons") {
        suite_polygons(rep);
    } else if (name == "joins") {
        suite_joins(rep);
    } else if (name == "subdivisions") {
        suite_subdivisions(rep);
    } else if (name == "pou") {
        suite_pou(rep, seed);
    } else if (name == "theta") {
        suite_theta(rep, seed);
    } else if (name == "completion") {
        suite_completion(rep, seed);
    } else if (name == "roundtrip") {
        suite_roundtrip(rep, seed);
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace gammadec::tools
