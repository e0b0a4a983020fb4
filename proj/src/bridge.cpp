#include "steinberg/bridge.hpp"

#include <algorithm>
#include <map>

namespace steinberg {

std::vector<Path> boundary_paths(const Graph& g) {
    if (!is_acyclic(g)) throw BridgeError("groupoid is infinite; bridge requires acyclic");
    std::vector<bool> regular(g.vertex_count(), false);
    for (auto v : regular_vertices(g)) regular[v] = true;

    // paths cannot exceed |E0| - 1 edges in an acyclic graph
    std::vector<Path> out;
    for (const auto& p : enumerate_paths(g, g.vertex_count()))
        if (!regular[p.dst]) out.push_back(p);
    return out;
}

GraphGroupoid build_graph_groupoid(const Graph& g) {
    GraphGroupoid gg{FiniteGroupoid({}, {}, {}, {}, {}, {}), boundary_paths(g), {}};
    const auto& boundary = gg.boundary;

    // two boundary paths bound a morphism exactly when they share a tail;
    // with every tail ending at a sink this means sharing the final sink
    const std::size_t n = boundary.size();
    std::vector<std::uint32_t> unit_of(n);
    std::vector<std::string> names;
    std::vector<std::uint32_t> units, source, range, inverse;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> triples;

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
    auto add_morphism = [&](std::uint32_t x, std::uint32_t y) {
        std::uint32_t id = static_cast<std::uint32_t>(names.size());
        std::ptrdiff_t k = static_cast<std::ptrdiff_t>(boundary[x].length()) -
                           static_cast<std::ptrdiff_t>(boundary[y].length());
        names.push_back("(" + path_name(g, boundary[x]) + "|" + std::to_string(k) + "|" +
                        path_name(g, boundary[y]) + ")");
        triples.push_back({x, y});
        index[{x, y}] = id;
        return id;
    };

    // units first, in boundary order
    for (std::uint32_t x = 0; x < n; ++x) {
        unit_of[x] = add_morphism(x, x);
        units.push_back(unit_of[x]);
    }
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            if (x == y) continue;
            if (boundary[x].dst != boundary[y].dst) continue;
            add_morphism(x, y);
        }

    const std::size_t m = names.size();
    source.resize(m);
    range.resize(m);
    inverse.resize(m);
    for (std::uint32_t id = 0; id < m; ++id) {
        auto [x, y] = triples[id];
        source[id] = unit_of[y];
        range[id] = unit_of[x];
        inverse[id] = index.at({y, x});
    }
    std::vector<std::vector<std::int32_t>> compose(m, std::vector<std::int32_t>(m, -1));
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) {
            auto [x, y] = triples[a];
            auto [y2, z] = triples[b];
            if (y != y2) continue; // r(b) = s(a) fails
            compose[a][b] = static_cast<std::int32_t>(index.at({x, z}));
        }

    gg.groupoid = FiniteGroupoid(std::move(names), std::move(units), std::move(source),
                                 std::move(range), std::move(inverse), std::move(compose));
    gg.triples = std::move(triples);
    return gg;
}

std::optional<std::uint32_t> GraphGroupoid::morphism_of(std::uint32_t x, std::uint32_t y) const {
    for (std::uint32_t id = 0; id < triples.size(); ++id)
        if (triples[id] == std::make_pair(x, y)) return id;
    return std::nullopt;
}

AlgebraElement pi_expand(const GraphGroupoid& gg, const Graph& g, const RingSpec& ring,
                         const Monomial& m) {
    AlgebraElement out = AlgebraElement::zero(gg.groupoid, ring);
    Scalar one(ring, 1);
    // Z(alpha, beta): one morphism per boundary path z from the common range
    for (std::uint32_t z = 0; z < gg.boundary.size(); ++z) {
        const Path& tail = gg.boundary[z];
        if (tail.src != m.alpha.dst) continue;
        Path x = concat(g, m.alpha, tail);
        Path y = concat(g, m.beta, tail);
        auto xi = std::find(gg.boundary.begin(), gg.boundary.end(), x);
        auto yi = std::find(gg.boundary.begin(), gg.boundary.end(), y);
        if (xi == gg.boundary.end() || yi == gg.boundary.end())
            throw BridgeError("extension of a monomial left the boundary set");
        auto id = gg.morphism_of(static_cast<std::uint32_t>(xi - gg.boundary.begin()),
                                 static_cast<std::uint32_t>(yi - gg.boundary.begin()));
        out.coeffs[*id] = one;
    }
    return out;
}

AlgebraElement pi_map(const GraphGroupoid& gg, const LpaElement& x) {
    AlgebraElement out = AlgebraElement::zero(gg.groupoid, x.ring());
    for (const auto& [m, c] : x.terms())
        out = add(out, scale(c, pi_expand(gg, x.graph(), x.ring(), m)));
    return out;
}

std::vector<Monomial> normal_form_basis(const Graph& g, std::size_t max_degree) {
    SpecialEdgeChoice choice(g);
    auto paths = enumerate_paths(g, max_degree);
    std::vector<Monomial> basis;
    for (const auto& alpha : paths)
        for (const auto& beta : paths) {
            if (alpha.dst != beta.dst) continue;
            if (alpha.length() + beta.length() > max_degree) continue;
            if (!alpha.trivial() && !beta.trivial() && alpha.edges.back() == beta.edges.back() &&
                choice.is_special(alpha.edges.back()))
                continue;
            basis.push_back(Monomial{alpha, beta});
        }
    std::sort(basis.begin(), basis.end(),
              [&](const Monomial& a, const Monomial& b) { return MonomialOrder{&g}(a, b); });
    return basis;
}

namespace {

LpaElement random_lpa(const Graph& g, const RingSpec& ring,
                      const std::vector<Monomial>& basis, Rng& rng) {
    RawTerms raw;
    std::size_t terms = 1 + rng.below(4);
    for (std::size_t i = 0; i < terms; ++i)
        raw.push_back({basis[rng.below(basis.size())], random_scalar(ring, rng)});
    return normalize(g, ring, raw);
}

} // namespace

PiReport verify_pi_iso(const Graph& g, const RingSpec& ring, std::size_t samples,
                       std::uint64_t seed) {
    if (!is_acyclic(g)) throw BridgeError("groupoid is infinite; bridge requires acyclic");
    GraphGroupoid gg = build_graph_groupoid(g);
    PiReport report;

    // additivity and multiplicativity on seeded random pairs
    auto sample_basis = normal_form_basis(g, 3);
    Rng rng(seed);
    report.homomorphism_pass = true;
    for (std::size_t i = 0; i < samples; ++i) {
        LpaElement x = random_lpa(g, ring, sample_basis, rng);
        LpaElement y = random_lpa(g, ring, sample_basis, rng);
        if (!(pi_map(gg, lpa_add(x, y)) == add(pi_map(gg, x), pi_map(gg, y))) ||
            !(pi_map(gg, lpa_mul(x, y)) ==
              convolve(gg.groupoid, pi_map(gg, x), pi_map(gg, y)))) {
            report.homomorphism_pass = false;
            break;
        }
    }

    // injectivity: the truncated basis must map to independent vectors
    auto basis = normal_form_basis(g, 4);
    report.expected_rank = basis.size();
    std::vector<linalg::Vec> image;
    for (const auto& m : basis) image.push_back(pi_expand(gg, g, ring, m).coeffs);
    if (ring.is_field()) {
        report.injectivity_rank = linalg::span_basis(ring, gg.groupoid.size(), image).rows.size();
    } else {
        throw BridgeError("injectivity rank check requires a field");
    }

    // restriction claims: diagonal images live on units; core images live on
    // the isotropy (equal to the units here: acyclic graphs have no cycles)
    auto iso = isotropy(gg.groupoid);
    auto supported_on = [&](const AlgebraElement& e, const std::vector<std::uint32_t>& allowed) {
        for (std::uint32_t i = 0; i < e.coeffs.size(); ++i)
            if (!e.coeffs[i].is_zero() &&
                !std::binary_search(allowed.begin(), allowed.end(), i))
                return false;
        return true;
    };
    report.diagonal_supported_on_units = true;
    for (const auto& d : diagonal_generators(g, ring, g.vertex_count()))
        if (!supported_on(pi_map(gg, d), gg.groupoid.units()))
            report.diagonal_supported_on_units = false;
    report.core_supported_on_isotropy = true;
    for (const auto& c : core_generators(g, ring, g.vertex_count()))
        if (!supported_on(pi_map(gg, c), iso)) report.core_supported_on_isotropy = false;

    report.pass = report.homomorphism_pass && report.injectivity_rank == report.expected_rank &&
                  report.diagonal_supported_on_units && report.core_supported_on_isotropy;
    return report;
}

} // namespace steinberg
