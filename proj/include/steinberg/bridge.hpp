#pragma once

#include "steinberg/graph.hpp"
#include "steinberg/groupoid.hpp"
#include "steinberg/lpa.hpp"

#include <cstdint>
#include <vector>

namespace steinberg {

class BridgeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All paths ending at a sink, in canonical path order. For acyclic finite
/// graphs these are exactly the boundary paths of the graph groupoid.
std::vector<Path> boundary_paths(const Graph& g);

/// The graph groupoid of an acyclic finite graph, materialized as explicit
/// tables together with the triple structure of each morphism.
struct GraphGroupoid {
    FiniteGroupoid groupoid;
    std::vector<Path> boundary;                              // unit order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> triples; // (x, y) per morphism

    /// Morphism index of (boundary[x], |x|-|y|, boundary[y]), if present.
    std::optional<std::uint32_t> morphism_of(std::uint32_t x, std::uint32_t y) const;
};

/// Morphisms are the triples (x, k, y) over boundary paths x, y sharing a
/// common tail; k = |x| - |y| is the degree cocycle. Requires acyclicity.
GraphGroupoid build_graph_groupoid(const Graph& g);

/// Indicator of Z(alpha, beta) = {(alpha z, |alpha|-|beta|, beta z)}, the
/// image of the monomial under the path-algebra-to-convolution-algebra map.
AlgebraElement pi_expand(const GraphGroupoid& gg, const Graph& g, const RingSpec& ring,
                         const Monomial& m);

/// Linear extension of pi_expand.
AlgebraElement pi_map(const GraphGroupoid& gg, const LpaElement& x);

struct PiReport {
    bool homomorphism_pass = false;
    std::size_t injectivity_rank = 0;
    std::size_t expected_rank = 0;
    bool diagonal_supported_on_units = false;
    bool core_supported_on_isotropy = false;
    bool pass = false;
};

/// Normal-form monomial basis of the path algebra up to the given degree:
/// pairs of paths with a common range not both ending in the same special
/// edge.
std::vector<Monomial> normal_form_basis(const Graph& g, std::size_t max_degree);

/// Samples seeded random pairs for the homomorphism law, checks linear
/// independence of the basis image (field rings), and the support claims for
/// diagonal and core generators.
PiReport verify_pi_iso(const Graph& g, const RingSpec& ring, std::size_t samples,
                       std::uint64_t seed);

} // namespace steinberg
