#pragma once

#include "steinberg/bridge.hpp"
#include "steinberg/graph.hpp"
#include "steinberg/groupoid.hpp"
#include "steinberg/lpa.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace steinberg::suite {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> witnesses; // first few failing cases
};

/// Workload knobs. quick() pins the minimum counts the checks are specified
/// with; full() roughly doubles them.
struct Profile {
    std::size_t lpa_elements = 200;     // per graph and ring
    std::size_t raw_term_sets = 500;    // per graph
    std::size_t rewrite_orders = 20;    // per raw term set
    std::size_t assoc_triples = 500;    // per graph
    std::size_t ideal_choices = 100;    // across the family
    std::size_t pi_samples = 100;       // per graph and ring
    std::size_t family_min = 100;

    static Profile quick() { return {}; }
    static Profile full() {
        Profile p;
        p.lpa_elements = 400;
        p.raw_term_sets = 1000;
        p.rewrite_orders = 30;
        p.assoc_triples = 1000;
        p.ideal_choices = 250;
        p.pi_samples = 250;
        return p;
    }
    static Profile parse(std::string_view name);
};

struct FamilyMember {
    std::string name;
    FiniteGroupoid groupoid;
};

/// Disjoint unions of pair groupoids (<= 4 points), cyclic bundles Z/k
/// (k <= 4), pair x cyclic products, and transformation groupoids of the
/// subgroups of S3 on <= 4 points. At least 100 members.
const std::vector<FamilyMember>& groupoid_family();

/// Every invariant unit subset (unions of unit orbits).
std::vector<UnitSubset> invariant_unit_subsets(const FiniteGroupoid& g);

/// The five sample graphs used by the path-algebra checks.
struct SampleGraph {
    std::string name;
    const Graph* graph;
};
const std::vector<SampleGraph>& sample_graphs();

CriterionResult check_theorem_on_family(std::uint64_t seed);             // C1
CriterionResult check_full_unit_space_case(std::uint64_t seed);          // C2
CriterionResult check_maximal_commutativity(std::uint64_t seed);         // C3
CriterionResult check_diagonal_centraliser(const Profile& p, std::uint64_t seed); // C4
CriterionResult check_commutative_classification(std::uint64_t seed);    // C5
CriterionResult check_bridge_isomorphism(const Profile& p, std::uint64_t seed);   // C6
CriterionResult check_rewriting_soundness(const Profile& p, std::uint64_t seed);  // C7
CriterionResult check_uniqueness_remark(const Profile& p, std::uint64_t seed);    // C8

std::vector<CriterionResult> run_all(const Profile& p, std::uint64_t seed);

} // namespace steinberg::suite
