#pragma once

#include "steinberg/linalg.hpp"
#include "steinberg/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace steinberg {

class GroupoidError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite discrete groupoid given by explicit tables. Morphisms are indexed
/// 0..m-1; units are morphisms with src = dst = inv = self. compose(g1, g2)
/// means "g2 first, then g1" and is defined exactly when r(g2) = s(g1).
class FiniteGroupoid {
public:
    static constexpr std::int32_t kUndefined = -1;

    FiniteGroupoid(std::vector<std::string> names, std::vector<std::uint32_t> units,
                   std::vector<std::uint32_t> source, std::vector<std::uint32_t> range,
                   std::vector<std::uint32_t> inverse, std::vector<std::vector<std::int32_t>> compose);

    static FiniteGroupoid from_json_text(std::string_view text);
    static FiniteGroupoid from_json_file(const std::string& path);
    std::string to_json_text() const;

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::uint32_t g) const { return names_[g]; }
    std::optional<std::uint32_t> index_of(std::string_view name) const;

    const std::vector<std::uint32_t>& units() const { return units_; }
    bool is_unit(std::uint32_t g) const { return is_unit_[g]; }

    std::uint32_t source(std::uint32_t g) const { return source_[g]; }
    std::uint32_t range(std::uint32_t g) const { return range_[g]; }
    std::uint32_t inverse(std::uint32_t g) const { return inverse_[g]; }

    bool composable(std::uint32_t g1, std::uint32_t g2) const {
        return compose_[g1][g2] != kUndefined;
    }
    std::uint32_t compose(std::uint32_t g1, std::uint32_t g2) const;

private:
    std::vector<std::string> names_;
    std::vector<std::uint32_t> units_;
    std::vector<bool> is_unit_;
    std::vector<std::uint32_t> source_, range_, inverse_;
    std::vector<std::vector<std::int32_t>> compose_;
};

/// Subset of the unit space, kept as sorted morphism indices.
struct UnitSubset {
    std::vector<std::uint32_t> members;

    static UnitSubset of(const FiniteGroupoid& g, std::vector<std::uint32_t> units);
    static UnitSubset all(const FiniteGroupoid& g);
    static UnitSubset none();
    bool contains(std::uint32_t u) const;
};

struct ValidationReport {
    bool ok = true;
    std::string violated; // axiom label when !ok
    std::string witness;  // morphism names involved
};

ValidationReport validate_groupoid(const FiniteGroupoid& g);

/// {g : s(g) = r(g)}; contains every unit. Discrete groupoids carry the
/// discrete topology, so this is the full interior of the isotropy.
std::vector<std::uint32_t> isotropy(const FiniteGroupoid& g);

/// True iff s(g) in U <=> r(g) in U for every morphism.
bool is_invariant(const FiniteGroupoid& g, const UnitSubset& u);

/// Morphisms of the full subgroupoid living over the complement of U.
std::vector<std::uint32_t> complement_support(const FiniteGroupoid& g, const UnitSubset& u);

struct RestrictedGroupoid {
    FiniteGroupoid groupoid;
    std::vector<std::uint32_t> parent_index; // restricted index -> parent index
};

/// Full subgroupoid on morphisms whose source (equivalently range) lies off
/// U; requires U invariant.
RestrictedGroupoid restrict_to_complement(const FiniteGroupoid& g, const UnitSubset& u);

/// {a b : a in A, b in B composable}.
std::vector<std::uint32_t> set_product(const FiniteGroupoid& g,
                                       const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b);

/// Element of the convolution algebra: one coefficient per morphism.
struct AlgebraElement {
    RingSpec ring;
    linalg::Vec coeffs;

    static AlgebraElement zero(const FiniteGroupoid& g, const RingSpec& ring);
    static AlgebraElement indicator(const FiniteGroupoid& g, const RingSpec& ring,
                                    std::uint32_t morphism);
    static AlgebraElement indicator_of(const FiniteGroupoid& g, const RingSpec& ring,
                                       const std::vector<std::uint32_t>& morphisms);
    static AlgebraElement identity(const FiniteGroupoid& g, const RingSpec& ring);

    bool is_zero() const { return linalg::is_zero_vec(coeffs); }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement convolve(const FiniteGroupoid& g, const AlgebraElement& f1,
                        const AlgebraElement& f2);
AlgebraElement add(const AlgebraElement& f1, const AlgebraElement& f2);
AlgebraElement sub(const AlgebraElement& f1, const AlgebraElement& f2);
AlgebraElement scale(const Scalar& c, const AlgebraElement& f);

std::string element_str(const FiniteGroupoid& g, const AlgebraElement& f);

/// Canonical basis (reduced echelon, coordinates in morphism order) of
/// {x : xb = bx for all b in the spanning set}. Field rings only. The result
/// is checked to be closed under convolution.
linalg::Matrix centraliser_of_span(const FiniteGroupoid& g, const RingSpec& ring,
                                   const std::vector<AlgebraElement>& spanning);

struct TheoremReport {
    bool invariant = true;
    bool holds = false;
    std::size_t lhs_dim = 0;
    std::size_t rhs_dim = 0;
    std::optional<std::string> witness; // element on one side only
};

/// Checks that the centraliser of the algebra over U equals the isotropy
/// span plus the complement-restriction span. With force=true a
/// non-invariant U is still computed (both sides reported, nothing
/// asserted); otherwise it is an error.
TheoremReport verify_centraliser_theorem(const FiniteGroupoid& g, const UnitSubset& u,
                                         const RingSpec& ring, bool force = false);

/// C_A(B) = B test. Errors when the spanned set is not a commutative
/// subalgebra.
bool is_maximal_commutative(const FiniteGroupoid& g, const RingSpec& ring,
                            const std::vector<AlgebraElement>& spanning);

/// True iff every isotropy group is abelian.
bool check_iso_abelian(const FiniteGroupoid& g);

struct IdealReport {
    bool ideal_is_zero = false;
    bool restriction_injective = false; // ideal meets the isotropy span trivially
    bool agree = false;
    std::size_t ideal_dim = 0;
};

/// Two-sided ideal closure of the generators, then the two injectivity
/// criteria of the uniqueness theorem at finite scale.
IdealReport core_injectivity_check(const FiniteGroupoid& g, const RingSpec& ring,
                                   const std::vector<AlgebraElement>& generators);

// --- constructions used by tests and the generated families ---

/// Pair groupoid on k points: morphisms (i <- j) for all i, j.
FiniteGroupoid pair_groupoid(std::uint32_t k);

/// Cyclic group Z/n as a one-unit groupoid.
FiniteGroupoid cyclic_group_groupoid(std::uint32_t n);

/// Disjoint union; names are prefixed to stay unique.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Product groupoid: morphisms are pairs, composed componentwise.
FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Transformation groupoid H x X: morphism (h, x) has source x and range
/// h(x). The group is given abstractly by mult[i][j] = index of g_i g_j
/// (index 0 is the identity); action[i][x] must be a homomorphism to
/// permutations of the points.
FiniteGroupoid transformation_groupoid(const std::vector<std::vector<std::uint32_t>>& mult,
                                       const std::vector<std::vector<std::uint32_t>>& action,
                                       const std::vector<std::string>& elem_names,
                                       std::uint32_t points);

/// Multiplication table of a faithful permutation list (index of the
/// composite g_i after g_j).
std::vector<std::vector<std::uint32_t>> group_mult_table(
    const std::vector<std::vector<std::uint32_t>>& perms);

/// Extends permutations of {0..k-1} to an action on `points` points, fixing
/// the extra ones.
std::vector<std::vector<std::uint32_t>> permutation_action(
    const std::vector<std::vector<std::uint32_t>>& perms, std::uint32_t points);

} // namespace steinberg
