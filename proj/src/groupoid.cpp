#include "steinberg/groupoid.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace steinberg {

using nlohmann::ordered_json;

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> names, std::vector<std::uint32_t> units,
                               std::vector<std::uint32_t> source, std::vector<std::uint32_t> range,
                               std::vector<std::uint32_t> inverse,
                               std::vector<std::vector<std::int32_t>> compose)
    : names_(std::move(names)),
      units_(std::move(units)),
      source_(std::move(source)),
      range_(std::move(range)),
      inverse_(std::move(inverse)),
      compose_(std::move(compose)) {
    const std::size_t m = names_.size();
    if (source_.size() != m || range_.size() != m || inverse_.size() != m || compose_.size() != m)
        throw GroupoidError("malformed table: size mismatch");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw GroupoidError("malformed table: duplicate name '" + n + "'");
    is_unit_.assign(m, false);
    for (auto u : units_) {
        if (u >= m) throw GroupoidError("malformed table: unit index out of range");
        is_unit_[u] = true;
    }
    std::sort(units_.begin(), units_.end());
    for (std::size_t i = 0; i < m; ++i) {
        if (source_[i] >= m || range_[i] >= m || inverse_[i] >= m)
            throw GroupoidError("malformed table: morphism index out of range");
        if (compose_[i].size() != m) throw GroupoidError("malformed table: compose row size");
        for (auto c : compose_[i])
            if (c != kUndefined && (c < 0 || static_cast<std::size_t>(c) >= m))
                throw GroupoidError("malformed table: compose entry out of range");
    }
}

std::uint32_t FiniteGroupoid::compose(std::uint32_t g1, std::uint32_t g2) const {
    std::int32_t c = compose_[g1][g2];
    if (c == kUndefined)
        throw GroupoidError("morphisms '" + names_[g1] + "' and '" + names_[g2] +
                            "' are not composable");
    return static_cast<std::uint32_t>(c);
}

std::optional<std::uint32_t> FiniteGroupoid::index_of(std::string_view name) const {
    for (std::uint32_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

FiniteGroupoid FiniteGroupoid::from_json_text(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw GroupoidError(std::string("groupoid json: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("units") || !j.contains("morphisms"))
        throw GroupoidError("groupoid json: expected object with 'units' and 'morphisms'");

    std::vector<std::string> names;
    for (const auto& u : j["units"]) names.push_back(u.get<std::string>());
    const std::size_t nunits = names.size();
    struct Raw {
        std::string src, dst, inv;
    };
    std::vector<Raw> raw;
    for (const auto& mj : j["morphisms"]) {
        if (!mj.contains("name") || !mj.contains("src") || !mj.contains("dst") || !mj.contains("inv"))
            throw GroupoidError("groupoid json: each morphism needs name/src/dst/inv");
        names.push_back(mj["name"].get<std::string>());
        raw.push_back({mj["src"].get<std::string>(), mj["dst"].get<std::string>(),
                       mj["inv"].get<std::string>()});
    }
    const std::size_t m = names.size();
    std::map<std::string, std::uint32_t> idx;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (idx.count(names[i]))
            throw GroupoidError("malformed table: duplicate name '" + names[i] + "'");
        idx[names[i]] = i;
    }
    auto resolve = [&](const std::string& n) {
        auto it = idx.find(n);
        if (it == idx.end()) throw GroupoidError("malformed table: unknown name '" + n + "'");
        return it->second;
    };

    std::vector<std::uint32_t> units(nunits), source(m), range(m), inverse(m);
    for (std::uint32_t u = 0; u < nunits; ++u) {
        units[u] = u;
        source[u] = range[u] = inverse[u] = u;
    }
    for (std::size_t k = 0; k < raw.size(); ++k) {
        std::uint32_t i = static_cast<std::uint32_t>(nunits + k);
        source[i] = resolve(raw[k].src);
        range[i] = resolve(raw[k].dst);
        inverse[i] = resolve(raw[k].inv);
    }

    std::vector<std::vector<std::int32_t>> compose(m, std::vector<std::int32_t>(m, kUndefined));
    if (j.contains("compose")) {
        for (const auto& entry : j["compose"]) {
            if (!entry.is_array() || entry.size() != 3)
                throw GroupoidError("groupoid json: compose entries are [left, right, result]");
            std::uint32_t l = resolve(entry[0].get<std::string>());
            std::uint32_t r = resolve(entry[1].get<std::string>());
            std::uint32_t res = resolve(entry[2].get<std::string>());
            if (compose[l][r] != kUndefined && compose[l][r] != static_cast<std::int32_t>(res))
                throw GroupoidError("groupoid json: conflicting composition for (" +
                                    names[l] + ", " + names[r] + ")");
            compose[l][r] = static_cast<std::int32_t>(res);
        }
    }
    // identity compositions are implicit in the format
    for (std::uint32_t g = 0; g < m; ++g) {
        auto fill = [&](std::uint32_t a, std::uint32_t b, std::uint32_t res) {
            if (compose[a][b] != kUndefined && compose[a][b] != static_cast<std::int32_t>(res))
                throw GroupoidError("groupoid json: composition (" + names[a] + ", " + names[b] +
                                    ") conflicts with the identity law");
            compose[a][b] = static_cast<std::int32_t>(res);
        };
        fill(range[g], g, g);
        fill(g, source[g], g);
    }
    return FiniteGroupoid(std::move(names), std::move(units), std::move(source), std::move(range),
                          std::move(inverse), std::move(compose));
}

FiniteGroupoid FiniteGroupoid::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GroupoidError("cannot read groupoid file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string FiniteGroupoid::to_json_text() const {
    ordered_json j;
    j["units"] = ordered_json::array();
    for (auto u : units_) j["units"].push_back(names_[u]);
    j["morphisms"] = ordered_json::array();
    for (std::uint32_t g = 0; g < names_.size(); ++g) {
        if (is_unit_[g]) continue;
        j["morphisms"].push_back({{"name", names_[g]},
                                  {"src", names_[source_[g]]},
                                  {"dst", names_[range_[g]]},
                                  {"inv", names_[inverse_[g]]}});
    }
    j["compose"] = ordered_json::array();
    for (std::uint32_t a = 0; a < names_.size(); ++a)
        for (std::uint32_t b = 0; b < names_.size(); ++b) {
            if (compose_[a][b] == kUndefined || is_unit_[a] || is_unit_[b]) continue;
            j["compose"].push_back({names_[a], names_[b],
                                    names_[static_cast<std::uint32_t>(compose_[a][b])]});
        }
    return j.dump();
}

UnitSubset UnitSubset::of(const FiniteGroupoid& g, std::vector<std::uint32_t> units) {
    for (auto u : units)
        if (u >= g.size() || !g.is_unit(u))
            throw GroupoidError("unit subset contains a non-unit morphism");
    std::sort(units.begin(), units.end());
    units.erase(std::unique(units.begin(), units.end()), units.end());
    return UnitSubset{std::move(units)};
}

UnitSubset UnitSubset::all(const FiniteGroupoid& g) { return UnitSubset{g.units()}; }

UnitSubset UnitSubset::none() { return UnitSubset{{}}; }

bool UnitSubset::contains(std::uint32_t u) const {
    return std::binary_search(members.begin(), members.end(), u);
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
    const std::size_t m = g.size();
    auto fail = [&](std::string what, std::string witness) {
        return ValidationReport{false, std::move(what), std::move(witness)};
    };

    for (auto u : g.units())
        if (g.source(u) != u || g.range(u) != u || g.inverse(u) != u)
            return fail("unit tables must be self-referential", g.name(u));

    for (std::uint32_t x = 0; x < m; ++x) {
        if (!g.is_unit(g.source(x)) || !g.is_unit(g.range(x)))
            return fail("source/range must be units", g.name(x));
    }

    for (std::uint32_t g1 = 0; g1 < m; ++g1)
        for (std::uint32_t g2 = 0; g2 < m; ++g2) {
            bool should = g.range(g2) == g.source(g1);
            if (g.composable(g1, g2) != should)
                return fail(should ? "composable pair left undefined"
                                   : "composition defined for a non-composable pair",
                            "(" + g.name(g1) + ", " + g.name(g2) + ")");
        }

    for (std::uint32_t x = 0; x < m; ++x) {
        if (g.compose(x, g.source(x)) != x || g.compose(g.range(x), x) != x)
            return fail("units must act as identities", g.name(x));
        if (g.inverse(g.inverse(x)) != x)
            return fail("inverse must be an involution", g.name(x));
        if (g.compose(g.inverse(x), x) != g.source(x) || g.compose(x, g.inverse(x)) != g.range(x))
            return fail("inverse laws s(g) = g^-1 g and r(g) = g g^-1", g.name(x));
    }

    for (std::uint32_t g1 = 0; g1 < m; ++g1)
        for (std::uint32_t g2 = 0; g2 < m; ++g2) {
            if (!g.composable(g1, g2)) continue;
            std::uint32_t g12 = g.compose(g1, g2);
            if (g.source(g12) != g.source(g2) || g.range(g12) != g.range(g1))
                return fail("composite endpoints", "(" + g.name(g1) + ", " + g.name(g2) + ")");
            for (std::uint32_t g3 = 0; g3 < m; ++g3) {
                if (!g.composable(g2, g3)) continue;
                if (g.compose(g12, g3) != g.compose(g1, g.compose(g2, g3)))
                    return fail("associativity", "(" + g.name(g1) + ", " + g.name(g2) + ", " +
                                                     g.name(g3) + ")");
            }
        }

    return {};
}

std::vector<std::uint32_t> isotropy(const FiniteGroupoid& g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < g.size(); ++x)
        if (g.source(x) == g.range(x)) out.push_back(x);
    return out;
}

bool is_invariant(const FiniteGroupoid& g, const UnitSubset& u) {
    for (std::uint32_t x = 0; x < g.size(); ++x)
        if (u.contains(g.source(x)) != u.contains(g.range(x))) return false;
    return true;
}

std::vector<std::uint32_t> complement_support(const FiniteGroupoid& g, const UnitSubset& u) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < g.size(); ++x)
        if (!u.contains(g.source(x)) && !u.contains(g.range(x))) out.push_back(x);
    return out;
}

RestrictedGroupoid restrict_to_complement(const FiniteGroupoid& g, const UnitSubset& u) {
    if (!is_invariant(g, u)) throw GroupoidError("subset not invariant");
    std::vector<std::uint32_t> keep = complement_support(g, u);
    std::vector<std::int32_t> to_new(g.size(), -1);
    for (std::uint32_t i = 0; i < keep.size(); ++i) to_new[keep[i]] = static_cast<std::int32_t>(i);

    std::vector<std::string> names;
    std::vector<std::uint32_t> units, source, range, inverse;
    for (auto old : keep) {
        names.push_back(g.name(old));
        source.push_back(static_cast<std::uint32_t>(to_new[g.source(old)]));
        range.push_back(static_cast<std::uint32_t>(to_new[g.range(old)]));
        inverse.push_back(static_cast<std::uint32_t>(to_new[g.inverse(old)]));
        if (g.is_unit(old)) units.push_back(static_cast<std::uint32_t>(to_new[old]));
    }
    std::vector<std::vector<std::int32_t>> compose(keep.size(),
                                                   std::vector<std::int32_t>(keep.size(), -1));
    for (std::uint32_t a = 0; a < keep.size(); ++a)
        for (std::uint32_t b = 0; b < keep.size(); ++b)
            if (g.composable(keep[a], keep[b]))
                compose[a][b] = to_new[g.compose(keep[a], keep[b])];
    return {FiniteGroupoid(std::move(names), std::move(units), std::move(source), std::move(range),
                           std::move(inverse), std::move(compose)),
            std::move(keep)};
}

std::vector<std::uint32_t> set_product(const FiniteGroupoid& g,
                                       const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b) {
    std::set<std::uint32_t> out;
    for (auto x : a)
        for (auto y : b)
            if (g.composable(x, y)) out.insert(g.compose(x, y));
    return {out.begin(), out.end()};
}

AlgebraElement AlgebraElement::zero(const FiniteGroupoid& g, const RingSpec& ring) {
    return {ring, linalg::zero_vec(ring, g.size())};
}

AlgebraElement AlgebraElement::indicator(const FiniteGroupoid& g, const RingSpec& ring,
                                         std::uint32_t morphism) {
    AlgebraElement e = zero(g, ring);
    e.coeffs[morphism] = Scalar(ring, 1);
    return e;
}

AlgebraElement AlgebraElement::indicator_of(const FiniteGroupoid& g, const RingSpec& ring,
                                            const std::vector<std::uint32_t>& morphisms) {
    AlgebraElement e = zero(g, ring);
    for (auto x : morphisms) e.coeffs[x] = Scalar(ring, 1);
    return e;
}

AlgebraElement AlgebraElement::identity(const FiniteGroupoid& g, const RingSpec& ring) {
    return indicator_of(g, ring, g.units());
}

namespace {

void require_compatible(const FiniteGroupoid& g, const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.ring == b.ring)) throw RingError("ring mismatch");
    if (a.coeffs.size() != g.size() || b.coeffs.size() != g.size())
        throw GroupoidError("element does not belong to this groupoid");
}

} // namespace

AlgebraElement convolve(const FiniteGroupoid& g, const AlgebraElement& f1,
                        const AlgebraElement& f2) {
    require_compatible(g, f1, f2);
    AlgebraElement out = AlgebraElement::zero(g, f1.ring);
    for (std::uint32_t g1 = 0; g1 < g.size(); ++g1) {
        if (f1.coeffs[g1].is_zero()) continue;
        for (std::uint32_t g2 = 0; g2 < g.size(); ++g2) {
            if (f2.coeffs[g2].is_zero() || !g.composable(g1, g2)) continue;
            std::uint32_t h = g.compose(g1, g2);
            out.coeffs[h] = out.coeffs[h] + f1.coeffs[g1] * f2.coeffs[g2];
        }
    }
    return out;
}

AlgebraElement add(const AlgebraElement& f1, const AlgebraElement& f2) {
    if (!(f1.ring == f2.ring)) throw RingError("ring mismatch");
    return {f1.ring, linalg::vec_add(f1.coeffs, f2.coeffs)};
}

AlgebraElement sub(const AlgebraElement& f1, const AlgebraElement& f2) {
    if (!(f1.ring == f2.ring)) throw RingError("ring mismatch");
    return {f1.ring, linalg::vec_sub(f1.coeffs, f2.coeffs)};
}

AlgebraElement scale(const Scalar& c, const AlgebraElement& f) {
    return {f.ring, linalg::vec_scale(c, f.coeffs)};
}

std::string element_str(const FiniteGroupoid& g, const AlgebraElement& f) {
    std::string s;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        if (f.coeffs[x].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (f.coeffs[x].is_one())
            s += g.name(x);
        else
            s += f.coeffs[x].str() + "*" + g.name(x);
    }
    return s.empty() ? "0" : s;
}

linalg::Matrix centraliser_of_span(const FiniteGroupoid& g, const RingSpec& ring,
                                   const std::vector<AlgebraElement>& spanning) {
    if (!ring.is_field()) throw GroupoidError("centraliser solver requires a field");
    const std::size_t m = g.size();

    // one block of equations per spanning element b: (x b - b x)(h) = 0
    linalg::Matrix eqs{ring, m, {}};
    for (const auto& b : spanning) {
        require_compatible(g, b, b);
        if (!(b.ring == ring)) throw RingError("ring mismatch");
        std::vector<linalg::Vec> rows(m, linalg::zero_vec(ring, m));
        for (std::uint32_t t = 0; t < m; ++t) {
            for (std::uint32_t y = 0; y < m; ++y) {
                if (!b.coeffs[y].is_zero()) {
                    if (g.composable(t, y))
                        rows[g.compose(t, y)][t] = rows[g.compose(t, y)][t] + b.coeffs[y];
                    if (g.composable(y, t))
                        rows[g.compose(y, t)][t] = rows[g.compose(y, t)][t] - b.coeffs[y];
                }
            }
        }
        for (auto& r : rows)
            if (!linalg::is_zero_vec(r)) eqs.rows.push_back(std::move(r));
    }

    linalg::Matrix basis = linalg::kernel(eqs);

    // a centraliser is a subalgebra; fail loudly if the solver ever disagrees
    for (const auto& r1 : basis.rows)
        for (const auto& r2 : basis.rows) {
            AlgebraElement prod = convolve(g, {ring, r1}, {ring, r2});
            if (!linalg::in_span(basis, prod.coeffs))
                throw std::logic_error("centraliser basis is not closed under convolution");
        }
    return basis;
}

TheoremReport verify_centraliser_theorem(const FiniteGroupoid& g, const UnitSubset& u,
                                         const RingSpec& ring, bool force) {
    if (!ring.is_field()) throw GroupoidError("centraliser solver requires a field");
    TheoremReport report;
    report.invariant = is_invariant(g, u);
    if (!report.invariant && !force) throw GroupoidError("subset not invariant");

    std::vector<AlgebraElement> spanning;
    for (auto x : u.members) spanning.push_back(AlgebraElement::indicator(g, ring, x));
    linalg::Matrix lhs = centraliser_of_span(g, ring, spanning);

    std::vector<linalg::Vec> rhs_vectors;
    for (auto x : isotropy(g)) rhs_vectors.push_back(AlgebraElement::indicator(g, ring, x).coeffs);
    for (auto x : complement_support(g, u))
        rhs_vectors.push_back(AlgebraElement::indicator(g, ring, x).coeffs);
    linalg::Matrix rhs = linalg::span_basis(ring, g.size(), rhs_vectors);

    report.lhs_dim = lhs.rows.size();
    report.rhs_dim = rhs.rows.size();
    report.holds = linalg::same_span(lhs, rhs);
    if (!report.holds) {
        for (const auto& r : lhs.rows)
            if (!linalg::in_span(rhs, r)) {
                report.witness = element_str(g, {ring, r});
                break;
            }
        if (!report.witness)
            for (const auto& r : rhs.rows)
                if (!linalg::in_span(lhs, r)) {
                    report.witness = element_str(g, {ring, r});
                    break;
                }
    }
    return report;
}

bool is_maximal_commutative(const FiniteGroupoid& g, const RingSpec& ring,
                            const std::vector<AlgebraElement>& spanning) {
    if (!ring.is_field()) throw GroupoidError("centraliser solver requires a field");
    std::vector<linalg::Vec> vecs;
    for (const auto& e : spanning) {
        require_compatible(g, e, e);
        vecs.push_back(e.coeffs);
    }
    linalg::Matrix basis = linalg::span_basis(ring, g.size(), vecs);

    for (const auto& r1 : basis.rows)
        for (const auto& r2 : basis.rows) {
            AlgebraElement p12 = convolve(g, {ring, r1}, {ring, r2});
            AlgebraElement p21 = convolve(g, {ring, r2}, {ring, r1});
            if (!(p12 == p21)) throw GroupoidError("input not commutative");
            if (!linalg::in_span(basis, p12.coeffs))
                throw GroupoidError("input not closed under convolution");
        }

    linalg::Matrix cent = centraliser_of_span(g, ring, spanning);
    return linalg::same_span(cent, basis);
}

bool check_iso_abelian(const FiniteGroupoid& g) {
    for (auto u : g.units()) {
        std::vector<std::uint32_t> iso_u;
        for (std::uint32_t x = 0; x < g.size(); ++x)
            if (g.source(x) == u && g.range(x) == u) iso_u.push_back(x);
        for (auto a : iso_u)
            for (auto b : iso_u)
                if (g.compose(a, b) != g.compose(b, a)) return false;
    }
    return true;
}

IdealReport core_injectivity_check(const FiniteGroupoid& g, const RingSpec& ring,
                                   const std::vector<AlgebraElement>& generators) {
    if (!ring.is_field()) throw GroupoidError("centraliser solver requires a field");
    std::vector<linalg::Vec> vecs;
    for (const auto& e : generators) {
        require_compatible(g, e, e);
        vecs.push_back(e.coeffs);
    }
    linalg::Matrix ideal = linalg::span_basis(ring, g.size(), vecs);

    // closure under left/right convolution by the indicator basis, to a
    // fixed point (finite dimension bounds the iteration)
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<linalg::Vec> snapshot = ideal.rows;
        for (const auto& v : snapshot) {
            AlgebraElement elem{ring, v};
            for (std::uint32_t t = 0; t < g.size(); ++t) {
                AlgebraElement ind = AlgebraElement::indicator(g, ring, t);
                for (const AlgebraElement& w : {convolve(g, ind, elem), convolve(g, elem, ind)}) {
                    if (!linalg::in_span(ideal, w.coeffs)) {
                        ideal.rows.push_back(w.coeffs);
                        linalg::rref(ideal);
                        grew = true;
                    }
                }
            }
        }
    }

    std::vector<linalg::Vec> iso_vecs;
    for (auto x : isotropy(g)) iso_vecs.push_back(AlgebraElement::indicator(g, ring, x).coeffs);
    linalg::Matrix iso_span = linalg::span_basis(ring, g.size(), iso_vecs);

    IdealReport report;
    report.ideal_dim = ideal.rows.size();
    report.ideal_is_zero = ideal.rows.empty();
    report.restriction_injective = linalg::intersection_dim(ideal, iso_span) == 0;
    report.agree = report.ideal_is_zero == report.restriction_injective;
    return report;
}

// --- constructions ---

namespace {

std::vector<std::vector<std::int32_t>> empty_table(std::size_t m) {
    return std::vector<std::vector<std::int32_t>>(m, std::vector<std::int32_t>(m, -1));
}

} // namespace

FiniteGroupoid pair_groupoid(std::uint32_t k) {
    // index of (i <- j) is i*k + j; diagonal entries are the units
    const std::size_t m = static_cast<std::size_t>(k) * k;
    std::vector<std::string> names(m);
    std::vector<std::uint32_t> units, source(m), range(m), inverse(m);
    auto id = [k](std::uint32_t i, std::uint32_t j) { return i * k + j; };
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
            std::uint32_t x = id(i, j);
            names[x] = i == j ? "u" + std::to_string(i + 1)
                              : "g" + std::to_string(i + 1) + std::to_string(j + 1);
            source[x] = id(j, j);
            range[x] = id(i, i);
            inverse[x] = id(j, i);
            if (i == j) units.push_back(x);
        }
    auto compose = empty_table(m);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            for (std::uint32_t l = 0; l < k; ++l)
                compose[id(i, j)][id(j, l)] = static_cast<std::int32_t>(id(i, l));
    return FiniteGroupoid(std::move(names), std::move(units), std::move(source), std::move(range),
                          std::move(inverse), std::move(compose));
}

FiniteGroupoid cyclic_group_groupoid(std::uint32_t n) {
    if (n == 0) throw GroupoidError("cyclic order must be positive");
    std::vector<std::string> names;
    std::vector<std::uint32_t> units{0}, source(n, 0), range(n, 0), inverse(n);
    names.push_back("e");
    for (std::uint32_t a = 1; a < n; ++a) names.push_back("t" + std::to_string(a));
    for (std::uint32_t a = 0; a < n; ++a) inverse[a] = (n - a) % n;
    auto compose = empty_table(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) compose[a][b] = static_cast<std::int32_t>((a + b) % n);
    return FiniteGroupoid(std::move(names), std::move(units), std::move(source), std::move(range),
                          std::move(inverse), std::move(compose));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    const std::size_t m = a.size() + b.size();
    auto shift = [&](std::uint32_t x) { return static_cast<std::uint32_t>(a.size() + x); };
    std::vector<std::string> names;
    std::vector<std::uint32_t> units, source, range, inverse;
    for (std::uint32_t x = 0; x < a.size(); ++x) {
        names.push_back("1." + a.name(x));
        source.push_back(a.source(x));
        range.push_back(a.range(x));
        inverse.push_back(a.inverse(x));
        if (a.is_unit(x)) units.push_back(x);
    }
    for (std::uint32_t x = 0; x < b.size(); ++x) {
        names.push_back("2." + b.name(x));
        source.push_back(shift(b.source(x)));
        range.push_back(shift(b.range(x)));
        inverse.push_back(shift(b.inverse(x)));
        if (b.is_unit(x)) units.push_back(shift(x));
    }
    auto compose = empty_table(m);
    for (std::uint32_t x = 0; x < a.size(); ++x)
        for (std::uint32_t y = 0; y < a.size(); ++y)
            if (a.composable(x, y)) compose[x][y] = static_cast<std::int32_t>(a.compose(x, y));
    for (std::uint32_t x = 0; x < b.size(); ++x)
        for (std::uint32_t y = 0; y < b.size(); ++y)
            if (b.composable(x, y)) compose[shift(x)][shift(y)] = static_cast<std::int32_t>(shift(b.compose(x, y)));
    return FiniteGroupoid(std::move(names), std::move(units), std::move(source), std::move(range),
                          std::move(inverse), std::move(compose));
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    const std::size_t m = a.size() * b.size();
    auto id = [&](std::uint32_t x, std::uint32_t y) {
        return static_cast<std::uint32_t>(x * b.size() + y);
    };
    std::vector<std::string> names(m);
    std::vector<std::uint32_t> units, source(m), range(m), inverse(m);
    for (std::uint32_t x = 0; x < a.size(); ++x)
        for (std::uint32_t y = 0; y < b.size(); ++y) {
            std::uint32_t i = id(x, y);
            names[i] = a.name(x) + "|" + b.name(y);
            source[i] = id(a.source(x), b.source(y));
            range[i] = id(a.range(x), b.range(y));
            inverse[i] = id(a.inverse(x), b.inverse(y));
            if (a.is_unit(x) && b.is_unit(y)) units.push_back(i);
        }
    auto compose = empty_table(m);
    for (std::uint32_t x1 = 0; x1 < a.size(); ++x1)
        for (std::uint32_t y1 = 0; y1 < b.size(); ++y1)
            for (std::uint32_t x2 = 0; x2 < a.size(); ++x2)
                for (std::uint32_t y2 = 0; y2 < b.size(); ++y2)
                    if (a.composable(x1, x2) && b.composable(y1, y2))
                        compose[id(x1, y1)][id(x2, y2)] =
                            static_cast<std::int32_t>(id(a.compose(x1, x2), b.compose(y1, y2)));
    return FiniteGroupoid(std::move(names), std::move(units), std::move(source), std::move(range),
                          std::move(inverse), std::move(compose));
}

FiniteGroupoid transformation_groupoid(const std::vector<std::vector<std::uint32_t>>& mult,
                                       const std::vector<std::vector<std::uint32_t>>& action,
                                       const std::vector<std::string>& elem_names,
                                       std::uint32_t points) {
    const std::uint32_t h = static_cast<std::uint32_t>(mult.size());
    if (h == 0 || action.size() != h || elem_names.size() != h)
        throw GroupoidError("transformation groupoid needs matching tables");
    for (std::uint32_t j = 0; j < h; ++j)
        if (mult[0][j] != j || mult[j][0] != j)
            throw GroupoidError("mult[0] must be the identity element");
    for (std::uint32_t i = 0; i < h; ++i)
        for (std::uint32_t j = 0; j < h; ++j)
            for (std::uint32_t x = 0; x < points; ++x)
                if (action[mult[i][j]][x] != action[i][action[j][x]])
                    throw GroupoidError("action is not a homomorphism");

    auto inverse_of = [&](std::uint32_t i) -> std::uint32_t {
        for (std::uint32_t j = 0; j < h; ++j)
            if (mult[i][j] == 0 && mult[j][i] == 0) return j;
        throw GroupoidError("multiplication table has no inverse for element " +
                            std::to_string(i));
    };

    const std::size_t m = static_cast<std::size_t>(h) * points;
    auto id = [&](std::uint32_t elem, std::uint32_t x) { return elem * points + x; };

    std::vector<std::string> names(m);
    std::vector<std::uint32_t> units, source(m), range(m), inverse(m);
    for (std::uint32_t elem = 0; elem < h; ++elem) {
        std::uint32_t inv_idx = inverse_of(elem);
        for (std::uint32_t x = 0; x < points; ++x) {
            std::uint32_t i = id(elem, x);
            names[i] = elem_names[elem] + "@" + std::to_string(x);
            source[i] = id(0, x);
            range[i] = id(0, action[elem][x]);
            inverse[i] = id(inv_idx, action[elem][x]);
            if (elem == 0) units.push_back(i);
        }
    }
    auto compose = empty_table(m);
    for (std::uint32_t e1 = 0; e1 < h; ++e1)
        for (std::uint32_t e2 = 0; e2 < h; ++e2)
            for (std::uint32_t x = 0; x < points; ++x)
                compose[id(e1, action[e2][x])][id(e2, x)] =
                    static_cast<std::int32_t>(id(mult[e1][e2], x));
    return FiniteGroupoid(std::move(names), std::move(units), std::move(source), std::move(range),
                          std::move(inverse), std::move(compose));
}

std::vector<std::vector<std::uint32_t>> group_mult_table(
    const std::vector<std::vector<std::uint32_t>>& perms) {
    const std::uint32_t h = static_cast<std::uint32_t>(perms.size());
    std::vector<std::vector<std::uint32_t>> mult(h, std::vector<std::uint32_t>(h));
    for (std::uint32_t i = 0; i < h; ++i)
        for (std::uint32_t j = 0; j < h; ++j) {
            std::vector<std::uint32_t> prod(perms[i].size());
            for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = perms[i][perms[j][x]];
            bool found = false;
            for (std::uint32_t k = 0; k < h; ++k)
                if (perms[k] == prod) {
                    mult[i][j] = k;
                    found = true;
                    break;
                }
            if (!found) throw GroupoidError("permutation set is not closed under composition");
        }
    return mult;
}

std::vector<std::vector<std::uint32_t>> permutation_action(
    const std::vector<std::vector<std::uint32_t>>& perms, std::uint32_t points) {
    std::vector<std::vector<std::uint32_t>> action;
    for (const auto& p : perms) {
        std::vector<std::uint32_t> row(points);
        for (std::uint32_t x = 0; x < points; ++x)
            row[x] = x < p.size() ? (p[x] < points ? p[x] : x) : x;
        action.push_back(std::move(row));
    }
    return action;
}

} // namespace steinberg
