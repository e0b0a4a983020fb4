#include "steinberg/lpa.hpp"

#include <algorithm>
#include <cctype>

namespace steinberg {

namespace testing {
namespace {
bool g_tamper = false;
}
void set_rewrite_tamper(bool on) { g_tamper = on; }
bool rewrite_tamper() { return g_tamper; }
} // namespace testing

Monomial make_monomial(const Graph& g, Path alpha, Path beta) {
    if (alpha.dst != beta.dst)
        throw LpaError("monomial paths must share their range: [" + path_name(g, alpha) + ";" +
                       path_name(g, beta) + "]");
    return Monomial{std::move(alpha), std::move(beta)};
}

Monomial vertex_monomial(std::uint32_t v) { return Monomial{trivial_path(v), trivial_path(v)}; }

std::string monomial_str(const Graph& g, const Monomial& m) {
    return "[" + path_name(g, m.alpha) + ";" + path_name(g, m.beta) + "]";
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    int c = compare_paths(*graph, a.alpha, b.alpha);
    if (c != 0) return c < 0;
    return compare_paths(*graph, a.beta, b.beta) < 0;
}

SpecialEdgeChoice::SpecialEdgeChoice(const Graph& g) : graph_(&g) {
    chosen_.resize(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        if (!g.out_edges(v).empty()) chosen_[v] = g.out_edges(v).front(); // least edge name
}

bool SpecialEdgeChoice::is_special(std::uint32_t edge) const {
    auto pick = chosen_[graph_->edge(edge).src];
    return pick && *pick == edge;
}

LpaElement::LpaElement(const Graph& g, RingSpec ring)
    : graph_(&g), ring_(ring), terms_(MonomialOrder{&g}) {}

std::size_t LpaElement::degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::string LpaElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = ring_.kind != RingKind::ModN && c.num() < 0;
        Scalar shown = negative && !first ? -c : c;
        if (first) {
            out += shown.is_one() ? monomial_str(*graph_, m)
                                  : shown.str() + "*" + monomial_str(*graph_, m);
        } else {
            out += negative ? " - " : " + ";
            out += shown.is_one() ? monomial_str(*graph_, m)
                                  : shown.str() + "*" + monomial_str(*graph_, m);
        }
        first = false;
    }
    return out;
}

namespace {

using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

void add_term(TermMap& map, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map.try_emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) map.erase(it);
    }
}

Path chop(const Graph& g, const Path& p) {
    if (p.length() == 1) return trivial_path(p.src);
    Path q = p;
    q.edges.pop_back();
    q.dst = g.edge(q.edges.back()).dst;
    return q;
}

bool is_redex(const SpecialEdgeChoice& choice, const Monomial& m) {
    return !m.alpha.trivial() && !m.beta.trivial() &&
           m.alpha.edges.back() == m.beta.edges.back() && choice.is_special(m.alpha.edges.back());
}

// (alpha' gamma)(beta' gamma)* -> alpha' beta'* - sum_{f != gamma} (alpha' f)(beta' f)*
void rewrite_redex(const Graph& g, const Monomial& m, const Scalar& coeff, TermMap& map) {
    std::uint32_t gamma = m.alpha.edges.back();
    std::uint32_t v = g.edge(gamma).src;
    Path alpha = chop(g, m.alpha);
    Path beta = chop(g, m.beta);
    Path alpha_copy = alpha;
    add_term(map, make_monomial(g, std::move(alpha_copy), Path(beta)), coeff);
    if (testing::rewrite_tamper()) return;
    for (auto f : g.out_edges(v)) {
        if (f == gamma) continue;
        Path fpath = make_path(g, {f});
        add_term(map, make_monomial(g, concat(g, alpha, fpath), concat(g, beta, fpath)), -coeff);
    }
}

TermMap collect(const Graph& g, const RingSpec& ring, const RawTerms& terms) {
    TermMap map{MonomialOrder{&g}};
    for (const auto& [m, c] : terms) {
        if (!(c.ring() == ring)) throw RingError("ring mismatch");
        if (m.alpha.dst != m.beta.dst) throw LpaError("malformed monomial");
        add_term(map, m, c);
    }
    return map;
}

} // namespace

LpaElement normalize(const Graph& g, const RingSpec& ring, const RawTerms& terms) {
    // a monomial's only redex is its final edge pair, and firing it removes a
    // degree-d redex while introducing at most one new redex of degree d-2
    // (the correction terms end in non-special edges), so the multiset of
    // redex degrees strictly decreases and any firing order terminates in the
    // same fixed point
    SpecialEdgeChoice choice(g);
    TermMap map = collect(g, ring, terms);
    for (;;) {
        auto it = std::find_if(map.begin(), map.end(),
                               [&](const auto& kv) { return is_redex(choice, kv.first); });
        if (it == map.end()) break;
        Monomial m = it->first;
        Scalar c = it->second;
        map.erase(it);
        rewrite_redex(g, m, c, map);
    }
    LpaElement out(g, ring);
    out.terms_ = std::move(map);
    return out;
}

LpaElement normalize_with_order(const Graph& g, const RingSpec& ring, const RawTerms& terms,
                                Rng& rng) {
    SpecialEdgeChoice choice(g);
    TermMap map = collect(g, ring, terms);
    for (;;) {
        std::vector<Monomial> redexes;
        for (const auto& [m, c] : map)
            if (is_redex(choice, m)) redexes.push_back(m);
        if (redexes.empty()) break;
        const Monomial& pick = redexes[rng.below(redexes.size())];
        Scalar c = map.at(pick);
        map.erase(pick);
        rewrite_redex(g, pick, c, map);
    }
    LpaElement out(g, ring);
    out.terms_ = std::move(map);
    return out;
}

// (alpha beta*)(gamma delta*) = alpha gamma' delta* when gamma = beta gamma',
// alpha (delta beta')* when beta = gamma beta', and zero when neither path
// extends the other
LpaElement multiply_monomials(const Graph& g, const RingSpec& ring, const Monomial& m1,
                              const Monomial& m2) {
    RawTerms raw;
    if (is_prefix(m1.beta, m2.alpha)) {
        Path tail = strip_prefix(g, m1.beta, m2.alpha);
        raw.push_back({make_monomial(g, concat(g, m1.alpha, tail), m2.beta), Scalar(ring, 1)});
    } else if (is_prefix(m2.alpha, m1.beta)) {
        Path tail = strip_prefix(g, m2.alpha, m1.beta);
        raw.push_back({make_monomial(g, m1.alpha, concat(g, m2.beta, tail)), Scalar(ring, 1)});
    }
    return normalize(g, ring, raw);
}

LpaElement lpa_zero(const Graph& g, const RingSpec& ring) { return LpaElement(g, ring); }

LpaElement lpa_one(const Graph& g, const RingSpec& ring) {
    RawTerms raw;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        raw.push_back({vertex_monomial(v), Scalar(ring, 1)});
    return normalize(g, ring, raw);
}

LpaElement lpa_monomial(const Graph& g, const RingSpec& ring, const Monomial& m) {
    return normalize(g, ring, {{m, Scalar(ring, 1)}});
}

LpaElement lpa_vertex(const Graph& g, const RingSpec& ring, std::uint32_t v) {
    return lpa_monomial(g, ring, vertex_monomial(v));
}

LpaElement lpa_edge(const Graph& g, const RingSpec& ring, std::uint32_t e) {
    return lpa_monomial(g, ring,
                        make_monomial(g, make_path(g, {e}), trivial_path(g.edge(e).dst)));
}

LpaElement lpa_ghost(const Graph& g, const RingSpec& ring, std::uint32_t e) {
    return lpa_monomial(g, ring,
                        make_monomial(g, trivial_path(g.edge(e).dst), make_path(g, {e})));
}

namespace {

void require_same_context(const LpaElement& x, const LpaElement& y) {
    if (&x.graph() != &y.graph()) throw LpaError("graph mismatch");
    if (!(x.ring() == y.ring())) throw RingError("ring mismatch");
}

} // namespace

LpaElement lpa_add(const LpaElement& x, const LpaElement& y) {
    require_same_context(x, y);
    RawTerms raw(x.terms().begin(), x.terms().end());
    raw.insert(raw.end(), y.terms().begin(), y.terms().end());
    return normalize(x.graph(), x.ring(), raw);
}

LpaElement lpa_sub(const LpaElement& x, const LpaElement& y) {
    require_same_context(x, y);
    RawTerms raw(x.terms().begin(), x.terms().end());
    for (const auto& [m, c] : y.terms()) raw.push_back({m, -c});
    return normalize(x.graph(), x.ring(), raw);
}

LpaElement lpa_scale(const Scalar& c, const LpaElement& x) {
    RawTerms raw;
    for (const auto& [m, k] : x.terms()) raw.push_back({m, c * k});
    return normalize(x.graph(), x.ring(), raw);
}

LpaElement lpa_mul(const LpaElement& x, const LpaElement& y) {
    require_same_context(x, y);
    const Graph& g = x.graph();
    RawTerms raw;
    for (const auto& [m1, c1] : x.terms())
        for (const auto& [m2, c2] : y.terms()) {
            if (is_prefix(m1.beta, m2.alpha)) {
                Path tail = strip_prefix(g, m1.beta, m2.alpha);
                raw.push_back({make_monomial(g, concat(g, m1.alpha, tail), m2.beta), c1 * c2});
            } else if (is_prefix(m2.alpha, m1.beta)) {
                Path tail = strip_prefix(g, m2.alpha, m1.beta);
                raw.push_back({make_monomial(g, m1.alpha, concat(g, m2.beta, tail)), c1 * c2});
            }
        }
    return normalize(g, x.ring(), raw);
}

std::vector<LpaElement> diagonal_generators(const Graph& g, const RingSpec& ring,
                                            std::size_t max_len) {
    std::vector<LpaElement> out;
    for (const auto& a : enumerate_paths(g, max_len)) {
        LpaElement e = lpa_monomial(g, ring, make_monomial(g, a, a));
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    return out;
}

std::vector<LpaElement> core_generators(const Graph& g, const RingSpec& ring,
                                        std::size_t max_len) {
    std::vector<LpaElement> out = diagonal_generators(g, ring, max_len);
    auto push = [&](LpaElement e) {
        if (!e.is_zero() && std::find(out.begin(), out.end(), e) == out.end())
            out.push_back(std::move(e));
    };
    for (const auto& a : enumerate_paths(g, max_len)) {
        auto cycle = no_exit_cycle_at(g, a.dst);
        if (!cycle) continue;
        Path power = *cycle;
        for (std::size_t k = 1; a.length() + k * cycle->length() <= max_len; ++k) {
            Path alpha = concat(g, a, power);
            push(lpa_monomial(g, ring, make_monomial(g, alpha, a)));
            push(lpa_monomial(g, ring, make_monomial(g, a, alpha)));
            power = concat(g, power, *cycle);
        }
    }
    return out;
}

SpanCertificate is_in_span(const LpaElement& x, const std::vector<LpaElement>& gens) {
    const RingSpec& ring = x.ring();
    if (!ring.is_field()) throw LpaError("span membership requires a field");

    std::map<Monomial, std::size_t, MonomialOrder> index{MonomialOrder{&x.graph()}};
    auto note = [&](const LpaElement& e) {
        for (const auto& [m, c] : e.terms()) index.try_emplace(m, 0);
    };
    note(x);
    for (const auto& e : gens) {
        require_same_context(x, e);
        note(e);
    }
    std::size_t next = 0;
    for (auto& [m, i] : index) i = next++;

    auto to_vec = [&](const LpaElement& e) {
        linalg::Vec v = linalg::zero_vec(ring, index.size());
        for (const auto& [m, c] : e.terms()) v[index.at(m)] = c;
        return v;
    };
    std::vector<linalg::Vec> columns;
    for (const auto& e : gens) columns.push_back(to_vec(e));
    auto sol = linalg::solve_combination(ring, columns, to_vec(x));
    if (!sol) return {false, {}};
    return {true, *sol};
}

SpanCertificate core_membership(const LpaElement& x) {
    const Graph& g = x.graph();
    // weight grading: a core element's monomials have weight k|b| for the
    // no-exit cycle b at their range; anything else cannot be in the span
    for (const auto& [m, c] : x.terms()) {
        std::ptrdiff_t w = m.weight();
        if (w == 0) continue;
        auto cycle = no_exit_cycle_at(g, m.alpha.dst);
        if (!cycle) return {false, {}};
        if (w % static_cast<std::ptrdiff_t>(cycle->length()) != 0) return {false, {}};
    }
    auto gens = core_generators(g, x.ring(), x.degree() + max_cycle_length(g));
    return is_in_span(x, gens);
}

CommutationWitness commutes_with_diagonal(const LpaElement& x, std::size_t bound) {
    const Graph& g = x.graph();
    for (const auto& a : enumerate_paths(g, bound)) {
        LpaElement d = lpa_monomial(g, x.ring(), make_monomial(g, a, a));
        if (!(lpa_mul(x, d) == lpa_mul(d, x))) return {false, path_name(g, a)};
    }
    return {true, {}};
}

DiagonalCentraliserReport centraliser_of_diagonal_check(const LpaElement& x) {
    const Graph& g = x.graph();
    std::size_t bound = x.degree() + g.vertex_count() + 1;
    auto commute = commutes_with_diagonal(x, bound);
    auto member = core_membership(x);
    DiagonalCentraliserReport report;
    report.commutes = commute.commutes;
    report.in_core = member.member;
    report.agree = report.commutes == report.in_core;
    report.witness = commute.witness;
    return report;
}

CentralWitness is_central(const LpaElement& x) {
    const Graph& g = x.graph();
    std::vector<std::uint32_t> vorder(g.vertex_count()), eorder(g.edge_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) vorder[g.vertex_rank(v)] = v;
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) eorder[g.edge_rank(e)] = e;

    for (auto v : vorder) {
        LpaElement p = lpa_vertex(g, x.ring(), v);
        if (!(lpa_mul(x, p) == lpa_mul(p, x))) return {false, g.vertex_name(v)};
    }
    for (auto e : eorder) {
        LpaElement p = lpa_edge(g, x.ring(), e);
        if (!(lpa_mul(x, p) == lpa_mul(p, x))) return {false, g.edge(e).name};
    }
    for (auto e : eorder) {
        LpaElement p = lpa_ghost(g, x.ring(), e);
        if (!(lpa_mul(x, p) == lpa_mul(p, x))) return {false, g.edge(e).name + "*"};
    }
    return {true, {}};
}

bool is_commutative_lpa(const Graph& g) {
    bool shape = g.vertex_count() == 1 &&
                 (g.edge_count() == 0 ||
                  (g.edge_count() == 1 && g.edge(0).src == g.edge(0).dst));
    if (shape) {
        // sanity: generators of R or R[x,x^-1] really do commute
        auto rat = RingSpec::rationals();
        std::vector<LpaElement> gens{lpa_vertex(g, rat, 0)};
        if (g.edge_count() == 1) {
            gens.push_back(lpa_edge(g, rat, 0));
            gens.push_back(lpa_ghost(g, rat, 0));
        }
        for (const auto& a : gens)
            for (const auto& b : gens)
                if (!(lpa_mul(a, b) == lpa_mul(b, a)))
                    throw std::logic_error("single-vertex algebra failed to commute");
    }
    return shape;
}

// --- expression parser ---

ExprError::ExprError(std::string message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class ExprParser {
public:
    ExprParser(const Graph& g, const RingSpec& ring, std::string_view text)
        : graph_(g), ring_(ring), text_(text) {}

    LpaElement parse() {
        RawTerms raw;
        skip_ws();
        parse_term(raw, Scalar(ring_, 1));
        skip_ws();
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-') throw err("expected '+' or '-'");
            ++pos_;
            skip_ws();
            parse_term(raw, Scalar(ring_, op == '-' ? -1 : 1));
            skip_ws();
        }
        return normalize(graph_, ring_, raw);
    }

private:
    const Graph& graph_;
    const RingSpec& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    ExprError err(const std::string& message) const { return ExprError(message, pos_ + 1); }

    void parse_term(RawTerms& raw, const Scalar& sign) {
        if (at_end()) throw err("expected a term");
        Scalar coeff = sign;
        bool have_scalar = false;
        if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = coeff * parse_scalar_token();
            have_scalar = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != '[') throw err("expected '[' after '*'");
            }
        }
        if (!at_end() && peek() == '[') {
            Monomial m = parse_mono();
            raw.push_back({std::move(m), coeff});
            return;
        }
        if (!have_scalar) throw err("expected a scalar or '['");
        // bare scalar: coeff times the identity (sum of the vertices)
        for (std::uint32_t v = 0; v < graph_.vertex_count(); ++v)
            raw.push_back({vertex_monomial(v), coeff});
    }

    Scalar parse_scalar_token() {
        std::size_t start = pos_;
        if (!at_end() && peek() == '-') ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ExprError("expected digits", pos_ + 1);
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '/') {
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ExprError("expected digits after '/'", pos_ + 1);
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        try {
            return parse_scalar(ring_, text_.substr(start, pos_ - start));
        } catch (const RingError& ex) {
            throw ExprError(ex.what(), start + 1);
        }
    }

    std::string parse_name() {
        std::size_t start = pos_;
        auto name_char = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        while (!at_end() && name_char(peek())) ++pos_;
        if (pos_ == start) throw err("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    Path parse_path_syntax() {
        std::size_t start = pos_;
        std::vector<std::pair<std::string, std::size_t>> names;
        names.push_back({parse_name(), start + 1});
        while (!at_end() && peek() == '.') {
            ++pos_;
            std::size_t at = pos_;
            names.push_back({parse_name(), at + 1});
        }
        if (names.size() == 1) {
            if (auto v = graph_.vertex_index(names[0].first)) return trivial_path(*v);
            if (auto e = graph_.edge_index(names[0].first)) return make_path(graph_, {*e});
            throw ExprError("unknown vertex or edge '" + names[0].first + "'", names[0].second);
        }
        std::vector<std::uint32_t> edges;
        for (const auto& [name, at] : names) {
            auto e = graph_.edge_index(name);
            if (!e) throw ExprError("unknown edge '" + name + "'", at);
            if (!edges.empty() && graph_.edge(edges.back()).dst != graph_.edge(*e).src)
                throw ExprError("edge '" + name + "' does not compose with the previous edge", at);
            edges.push_back(*e);
        }
        return make_path(graph_, edges);
    }

    Monomial parse_mono() {
        std::size_t open = pos_;
        ++pos_; // '['
        skip_ws();
        Path alpha = parse_path_syntax();
        skip_ws();
        if (at_end() || peek() != ';') throw err("expected ';'");
        ++pos_;
        skip_ws();
        Path beta = parse_path_syntax();
        skip_ws();
        if (at_end() || peek() != ']') throw err("expected ']'");
        ++pos_;
        if (alpha.dst != beta.dst)
            throw ExprError("monomial paths must share their range", open + 1);
        return Monomial{std::move(alpha), std::move(beta)};
    }
};

} // namespace

LpaElement parse_element(const Graph& g, const RingSpec& ring, std::string_view text) {
    return ExprParser(g, ring, text).parse();
}

} // namespace steinberg
