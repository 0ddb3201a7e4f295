#include "polyenum/chirotope.hpp"

#include "polyenum/linprog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace polyenum {

// --- PartialChirotope ----------------------------------------------------

PartialChirotope::PartialChirotope(int n) : n_(n) {
    if (n < 5 || n > kMaxVertices) throw std::invalid_argument("chirotope: n out of range");
    id_of_mask_.assign(1u << n, -1);
    for (VertexSet s = 0; s < (1u << n); ++s)
        if (set_size(s) == 5) {
            id_of_mask_[s] = static_cast<int>(tuples_.size());
            tuples_.push_back(s);
        }
    val_.assign(tuples_.size(), 0);
    known_.assign(tuples_.size(), 0);
}

int PartialChirotope::tuple_id(VertexSet mask) const {
    if (mask >= id_of_mask_.size()) return -1;
    return id_of_mask_[mask];
}

void PartialChirotope::assign(int id, int sign) {
    val_[id] = static_cast<std::int8_t>(sign);
    known_[id] = 1;
}

std::pair<VertexSet, int> sort_tuple(std::array<int, 5> t) {
    int parity = 1;
    for (int i = 1; i < 5; ++i)
        for (int j = i; j > 0 && t[j - 1] > t[j]; --j) {
            std::swap(t[j - 1], t[j]);
            parity = -parity;
        }
    for (int i = 1; i < 5; ++i)
        if (t[i] == t[i - 1]) return {0, 0};
    VertexSet m = 0;
    for (int v : t) m = set_with(m, v);
    return {m, parity};
}

std::optional<int> PartialChirotope::sign_ordered(const std::array<int, 5>& t) const {
    auto [mask, parity] = sort_tuple(t);
    if (parity == 0) return 0;
    int id = tuple_id(mask);
    if (id < 0) throw std::invalid_argument("chirotope: tuple out of range");
    if (!known_[id]) return std::nullopt;
    return parity * val_[id];
}

size_t PartialChirotope::known_count() const {
    size_t c = 0;
    for (char k : known_) c += (k != 0);
    return c;
}

// --- GP triples -----------------------------------------------------------

std::string GPTriple::str() const {
    std::string out = "x={" + set_str(x) + "} abcd={";
    for (int i = 0; i < 4; ++i) {
        if (i) out += ",";
        out += std::to_string(abcd[i]);
    }
    return out + "}";
}

namespace {

GPTriple make_triple(VertexSet x, const std::array<int, 4>& abcd, const PartialChirotope& chi) {
    GPTriple t;
    t.x = x;
    t.abcd = abcd;
    auto xs = set_elements(x);
    auto bracket = [&](int u, int v) {
        auto [mask, par] = sort_tuple({xs[0], xs[1], xs[2], u, v});
        return std::make_pair(chi.tuple_id(mask), par);
    };
    const auto [a, b, c, d] = abcd;
    std::array<std::array<std::pair<int, int>, 2>, 3> raw{{
        {bracket(a, b), bracket(c, d)},
        {bracket(a, c), bracket(b, d)},
        {bracket(a, d), bracket(b, c)},
    }};
    for (int i = 0; i < 3; ++i) {
        t.term[i].t1 = raw[i][0].first;
        t.term[i].t2 = raw[i][1].first;
        t.term[i].parity = raw[i][0].second * raw[i][1].second;
    }
    return t;
}

}  // namespace

GPTable::GPTable(int n, const PartialChirotope& chi) {
    incidence_.assign(chi.tuple_count(), {});
    for (VertexSet x = 0; x < (1u << n); ++x) {
        if (set_size(x) != 3) continue;
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (!set_contains(x, v)) rest.push_back(v);
        const int k = static_cast<int>(rest.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    for (int m = l + 1; m < k; ++m) {
                        std::array<int, 4> abcd{rest[i], rest[j], rest[l], rest[m]};
                        int id = static_cast<int>(triples_.size());
                        triples_.push_back(make_triple(x, abcd, chi));
                        for (const auto& term : triples_.back().term) {
                            incidence_[term.t1].push_back(id);
                            incidence_[term.t2].push_back(id);
                        }
                    }
    }
    for (auto& lst : incidence_) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
}

std::optional<std::array<int, 3>> effective_signs(const GPTriple& t, const PartialChirotope& chi) {
    std::array<int, 3> eff{};
    for (int i = 0; i < 3; ++i) {
        if (!chi.known(t.term[i].t1) || !chi.known(t.term[i].t2)) return std::nullopt;
        int prod = t.term[i].parity * chi.value(t.term[i].t1) * chi.value(t.term[i].t2);
        eff[i] = (i == 1) ? -prod : prod;
    }
    return eff;
}

bool violates_gp(const std::array<int, 3>& eff) {
    int zero = 0, plus = 0, minus = 0;
    for (int e : eff) {
        if (e == 0)
            ++zero;
        else if (e > 0)
            ++plus;
        else
            ++minus;
    }
    if (zero == 0) return plus == 3 || minus == 3;
    if (zero == 1) return plus == 2 || minus == 2;
    if (zero == 2) return true;
    return false;  // all zero is fine
}

// --- rules 1-3 derivation --------------------------------------------------

namespace {

// Signed union-find over tuple ids with the union forest kept explicitly so
// conflict paths can be replayed as rule applications.
struct SignedUF {
    std::vector<int> parent;
    std::vector<int> sig;  // sign of chi(i) relative to chi(parent[i])

    explicit SignedUF(int n) : parent(n), sig(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    std::pair<int, int> find(int i) {
        if (parent[i] == i) return {i, 1};
        auto [root, s] = find(parent[i]);
        parent[i] = root;
        sig[i] *= s;
        return {root, sig[i]};
    }

    // chi(a) = rel * chi(b); returns 0 merged, +1 already consistent,
    // -1 inconsistent (self-negation discovered)
    int unite(int a, int b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) return (sa == rel * sb) ? 1 : -1;
        parent[ra] = rb;
        sig[ra] = sa * rel * sb;  // chi(ra) relative to chi(rb)
        return 0;
    }
};

struct EdgeRec {
    int a, b, rel;
    RuleStep step;
};

// order helpers: vertex lists compare lexicographically
bool lex_less(VertexSet a, VertexSet b) {
    auto ea = set_elements(a), eb = set_elements(b);
    return ea < eb;
}

struct RuleContext {
    const FacetComplex& sphere;
    std::vector<VertexSet> ridges;                  // rank d-1 faces, lex sorted
    std::vector<std::pair<VertexSet, VertexSet>> ridge_facets;  // the two coatoms

    explicit RuleContext(const FacetComplex& s, const FaceLattice& lat) : sphere(s) {
        for (size_t i = 0; i < lat.size(); ++i) {
            if (lat.rank[i] != s.d - 1) continue;
            VertexSet r = lat.faces[i];
            std::vector<VertexSet> above;
            for (VertexSet f : s.facets)
                if ((r & f) == r) above.push_back(f);
            if (above.size() != 2) continue;  // valid spheres have exactly two
            if (lex_less(above[1], above[0])) std::swap(above[0], above[1]);
            ridges.push_back(r);
            ridge_facets.emplace_back(above[0], above[1]);
        }
        std::vector<int> order(ridges.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int i, int j) { return lex_less(ridges[i], ridges[j]); });
        std::vector<VertexSet> r2;
        std::vector<std::pair<VertexSet, VertexSet>> rf2;
        for (int i : order) {
            r2.push_back(ridges[i]);
            rf2.push_back(ridge_facets[i]);
        }
        ridges = std::move(r2);
        ridge_facets = std::move(rf2);
    }
};

std::vector<std::array<int, 3>> three_subsets(VertexSet s) {
    auto el = set_elements(s);
    std::vector<std::array<int, 3>> out;
    const int k = static_cast<int>(el.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) out.push_back({el[i], el[j], el[l]});
    return out;
}

std::vector<std::array<int, 4>> four_subsets(VertexSet s) {
    auto el = set_elements(s);
    std::vector<std::array<int, 4>> out;
    const int k = static_cast<int>(el.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                for (int m = l + 1; m < k; ++m) out.push_back({el[i], el[j], el[l], el[m]});
    return out;
}

}  // namespace

DeriveResult derive_partial_chirotope(const FacetComplex& sphere, IterationOrder order) {
    if (sphere.d != 4) throw std::invalid_argument("chirotope: requires d = 4");
    const bool rev = order == IterationOrder::Reverse;
    PartialChirotope chi(sphere.n);
    FaceLattice lat = build_face_poset(sphere);
    RuleContext ctx(sphere, lat);

    const int T = chi.tuple_count();
    SignedUF uf(T);
    std::vector<std::vector<std::pair<int, int>>> adj(T);  // (neighbor, edge id)
    std::vector<EdgeRec> edges;
    std::vector<VertexSet> zero_facet(T, 0);  // rule-1 source per tuple (0 = none)

    // rule 1
    {
        auto facets = sphere.facets;
        if (rev) std::reverse(facets.begin(), facets.end());
        for (VertexSet f : facets) {
            if (set_size(f) < 5) continue;
            auto el = set_elements(f);
            const int k = static_cast<int>(el.size());
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    for (int l = j + 1; l < k; ++l)
                        for (int m = l + 1; m < k; ++m)
                            for (int o = m + 1; o < k; ++o) {
                                VertexSet mask = set_of({el[i], el[j], el[l], el[m], el[o]});
                                int id = chi.tuple_id(mask);
                                if (!zero_facet[id]) zero_facet[id] = f;
                            }
        }
    }

    // collect rule-2 and rule-3 equalities (hub pattern; the rest follows by
    // transitivity inside the union-find)
    std::vector<EdgeRec> pending;
    {
        auto facets = sphere.facets;
        if (rev) std::reverse(facets.begin(), facets.end());
        for (VertexSet f : facets) {
            std::vector<int> outside;
            for (int v = 1; v <= sphere.n; ++v)
                if (!set_contains(f, v)) outside.push_back(v);
            if (outside.size() < 2) continue;
            if (rev) std::reverse(outside.begin(), outside.end());
            for (const auto& q : four_subsets(f)) {
                int e0 = outside[0];
                for (size_t i = 1; i < outside.size(); ++i) {
                    RuleStep st;
                    st.rule = 2;
                    st.facet_f = f;
                    st.lhs = {q[0], q[1], q[2], q[3], e0};
                    st.rhs = {q[0], q[1], q[2], q[3], outside[i]};
                    st.rel = 1;
                    pending.push_back({0, 0, 0, st});
                }
            }
        }
        std::vector<int> ridx(ctx.ridges.size());
        for (size_t i = 0; i < ridx.size(); ++i) ridx[i] = static_cast<int>(i);
        if (rev) std::reverse(ridx.begin(), ridx.end());
        for (int i : ridx) {
            VertexSet r = ctx.ridges[i];
            auto [f, g] = ctx.ridge_facets[i];
            std::vector<int> ds = set_elements(f & ~r);
            std::vector<int> dps = set_elements(g & ~r);
            std::vector<int> es;
            for (int v = 1; v <= sphere.n; ++v)
                if (!set_contains(f | g, v)) es.push_back(v);
            if (ds.empty() || dps.empty() || es.empty()) continue;
            if (rev) {
                std::reverse(ds.begin(), ds.end());
                std::reverse(dps.begin(), dps.end());
                std::reverse(es.begin(), es.end());
            }
            for (const auto& abc : three_subsets(r)) {
                for (int e : es) {
                    auto mk = [&](int dd, int ddp) {
                        RuleStep st;
                        st.rule = 3;
                        st.facet_f = f;
                        st.facet_g = g;
                        st.ridge = r;
                        st.lhs = {abc[0], abc[1], abc[2], dd, e};
                        st.rhs = {abc[0], abc[1], abc[2], ddp, e};
                        st.rel = -1;
                        pending.push_back({0, 0, 0, st});
                    };
                    for (int dp : dps) mk(ds[0], dp);
                    for (size_t k = 1; k < ds.size(); ++k) mk(ds[k], dps[0]);
                }
            }
        }
    }

    // run the unions, tracking the forest for path reconstruction
    struct Conflict {
        int a, b, rel;
        int edge_id;
    };
    std::optional<Conflict> self_neg;
    for (auto& e : pending) {
        auto [m1, p1] = sort_tuple(e.step.lhs);
        auto [m2, p2] = sort_tuple(e.step.rhs);
        if (p1 == 0 || p2 == 0) continue;
        e.a = chi.tuple_id(m1);
        e.b = chi.tuple_id(m2);
        e.rel = e.step.rel * p1 * p2;  // stored-value relation
        if (e.a == e.b) {
            if (e.rel != 1 && !self_neg) {
                int id = static_cast<int>(edges.size());
                edges.push_back(e);
                self_neg = Conflict{e.a, e.b, e.rel, id};
            }
            continue;
        }
        int res = uf.unite(e.a, e.b, e.rel);
        if (res == 0) {
            int id = static_cast<int>(edges.size());
            edges.push_back(e);
            adj[e.a].push_back({e.b, id});
            adj[e.b].push_back({e.a, id});
        } else if (res == -1 && !self_neg) {
            int id = static_cast<int>(edges.size());
            edges.push_back(e);
            self_neg = Conflict{e.a, e.b, e.rel, id};
        }
    }

    // component state
    std::vector<int> comp_zero(T, -1);  // representative zero tuple per root
    for (int t = 0; t < T; ++t)
        if (zero_facet[t]) {
            int root = uf.find(t).first;
            if (comp_zero[root] < 0) comp_zero[root] = t;
        }

    // anchor: first rule-3 equality in iteration order fixes the global sign;
    // with no rule-3 instance at all, the first tuple whose component is not
    // already forced to zero.
    int anchor_id = -1;
    int anchor_val = 0;
    RuleStep anchor_instance;
    bool have_anchor_instance = false;
    for (const auto& e : pending) {
        if (e.step.rule != 3) continue;
        auto [mask, par] = sort_tuple(e.step.lhs);
        if (par == 0) continue;
        anchor_id = chi.tuple_id(mask);
        anchor_val = par;  // chi(ordered lhs) = +1
        anchor_instance = e.step;
        have_anchor_instance = true;
        break;
    }
    if (anchor_id < 0) {
        for (int t = 0; t < T; ++t) {
            int id = rev ? T - 1 - t : t;
            auto [root, s] = uf.find(id);
            (void)s;
            bool zeroish = comp_zero[root] >= 0 || (self_neg && uf.find(self_neg->a).first == root);
            if (!zeroish) {
                anchor_id = id;
                anchor_val = 1;
                break;
            }
        }
    }

    // path reconstruction through the union forest (BFS on tree edges)
    auto tree_path = [&](int from, int to) {
        std::vector<int> prev_edge(T, -1), prev_node(T, -1);
        std::deque<int> q{from};
        std::vector<char> seen(T, 0);
        seen[from] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (u == to) break;
            for (auto [v, eid] : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    prev_node[v] = u;
                    prev_edge[v] = eid;
                    q.push_back(v);
                }
        }
        std::vector<RuleStep> steps;
        for (int u = to; u != from && prev_edge[u] >= 0; u = prev_node[u])
            steps.push_back(edges[prev_edge[u]].step);
        std::reverse(steps.begin(), steps.end());
        return steps;
    };

    DeriveResult out;
    out.chi = chi;

    if (anchor_id >= 0) {
        int anchor_root = uf.find(anchor_id).first;
        bool anchored_nonzero_forced = have_anchor_instance;
        if (anchored_nonzero_forced) {
            if (comp_zero[anchor_root] >= 0) {
                RuleConflictCertificate cert;
                cert.from_cycle = false;
                cert.zero_tuple = chi.tuple_mask(comp_zero[anchor_root]);
                cert.zero_facet = zero_facet[comp_zero[anchor_root]];
                cert.steps = tree_path(comp_zero[anchor_root], anchor_id);
                cert.anchor_instance = anchor_instance;
                out.conflict = std::move(cert);
                return out;
            }
            if (self_neg && uf.find(self_neg->a).first == anchor_root) {
                RuleConflictCertificate cert;
                cert.from_cycle = true;
                cert.zero_tuple = chi.tuple_mask(self_neg->a);
                cert.steps = tree_path(self_neg->a, self_neg->b);
                cert.steps.push_back(edges[self_neg->edge_id].step);
                // walk the zeroed bracket over to the anchor
                auto tail = tree_path(self_neg->a, anchor_id);
                cert.steps.insert(cert.steps.end(), tail.begin(), tail.end());
                cert.anchor_instance = anchor_instance;
                out.conflict = std::move(cert);
                return out;
            }
        }
    }

    // assign values: zero components and the anchored component
    std::vector<int> comp_selfneg(T, 0);
    if (self_neg) comp_selfneg[uf.find(self_neg->a).first] = 1;
    int anchor_root = anchor_id >= 0 ? uf.find(anchor_id).first : -1;
    int anchor_rel = anchor_id >= 0 ? uf.find(anchor_id).second : 1;
    for (int t = 0; t < T; ++t) {
        auto [root, s] = uf.find(t);
        if (comp_zero[root] >= 0 || comp_selfneg[root]) {
            out.chi.assign(t, 0);
        } else if (root == anchor_root) {
            // chi(anchor) = anchor_val, chi(t) = s * chi(root)
            out.chi.assign(t, s * anchor_rel * anchor_val);
        }
    }
    return out;
}

// --- GP check and propagation ----------------------------------------------

std::optional<GPViolationCertificate> check_gp(const PartialChirotope& chi) {
    GPTable table(chi.n(), chi);
    for (const auto& t : table.triples()) {
        auto eff = effective_signs(t, chi);
        if (!eff || !violates_gp(*eff)) continue;
        GPViolationCertificate cert;
        cert.triple = t;
        for (int i = 0; i < 3; ++i) {
            cert.signs[2 * i] = static_cast<std::int8_t>(chi.value(t.term[i].t1));
            cert.signs[2 * i + 1] = static_cast<std::int8_t>(chi.value(t.term[i].t2));
        }
        return cert;
    }
    return std::nullopt;
}

namespace {

struct Deduction {
    bool fires = false;
    bool contradiction = false;  // zero partner with a forced-nonzero term
    int tuple = -1;
    int sign = 0;
};

// Tries to deduce the single unknown bracket of the triple.
Deduction deduce(const GPTriple& t, const PartialChirotope& chi) {
    Deduction d;
    int unknown_term = -1, unknown_slot = -1, unknowns = 0;
    for (int i = 0; i < 3; ++i) {
        if (!chi.known(t.term[i].t1)) {
            ++unknowns;
            unknown_term = i;
            unknown_slot = 0;
        }
        if (!chi.known(t.term[i].t2)) {
            ++unknowns;
            unknown_term = i;
            unknown_slot = 1;
        }
    }
    if (unknowns != 1) return d;

    // effective signs of the two full terms
    int others[2], oi = 0;
    for (int i = 0; i < 3; ++i)
        if (i != unknown_term) others[oi++] = i;
    auto eff = [&](int i) {
        int prod = t.term[i].parity * chi.value(t.term[i].t1) * chi.value(t.term[i].t2);
        return (i == 1) ? -prod : prod;
    };
    int e1 = eff(others[0]), e2 = eff(others[1]);
    int forced;  // sign of the unknown's effective term
    if (e1 == 0 && e2 == 0)
        forced = 0;
    else if (e1 == 0 || e2 == 0)
        forced = -(e1 + e2);
    else if (e1 == e2)
        forced = -e1;
    else
        return d;  // opposite nonzero signs: magnitude could balance either way

    int partner = unknown_slot == 0 ? t.term[unknown_term].t2 : t.term[unknown_term].t1;
    int unknown = unknown_slot == 0 ? t.term[unknown_term].t1 : t.term[unknown_term].t2;
    int term_sign = (unknown_term == 1) ? -forced : forced;  // sign of T_i itself
    if (chi.value(partner) == 0) {
        if (term_sign != 0) {
            d.fires = true;
            d.contradiction = true;
            d.tuple = unknown;
            return d;
        }
        return d;  // zero times anything matches a zero term: no information
    }
    d.fires = true;
    d.tuple = unknown;
    d.sign = term_sign * t.term[unknown_term].parity * chi.value(partner);
    return d;
}

}  // namespace

PropagateResult propagate(const PartialChirotope& chi_in, IterationOrder order) {
    PropagateResult out;
    out.chi = chi_in;
    PartialChirotope& chi = out.chi;
    GPTable table(chi.n(), chi);
    const auto& triples = table.triples();
    const bool rev = order == IterationOrder::Reverse;

    std::vector<char> queued(triples.size(), 0);
    std::deque<int> work;
    auto push = [&](int id) {
        if (!queued[id]) {
            queued[id] = 1;
            if (rev)
                work.push_front(id);
            else
                work.push_back(id);
        }
    };
    for (size_t i = 0; i < triples.size(); ++i) push(static_cast<int>(i));

    std::vector<PropagationStep> steps;
    while (!work.empty()) {
        int id = work.front();
        work.pop_front();
        queued[id] = 0;
        const GPTriple& t = triples[id];

        auto eff = effective_signs(t, chi);
        if (eff) {
            if (violates_gp(*eff)) {
                PropagationCertificate cert;
                cert.kind = PropagationCertificate::Kind::CompletedViolation;
                cert.steps = steps;
                cert.conflict_triple = t;
                out.contradiction = std::move(cert);
                return out;
            }
            continue;
        }
        Deduction d = deduce(t, chi);
        if (!d.fires) continue;
        if (d.contradiction) {
            PropagationCertificate cert;
            cert.kind = PropagationCertificate::Kind::ZeroPartnerForcedNonzero;
            cert.steps = steps;
            cert.conflict_triple = t;
            cert.conflict_tuple = chi.tuple_mask(d.tuple);
            out.contradiction = std::move(cert);
            return out;
        }
        chi.assign(d.tuple, d.sign);
        PropagationStep st;
        st.triple = t;
        st.deduced = chi.tuple_mask(d.tuple);
        st.sign = static_cast<std::int8_t>(d.sign);
        steps.push_back(st);
        for (int nb : table.triples_of(d.tuple)) push(nb);
    }
    return out;
}

// --- biquadratic final polynomials ------------------------------------------

std::optional<BiquadraticCertificate> bfp_search(const PartialChirotope& chi) {
    GPTable table(chi.n(), chi);

    std::vector<BfpRow> rows;
    std::map<std::array<VertexSet, 4>, int> strict_seen;
    std::map<std::array<VertexSet, 4>, int> eq_seen;
    auto pair_masks = [&](const GPTriple::Term& t) {
        VertexSet a = chi.tuple_mask(t.t1), b = chi.tuple_mask(t.t2);
        return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (const auto& t : table.triples()) {
        auto eff = effective_signs(t, chi);
        if (!eff) continue;
        const auto& e = *eff;
        int zero = (e[0] == 0) + (e[1] == 0) + (e[2] == 0);
        if (zero == 0) {
            // exactly one outlier sign; its magnitude exceeds each other term
            int outlier = -1;
            if (e[0] == e[1])
                outlier = 2;
            else if (e[0] == e[2])
                outlier = 1;
            else
                outlier = 0;
            auto [p, q] = pair_masks(t.term[outlier]);
            for (int i = 0; i < 3; ++i) {
                if (i == outlier) continue;
                auto [r, s] = pair_masks(t.term[i]);
                std::array<VertexSet, 4> key{p, q, r, s};
                if (strict_seen.emplace(key, 1).second)
                    rows.push_back({p, q, r, s, true, t});
            }
        } else if (zero == 1) {
            // remaining terms balance exactly
            int i1 = e[0] == 0 ? 1 : 0;
            int i2 = e[2] == 0 ? 1 : 2;
            auto [p, q] = pair_masks(t.term[i1]);
            auto [r, s] = pair_masks(t.term[i2]);
            std::array<VertexSet, 4> key =
                std::make_pair(p, q) <= std::make_pair(r, s)
                    ? std::array<VertexSet, 4>{p, q, r, s}
                    : std::array<VertexSet, 4>{r, s, p, q};
            if (eq_seen.emplace(key, 1).second) rows.push_back({key[0], key[1], key[2], key[3], false, t});
        }
    }
    return bfp_solve(chi, std::move(rows));
}

std::optional<BiquadraticCertificate> bfp_solve(const PartialChirotope& chi,
                                                std::vector<BfpRow> rows) {
    if (rows.empty()) return std::nullopt;

    // variables: one log-magnitude per nonzero bracket that appears
    std::map<VertexSet, int> var_of;
    auto var = [&](VertexSet m) {
        auto it = var_of.emplace(m, static_cast<int>(var_of.size()));
        return it.first->second;
    };
    std::vector<std::array<int, 4>> row_vars;
    for (const auto& r : rows) row_vars.push_back({var(r.p), var(r.q), var(r.r), var(r.s)});
    const int nv = static_cast<int>(var_of.size());

    // Farkas alternative of {strict rows >= 1, eq rows = 0}: one multiplier
    // per row (nonnegative on strict rows), maximize the strict mass subject
    // to the combined coefficients cancelling bracket-wise. The system is
    // homogeneous, so a positive optimum escapes to infinity: an unbounded
    // ray is exactly a final polynomial, a zero optimum means the strict
    // system is feasible and no BFP exists.
    LinearSystem alt;
    alt.num_vars = static_cast<int>(rows.size());
    alt.nonneg.assign(alt.num_vars, 0);
    alt.objective.assign(alt.num_vars, Rational(0));
    std::vector<std::vector<Rational>> bracket_rows(nv, std::vector<Rational>(alt.num_vars, Rational(0)));
    for (size_t i = 0; i < rows.size(); ++i) {
        bracket_rows[row_vars[i][0]][i] += 1;
        bracket_rows[row_vars[i][1]][i] += 1;
        bracket_rows[row_vars[i][2]][i] -= 1;
        bracket_rows[row_vars[i][3]][i] -= 1;
        if (rows[i].strict) {
            alt.nonneg[i] = 1;
            alt.objective[i] = Rational(1);
        }
    }
    for (int b = 0; b < nv; ++b) alt.add_eq(std::move(bracket_rows[b]), Rational(0));

    auto outcome = solve(alt);
    if (outcome.status == LPOutcome::Status::Feasible) {
        if (outcome.optimum.sgn() != 0)
            throw std::logic_error("bfp: homogeneous system with finite nonzero optimum");
        return std::nullopt;
    }
    if (outcome.status != LPOutcome::Status::Unbounded)
        throw std::logic_error("bfp: alternative system cannot be infeasible");

    BiquadraticCertificate cert;
    for (int t = 0; t < chi.tuple_count(); ++t)
        if (chi.known(t))
            cert.chirotope.emplace_back(chi.tuple_mask(t), static_cast<std::int8_t>(chi.value(t)));
    cert.rows = rows;
    cert.multipliers = outcome.ray;
    // scale to primitive integers for a tidy certificate
    BigInt lcm(1);
    for (const auto& m : cert.multipliers)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.den().get_mpz_t());
    std::vector<BigInt> nums;
    for (auto& m : cert.multipliers) m *= Rational(lcm);
    BigInt g(0);
    for (const auto& m : cert.multipliers) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.num().get_mpz_t());
    if (g > 1)
        for (auto& m : cert.multipliers) m /= Rational(g);
    return cert;
}

// --- classify + verification -------------------------------------------------

std::string certificate_kind(const Certificate& cert) {
    if (std::holds_alternative<GPViolationCertificate>(cert)) return "gp-violation";
    if (std::holds_alternative<PropagationCertificate>(cert)) return "propagation-contradiction";
    if (std::holds_alternative<BiquadraticCertificate>(cert)) return "bfp";
    return "rule-conflict";
}

ClassifyResult classify(const FacetComplex& sphere, const ClassifyOptions& opts) {
    ClassifyResult res;
    auto derived = derive_partial_chirotope(sphere);
    if (derived.conflict) {
        res.status = ClassifyResult::Status::CertifiedNonRealizable;
        res.stage = "rule-conflict";
        res.certificate = Certificate(std::move(*derived.conflict));
        res.chi = std::move(derived.chi);
        return res;
    }
    res.chi = std::move(derived.chi);

    if (auto gp = check_gp(res.chi)) {
        res.status = ClassifyResult::Status::CertifiedNonRealizable;
        res.stage = "gp";
        res.certificate = Certificate(std::move(*gp));
        return res;
    }
    if (opts.max_stage < 2) return res;

    auto prop = propagate(res.chi);
    if (prop.contradiction) {
        res.status = ClassifyResult::Status::CertifiedNonRealizable;
        res.stage = "propagation";
        res.certificate = Certificate(std::move(*prop.contradiction));
        res.chi = std::move(prop.chi);
        return res;
    }
    res.chi = std::move(prop.chi);
    if (opts.max_stage < 3) return res;

    if (auto bfp = bfp_search(res.chi)) {
        res.status = ClassifyResult::Status::CertifiedNonRealizable;
        res.stage = "bfp";
        res.certificate = Certificate(std::move(*bfp));
        return res;
    }
    return res;
}

namespace {

// replays one rule step against the sphere; returns the stored-tuple
// equation (a, b, rel) or nullopt when the citation is invalid
std::optional<std::tuple<int, int, int>> replay_step(const RuleStep& st, const FacetComplex& sphere,
                                                     const FaceLattice& lat,
                                                     const PartialChirotope& chi) {
    auto [m1, p1] = sort_tuple(st.lhs);
    auto [m2, p2] = sort_tuple(st.rhs);
    if (p1 == 0 || p2 == 0) return std::nullopt;
    auto is_facet = [&](VertexSet f) {
        return std::find(sphere.facets.begin(), sphere.facets.end(), f) != sphere.facets.end();
    };
    if (st.rule == 2) {
        if (!is_facet(st.facet_f)) return std::nullopt;
        VertexSet q = set_of({st.lhs[0], st.lhs[1], st.lhs[2], st.lhs[3]});
        if (set_size(q) != 4 || (q & st.facet_f) != q) return std::nullopt;
        for (int i = 0; i < 4; ++i)
            if (st.lhs[i] != st.rhs[i]) return std::nullopt;
        if (set_contains(st.facet_f, st.lhs[4]) || set_contains(st.facet_f, st.rhs[4]))
            return std::nullopt;
        if (st.rel != 1) return std::nullopt;
    } else if (st.rule == 3) {
        if (!is_facet(st.facet_f) || !is_facet(st.facet_g)) return std::nullopt;
        if ((st.facet_f & st.facet_g) != st.ridge) return std::nullopt;
        int idx = lat.face_index(st.ridge);
        if (idx < 0 || lat.rank[idx] != sphere.d - 1) return std::nullopt;
        VertexSet abc = set_of({st.lhs[0], st.lhs[1], st.lhs[2]});
        if (set_size(abc) != 3 || (abc & st.ridge) != abc) return std::nullopt;
        for (int i = 0; i < 3; ++i)
            if (st.lhs[i] != st.rhs[i]) return std::nullopt;
        if (st.lhs[4] != st.rhs[4]) return std::nullopt;
        int d = st.lhs[3], dp = st.rhs[3], e = st.lhs[4];
        if (!set_contains(st.facet_f, d) || set_contains(st.ridge, d)) return std::nullopt;
        if (!set_contains(st.facet_g, dp) || set_contains(st.ridge, dp)) return std::nullopt;
        if (set_contains(st.facet_f | st.facet_g, e)) return std::nullopt;
        if (st.rel != -1) return std::nullopt;
    } else {
        return std::nullopt;
    }
    return std::make_tuple(chi.tuple_id(m1), chi.tuple_id(m2), st.rel * p1 * p2);
}

bool fail(std::string* diag, const std::string& msg) {
    if (diag) *diag = msg;
    return false;
}

bool verify_rule_conflict(const RuleConflictCertificate& cert, const FacetComplex& sphere,
                          std::string* diag) {
    FaceLattice lat = build_face_poset(sphere);
    PartialChirotope chi(sphere.n);

    int cur = chi.tuple_id(cert.zero_tuple);
    if (cur < 0) return fail(diag, "rule-conflict: bad zero tuple");
    if (cert.from_cycle) {
        // the steps, composed, must negate the starting tuple and then lead
        // to the anchor; verify the accumulated relation when walking
        int node = cur, relacc = 1;
        bool negated = false;
        for (const auto& st : cert.steps) {
            auto eq = replay_step(st, sphere, lat, chi);
            if (!eq) return fail(diag, "rule-conflict: invalid step citation");
            auto [a, b, rel] = *eq;
            if (a == node)
                node = b;
            else if (b == node)
                node = a;
            else
                return fail(diag, "rule-conflict: disconnected step");
            relacc *= rel;
            if (node == cur && relacc == -1) negated = true;
        }
        if (!negated) return fail(diag, "rule-conflict: cycle does not negate");
        auto [am, ap] = sort_tuple(cert.anchor_instance.lhs);
        if (ap == 0 || chi.tuple_id(am) != node)
            return fail(diag, "rule-conflict: chain does not reach the anchor bracket");
    } else {
        // rule-1 zero at the start
        bool found = false;
        for (VertexSet f : sphere.facets)
            if (f == cert.zero_facet && (cert.zero_tuple & f) == cert.zero_tuple) found = true;
        if (!found || set_size(cert.zero_tuple) != 5)
            return fail(diag, "rule-conflict: zero tuple not inside the cited facet");
        int node = cur;
        for (const auto& st : cert.steps) {
            auto eq = replay_step(st, sphere, lat, chi);
            if (!eq) return fail(diag, "rule-conflict: invalid step citation");
            auto [a, b, rel] = *eq;
            if (a == node)
                node = b;
            else if (b == node)
                node = a;
            else
                return fail(diag, "rule-conflict: disconnected step");
        }
        auto [am, ap] = sort_tuple(cert.anchor_instance.lhs);
        if (ap == 0 || chi.tuple_id(am) != node)
            return fail(diag, "rule-conflict: chain does not reach the anchor bracket");
    }
    // the anchor instance must be a genuine rule-3 position (forced nonzero)
    auto eq = replay_step(cert.anchor_instance, sphere, lat, chi);
    if (!eq || cert.anchor_instance.rule != 3)
        return fail(diag, "rule-conflict: anchor instance is not a valid rule-3 citation");
    return true;
}

bool verify_gp_violation(const GPViolationCertificate& cert, const FacetComplex& sphere,
                         std::string* diag) {
    auto derived = derive_partial_chirotope(sphere);
    if (derived.conflict) return fail(diag, "gp: derivation conflicts");
    const auto& chi = derived.chi;
    // the six brackets as re-derived must match the stored signs up to one
    // global flip, and the effective pattern must be impossible
    for (int flip : {1, -1}) {
        bool match = true;
        std::array<int, 3> eff{};
        for (int i = 0; i < 3 && match; ++i) {
            int id1 = cert.triple.term[i].t1, id2 = cert.triple.term[i].t2;
            if (id1 < 0 || id2 < 0 || !chi.known(id1) || !chi.known(id2)) {
                match = false;
                break;
            }
            if (chi.value(id1) != flip * cert.signs[2 * i]) match = false;
            if (chi.value(id2) != flip * cert.signs[2 * i + 1]) match = false;
            int prod = cert.triple.term[i].parity * cert.signs[2 * i] * cert.signs[2 * i + 1];
            eff[i] = (i == 1) ? -prod : prod;
        }
        if (match) {
            if (!violates_gp(eff)) return fail(diag, "gp: stored signs are not a violation");
            // triple must be well formed against the sphere's ground set
            VertexSet all = cert.triple.x;
            for (int v : cert.triple.abcd) all = set_with(all, v);
            if (set_size(all) != 7 || (all & ~full_set(sphere.n)))
                return fail(diag, "gp: malformed triple");
            return true;
        }
    }
    return fail(diag, "gp: stored signs disagree with the re-derived chirotope");
}

bool verify_propagation(const PropagationCertificate& cert, const FacetComplex& sphere,
                        std::string* diag) {
    auto derived = derive_partial_chirotope(sphere);
    if (derived.conflict) return fail(diag, "propagation: derivation conflicts");
    PartialChirotope chi = derived.chi;
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& st = cert.steps[i];
        Deduction d = deduce(st.triple, chi);
        if (!d.fires || d.contradiction)
            return fail(diag, "propagation: step " + std::to_string(i) + " does not fire");
        if (chi.tuple_mask(d.tuple) != st.deduced || d.sign != st.sign)
            return fail(diag, "propagation: step " + std::to_string(i) + " deduces differently");
        chi.assign(d.tuple, d.sign);
    }
    switch (cert.kind) {
        case PropagationCertificate::Kind::CompletedViolation: {
            auto eff = effective_signs(cert.conflict_triple, chi);
            if (!eff || !violates_gp(*eff))
                return fail(diag, "propagation: final triple is not violated");
            return true;
        }
        case PropagationCertificate::Kind::ZeroPartnerForcedNonzero: {
            Deduction d = deduce(cert.conflict_triple, chi);
            if (!d.fires || !d.contradiction)
                return fail(diag, "propagation: final zero-partner conflict does not replay");
            return true;
        }
        case PropagationCertificate::Kind::ValueConflict: {
            Deduction d = deduce(cert.conflict_triple, chi);
            if (!d.fires || d.contradiction)
                return fail(diag, "propagation: conflicting deduction does not fire");
            int id = chi.tuple_id(cert.conflict_tuple);
            if (id < 0 || chi.tuple_mask(d.tuple) != cert.conflict_tuple)
                return fail(diag, "propagation: conflict tuple mismatch");
            if (!chi.known(id) || chi.value(id) == d.sign)
                return fail(diag, "propagation: no conflicting value");
            return true;
        }
    }
    return fail(diag, "propagation: unknown kind");
}

bool verify_bfp(const BiquadraticCertificate& cert, const FacetComplex& sphere,
                std::string* diag) {
    auto derived = derive_partial_chirotope(sphere);
    if (derived.conflict) return fail(diag, "bfp: derivation conflicts");
    auto prop = propagate(derived.chi);
    if (prop.contradiction) return fail(diag, "bfp: propagation contradicts");
    const PartialChirotope& chi = prop.chi;

    // stored chirotope must be exactly the deterministic fixpoint
    size_t known = 0;
    for (const auto& [mask, sign] : cert.chirotope) {
        int id = chi.tuple_id(mask);
        if (id < 0 || !chi.known(id) || chi.value(id) != sign)
            return fail(diag, "bfp: stored chirotope disagrees with the fixpoint");
        ++known;
    }
    if (known != chi.known_count())
        return fail(diag, "bfp: stored chirotope domain differs from the fixpoint");

    if (cert.multipliers.size() != cert.rows.size())
        return fail(diag, "bfp: multiplier count mismatch");

    // each row must be generated by its cited triple under the stored signs
    for (size_t i = 0; i < cert.rows.size(); ++i) {
        const auto& row = cert.rows[i];
        auto eff = effective_signs(row.source, chi);
        if (!eff) return fail(diag, "bfp: row " + std::to_string(i) + " triple not fully known");
        const auto& e = *eff;
        int zero = (e[0] == 0) + (e[1] == 0) + (e[2] == 0);
        auto masks_of = [&](int term) {
            VertexSet a = chi.tuple_mask(row.source.term[term].t1);
            VertexSet b = chi.tuple_mask(row.source.term[term].t2);
            return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
        };
        auto row_l = row.p <= row.q ? std::make_pair(row.p, row.q) : std::make_pair(row.q, row.p);
        auto row_r = row.r <= row.s ? std::make_pair(row.r, row.s) : std::make_pair(row.s, row.r);
        bool ok = false;
        if (row.strict && zero == 0) {
            int outlier = e[0] == e[1] ? 2 : (e[0] == e[2] ? 1 : 0);
            if (masks_of(outlier) == row_l)
                for (int j = 0; j < 3; ++j)
                    if (j != outlier && masks_of(j) == row_r) ok = true;
        } else if (!row.strict && zero == 1) {
            int i1 = e[0] == 0 ? 1 : 0;
            int i2 = e[2] == 0 ? 1 : 2;
            auto m1 = masks_of(i1), m2 = masks_of(i2);
            ok = (m1 == row_l && m2 == row_r) || (m1 == row_r && m2 == row_l);
        }
        if (!ok) return fail(diag, "bfp: row " + std::to_string(i) + " is not generated by its triple");
        if (row.strict && cert.multipliers[i].sgn() < 0)
            return fail(diag, "bfp: negative multiplier on a strict row");
    }

    // the combination must cancel bracket-wise with positive strict mass
    std::map<VertexSet, Rational> combo;
    Rational strict_mass(0);
    for (size_t i = 0; i < cert.rows.size(); ++i) {
        const auto& row = cert.rows[i];
        const Rational& m = cert.multipliers[i];
        combo[row.p] += m;
        combo[row.q] += m;
        combo[row.r] -= m;
        combo[row.s] -= m;
        if (row.strict) strict_mass += m;
    }
    for (const auto& [mask, c] : combo)
        if (!c.is_zero()) return fail(diag, "bfp: multipliers do not cancel");
    if (strict_mass.sgn() <= 0) return fail(diag, "bfp: no strict mass in the combination");
    return true;
}

}  // namespace

bool verify_certificate(const Certificate& cert, const FacetComplex& sphere,
                        std::string* diagnostic) {
    try {
        if (const auto* gp = std::get_if<GPViolationCertificate>(&cert))
            return verify_gp_violation(*gp, sphere, diagnostic);
        if (const auto* pr = std::get_if<PropagationCertificate>(&cert))
            return verify_propagation(*pr, sphere, diagnostic);
        if (const auto* bf = std::get_if<BiquadraticCertificate>(&cert))
            return verify_bfp(*bf, sphere, diagnostic);
        if (const auto* rc = std::get_if<RuleConflictCertificate>(&cert))
            return verify_rule_conflict(*rc, sphere, diagnostic);
    } catch (const std::exception& e) {
        if (diagnostic) *diagnostic = std::string("verification raised: ") + e.what();
        return false;
    }
    return false;
}

PartialChirotope chirotope_of_points(const std::vector<QVec>& points) {
    const int n = static_cast<int>(points.size());
    PartialChirotope chi(n);
    for (int t = 0; t < chi.tuple_count(); ++t) {
        auto vs = set_elements(chi.tuple_mask(t));
        // sign of det of homogenized rows (1, x_v)
        std::vector<std::vector<Rational>> m(5, std::vector<Rational>(5));
        for (int r = 0; r < 5; ++r) {
            const QVec& p = points[vs[r] - 1];
            if (p.size() != 4) throw std::invalid_argument("chirotope_of_points: need Q^4");
            m[r][0] = Rational(1);
            for (int c = 0; c < 4; ++c) m[r][c + 1] = p[c];
        }
        // fraction-free elimination on rationals, tracking the sign
        int sign = 1;
        bool zero = false;
        for (int k = 0; k < 5 && !zero; ++k) {
            int piv = -1;
            for (int r = k; r < 5; ++r)
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                zero = true;
                break;
            }
            if (piv != k) {
                std::swap(m[piv], m[k]);
                sign = -sign;
            }
            for (int r = k + 1; r < 5; ++r) {
                if (m[r][k].is_zero()) continue;
                Rational f = m[r][k] / m[k][k];
                for (int c = k; c < 5; ++c) m[r][c] -= f * m[k][c];
            }
        }
        if (zero) {
            chi.assign(t, 0);
        } else {
            int s = sign;
            for (int k = 0; k < 5; ++k) s *= m[k][k].sgn();
            chi.assign(t, s);
        }
    }
    return chi;
}

}  // namespace polyenum
