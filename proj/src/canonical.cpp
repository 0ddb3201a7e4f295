#include "polyenum/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyenum {

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Nodes 0..n-1 are vertices, n..n+m-1 are facets. Cells never mix the two
// sides because the initial partition separates them and refinement only
// splits cells.
struct Labeler {
    int n = 0, m = 0;
    std::vector<std::uint64_t> vert_adj;  // facet-index mask per vertex
    std::vector<VertexSet> facet_adj;     // vertex mask per facet

    std::vector<std::uint16_t> best_rows;
    bool have_best = false;

    using Partition = std::vector<std::vector<int>>;

    int degree_into(int node, const std::vector<int>& cell) const {
        int deg = 0;
        if (node < n) {
            for (int c : cell)
                if (c >= n && (vert_adj[node] >> (c - n)) & 1ull) ++deg;
        } else {
            for (int c : cell)
                if (c < n && set_contains(facet_adj[node - n], c + 1)) ++deg;
        }
        return deg;
    }

    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t s = 0; s < cells.size() && !changed; ++s) {
                for (size_t t = 0; t < cells.size(); ++t) {
                    auto& target = cells[t];
                    if (target.size() < 2) continue;
                    int d0 = degree_into(target[0], cells[s]);
                    bool uniform = true;
                    for (int u : target)
                        if (degree_into(u, cells[s]) != d0) {
                            uniform = false;
                            break;
                        }
                    if (uniform) continue;
                    // split: stable-sort members by degree, group ascending
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(target.size());
                    for (int u : target) keyed.emplace_back(degree_into(u, cells[s]), u);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    Partition pieces;
                    for (auto& [deg, u] : keyed) {
                        if (pieces.empty() || degree_into(pieces.back()[0], cells[s]) != deg)
                            pieces.push_back({u});
                        else
                            pieces.back().push_back(u);
                    }
                    cells.erase(cells.begin() + t);
                    cells.insert(cells.begin() + t, pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void leaf(const Partition& cells) {
        // New vertex labels by order of appearance on the vertex side.
        std::vector<int> vlabel(n, 0);
        int next = 1;
        for (const auto& cell : cells)
            for (int u : cell)
                if (u < n) vlabel[u] = next++;
        std::vector<std::uint16_t> rows;
        rows.reserve(m);
        for (int f = 0; f < m; ++f) {
            std::uint16_t row = 0;
            for (int v : set_elements(facet_adj[f])) row |= std::uint16_t(1u << (vlabel[v - 1] - 1));
            rows.push_back(row);
        }
        std::sort(rows.begin(), rows.end());
        if (!have_best || rows < best_rows) {
            best_rows = std::move(rows);
            have_best = true;
        }
    }

    void search(Partition cells) {
        refine(cells);
        int target = -1;
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() >= 2 && (target < 0 || cells[i].size() < cells[target].size())) {
                target = static_cast<int>(i);
            }
        if (target < 0) {
            leaf(cells);
            return;
        }
        for (int w : cells[target]) {
            Partition child = cells;
            std::vector<int> rest;
            for (int u : cells[target])
                if (u != w) rest.push_back(u);
            child[target] = {w};
            child.insert(child.begin() + target + 1, std::move(rest));
            search(std::move(child));
        }
    }
};

}  // namespace

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

CanonicalKey CanonicalKey::from_bytes(std::string bytes) {
    CanonicalKey k;
    k.digest = fnv1a(bytes);
    k.bytes = std::move(bytes);
    return k;
}

CanonicalKey CanonicalKey::from_hex(const std::string& hex) {
    if (hex.size() % 2) throw std::invalid_argument("canonical key: odd hex length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("canonical key: bad hex digit");
    };
    std::string bytes;
    bytes.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2)
        bytes += static_cast<char>(nib(hex[i]) << 4 | nib(hex[i + 1]));
    return from_bytes(std::move(bytes));
}

static std::vector<std::uint16_t> canonical_rows(const FacetComplex& complex) {
    const int n = complex.n;
    const int m = static_cast<int>(complex.facets.size());
    if (m == 0) throw std::invalid_argument("canonical_key: empty complex");
    if (m > 64) throw std::invalid_argument("canonical_key: more than 64 facets");

    Labeler lab;
    lab.n = n;
    lab.m = m;
    lab.facet_adj = complex.facets;
    lab.vert_adj.assign(n, 0);
    for (int f = 0; f < m; ++f)
        for (int v : set_elements(complex.facets[f])) lab.vert_adj[v - 1] |= 1ull << f;

    Labeler::Partition start(2);
    for (int v = 0; v < n; ++v) start[0].push_back(v);
    for (int f = 0; f < m; ++f) start[1].push_back(n + f);
    if (start[0].empty() || start[1].empty())
        throw std::invalid_argument("canonical_key: empty side");
    lab.search(std::move(start));
    return lab.best_rows;
}

CanonicalKey canonical_key(const FacetComplex& complex) {
    auto rows = canonical_rows(complex);
    std::string bytes;
    bytes.reserve(2 + rows.size() * 2);
    bytes += static_cast<char>(complex.n);
    bytes += static_cast<char>(rows.size());
    for (std::uint16_t r : rows) {
        bytes += static_cast<char>(r & 0xff);
        bytes += static_cast<char>(r >> 8);
    }
    return CanonicalKey::from_bytes(std::move(bytes));
}

FacetComplex canonical_form(const FacetComplex& complex) {
    auto rows = canonical_rows(complex);
    std::vector<VertexSet> facets(rows.begin(), rows.end());
    return FacetComplex::make(complex.n, std::move(facets), complex.d);
}

}  // namespace polyenum
