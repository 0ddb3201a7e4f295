#pragma once

#include "polyenum/facet_complex.hpp"

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace polyenum {

/// Relabeling-invariant key of a vertex-facet incidence structure.
///
/// Two complexes get equal keys iff some vertex relabeling carries one facet
/// set to the other. The byte string is the canonically relabeled facet list
/// (sorted bitset rows); equality is exact on the bytes, the 64-bit digest
/// only speeds up hash tables.
struct CanonicalKey {
    std::string bytes;
    std::uint64_t digest = 0;

    bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
    bool operator!=(const CanonicalKey& o) const { return bytes != o.bytes; }
    bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }

    std::string hex() const;
    static CanonicalKey from_bytes(std::string bytes);
    static CanonicalKey from_hex(const std::string& hex);
};

struct CanonicalKeyHash {
    size_t operator()(const CanonicalKey& k) const { return k.digest; }
};

/// Canonical labeling of the 2-colored bipartite vertex-facet incidence
/// graph: iterated equitable partition refinement with individualization
/// backtracking; the certificate is minimized over all discrete partitions.
CanonicalKey canonical_key(const FacetComplex& complex);

/// The relabeled complex realizing the canonical key (facets of the key's
/// rows, same n). Useful for emitting canonical representatives.
FacetComplex canonical_form(const FacetComplex& complex);

/// Key-addressed store with insert-if-absent semantics.
template <class Payload>
class Registry {
public:
    using Map = std::unordered_map<CanonicalKey, Payload, CanonicalKeyHash>;

    /// True iff the key was new; the payload is stored only in that case.
    bool insert_if_new(const CanonicalKey& key, Payload payload) {
        return map_.emplace(key, std::move(payload)).second;
    }

    bool contains(const CanonicalKey& key) const { return map_.count(key) > 0; }
    const Payload* find(const CanonicalKey& key) const {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }
    Payload* find(const CanonicalKey& key) {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }

    /// Replaces the stored payload when the key exists and `better` says the
    /// new one wins; inserts when absent. Returns true when stored.
    template <class Better>
    bool insert_or_replace(const CanonicalKey& key, Payload payload, Better better) {
        auto [it, fresh] = map_.emplace(key, payload);
        if (fresh) return true;
        if (better(payload, it->second)) {
            it->second = std::move(payload);
            return true;
        }
        return false;
    }

    /// Key-set union; on collision the receiver's payload is kept unless
    /// `better` prefers the incoming one.
    template <class Better>
    void merge_from(Registry&& other, Better better) {
        for (auto& [k, p] : other.map_) insert_or_replace(k, std::move(p), better);
    }
    void merge_from(Registry&& other) {
        merge_from(std::move(other), [](const Payload&, const Payload&) { return false; });
    }

    size_t size() const { return map_.size(); }
    const Map& entries() const { return map_; }

private:
    Map map_;
};

/// Internally synchronized insert-if-absent over a shared registry, for
/// callers that prefer a single store to sharding.
template <class Payload>
class SynchronizedRegistry {
public:
    bool insert_if_new(const CanonicalKey& key, Payload payload) {
        std::lock_guard<std::mutex> lock(mu_);
        return reg_.insert_if_new(key, std::move(payload));
    }
    bool contains(const CanonicalKey& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        return reg_.contains(key);
    }
    Registry<Payload> take() {
        std::lock_guard<std::mutex> lock(mu_);
        return std::move(reg_);
    }

private:
    mutable std::mutex mu_;
    Registry<Payload> reg_;
};

using KeySet = std::unordered_map<CanonicalKey, char, CanonicalKeyHash>;

}  // namespace polyenum
