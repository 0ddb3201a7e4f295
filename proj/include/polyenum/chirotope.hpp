#pragma once

#include "polyenum/facet_complex.hpp"
#include "polyenum/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polyenum {

/// Partial alternating sign map on the 5-element subsets of {1..n}.
/// Values are stored on sorted tuples; access by ordered tuple applies the
/// permutation parity. Unknown entries are distinct from known zeros.
class PartialChirotope {
public:
    PartialChirotope() = default;
    explicit PartialChirotope(int n);

    int n() const { return n_; }
    int tuple_count() const { return static_cast<int>(tuples_.size()); }

    const std::vector<VertexSet>& tuples() const { return tuples_; }
    VertexSet tuple_mask(int id) const { return tuples_[id]; }
    int tuple_id(VertexSet mask) const;  // -1 when not a 5-subset of {1..n}

    bool known(int id) const { return known_[id] != 0; }
    int value(int id) const { return val_[id]; }  // meaningful only when known
    void assign(int id, int sign);

    /// Sign of the ordered tuple under the alternating convention; 0 for
    /// repeated entries. Returns nullopt when the underlying set is unknown.
    std::optional<int> sign_ordered(const std::array<int, 5>& t) const;

    size_t known_count() const;
    bool complete() const { return known_count() == tuples_.size(); }

private:
    int n_ = 0;
    std::vector<VertexSet> tuples_;
    std::vector<int> id_of_mask_;
    std::vector<std::int8_t> val_;
    std::vector<char> known_;
};

/// Sorts an ordered 5-tuple; returns {mask, parity} or parity 0 on repeats.
std::pair<VertexSet, int> sort_tuple(std::array<int, 5> t);

/// One three-term Grassmann-Pluecker triple: x a 3-subset, (a,b,c,d) a sorted
/// 4-subset of the complement, entering [xab][xcd] - [xac][xbd] + [xad][xbc] = 0.
/// term[i] holds the two sorted-tuple ids and the combined permutation parity
/// relating the ordered brackets to the stored values.
struct GPTriple {
    VertexSet x = 0;
    std::array<int, 4> abcd{};
    struct Term {
        int t1 = 0, t2 = 0;
        int parity = 1;
    };
    std::array<Term, 3> term;

    std::string str() const;
};

/// All GP triples for n elements plus tuple -> triple incidence lists.
class GPTable {
public:
    explicit GPTable(int n, const PartialChirotope& chi);
    const std::vector<GPTriple>& triples() const { return triples_; }
    const std::vector<int>& triples_of(int tuple_id) const { return incidence_[tuple_id]; }

private:
    std::vector<GPTriple> triples_;
    std::vector<std::vector<int>> incidence_;
};

/// Effective signs (+T1, -T2, +T3) of a triple under chi; nullopt when some
/// bracket is unknown.
std::optional<std::array<int, 3>> effective_signs(const GPTriple& t, const PartialChirotope& chi);

/// True iff the sign pattern makes T1 - T2 + T3 = 0 impossible: all three
/// effective signs equal and nonzero, or exactly one zero and the other two
/// equal, or exactly two zero.
bool violates_gp(const std::array<int, 3>& eff);

// --- certificates ------------------------------------------------------

/// One oriented equality chi(lhs) = rel * chi(rhs) cited from rule 2 or 3.
struct RuleStep {
    int rule = 2;  // 2 or 3
    VertexSet facet_f = 0, facet_g = 0, ridge = 0;
    std::array<int, 5> lhs{}, rhs{};
    int rel = 1;  // +1 for rule 2, -1 for rule 3
};

struct RuleConflictCertificate {
    // chain of rule applications carrying a zero (or a self-negation) onto a
    // bracket that rule 3 forces nonzero
    bool from_cycle = false;
    VertexSet zero_facet = 0;     // rule-1 source when !from_cycle
    VertexSet zero_tuple = 0;     // tuple pinned to zero (or negated by the cycle)
    std::vector<RuleStep> steps;  // walks zero_tuple -> anchor tuple
    RuleStep anchor_instance;     // rule-3 instance forcing the end nonzero
};

struct GPViolationCertificate {
    GPTriple triple;
    std::array<std::int8_t, 6> signs{};  // stored-tuple values, term order
};

struct PropagationStep {
    GPTriple triple;
    VertexSet deduced = 0;
    std::int8_t sign = 0;
};

struct PropagationCertificate {
    enum class Kind { ValueConflict, ZeroPartnerForcedNonzero, CompletedViolation };
    Kind kind = Kind::ValueConflict;
    std::vector<PropagationStep> steps;  // deduction list, in order
    GPTriple conflict_triple;
    VertexSet conflict_tuple = 0;  // ValueConflict / ZeroPartnerForcedNonzero
    std::int8_t conflict_sign = 0;
};

struct BfpRow {
    // v_p + v_q (>= or =) v_r + v_s over bracket log-magnitudes
    VertexSet p = 0, q = 0, r = 0, s = 0;
    bool strict = true;
    GPTriple source;
};

struct BiquadraticCertificate {
    std::vector<std::pair<VertexSet, std::int8_t>> chirotope;  // fixpoint values
    std::vector<BfpRow> rows;
    std::vector<Rational> multipliers;  // one per row, >= 0 on strict rows
};

using Certificate = std::variant<GPViolationCertificate, PropagationCertificate,
                                 BiquadraticCertificate, RuleConflictCertificate>;

std::string certificate_kind(const Certificate& cert);  // "gp-violation" etc.

// --- pipeline ----------------------------------------------------------

enum class IterationOrder { Forward, Reverse };

struct DeriveResult {
    PartialChirotope chi;
    std::optional<RuleConflictCertificate> conflict;
};

/// Rules 1-3 to a fixpoint: facet 5-subsets get sign 0, one rule-3 instance
/// anchors the global sign, rules 2 and 3 propagate equalities. Apart from
/// the anchor choice the outcome is forced; inconsistency yields a
/// rule-conflict certificate.
DeriveResult derive_partial_chirotope(const FacetComplex& sphere,
                                      IterationOrder order = IterationOrder::Forward);

std::optional<GPViolationCertificate> check_gp(const PartialChirotope& chi);

struct PropagateResult {
    PartialChirotope chi;  // enlarged domain when no contradiction
    std::optional<PropagationCertificate> contradiction;
};

/// Extends chi through GP triples with a single unknown bracket until no
/// deduction fires; newly completed triples are re-checked against GP.
PropagateResult propagate(const PartialChirotope& chi,
                          IterationOrder order = IterationOrder::Forward);

/// Searches for a biquadratic final polynomial: the log-magnitude system of
/// all fully known GP triples is strictly feasible iff no BFP exists; the
/// Farkas multipliers of the infeasible system are the final polynomial.
std::optional<BiquadraticCertificate> bfp_search(const PartialChirotope& chi);

/// LP stage of bfp_search on explicit rows: maximizes the strict multiplier
/// mass of a cancelling combination; an unbounded ray is the certificate.
std::optional<BiquadraticCertificate> bfp_solve(const PartialChirotope& chi,
                                                std::vector<BfpRow> rows);

struct ClassifyOptions {
    // run the pipeline only up to a stage: 1 = gp, 2 = propagate, 3 = bfp
    int max_stage = 3;
};

struct ClassifyResult {
    enum class Status { CertifiedNonRealizable, Unresolved };
    Status status = Status::Unresolved;
    std::string stage;  // "rule-conflict", "gp", "propagation", "bfp" or "" when unresolved
    std::optional<Certificate> certificate;
    PartialChirotope chi;  // state reached by the pipeline
};

ClassifyResult classify(const FacetComplex& sphere, const ClassifyOptions& opts = {});

/// Independent re-check of a certificate against the sphere it claims to
/// refute; returns false with a diagnostic on any mismatch.
bool verify_certificate(const Certificate& cert, const FacetComplex& sphere,
                        std::string* diagnostic = nullptr);

/// Complete chirotope of explicit points: signs of the 5x5 determinants of
/// homogenized coordinates (1, x).
PartialChirotope chirotope_of_points(const std::vector<QVec>& points);

}  // namespace polyenum
