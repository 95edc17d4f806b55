/**
 * Index systems: finite families of compact pairs linked by the "precedes"
 * relation. Verification of the defining conditions, exit sets, the Inv^m
 * enclosures and word cores.
 */
#ifndef ISYS_INDEX_CORE_HPP
#define ISYS_INDEX_CORE_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isys/dynamics.hpp"
#include "isys/geometry.hpp"

namespace isys {

class SystemError : public std::invalid_argument {
public:
    explicit SystemError(const std::string& what) : std::invalid_argument(what) {}
};

/// Labeled compact pairs plus the directed edge relation a -> b ("P_a precedes P_b").
class IndexSystem {
public:
    IndexSystem() = default;
    explicit IndexSystem(Space space) : space_(space) {}

    /// Adds a pair; labels must be unique and spaces consistent.
    std::size_t add_pair(CompactPair p);
    void add_edge(const std::string& from, const std::string& to);
    void add_edge(std::size_t from, std::size_t to);

    Space space() const { return space_; }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<CompactPair>& pairs() const { return pairs_; }
    const CompactPair& pair(std::size_t i) const { return pairs_.at(i); }
    const CompactPair& pair(const std::string& label) const { return pairs_.at(index(label)); }
    std::size_t index(const std::string& label) const;
    bool has_label(const std::string& label) const { return index_.count(label) != 0; }
    const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    bool has_edge(std::size_t a, std::size_t b) const { return edges_.count({a, b}) != 0; }
    std::vector<std::size_t> successors(std::size_t a) const;
    std::vector<std::size_t> predecessors(std::size_t b) const;

    /// Indices for a label word; throws SystemError on unknown labels.
    std::vector<std::size_t> indices(const std::vector<std::string>& word) const;
    /// Index of the first non-edge transition in the word, or -1.
    long first_bad_transition(const std::vector<std::size_t>& word) const;

    friend bool operator==(const IndexSystem&, const IndexSystem&) = default;

private:
    Space space_ = Space::Line;
    std::vector<CompactPair> pairs_;
    std::map<std::string, std::size_t> index_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// N_a intersected with f^{-1}(X \ Int N_b).
RegionSet exit_set(const CompactPair& pa, const RegionSet& nb, const PLMap& f);

struct PrecedesResult {
    bool holds = false;
    bool exit_ok = false;         // f(core_a) inside Int N_b
    bool image_ok = false;        // f(L_a) misses core_b
    RegionSet exit_witness;       // core_a points leaving Int N_b
    RegionSet image_witness;      // f(L_a) cap core_b
};

PrecedesResult check_precedes(const CompactPair& pa, const CompactPair& pb, const PLMap& f);

struct ChainEdgeResult {
    std::size_t from = 0, to = 0;
    bool ok = false;
    RegionSet witness;  // part of I_a cap f^{-1}(I_b) on the boundary of I_a
};

struct ChainResult {
    bool holds = true;
    std::vector<ChainEdgeResult> edges;
};

/// Sufficient chain criterion I_a cap f^{-1}(I_b) inside Int I_a on every edge.
ChainResult check_chain_isolation(const IndexSystem& s, const PLMap& f);

enum class Verdict { Verified, Failed, Undecided };
std::string to_string(Verdict v);

struct EdgeReport {
    std::size_t from = 0, to = 0;
    PrecedesResult precedes;
    bool chain_ok = false;
    RegionSet chain_witness;
};

struct VerificationReport {
    Verdict verdict = Verdict::Failed;
    std::vector<EdgeReport> edges;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // e.g. degenerate pairs with empty core
};

/// Runs every check. Throws SystemError for structural defects (vertices
/// without outgoing edges).
VerificationReport verify(const IndexSystem& s, const PLMap& f);

/// Inv^m enclosure per label: points of I_a admitting an orbit segment of
/// length 2m+1 through the edge graph centred at a.
std::vector<RegionSet> inv_m(const IndexSystem& s, const PLMap& f, int m);

/// Iterates inv_m until the sets stop changing or `cap` rounds are reached.
struct InvLimit {
    std::vector<RegionSet> sets;
    int rounds = 0;
    bool stabilized = false;
};
InvLimit inv_limit(const IndexSystem& s, const PLMap& f, int cap = 64);

/// Intersection over i of f^{-i}(I_{w_i}) for an allowable word w.
RegionSet word_core(const IndexSystem& s, const PLMap& f, const std::vector<std::size_t>& word);

/// word_core refined towards Inv(., f^{|w|}) by `rounds` forward/backward passes.
RegionSet word_invariant_core(const IndexSystem& s, const PLMap& f, const std::vector<std::size_t>& word, int rounds);

}  // namespace isys

#endif
