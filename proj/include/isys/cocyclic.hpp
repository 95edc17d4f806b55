/**
 * The cocyclic subshift generated by an index system: a graph whose vertices
 * carry H_*(P_a) and whose edges carry the induced maps. Word admissibility,
 * bounded emptiness, periodic words, and entropy lower bounds.
 *
 * A product of graded maps counts as nonzero when it is nonzero in at least
 * one degree.
 */
#ifndef ISYS_COCYCLIC_HPP
#define ISYS_COCYCLIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isys/homology.hpp"
#include "isys/index_core.hpp"

namespace isys {

using Word = std::vector<std::size_t>;

class HomGraph {
public:
    HomGraph() = default;
    explicit HomGraph(Space space) : space_(space) {}

    std::size_t add_vertex(std::string label, GradedSpace space, RegionSet core);
    /// Shapes must match the endpoint spaces in every degree.
    void add_edge(std::size_t a, std::size_t b, InducedMap m);

    Space space() const { return space_; }
    std::size_t size() const { return labels_.size(); }
    std::size_t degrees() const { return 2; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index(const std::string& label) const;
    const GradedSpace& vertex_space(std::size_t i) const { return spaces_.at(i); }
    const RegionSet& core(std::size_t i) const { return cores_.at(i); }
    const std::map<std::pair<std::size_t, std::size_t>, InducedMap>& edges() const { return edges_; }
    bool has_edge(std::size_t a, std::size_t b) const { return edges_.count({a, b}) != 0; }
    const InducedMap& edge(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> successors(std::size_t a) const;

    Word word(const std::vector<std::string>& labels) const;
    std::string format(const Word& w) const;

private:
    Space space_ = Space::Line;
    std::vector<std::string> labels_;
    std::vector<GradedSpace> spaces_;
    std::vector<RegionSet> cores_;
    std::map<std::pair<std::size_t, std::size_t>, InducedMap> edges_;
};

/// Homology graph of a system whose edges all satisfy the precedes
/// conditions. Throws PrecedesViolation or UndecidedCrossing otherwise.
HomGraph hom_graph(const IndexSystem& s, const PLMap& f);

bool allowable(const HomGraph& g, const Word& w);

/// Product along the path, one matrix per degree. A one-letter word gives
/// the identity. Throws SystemError on a non-allowable word.
std::vector<Matrix> word_product(const HomGraph& g, const Word& w);
Matrix word_product(const HomGraph& g, const Word& w, std::size_t degree);

bool graded_nonzero(const std::vector<Matrix>& ms);

struct WordCheck {
    bool allowed = false;
    long bad_transition = -1;                      // first non-edge, or -1
    std::optional<std::pair<std::size_t, std::size_t>> zero_span;  // shortest [i, j] with zero product
};

WordCheck check_word(const HomGraph& g, const Word& w);
bool word_allowed(const HomGraph& g, const Word& w);

/// The cycle w_0 -> ... -> w_{n-1} -> w_0 has a non-nilpotent product in
/// some degree (M^d != 0 with d the dimension).
bool periodic_allowed(const HomGraph& g, const Word& cycle);
std::vector<Matrix> cycle_product(const HomGraph& g, const Word& cycle);

struct EmptinessResult {
    bool empty = true;
    std::size_t bound = 0;
    std::optional<Word> survivor;
    std::size_t states = 0;  // distinct states expanded in the last layer
};

/// Decides whether every allowable word of length `bound` has zero product.
EmptinessResult empty_up_to(const HomGraph& g, std::size_t bound);

bool distinguishable(const HomGraph& g, const Word& a, const Word& b);

/// log(count) / power, kept exact for reporting.
struct EntropyBound {
    std::uint64_t count = 1;
    unsigned power = 1;

    double value() const;
    std::string describe() const;
};

struct ShiftFactor {
    bool valid = false;
    unsigned power = 0;
    std::vector<Word> words;
    EntropyBound bound;
    std::string failure;
};

/// Checks that f^n on the union of the word cores factors onto the full shift
/// over `words`.
ShiftFactor shift_factor(const HomGraph& g, unsigned n, const std::vector<Word>& words);

struct Subgraph {
    std::vector<std::size_t> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Largest vertex set with pairwise-disjoint cores (exhaustive up to 16
/// vertices, greedy beyond) together with the induced edges.
Subgraph disjoint_subgraph(const HomGraph& g);

struct EdgeShiftFactor {
    bool valid = false;
    Subgraph graph;             // essential part of the requested subgraph
    std::size_t degree = 0;     // degree in which every edge map is invertible
    EntropyBound bound;
    std::string failure;
};

/// Edge-shift factor on a vertex set with pairwise-disjoint cores whose edge
/// maps are invertible in one degree: every path is then a word.
EdgeShiftFactor edge_shift_factor(const HomGraph& g, const std::vector<std::size_t>& vertices);

struct EventuallyPeriodic {
    Word prefix;
    Word cycle;
};

struct OrbitCertificate {
    bool certified = false;
    std::vector<Matrix> cycle_product;
    std::vector<Matrix> prefix_product;
    std::string reason;
};

/// Certificate for an orbit following the word. A zero product yields
/// certified = false with a reason; that is not a proof of absence.
OrbitCertificate detect_orbit(const HomGraph& g, const EventuallyPeriodic& w);

/// Elementary cycles of length at most `cap`, each listed once starting at its
/// smallest vertex. Stops after `max_count` cycles.
std::vector<Word> elementary_cycles(const HomGraph& g, std::size_t cap = 12, std::size_t max_count = 100000);

struct CycleSummary {
    Word cycle;
    bool allowed = false;
};

struct EntropyCandidate {
    std::string method;
    EntropyBound bound;
    std::vector<Word> words;
};

struct AnalysisOptions {
    std::size_t empty_bound = 3;
    std::size_t cycle_cap = 12;
    unsigned max_power = 3;
    std::size_t max_candidates = 128;
};

struct Analysis {
    EmptinessResult emptiness;
    std::vector<CycleSummary> cycles;
    Subgraph disjoint;
    std::optional<EntropyCandidate> entropy;
};

Analysis analyze(const HomGraph& g, const AnalysisOptions& opt = {});

}  // namespace isys

#endif
