#include "isys/index_core.hpp"

#include <algorithm>

namespace isys {

std::size_t IndexSystem::add_pair(CompactPair p)
{
    if (p.space() != space_)
        throw SpaceMismatch();
    if (index_.count(p.label))
        throw SystemError("duplicate label '" + p.label + "'");
    index_[p.label] = pairs_.size();
    pairs_.push_back(std::move(p));
    return pairs_.size() - 1;
}

std::size_t IndexSystem::index(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        throw SystemError("dangling label '" + label + "'");
    return it->second;
}

void IndexSystem::add_edge(const std::string& from, const std::string& to)
{
    add_edge(index(from), index(to));
}

void IndexSystem::add_edge(std::size_t from, std::size_t to)
{
    if (from >= pairs_.size() || to >= pairs_.size())
        throw SystemError("edge endpoint out of range");
    edges_.insert({from, to});
}

std::vector<std::size_t> IndexSystem::successors(std::size_t a) const
{
    std::vector<std::size_t> out;
    for (auto it = edges_.lower_bound({a, 0}); it != edges_.end() && it->first == a; ++it)
        out.push_back(it->second);
    return out;
}

std::vector<std::size_t> IndexSystem::predecessors(std::size_t b) const
{
    std::vector<std::size_t> out;
    for (const auto& [a, c] : edges_)
        if (c == b)
            out.push_back(a);
    return out;
}

std::vector<std::size_t> IndexSystem::indices(const std::vector<std::string>& word) const
{
    std::vector<std::size_t> out;
    for (const auto& l : word)
        out.push_back(index(l));
    return out;
}

long IndexSystem::first_bad_transition(const std::vector<std::size_t>& word) const
{
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (!has_edge(word[i], word[i + 1]))
            return static_cast<long>(i);
    return -1;
}

// ---------------------------------------------------------------------------

namespace {

Interval universe_for(const RegionSet& a, const RegionSet& b)
{
    Scalar lo = 0, hi = 0;
    bool first = true;
    for (const RegionSet* r : {&a, &b})
        for (const auto& c : r->cells()) {
            if (first || c.lo < lo)
                lo = c.lo;
            if (first || c.hi > hi)
                hi = c.hi;
            first = false;
        }
    return {lo - 1, hi + 1};
}

}  // namespace

RegionSet exit_set(const CompactPair& pa, const RegionSet& nb, const PLMap& f)
{
    if (pa.N.empty())
        return pa.N;
    RegionSet fn = image(f, pa.N);
    RegionSet outside = interior_complement(nb, universe_for(fn, nb));
    return intersect(pa.N, preimage(f, outside));
}

PrecedesResult check_precedes(const CompactPair& pa, const CompactPair& pb, const PLMap& f)
{
    PrecedesResult r;
    RegionSet core_a = pair_core(pa);
    RegionSet core_b = pair_core(pb);

    r.exit_ok = subset_of_interior(image(f, core_a), pb.N);
    r.exit_witness = r.exit_ok ? RegionSet(pa.space()) : intersect(core_a, exit_set(pa, pb.N, f));

    r.image_witness = intersect(image(f, pa.L), core_b);
    r.image_ok = r.image_witness.empty();

    r.holds = r.exit_ok && r.image_ok;
    return r;
}

ChainResult check_chain_isolation(const IndexSystem& s, const PLMap& f)
{
    std::vector<RegionSet> cores;
    for (const auto& p : s.pairs())
        cores.push_back(pair_core(p));

    ChainResult out;
    for (const auto& [a, b] : s.edges()) {
        ChainEdgeResult e{a, b, true, RegionSet(s.space())};
        RegionSet x = intersect(cores[a], preimage(f, cores[b]));
        if (!subset_of_interior(x, cores[a])) {
            e.ok = false;
            e.witness = intersect(x, interior_complement(cores[a], universe_for(x, cores[a])));
            out.holds = false;
        }
        out.edges.push_back(std::move(e));
    }
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Verified:
        return "VERIFIED";
    case Verdict::Failed:
        return "FAILED";
    case Verdict::Undecided:
        return "UNDECIDED";
    }
    return "?";
}

VerificationReport verify(const IndexSystem& s, const PLMap& f)
{
    if (s.space() != f.space())
        throw SpaceMismatch();
    for (std::size_t a = 0; a < s.size(); ++a)
        if (s.successors(a).empty())
            throw SystemError("pair '" + s.pair(a).label + "' has no outgoing edge");

    VerificationReport rep;
    ChainResult chain = check_chain_isolation(s, f);
    bool precedes_ok = true;
    std::size_t i = 0;
    for (const auto& [a, b] : s.edges()) {
        EdgeReport e;
        e.from = a;
        e.to = b;
        e.precedes = check_precedes(s.pair(a), s.pair(b), f);
        e.chain_ok = chain.edges[i].ok;
        e.chain_witness = chain.edges[i].witness;
        ++i;
        const std::string tag = s.pair(a).label + " -> " + s.pair(b).label;
        if (!e.precedes.exit_ok) {
            precedes_ok = false;
            rep.failures.push_back(tag + ": condition 1(a) fails, core points leaving Int N_b: " +
                                   to_string(e.precedes.exit_witness));
        }
        if (!e.precedes.image_ok) {
            precedes_ok = false;
            rep.failures.push_back(tag + ": condition 1(b) fails, f(L_a) meets core_b in " +
                                   to_string(e.precedes.image_witness));
        }
        if (!e.chain_ok)
            rep.failures.push_back(tag + ": chain criterion inconclusive, boundary witness " +
                                   to_string(e.chain_witness));
        rep.edges.push_back(std::move(e));
    }
    for (const auto& p : s.pairs())
        if (pair_core(p).empty())
            rep.notes.push_back("pair '" + p.label + "' has an empty core");

    if (!precedes_ok)
        rep.verdict = Verdict::Failed;
    else if (!chain.holds)
        rep.verdict = Verdict::Undecided;
    else
        rep.verdict = Verdict::Verified;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct InvState {
    std::vector<RegionSet> cores, backward, forward;
};

InvState inv_start(const IndexSystem& s)
{
    InvState st;
    for (const auto& p : s.pairs())
        st.cores.push_back(pair_core(p));
    st.backward = st.cores;
    st.forward = st.cores;
    return st;
}

void inv_step(InvState& st, const IndexSystem& s, const PLMap& f)
{
    const std::size_t n = s.size();
    std::vector<RegionSet> img(n), pre(n);
    for (std::size_t a = 0; a < n; ++a) {
        img[a] = image(f, st.backward[a]);
        pre[a] = preimage(f, st.forward[a]);
    }
    std::vector<RegionSet> back(n, RegionSet(s.space())), fwd(n, RegionSet(s.space()));
    for (const auto& [a, b] : s.edges()) {
        back[b] = unite(back[b], img[a]);
        fwd[a] = unite(fwd[a], pre[b]);
    }
    for (std::size_t a = 0; a < n; ++a) {
        st.backward[a] = intersect(st.cores[a], back[a]);
        st.forward[a] = intersect(st.cores[a], fwd[a]);
    }
}

std::vector<RegionSet> inv_result(const InvState& st)
{
    std::vector<RegionSet> out;
    for (std::size_t a = 0; a < st.cores.size(); ++a)
        out.push_back(intersect(st.backward[a], st.forward[a]));
    return out;
}

}  // namespace

std::vector<RegionSet> inv_m(const IndexSystem& s, const PLMap& f, int m)
{
    if (m < 0)
        throw std::invalid_argument("inv_m needs m >= 0");
    InvState st = inv_start(s);
    for (int k = 0; k < m; ++k)
        inv_step(st, s, f);
    return inv_result(st);
}

InvLimit inv_limit(const IndexSystem& s, const PLMap& f, int cap)
{
    InvState st = inv_start(s);
    InvLimit out;
    out.sets = inv_result(st);
    for (int k = 0; k < cap; ++k) {
        auto prev_b = st.backward;
        auto prev_f = st.forward;
        inv_step(st, s, f);
        out.rounds = k + 1;
        out.sets = inv_result(st);
        if (st.backward == prev_b && st.forward == prev_f) {
            out.stabilized = true;
            break;
        }
    }
    return out;
}

RegionSet word_core(const IndexSystem& s, const PLMap& f, const std::vector<std::size_t>& word)
{
    if (word.empty())
        throw std::invalid_argument("empty word");
    if (long bad = s.first_bad_transition(word); bad >= 0)
        throw SystemError("word is not allowable at position " + std::to_string(bad));
    RegionSet x = pair_core(s.pair(word.back()));
    for (std::size_t i = word.size() - 1; i-- > 0;)
        x = intersect(pair_core(s.pair(word[i])), preimage(f, x));
    return x;
}

RegionSet word_invariant_core(const IndexSystem& s, const PLMap& f, const std::vector<std::size_t>& word, int rounds)
{
    RegionSet x = word_core(s, f, word);
    const int p = static_cast<int>(word.size());
    for (int r = 0; r < rounds && !x.empty(); ++r) {
        RegionSet back = x;
        for (int i = 0; i < p; ++i)
            back = preimage(f, back);
        RegionSet next = intersect(intersect(x, image_power(f, x, p)), back);
        if (next == x)
            break;
        x = std::move(next);
    }
    return x;
}

}  // namespace isys
