#include "isys/cocyclic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace isys {

std::size_t HomGraph::add_vertex(std::string label, GradedSpace space, RegionSet core)
{
    for (const auto& l : labels_)
        if (l == label)
            throw SystemError("duplicate label '" + label + "'");
    labels_.push_back(std::move(label));
    spaces_.push_back(std::move(space));
    cores_.push_back(std::move(core));
    return labels_.size() - 1;
}

void HomGraph::add_edge(std::size_t a, std::size_t b, InducedMap m)
{
    if (a >= size() || b >= size())
        throw SystemError("edge endpoint out of range");
    if (m.by_degree.size() != degrees())
        throw std::invalid_argument("induced map needs one matrix per degree");
    for (std::size_t k = 0; k < degrees(); ++k) {
        const Matrix& t = m.by_degree[k];
        if (t.rows() != spaces_[b].dim(k) || t.cols() != spaces_[a].dim(k))
            throw std::invalid_argument("matrix for " + labels_[a] + " -> " + labels_[b] + " in degree " +
                                        std::to_string(k) + " has the wrong shape");
    }
    edges_[{a, b}] = std::move(m);
}

std::size_t HomGraph::index(const std::string& label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    throw SystemError("unknown label '" + label + "'");
}

const InducedMap& HomGraph::edge(std::size_t a, std::size_t b) const
{
    auto it = edges_.find({a, b});
    if (it == edges_.end())
        throw SystemError("no edge " + label(a) + " -> " + label(b));
    return it->second;
}

std::vector<std::size_t> HomGraph::successors(std::size_t a) const
{
    std::vector<std::size_t> out;
    for (auto it = edges_.lower_bound({a, 0}); it != edges_.end() && it->first.first == a; ++it)
        out.push_back(it->first.second);
    return out;
}

Word HomGraph::word(const std::vector<std::string>& labels) const
{
    Word w;
    for (const auto& l : labels)
        w.push_back(index(l));
    return w;
}

std::string HomGraph::format(const Word& w) const
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + label(w[i]);
    return s + ")";
}

HomGraph hom_graph(const IndexSystem& s, const PLMap& f)
{
    HomGraph g(s.space());
    for (const auto& p : s.pairs())
        g.add_vertex(p.label, pair_homology(p).space, pair_core(p));
    for (const auto& [a, b] : s.edges())
        g.add_edge(a, b, induced_map(s.pair(a), s.pair(b), f));
    return g;
}

// ---------------------------------------------------------------------------

bool allowable(const HomGraph& g, const Word& w)
{
    for (auto v : w)
        if (v >= g.size())
            return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!g.has_edge(w[i], w[i + 1]))
            return false;
    return true;
}

namespace {

std::vector<Matrix> identities(const HomGraph& g, std::size_t v)
{
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < g.degrees(); ++k)
        out.push_back(Matrix::identity(g.vertex_space(v).dim(k)));
    return out;
}

void apply_edge(const HomGraph& g, std::size_t a, std::size_t b, std::vector<Matrix>& acc)
{
    const InducedMap& m = g.edge(a, b);
    for (std::size_t k = 0; k < acc.size(); ++k)
        acc[k] = m.by_degree[k] * acc[k];
}

std::vector<Matrix> normalized(const std::vector<Matrix>& ms)
{
    std::vector<Matrix> out;
    for (const auto& m : ms)
        out.push_back(m.scaled_canonical());
    return out;
}

}  // namespace

std::vector<Matrix> word_product(const HomGraph& g, const Word& w)
{
    if (w.empty())
        throw std::invalid_argument("empty word");
    if (!allowable(g, w))
        throw SystemError("word " + g.format(w) + " is not allowable");
    std::vector<Matrix> acc = identities(g, w[0]);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        apply_edge(g, w[i], w[i + 1], acc);
    return acc;
}

Matrix word_product(const HomGraph& g, const Word& w, std::size_t degree)
{
    return word_product(g, w).at(degree);
}

bool graded_nonzero(const std::vector<Matrix>& ms)
{
    for (const auto& m : ms)
        if (!m.is_zero())
            return true;
    return false;
}

WordCheck check_word(const HomGraph& g, const Word& w)
{
    WordCheck r;
    if (w.empty())
        return r;
    for (auto v : w)
        if (v >= g.size())
            throw SystemError("vertex index out of range");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!g.has_edge(w[i], w[i + 1])) {
            r.bad_transition = static_cast<long>(i);
            return r;
        }
    if (graded_nonzero(word_product(g, w))) {
        r.allowed = true;
        return r;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<Matrix> acc = identities(g, w[i]);
        for (std::size_t j = i; j < w.size(); ++j) {
            if (j > i)
                apply_edge(g, w[j - 1], w[j], acc);
            if (!graded_nonzero(acc)) {
                if (!r.zero_span || j - i < r.zero_span->second - r.zero_span->first)
                    r.zero_span = std::make_pair(i, j);
                break;
            }
        }
    }
    return r;
}

bool word_allowed(const HomGraph& g, const Word& w)
{
    return check_word(g, w).allowed;
}

std::vector<Matrix> cycle_product(const HomGraph& g, const Word& cycle)
{
    if (cycle.empty())
        throw std::invalid_argument("empty cycle");
    Word closed = cycle;
    closed.push_back(cycle.front());
    return word_product(g, closed);
}

bool periodic_allowed(const HomGraph& g, const Word& cycle)
{
    if (!allowable(g, cycle) || !g.has_edge(cycle.back(), cycle.front()))
        return false;
    std::vector<Matrix> ms = cycle_product(g, cycle);
    for (const auto& m : ms)
        if (m.rows() > 0 && !m.pow(static_cast<unsigned>(m.rows())).is_zero())
            return true;
    return false;
}

EmptinessResult empty_up_to(const HomGraph& g, std::size_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("length bound must be positive");
    using State = std::pair<std::size_t, std::vector<Matrix>>;
    std::map<State, Word> layer;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!g.vertex_space(v).is_zero())
            layer.emplace(State{v, identities(g, v)}, Word{v});

    for (std::size_t len = 1; len < bound && !layer.empty(); ++len) {
        std::map<State, Word> next;
        for (const auto& [state, word] : layer) {
            for (auto b : g.successors(state.first)) {
                std::vector<Matrix> acc = state.second;
                apply_edge(g, state.first, b, acc);
                if (!graded_nonzero(acc))
                    continue;
                State key{b, normalized(acc)};
                if (!next.count(key)) {
                    Word w = word;
                    w.push_back(b);
                    next.emplace(std::move(key), std::move(w));
                }
            }
        }
        layer = std::move(next);
    }

    EmptinessResult r;
    r.bound = bound;
    r.states = layer.size();
    r.empty = layer.empty();
    if (!r.empty)
        r.survivor = layer.begin()->second;
    return r;
}

bool distinguishable(const HomGraph& g, const Word& a, const Word& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("words of different length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (disjoint(g.core(a[i]), g.core(b[i])))
            return true;
    return false;
}

// ---------------------------------------------------------------------------

double EntropyBound::value() const
{
    return std::log(static_cast<double>(count)) / static_cast<double>(power);
}

std::string EntropyBound::describe() const
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value());
    return "log(" + std::to_string(count) + ")/" + std::to_string(power) + " = " + buf;
}

namespace {

Word concat(const Word& a, const Word& b)
{
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

bool concatenation_ok(const HomGraph& g, const Word& a, const Word& b)
{
    Word w = concat(a, b);
    return allowable(g, w) && word_allowed(g, w);
}

}  // namespace

ShiftFactor shift_factor(const HomGraph& g, unsigned n, const std::vector<Word>& words)
{
    ShiftFactor r;
    r.power = n;
    r.words = words;
    if (n == 0 || words.empty()) {
        r.failure = "need a positive power and at least one word";
        return r;
    }
    for (const auto& w : words) {
        if (w.size() != n) {
            r.failure = "word " + g.format(w) + " does not have length " + std::to_string(n);
            return r;
        }
        if (!allowable(g, w)) {
            r.failure = "word " + g.format(w) + " is not allowable";
            return r;
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i < j && !distinguishable(g, words[i], words[j])) {
                r.failure = "words " + g.format(words[i]) + " and " + g.format(words[j]) + " are not distinguishable";
                return r;
            }
            if (!concatenation_ok(g, words[i], words[j])) {
                r.failure = "concatenation " + g.format(concat(words[i], words[j])) + " is not a word of the subshift";
                return r;
            }
        }
    r.valid = true;
    r.bound = {static_cast<std::uint64_t>(words.size()), n};
    return r;
}

Subgraph disjoint_subgraph(const HomGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::vector<bool>> apart(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            apart[i][j] = i != j && disjoint(g.core(i), g.core(j));

    Subgraph out;
    if (n <= 16) {
        std::uint32_t best = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (std::popcount(mask) < std::popcount(best))
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = i + 1; j < n && ok; ++j)
                    if ((mask >> i & 1u) && (mask >> j & 1u) && !apart[i][j])
                        ok = false;
            if (!ok)
                continue;
            // lexicographically smallest vertex list among the maxima
            if (std::popcount(mask) > std::popcount(best) || (mask & (mask ^ best) & -(mask ^ best)) != 0)
                best = mask;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (best >> i & 1u)
                out.vertices.push_back(i);
    }
    else {
        for (std::size_t i = 0; i < n; ++i) {
            bool ok = true;
            for (auto v : out.vertices)
                ok = ok && apart[i][v];
            if (ok)
                out.vertices.push_back(i);
        }
    }
    for (auto a : out.vertices)
        for (auto b : out.vertices)
            if (g.has_edge(a, b))
                out.edges.emplace_back(a, b);
    return out;
}

EdgeShiftFactor edge_shift_factor(const HomGraph& g, const std::vector<std::size_t>& vertices)
{
    EdgeShiftFactor r;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!disjoint(g.core(vertices[i]), g.core(vertices[j]))) {
                r.failure = "cores of " + g.label(vertices[i]) + " and " + g.label(vertices[j]) + " overlap";
                return r;
            }

    std::set<std::size_t> keep(vertices.begin(), vertices.end());
    for (bool changed = true; changed;) {
        changed = false;
        for (auto it = keep.begin(); it != keep.end();) {
            bool in = false, out = false;
            for (auto u : keep) {
                in = in || g.has_edge(u, *it);
                out = out || g.has_edge(*it, u);
            }
            if (in && out) {
                ++it;
            }
            else {
                it = keep.erase(it);
                changed = true;
            }
        }
    }
    if (keep.empty()) {
        r.failure = "the subgraph carries no bi-infinite path";
        return r;
    }
    r.graph.vertices.assign(keep.begin(), keep.end());
    for (auto a : keep)
        for (auto b : keep)
            if (g.has_edge(a, b))
                r.graph.edges.emplace_back(a, b);

    bool found = false;
    for (std::size_t k = 0; k < g.degrees() && !found; ++k) {
        bool ok = true;
        for (auto v : keep)
            ok = ok && g.vertex_space(v).dim(k) > 0;
        for (const auto& [a, b] : r.graph.edges) {
            const Matrix& m = g.edge(a, b).degree(k);
            ok = ok && m.rows() == m.cols() && m.rank() == m.rows();
        }
        if (ok) {
            r.degree = k;
            found = true;
        }
    }
    if (!found) {
        r.failure = "no degree in which every edge map is invertible";
        return r;
    }

    const std::size_t n = r.graph.vertices.size();
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        pos[r.graph.vertices[i]] = i;
    std::vector<std::vector<std::uint64_t>> adj(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& [a, b] : r.graph.edges)
        adj[pos[a]][pos[b]] = 1;

    std::vector<std::vector<std::uint64_t>> pw = adj;
    r.bound = {1, 1};
    for (unsigned p = 1; p <= 8; ++p) {
        std::uint64_t least = UINT64_MAX;
        for (const auto& row : pw) {
            std::uint64_t s = 0;
            for (auto x : row)
                s += x;
            least = std::min(least, s);
        }
        EntropyBound cand{least, p};
        if (least > 0 && cand.value() > r.bound.value())
            r.bound = cand;
        std::vector<std::vector<std::uint64_t>> nxt(n, std::vector<std::uint64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m)
                if (pw[i][m])
                    for (std::size_t j = 0; j < n; ++j)
                        nxt[i][j] += pw[i][m] * adj[m][j];
        pw = std::move(nxt);
    }
    r.valid = true;
    return r;
}

OrbitCertificate detect_orbit(const HomGraph& g, const EventuallyPeriodic& w)
{
    if (w.cycle.empty())
        throw std::invalid_argument("eventually periodic word needs a nonempty cycle");
    Word path = concat(w.prefix, w.cycle);
    path.push_back(w.cycle.front());
    if (!allowable(g, path))
        throw SystemError("word " + g.format(path) + " is not allowable");

    OrbitCertificate c;
    c.cycle_product = cycle_product(g, w.cycle);
    Word head = concat(w.prefix, w.cycle);
    c.prefix_product = word_product(g, head);
    if (!periodic_allowed(g, w.cycle)) {
        c.reason = "cycle product " + g.format(w.cycle) + " is nilpotent in every degree";
        return c;
    }
    WordCheck wc = check_word(g, head);
    if (!wc.allowed) {
        c.reason = "product along " + g.format(head) + " vanishes";
        if (wc.zero_span)
            c.reason += " on positions " + std::to_string(wc.zero_span->first) + ".." +
                        std::to_string(wc.zero_span->second);
        return c;
    }
    c.certified = true;
    return c;
}

std::vector<Word> elementary_cycles(const HomGraph& g, std::size_t cap, std::size_t max_count)
{
    std::vector<Word> out;
    const std::size_t n = g.size();
    Word path;
    std::vector<bool> on_path(n, false);

    auto dfs = [&](auto&& self, std::size_t start, std::size_t v) -> void {
        for (auto b : g.successors(v)) {
            if (out.size() >= max_count)
                return;
            if (b == start) {
                out.push_back(path);
            }
            else if (b > start && !on_path[b] && path.size() < cap) {
                on_path[b] = true;
                path.push_back(b);
                self(self, start, b);
                path.pop_back();
                on_path[b] = false;
            }
        }
    };
    for (std::size_t s = 0; s < n && out.size() < max_count; ++s) {
        path = {s};
        on_path[s] = true;
        dfs(dfs, s, s);
        on_path[s] = false;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r,
                   std::vector<std::size_t> p, std::vector<std::size_t> x, std::vector<std::size_t>& best)
{
    if (p.empty() && x.empty()) {
        if (r.size() > best.size())
            best = r;
        return;
    }
    if (r.size() + p.size() <= best.size())
        return;
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t most = 0;
    for (const auto* set : {&p, &x})
        for (auto u : *set) {
            std::size_t c = 0;
            for (auto v : p)
                c += adj[u][v];
            if (c >= most) {
                most = c;
                pivot = u;
            }
        }
    std::vector<std::size_t> cand;
    for (auto v : p)
        if (!adj[pivot][v])
            cand.push_back(v);
    for (auto v : cand) {
        std::vector<std::size_t> np, nx;
        for (auto u : p)
            if (adj[v][u])
                np.push_back(u);
        for (auto u : x)
            if (adj[v][u])
                nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(adj, r, np, nx, best);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

void extend_walks(const HomGraph& g, Word& w, unsigned n, std::vector<Word>& out, std::size_t limit)
{
    if (out.size() >= limit)
        return;
    if (w.size() == n) {
        if (g.has_edge(w.back(), w.front()) && word_allowed(g, w) && concatenation_ok(g, w, w))
            out.push_back(w);
        return;
    }
    for (auto b : g.successors(w.back())) {
        w.push_back(b);
        extend_walks(g, w, n, out, limit);
        w.pop_back();
    }
}

}  // namespace

Analysis analyze(const HomGraph& g, const AnalysisOptions& opt)
{
    Analysis a;
    a.emptiness = empty_up_to(g, opt.empty_bound);
    for (auto& c : elementary_cycles(g, opt.cycle_cap))
        a.cycles.push_back({c, periodic_allowed(g, c)});
    a.disjoint = disjoint_subgraph(g);

    auto offer = [&](EntropyCandidate c) {
        if (c.bound.count < 2)
            return;
        if (!a.entropy || c.bound.value() > a.entropy->bound.value())
            a.entropy = std::move(c);
    };

    EdgeShiftFactor es = edge_shift_factor(g, a.disjoint.vertices);
    if (es.valid) {
        std::vector<Word> verts;
        for (auto v : es.graph.vertices)
            verts.push_back({v});
        offer({"edge shift on disjoint subgraph", es.bound, verts});
    }

    for (unsigned n = 1; n <= opt.max_power; ++n) {
        std::vector<Word> words;
        for (std::size_t v = 0; v < g.size(); ++v) {
            Word w{v};
            extend_walks(g, w, n, words, opt.max_candidates);
        }
        std::vector<std::vector<bool>> compat(words.size(), std::vector<bool>(words.size(), false));
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j)
                compat[i][j] = compat[j][i] = distinguishable(g, words[i], words[j]) &&
                                              concatenation_ok(g, words[i], words[j]) &&
                                              concatenation_ok(g, words[j], words[i]);
        std::vector<std::size_t> all(words.size()), r, best;
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        bron_kerbosch(compat, r, all, {}, best);
        std::vector<Word> chosen;
        for (auto i : best)
            chosen.push_back(words[i]);
        ShiftFactor sf = shift_factor(g, n, chosen);
        if (sf.valid)
            offer({"full shift factor of f^" + std::to_string(n), sf.bound, chosen});
    }
    return a;
}

}  // namespace isys
