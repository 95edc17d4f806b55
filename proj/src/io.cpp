#include "isys/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace isys {

using Json = nlohmann::ordered_json;

FormatError::FormatError(const std::string& source, std::size_t l, std::size_t c, const std::string& what)
    : std::invalid_argument(source + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + what), line(l), column(c)
{
}

namespace {

struct Source {
    const std::string& text;
    const std::string& name;

    [[noreturn]] void fail_at(std::size_t offset, const std::string& msg) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            }
            else {
                ++col;
            }
        }
        throw FormatError(name, line, col, msg);
    }

    [[noreturn]] void fail_near(const std::string& needle, const std::string& msg) const
    {
        std::size_t pos = needle.empty() ? std::string::npos : text.find(needle);
        fail_at(pos == std::string::npos ? 0 : pos, msg);
    }
};

void reject_float_literals(const Source& src)
{
    const std::string& t = src.text;
    bool in_string = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        if (in_string) {
            if (ch == '\\')
                ++i;
            else if (ch == '"')
                in_string = false;
            continue;
        }
        if (ch == '"') {
            in_string = true;
            continue;
        }
        if (ch == '-' || (ch >= '0' && ch <= '9')) {
            std::size_t j = i;
            bool is_float = false;
            while (j < t.size() && std::string_view("0123456789.eE+-").find(t[j]) != std::string_view::npos) {
                is_float = is_float || t[j] == '.' || t[j] == 'e' || t[j] == 'E';
                ++j;
            }
            if (is_float)
                src.fail_at(i, "float literal '" + t.substr(i, j - i) + "' is not allowed; write rationals as \"p/q\"");
            i = j - 1;
        }
    }
}

Json load(const Source& src)
{
    reject_float_literals(src);
    try {
        return Json::parse(src.text);
    }
    catch (const Json::parse_error& e) {
        std::string msg = e.what();
        if (auto p = msg.find("parse error"); p != std::string::npos)
            msg = msg.substr(p);
        src.fail_at(e.byte > 0 ? e.byte - 1 : 0, msg);
    }
}

const Json& member(const Source& src, const Json& obj, const std::string& key)
{
    if (!obj.is_object())
        src.fail_near("", "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        src.fail_near("", "missing key '" + key + "'");
    return *it;
}

Scalar rational(const Source& src, const Json& v)
{
    if (v.is_number_integer())
        return Scalar(v.get<long long>());
    if (!v.is_string())
        src.fail_near(v.dump(), "expected a rational string, got " + v.dump());
    const auto s = v.get<std::string>();
    try {
        return parse_rational(s);
    }
    catch (const RationalParseError& e) {
        src.fail_near("\"" + s + "\"", e.what());
    }
}

std::string label_of(const Source& src, const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    src.fail_near(v.dump(), "expected a label, got " + v.dump());
}

Space space_of(const Source& src, const Json& obj)
{
    const Json& v = member(src, obj, "space");
    if (v == "line")
        return Space::Line;
    if (v == "circle")
        return Space::Circle;
    src.fail_near(v.dump(), "space must be \"line\" or \"circle\"");
}

RegionSet region(const Source& src, Space space, const Json& cells, const std::string& where)
{
    if (!cells.is_array())
        src.fail_near(where, "cell list must be an array");
    std::vector<Interval> out;
    for (const auto& c : cells) {
        if (!c.is_array() || c.size() != 2)
            src.fail_near(c.dump(), "a cell is a pair [lo, hi]");
        out.push_back({rational(src, c[0]), rational(src, c[1])});
    }
    try {
        return RegionSet::normalize(space, out);
    }
    catch (const EmptyCellError& e) {
        src.fail_near(where, e.what());
    }
}

std::vector<std::string> labels(const Source& src, const Json& arr)
{
    if (!arr.is_array())
        src.fail_near(arr.dump(), "expected a list of labels");
    std::vector<std::string> out;
    for (const auto& v : arr)
        out.push_back(label_of(src, v));
    return out;
}

Json rational_json(const Scalar& q) { return to_string(q); }

Json cells_json(const RegionSet& r)
{
    Json a = Json::array();
    for (const auto& c : r.cells())
        a.push_back(Json::array({rational_json(c.lo), rational_json(c.hi)}));
    return a;
}

Json boxes_json(const GridRegion& g)
{
    Json a = Json::array();
    for (const auto& b : g.boxes())
        a.push_back(Json::array({b.col, b.row}));
    return a;
}

GridRegion boxes(const Source& src, const Json& arr, std::int64_t k, bool periodic)
{
    if (!arr.is_array())
        src.fail_near("", "box list must be an array");
    GridRegion g(k, periodic);
    for (const auto& b : arr) {
        if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() || !b[1].is_number_integer())
            src.fail_near(b.dump(), "a box is [col, row] with integer indices");
        g.insert({b[0].get<std::int64_t>(), b[1].get<std::int64_t>()});
    }
    return g;
}

}  // namespace

PLMap parse_map(const std::string& text, const std::string& name)
{
    Source src{text, name};
    Json j = load(src);
    Space space = space_of(src, j);
    const Json& verts = member(src, j, "vertices");
    if (!verts.is_array())
        src.fail_near("\"vertices\"", "vertices must be an array");
    std::vector<Vertex> vs;
    for (const auto& v : verts) {
        if (!v.is_array() || v.size() != 2)
            src.fail_near(v.dump(), "a vertex is a pair [x, y]");
        vs.push_back({rational(src, v[0]), rational(src, v[1])});
    }
    try {
        return PLMap::make(space, std::move(vs));
    }
    catch (const MapSpecError& e) {
        src.fail_near("\"vertices\"", e.what());
    }
}

IndexSystem parse_system(const std::string& text, const std::string& name)
{
    Source src{text, name};
    Json j = load(src);
    Space space = space_of(src, j);
    IndexSystem s(space);
    const Json& pairs = member(src, j, "pairs");
    if (!pairs.is_object())
        src.fail_near("\"pairs\"", "pairs must be an object keyed by label");
    for (const auto& [label, body] : pairs.items()) {
        const std::string where = "\"" + label + "\"";
        RegionSet n = region(src, space, member(src, body, "N"), where);
        RegionSet l = body.contains("L") ? region(src, space, body["L"], where) : RegionSet(space);
        try {
            s.add_pair(CompactPair::make(label, n, l));
        }
        catch (const std::invalid_argument& e) {
            src.fail_near(where, "pair '" + label + "': " + e.what());
        }
    }
    const Json& edges = member(src, j, "edges");
    if (!edges.is_array())
        src.fail_near("\"edges\"", "edges must be an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2)
            src.fail_near(e.dump(), "an edge is a pair [from, to]");
        const std::string a = label_of(src, e[0]), b = label_of(src, e[1]);
        for (const auto& l : {a, b})
            if (!s.has_label(l))
                src.fail_near(e.dump(), "edge refers to unknown label '" + l + "'");
        s.add_edge(a, b);
    }
    return s;
}

ProductPair parse_product_pair(const std::string& text, const std::string& name)
{
    Source src{text, name};
    Json j = load(src);
    Space space = space_of(src, j);
    const Json& kj = member(src, j, "k");
    if (!kj.is_number_integer() || kj.get<std::int64_t>() < 1 || kj.get<std::int64_t>() > 10000)
        src.fail_near("\"k\"", "k must be an integer in [1, 10000]");
    const std::int64_t k = kj.get<std::int64_t>();
    const bool periodic = space == Space::Circle;
    ProductPair p{boxes(src, member(src, j, "N"), k, periodic),
                  j.contains("L") ? boxes(src, j["L"], k, periodic) : GridRegion(k, periodic)};
    for (const auto& b : p.L.boxes())
        if (!p.N.contains(b))
            src.fail_near("\"L\"", "L box [" + std::to_string(b.col) + ", " + std::to_string(b.row) + "] is not in N");
    return p;
}

WordFile parse_words(const std::string& text, const std::string& name)
{
    Source src{text, name};
    Json j = load(src);
    if (!j.is_object())
        src.fail_at(0, "expected an object");
    WordFile w;
    if (j.contains("words")) {
        if (!j["words"].is_array())
            src.fail_near("\"words\"", "words must be a list of label lists");
        for (const auto& x : j["words"])
            w.words.push_back(labels(src, x));
    }
    if (j.contains("orbit")) {
        const Json& o = j["orbit"];
        w.prefix = o.contains("prefix") ? labels(src, o["prefix"]) : std::vector<std::string>{};
        w.cycle = labels(src, member(src, o, "cycle"));
        if (w.cycle->empty())
            src.fail_near("\"cycle\"", "cycle must not be empty");
    }
    return w;
}

std::string dump_map(const PLMap& f)
{
    Json j;
    j["space"] = to_string(f.space());
    Json v = Json::array();
    for (const auto& p : f.vertices())
        v.push_back(Json::array({rational_json(p.x), rational_json(p.y)}));
    j["vertices"] = v;
    return j.dump(2) + "\n";
}

std::string dump_system(const IndexSystem& s)
{
    Json j;
    j["space"] = to_string(s.space());
    Json pairs = Json::object();
    for (const auto& p : s.pairs())
        pairs[p.label] = Json{{"N", cells_json(p.N)}, {"L", cells_json(p.L)}};
    j["pairs"] = pairs;
    Json edges = Json::array();
    for (const auto& [a, b] : s.edges())
        edges.push_back(Json::array({s.pair(a).label, s.pair(b).label}));
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

std::string dump_product_pair(const ProductPair& p)
{
    Json j;
    j["space"] = p.periodic() ? "circle" : "line";
    j["k"] = p.k();
    j["N"] = boxes_json(p.N);
    j["L"] = boxes_json(p.L);
    return j.dump() + "\n";
}

std::string dump_report(const VerificationReport& r, const IndexSystem& s)
{
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["pairs"] = s.size();
    Json edges = Json::array();
    for (const auto& e : r.edges)
        edges.push_back(Json{{"from", s.pair(e.from).label},
                             {"to", s.pair(e.to).label},
                             {"precedes", e.precedes.holds},
                             {"exit_ok", e.precedes.exit_ok},
                             {"image_ok", e.precedes.image_ok},
                             {"exit_witness", cells_json(e.precedes.exit_witness)},
                             {"image_witness", cells_json(e.precedes.image_witness)},
                             {"chain_ok", e.chain_ok},
                             {"chain_witness", cells_json(e.chain_witness)}});
    j["edges"] = edges;
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

std::string to_dot(const HomGraph& g)
{
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '\n') {
                out += "\\n";
                continue;
            }
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph cocyclic {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& d = g.vertex_space(v);
        os << "  " << quote(g.label(v)) << " [label=" << quote(g.label(v) + "\nH = (" + std::to_string(d.dim(0)) + ", " +
                                                             std::to_string(d.dim(1)) + ")")
           << "];\n";
    }
    for (const auto& [e, m] : g.edges()) {
        const auto& [a, b] = e;
        const Matrix& m1 = m.degree(1);
        std::string label = m1.rows() && m1.cols() ? to_string(m1) : "H0 " + to_string(m.degree(0));
        os << "  " << quote(g.label(a)) << " -> " << quote(g.label(b)) << " [label=" << quote(label);
        if (a == b && !periodic_allowed(g, {a}))
            os << ", style=dashed, color=red";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace isys
