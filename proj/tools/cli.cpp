#include "isys/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "isys/cocyclic.hpp"
#include "isys/construct.hpp"
#include "isys/examples.hpp"
#include "isys/homology.hpp"
#include "isys/io.hpp"

namespace isys {

namespace {

constexpr std::size_t max_length_bound = 24;
constexpr std::int64_t max_grid = 10000;

struct Options {
    std::string map, system, product_pair, templ, delta, epsilon, words, out, dot, example;
    std::size_t max_len = 0;
    bool no_timestamp = false;
};

/// Bad command-line input; reported with exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Scalar parameter(const std::string& flag, const std::string& text)
{
    try {
        return parse_rational(text);
    }
    catch (const RationalParseError& e) {
        throw FormatError(flag, 1, 1, e.what());
    }
}

std::string slurp(const std::string& path)
{
    try {
        return read_file(path);
    }
    catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

std::string header(const std::string& title, const Options& o)
{
    std::string h = "# isys " + title + "\n";
    if (!o.no_timestamp) {
        std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        h += std::string("# generated ") + buf + "\n";
    }
    return h;
}

void emit(const Options& o, const std::string& file, const std::string& text, std::ostream& out)
{
    out << text;
    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        write_file((std::filesystem::path(o.out) / file).string(), text);
    }
}

PLMap load_map(const Options& o)
{
    if (o.map.empty())
        throw InputError("--map is required");
    return parse_map(slurp(o.map), o.map);
}

IndexSystem load_system(const Options& o)
{
    if (o.system.empty())
        throw InputError("--system is required");
    return parse_system(slurp(o.system), o.system);
}

std::size_t length_bound(const Options& o, std::size_t fallback)
{
    if (o.max_len == 0)
        return fallback;
    if (o.max_len > max_length_bound)
        throw InputError("--max-len must be at most " + std::to_string(max_length_bound));
    return o.max_len;
}

Word word_of(const HomGraph& g, const std::vector<std::string>& labels)
{
    for (const auto& l : labels)
        if (std::find(g.labels().begin(), g.labels().end(), l) == g.labels().end())
            throw InputError("word refers to unknown label '" + l + "'");
    return g.word(labels);
}

std::string dims(const GradedSpace& d) { return "(" + std::to_string(d.dim(0)) + ", " + std::to_string(d.dim(1)) + ")"; }

std::string matrices(const std::vector<Matrix>& ms)
{
    std::string s;
    for (std::size_t k = 0; k < ms.size(); ++k)
        s += (k ? ", " : "") + std::string("H") + std::to_string(k) + " " + to_string(ms[k]);
    return s;
}

std::string describe_edge(const IndexSystem& s, const EdgeReport& e)
{
    std::string line = "  " + s.pair(e.from).label + " -> " + s.pair(e.to).label + ": ";
    if (e.precedes.holds)
        line += "precedes";
    else if (!e.precedes.exit_ok)
        line += "exit fails on " + to_string(e.precedes.exit_witness);
    else
        line += "image of L meets core on " + to_string(e.precedes.image_witness);
    line += e.chain_ok ? ", isolated" : ", boundary contact on " + to_string(e.chain_witness);
    return line + "\n";
}

int verdict_code(Verdict v)
{
    switch (v) {
        case Verdict::Verified: return ExitOk;
        case Verdict::Undecided: return ExitUndecided;
        case Verdict::Failed: break;
    }
    return ExitFailed;
}

std::string verification_text(const IndexSystem& s, const VerificationReport& r)
{
    std::ostringstream os;
    os << "pairs: " << s.size() << "\n";
    os << "edges: " << s.edges().size() << "\n";
    os << "verdict: " << to_string(r.verdict) << "\n";
    os << "edge checks:\n";
    for (const auto& e : r.edges)
        os << describe_edge(s, e);
    for (const auto& f : r.failures)
        os << "failure: " << f << "\n";
    for (const auto& n : r.notes)
        os << "note: " << n << "\n";
    return os.str();
}

int cmd_verify(const Options& o, std::ostream& out)
{
    PLMap f = load_map(o);
    IndexSystem s = load_system(o);
    VerificationReport r = verify(s, f);
    std::string text = header("verify", o) + "map: " + o.map + "\nsystem: " + o.system + "\n" + verification_text(s, r);
    emit(o, "verify.txt", text, out);
    if (!o.out.empty())
        write_file((std::filesystem::path(o.out) / "verify.json").string(), dump_report(r, s));
    return verdict_code(r.verdict);
}

/// Verifies and refuses with the report when the system is not VERIFIED.
std::optional<int> require_verified(const IndexSystem& s, const PLMap& f, std::ostream& err)
{
    VerificationReport r = verify(s, f);
    if (r.verdict == Verdict::Verified)
        return std::nullopt;
    err << "system is not verified (" << to_string(r.verdict) << ")\n";
    for (const auto& line : r.failures)
        err << "  " << line << "\n";
    return ExitFailed;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err)
{
    PLMap f = load_map(o);
    IndexSystem s = load_system(o);
    std::optional<WordFile> words;
    if (!o.words.empty())
        words = parse_words(slurp(o.words), o.words);
    AnalysisOptions opt;
    opt.empty_bound = length_bound(o, opt.empty_bound);
    opt.cycle_cap = length_bound(o, opt.cycle_cap);
    if (auto refused = require_verified(s, f, err))
        return *refused;

    HomGraph g = hom_graph(s, f);
    Analysis a = analyze(g, opt);
    std::ostringstream os;
    os << header("analyze", o) << "map: " << o.map << "\nsystem: " << o.system << "\nverdict: VERIFIED\n";
    os << "vertices (label: dim H0, dim H1; core):\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        os << "  " << g.label(v) << ": " << dims(g.vertex_space(v)) << "; " << to_string(g.core(v)) << "\n";
    os << "edge matrices:\n";
    for (const auto& [e, m] : g.edges())
        os << "  " << g.label(e.first) << " -> " << g.label(e.second) << ": " << matrices(m.by_degree) << "\n";

    if (a.emptiness.empty)
        os << "cocyclic subshift empty (bound " << a.emptiness.bound << ")\n";
    else
        os << "cocyclic subshift nonempty up to bound " << a.emptiness.bound << ", e.g. "
           << g.format(*a.emptiness.survivor) << "\n";

    std::size_t allowed = 0;
    for (const auto& c : a.cycles)
        allowed += c.allowed;
    os << "elementary cycles up to length " << opt.cycle_cap << ": " << a.cycles.size() << " (" << allowed
       << " allowed, " << a.cycles.size() - allowed << " nilpotent)\n";
    constexpr std::size_t shown = 64;
    for (std::size_t i = 0; i < a.cycles.size() && i < shown; ++i)
        os << "  " << g.format(a.cycles[i].cycle) << (a.cycles[i].allowed ? " allowed" : " nilpotent") << "\n";
    if (a.cycles.size() > shown)
        os << "  ... " << a.cycles.size() - shown << " more\n";

    os << "disjoint subgraph: " << g.format(a.disjoint.vertices) << "\n";

    std::optional<EntropyCandidate> best = a.entropy;
    if (words && !words->words.empty()) {
        std::vector<Word> ws;
        for (const auto& w : words->words)
            ws.push_back(word_of(g, w));
        const std::size_t n = ws.front().size();
        for (const auto& w : ws)
            if (w.size() != n)
                throw InputError("certificate words must have equal length");
        ShiftFactor sf = shift_factor(g, static_cast<unsigned>(n), ws);
        os << "certificate words:";
        for (const auto& w : ws)
            os << " " << g.format(w);
        os << "\n";
        if (sf.valid) {
            os << "  full shift factor of f^" << n << ": entropy >= " << sf.bound.describe() << "\n";
            if (!best || sf.bound.value() >= best->bound.value())
                best = EntropyCandidate{"certificate words", sf.bound, ws};
        }
        else {
            os << "  rejected: " << sf.failure << "\n";
        }
    }
    if (best) {
        os << "entropy lower bound: " << best->bound.describe() << " via " << best->method << ":";
        for (const auto& w : best->words)
            os << " " << g.format(w);
        os << "\n";
    }
    else {
        os << "entropy lower bound: none found\n";
    }

    emit(o, "analysis.txt", os.str(), out);
    if (!o.dot.empty())
        write_file(o.dot, to_dot(g));
    return ExitOk;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err)
{
    PLMap f = load_map(o);
    if (o.delta.empty())
        throw InputError("--delta is required");
    Scalar delta = parameter("--delta", o.delta);
    if (delta <= 0 || delta < Scalar(1) / max_grid)
        throw InputError("--delta must lie in [1/" + std::to_string(max_grid) + ", 1]");

    ProductPair input;
    if (!o.product_pair.empty() == !o.templ.empty())
        throw InputError("give exactly one of --product-pair and --template");
    if (!o.product_pair.empty()) {
        input = parse_product_pair(slurp(o.product_pair), o.product_pair);
    }
    else {
        auto comma = o.templ.find(',');
        if (comma == std::string::npos)
            throw InputError("--template expects w,c");
        Scalar w = parameter("--template", o.templ.substr(0, comma));
        Scalar c = parameter("--template", o.templ.substr(comma + 1));
        try {
            input = strip_template(f, w, c);
        }
        catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (input.k() > max_grid)
            throw InputError("template grid exceeds 1/" + std::to_string(max_grid));
    }

    Construction c;
    try {
        c = construct(f, input, delta);
    }
    catch (const RefineDelta& e) {
        err << "refine-delta: " << e.what() << "\n";
        err << "suggested delta: " << to_string(e.suggested) << "\n";
        return ExitRefine;
    }

    const auto& fam = c.slices;
    std::size_t empty = 0;
    for (bool b : fam.empty_core)
        empty += b;
    std::ostringstream os;
    os << header("construct", o) << "map: " << o.map << "\n";
    os << "grid: 1/" << c.discrete.k() << "\n";
    os << "product pair: " << c.discrete.N.size() << " boxes in N, " << c.discrete.L.size() << " in L\n";
    os << "slabs: " << fam.slabs.size() << " (" << fam.empty_slabs.size() << " empty)\n";
    os << "distinct slices: " << fam.slices.size() << " (" << empty << " with empty core)\n";
    os << "slab-derived edges: " << c.assembly.slab_edges.size() << "\n";
    os << "verified edges: " << c.assembly.system.edges().size() << "\n";
    os << "pruned slices:";
    for (const auto& l : c.assembly.pruned)
        os << " " << l;
    os << "\n";
    os << "system pairs: " << c.assembly.system.size() << "\n";
    os << "verdict: " << to_string(c.assembly.report.verdict) << "\n";
    emit(o, "construct.txt", os.str(), out);

    std::string sys = dump_system(c.assembly.system);
    if (o.out.empty())
        out << "system:\n" << sys;
    else
        write_file((std::filesystem::path(o.out) / "construct.system").string(), sys);
    return ExitOk;
}

int cmd_detect_orbit(const Options& o, std::ostream& out, std::ostream& err)
{
    PLMap f = load_map(o);
    IndexSystem s = load_system(o);
    if (o.words.empty())
        throw InputError("--words with an orbit entry is required");
    WordFile wf = parse_words(slurp(o.words), o.words);
    if (!wf.cycle)
        throw InputError(o.words + ": no orbit entry");

    std::vector<std::string> labels = *wf.prefix;
    labels.insert(labels.end(), wf.cycle->begin(), wf.cycle->end());
    labels.push_back(wf.cycle->front());
    for (const auto& l : labels)
        if (!s.has_label(l))
            throw InputError("word refers to unknown label '" + l + "'");
    auto idx = s.indices(labels);
    if (long bad = s.first_bad_transition(idx); bad >= 0) {
        err << "word is not allowable: no edge " << labels[static_cast<std::size_t>(bad)] << " -> "
            << labels[static_cast<std::size_t>(bad) + 1] << " at position " << bad << "\n";
        return ExitFailed;
    }
    if (auto refused = require_verified(s, f, err))
        return *refused;

    HomGraph g = hom_graph(s, f);
    EventuallyPeriodic w{word_of(g, *wf.prefix), word_of(g, *wf.cycle)};
    OrbitCertificate cert = detect_orbit(g, w);

    std::ostringstream os;
    os << header("detect-orbit", o) << "map: " << o.map << "\nsystem: " << o.system << "\n";
    os << "prefix: " << g.format(w.prefix) << "\ncycle: " << g.format(w.cycle) << "\n";
    os << "cycle product: " << matrices(cert.cycle_product) << "\n";
    if (!w.prefix.empty())
        os << "prefix product: " << matrices(cert.prefix_product) << "\n";
    os << (cert.certified ? "CERTIFICATE" : "NO-CERTIFICATE");
    if (!cert.reason.empty())
        os << ": " << cert.reason;
    os << "\n";

    std::vector<RegionSet> cores;
    for (auto v : w.cycle)
        cores.push_back(g.core(v));
    try {
        auto pts = periodic_points(f, cores);
        os << "oracle: " << pts.size() << " point(s) of period dividing " << w.cycle.size()
           << " following the cycle cores:";
        for (const auto& x : pts)
            os << " " << to_string(x);
        os << "\n";
    }
    catch (const std::exception& e) {
        os << "oracle: " << e.what() << "\n";
    }
    emit(o, "orbit.txt", os.str(), out);
    return cert.certified ? ExitOk : ExitUndecided;
}

int cmd_export(const Options& o, std::ostream& out)
{
    std::optional<PLMap> f;
    std::optional<IndexSystem> s;
    if (!o.example.empty()) {
        Scalar eps = o.epsilon.empty() ? rat(1, 100) : parameter("--epsilon", o.epsilon);
        if (eps <= 0 || eps >= rat(1, 30))
            throw InputError("--epsilon must lie in (0, 1/30)");
        Example ex;
        try {
            ex = example(o.example, eps);
        }
        catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        f = ex.map;
        s = ex.system;
    }
    else {
        if (!o.map.empty())
            f = load_map(o);
        if (!o.system.empty())
            s = load_system(o);
    }
    if (!f && !s)
        throw InputError("nothing to export: give an example name, --map or --system");

    const std::string stem = o.example.empty() ? "export" : o.example;
    if (o.out.empty()) {
        if (f)
            out << dump_map(*f);
        if (s)
            out << dump_system(*s);
    }
    else {
        std::filesystem::create_directories(o.out);
        if (f)
            write_file((std::filesystem::path(o.out) / (stem + ".map")).string(), dump_map(*f));
        if (s)
            write_file((std::filesystem::path(o.out) / (stem + ".system")).string(), dump_system(*s));
    }
    if (!o.dot.empty()) {
        if (!f || !s)
            throw InputError("--dot needs both a map and a system");
        write_file(o.dot, to_dot(hom_graph(*s, *f)));
    }
    return ExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Index systems for piecewise-linear maps of the line and circle", "isys"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* c) {
        c->add_option("--map", o.map, "map file");
        c->add_option("--system", o.system, "index system file");
        c->add_option("--out", o.out, "directory for report files");
        c->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp header");
    };
    auto* verify_cmd = app.add_subcommand("verify", "check that a system is an index system");
    add_common(verify_cmd);

    auto* analyze_cmd = app.add_subcommand("analyze", "homology graph, cocyclic subshift and entropy bounds");
    add_common(analyze_cmd);
    analyze_cmd->add_option("--max-len", o.max_len, "length bound for emptiness and cycles (at most 24)");
    analyze_cmd->add_option("--words", o.words, "certificate words file");
    analyze_cmd->add_option("--dot", o.dot, "write the graph in DOT");

    auto* construct_cmd = app.add_subcommand("construct", "index system from a pair of f x f");
    add_common(construct_cmd);
    construct_cmd->add_option("--product-pair", o.product_pair, "grid product pair file");
    construct_cmd->add_option("--template", o.templ, "strip template w,c");
    construct_cmd->add_option("--delta", o.delta, "grid step 1/k");

    auto* orbit_cmd = app.add_subcommand("detect-orbit", "orbit certificate for an eventually periodic word");
    add_common(orbit_cmd);
    orbit_cmd->add_option("--words", o.words, "words file with an orbit entry");

    auto* export_cmd = app.add_subcommand("export", "canonical files, built-in examples and DOT graphs");
    add_common(export_cmd);
    export_cmd->add_option("example", o.example, "built-in example: doubling, tent or trivial");
    export_cmd->add_option("--epsilon", o.epsilon, "margin for built-in examples");
    export_cmd->add_option("--dot", o.dot, "write the graph in DOT");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitOk;
    }
    catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitInput;
    }

    try {
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        if (analyze_cmd->parsed())
            return cmd_analyze(o, out, err);
        if (construct_cmd->parsed())
            return cmd_construct(o, out, err);
        if (orbit_cmd->parsed())
            return cmd_detect_orbit(o, out, err);
        return cmd_export(o, out);
    }
    catch (const FormatError& e) {
        err << "parse error: " << e.what() << "\n";
        return ExitInput;
    }
    catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInput;
    }
    catch (const SpaceMismatch& e) {
        err << "input error: map and system live in different spaces\n";
        return ExitInput;
    }
    catch (const GridMisalignment& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInput;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitFailed;
    }
}

}  // namespace isys
