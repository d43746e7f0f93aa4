#include "cli.hpp"

#include "patex/constructions.hpp"
#include "patex/containment.hpp"
#include "patex/errors.hpp"
#include "patex/extremal.hpp"
#include "patex/io.hpp"
#include "patex/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace patex::cli {

namespace {

namespace fs = std::filesystem;
using Object = std::variant<BinaryMatrix, OrderedHypergraph>;

struct Args {
    std::string kind;
    std::string name;
    std::string pattern;
    std::string host;
    std::string input;
    std::string out;
    std::string n_range;
    std::string cap = "kd";
    std::string claims;
    int t = 2;
    int d = 0;
    int k = 0;
    int budget = 4;
    int trials = 0;
    int edge_cap = 0;
    double p = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool exact = false;
};

struct Range {
    int lo;
    int hi;
};

Range parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        Range r{};
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text, &used);
            if (used != text.size())
                throw InputError("");
        } else {
            const std::string a = text.substr(0, dots);
            const std::string b = text.substr(dots + 2);
            r.lo = std::stoi(a, &used);
            if (used != a.size())
                throw InputError("");
            r.hi = std::stoi(b, &used);
            if (used != b.size())
                throw InputError("");
        }
        if (r.lo < 1 || r.hi < r.lo)
            throw InputError("");
        return r;
    } catch (const std::exception&) {
        throw InputError("--n expects A..B or a single value with 1 <= A <= B, got '" + text + "'");
    }
}

int single_n(const std::string& text)
{
    const Range r = parse_range(text);
    if (r.lo != r.hi)
        throw InputError("--n must be a single value here");
    return r.lo;
}

/// Files whose first data line holds one integer are hypergraphs; longer headers are matrices.
Object load_object(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream tokens(line);
        int count = 0;
        for (std::string tok; tokens >> tok;)
            ++count;
        if (count == 1)
            return io::parse_hypergraph(text);
        return io::parse_matrix(text);
    }
    throw InputError(path + ": missing header line");
}

BinaryMatrix need_matrix(const std::string& path, const char* flag)
{
    if (path.empty())
        throw InputError(std::string(flag) + " is required");
    auto obj = load_object(path);
    if (auto* m = std::get_if<BinaryMatrix>(&obj))
        return *m;
    throw InputError(path + ": expected a matrix file");
}

OrderedHypergraph need_hypergraph(const std::string& path, const char* flag)
{
    if (path.empty())
        throw InputError(std::string(flag) + " is required");
    auto obj = load_object(path);
    if (auto* h = std::get_if<OrderedHypergraph>(&obj))
        return *h;
    throw InputError(path + ": expected a hypergraph file");
}

std::string format_object(const Object& obj)
{
    return std::visit(
        [](const auto& o) {
            if constexpr (std::is_same_v<std::decay_t<decltype(o)>, BinaryMatrix>)
                return io::format_matrix(o);
            else
                return io::format_hypergraph(o);
        },
        obj);
}

std::string exact_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

fs::path need_out(const Args& a)
{
    if (a.out.empty())
        throw InputError("--out is required");
    return a.out;
}

// ---- compute -------------------------------------------------------------

int cmd_compute(const Args& a, std::ostream& out)
{
    static const std::vector<std::string> kinds = {"ex", "f", "gex", "exe", "exi", "count"};
    if (std::ranges::find(kinds, a.kind) == kinds.end())
        throw InputError("unknown kind '" + a.kind + "' (ex, f, gex, exe, exi, count)");
    const Range range = parse_range(a.n_range);
    const fs::path dir = need_out(a);

    SearchOptions opts;
    opts.workers = a.workers;
    opts.exact = a.exact;
    if (a.edge_cap > 0)
        opts.edge_cap = a.edge_cap;

    const bool matrix_kind = a.kind == "ex" || a.kind == "f";
    std::optional<BinaryMatrix> mp;
    std::optional<OrderedHypergraph> hp;
    int dimension = 2;
    if (matrix_kind) {
        mp = need_matrix(a.pattern, "--pattern");
        dimension = a.kind == "f" && a.d > 0 ? a.d : mp->dimension();
        if (a.kind == "ex" && mp->dimension() != 2)
            throw InputError("ex takes a 2-dimensional pattern; use f for d > 2");
    } else {
        hp = need_hypergraph(a.pattern, "--pattern");
        if (a.kind == "exe" || a.kind == "exi") {
            std::size_t widest = 1;
            for (const auto& e : hp->edges())
                widest = std::max(widest, e.size());
            dimension = static_cast<int>(widest);
        }
    }

    std::vector<TableRow> rows;
    std::vector<bool> verified;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (a.kind == "count") {
            rows.push_back({n, count_avoiders(*hp, n, opts), ""});
            verified.push_back(true);
            continue;
        }
        const SearchCertificate cert = [&] {
            if (a.kind == "ex")
                return ex_matrix(*mp, n, opts);
            if (a.kind == "f")
                return f_multi(*mp, dimension, n, opts);
            if (a.kind == "gex")
                return gex_graph(*hp, n, opts);
            if (a.kind == "exe")
                return exe_hyper(*hp, n, opts);
            return exi_hyper(*hp, n, opts);
        }();
        if (!cert.verified)
            throw PostconditionError("witness for n = " + std::to_string(n) + " failed its avoidance re-check");
        const std::string file = "witness_n" + std::to_string(n) + ".txt";
        io::save_text(dir / file, format_object(cert.witness));
        rows.push_back({n, BigInt(cert.value), file});
        verified.push_back(cert.verified);
    }

    const ExtremalTable table(a.kind + ":" + fs::path(a.pattern).filename().string(), dimension, rows);
    std::ostringstream csv;
    csv << "n,value,ratio,witness_file\n";
    nlohmann::ordered_json summary;
    summary["kind"] = a.kind;
    summary["pattern_file"] = fs::path(a.pattern).filename().string();
    summary["pattern"] = matrix_kind ? io::format_matrix(*mp) : io::format_hypergraph(*hp);
    summary["n_range"] = std::to_string(range.lo) + ".." + std::to_string(range.hi);
    summary["exact"] = a.exact;
    if (!matrix_kind && a.kind != "gex")
        summary["edge_cap"] = a.exact ? nlohmann::ordered_json(nullptr)
                                      : nlohmann::ordered_json(a.edge_cap > 0 ? a.edge_cap : hp->vertex_count());
    summary["ratio_definition"] = a.kind == "count" ? "none" : "value/n^" + std::to_string(dimension - 1);
    auto& jrows = summary["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string ratio = a.kind == "count" ? "" : to_string(table.ratio(i));
        csv << rows[i].n << ',' << rows[i].value.str() << ',' << ratio << ',' << rows[i].witness_file << '\n';
        nlohmann::ordered_json r;
        r["n"] = rows[i].n;
        r["value"] = rows[i].value.str();
        r["ratio"] = ratio;
        r["linear_ratio"] = to_string(table.linear_ratio(i));
        r["witness_file"] = rows[i].witness_file;
        r["verified"] = static_cast<bool>(verified[i]);
        jrows.push_back(std::move(r));
    }
    summary["ratios_nondecreasing"] = table.ratios_nondecreasing();
    summary["limit_estimate"] = to_string(estimate_limit(table));
    io::save_text(dir / "table.csv", csv.str());
    io::save_text(dir / "summary.json", summary.dump(2) + "\n");
    out << csv.str();
    out << "limit estimate (value/n at n = " << range.hi << "): " << to_string(estimate_limit(table)) << '\n';
    return ok;
}

// ---- verify --------------------------------------------------------------

std::vector<std::string> split_claims(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

int cmd_verify(const Args& a, std::ostream& out)
{
    VerifyConfig cfg;
    cfg.budget = a.budget;
    cfg.seed = a.seed;
    cfg.workers = a.workers;
    if (a.trials > 0)
        cfg.density_trials = a.trials;
    if (!a.n_range.empty())
        cfg.density_n = single_n(a.n_range);
    const auto report = run_verification(split_claims(a.claims), cfg);
    const std::string text = report.to_text();
    if (!a.out.empty()) {
        const fs::path dir = a.out;
        io::save_text(dir / "report.txt", text);
        io::save_text(dir / "report.json", report.to_json());
        for (const auto& c : report.checks) {
            std::size_t index = 0;
            for (const auto& inst : c.instances) {
                if (inst.pass || inst.payload.empty())
                    continue;
                const fs::path case_dir = dir / "counterexamples" / c.claim / std::to_string(index++);
                io::save_text(case_dir / "parameters.txt", inst.parameters + "\n" + inst.detail + "\n");
                for (const auto& [file, content] : inst.payload)
                    io::save_text(case_dir / file, content);
            }
        }
    }
    out << text;
    return ok;
}

// ---- generate ------------------------------------------------------------

TruncationCap parse_cap(const std::string& s)
{
    if (s == "kd")
        return TruncationCap::kd;
    if (s == "(k+d)d" || s == "k+d")
        return TruncationCap::k_plus_d_times_d;
    throw InputError("--cap must be kd or (k+d)d");
}

void attest(const fs::path& dir, const std::string& line, std::ostream& out)
{
    io::save_text(dir / "attestation.txt", line + "\n");
    out << line << '\n';
}

int gen_corner_pad(const Args& a, const fs::path& dir, std::ostream& out)
{
    const BinaryMatrix p = need_matrix(a.pattern, "--pattern");
    if (p.dimension() != 2)
        throw InputError("corner-pad takes a 2-dimensional matrix");
    const BinaryMatrix padded = corner_pad(p);
    const bool contains = matrix_contains(padded, p).has_value();
    const bool corner = padded.at(std::vector<int>{padded.extent(1), 1});
    io::save_text(dir / "corner_pad.txt", io::format_matrix(padded));
    attest(dir, "contains: " + yes_no(contains) + ", corner: " + yes_no(corner), out);
    if (!contains || !corner)
        throw PostconditionError("corner pad failed its re-check");
    return ok;
}

int gen_bipartite_double(const Args& a, const fs::path& dir, std::ostream& out)
{
    const OrderedHypergraph g = need_hypergraph(a.input, "--input");
    const BinaryMatrix m = bipartite_double(g);
    io::save_text(dir / "bipartite_double.txt", io::format_matrix(m));
    const bool match = m.weight() == g.edge_count();
    attest(dir, "weight: " + std::to_string(m.weight()) + ", edges: " + std::to_string(g.edge_count()) +
                    ", match: " + yes_no(match),
           out);
    if (!match)
        throw PostconditionError("doubled matrix weight differs from the edge count");
    return ok;
}

int gen_blowup(const Args& a, const fs::path& dir, std::ostream& out)
{
    const OrderedHypergraph g = need_hypergraph(a.input, "--input");
    const int n = a.n_range.empty() ? g.vertex_count() / 2 : single_n(a.n_range);
    const OrderedHypergraph blown = blowup_graph(g, n, a.t);
    io::save_text(dir / "blowup.txt", io::format_hypergraph(blown));
    const std::size_t expected = static_cast<std::size_t>(a.t - 1) * g.edge_count();
    std::string line = "edges: " + std::to_string(blown.edge_count()) + ", (t-1)|E(A)|: " + std::to_string(expected) +
                       ", match: " + yes_no(blown.edge_count() == expected);
    bool failed = blown.edge_count() != expected;
    if (!a.pattern.empty()) {
        const BinaryMatrix p = need_matrix(a.pattern, "--pattern");
        const OrderedHypergraph q = associated_hypergraph(p).graph;
        const bool input_avoids = !hypergraph_contains(g, q);
        const bool output_avoids = !hypergraph_contains(blown, q);
        line += ", input avoids Q: " + yes_no(input_avoids) + ", output avoids Q: " + yes_no(output_avoids);
        failed = failed || (input_avoids && !output_avoids);
    }
    attest(dir, line, out);
    if (failed)
        throw PostconditionError("blow-up failed its re-check");
    return ok;
}

int gen_cyclic_pattern(const Args& a, const fs::path& dir, std::ostream& out)
{
    if (a.d < 2)
        throw InputError("--d must be at least 2");
    const BinaryMatrix c = cyclic_pattern(a.d);
    const bool perm = is_d_permutation_hypergraph(associated_hypergraph(c).graph).has_value();
    io::save_text(dir / "cyclic_pattern.txt", io::format_matrix(c));
    attest(dir, "permutation: " + yes_no(perm), out);
    if (!perm)
        throw PostconditionError("cyclic pattern is not a permutation matrix");
    return ok;
}

OrderedHypergraph permutation_input(const Args& a)
{
    if (!a.input.empty())
        return need_hypergraph(a.input, "--input");
    return associated_hypergraph(need_matrix(a.pattern, "--pattern")).graph;
}

int gen_cyclic_pad(const Args& a, const fs::path& dir, std::ostream& out)
{
    const OrderedHypergraph h = permutation_input(a);
    const CyclicPadResult r = cyclic_pad(h);
    io::save_text(dir / "cyclic_pad.txt", io::format_hypergraph(r.hypergraph));
    io::save_text(dir / "cyclic_pad_matrix.txt", io::format_matrix(r.matrix));
    attest(dir, "contains: " + yes_no(r.contains_input) + ", boundary: " + yes_no(r.boundary), out);
    if (!r.contains_input || !r.boundary)
        throw PostconditionError("cyclic pad failed its re-check");
    return ok;
}

int gen_chain(const Args& a, const fs::path& dir, std::ostream& out)
{
    const BinaryMatrix start = need_matrix(a.pattern, "--pattern");
    const int length = single_n(a.n_range);
    // chain_patterns re-checks every step and throws on failure.
    const auto chain = chain_patterns(start, length);
    for (const auto& m : chain)
        io::save_text(dir / ("chain_" + std::to_string(m.extent(1)) + ".txt"), io::format_matrix(m));
    attest(dir, "steps: " + std::to_string(chain.size() - 1) + ", contains predecessor: yes, boundary: yes", out);
    return ok;
}

int gen_normalize(const Args& a, const fs::path& dir, std::ostream& out)
{
    const OrderedHypergraph g = need_hypergraph(a.input, "--input");
    if (a.k < 1 || a.d < 1)
        throw InputError("normalize needs --k and --d");
    const NormalizeReport r = normalize_edges(g, a.k, a.d, parse_cap(a.cap));
    io::save_text(dir / "without_small.txt", io::format_hypergraph(r.without_small));
    io::save_text(dir / "truncated.txt", io::format_hypergraph(r.truncated));
    std::ostringstream rep;
    rep << "cap: " << to_string(r.cap) << '\n'
        << "threshold: " << r.threshold << '\n'
        << "dropped_small_edges: " << g.edge_count() - r.without_small.edge_count() << '\n'
        << "truncated_edges: " << r.truncated_edges << '\n'
        << "max_multiplicity: " << r.max_multiplicity << '\n';
    for (const auto& [edge, count] : r.multiplicity) {
        rep << "multiplicity";
        for (int v : edge)
            rep << ' ' << v;
        rep << ": " << count << '\n';
    }
    io::save_text(dir / "normalize.txt", rep.str());
    out << rep.str();
    attest(dir, "threshold: " + std::to_string(r.threshold) + ", max multiplicity: " + std::to_string(r.max_multiplicity),
           out);
    return ok;
}

int gen_random_avoider(const Args& a, const fs::path& dir, std::ostream& out)
{
    GeneratorConfig cfg{need_matrix(a.pattern, "--pattern"), single_n(a.n_range), std::nullopt, a.seed,
                        a.trials > 0 ? a.trials : 1};
    if (a.p > 0)
        cfg.p = a.p;
    const auto results = random_avoiders(cfg);
    std::ostringstream csv;
    csv << "trial,seed,p,initial_weight,deletions,final_weight,expected_weight,analytic_target\n";
    bool all_avoid = true;
    double total = 0;
    for (std::size_t t = 0; t < results.size(); ++t) {
        const auto& r = results[t];
        const bool avoids = !matrix_contains(r.matrix, cfg.pattern);
        all_avoid = all_avoid && avoids;
        total += static_cast<double>(r.stats.final_weight);
        io::save_text(dir / ("avoider_" + std::to_string(t) + ".txt"), io::format_matrix(r.matrix));
        csv << t << ',' << r.stats.seed << ',' << exact_double(r.stats.p) << ',' << r.stats.initial_weight << ','
            << r.stats.deletions << ',' << r.stats.final_weight << ',' << exact_double(r.stats.expected_weight) << ','
            << exact_double(r.stats.analytic_target) << '\n';
    }
    const auto& s = results.front().stats;
    std::ostringstream kv;
    kv << "rng: " << rng_name << '\n'
       << "seed: " << a.seed << '\n'
       << "trial_seeds: seed XOR trial\n"
       << "trials: " << results.size() << '\n'
       << "n: " << cfg.n << '\n'
       << "p: " << exact_double(s.p) << '\n'
       << "mean_final_weight (empirical): " << exact_double(total / static_cast<double>(results.size())) << '\n'
       << "expected_weight: " << exact_double(s.expected_weight) << '\n'
       << "analytic_target: " << exact_double(s.analytic_target) << '\n';
    io::save_text(dir / "stats.csv", csv.str());
    io::save_text(dir / "stats.txt", kv.str());
    out << kv.str();
    attest(dir, "avoids: " + yes_no(all_avoid), out);
    if (!all_avoid)
        throw PostconditionError("a repaired matrix still contains the pattern");
    return ok;
}

int gen_contract(const Args& a, const fs::path& dir, std::ostream& out)
{
    const OrderedHypergraph g = need_hypergraph(a.input, "--input");
    const OrderedHypergraph c = interval_contract(g, a.t);
    io::save_text(dir / "contracted.txt", io::format_hypergraph(c));
    std::string line = "vertices: " + std::to_string(c.vertex_count()) + ", edges: " + std::to_string(c.edge_count());
    bool failed = false;
    if (!a.pattern.empty()) {
        const OrderedHypergraph h = need_hypergraph(a.pattern, "--pattern");
        const bool input_avoids = !hypergraph_contains(g, h);
        const bool output_avoids = !hypergraph_contains(c, h);
        line += ", input avoids H: " + yes_no(input_avoids) + ", output avoids H: " + yes_no(output_avoids);
        failed = input_avoids && !output_avoids;
    }
    attest(dir, line, out);
    if (failed)
        throw PostconditionError("contraction of an avoider contains the pattern");
    return ok;
}

int cmd_generate(const Args& a, std::ostream& out)
{
    using Generator = int (*)(const Args&, const fs::path&, std::ostream&);
    static const std::map<std::string, Generator> generators = {
        {"corner-pad", gen_corner_pad},       {"bipartite-double", gen_bipartite_double},
        {"blowup", gen_blowup},               {"cyclic-pattern", gen_cyclic_pattern},
        {"cyclic-pad", gen_cyclic_pad},       {"chain", gen_chain},
        {"normalize", gen_normalize},         {"random-avoider", gen_random_avoider},
        {"contract", gen_contract},
    };
    const auto it = generators.find(a.name);
    if (it == generators.end())
        throw InputError("unknown construction '" + a.name + "'");
    return it->second(a, need_out(a), out);
}

// ---- contains ------------------------------------------------------------

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

int cmd_contains(const Args& a, std::ostream& out)
{
    if (a.host.empty() || a.pattern.empty())
        throw InputError("contains needs --host and --pattern");
    const Object host = load_object(a.host);
    const Object pattern = load_object(a.pattern);
    if (host.index() != pattern.index())
        throw InputError("host and pattern must both be matrices or both hypergraphs");
    std::ostringstream text;
    if (const auto* hm = std::get_if<BinaryMatrix>(&host)) {
        const auto& pm = std::get<BinaryMatrix>(pattern);
        if (hm->dimension() != pm.dimension())
            throw InputError("host and pattern dimensions differ");
        const auto emb = matrix_contains(*hm, pm);
        text << "contains: " << yes_no(emb.has_value()) << '\n';
        if (emb) {
            if (!verify_matrix_embedding(*hm, pm, *emb))
                throw PostconditionError("embedding failed its re-check");
            for (std::size_t l = 0; l < emb->indices.size(); ++l)
                text << "axis " << l + 1 << ": " << join(emb->indices[l]) << '\n';
        }
    } else {
        const auto& hh = std::get<OrderedHypergraph>(host);
        const auto& ph = std::get<OrderedHypergraph>(pattern);
        const auto emb = hypergraph_contains(hh, ph);
        text << "contains: " << yes_no(emb.has_value()) << '\n';
        if (emb) {
            if (!verify_hypergraph_embedding(hh, ph, *emb))
                throw PostconditionError("embedding failed its re-check");
            text << "vertex map: " << join(emb->vertex_map) << '\n';
            for (std::size_t i = 0; i < emb->edge_map.size(); ++i)
                text << "edge " << join(ph.edges()[i]) << " -> " << join(hh.edges()[emb->edge_map[i]]) << '\n';
        }
    }
    if (!a.out.empty())
        io::save_text(fs::path(a.out) / "containment.txt", text.str());
    out << text.str();
    return ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Args a;
    CLI::App app{"Pattern containment, extremal functions and constructions for 0-1 matrices and ordered hypergraphs",
                 "patex"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "exact extremal table for one pattern over a range of n");
    compute->add_option("kind", a.kind, "ex, f, gex, exe, exi or count")->required();
    compute->add_option("--pattern", a.pattern, "pattern file")->required();
    compute->add_option("--n", a.n_range, "range A..B")->required();
    compute->add_option("--out", a.out, "output directory")->required();
    compute->add_option("--d", a.d, "dimension for f (default: pattern dimension)");
    compute->add_option("--edge-cap", a.edge_cap, "largest candidate edge size for hypergraph searches");
    compute->add_flag("--exact", a.exact, "consider every nonempty edge (no size cap)");
    compute->add_option("--workers", a.workers, "search threads");

    auto* verify = app.add_subcommand("verify", "run the claim checks and write a report");
    verify->add_option("--claims", a.claims, "comma-separated claim ids (default: all)");
    verify->add_option("--budget", a.budget, "largest n for exact-solver comparisons");
    verify->add_option("--seed", a.seed, "seed for randomized checks");
    verify->add_option("--trials", a.trials, "trials for the deletion-density check");
    verify->add_option("--n", a.n_range, "side length for the deletion-density check");
    verify->add_option("--out", a.out, "report directory");
    verify->add_option("--workers", a.workers, "search threads");

    auto* generate = app.add_subcommand("generate", "run one construction and re-check its output");
    generate->add_option("name", a.name,
                         "corner-pad, bipartite-double, blowup, cyclic-pattern, cyclic-pad, chain, normalize, "
                         "random-avoider, contract")
        ->required();
    generate->add_option("--pattern", a.pattern, "pattern matrix (or hypergraph for contract)");
    generate->add_option("--input", a.input, "input hypergraph");
    generate->add_option("--out", a.out, "output directory")->required();
    generate->add_option("--n", a.n_range, "side length / part size / target length");
    generate->add_option("--t", a.t, "interval count or length");
    generate->add_option("--d", a.d, "dimension");
    generate->add_option("--k", a.k, "pattern length");
    generate->add_option("--cap", a.cap, "truncation cap: kd or (k+d)d");
    generate->add_option("--seed", a.seed, "base seed");
    generate->add_option("--trials", a.trials, "number of trials");
    generate->add_option("--p", a.p, "1-entry probability (default from the pattern)");

    auto* contains = app.add_subcommand("contains", "decide containment and print the embedding");
    contains->add_option("--host", a.host, "host file")->required();
    contains->add_option("--pattern", a.pattern, "pattern file")->required();
    contains->add_option("--out", a.out, "directory for containment.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : input_error;
    }

    try {
        if (*compute)
            return cmd_compute(a, out);
        if (*verify)
            return cmd_verify(a, out);
        if (*generate)
            return cmd_generate(a, out);
        return cmd_contains(a, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return capacity_error;
    } catch (const PostconditionError& e) {
        err << "postcondition failed: " << e.what() << '\n';
        return postcondition_error;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return postcondition_error;
    }
}

}  // namespace patex::cli
