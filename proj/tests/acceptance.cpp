// Acceptance run: one PASS/FAIL line per primary criterion. Values on the
// solver side come from the library; reference values come from the
// brute-force oracles in oracles.hpp or from closed forms.

#include "cli.hpp"
#include "oracles.hpp"

#include "patex/constructions.hpp"
#include "patex/containment.hpp"
#include "patex/enumerate.hpp"
#include "patex/extremal.hpp"
#include "patex/io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace patex;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

SearchOptions exact()
{
    SearchOptions o;
    o.exact = true;
    return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s)
{
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << "s";
    return o.str();
}

Outcome oracle_equivalence()
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    int compared = 0;
    for (const auto& b : enumerate::matrices({2, 2})) {
        if (b.weight() == 0)
            continue;
        for (int n = 1; n <= 3; ++n) {
            const auto c = ex_matrix(b, n);
            const long long brute = oracle::max_avoider_weight(b, 2, n);
            ++compared;
            if (c.value != brute || !c.verified) {
                r.pass = false;
                r.detail += " mismatch " + b.to_string() + " n=" + std::to_string(n);
            }
        }
    }
    const double s = seconds_since(t0);
    r.pass = r.pass && s < 60;
    r.detail = std::to_string(compared) + " (pattern, n) pairs equal to full enumeration in " + secs(s) + r.detail;
    return r;
}

Outcome identity_staircase()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto id = make_matrix({2, 2}, {{1, 1}, {2, 2}});
    Outcome r;
    std::string values;
    for (int n = 1; n <= 5; ++n) {
        const auto c = ex_matrix(id, n);
        std::vector<Coord> stair;
        for (int j = 1; j <= n; ++j)
            stair.push_back({1, j});
        for (int i = 2; i <= n; ++i)
            stair.push_back({i, 1});
        const auto s = make_matrix({n, n}, stair);
        const bool stair_ok = static_cast<long long>(s.weight()) == 2 * n - 1 && !oracle::matrix_contains(s, id);
        bool brute_ok = true;
        if (n <= 4)
            brute_ok = oracle::max_avoider_weight(id, 2, n) == 2 * n - 1;
        const bool ok = c.value == 2 * n - 1 && c.verified && stair_ok && brute_ok;
        r.pass = r.pass && ok;
        values += (n > 1 ? "," : "") + std::to_string(c.value);
    }
    const double s = seconds_since(t0);
    r.pass = r.pass && s < 300;
    r.detail = "values " + values + " for n=1..5 (expected 1,3,5,7,9), staircase witnesses avoid I2, " + secs(s);
    return r;
}

Outcome doubling_upper_bound()
{
    Outcome r;
    int pairs = 0;
    for (int k1 = 1; k1 <= 3; ++k1)
        for (int k2 = 1; k2 <= 3; ++k2)
            for (const auto& p : enumerate::matrices({k1, k2})) {
                if (p.weight() > 3 || !p.at(std::vector<int>{k1, 1}))
                    continue;
                const auto q = associated_hypergraph(p).graph;
                for (int n = 1; n <= 4; ++n) {
                    const auto ex = ex_matrix(p, n);
                    const auto gex = gex_graph(q, n);
                    long long gex_brute = 0;
                    for (const auto& g : enumerate::graphs(n))
                        if (!oracle::hypergraph_contains(g, q))
                            gex_brute = std::max<long long>(gex_brute, static_cast<long long>(g.edge_count()));
                    bool ex_ok = ex.verified;
                    if (n <= 3)
                        ex_ok = ex_ok && ex.value == oracle::max_avoider_weight(p, 2, n);
                    ++pairs;
                    if (!(gex.value <= ex.value && gex.value == gex_brute && gex.verified && ex_ok)) {
                        r.pass = false;
                        r.detail += " violation P=" + p.to_string() + " n=" + std::to_string(n);
                    }
                }
            }
    r.detail = std::to_string(pairs) + " (P, n) pairs with gex(Q,n) <= ex(P,n)" + r.detail;
    return r;
}

Outcome blowup_lower_bound()
{
    Outcome r;
    const auto p = corner_pad(make_matrix({2, 2}, {{1, 1}, {2, 2}}));
    const auto q = associated_hypergraph(p).graph;
    const int n = 2;
    const auto ex = ex_matrix(p, n);
    const auto a = associated_hypergraph(std::get<BinaryMatrix>(ex.witness)).graph;
    r.detail = "ex(P,2)=" + std::to_string(ex.value);
    for (int t = 2; t <= 3; ++t) {
        const auto g = blowup_graph(a, n, t);
        const bool count_ok = static_cast<long long>(g.edge_count()) == (t - 1) * ex.value;
        const bool avoids = !hypergraph_contains(g, q) && !oracle::hypergraph_contains(g, q);
        r.pass = r.pass && count_ok && avoids && ex.verified;
        r.detail += "; t=" + std::to_string(t) + ": " + std::to_string(g.edge_count()) + " edges, avoids Q " +
                    (avoids ? "yes" : "no");
    }
    return r;
}

Outcome uniform_edge_bound()
{
    Outcome r;
    const OrderedHypergraph h(4, {{1, 4}, {2, 3}});
    const auto p = associated_matrix(h, PartsSpec::equal(2, 2));
    r.pass = satisfies_boundary_condition(h);
    r.detail = "H=" + h.to_string();
    for (int n = 1; n <= 4; ++n) {
        const auto f = f_multi(p, 2, n);
        long long most = 0;
        for (const auto& g : enumerate::graphs(n))
            if (!oracle::hypergraph_contains(g, h)) {
                most = std::max<long long>(most, static_cast<long long>(g.edge_count()));
                r.pass = r.pass && static_cast<long long>(g.edge_count()) <= f.value;
            }
        r.pass = r.pass && f.verified && f.value == oracle::max_avoider_weight(p, 2, n);
        r.detail += "; n=" + std::to_string(n) + ": max avoider edges " + std::to_string(most) +
                    " <= f=" + std::to_string(f.value);
    }
    return r;
}

Outcome cyclic_pad_chain()
{
    Outcome r;
    int patterns = 0;
    int steps = 0;
    for (int d = 2; d <= 3; ++d)
        for (int k = 1; k <= 3; ++k)
            for (const auto& m : enumerate::d_permutation_matrices(d, k)) {
                ++patterns;
                const auto h = associated_hypergraph(m).graph;
                const auto padded = cyclic_pad(h);
                const auto emb = hypergraph_contains(padded.hypergraph, h);
                bool ok = is_d_permutation_hypergraph(padded.hypergraph) == k + d - 1 && emb &&
                          verify_hypergraph_embedding(padded.hypergraph, h, *emb) &&
                          oracle::matrix_contains(padded.matrix, m) && satisfies_boundary_condition(padded.hypergraph);
                const auto chain = chain_patterns(padded.matrix, k + d + 1);
                ok = ok && chain.size() == 3;
                for (std::size_t i = 1; i < chain.size(); ++i) {
                    ++steps;
                    const auto hn = associated_hypergraph(chain[i]).graph;
                    const auto hp = associated_hypergraph(chain[i - 1]).graph;
                    const auto e = hypergraph_contains(hn, hp);
                    ok = ok && is_d_permutation_hypergraph(hn) == chain[i - 1].extent(1) + 1 && e &&
                         verify_hypergraph_embedding(hn, hp, *e) && oracle::matrix_contains(chain[i], chain[i - 1]) &&
                         satisfies_boundary_condition(hn);
                }
                if (!ok) {
                    r.pass = false;
                    r.detail += " failure " + m.to_string();
                }
            }
    r.detail = std::to_string(patterns) + " start patterns, " + std::to_string(steps) + " chain steps verified" + r.detail;
    return r;
}

Outcome avoider_count_recurrence()
{
    Outcome r;
    const OrderedHypergraph h(2, {{1, 2}});
    const int t = 2;
    const BigInt base = (BigInt(1) << t) - 1;
    for (int n = 1; n <= 2; ++n) {
        const BigInt small = count_avoiders(h, n, exact());
        const BigInt large = count_avoiders(h, t * n, exact());
        const bool formula = small == (BigInt(1) << n) && large == (BigInt(1) << (t * n)) &&
                             small == oracle::hyper_extremes(h, n, n).count &&
                             large == oracle::hyper_extremes(h, t * n, t * n).count;
        const auto exi = exi_hyper(h, n, exact());
        const auto exe = exe_hyper(h, n, exact());
        const BigInt bound_i = pow(base, static_cast<unsigned>(exi.value)) * small;
        const BigInt bound_e = pow(base, static_cast<unsigned>(exe.value)) * small;
        r.pass = r.pass && formula && large <= bound_i;
        r.detail += std::string(n > 1 ? "; " : "") + "n=" + std::to_string(n) + ": M(H," + std::to_string(t * n) +
                    ")=" + large.str() + " <= 3^ex_i * M(H,n) = " + bound_i.str() + " (ex_e variant " + bound_e.str() +
                    (large <= bound_e ? " holds" : " fails") + ")";
    }
    return r;
}

Outcome deletion_density()
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    const auto b = make_matrix({2, 2}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    const auto results = random_avoiders(GeneratorConfig{b, 8, std::nullopt, 0, 100});
    double total = 0;
    int containing = 0;
    for (const auto& a : results) {
        total += static_cast<double>(a.matrix.weight());
        containing += oracle::matrix_contains(a.matrix, b) ? 1 : 0;
    }
    const double mean = total / static_cast<double>(results.size());
    const double expectation = results.front().stats.expected_weight;
    const double s = seconds_since(t0);
    r.pass = containing == 0 && mean >= 0.9 * expectation && s < 60;
    std::ostringstream o;
    o.precision(4);
    o << std::fixed << "100 seeds, outputs containing B: " << containing << ", empirical mean weight " << mean
      << " vs 0.9 x expectation " << 0.9 * expectation << " (expectation " << expectation << ", analytic bound "
      << results.front().stats.analytic_target << "), " << secs(s);
    r.detail = o.str();
    return r;
}

Outcome partite_equivalence()
{
    Outcome r;
    std::vector<AssociatedHypergraph> patterns;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const auto& m : enumerate::matrices({a, b})) {
                auto h = associated_hypergraph(m);
                if (h.graph.isolated_vertices().empty())
                    patterns.push_back(std::move(h));
            }
    long long checked = 0;
    long long disagreements = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& host : enumerate::matrices({n, n})) {
            const auto hg = associated_hypergraph(host);
            for (const auto& p : patterns) {
                ++checked;
                const bool by_graph = hypergraph_contains(hg.graph, p.graph).has_value();
                const bool by_matrix = matrix_contains(host, associated_matrix(p.graph, p.parts)).has_value();
                bool combined = false;
                try {
                    combined = klazar_marcus_check(hg.graph, hg.parts, p.graph, p.parts);
                } catch (const std::exception&) {
                    ++disagreements;
                    continue;
                }
                if (by_graph != by_matrix || combined != by_graph)
                    ++disagreements;
            }
        }
    r.pass = disagreements == 0;
    r.detail = std::to_string(checked) + " (host, pattern) pairs, " + std::to_string(disagreements) + " disagreements";
    return r;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Relative path -> contents for every file below `dir`.
std::map<std::string, std::string> snapshot(const fs::path& dir)
{
    std::map<std::string, std::string> out;
    if (!fs::exists(dir))
        return out;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file())
            out[fs::relative(e.path(), dir).string()] = slurp(e.path());
    return out;
}

Outcome determinism()
{
    Outcome r;
    const fs::path root = fs::temp_directory_path() / "patex_acceptance_determinism";
    fs::remove_all(root);
    const fs::path in = root / "inputs";
    io::save_text(in / "id.txt", "2 2 2\n1 1\n2 2\n");
    io::save_text(in / "full.txt", "2 2 2\n1 1\n1 2\n2 1\n2 2\n");
    io::save_text(in / "diag3.txt", "3 2 2 2\n1 1 1\n2 2 2\n");
    io::save_text(in / "edge.txt", "2\n1 2\n");
    io::save_text(in / "cross.txt", "4\n1 3\n2 4\n");
    io::save_text(in / "bip.txt", "4\n1 3\n1 4\n2 4\n");
    io::save_text(in / "wide.txt", "7\n1\n1 2 3 4 5 6\n2 5\n");
    io::save_text(in / "host.txt", "2 3 3\n1 1\n2 3\n3 2\n");
    io::save_text(in / "pad.txt", "2 3 3\n1 2\n2 3\n3 1\n");
    const auto p = [&](const char* f) { return (in / f).string(); };

    const std::vector<std::vector<std::string>> commands = {
        {"compute", "ex", "--pattern", p("id.txt"), "--n", "1..5"},
        {"compute", "f", "--pattern", p("diag3.txt"), "--n", "1..2"},
        {"compute", "gex", "--pattern", p("cross.txt"), "--n", "1..6"},
        {"compute", "exe", "--pattern", p("cross.txt"), "--n", "1..4", "--exact"},
        {"compute", "exi", "--pattern", p("cross.txt"), "--n", "1..4", "--exact", "--workers", "3"},
        {"compute", "count", "--pattern", p("edge.txt"), "--n", "1..4"},
        {"verify", "--budget", "3", "--seed", "5", "--trials", "20"},
        {"generate", "corner-pad", "--pattern", p("id.txt")},
        {"generate", "bipartite-double", "--input", p("cross.txt")},
        {"generate", "blowup", "--input", p("bip.txt"), "--n", "2", "--t", "3", "--pattern", p("pad.txt")},
        {"generate", "cyclic-pattern", "--d", "3"},
        {"generate", "cyclic-pad", "--input", p("cross.txt")},
        {"generate", "chain", "--pattern", p("pad.txt"), "--n", "6"},
        {"generate", "normalize", "--input", p("wide.txt"), "--k", "2", "--d", "2", "--cap", "(k+d)d"},
        {"generate", "random-avoider", "--pattern", p("full.txt"), "--n", "8", "--seed", "11", "--trials", "10"},
        {"generate", "contract", "--input", p("cross.txt"), "--t", "2"},
        {"contains", "--host", p("host.txt"), "--pattern", p("id.txt")},
    };
    int identical = 0;
    for (std::size_t c = 0; c < commands.size(); ++c) {
        std::string stdout_text[2];
        std::map<std::string, std::string> files[2];
        int codes[2] = {-1, -1};
        for (int rep = 0; rep < 2; ++rep) {
            const fs::path out = root / ("run" + std::to_string(rep)) / std::to_string(c);
            std::vector<std::string> args = {"patex"};
            args.insert(args.end(), commands[c].begin(), commands[c].end());
            args.push_back("--out");
            args.push_back(out.string());
            std::vector<const char*> argv;
            for (const auto& a : args)
                argv.push_back(a.c_str());
            std::ostringstream o, e;
            codes[rep] = cli::run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
            stdout_text[rep] = o.str();
            files[rep] = snapshot(out);
        }
        const bool same = codes[0] == 0 && codes[1] == 0 && stdout_text[0] == stdout_text[1] &&
                          files[0] == files[1] && !files[0].empty();
        if (same) {
            ++identical;
        } else {
            r.pass = false;
            r.detail += " differs: " + commands[c][0] + " " + commands[c][1];
        }
    }
    r.detail = std::to_string(identical) + "/" + std::to_string(commands.size()) +
               " commands byte-identical across two runs" + r.detail;
    fs::remove_all(root);
    return r;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle-equivalence: ex of every 2x2 pattern, n <= 3, equals full enumeration", oracle_equivalence},
        {"identity-extremal: ex(I2, n) = 2n-1 for n = 1..5", identity_staircase},
        {"doubling-upper-bound: gex(Q,n) <= ex(P,n), corner-anchored P, weight <= 3, n <= 4", doubling_upper_bound},
        {"blowup-lower-bound: blow-up has (t-1) ex(P,2) edges and avoids Q, t in {2,3}", blowup_lower_bound},
        {"uniform-edge-bound: 2-uniform avoiders on [n], n <= 4, have at most f(P,2,n) edges", uniform_edge_bound},
        {"cyclic-pad-chain: d in {2,3}, k <= 3, padded and chained patterns verified", cyclic_pad_chain},
        {"avoider-count-recurrence: |M(H,2n)| <= 3^ex_i(H,n) |M(H,n)| for H = {1,2}, n = 1..2",
         avoider_count_recurrence},
        {"deletion-density: 2x2 all-ones, n = 8, 100 seeds", deletion_density},
        {"partite-equivalence: hypergraph vs associated-matrix containment, d = 2, n <= 3", partite_equivalence},
        {"determinism: every CLI command twice, byte-identical outputs", determinism},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
