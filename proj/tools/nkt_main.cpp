// Command-line front end: closed-form minimum edge counts, witness
// construction, membership verification, exhaustive searches, and batch
// tables.  Exit codes: 0 success, 2 infeasible parameters, 3 size cap
// exceeded, 1 anything else.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nkt/extremal.hpp"
#include "nkt/graph6.hpp"
#include "nkt/render.hpp"
#include "nkt/search.hpp"
#include "nkt/verify.hpp"

namespace {

struct CommonFlags {
    std::string format = "human";
    bool stable = false;
    int jobs = 0;
    bool allow_n8 = false;
};

class Timer {
  public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

nkt::RenderOptions render_options(const CommonFlags& flags, const Timer& timer) {
    nkt::RenderOptions opts;
    opts.format = flags.format == "structured" ? nkt::Format::structured : nkt::Format::human;
    opts.stable = flags.stable;
    opts.elapsed_ms = timer.ms();
    return opts;
}

nkt::SearchOptions search_options(const CommonFlags& flags, int n) {
    nkt::SearchOptions opts;
    opts.jobs = flags.jobs;
    opts.allow_n8 = flags.allow_n8;
    if (n >= 8)
        opts.progress = [](std::uint64_t done, std::uint64_t total) {
            std::fprintf(stderr, "\rscanning %3.0f%%", 100.0 * static_cast<double>(done) /
                                                           static_cast<double>(total));
            if (done == total) std::fprintf(stderr, "\n");
            std::fflush(stderr);
        };
    return opts;
}

std::string cache_file() {
    const char* dir = std::getenv("NKT_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/construct-cache.txt";
}

int run_min_edges(int n, int k, int t, std::optional<int> r, const CommonFlags& flags) {
    Timer timer;
    nkt::ExtremalRecord rec = r ? nkt::min_nktr(n, k, t, *r) : nkt::min_nkt(n, k, t);
    std::optional<std::vector<nkt::CandidateDecomposition>> cands;
    if (!r && n >= k && k >= t && t >= 2) cands = nkt::candidate_decompositions(n, k, t);
    std::cout << nkt::render_min_edges(rec, cands ? &*cands : nullptr,
                                       render_options(flags, timer));
    if (!rec.feasible) {
        if (rec.reason == nkt::InfeasibleReason::alpha_bound)
            std::cerr << "infeasible: alpha(G) < k-t+2 for every (n,k,t)-graph, so r <= "
                      << k - t + 1 << "\n";
        else
            std::cerr << "infeasible: " << nkt::to_token(rec.reason) << "\n";
        return 2;
    }
    return 0;
}

int run_construct(int n, int k, int t, int r, const CommonFlags& flags) {
    Timer timer;
    std::string cache = cache_file();
    if (!cache.empty()) nkt::load_construct_cache(cache);
    nkt::ConstructResult cr = nkt::recursive_min_construct(n, k, t, r);
    if (!cache.empty()) nkt::save_construct_cache(cache);
    std::cout << nkt::render_construct(cr, nkt::NktParams{n, k, t, r},
                                       render_options(flags, timer));
    if (!cr.feasible) {
        std::cerr << "infeasible: " << nkt::to_token(cr.reason) << "\n";
        return 2;
    }
    return 0;
}

int run_verify(const std::vector<std::string>& inputs, int k, int t, std::optional<int> r,
               const CommonFlags& flags) {
    Timer timer;
    std::vector<std::string> lines = inputs;
    if (lines.empty()) {
        std::string line;
        while (std::getline(std::cin, line))
            if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw nkt::InvalidInputError("no graphs given");
    std::vector<nkt::VerifyOutcome> outcomes;
    outcomes.reserve(lines.size());
    for (const std::string& line : lines) {
        nkt::Graph g = nkt::graph6_decode(line);
        nkt::VerifyOutcome o;
        o.input = line;
        o.order = g.order();
        o.edges = static_cast<long long>(g.edge_count());
        std::uint32_t free_set = nkt::max_kt_free_set(g, t);
        o.max_ktfree = std::popcount(free_set);
        o.member = o.max_ktfree <= k - 1 || k > g.order();
        if (!o.member) {
            std::uint32_t pick = free_set;
            for (int have = o.max_ktfree; have > k; --have) pick &= pick - 1;
            o.counterexample = pick;
        }
        if (r) o.alpha = nkt::independence_number(g);
        o.ok = o.member && (!r || *o.alpha == *r);
        outcomes.push_back(std::move(o));
    }
    std::cout << nkt::render_verify(outcomes, k, t, r, render_options(flags, timer));
    return 0;
}

int run_search_conjecture(int n, int k, int t, const CommonFlags& flags) {
    Timer timer;
    auto rep = nkt::verify_strong_conjecture(n, k, t, search_options(flags, n));
    std::cout << nkt::render_search(rep, "conjecture", render_options(flags, timer));
    return 0;
}

int run_search_mainthm(int n, int k, int t, int r, const CommonFlags& flags) {
    Timer timer;
    auto rep = nkt::verify_mainthm(n, k, t, r, search_options(flags, n));
    std::cout << nkt::render_search(rep, "mainthm", render_options(flags, timer));
    return 0;
}

int run_search_clique_min(int n, int k, int t, int s, const CommonFlags& flags) {
    Timer timer;
    auto rep = nkt::min_clique_count(n, k, t, s, search_options(flags, n));
    std::cout << nkt::render_search(rep, "clique-min", render_options(flags, timer));
    return 0;
}

int run_search_saturation(int n, int k, int t, const CommonFlags& flags) {
    Timer timer;
    auto rep = nkt::inclusion_minimal(n, k, t, search_options(flags, n));
    std::cout << nkt::render_saturation(rep, render_options(flags, timer));
    return 0;
}

int run_search_nikiforov(int n, const CommonFlags& flags) {
    Timer timer;
    auto rep = nkt::nikiforov_compare(n);
    std::cout << nkt::render_nikiforov(rep, render_options(flags, timer));
    return 0;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw nkt::InvalidInputError("empty range " + text);
        return {lo, hi};
    } catch (const nkt::Error&) {
        throw;
    } catch (const std::exception&) {
        throw nkt::InvalidInputError("bad range " + text + " (want A or A..B)");
    }
}

int run_table(const std::string& ns, const std::string& ks, const std::string& ts,
              const CommonFlags& flags) {
    Timer timer;
    nkt::TableGrid grid;
    std::tie(grid.n_lo, grid.n_hi) = parse_range(ns);
    std::tie(grid.k_lo, grid.k_hi) = parse_range(ks);
    std::tie(grid.t_lo, grid.t_hi) = parse_range(ts);
    if (grid.n_lo < 1 || grid.k_lo < 1 || grid.t_lo < 1)
        throw nkt::InvalidInputError("ranges start at 1");
    long long cells = static_cast<long long>(grid.n_hi - grid.n_lo + 1) *
                      (grid.k_hi - grid.k_lo + 1) * (grid.t_hi - grid.t_lo + 1);
    if (grid.n_hi > 1000 || cells > 100000)
        throw nkt::InvalidInputError("table bounded to n <= 1000 and 100000 cells");
    for (int t = grid.t_lo; t <= grid.t_hi; ++t)
        for (int n = grid.n_lo; n <= grid.n_hi; ++n)
            for (int k = grid.k_lo; k <= grid.k_hi; ++k) {
                auto rec = nkt::min_nkt(n, k, t);
                grid.cells.push_back(rec.feasible ? std::optional<long long>(rec.min_edges)
                                                  : std::nullopt);
            }
    std::cout << nkt::render_table(grid, render_options(flags, timer));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum (n,k,t)-graph calculator: closed-form extremal values, witness\n"
                 "construction, membership checks, and exhaustive small-graph searches"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonFlags flags;
    app.add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"human", "structured"}))
        ->capture_default_str();
    app.add_flag("--stable", flags.stable, "omit timing for reproducible output");
    app.add_option("--jobs", flags.jobs, "worker threads for searches (0 = all cores)");
    app.add_flag("--allow-n8", flags.allow_n8, "permit searches at n = 8 (2^28 graphs)");

    int n = 0, k = 0, t = 0, s = 0;
    std::optional<int> r;
    std::vector<std::string> graphs;
    std::string n_range, k_range, t_range;

    auto* min_edges = app.add_subcommand("min-edges", "minimum edges of an (n,k,t[,r])-graph");
    min_edges->add_option("-n", n, "vertices")->required();
    min_edges->add_option("-k", k, "subset size")->required();
    min_edges->add_option("-t", t, "clique size")->required();
    min_edges->add_option("-r", r, "independence number (exact)");

    auto* construct = app.add_subcommand("construct", "build one minimum (n,k,t,r)-graph");
    construct->add_option("-n", n, "vertices")->required();
    construct->add_option("-k", k, "subset size")->required();
    construct->add_option("-t", t, "clique size")->required();
    construct->add_option("-r", r, "independence number (exact)")->required();

    auto* verify = app.add_subcommand(
        "verify", "test graph6 inputs (arguments or stdin lines) for the (n,k,t[,r]) property");
    verify->add_option("-k", k, "subset size")->required();
    verify->add_option("-t", t, "clique size")->required();
    verify->add_option("-r", r, "require this independence number");
    verify->add_option("graphs", graphs, "graph6 strings (stdin when absent)");

    auto* search = app.add_subcommand("search", "exhaustive searches over isomorphism classes");
    search->require_subcommand(1);
    search->fallthrough();
    auto* conjecture =
        search->add_subcommand("conjecture", "all minimum (n,k,t)-graphs are clique unions");
    conjecture->add_option("-n", n, "vertices")->required();
    conjecture->add_option("-k", k, "subset size")->required();
    conjecture->add_option("-t", t, "clique size")->required();
    auto* mainthm = search->add_subcommand(
        "mainthm", "all minimum (n,k,t,r)-graphs are clique unions");
    mainthm->add_option("-n", n, "vertices")->required();
    mainthm->add_option("-k", k, "subset size")->required();
    mainthm->add_option("-t", t, "clique size")->required();
    mainthm->add_option("-r", r, "independence number (exact)")->required();
    auto* clique_min =
        search->add_subcommand("clique-min", "minimum K_s count over (n,k,t)-graphs");
    clique_min->add_option("-n", n, "vertices")->required();
    clique_min->add_option("-k", k, "subset size")->required();
    clique_min->add_option("-t", t, "clique size")->required();
    clique_min->add_option("-s", s, "clique size to count")->required();
    auto* saturation = search->add_subcommand(
        "saturation", "maximum edges over inclusion-minimal (n,k,t)-graphs");
    saturation->add_option("-n", n, "vertices")->required();
    saturation->add_option("-k", k, "subset size")->required();
    saturation->add_option("-t", t, "clique size")->required();
    auto* nikiforov = search->add_subcommand(
        "nikiforov", "K_4 count of the C5 clique-blowup versus two balanced cliques");
    nikiforov->add_option("-n", n, "vertices (divisible by 10)")->required();

    auto* table = app.add_subcommand("table", "grid of minimum edge counts over ranges");
    table->add_option("-n", n_range, "vertex range A..B or single value")->required();
    table->add_option("-k", k_range, "subset-size range")->required();
    table->add_option("-t", t_range, "clique-size range")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*min_edges) return run_min_edges(n, k, t, r, flags);
        if (*construct) return run_construct(n, k, t, *r, flags);
        if (*verify) return run_verify(graphs, k, t, r, flags);
        if (*search) {
            if (*conjecture) return run_search_conjecture(n, k, t, flags);
            if (*mainthm) return run_search_mainthm(n, k, t, *r, flags);
            if (*clique_min) return run_search_clique_min(n, k, t, s, flags);
            if (*saturation) return run_search_saturation(n, k, t, flags);
            if (*nikiforov) return run_search_nikiforov(n, flags);
        }
        if (*table) return run_table(n_range, k_range, t_range, flags);
        std::cerr << "error: no command\n";
        return 1;
    } catch (const nkt::UnsupportedSizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
