#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "nkt/clique_union.hpp"
#include "nkt/errors.hpp"
#include "nkt/extremal.hpp"
#include "nkt/verify.hpp"

namespace {

using nkt::CliqueUnion;

std::vector<int> parts_of(std::initializer_list<int> ps) { return std::vector<int>(ps); }

CliqueUnion cu(std::initializer_list<int> ps) { return CliqueUnion(parts_of(ps)); }

// All partitions of n into exactly r parts, descending.
void gen_partitions(int n, int r, int max_part, std::vector<int>& stack,
                    std::vector<std::vector<int>>& out) {
    if (r == 0) {
        if (n == 0) out.push_back(stack);
        return;
    }
    int hi = std::min(max_part, n - (r - 1));
    for (int p = hi; p >= (n + r - 1) / r; --p) {
        stack.push_back(p);
        gen_partitions(n - p, r - 1, p, stack, out);
        stack.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    gen_partitions(n, r, n, stack, out);
    return out;
}

// Partition-level reference: a clique union with these parts is an
// (n,k,t)-graph exactly when every part contributes at most t-1 vertices to
// a clique-free set, i.e. sum of min(p, t-1) stays below k.
bool parts_are_nkt(const std::vector<int>& parts, int k, int t) {
    long long largest_free = 0;
    for (int p : parts) largest_free += std::min(p, t - 1);
    return largest_free <= k - 1;
}

long long parts_edges(const std::vector<int>& parts) {
    long long e = 0;
    for (long long p : parts) e += p * (p - 1) / 2;
    return e;
}

struct BruteOptima {
    bool feasible = false;
    long long min_edges = 0;
    std::vector<CliqueUnion> optima;
};

// Reference minimum over partitions of n into exactly r parts.  The
// membership test goes through the realized graph's clique-free search when
// asked, avoiding any shared code path with the scan under test.
BruteOptima brute_min_partition(int n, int k, int t, int r, bool realize) {
    BruteOptima res;
    if (r > n) return res;
    for (const auto& parts : partitions(n, r)) {
        bool member;
        if (realize) {
            nkt::Graph g = CliqueUnion(parts).realize();
            member = nkt::max_kt_free_size(g, t) <= k - 1;
        } else {
            member = parts_are_nkt(parts, k, t);
        }
        if (!member) continue;
        long long e = parts_edges(parts);
        if (!res.feasible || e < res.min_edges) {
            res.feasible = true;
            res.min_edges = e;
            res.optima.assign(1, CliqueUnion(parts));
        } else if (e == res.min_edges) {
            res.optima.emplace_back(parts);
        }
    }
    std::sort(res.optima.begin(), res.optima.end());
    return res;
}

}  // namespace

TEST_CASE("partition scan equals realized-graph brute force up to 9 vertices") {
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n + 2; ++k)
            for (int t = 1; t <= k + 1; ++t)
                for (int r = 1; r <= n; ++r) {
                    auto brute = brute_min_partition(n, k, t, r, n <= 7);
                    auto scan = nkt::feasible_min_partition(n, k, t, r);
                    INFO("n=" << n << " k=" << k << " t=" << t << " r=" << r);
                    REQUIRE(scan.feasible == brute.feasible);
                    if (!scan.feasible) continue;
                    REQUIRE(scan.min_edges == brute.min_edges);
                    REQUIRE(scan.optima == brute.optima);
                    CHECK(scan.exhaustive);
                }
}

TEST_CASE("partition scan equals formula brute force up to 16 vertices") {
    for (int n = 10; n <= 16; ++n)
        for (int k = 1; k <= n + 2; ++k)
            for (int t = 1; t <= k + 1; ++t)
                for (int r = 1; r <= n; ++r) {
                    auto brute = brute_min_partition(n, k, t, r, false);
                    auto scan = nkt::feasible_min_partition(n, k, t, r);
                    INFO("n=" << n << " k=" << k << " t=" << t << " r=" << r);
                    REQUIRE(scan.feasible == brute.feasible);
                    if (!scan.feasible) continue;
                    REQUIRE(scan.min_edges == brute.min_edges);
                    REQUIRE(scan.optima == brute.optima);
                }
}

TEST_CASE("worked minimum values") {
    auto rec = nkt::min_nkt(10, 8, 3);
    REQUIRE(rec.feasible);
    CHECK(rec.min_edges == 9);
    CHECK(rec.minimizers == std::vector<CliqueUnion>{cu({3, 3, 3, 1}), cu({4, 3, 1, 1, 1})});
    CHECK(rec.alphas() == std::vector<int>{4, 5});
    CHECK(rec.exhaustive);

    auto rec2 = nkt::min_nkt(9, 8, 4);
    CHECK(rec2.min_edges == 10);
    CHECK(rec2.minimizers == std::vector<CliqueUnion>{cu({5, 1, 1, 1, 1})});
    CHECK(rec2.alphas() == std::vector<int>{5});

    auto rec3 = nkt::min_nktr(9, 8, 4, 3);
    CHECK(rec3.min_edges == 12);
    CHECK(rec3.minimizers == std::vector<CliqueUnion>{cu({4, 4, 1}), cu({5, 2, 2})});

    CHECK(nkt::min_nkt(7, 5, 3).min_edges == 9);
    CHECK(nkt::min_nkt(7, 5, 3).minimizers == std::vector<CliqueUnion>{cu({4, 3})});
    CHECK(nkt::min_nkt(5, 3, 2).minimizers == std::vector<CliqueUnion>{cu({3, 2})});
    CHECK(nkt::min_nktr(10, 8, 3, 6).min_edges == 10);
    CHECK(nkt::min_nktr(10, 8, 3, 6).minimizers ==
          std::vector<CliqueUnion>{cu({5, 1, 1, 1, 1, 1})});
    CHECK(nkt::min_nktr(6, 4, 2, 3).minimizers == std::vector<CliqueUnion>{cu({2, 2, 2})});
}

TEST_CASE("infeasible reasons") {
    auto r1 = nkt::min_nktr(9, 8, 4, 6);
    CHECK_FALSE(r1.feasible);
    CHECK(r1.reason == nkt::InfeasibleReason::alpha_bound);
    auto r2 = nkt::min_nktr(9, 8, 4, 10);
    CHECK(r2.reason == nkt::InfeasibleReason::r_out_of_range);
    auto r3 = nkt::min_nkt(6, 4, 7);
    CHECK_FALSE(r3.feasible);
    CHECK(r3.reason == nkt::InfeasibleReason::no_such_graphs);
    auto r4 = nkt::min_nktr(6, 4, 7, 2);
    CHECK(r4.reason == nkt::InfeasibleReason::no_such_graphs);
    CHECK_THROWS_AS(nkt::min_nktr(0, 1, 1, 1), nkt::InvalidInputError);
    // t = 1 admits every independence number up to n
    for (int r = 1; r <= 9; ++r) CHECK(nkt::min_nktr(9, 4, 1, r).feasible);
    // k > n admits every independence number up to n
    for (int r = 1; r <= 6; ++r) CHECK(nkt::min_nktr(6, 9, 3, r).feasible);
}

TEST_CASE("candidate decompositions") {
    auto cands = nkt::candidate_decompositions(10, 8, 3);
    REQUIRE(cands.size() == 3);
    CHECK(cands[0].a == 5);
    CHECK(cands[0].b == 1);
    CHECK(cands[0].partition == cu({5, 1, 1, 1, 1, 1}));
    CHECK(cands[0].edges == 10);
    CHECK(cands[1].a == 3);
    CHECK(cands[1].b == 2);
    CHECK(cands[1].edges == 9);
    CHECK(cands[2].a == 1);
    CHECK(cands[2].b == 3);
    CHECK(cands[2].partition == cu({3, 3, 3, 1}));
    CHECK(cands[2].edges == 9);
    // the excluded candidate has too large an independence number
    CHECK(cands[0].partition.part_count() == 6);

    for (int n = 4; n <= 12; ++n) {
        auto nn = nkt::candidate_decompositions(n, n, 3);
        REQUIRE(nn.size() == 1);
        CHECK(nn[0].a == n - 3);
        CHECK(nn[0].b == 1);
    }
    // all four balanced parts reach size 2 once n covers them
    for (int n = 8; n <= 12; ++n) {
        bool has_turan = false;
        for (const auto& c : nkt::candidate_decompositions(n, 5, 2))
            if (c.a == 0 && c.b == 4) has_turan = true;
        CHECK(has_turan);
    }
    CHECK_THROWS_AS(nkt::candidate_decompositions(5, 3, 1), nkt::InvalidInputError);
    CHECK_THROWS_AS(nkt::candidate_decompositions(3, 5, 2), nkt::InvalidInputError);
}

TEST_CASE("every minimizer in the main regime has candidate form") {
    for (int n = 2; n <= 14; ++n)
        for (int k = 2; k <= n; ++k)
            for (int t = 2; t <= k; ++t) {
                auto rec = nkt::min_nkt(n, k, t);
                REQUIRE(rec.feasible);
                auto cands = nkt::candidate_decompositions(n, k, t);
                REQUIRE(!cands.empty());
                long long best = cands[0].edges;
                for (const auto& c : cands) best = std::min(best, c.edges);
                CHECK(rec.min_edges == best);
                for (const auto& u : rec.minimizers) {
                    bool found = false;
                    for (const auto& c : cands)
                        if (c.partition == u) found = true;
                    INFO("n=" << n << " k=" << k << " t=" << t << " u=" << u.to_string());
                    CHECK(found);
                }
            }
}

TEST_CASE("minimum over exact independence numbers is the global minimum") {
    for (int n = 1; n <= 14; ++n)
        for (int k = 1; k <= n; ++k)
            for (int t = 1; t <= k; ++t) {
                auto global = nkt::min_nkt(n, k, t);
                std::optional<long long> best;
                std::vector<CliqueUnion> mins;
                for (int r = 1; r <= n; ++r) {
                    auto rec = nkt::min_nktr(n, k, t, r);
                    if (!rec.feasible) continue;
                    if (!best || rec.min_edges < *best) {
                        best = rec.min_edges;
                        mins = rec.minimizers;
                    } else if (rec.min_edges == *best) {
                        mins.insert(mins.end(), rec.minimizers.begin(), rec.minimizers.end());
                    }
                }
                INFO("n=" << n << " k=" << k << " t=" << t);
                REQUIRE(global.feasible == best.has_value());
                if (!best) continue;
                CHECK(global.min_edges == *best);
                std::sort(mins.begin(), mins.end());
                CHECK(global.minimizers == mins);
            }
}

TEST_CASE("minimizer part counts are pairwise distinct beyond t = 2") {
    for (int n = 2; n <= 14; ++n)
        for (int k = 2; k <= n; ++k)
            for (int t = 3; t <= k; ++t) {
                auto rec = nkt::min_nkt(n, k, t);
                auto alphas = rec.alphas();
                std::sort(alphas.begin(), alphas.end());
                INFO("n=" << n << " k=" << k << " t=" << t);
                CHECK(std::adjacent_find(alphas.begin(), alphas.end()) == alphas.end());
            }
}

TEST_CASE("monotone in k, antitone in t") {
    for (int n = 1; n <= 14; ++n)
        for (int k = 1; k <= n; ++k)
            for (int t = 1; t <= k; ++t) {
                auto rec = nkt::min_nkt(n, k, t);
                REQUIRE(rec.feasible);
                if (k + 1 <= n) CHECK(nkt::min_nkt(n, k + 1, t).min_edges <= rec.min_edges);
                if (t + 1 <= k) CHECK(nkt::min_nkt(n, k, t + 1).min_edges >= rec.min_edges);
            }
}

TEST_CASE("closed-form regimes agree with the general scan") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= 14; ++k)
            for (int t = 1; t <= 14; ++t) {
                auto sc = nkt::special_case(n, k, t);
                if (!sc) {
                    CHECK((n > k && k > t && t >= 2));
                    continue;
                }
                auto scan = nkt::detail::min_nkt_by_scan(n, k, t);
                INFO("n=" << n << " k=" << k << " t=" << t);
                REQUIRE(sc->feasible == scan.feasible);
                if (!sc->feasible) continue;
                CHECK(sc->min_edges == scan.min_edges);
                CHECK(sc->minimizers == scan.minimizers);
            }
}

TEST_CASE("bounded independence variants") {
    auto rec = nkt::min_nkt_alpha_at_most(8, 8, 4, 2);
    CHECK(rec.min_edges == 12);
    CHECK(rec.minimizers == std::vector<CliqueUnion>{cu({4, 4})});
    auto rec2 = nkt::min_nkt_alpha_at_most(6, 5, 3, 3);
    CHECK(rec2.min_edges == 6);
    CHECK(rec2.minimizers == std::vector<CliqueUnion>{cu({3, 3}), cu({4, 1, 1})});
    auto rec3 = nkt::min_nkt_alpha_at_most(6, 5, 3, 2);
    CHECK(rec3.minimizers == std::vector<CliqueUnion>{cu({3, 3})});
    // an inactive bound reproduces the unconstrained minimum
    for (int n = 2; n <= 12; ++n)
        for (int k = 2; k <= n; ++k)
            for (int t = 2; t <= k; ++t) {
                auto free_rec = nkt::min_nkt(n, k, t);
                auto capped = nkt::min_nkt_alpha_at_most(n, k, t, k - t + 1);
                CHECK(free_rec.min_edges == capped.min_edges);
                CHECK(free_rec.minimizers == capped.minimizers);
            }
}

TEST_CASE("tight threshold for optima below their independence cap") {
    // An optimal union with independence number strictly below the cap
    // cannot afford any slack: its largest clique-free set has exactly k-1
    // vertices, and it stops being a member once k shrinks by one.
    for (int n = 2; n <= 12; ++n)
        for (int k = 2; k <= n; ++k)
            for (int t = 2; t < k; ++t)
                for (int a = 1; a <= k - t + 1; ++a) {
                    auto rec = nkt::min_nkt_alpha_at_most(n, k, t, a);
                    if (!rec.feasible) continue;
                    for (const auto& u : rec.minimizers) {
                        if (u.part_count() >= a) continue;
                        INFO("n=" << n << " k=" << k << " t=" << t << " a=" << a
                                  << " u=" << u.to_string());
                        CHECK(nkt::max_kt_free_size(u, t) == k - 1);
                        CHECK_FALSE(nkt::is_nkt(u.realize(), k - 1, t));
                    }
                }
}

TEST_CASE("minimum graphs sit exactly at the membership threshold") {
    for (int n = 2; n <= 12; ++n)
        for (int k = 2; k <= n; ++k)
            for (int t = 2; t <= k; ++t)
                for (const auto& u : nkt::min_nkt(n, k, t).minimizers)
                    CHECK_FALSE(nkt::is_nkt(u.realize(), k - 1, t));
}

TEST_CASE("lifting a lower-level minimizer") {
    CHECK(nkt::lift_partition(cu({3, 3}), 3) == cu({4, 4, 1}));
    CHECK(nkt::lift_partition(cu({4, 1, 1}), 3) == cu({5, 2, 2}));
    CHECK(nkt::lift_partition(CliqueUnion{}, 4) == cu({1, 1, 1, 1}));
    CHECK(nkt::lift_partition(cu({2}), 5) == cu({3, 1, 1, 1, 1}));
    CHECK_THROWS_AS(nkt::lift_partition(cu({2, 2}), 1), nkt::InvalidInputError);
    std::mt19937 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        int parts = 1 + static_cast<int>(rng() % 5);
        std::vector<int> ps;
        int total = 0;
        for (int i = 0; i < parts; ++i) {
            ps.push_back(1 + static_cast<int>(rng() % 5));
            total += ps.back();
        }
        int r = parts + static_cast<int>(rng() % 4);
        auto lifted = nkt::lift_partition(CliqueUnion(ps), r);
        CHECK(lifted.part_count() == r);
        CHECK(lifted.total() == total + r);
    }
}

TEST_CASE("recursive construction matches the closed form and the membership test") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            for (int t = 1; t <= k; ++t)
                for (int r = 1; r <= n; ++r) {
                    auto rec = nkt::min_nktr(n, k, t, r);
                    auto built = nkt::recursive_min_construct(n, k, t, r);
                    INFO("n=" << n << " k=" << k << " t=" << t << " r=" << r);
                    REQUIRE(rec.feasible == built.feasible);
                    if (!rec.feasible) {
                        CHECK(rec.reason == built.reason);
                        continue;
                    }
                    CHECK(built.partition.edge_count() == rec.min_edges);
                    CHECK(std::find(rec.minimizers.begin(), rec.minimizers.end(),
                                    built.partition) != rec.minimizers.end());
                    if (n <= 10) {
                        nkt::Graph g = built.partition.realize();
                        CHECK(nkt::is_nktr(g, k, t, r));
                    }
                }
}

TEST_CASE("construction traces") {
    auto cr = nkt::recursive_min_construct(9, 8, 4, 3);
    REQUIRE(cr.feasible);
    CHECK(cr.partition == cu({4, 4, 1}));
    REQUIRE(cr.trace.size() == 2);
    CHECK(cr.trace[0].kase == nkt::ConstructCase::join);
    CHECK(cr.trace[0].h == cu({3, 3}));
    CHECK(cr.trace[1].n == 6);
    CHECK(cr.trace[1].k == 5);
    CHECK(cr.trace[1].t == 3);
    CHECK(cr.trace[1].r == 2);
    CHECK(cr.trace[1].kase == nkt::ConstructCase::pigeonhole);

    auto c2 = nkt::recursive_min_construct(7, 7, 3, 5);
    CHECK(c2.partition == cu({3, 1, 1, 1, 1}));
    CHECK(c2.trace[0].h == cu({2}));

    auto c3 = nkt::recursive_min_construct(12, 4, 1, 5);
    CHECK(c3.partition == nkt::balanced_clique_union(12, 5));
    REQUIRE(c3.trace.size() == 1);
    CHECK(c3.trace[0].kase == nkt::ConstructCase::base_t1);

    auto c4 = nkt::recursive_min_construct(8, 12, 5, 3);
    CHECK(c4.partition == nkt::balanced_clique_union(8, 3));
    CHECK(c4.trace[0].kase == nkt::ConstructCase::vacuous);

    auto c5 = nkt::recursive_min_construct(9, 8, 4, 2);  // r(t-1) = 6 < 8
    CHECK(c5.partition == nkt::balanced_clique_union(9, 2));
    CHECK(c5.trace[0].kase == nkt::ConstructCase::pigeonhole);
}

TEST_CASE("join levels always leave strict slack below the next threshold") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            for (int t = 1; t <= k; ++t)
                for (int r = 1; r <= n; ++r) {
                    auto built = nkt::recursive_min_construct(n, k, t, r);
                    if (!built.feasible) continue;
                    for (const auto& lv : built.trace) {
                        if (lv.kase != nkt::ConstructCase::join) continue;
                        int big = 0;
                        long long small_total = 0;
                        for (int p : lv.h.parts())
                            if (p >= lv.t - 1)
                                ++big;
                            else
                                small_total += p;
                        INFO("level n=" << lv.n << " k=" << lv.k << " t=" << lv.t
                                        << " r=" << lv.r << " h=" << lv.h.to_string());
                        CHECK(lv.k - lv.r >
                              static_cast<long long>(lv.t - 2) * big + small_total);
                    }
                }
}

TEST_CASE("construction cache round trip") {
    nkt::recursive_min_construct(9, 8, 4, 3);
    std::ostringstream os;
    std::size_t saved = nkt::save_construct_cache(os);
    CHECK(saved >= 2);
    std::string text = os.str();
    CHECK(text.rfind("nkt-construct-cache 1\n", 0) == 0);
    CHECK(text.find("entry 9 8 4 3 ok") != std::string::npos);
    CHECK(text.find("partition 4 4 1") != std::string::npos);

    std::istringstream is(text);
    CHECK(nkt::load_construct_cache(is) == 0);  // everything already present

    // a fresh, truthful entry merges and is served from the memo afterwards
    std::istringstream fresh(
        "nkt-construct-cache 1\n"
        "entry 31 2 2 1 ok\n"
        "partition 31\n"
        "level 31 2 2 1 pigeonhole\n");
    CHECK(nkt::load_construct_cache(fresh) == 1);
    auto served = nkt::recursive_min_construct(31, 2, 2, 1);
    CHECK(served.partition == cu({31}));
    REQUIRE(served.trace.size() == 1);
    CHECK(served.trace[0].kase == nkt::ConstructCase::pigeonhole);

    std::istringstream bad_header("other-cache 3\nentry 5 4 3 2 ok\n");
    CHECK(nkt::load_construct_cache(bad_header) == 0);
    std::istringstream bad_entry("nkt-construct-cache 1\nentry 5 4 xyz\n");
    CHECK(nkt::load_construct_cache(bad_entry) == 0);
    std::istringstream bad_case(
        "nkt-construct-cache 1\n"
        "entry 13 12 2 1 ok\n"
        "partition 13\n"
        "level 13 12 2 1 sideways\n");
    CHECK(nkt::load_construct_cache(bad_case) == 0);
}

TEST_CASE("large orders report one witness without optima enumeration") {
    auto rec = nkt::min_nktr(60, 9, 4, 3);
    REQUIRE(rec.feasible);
    CHECK_FALSE(rec.exhaustive);
    REQUIRE(rec.minimizers.size() == 1);
    CHECK(rec.minimizers[0].total() == 60);
    CHECK(rec.minimizers[0].part_count() == 3);
    CHECK(rec.minimizers[0].edge_count() == rec.min_edges);

    auto small = nkt::min_nktr(40, 9, 4, 3);
    CHECK(small.exhaustive);
}
