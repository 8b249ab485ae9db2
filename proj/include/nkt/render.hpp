#pragma once

// Report rendering for the command-line tool.  Every command renders from
// one report value into either a line-oriented human schema or a structured
// JSON object; both carry the same numeric content.  Timing sits in an
// isolated footer so that --stable output is reproducible byte for byte.
//
// Human schema: first line "nkt-report 1", then "command <name>", one
// "param <key> <value>" line per parameter, result lines specific to the
// command, and a final "elapsed-ms <n>" unless suppressed.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nkt/clique_union.hpp"
#include "nkt/extremal.hpp"
#include "nkt/graph6.hpp"
#include "nkt/search.hpp"
#include "nkt/verify.hpp"

namespace nkt {

inline constexpr int kSchemaVersion = 1;

enum class Format { human, structured };

struct RenderOptions {
    Format format = Format::human;
    bool stable = false;      // omit elapsed time
    long long elapsed_ms = 0;
};

namespace detail {

using json = nlohmann::json;

struct HumanDoc {
    std::ostringstream out;

    explicit HumanDoc(const std::string& command) {
        out << "nkt-report " << kSchemaVersion << '\n' << "command " << command << '\n';
    }

    template <class T>
    void param(const char* key, const T& v) {
        out << "param " << key << ' ' << v << '\n';
    }

    void params(const NktParams& p, std::optional<int> s = std::nullopt) {
        param("n", p.n);
        param("k", p.k);
        param("t", p.t);
        if (p.r) param("r", *p.r);
        if (s) param("s", *s);
    }

    std::string finish(const RenderOptions& opts) {
        if (!opts.stable) out << "elapsed-ms " << opts.elapsed_ms << '\n';
        return out.str();
    }
};

inline json json_params(const NktParams& p, std::optional<int> s = std::nullopt) {
    json j{{"n", p.n}, {"k", p.k}, {"t", p.t}};
    if (p.r) j["r"] = *p.r;
    if (s) j["s"] = *s;
    return j;
}

inline std::string json_finish(json envelope, const RenderOptions& opts) {
    envelope["schema_version"] = kSchemaVersion;
    if (!opts.stable) envelope["elapsed_ms"] = opts.elapsed_ms;
    return envelope.dump(2) + "\n";
}

inline std::string partition_text(const CliqueUnion& u) { return u.to_string(); }

inline std::optional<std::string> partition_graph6(const CliqueUnion& u) {
    if (u.total() < 1 || u.total() > kMaxVertices) return std::nullopt;
    return graph6_encode(u.realize());
}

inline json partition_json(const CliqueUnion& u) {
    json j;
    j["partition"] = u.parts();
    j["alpha"] = u.part_count();
    j["edges"] = u.edge_count();
    if (auto g6 = partition_graph6(u)) j["graph6"] = *g6;
    return j;
}

inline std::string vertex_list(std::uint32_t mask) {
    std::string s;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        if (!s.empty()) s += ',';
        s += std::to_string(v);
    }
    return s;
}

inline std::vector<int> vertex_vector(std::uint32_t mask) {
    std::vector<int> vs;
    while (mask) {
        vs.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return vs;
}

inline const char* yesno(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// ---- min-edges ----------------------------------------------------------

inline std::string render_min_edges(const ExtremalRecord& rec,
                                    const std::vector<CandidateDecomposition>* candidates,
                                    const RenderOptions& opts) {
    if (opts.format == Format::human) {
        detail::HumanDoc doc("min-edges");
        doc.params(rec.params);
        doc.out << "feasible " << detail::yesno(rec.feasible) << '\n';
        if (!rec.feasible) {
            doc.out << "reason " << to_token(rec.reason) << '\n';
        } else {
            doc.out << "min-edges " << rec.min_edges << '\n';
            for (const auto& u : rec.minimizers) {
                doc.out << "minimizer partition " << detail::partition_text(u) << " alpha "
                        << u.part_count();
                if (auto g6 = detail::partition_graph6(u)) doc.out << " graph6 " << *g6;
                doc.out << '\n';
            }
            doc.out << "exhaustive " << detail::yesno(rec.exhaustive) << '\n';
        }
        if (candidates)
            for (const auto& c : *candidates)
                doc.out << "candidate a " << c.a << " b " << c.b << " partition "
                        << detail::partition_text(c.partition) << " edges " << c.edges << '\n';
        return doc.finish(opts);
    }
    detail::json env;
    env["command"] = "min-edges";
    env["params"] = detail::json_params(rec.params);
    detail::json res;
    res["feasible"] = rec.feasible;
    if (!rec.feasible) {
        res["reason"] = to_token(rec.reason);
    } else {
        res["min_edges"] = rec.min_edges;
        res["exhaustive"] = rec.exhaustive;
        res["minimizers"] = detail::json::array();
        for (const auto& u : rec.minimizers) res["minimizers"].push_back(detail::partition_json(u));
    }
    if (candidates) {
        res["candidates"] = detail::json::array();
        for (const auto& c : *candidates) {
            detail::json jc;
            jc["a"] = c.a;
            jc["b"] = c.b;
            jc["partition"] = c.partition.parts();
            jc["edges"] = c.edges;
            res["candidates"].push_back(jc);
        }
    }
    env["result"] = res;
    return detail::json_finish(env, opts);
}

// ---- construct ----------------------------------------------------------

inline std::string render_construct(const ConstructResult& cr, const NktParams& params,
                                    const RenderOptions& opts) {
    if (opts.format == Format::human) {
        detail::HumanDoc doc("construct");
        doc.params(params);
        doc.out << "feasible " << detail::yesno(cr.feasible) << '\n';
        if (!cr.feasible) {
            doc.out << "reason " << to_token(cr.reason) << '\n';
        } else {
            doc.out << "partition " << detail::partition_text(cr.partition) << '\n';
            doc.out << "edges " << cr.partition.edge_count() << '\n';
            doc.out << "alpha " << cr.partition.part_count() << '\n';
            if (auto g6 = detail::partition_graph6(cr.partition)) doc.out << "graph6 " << *g6 << '\n';
            for (const auto& lv : cr.trace) {
                doc.out << "trace n " << lv.n << " k " << lv.k << " t " << lv.t << " r " << lv.r
                        << " case " << to_token(lv.kase);
                if (lv.kase == ConstructCase::join)
                    doc.out << " h " << detail::partition_text(lv.h);
                doc.out << '\n';
            }
        }
        return doc.finish(opts);
    }
    detail::json env;
    env["command"] = "construct";
    env["params"] = detail::json_params(params);
    detail::json res;
    res["feasible"] = cr.feasible;
    if (!cr.feasible) {
        res["reason"] = to_token(cr.reason);
    } else {
        res["witness"] = detail::partition_json(cr.partition);
        res["trace"] = detail::json::array();
        for (const auto& lv : cr.trace) {
            detail::json jl;
            jl["n"] = lv.n;
            jl["k"] = lv.k;
            jl["t"] = lv.t;
            jl["r"] = lv.r;
            jl["case"] = to_token(lv.kase);
            if (lv.kase == ConstructCase::join) jl["h"] = lv.h.parts();
            res["trace"].push_back(jl);
        }
    }
    env["result"] = res;
    return detail::json_finish(env, opts);
}

// ---- verify -------------------------------------------------------------

struct VerifyOutcome {
    std::string input;          // graph6 as given
    int order = 0;
    long long edges = 0;
    bool ok = false;            // final verdict, including the alpha target
    bool member = false;        // passes the (n,k,t) membership test
    int max_ktfree = 0;         // size of a largest K_t-free vertex set
    std::uint32_t counterexample = 0;  // a k-set with no K_t, when not member
    std::optional<int> alpha;   // computed when an alpha target was given
};

inline std::string render_verify(const std::vector<VerifyOutcome>& outcomes, int k, int t,
                                 std::optional<int> r, const RenderOptions& opts) {
    if (opts.format == Format::human) {
        detail::HumanDoc doc("verify");
        doc.param("k", k);
        doc.param("t", t);
        if (r) doc.param("r", *r);
        int idx = 0;
        for (const auto& o : outcomes) {
            doc.out << "graph " << ++idx << " input " << o.input << " n " << o.order
                    << " edges " << o.edges << " result " << detail::yesno(o.ok)
                    << " max-ktfree " << o.max_ktfree;
            if (!o.member) doc.out << " counterexample " << detail::vertex_list(o.counterexample);
            if (o.alpha) doc.out << " alpha " << *o.alpha;
            doc.out << '\n';
        }
        return doc.finish(opts);
    }
    detail::json env;
    env["command"] = "verify";
    detail::json p{{"k", k}, {"t", t}};
    if (r) p["r"] = *r;
    env["params"] = p;
    detail::json arr = detail::json::array();
    for (const auto& o : outcomes) {
        detail::json jo;
        jo["input"] = o.input;
        jo["n"] = o.order;
        jo["edges"] = o.edges;
        jo["result"] = o.ok;
        jo["max_ktfree"] = o.max_ktfree;
        if (!o.member) jo["counterexample"] = detail::vertex_vector(o.counterexample);
        if (o.alpha) jo["alpha"] = *o.alpha;
        arr.push_back(jo);
    }
    env["result"] = detail::json{{"graphs", arr}};
    return detail::json_finish(env, opts);
}

// ---- search reports -----------------------------------------------------

namespace detail {

inline void witness_lines(HumanDoc& doc, const char* label, const std::vector<Graph>& ws) {
    for (const Graph& g : ws) {
        doc.out << label << " graph6 " << graph6_encode(g);
        if (auto u = as_clique_union(g)) doc.out << " partition " << partition_text(*u);
        doc.out << " edges " << g.edge_count() << '\n';
    }
}

inline json witness_json(const std::vector<Graph>& ws) {
    json arr = json::array();
    for (const Graph& g : ws) {
        json jw;
        jw["graph6"] = graph6_encode(g);
        jw["edges"] = g.edge_count();
        if (auto u = as_clique_union(g)) {
            jw["partition"] = u->parts();
            jw["alpha"] = u->part_count();
        }
        arr.push_back(jw);
    }
    return arr;
}

}  // namespace detail

inline std::string render_search(const SearchReport& rep, const std::string& mode,
                                 const RenderOptions& opts) {
    bool count_mode = rep.s.has_value();
    if (opts.format == Format::human) {
        detail::HumanDoc doc("search-" + mode);
        doc.params(rep.params, rep.s);
        doc.out << "scanned " << rep.scanned << '\n';
        doc.out << "qualifying " << rep.qualifying << '\n';
        doc.out << "feasible " << detail::yesno(rep.feasible) << '\n';
        if (rep.feasible) {
            doc.out << (count_mode ? "min-cliques " : "min-edges ") << rep.min_value << '\n';
            detail::witness_lines(doc, "witness", rep.witnesses);
        }
        if (rep.clique_floor) doc.out << "floor " << *rep.clique_floor << '\n';
        if (!count_mode) {
            doc.out << "formula-feasible " << detail::yesno(rep.formula_feasible) << '\n';
            if (rep.formula_feasible) doc.out << "formula-min " << rep.formula_min << '\n';
            doc.out << "value-matches " << detail::yesno(rep.value_matches) << '\n';
            doc.out << "minimizers-match " << detail::yesno(rep.minimizers_match) << '\n';
        }
        doc.out << "conjecture-holds " << detail::yesno(rep.conjecture_holds) << '\n';
        return doc.finish(opts);
    }
    detail::json env;
    env["command"] = "search-" + mode;
    env["params"] = detail::json_params(rep.params, rep.s);
    detail::json res;
    res["scanned"] = rep.scanned;
    res["qualifying"] = rep.qualifying;
    res["feasible"] = rep.feasible;
    if (rep.feasible) {
        res[count_mode ? "min_cliques" : "min_edges"] = rep.min_value;
        res["witnesses"] = detail::witness_json(rep.witnesses);
    }
    if (rep.clique_floor) res["floor"] = *rep.clique_floor;
    if (!count_mode) {
        res["formula_feasible"] = rep.formula_feasible;
        if (rep.formula_feasible) res["formula_min"] = rep.formula_min;
        res["value_matches"] = rep.value_matches;
        res["minimizers_match"] = rep.minimizers_match;
    }
    res["conjecture_holds"] = rep.conjecture_holds;
    env["result"] = res;
    return detail::json_finish(env, opts);
}

inline std::string render_saturation(const SaturationReport& rep, const RenderOptions& opts) {
    if (opts.format == Format::human) {
        detail::HumanDoc doc("search-saturation");
        doc.params(rep.params);
        doc.out << "scanned " << rep.scanned << '\n';
        doc.out << "qualifying " << rep.qualifying << '\n';
        doc.out << "feasible " << detail::yesno(rep.feasible) << '\n';
        if (rep.feasible) {
            doc.out << "max-edges " << rep.max_edges << '\n';
            detail::witness_lines(doc, "max-witness", rep.max_witnesses);
            detail::witness_lines(doc, "minimal", rep.minimal);
        }
        return doc.finish(opts);
    }
    detail::json env;
    env["command"] = "search-saturation";
    env["params"] = detail::json_params(rep.params);
    detail::json res;
    res["scanned"] = rep.scanned;
    res["qualifying"] = rep.qualifying;
    res["feasible"] = rep.feasible;
    if (rep.feasible) {
        res["max_edges"] = rep.max_edges;
        res["max_witnesses"] = detail::witness_json(rep.max_witnesses);
        res["minimal"] = detail::witness_json(rep.minimal);
    }
    env["result"] = res;
    return detail::json_finish(env, opts);
}

inline std::string render_nikiforov(const NikiforovReport& rep, const RenderOptions& opts) {
    if (opts.format == Format::human) {
        detail::HumanDoc doc("search-nikiforov");
        doc.param("n", rep.n);
        doc.out << "blob-size " << rep.m << '\n';
        doc.out << "blowup-k4 " << rep.blowup_count << '\n';
        doc.out << "split-k4 " << rep.split_count << '\n';
        doc.out << "strict-less " << detail::yesno(rep.strict_less) << '\n';
        doc.out << "realized " << detail::yesno(rep.realized) << '\n';
        doc.out << "blowup-is-nkt " << detail::yesno(rep.blowup_is_nkt) << '\n';
        return doc.finish(opts);
    }
    detail::json env;
    env["command"] = "search-nikiforov";
    env["params"] = detail::json{{"n", rep.n}};
    detail::json res;
    res["blob_size"] = rep.m;
    res["blowup_k4"] = rep.blowup_count;
    res["split_k4"] = rep.split_count;
    res["strict_less"] = rep.strict_less;
    res["realized"] = rep.realized;
    res["blowup_is_nkt"] = rep.blowup_is_nkt;
    env["result"] = res;
    return detail::json_finish(env, opts);
}

// ---- table --------------------------------------------------------------

struct TableGrid {
    int n_lo = 0, n_hi = 0;
    int k_lo = 0, k_hi = 0;
    int t_lo = 0, t_hi = 0;
    // Cells in t-major, then n, then k order; absent value means infeasible.
    std::vector<std::optional<long long>> cells;
};

inline std::string render_table(const TableGrid& grid, const RenderOptions& opts) {
    int kw = grid.k_hi - grid.k_lo + 1;
    int nw = grid.n_hi - grid.n_lo + 1;
    if (opts.format == Format::human) {
        detail::HumanDoc doc("table");
        doc.out << "param n " << grid.n_lo << ".." << grid.n_hi << '\n';
        doc.out << "param k " << grid.k_lo << ".." << grid.k_hi << '\n';
        doc.out << "param t " << grid.t_lo << ".." << grid.t_hi << '\n';
        std::size_t idx = 0;
        for (int t = grid.t_lo; t <= grid.t_hi; ++t)
            for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
                doc.out << "row t " << t << " n " << n << " :";
                for (int k = 0; k < kw; ++k, ++idx) {
                    const auto& c = grid.cells[idx];
                    if (c)
                        doc.out << ' ' << *c;
                    else
                        doc.out << " -";
                }
                doc.out << '\n';
            }
        return doc.finish(opts);
    }
    detail::json env;
    env["command"] = "table";
    env["params"] = detail::json{{"n", {grid.n_lo, grid.n_hi}},
                                 {"k", {grid.k_lo, grid.k_hi}},
                                 {"t", {grid.t_lo, grid.t_hi}}};
    detail::json rows = detail::json::array();
    std::size_t idx = 0;
    for (int t = grid.t_lo; t <= grid.t_hi; ++t)
        for (int n = 0; n < nw; ++n) {
            detail::json row;
            row["t"] = t;
            row["n"] = grid.n_lo + n;
            detail::json vals = detail::json::array();
            for (int k = 0; k < kw; ++k, ++idx) {
                const auto& c = grid.cells[idx];
                if (c)
                    vals.push_back(*c);
                else
                    vals.push_back(nullptr);
            }
            row["cells"] = vals;
            rows.push_back(row);
        }
    env["result"] = detail::json{{"rows", rows}};
    return detail::json_finish(env, opts);
}

}  // namespace nkt
