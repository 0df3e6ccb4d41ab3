#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

namespace transvect {

namespace {

#ifndef TRANSVECT_FIXTURES_DIR
#define TRANSVECT_FIXTURES_DIR "fixtures"
#endif

std::string fixtures_dir() {
    const char* env = std::getenv("TRANSVECT_FIXTURES");
    return env && *env ? env : TRANSVECT_FIXTURES_DIR;
}

nlohmann::json load_golden() {
    std::string path = fixtures_dir() + "/golden.json";
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    return nlohmann::json::parse(in);
}

// Golden values keyed by (command, case); adds one outcome per value that applies.
void compare_golden(RunReport& rep, const nlohmann::json& g) {
    struct Entry {
        const char* command;
        const char* case_text;
        const char* field;
        const char* section;
        const char* key;
    };
    static const Entry table[] = {
        {"transitivity", "zmod:9,4", "rows", "orbits", "um4_zmod9_size"},
        {"transitivity", "zmod:9,4,3", "relative_rows", "orbits", "um4_zmod9_rel3_size"},
        {"transitivity", "zmod:9,4,3", "orbits", "orbits", "um4_zmod9_e_rel3_orbits"},
        {"transitivity", "zmod:15,4,3", "relative_rows", "orbits", "um4_zmod15_rel3_size"},
        {"transitivity", "zmod:15,4,3", "orbits", "orbits", "um4_zmod15_e_rel3_orbits"},
        {"kernel-test", "kernel membership zmod:9,4,3", "group_order", "closures", "esp4_zmod9_rel3_normal"},
    };
    std::vector<Outcome> extra;
    for (const auto& o : rep.results)
        for (const auto& e : table) {
            if (rep.command != e.command || o.name != e.case_text) continue;
            if (!g.contains(e.section) || !g[e.section].contains(e.key)) continue;
            auto want = g[e.section][e.key].get<std::uint64_t>();
            auto got = o.detail.at(e.field).get<std::uint64_t>();
            Outcome x{std::string("golden ") + e.key, want == got, ordered_json::object()};
            x.detail["expected"] = want;
            x.detail["actual"] = got;
            extra.push_back(std::move(x));
        }
    for (auto& x : extra) rep.results.push_back(std::move(x));
}

struct Globals {
    std::uint64_t seed = 1;
    int threads = 1;
    std::uint64_t budget = Budget{}.rows;
    std::uint64_t cap = 1'000'000;
    std::string out;
    bool no_timing = false;
    bool golden = false;
};

std::vector<OrbitCase> cases_from(const std::vector<std::string>& texts, const std::string& ring, int size,
                                  const std::string& ideal) {
    std::vector<OrbitCase> out;
    for (const auto& t : texts) out.push_back(OrbitCase::parse(t));
    if (out.empty()) {
        if (ring.empty()) throw CLI::ValidationError("--ring or --case is required");
        OrbitCase c{ring, size, std::nullopt};
        if (!ideal.empty()) c.ideal = ideal;
        out.push_back(c);
    }
    return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generator calculus for elementary and elementary symplectic groups", "transvect"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals gl;
    app.add_option("--seed", gl.seed, "random seed");
    app.add_option("--threads", gl.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--budget", gl.budget, "maximum number of rows enumerated by orbit commands");
    app.add_option("--cap", gl.cap, "maximum group order enumerated by closure commands");
    app.add_option("--out", gl.out, "write the JSON report here instead of standard output");
    app.add_flag("--no-timing", gl.no_timing, "omit the timing fields from the report");
    app.add_flag("--golden", gl.golden, "compare with golden values from $TRANSVECT_FIXTURES");

    std::function<RunReport()> job;

    // verify-relations
    RelationsParams rel;
    bool rel_symbolic = false;
    auto* vr = app.add_subcommand("verify-relations", "check the symplectic commutator relations");
    vr->add_option("--ring", rel.rings, "ring descriptors")->capture_default_str();
    vr->add_option("--n", rel.halves, "half sizes")->capture_default_str();
    vr->add_flag("--symbolic", rel_symbolic, "verify over ring[a,b] (default unless --samples is given)");
    auto* vr_samples = vr->add_option("--samples", rel.samples, "random (a,b) per tuple");
    vr->add_flag("--instances", rel.instances, "list every index tuple");
    vr->callback([&] {
        rel.symbolic = rel_symbolic || vr_samples->count() == 0;
        rel.seed = gl.seed;
        rel.threads = gl.threads;
        job = [&] { return run_verify_relations(rel); };
    });

    // decompose
    DecomposeParams dec;
    bool dec_no_symbolic = false;
    auto* dc = app.add_subcommand("decompose", "rho/mu decompositions and the Bass correspondence");
    dc->add_option("--ring", dec.rings, "ring descriptors for sampling")->capture_default_str();
    dc->add_option("--n", dec.halves, "half sizes of the complement")->capture_default_str();
    dc->add_option("--samples", dec.samples, "samples per ring and size")->capture_default_str();
    dc->add_flag("--no-symbolic", dec_no_symbolic, "skip the symbolic decomposition check");
    dc->add_flag("--bass", dec.bass, "check Bass transvections against the elementary actions instead");
    dc->callback([&] {
        dec.symbolic = !dec_no_symbolic;
        dec.seed = gl.seed;
        job = [&] { return run_decompose(dec); };
    });

    // reduce-form
    ReduceFormParams red;
    std::string variant = "both";
    auto* rf = app.add_subcommand("reduce-form", "reduce random alternating forms to standard form");
    rf->add_option("--ring", red.rings, "local ring descriptors")->capture_default_str();
    rf->add_option("--n", red.halves, "half sizes, cycled over the samples")->capture_default_str();
    rf->add_option("--samples", red.samples, "forms per ring and variant")->capture_default_str();
    rf->add_option("--variant", variant, "absolute, relative or both")
        ->check(CLI::IsMember({"absolute", "relative", "both"}))
        ->capture_default_str();
    rf->callback([&] {
        red.absolute = variant != "relative";
        red.relative = variant != "absolute";
        red.seed = gl.seed;
        job = [&] { return run_reduce_form(red); };
    });

    // orbits
    OrbitsParams orb;
    std::string orb_ideal;
    auto* ob = app.add_subcommand("orbits", "orbit partition of unimodular rows under a generator family");
    ob->add_option("--family", orb.family, "e, esp, e-rel, esp-rel, e1, esp1")->capture_default_str();
    ob->add_option("--ring", orb.where.ring, "ring descriptor")->capture_default_str();
    ob->add_option("--size", orb.where.size, "row length")->capture_default_str();
    ob->add_option("--ideal", orb_ideal, "ideal for relative families");
    ob->add_flag("--partition", orb.partition, "list the orbit label of every row");
    ob->callback([&] {
        if (!orb_ideal.empty()) orb.where.ideal = orb_ideal;
        orb.threads = gl.threads;
        orb.budget.rows = gl.budget;
        job = [&] { return run_orbits(orb); };
    });

    // orbit-equality and transitivity share their options
    struct SuiteOpts {
        std::vector<std::string> cases;
        std::string ring, ideal;
        int size = 4;
    };
    SuiteOpts eq_opts, tr_opts;
    auto suite_options = [](CLI::App* c, SuiteOpts& o) {
        c->add_option("--case", o.cases, "ring,size[,ideal]; repeatable");
        c->add_option("--ring", o.ring, "ring descriptor");
        c->add_option("--size", o.size, "row length")->capture_default_str();
        c->add_option("--ideal", o.ideal, "ideal generator");
    };
    auto* oe = app.add_subcommand("orbit-equality", "compare E and ESp orbits on unimodular rows");
    suite_options(oe, eq_opts);
    oe->callback([&] {
        OrbitSuiteParams p{cases_from(eq_opts.cases, eq_opts.ring, eq_opts.size, eq_opts.ideal), gl.threads};
        job = [p] { return run_orbit_equality(p); };
    });
    auto* tr = app.add_subcommand("transitivity", "orbits of E(R,I) on Um(R) over finite rings");
    suite_options(tr, tr_opts);
    tr->callback([&] {
        OrbitSuiteParams p{cases_from(tr_opts.cases, tr_opts.ring, tr_opts.size, tr_opts.ideal), gl.threads};
        job = [p] { return run_transitivity(p); };
    });

    // kernel-test and square-ideal-test
    MembershipParams kt, sq;
    sq.samples = 200;
    std::string kt_ideal = "3", sq_ideal = "3";
    bool sq_no_symbolic = false;
    auto membership_options = [](CLI::App* c, MembershipParams& p, std::string& ideal) {
        c->add_option("--ring", p.where.ring, "ring descriptor")->capture_default_str();
        c->add_option("--size", p.where.size, "matrix size")->capture_default_str();
        c->add_option("--ideal", ideal, "ideal generator")->capture_default_str();
        c->add_option("--samples", p.samples, "random samples")->capture_default_str();
    };
    auto* kc = app.add_subcommand("kernel-test", "random E1 words reduced mod I, tested for membership in ESp(R,I)");
    membership_options(kc, kt, kt_ideal);
    kc->callback([&] {
        kt.where.ideal = kt_ideal;
        kt.seed = gl.seed;
        kt.threads = gl.threads;
        kt.cap = gl.cap;
        job = [&] { return run_kernel_test(kt); };
    });
    auto* sc = app.add_subcommand("square-ideal-test", "conjugates of se_ij(ab), a,b in I, tested in ESp(I)");
    membership_options(sc, sq, sq_ideal);
    sc->add_flag("--no-symbolic", sq_no_symbolic, "skip the symbolic factorization check");
    sc->callback([&] {
        sq.where.ideal = sq_ideal;
        sq.symbolic = !sq_no_symbolic;
        sq.seed = gl.seed;
        sq.cap = gl.cap;
        job = [&] { return run_square_ideal_test(sq); };
    });

    // dilate
    DilateParams dil;
    std::string word, table_out;
    auto* dl = app.add_subcommand("dilate", "first row/column rewrites of dilated generators");
    dl->add_option("--size", dil.sizes, "matrix sizes")->capture_default_str();
    dl->add_option("--y-power", dil.y_budget, "powers of Y carried by the target (default 2 at size 4, 4 above)");
    dl->add_option("--word", word, "conjugator word, e.g. 'S:3,1:x1;S:1,2:a'");
    dl->add_option("--column", dil.target_column, "target se_1,j for --word")->capture_default_str();
    dl->add_flag("--entries", dil.entries, "include every resolved table entry");
    dl->add_option("--table-out", table_out, "write the resolved case table (one size) to this file");
    dl->callback([&] {
        if (!word.empty()) dil.word = word;
        if (!table_out.empty() && dil.sizes.size() != 1) throw CLI::ValidationError("--table-out needs exactly one --size");
        job = [&] {
            if (!table_out.empty()) {
                std::ofstream f(table_out);
                if (!f) throw std::invalid_argument("cannot write " + table_out);
                f << case_table_json(dil.sizes.front(), dil.y_budget).dump(2) << "\n";
            }
            return run_dilate(dil);
        };
    });

    // splice-demo
    SpliceParams spl;
    auto* sd = app.add_subcommand("splice-demo", "telescoping splice over random partitions of unity");
    sd->add_option("--ring", spl.rings, "polynomial rings in X")->capture_default_str();
    sd->add_option("--k", spl.parts, "partition lengths")->capture_default_str();
    sd->add_option("--seeds", spl.seeds, "seeds per ring and length")->capture_default_str();
    sd->callback([&] {
        spl.seed = gl.seed;
        job = [&] { return run_splice_demo(spl); };
    });

    if (args.empty()) {
        err << app.help();
        return {kExitUsage, std::nullopt};
    }
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return {kExitOk, std::nullopt};
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return {kExitUsage, std::nullopt};
    }

    RunReport rep;
    try {
        auto t0 = std::chrono::steady_clock::now();
        rep = job();
        if (gl.golden) compare_golden(rep, load_golden());
        rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return {kExitUsage, std::nullopt};
    } catch (const std::length_error& e) {
        // a budget or cap was exceeded: report it as a failed outcome
        Outcome o{"budget", false, ordered_json::object()};
        o.detail["error"] = e.what();
        rep.command = app.get_subcommands().front()->get_name();
        rep.results.push_back(std::move(o));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return {kExitFailure, std::nullopt};
    }
    std::string text = rep.to_json(!gl.no_timing).dump(2) + "\n";
    if (gl.out.empty()) {
        out << text;
    } else {
        std::ofstream f(gl.out);
        if (!f) {
            err << "error: cannot write " << gl.out << "\n";
            return {kExitUsage, std::nullopt};
        }
        f << text;
    }
    return {rep.ok() ? kExitOk : kExitFailure, rep};
}

}  // namespace transvect
