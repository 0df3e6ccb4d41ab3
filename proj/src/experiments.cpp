#include <ctime>
#include <stdexcept>

#include "transvect/experiments.hpp"

namespace transvect {

namespace {

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::optional<Ideal> ideal_of(const Ring& r, const std::optional<std::string>& text) {
    if (!text) return std::nullopt;
    return Ideal::parse(r, *text);
}

ordered_json sizes_json(const std::vector<std::uint64_t>& v) {
    // orbit sizes as (size, multiplicity) pairs, ascending
    std::map<std::uint64_t, std::uint64_t> count;
    for (auto s : v) ++count[s];
    ordered_json out = ordered_json::array();
    for (auto [s, c] : count) out.push_back({s, c});
    return out;
}

ordered_json membership_json(const MembershipReport& m) {
    ordered_json d;
    d["samples"] = m.samples;
    d["tested"] = m.tested;
    d["members"] = m.members;
    d["group_order"] = m.group_order;
    d["factorizations_checked"] = m.factorizations_checked;
    d["factorizations_ok"] = m.factorizations_ok;
    return d;
}

ordered_json atom_json(const GeneratorAtom& a, const Ring& r, int size) {
    GeneratorWord w(r, size);
    w.push(a);
    return ordered_json::parse(word_to_json(w).dump()).at(0);
}

}  // namespace

bool RunReport::ok() const {
    for (const auto& o : results)
        if (!o.ok) return false;
    return true;
}

std::string RunReport::input_hash() const { return stable_hash(command + "\n" + parameters.dump()); }

ordered_json RunReport::to_json(bool timing) const {
    ordered_json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["input_hash"] = input_hash();
    if (timing) {
        j["started"] = utc_now();
        j["elapsed_s"] = elapsed;
    }
    ordered_json res = ordered_json::array();
    for (const auto& o : results) {
        ordered_json e;
        e["name"] = o.name;
        e["ok"] = o.ok;
        e["detail"] = o.detail;
        res.push_back(e);
    }
    j["results"] = res;
    j["ok"] = ok();
    return j;
}

OrbitCase OrbitCase::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("case must be ring,size[,ideal]: " + text);
    OrbitCase c;
    c.ring = parts[0];
    c.size = std::stoi(parts[1]);
    if (parts.size() == 3) c.ideal = parts[2];
    return c;
}

std::string OrbitCase::to_string() const {
    return ring + "," + std::to_string(size) + (ideal ? "," + *ideal : "");
}

GeneratorWord random_linear_word(const Ring& r, int size, int length, std::mt19937_64& rng) {
    GeneratorWord w(r, size);
    if (size < 2) return w;
    for (int k = 0; k < length; ++k) {
        int i = 1 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(size)));
        int j = 1 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(size - 1)));
        if (j >= i) ++j;
        w.push(linear_atom(i, j, sample_element(r, rng)));
    }
    return w;
}

GeneratorWord random_relative_word(const Ring& r, int size, int length, const Ideal& I, std::mt19937_64& rng) {
    GeneratorWord w(r, size);
    w.tag = WordClass::Relative;
    w.ideal = I;
    if (size < 2) return w;
    RingElement g = I.additive_generator();
    for (int k = 0; k < length; ++k) {
        int i = 1 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(size)));
        int j = 1 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(size - 1)));
        if (j >= i) ++j;
        w.append(relative_generator(Family::Linear, size, i, j, sample_element(r, rng), g * sample_element(r, rng), I));
    }
    return w;
}

AlternatingForm form_from_word(const GeneratorWord& eps, int n) {
    const Ring& r = eps.ring;
    SquareMatrix E = direct_sum(SquareMatrix::identity(r, 1), eval_word(eps));
    return AlternatingForm(E.transpose() * standard_form(n, r).matrix() * E);
}

RunReport run_verify_relations(const RelationsParams& p) {
    RunReport rep;
    rep.command = "verify-relations";
    rep.parameters["rings"] = p.rings;
    rep.parameters["n"] = p.halves;
    rep.parameters["mode"] = p.symbolic ? "symbolic" : "sampled";
    if (!p.symbolic) {
        rep.parameters["samples"] = p.samples;
        rep.parameters["seed"] = p.seed;
    }
    for (const auto& desc : p.rings) {
        Ring r = Ring::parse(desc);
        for (int n : p.halves) {
            SuiteMode mode{p.symbolic, p.samples, p.seed, p.threads};
            auto reps = verify_relation_suite(n, r, mode);
            std::map<int, std::vector<const RelationReport*>> by_id;
            for (const auto& x : reps) by_id[x.id].push_back(&x);
            for (const auto& [id, list] : by_id) {
                Outcome o;
                o.name = desc + " n=" + std::to_string(n) + " relation " + std::to_string(id);
                int stated = 0, corrected = 0;
                for (auto* x : list) {
                    stated += x->holds ? 1 : 0;
                    corrected += x->corrected_holds ? 1 : 0;
                }
                o.ok = corrected == static_cast<int>(list.size());
                o.detail["tuples"] = list.size();
                o.detail["stated_holds"] = stated;
                o.detail["corrected_holds"] = corrected;
                o.detail["statement"] = list.front()->statement;
                for (auto* x : list)
                    if (x->has_correction) {
                        o.detail["correction"] = x->correction;
                        break;
                    }
                if (p.instances) {
                    ordered_json inst = ordered_json::array();
                    for (auto* x : list) {
                        ordered_json e;
                        e["relation-id"] = x->id;
                        e["indices"] = x->indices;
                        e["holds"] = x->holds;
                        e["corrected_holds"] = x->corrected_holds;
                        e["lhs-hash"] = stable_hash(x->lhs.canonical());
                        e["rhs-hash"] = stable_hash(x->rhs.canonical());
                        inst.push_back(e);
                    }
                    o.detail["instances"] = inst;
                }
                rep.results.push_back(std::move(o));
            }
        }
    }
    return rep;
}

RunReport run_decompose(const DecomposeParams& p) {
    RunReport rep;
    rep.command = "decompose";
    rep.parameters["check"] = p.bass ? "bass" : "rho-mu";
    rep.parameters["rings"] = p.rings;
    rep.parameters["n"] = p.halves;
    rep.parameters["symbolic"] = p.symbolic;
    rep.parameters["samples"] = p.samples;
    rep.parameters["seed"] = p.seed;
    if (p.bass) {
        for (const auto& desc : p.rings) {
            Ring r = Ring::parse(desc);
            for (int n : p.halves) {
                auto t = check_bass_correspondence(r, n, p.samples, p.seed);
                Outcome o{desc + " n=" + std::to_string(n) + " bass", t.ok(), ordered_json::object()};
                o.detail["tested"] = t.tested;
                o.detail["first_match"] = t.first_match;
                o.detail["second_match"] = t.second_match;
                rep.results.push_back(std::move(o));
            }
        }
        return rep;
    }
    auto record = [&](const std::string& name, const DecompositionReport& d) {
        Outcome o{name, d.ok(), ordered_json::object()};
        o.detail["tested"] = d.tested;
        o.detail["rho_exact"] = d.rho_exact;
        o.detail["mu_exact"] = d.mu_exact;
        rep.results.push_back(std::move(o));
    };
    if (p.symbolic)
        for (int n : p.halves) {
            std::vector<std::string> vars = {"al", "be"};
            for (int k = 1; k <= 2 * n; ++k) vars.push_back("q" + std::to_string(k));
            Ring r = Ring::polynomial(Ring::dyadic(), vars);
            record(r.to_string() + " n=" + std::to_string(n), check_decompositions(r, n, 0, 0));
        }
    for (const auto& desc : p.rings) {
        Ring r = Ring::parse(desc);
        for (int n : p.halves) record(desc + " n=" + std::to_string(n), check_decompositions(r, n, p.samples, p.seed));
    }
    return rep;
}

RunReport run_reduce_form(const ReduceFormParams& p) {
    RunReport rep;
    rep.command = "reduce-form";
    rep.parameters["rings"] = p.rings;
    rep.parameters["n"] = p.halves;
    rep.parameters["samples"] = p.samples;
    rep.parameters["seed"] = p.seed;
    rep.parameters["absolute"] = p.absolute;
    rep.parameters["relative"] = p.relative;
    if (p.halves.empty()) throw std::invalid_argument("no sizes given");
    for (const auto& desc : p.rings) {
        Ring r = Ring::parse(desc);
        LocalRingWitness L(r);
        for (bool rel : {false, true}) {
            if ((rel && !p.relative) || (!rel && !p.absolute)) continue;
            std::mt19937_64 rng(p.seed);
            Ideal I = L.maximal_ideal();
            int verified = 0, tracked = 0;
            for (int s = 0; s < p.samples; ++s) {
                int n = p.halves[static_cast<std::size_t>(s) % p.halves.size()];
                int size = 2 * n - 1;
                auto eps0 = rel ? random_relative_word(r, size, 3, I, rng) : random_linear_word(r, size, 6, rng);
                auto phi = form_from_word(eps0, n);
                auto eps = rel ? reduce_alternating_local(phi, L, I) : reduce_alternating_local(phi, L);
                if (verify_form_reduction(phi, eps)) ++verified;
                if (rel) {
                    bool good = eps.tag == WordClass::Relative || eps.atoms.empty();
                    try {
                        validate_tag(eps);
                    } catch (const std::exception&) {
                        good = false;
                    }
                    auto m = eval_word(eps);
                    for (int i = 1; i <= m.size() && good; ++i)
                        for (int j = 1; j <= m.size(); ++j)
                            if (!I.contains(m.at(i, j) - (i == j ? r.one() : r.zero()))) good = false;
                    if (good) ++tracked;
                }
            }
            Outcome o;
            o.name = desc + (rel ? " relative to " + I.to_string() : " absolute");
            o.detail["forms"] = p.samples;
            o.detail["verified"] = verified;
            if (rel) o.detail["ideal_tracked"] = tracked;
            o.ok = verified == p.samples && (!rel || tracked == p.samples);
            rep.results.push_back(std::move(o));
        }
    }
    return rep;
}

RunReport run_orbits(const OrbitsParams& p) {
    RunReport rep;
    rep.command = "orbits";
    rep.parameters["family"] = p.family;
    rep.parameters["case"] = p.where.to_string();
    rep.parameters["budget"] = p.budget.rows;
    Ring r = Ring::parse(p.where.ring);
    GroupSpec spec{parse_family(p.family), p.where.size, r, ideal_of(r, p.where.ideal)};
    auto gens = generators_for(spec);
    auto um = enumerate_unimodular(r, p.where.size, std::nullopt, p.budget);
    auto part = orbit_partition(um, gens, p.threads);
    Outcome o;
    o.name = family_name(spec.family) + " on Um_" + std::to_string(p.where.size) + "(" + r.to_string() + ")";
    o.ok = spot_check_closed(part, gens, 1000, 1);
    o.detail["rows"] = um.rows.size();
    o.detail["generators"] = part.generator_count;
    o.detail["orbits"] = part.orbit_count();
    o.detail["orbit_sizes"] = sizes_json(part.orbit_size);
    o.detail["multiplications"] = part.multiplications;
    ordered_json reps = ordered_json::array();
    for (std::size_t k = 0; k < part.orbit_rep.size() && k < 64; ++k)
        reps.push_back(unpack_row(part.orbit_rep[k], um.modulus, um.length));
    o.detail["representatives"] = reps;
    if (p.partition) o.detail["orbit_of"] = part.orbit_of;
    rep.results.push_back(std::move(o));
    return rep;
}

RunReport run_orbit_equality(const OrbitSuiteParams& p) {
    RunReport rep;
    rep.command = "orbit-equality";
    ordered_json cases = ordered_json::array();
    for (const auto& c : p.cases) cases.push_back(c.to_string());
    rep.parameters["cases"] = cases;
    for (const auto& c : p.cases) {
        Ring r = Ring::parse(c.ring);
        auto e = check_orbit_equality(r, c.size, ideal_of(r, c.ideal), p.threads);
        Outcome o{c.to_string(), e.equal, ordered_json::object()};
        o.detail["rows"] = e.universe_size;
        o.detail["equal"] = e.equal;
        o.detail["linear_orbits"] = e.linear_orbits;
        o.detail["symplectic_orbits"] = e.symplectic_orbits;
        o.detail["orbit_sizes"] = sizes_json(e.linear_sizes);
        rep.results.push_back(std::move(o));
    }
    return rep;
}

RunReport run_transitivity(const OrbitSuiteParams& p) {
    RunReport rep;
    rep.command = "transitivity";
    ordered_json cases = ordered_json::array();
    for (const auto& c : p.cases) cases.push_back(c.to_string());
    rep.parameters["cases"] = cases;
    for (const auto& c : p.cases) {
        Ring r = Ring::parse(c.ring);
        auto t = check_dim0_transitivity(r, c.size, ideal_of(r, c.ideal), p.threads);
        Outcome o{c.to_string(), t.ok(), ordered_json::object()};
        o.detail["rows"] = t.universe_size;
        o.detail["orbits"] = t.orbit_count;
        o.detail["congruence_classes"] = t.congruence_classes;
        o.detail["classes_match"] = t.classes_match;
        o.detail["relative_rows"] = t.relative_rows;
        o.detail["relative_single_orbit"] = t.relative_single_orbit;
        rep.results.push_back(std::move(o));
    }
    return rep;
}

RunReport run_kernel_test(const MembershipParams& p) {
    RunReport rep;
    rep.command = "kernel-test";
    rep.parameters["case"] = p.where.to_string();
    rep.parameters["samples"] = p.samples;
    rep.parameters["seed"] = p.seed;
    rep.parameters["cap"] = p.cap;
    if (!p.where.ideal) throw std::invalid_argument("kernel-test needs an ideal");
    Ring r = Ring::parse(p.where.ring);
    auto m = kernel_membership_test(r, p.where.size, Ideal::parse(r, *p.where.ideal), p.samples, p.seed, p.threads,
                                    p.cap);
    rep.results.push_back({"kernel membership " + p.where.to_string(), m.ok(), membership_json(m)});
    return rep;
}

RunReport run_square_ideal_test(const MembershipParams& p) {
    RunReport rep;
    rep.command = "square-ideal-test";
    rep.parameters["case"] = p.where.to_string();
    rep.parameters["samples"] = p.samples;
    rep.parameters["seed"] = p.seed;
    rep.parameters["cap"] = p.cap;
    rep.parameters["symbolic"] = p.symbolic;
    if (!p.where.ideal) throw std::invalid_argument("square-ideal-test needs an ideal");
    Ring r = Ring::parse(p.where.ring);
    auto m = square_ideal_inclusion_test(r, p.where.size, Ideal::parse(r, *p.where.ideal), p.samples, p.seed, p.cap);
    rep.results.push_back({"conjugates in ESp(I) " + p.where.to_string(), m.ok(), membership_json(m)});
    if (p.symbolic) {
        Ring s = Ring::polynomial(Ring::dyadic(), {"z", "a", "b"});
        Ideal I = Ideal::vars(s, {"a", "b"});
        const int n = p.where.size / 2;
        int tested = 0, good = 0;
        ordered_json failing = ordered_json::array();
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = 1; j <= 2 * n; ++j) {
                if (i == j) continue;
                for (auto kl : {std::pair{j, i}, std::pair{sigma(i), sigma(j)}}) {
                    if (kl.first == kl.second) continue;
                    auto res = conjugate_square_ideal(n, i, j, kl.first, kl.second, s.var("z"), {s.var("a")},
                                                      {s.var("b")}, I);
                    ++tested;
                    if (res.ok()) ++good;
                    else failing.push_back({i, j, kl.first, kl.second});
                }
            }
        Outcome o{"symbolic factorization over " + s.to_string(), good == tested, ordered_json::object()};
        o.detail["instances"] = tested;
        o.detail["certified"] = good;
        if (!failing.empty()) o.detail["failing"] = failing;
        rep.results.push_back(std::move(o));
    }
    return rep;
}

ordered_json case_table_json(int size, int y_budget) {
    auto ctx = rewrite_case_context(size);
    ctx.budget = y_budget;
    const Ring& r = ctx.ring;
    ordered_json j;
    j["size"] = size;
    j["ring"] = r.to_string();
    j["ideal"] = ctx.ideal.to_string();
    j["y_budget"] = y_budget > 0 ? y_budget : required_budget(size);
    ordered_json entries = ordered_json::array();
    for (const auto& c : rewrite_case_table(size, size >= 6, y_budget)) {
        ordered_json e;
        e["name"] = c.name;
        e["conjugator"] = atom_json(c.conjugator, r, size);
        e["target"] = atom_json(c.target, r, size);
        try {
            auto res = conjugate_first_rowcol(c.conjugator, c.target, ctx);
            e["strategy"] = res.strategy;
            e["rhs"] = ordered_json::parse(word_to_json(res.rhs).dump());
            e["certificate"] = res.certificate;
            e["shape"] = res.shape_ok;
            e["divisible"] = res.divisible;
            e["ideal"] = res.ideal_ok;
            e["ok"] = res.ok();
        } catch (const std::exception& ex) {
            e["error"] = ex.what();
            e["ok"] = false;
        }
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

RunReport run_dilate(const DilateParams& p) {
    RunReport rep;
    rep.command = "dilate";
    rep.parameters["sizes"] = p.sizes;
    rep.parameters["y_budget"] = p.y_budget;
    if (p.word) {
        rep.parameters["word"] = *p.word;
        rep.parameters["target_column"] = p.target_column;
    }
    for (int size : p.sizes) {
        if (p.word) {
            auto ctx = rewrite_case_context(size);
            const Ring& r = ctx.ring;
            auto eps = parse_inline_word(*p.word, r, size);
            auto res = dilate_word(eps, symplectic_atom(1, p.target_column, r.var("X") * r.var("f")),
                                   r.var_index("X"), ctx);
            Outcome o{"dilate " + eps.to_string() + " on se_1," + std::to_string(p.target_column), res.ok(),
                      ordered_json::object()};
            o.detail["certificate"] = res.certificate;
            o.detail["shape"] = res.shape_ok;
            o.detail["divisible"] = res.divisible;
            o.detail["ideal"] = res.ideal_ok;
            o.detail["rhs_atoms"] = res.rhs.atoms.size();
            rep.results.push_back(std::move(o));
            continue;
        }
        auto table = case_table_json(size, p.y_budget);
        int good = 0;
        ordered_json failing = ordered_json::array();
        for (const auto& e : table["entries"]) {
            if (e["ok"].get<bool>()) ++good;
            else failing.push_back(e["name"]);
        }
        Outcome o;
        o.name = "case table size " + std::to_string(size);
        o.ok = failing.empty();
        o.detail["y_budget"] = table["y_budget"];
        o.detail["entries"] = table["entries"].size();
        o.detail["ok"] = good;
        o.detail["failing"] = failing;
        if (p.entries) o.detail["table"] = table["entries"];
        rep.results.push_back(std::move(o));
    }
    return rep;
}

RunReport run_splice_demo(const SpliceParams& p) {
    RunReport rep;
    rep.command = "splice-demo";
    rep.parameters["rings"] = p.rings;
    rep.parameters["parts"] = p.parts;
    rep.parameters["seeds"] = p.seeds;
    rep.parameters["seed"] = p.seed;
    for (const auto& desc : p.rings) {
        Ring r = Ring::parse(desc);
        const int xv = r.var_index("X");
        if (xv < 0) throw std::invalid_argument("splice-demo needs a polynomial ring in X");
        const auto card = static_cast<std::uint64_t>(r.base().cardinality());
        auto draw = [&](std::mt19937_64& rng) { return r.from_int(static_cast<std::int64_t>(bounded_draw(rng, card))); };
        for (int k : p.parts) {
            if (k < 1) throw std::invalid_argument("partition length must be positive");
            int exact = 0;
            for (int s = 0; s < p.seeds; ++s) {
                std::mt19937_64 rng(p.seed + static_cast<std::uint64_t>(s));
                // α(X): random word of linear generators with arguments c X, so α(0) = 1
                GeneratorWord w(r, 3);
                for (int t = 0; t < 4; ++t) {
                    int i = 1 + static_cast<int>(bounded_draw(rng, 3)), j = 1 + static_cast<int>(bounded_draw(rng, 2));
                    if (j >= i) ++j;
                    w.push(linear_atom(i, j, r.var("X") * draw(rng)));
                }
                SquareMatrix alpha = eval_word(w);
                std::vector<RingElement> c, b;
                RingElement rest = r.one();
                for (int t = 0; t + 1 < k; ++t) {
                    RingElement ct = draw(rng), bt = draw(rng);
                    c.push_back(ct);
                    b.push_back(bt);
                    rest -= ct * bt;
                }
                c.push_back(rest);
                b.push_back(r.one());
                auto factors = splice_telescoping(alpha, xv, c, b);
                SquareMatrix prod = SquareMatrix::identity(r, 3);
                for (const auto& f : factors) prod = prod * f;
                if (prod == alpha) ++exact;
            }
            Outcome o{desc + " k=" + std::to_string(k), exact == p.seeds, ordered_json::object()};
            o.detail["seeds"] = p.seeds;
            o.detail["exact"] = exact;
            rep.results.push_back(std::move(o));
        }
    }
    return rep;
}

}  // namespace transvect
