#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "transvect/identity.hpp"

namespace transvect {

namespace {

using Atoms = std::vector<GeneratorAtom>;

GeneratorAtom S(int i, int j, RingElement z) { return symplectic_atom(i, j, std::move(z)); }

Atoms inv(const Atoms& w) {
    Atoms out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Atoms cat(std::initializer_list<Atoms> parts) {
    Atoms out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// [g,h] = g h g^-1 h^-1
Atoms comm(const Atoms& g, const Atoms& h) { return cat({g, h, inv(g), inv(h)}); }
Atoms conj(const Atoms& g, const Atoms& h) { return cat({g, h, inv(g)}); }

int sgn(int e) { return (e % 2 == 0) ? 1 : -1; }

struct Sides {
    Atoms lhs, rhs;
};

bool distinct_pair(int i, int j) { return i != j; }

// Index constraints, and every generator in the statement must be well formed.
bool admissible(int id, int n, const std::vector<int>& x) {
    const int m = 2 * n;
    for (int v : x)
        if (v < 1 || v > m) return false;
    auto s = sigma;
    if (id >= 3 && id <= 5) {
        if (x.size() != 6) return false;
        return distinct_pair(x[0], x[1]) && distinct_pair(x[2], x[3]) && distinct_pair(x[4], x[5]);
    }
    if (id >= 6 && id <= 13) {
        if (x.size() != 2) return false;
        int i = x[0], j = x[1];
        if (i == s(j)) return false;
        switch (id) {
            case 6:
            case 9:
            case 10:
            case 11:
            case 8:
            case 7:
                return i != j;
            case 12:
            case 13:
                return true;
        }
    }
    if (id == 14) {
        if (x.size() != 2) return false;
        int i = x[0], k = x[1];
        return k != i && k != s(i);
    }
    if (id == 15) {
        if (x.size() != 4) return false;
        int i = x[0], j = x[1], k = x[2], l = x[3];
        return i != j && k != l && i != s(k) && i != l && j != k && j != s(k);
    }
    return false;
}

// Both sides of the relation as stated; `corrected` selects the corrected statement when one exists.
Sides build(int id, const std::vector<int>& x, const RingElement& a, const RingElement& b, bool corrected,
            bool& has_correction) {
    auto s = sigma;
    const Ring& r = a.ring();
    RingElement two = r.from_int(2);
    has_correction = false;
    if (id >= 3 && id <= 5) {
        Atoms g = {S(x[0], x[1], a)}, h = {S(x[2], x[3], b)}, k = {S(x[4], x[5], a + b)};
        if (id == 3) return {comm(cat({g, h}), k), cat({conj(g, comm(h, k)), comm(g, k)})};
        if (id == 4) return {comm(g, cat({h, k})), cat({comm(g, h), conj(h, comm(g, k))})};
        return {conj(g, comm(h, k)), comm(conj(g, h), conj(g, k))};
    }
    if (id >= 6 && id <= 13) {
        int i = x[0], j = x[1];
        int e = i + j;
        // Relations 6..9 carry a spurious factor 2 on the first factor.
        RingElement c = corrected ? r.one() : two;
        if (id >= 6 && id <= 9) has_correction = true;
        switch (id) {
            case 6:
                return {comm({S(i, j, a)}, {S(s(i), i, b)}),
                        {S(s(i), j, -c * a * b), S(s(j), j, a * a * b * r.from_int(sgn(e)))}};
            case 7:
                return {comm({S(i, j, a)}, {S(j, s(j), b)}),
                        {S(i, s(i), a * a * b * r.from_int(sgn(e))), S(i, s(j), c * a * b)}};
            case 8:
                return {comm({S(s(i), i, a)}, {S(s(j), s(i), b)}),
                        {S(s(j), i, -c * a * b), S(s(j), j, a * b * b * r.from_int(sgn(e + 1)))}};
            case 9:
                return {comm({S(s(i), i, a)}, {S(i, j, b)}),
                        {S(s(i), j, c * a * b), S(s(j), j, a * b * b * r.from_int(sgn(e + 1)))}};
            case 10:
                return {comm({S(i, j, a)}, {S(j, s(i), b)}), {S(i, s(i), two * a * b)}};
            case 11:
                return {comm({S(i, j, a)}, {S(s(j), i, b)}), {S(s(j), j, -two * a * b)}};
            case 12:
                return {comm({S(s(i), i, a)}, {S(s(j), j, b)}), {}};
            case 13:
                return {comm({S(s(j), j, a)}, {S(s(i), j, b)}), {}};
        }
    }
    if (id == 14) {
        int i = x[0], k = x[1];
        return {{S(i, s(i), a)}, comm({S(i, k, a * r.inverse_of_two())}, {S(k, s(i), r.one())})};
    }
    if (id == 15) {
        int i = x[0], j = x[1], k = x[2], l = x[3];
        Atoms lhs = comm({S(i, j, a)}, {S(k, l, b)});
        if (l != s(j)) return {lhs, {}};
        has_correction = true;
        if (!corrected) return {lhs, {}};
        RingElement v = a * b * r.from_int(sgn(j + k));
        if (k == i) v = two * v;
        return {lhs, {S(i, s(k), v)}};
    }
    throw std::invalid_argument("unknown relation id " + std::to_string(id));
}

bool holds(const Ring& r, int size, const Sides& sd, SquareMatrix* lhs, SquareMatrix* rhs) {
    SquareMatrix L = eval_atoms(r, size, sd.lhs), R = eval_atoms(r, size, sd.rhs);
    bool eq = L == R;
    if (lhs) *lhs = std::move(L);
    if (rhs) *rhs = std::move(R);
    return eq;
}

}  // namespace

std::vector<int> relation_ids() {
    std::vector<int> ids;
    for (int k = 3; k <= 15; ++k) ids.push_back(k);
    return ids;
}

std::string relation_statement(int id) {
    switch (id) {
        case 3: return "[gh,k] = g[h,k]g^-1 [g,k]";
        case 4: return "[g,hk] = [g,h] h[g,k]h^-1";
        case 5: return "g[h,k]g^-1 = [ghg^-1, gkg^-1]";
        case 6: return "[se_ij(a), se_s(i)i(b)] = se_s(i)j(-2ab) se_s(j)j((-1)^(i+j) a^2 b)";
        case 7: return "[se_ij(a), se_js(j)(b)] = se_is(i)((-1)^(i+j) a^2 b) se_is(j)(2ab)";
        case 8: return "[se_s(i)i(a), se_s(j)s(i)(b)] = se_s(j)i(-2ab) se_s(j)j((-1)^(i+j+1) a b^2)";
        case 9: return "[se_s(i)i(a), se_ij(b)] = se_s(i)j(2ab) se_s(j)j((-1)^(i+j+1) a b^2)";
        case 10: return "[se_ij(a), se_js(i)(b)] = se_is(i)(2ab)";
        case 11: return "[se_ij(a), se_s(j)i(b)] = se_s(j)j(-2ab)";
        case 12: return "[se_s(i)i(a), se_s(j)j(b)] = 1";
        case 13: return "[se_s(j)j(a), se_s(i)j(b)] = 1";
        case 14: return "se_is(i)(a) = [se_ik(a/2), se_ks(i)(1)], k != i, s(i)";
        case 15: return "[se_ij(a), se_kl(b)] = 1, i != s(k), l and j != k, s(k)";
    }
    throw std::invalid_argument("unknown relation id " + std::to_string(id));
}

namespace {

std::string correction_text(int id, const std::vector<int>& x) {
    switch (id) {
        case 6: return "[se_ij(a), se_s(i)i(b)] = se_s(i)j(-ab) se_s(j)j((-1)^(i+j) a^2 b)";
        case 7: return "[se_ij(a), se_js(j)(b)] = se_is(i)((-1)^(i+j) a^2 b) se_is(j)(ab)";
        case 8: return "[se_s(i)i(a), se_s(j)s(i)(b)] = se_s(j)i(-ab) se_s(j)j((-1)^(i+j+1) a b^2)";
        case 9: return "[se_s(i)i(a), se_ij(b)] = se_s(i)j(ab) se_s(j)j((-1)^(i+j+1) a b^2)";
        case 15:
            if (x.size() == 4 && x[3] == sigma(x[1]))
                return x[2] == x[0] ? "l = s(j), k = i: [se_ij(a), se_kl(b)] = se_is(i)((-1)^(i+j) 2ab)"
                                    : "l = s(j): [se_ij(a), se_kl(b)] = se_is(k)((-1)^(j+k) ab)";
            return "";
    }
    return "";
}

}  // namespace

bool tuple_admissible(int id, int n, const std::vector<int>& idx) { return admissible(id, n, idx); }

std::vector<std::vector<int>> admissible_tuples(int id, int n) {
    const int m = 2 * n;
    std::size_t arity = (id <= 5) ? 6 : (id == 15 ? 4 : 2);
    std::vector<std::vector<int>> out;
    std::vector<int> x(arity, 1);
    while (true) {
        if (admissible(id, n, x)) out.push_back(x);
        std::size_t p = arity;
        while (p > 0) {
            --p;
            if (x[p] < m) {
                ++x[p];
                break;
            }
            x[p] = 1;
            if (p == 0) return out;
        }
    }
}

RelationReport verify_relation(const RelationInstance& inst) {
    if (!admissible(inst.id, inst.n, inst.indices))
        throw std::invalid_argument("relation " + std::to_string(inst.id) + ": index constraints violated");
    const Ring& r = inst.a.ring();
    if (!r.inverse_of_two().valid()) throw std::invalid_argument("2 is not invertible");
    RelationReport rep;
    rep.id = inst.id;
    rep.indices = inst.indices;
    rep.statement = relation_statement(inst.id);
    bool corr = false;
    Sides printed = build(inst.id, inst.indices, inst.a, inst.b, false, corr);
    rep.holds = holds(r, 2 * inst.n, printed, &rep.lhs, &rep.rhs);
    rep.has_correction = corr;
    if (corr) {
        Sides fixed = build(inst.id, inst.indices, inst.a, inst.b, true, corr);
        rep.corrected_holds = holds(r, 2 * inst.n, fixed, nullptr, nullptr);
        rep.correction = correction_text(inst.id, inst.indices);
    } else {
        rep.corrected_holds = rep.holds;
    }
    return rep;
}

std::vector<RelationReport> verify_relation_suite(int n, const Ring& ring, const SuiteMode& mode,
                                                  const std::vector<int>& ids_in) {
    if (n < 2) throw std::invalid_argument("relation suite needs n >= 2");
    std::vector<int> ids = ids_in.empty() ? std::vector<int>{4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15} : ids_in;
    std::vector<RelationInstance> jobs;
    Ring work = ring;
    if (mode.symbolic) {
        Ring base = ring.is_polynomial() ? ring.base() : ring;
        work = Ring::polynomial(base, {"a", "b"});
    } else if (!ring.is_finite()) {
        throw std::invalid_argument("sampled mode needs a finite ring");
    }
    for (int id : ids)
        for (auto& t : admissible_tuples(id, n)) {
            RelationInstance inst;
            inst.id = id;
            inst.n = n;
            inst.indices = t;
            if (mode.symbolic) {
                inst.a = work.var("a");
                inst.b = work.var("b");
            }
            jobs.push_back(std::move(inst));
        }
    std::vector<RelationReport> out(jobs.size());
    auto run = [&](std::size_t k) {
        if (mode.symbolic) {
            out[k] = verify_relation(jobs[k]);
            return;
        }
        // Seed per instance so results do not depend on scheduling.
        std::mt19937_64 rng(mode.seed * 1000003ull + k);
        RelationReport agg;
        bool first = true;
        for (int s = 0; s < mode.samples; ++s) {
            RelationInstance inst = jobs[k];
            inst.a = sample_element(work, rng);
            inst.b = sample_element(work, rng);
            RelationReport rep = verify_relation(inst);
            if (first) {
                agg = rep;
                first = false;
            } else {
                agg.corrected_holds = agg.corrected_holds && rep.corrected_holds;
                if (agg.holds && !rep.holds) {
                    agg.lhs = rep.lhs;
                    agg.rhs = rep.rhs;
                }
                agg.holds = agg.holds && rep.holds;
            }
        }
        out[k] = std::move(agg);
    };
    int threads = std::max(1, mode.threads);
    if (threads == 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) run(k);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < jobs.size(); k = next++) run(k);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace transvect
