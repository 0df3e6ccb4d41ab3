#include <map>
#include <mutex>
#include <stdexcept>

#include "transvect/identity.hpp"

namespace transvect {

GeneratorAtom canonical_atom(const GeneratorAtom& a) {
    GeneratorAtom c = a.normalized();
    if (c.family != Family::Symplectic) return c;
    if (c.i == 1 || c.j == 1 || c.i == sigma(c.j)) return c;
    int p = sigma(c.j), q = sigma(c.i);
    RingElement w = ((c.i + c.j) % 2 == 0) ? -c.arg : c.arg;
    if (p == 1 || q == 1 || std::make_pair(p, q) < std::make_pair(c.i, c.j)) return symplectic_atom(p, q, w);
    return c;
}

AtomRegion region(const GeneratorAtom& a) {
    GeneratorAtom c = canonical_atom(a);
    if (c.i == 1) return AtomRegion::FirstRow;
    if (c.j == 1) return AtomRegion::FirstCol;
    return AtomRegion::Inner;
}

namespace {

using Atoms = std::vector<GeneratorAtom>;
using Key = std::pair<int, int>;

Key key_of(int i, int j) {
    GeneratorAtom c = canonical_atom(symplectic_atom(i, j, Ring::dyadic().one()));
    return {c.i, c.j};
}
Key key_of(const GeneratorAtom& a) { return key_of(a.i, a.j); }

Atoms inv(const Atoms& w) {
    Atoms out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse().normalized());
    return out;
}

void append(Atoms& dst, const Atoms& src) { dst.insert(dst.end(), src.begin(), src.end()); }

Atoms comm(const Atoms& g, const Atoms& h) {
    Atoms out = g;
    append(out, h);
    append(out, inv(g));
    append(out, inv(h));
    return out;
}

}  // namespace

bool opposite_roots(const GeneratorAtom& a, const GeneratorAtom& b) { return key_of(a) == key_of(b.j, b.i); }

std::optional<std::vector<GeneratorAtom>> read_root_elements(const SquareMatrix& c) {
    const int n = c.size();
    std::vector<char> seen(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    Atoms out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j || seen[i * (n + 1) + j] || c.at(i, j).is_zero()) continue;
            seen[i * (n + 1) + j] = 1;
            seen[sigma(j) * (n + 1) + sigma(i)] = 1;
            out.push_back(canonical_atom(symplectic_atom(i, j, c.at(i, j))));
        }
    if (eval_atoms(c.ring(), n, out) != c) return std::nullopt;
    return out;
}

namespace {

class Rewriter {
public:
    explicit Rewriter(const DilationContext& ctx) : ctx_(ctx) {
        d_ = ctx.ring.var(ctx.ring.vars().at(ctx.yvar)).pow(ctx.unit);
    }

    // Number of Y^unit factors; large for zero.
    int yval(const RingElement& x) const {
        if (x.is_zero()) return 1 << 20;
        return static_cast<int>(x.valuation(ctx_.yvar) / ctx_.unit);
    }
    RingElement dpow(int k) const { return d_.pow(static_cast<unsigned>(k)); }
    RingElement div_d(const RingElement& x, int k) const {
        return x.divide_by_var_power(ctx_.yvar, static_cast<unsigned>(k) * ctx_.unit);
    }
    bool in_ideal(const RingElement& x) const { return ctx_.ideal.contains(x); }

    bool good(const GeneratorAtom& a) const {
        switch (region(a)) {
            case AtomRegion::FirstRow: return yval(a.effective_arg()) >= 1;
            case AtomRegion::FirstCol: return yval(a.effective_arg()) >= 1 && in_ideal(a.effective_arg());
            default: return false;
        }
    }
    // Inner generator that splits into a first-column/first-row commutator.
    bool splittable(const GeneratorAtom& a) const {
        return region(a) == AtomRegion::Inner && in_ideal(a.effective_arg()) && yval(a.effective_arg()) >= 2;
    }

    std::optional<Atoms> conj_atom(const GeneratorAtom& g, const GeneratorAtom& m) const {
        if (opposite_roots(g, m)) return std::nullopt;
        Atoms w = comm({g}, {m});
        SquareMatrix c = eval_atoms(ctx_.ring, ctx_.size, w);
        Atoms out;
        if (!c.is_identity()) {
            auto parts = read_root_elements(c);
            if (!parts) return std::nullopt;
            out = *parts;
        }
        out.push_back(canonical_atom(m));
        return out;
    }

    // se_ρ(c) = [x_μ(c/(κD)), x_ν(D)] with μ first-column and ν first-row.
    Atoms split_inner(const GeneratorAtom& a) const {
        GeneratorAtom c = canonical_atom(a);
        const auto& sp = split_pattern(key_of(c));
        RingElement kappa = scalar(sp.kappa);
        RingElement p = div_d(c.arg, 1) * kappa.inverse();
        return comm({symplectic_atom(sp.mu.first, sp.mu.second, p)}, {symplectic_atom(sp.nu.first, sp.nu.second, d_)});
    }

    Atoms simplify(const Atoms& w) const {
        Atoms out;
        for (const auto& a0 : w) {
            GeneratorAtom a = canonical_atom(a0);
            if (a.arg.is_zero()) continue;
            if (!out.empty() && out.back().i == a.i && out.back().j == a.j) {
                out.back().arg += a.arg;
                if (out.back().arg.is_zero()) out.pop_back();
                continue;
            }
            out.push_back(a);
        }
        return out;
    }

    // A generator that is neither acceptable output nor splittable is removed by pairing b ... b^-1
    // and conjugating the enclosed generators by b; remaining inner generators are then split.
    std::optional<Atoms> clean(Atoms w) const {
        w = simplify(w);
        auto bad = [&](const GeneratorAtom& a) { return !good(a) && !splittable(a); };
        for (int round = 0; round < 64; ++round) {
            std::size_t p = 0, q = 0;
            bool found = false;
            for (std::size_t s = 0; s < w.size() && !found; ++s) {
                if (!bad(w[s])) continue;
                for (std::size_t t = s + 1; t < w.size(); ++t) {
                    if (bad(w[t]) && w[t].i == w[s].i && w[t].j == w[s].j && w[t].arg == -w[s].arg) {
                        p = s;
                        q = t;
                        found = true;
                        break;
                    }
                    if (bad(w[t])) break;
                }
            }
            if (!found) break;
            const GeneratorAtom& b = w[p];
            bool inner_b = region(b) == AtomRegion::Inner;
            Atoms mid;
            for (std::size_t t = p + 1; t < q; ++t) {
                if (region(w[t]) == AtomRegion::Inner && (inner_b || opposite_roots(b, w[t])))
                    append(mid, split_inner(w[t]));
                else
                    mid.push_back(w[t]);
            }
            Atoms repl;
            for (const auto& m : mid) {
                auto c = conj_atom(b, m);
                if (!c) return std::nullopt;
                append(repl, *c);
            }
            Atoms next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            append(next, repl);
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(q) + 1, w.end());
            w = simplify(next);
            if (w.size() > 4000) return std::nullopt;
        }
        Atoms out;
        for (const auto& a : w) {
            if (region(a) == AtomRegion::Inner) {
                if (!splittable(a)) return std::nullopt;
                append(out, split_inner(a));
            } else {
                out.push_back(a);
            }
        }
        out = simplify(out);
        for (const auto& a : out)
            if (!good(a)) return std::nullopt;
        return out;
    }

    struct Candidate {
        Atoms word;
        std::string strategy;
    };

    std::optional<Candidate> rewrite(const GeneratorAtom& g, const GeneratorAtom& t, int budget) const {
        if (!opposite_roots(g, t)) {
            auto w = conj_atom(g, t);
            if (!w) return std::nullopt;
            auto c = clean(*w);
            if (!c) return std::nullopt;
            return Candidate{*c, "commutator"};
        }
        return rewrite_opposite(g, t, budget);
    }

    const DilationContext& ctx() const { return ctx_; }

private:
    struct SplitPattern {
        Key mu, nu;
        Scalar kappa;
    };
    // [x_γ(p), x_δ(q)] = ∏ x_ρ(κ p^s q^r) as read off symbolically.
    struct CommTerm {
        Key root;
        Scalar kappa;
        int s = 0, r = 0;
    };
    struct CommPattern {
        Key gamma, delta;
        std::vector<CommTerm> terms;
    };

    RingElement scalar(Scalar s) const {
        RingElement v = ctx_.ring.from_int(s.num);
        for (int k = 0; k < s.exp; ++k) v = v * ctx_.ring.inverse_of_two();
        return v;
    }

    std::vector<Key> all_roots() const {
        std::vector<Key> out;
        for (int i = 1; i <= ctx_.size; ++i)
            for (int j = 1; j <= ctx_.size; ++j)
                if (i != j && key_of(i, j) == Key{i, j}) out.push_back({i, j});
        return out;
    }

    const std::vector<CommPattern>& patterns() const {
        std::lock_guard<std::mutex> lk(cache_mu());
        auto& cache = pattern_cache();
        auto it = cache.find(ctx_.size);
        if (it != cache.end()) return it->second;
        Ring pq = Ring::polynomial(Ring::dyadic(), {"p", "q"});
        std::vector<CommPattern> out;
        auto roots = all_roots();
        for (auto g : roots)
            for (auto d : roots) {
                if (g == d || key_of(d.second, d.first) == g) continue;
                Atoms w = comm({symplectic_atom(g.first, g.second, pq.var("p"))},
                               {symplectic_atom(d.first, d.second, pq.var("q"))});
                SquareMatrix c = eval_atoms(pq, ctx_.size, w);
                if (c.is_identity()) continue;
                auto parts = read_root_elements(c);
                if (!parts) continue;
                CommPattern pat{g, d, {}};
                bool mono = true;
                for (const auto& a : *parts) {
                    if (a.arg.terms().size() != 1) {
                        mono = false;
                        break;
                    }
                    const Term& tm = a.arg.terms()[0];
                    pat.terms.push_back({{a.i, a.j}, tm.coef, tm.exps[0], tm.exps[1]});
                }
                if (mono) out.push_back(pat);
            }
        return cache.emplace(ctx_.size, std::move(out)).first->second;
    }

    const SplitPattern& split_pattern(Key rho) const {
        std::lock_guard<std::mutex> lk(cache_mu());
        auto& cache = split_cache();
        auto ck = std::make_pair(ctx_.size, rho);
        auto it = cache.find(ck);
        if (it != cache.end()) return it->second;
        Ring dy = Ring::dyadic();
        for (auto mu : all_roots()) {
            if (mu.second != 1) continue;
            for (auto nu : all_roots()) {
                if (nu.first != 1) continue;
                Atoms w = comm({symplectic_atom(mu.first, mu.second, dy.one())}, {symplectic_atom(nu.first, nu.second, dy.one())});
                auto parts = read_root_elements(eval_atoms(dy, ctx_.size, w));
                if (!parts || parts->size() != 1) continue;
                const auto& a = parts->front();
                if (Key{a.i, a.j} != rho) continue;
                return cache.emplace(ck, SplitPattern{mu, nu, a.arg.constant_term()}).first->second;
            }
        }
        throw std::logic_error("no first-row/column split for an inner root");
    }

    static std::mutex& cache_mu() {
        static std::mutex m;
        return m;
    }
    static std::map<int, std::vector<CommPattern>>& pattern_cache() {
        static std::map<int, std::vector<CommPattern>> c;
        return c;
    }
    static std::map<std::pair<int, Key>, SplitPattern>& split_cache() {
        static std::map<std::pair<int, Key>, SplitPattern> c;
        return c;
    }

    // t = [h1, h2]·K with K a product of root elements; then g t g^-1 = [g h1 g^-1, g h2 g^-1]·g K g^-1.
    std::optional<Candidate> rewrite_opposite(const GeneratorAtom& g, const GeneratorAtom& t0, int budget) const {
        GeneratorAtom t = canonical_atom(t0);
        Key beta{t.i, t.j};
        RingElement rest = div_d(t.arg, budget);
        std::optional<Candidate> best;
        for (const auto& pat : patterns()) {
            const CommTerm* hit = nullptr;
            for (const auto& term : pat.terms)
                if (term.root == beta) hit = &term;
            if (!hit) continue;
            RingElement kinv = scalar(hit->kappa).inverse();
            // κ p^s q^r = D^budget·rest; rest goes into a factor with exponent 1.
            for (int e1 = 0; e1 * hit->s <= budget; ++e1) {
                int remain = budget - e1 * hit->s;
                if (remain % hit->r != 0) continue;
                int e2 = remain / hit->r;
                for (int place = 0; place < 2; ++place) {
                    if (place == 0 && hit->s != 1) continue;
                    if (place == 1 && hit->r != 1) continue;
                    RingElement p = dpow(e1), q = dpow(e2);
                    if (place == 0)
                        p = p * rest * kinv;
                    else
                        q = q * rest * kinv;
                    auto cand = try_split(g, t, pat, p, q);
                    if (cand && (!best || cand->word.size() < best->word.size())) best = cand;
                }
            }
        }
        return best;
    }

    std::optional<Candidate> try_split(const GeneratorAtom& g, const GeneratorAtom& t, const CommPattern& pat,
                                       const RingElement& p, const RingElement& q) const {
        GeneratorAtom h1 = symplectic_atom(pat.gamma.first, pat.gamma.second, p);
        GeneratorAtom h2 = symplectic_atom(pat.delta.first, pat.delta.second, q);
        auto parts = read_root_elements(eval_atoms(ctx_.ring, ctx_.size, comm({h1}, {h2})));
        if (!parts) return std::nullopt;
        Atoms others;
        bool seen_t = false;
        for (const auto& a : *parts) {
            if (a.i == t.i && a.j == t.j) {
                if (a.arg != t.arg) return std::nullopt;
                seen_t = true;
            } else {
                others.push_back(a.inverse().normalized());
            }
        }
        if (!seen_t) return std::nullopt;
        auto A = conj_atom(g, h1), B = conj_atom(g, h2);
        if (!A || !B) return std::nullopt;
        Atoms w = comm(*A, *B);
        for (const auto& o : others) {
            auto c = conj_atom(g, o);
            if (!c) return std::nullopt;
            append(w, *c);
        }
        auto c = clean(w);
        if (!c) return std::nullopt;
        std::string name = "split via se_" + std::to_string(pat.gamma.first) + "," + std::to_string(pat.gamma.second) +
                           " and se_" + std::to_string(pat.delta.first) + "," + std::to_string(pat.delta.second);
        return Candidate{*c, name};
    }

    DilationContext ctx_;
    RingElement d_;
};

bool e1_legal(const GeneratorAtom& a, const Ideal& I) {
    switch (region(a)) {
        case AtomRegion::FirstRow: return true;
        case AtomRegion::FirstCol: return I.contains(a.effective_arg());
        default: return false;
    }
}

}  // namespace

int required_budget(int size) { return size >= 6 ? 4 : 2; }

void certify(RewriteResult& r, const DilationContext& ctx) {
    r.certificate = eval_word(r.lhs) == eval_word(r.rhs);
    r.shape_ok = r.divisible = r.ideal_ok = true;
    for (const auto& a : r.rhs.atoms) {
        RingElement z = a.effective_arg();
        if (a.i != 1 && a.j != 1) r.shape_ok = false;
        if (z.valuation(ctx.yvar) < ctx.unit || z.is_zero()) r.divisible = false;
        if (a.i != 1 && a.j == 1 && !ctx.ideal.contains(z)) r.ideal_ok = false;
    }
}

RewriteResult conjugate_first_rowcol(const GeneratorAtom& conjugator, const GeneratorAtom& target,
                                     const DilationContext& ctx) {
    if (!e1_legal(conjugator, ctx.ideal)) throw std::invalid_argument("conjugator is not a first-row/column generator of the relative group");
    if (region(target) == AtomRegion::Inner) throw std::invalid_argument("target is not a first-row/column generator");
    if (!e1_legal(target, ctx.ideal)) throw std::invalid_argument("first-column target argument is not in the ideal");
    Rewriter rw(ctx);
    int budget = ctx.budget > 0 ? ctx.budget : required_budget(ctx.size);
    if (rw.yval(target.effective_arg()) < budget)
        throw std::invalid_argument("target argument lacks the required power of the dilation variable");
    RewriteResult res;
    res.lhs = GeneratorWord(ctx.ring, ctx.size);
    res.lhs.push(conjugator).push(target).push(conjugator.inverse());
    res.rhs = GeneratorWord(ctx.ring, ctx.size);
    res.rhs.tag = WordClass::FirstRowCol;
    res.rhs.ideal = ctx.ideal;
    auto cand = rw.rewrite(conjugator, target, budget);
    if (!cand) {
        res.strategy = "no rewrite found";
        return res;
    }
    res.rhs.atoms = cand->word;
    res.strategy = cand->strategy;
    certify(res, ctx);
    return res;
}

RewriteResult dilate_word(const GeneratorWord& eps, const GeneratorAtom& target, int xvar, const DilationContext& ctx) {
    for (const auto& a : eps.atoms)
        if (!e1_legal(a, ctx.ideal)) throw std::invalid_argument("word is not in first-row/column shape: " + a.to_string());
    if (region(target) == AtomRegion::Inner) throw std::invalid_argument("target is not a first-row/column generator");
    const int r = static_cast<int>(eps.atoms.size());
    RingElement y = ctx.ring.var(ctx.ring.vars().at(ctx.yvar));
    unsigned top = 1;
    for (int k = 0; k < r; ++k) top *= 4;
    RingElement xs = ctx.ring.var(ctx.ring.vars().at(xvar)) * y.pow(top * ctx.unit);
    GeneratorAtom t = target.normalized();
    t.arg = t.arg.substitute(xvar, xs);

    RewriteResult res;
    res.lhs = GeneratorWord(ctx.ring, ctx.size);
    for (const auto& a : eps.atoms) res.lhs.push(a);
    res.lhs.push(t);
    for (auto it = eps.atoms.rbegin(); it != eps.atoms.rend(); ++it) res.lhs.push(it->inverse());
    res.rhs = GeneratorWord(ctx.ring, ctx.size);
    res.rhs.tag = WordClass::FirstRowCol;
    res.rhs.ideal = ctx.ideal;

    Atoms word = {canonical_atom(t)};
    unsigned unit = top;
    for (int k = r - 1; k >= 0; --k) {
        unit /= 4;
        DilationContext level = ctx;
        level.unit = unit * ctx.unit;
        Rewriter rw(level);
        Atoms next;
        for (const auto& a : word) {
            auto cand = rw.rewrite(eps.atoms[static_cast<std::size_t>(k)], a, 4);
            if (!cand) {
                res.strategy = "no rewrite found at generator " + std::to_string(k + 1);
                return res;
            }
            append(next, cand->word);
        }
        word = rw.simplify(next);
    }
    res.rhs.atoms = word;
    res.strategy = "induction over " + std::to_string(r) + " generators";
    certify(res, ctx);
    return res;
}

Ring rewrite_case_ring() { return Ring::polynomial(Ring::dyadic(), {"a", "X", "Y", "f", "x1", "x2"}); }

DilationContext rewrite_case_context(int size) {
    Ring r = rewrite_case_ring();
    return DilationContext{r, r.var_index("Y"), 1, Ideal::vars(r, {"x1", "x2"}), size};
}

std::vector<RewriteCase> rewrite_case_table(int size, bool include_column_targets, int budget) {
    Ring r = rewrite_case_ring();
    RingElement a = r.var("a"), x1 = r.var("x1"), x2 = r.var("x2");
    const int power = budget > 0 ? budget : required_budget(size);
    RingElement body = r.var("Y").pow(static_cast<unsigned>(power)) * r.var("X") * r.var("f");
    std::vector<RewriteCase> out;
    auto tag = [](int p, int q) { return "se_" + std::to_string(p) + "," + std::to_string(q); };
    for (int col = 0; col < (include_column_targets ? 2 : 1); ++col)
        for (int j = 2; j <= size; ++j) {
            GeneratorAtom target = col ? symplectic_atom(j, 1, body * x2) : symplectic_atom(1, j, body);
            for (int side = 0; side < 2; ++side)
                for (int k = 2; k <= size; ++k) {
                    GeneratorAtom g = side ? symplectic_atom(k, 1, x1) : symplectic_atom(1, k, a);
                    out.push_back({tag(g.i, g.j) + " on " + tag(target.i, target.j), size, g, target});
                }
        }
    return out;
}

}  // namespace transvect
