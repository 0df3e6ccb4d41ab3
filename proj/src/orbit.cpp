#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "transvect/orbit.hpp"

namespace transvect {

namespace {

// Dense matrix over ℤ/m with small entries.
struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> e;
    std::int64_t at(int i, int j) const { return e[static_cast<std::size_t>(i * n + j)]; }
};

std::int64_t to_int(const RingElement& x) {
    if (x.ring().is_polynomial()) throw std::invalid_argument("expected an element of a finite base ring");
    return x.is_zero() ? 0 : x.constant_term().num;
}

void require_finite(const Ring& r) {
    if (!r.is_finite()) throw std::invalid_argument("orbit computations need a finite ring: " + r.to_string());
}

IntMatrix to_int_matrix(const SquareMatrix& m) {
    IntMatrix out{m.size(), {}};
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) out.e.push_back(to_int(m.at(i, j)));
    return out;
}

std::int64_t ideal_modulus(const Ideal& I) {
    std::int64_t d = to_int(I.additive_generator());
    std::int64_t m = I.ring().modulus();
    return d == 0 ? m : gcd64(d, m);
}

std::uint64_t checked_power(std::int64_t m, int n, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (int k = 0; k < n; ++k) {
        if (total > limit / static_cast<std::uint64_t>(m)) throw std::length_error("row budget exceeded");
        total *= static_cast<std::uint64_t>(m);
    }
    if (total > limit) throw std::length_error("row budget exceeded");
    return total;
}

std::uint64_t act(std::uint64_t code, const IntMatrix& g, std::int64_t m, int n, std::vector<int>& buf) {
    for (int k = n - 1; k >= 0; --k) {
        buf[static_cast<std::size_t>(k)] = static_cast<int>(code % static_cast<std::uint64_t>(m));
        code /= static_cast<std::uint64_t>(m);
    }
    std::uint64_t out = 0;
    for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) s += buf[static_cast<std::size_t>(i)] * g.at(i, j);
        out = out * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(s % m);
    }
    return out;
}

// Position of each packed code in the universe, -1 when absent.
std::vector<std::int32_t> position_table(const PackedRows& u) {
    std::uint64_t total = checked_power(u.modulus, u.length, Budget{}.rows);
    std::vector<std::int32_t> pos(total, -1);
    for (std::size_t k = 0; k < u.rows.size(); ++k) pos[u.rows[k]] = static_cast<std::int32_t>(k);
    return pos;
}

}  // namespace

std::string family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::Linear: return "e";
        case GroupFamily::Symplectic: return "esp";
        case GroupFamily::LinearRelative: return "e-rel";
        case GroupFamily::SymplecticRelative: return "esp-rel";
        case GroupFamily::LinearFirstRowCol: return "e1";
        case GroupFamily::SymplecticFirstRowCol: return "esp1";
    }
    return "?";
}

GroupFamily parse_family(const std::string& text) {
    for (auto f : {GroupFamily::Linear, GroupFamily::Symplectic, GroupFamily::LinearRelative,
                   GroupFamily::SymplecticRelative, GroupFamily::LinearFirstRowCol, GroupFamily::SymplecticFirstRowCol})
        if (family_name(f) == text) return f;
    throw std::invalid_argument("unknown group family: " + text);
}

std::uint64_t pack_row(const std::vector<int>& v, std::int64_t m) {
    std::uint64_t code = 0;
    for (int x : v) code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(((x % m) + m) % m);
    return code;
}

std::vector<int> unpack_row(std::uint64_t code, std::int64_t m, int length) {
    std::vector<int> v(static_cast<std::size_t>(length));
    for (int k = length - 1; k >= 0; --k) {
        v[static_cast<std::size_t>(k)] = static_cast<int>(code % static_cast<std::uint64_t>(m));
        code /= static_cast<std::uint64_t>(m);
    }
    return v;
}

PackedRows enumerate_unimodular(const Ring& r, int n, const std::optional<Ideal>& I, const Budget& budget) {
    require_finite(r);
    if (n < 1) throw std::invalid_argument("row length must be positive");
    const std::int64_t m = r.modulus();
    std::uint64_t total = checked_power(m, n, budget.rows);
    const bool rel = I && I->is_proper();
    const std::int64_t d = rel ? ideal_modulus(*I) : 1;
    PackedRows out{m, n, {}};
    for (std::uint64_t code = 0; code < total; ++code) {
        auto v = unpack_row(code, m, n);
        std::int64_t g = m;
        for (int x : v) g = gcd64(g, x);
        if (g != 1) continue;
        if (rel) {
            bool congruent = (v[0] - 1) % d == 0;
            for (int k = 1; k < n && congruent; ++k) congruent = v[static_cast<std::size_t>(k)] % d == 0;
            if (!congruent) continue;
        }
        out.rows.push_back(code);
    }
    return out;
}

std::vector<RingElement> additive_generators(const Ideal& I) {
    require_finite(I.ring());
    RingElement g = I.additive_generator();
    if (g.is_zero()) return {};
    return {I.ring().from_int(ideal_modulus(I))};
}

std::vector<SquareMatrix> generators_for(const GroupSpec& spec, bool all_ring_elements) {
    const Ring& r = spec.ring;
    require_finite(r);
    const int n = spec.size;
    const bool symp = spec.family == GroupFamily::Symplectic || spec.family == GroupFamily::SymplecticRelative ||
                      spec.family == GroupFamily::SymplecticFirstRowCol;
    if (symp && n % 2) throw std::invalid_argument("symplectic groups need even size");
    auto ge = [&](int i, int j, const RingElement& x) {
        return symp ? elem_symplectic(r, n / 2, i, j, x) : elem_linear(r, n, i, j, x);
    };
    std::vector<RingElement> units_of_r, ideal_elems;
    if (all_ring_elements) {
        for (const auto& x : r.elements())
            if (!x.is_zero()) units_of_r.push_back(x);
    } else {
        units_of_r.push_back(r.one());
    }
    const bool needs_ideal = spec.family != GroupFamily::Linear && spec.family != GroupFamily::Symplectic;
    if (needs_ideal) {
        if (!spec.ideal) throw std::invalid_argument(family_name(spec.family) + " needs an ideal");
        if (all_ring_elements) {
            for (const auto& x : r.elements())
                if (!x.is_zero() && spec.ideal->contains(x)) ideal_elems.push_back(x);
        } else {
            ideal_elems = additive_generators(*spec.ideal);
        }
    }
    std::vector<SquareMatrix> out;
    switch (spec.family) {
        case GroupFamily::Linear:
        case GroupFamily::Symplectic:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j)
                        for (const auto& x : units_of_r) out.push_back(ge(i, j, x));
            break;
        case GroupFamily::LinearRelative:
        case GroupFamily::SymplecticRelative: {
            auto all = r.elements();
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j)
                        for (const auto& a : all)
                            for (const auto& x : ideal_elems) out.push_back(ge(i, j, a) * ge(j, i, x) * ge(i, j, -a));
            break;
        }
        case GroupFamily::LinearFirstRowCol:
        case GroupFamily::SymplecticFirstRowCol:
            for (int j = 2; j <= n; ++j) {
                for (const auto& a : units_of_r) out.push_back(ge(1, j, a));
                for (const auto& x : ideal_elems) out.push_back(ge(j, 1, x));
            }
            break;
    }
    return out;
}

OrbitPartition orbit_partition(const PackedRows& universe, const std::vector<SquareMatrix>& generators, int threads) {
    const std::int64_t m = universe.modulus;
    const int n = universe.length;
    std::vector<IntMatrix> gens;
    for (const auto& g : generators) {
        if (g.size() != n) throw std::invalid_argument("generator size does not match the row length");
        gens.push_back(to_int_matrix(g));
        gens.push_back(to_int_matrix(inverse_matrix(g)));
    }
    auto pos = position_table(universe);
    const std::size_t U = universe.rows.size();
    constexpr std::uint32_t unset = ~0u;

    OrbitPartition p;
    p.universe = universe;
    p.orbit_of.assign(U, unset);
    p.generator_count = generators.size();
    const int workers = std::max(1, threads);

    // Images of frontier[lo, hi) that are not yet assigned, in frontier-then-generator order.
    auto expand = [&](const std::vector<std::uint32_t>& frontier, std::size_t lo, std::size_t hi,
                      std::vector<std::uint32_t>& found) {
        std::vector<int> buf(static_cast<std::size_t>(n));
        for (std::size_t f = lo; f < hi; ++f) {
            std::uint64_t code = universe.rows[frontier[f]];
            for (const auto& g : gens) {
                std::int32_t q = pos[act(code, g, m, n, buf)];
                if (q < 0) throw std::runtime_error("generator maps a row outside the universe");
                if (p.orbit_of[static_cast<std::size_t>(q)] == unset) found.push_back(static_cast<std::uint32_t>(q));
            }
        }
    };

    for (std::size_t start = 0; start < U; ++start) {
        if (p.orbit_of[start] != unset) continue;
        const auto id = static_cast<std::uint32_t>(p.orbit_rep.size());
        p.orbit_rep.push_back(universe.rows[start]);
        std::uint64_t count = 1;
        p.orbit_of[start] = id;
        std::vector<std::uint32_t> frontier = {static_cast<std::uint32_t>(start)};
        while (!frontier.empty()) {
            p.frontier_sizes.push_back(frontier.size());
            p.multiplications += frontier.size() * gens.size();
            std::vector<std::vector<std::uint32_t>> found(static_cast<std::size_t>(workers));
            if (workers == 1 || frontier.size() < 256) {
                expand(frontier, 0, frontier.size(), found[0]);
            } else {
                std::vector<std::thread> pool;
                std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
                std::size_t chunk = (frontier.size() + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
                for (int w = 0; w < workers; ++w) {
                    std::size_t lo = std::min(frontier.size(), static_cast<std::size_t>(w) * chunk);
                    std::size_t hi = std::min(frontier.size(), lo + chunk);
                    pool.emplace_back([&, w, lo, hi] {
                        try {
                            expand(frontier, lo, hi, found[static_cast<std::size_t>(w)]);
                        } catch (...) {
                            errors[static_cast<std::size_t>(w)] = std::current_exception();
                        }
                    });
                }
                for (auto& t : pool) t.join();
                for (auto& e : errors)
                    if (e) std::rethrow_exception(e);
            }
            std::vector<std::uint32_t> next;
            for (const auto& part : found)
                for (auto q : part)
                    if (p.orbit_of[q] == unset) {
                        p.orbit_of[q] = id;
                        next.push_back(q);
                        ++count;
                    }
            std::sort(next.begin(), next.end());
            frontier = std::move(next);
        }
        p.orbit_size.push_back(count);
    }
    return p;
}

bool spot_check_closed(const OrbitPartition& p, const std::vector<SquareMatrix>& generators, int pairs,
                       std::uint64_t seed) {
    if (generators.empty() || p.universe.rows.empty()) return true;
    auto pos = position_table(p.universe);
    std::vector<IntMatrix> gens;
    for (const auto& g : generators) gens.push_back(to_int_matrix(g));
    std::mt19937_64 rng(seed);
    std::vector<int> buf(static_cast<std::size_t>(p.universe.length));
    for (int s = 0; s < pairs; ++s) {
        std::size_t k = bounded_draw(rng, p.universe.rows.size());
        const auto& g = gens[bounded_draw(rng, gens.size())];
        std::int32_t q = pos[act(p.universe.rows[k], g, p.universe.modulus, p.universe.length, buf)];
        if (q < 0 || p.orbit_of[static_cast<std::size_t>(q)] != p.orbit_of[k]) return false;
    }
    return true;
}

OrbitEqualityReport check_orbit_equality(const Ring& r, int size, const std::optional<Ideal>& I, int threads) {
    if (size < 4 || size % 2) throw std::invalid_argument("orbit equality needs even size >= 4");
    const bool rel = I && I->is_proper();
    auto universe = enumerate_unimodular(r, size, I);
    GroupSpec lin{rel ? GroupFamily::LinearRelative : GroupFamily::Linear, size, r, I};
    GroupSpec sp{rel ? GroupFamily::SymplecticRelative : GroupFamily::Symplectic, size, r, I};
    auto a = orbit_partition(universe, generators_for(lin), threads);
    auto b = orbit_partition(universe, generators_for(sp), threads);
    OrbitEqualityReport rep;
    rep.universe_size = universe.rows.size();
    rep.linear_orbits = a.orbit_count();
    rep.symplectic_orbits = b.orbit_count();
    rep.linear_sizes = a.orbit_size;
    rep.symplectic_sizes = b.orbit_size;
    rep.equal = a.orbit_of == b.orbit_of;
    return rep;
}

TransitivityReport check_dim0_transitivity(const Ring& r, int n, const std::optional<Ideal>& I, int threads) {
    if (n < 2) throw std::invalid_argument("transitivity needs n >= 2");
    const bool rel = I && I->is_proper();
    auto universe = enumerate_unimodular(r, n);
    GroupSpec spec{rel ? GroupFamily::LinearRelative : GroupFamily::Linear, n, r, I};
    auto p = orbit_partition(universe, generators_for(spec), threads);
    const std::int64_t m = r.modulus();
    const std::int64_t d = rel ? ideal_modulus(*I) : 1;
    std::unordered_map<std::uint64_t, std::uint32_t> class_orbit;
    std::vector<std::int64_t> orbit_class(p.orbit_count(), -1);
    TransitivityReport rep;
    rep.universe_size = universe.rows.size();
    rep.orbit_count = p.orbit_count();
    rep.classes_match = true;
    std::vector<int> e1(static_cast<std::size_t>(n), 0);
    e1[0] = 1;
    const std::uint64_t e1_class = pack_row(e1, d);
    std::int64_t e1_orbit = -1;
    rep.relative_single_orbit = true;
    for (std::size_t k = 0; k < universe.rows.size(); ++k) {
        auto v = unpack_row(universe.rows[k], m, n);
        for (auto& x : v) x %= static_cast<int>(d);
        std::uint64_t cls = pack_row(v, d);
        std::uint32_t o = p.orbit_of[k];
        auto [it, fresh] = class_orbit.emplace(cls, o);
        if (!fresh && it->second != o) rep.classes_match = false;
        if (orbit_class[o] == -1) orbit_class[o] = static_cast<std::int64_t>(cls);
        else if (orbit_class[o] != static_cast<std::int64_t>(cls)) rep.classes_match = false;
        if (cls == e1_class) {
            ++rep.relative_rows;
            if (e1_orbit == -1) e1_orbit = o;
            else if (e1_orbit != o) rep.relative_single_orbit = false;
        }
    }
    rep.congruence_classes = class_orbit.size();
    return rep;
}

// ---------------------------------------------------------------- closures

std::string MatrixSet::key(const SquareMatrix& g) const {
    if (g.size() != n_) throw std::invalid_argument("matrix size does not match the set");
    std::string k;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) k.push_back(static_cast<char>(to_int(g.at(i, j))));
    return k;
}

bool MatrixSet::contains(const SquareMatrix& g) const { return contains_key(key(g)); }

bool MatrixSet::insert_key(const std::string& k) {
    auto [it, fresh] = index_.emplace(k, elems_.size());
    if (fresh) elems_.push_back(k);
    return fresh;
}

namespace {

std::string key_product(const std::string& a, const IntMatrix& g, std::int64_t m) {
    const int n = g.n;
    std::string out(a.size(), '\0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < n; ++k)
                s += static_cast<unsigned char>(a[static_cast<std::size_t>(i * n + k)]) * g.at(k, j);
            out[static_cast<std::size_t>(i * n + j)] = static_cast<char>(s % m);
        }
    return out;
}

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b, std::int64_t m) {
    IntMatrix c{a.n, std::vector<std::int64_t>(a.e.size(), 0)};
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < a.n; ++k) s += a.at(i, k) * b.at(k, j);
            c.e[static_cast<std::size_t>(i * a.n + j)] = s % m;
        }
    return c;
}

std::string int_key(const IntMatrix& g) {
    std::string k;
    for (auto x : g.e) k.push_back(static_cast<char>(x));
    return k;
}

// Closure of the identity under right multiplication; false when the cap is reached.
bool close_under(MatrixSet& set, const std::vector<IntMatrix>& gens, std::uint64_t cap) {
    const std::int64_t m = set.modulus();
    for (std::size_t k = 0; k < set.size(); ++k) {
        std::string cur = set.keys()[k];
        for (const auto& g : gens) {
            if (set.insert_key(key_product(cur, g, m)) && set.size() > cap) return false;
        }
    }
    return true;
}

}  // namespace

ClosureResult subgroup_closure(const std::vector<SquareMatrix>& generators, const std::vector<SquareMatrix>& conjugators,
                               std::uint64_t cap) {
    if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
    const Ring& r = generators.front().ring();
    require_finite(r);
    const std::int64_t m = r.modulus();
    if (m > 255) throw std::invalid_argument("closure keys need modulus <= 255");
    const int n = generators.front().size();
    std::vector<IntMatrix> gens;
    for (const auto& g : generators) gens.push_back(to_int_matrix(g));
    std::vector<std::pair<IntMatrix, IntMatrix>> conj;
    for (const auto& c : conjugators) conj.emplace_back(to_int_matrix(c), to_int_matrix(inverse_matrix(c)));
    std::string id = MatrixSet(m, n).key(SquareMatrix::identity(r, n));
    while (true) {
        MatrixSet set(m, n);
        set.insert_key(id);
        if (!close_under(set, gens, cap)) return {std::move(set), false};
        bool grew = false;
        std::size_t before = gens.size();
        for (const auto& [c, ci] : conj)
            for (std::size_t k = 0; k < before; ++k) {
                IntMatrix h = int_product(int_product(c, gens[k], m), ci, m);
                std::string hk = int_key(h);
                if (!set.contains_key(hk)) {
                    set.insert_key(hk);  // avoid adding the same new generator twice
                    gens.push_back(h);
                    grew = true;
                }
            }
        if (!grew) return {std::move(set), true};
    }
}

// ---------------------------------------------------------------- statistical membership tests

MembershipReport kernel_membership_test(const Ring& r, int size, const Ideal& I, int samples, std::uint64_t seed,
                                        int threads, std::uint64_t cap) {
    require_finite(r);
    if (size < 4 || size % 2) throw std::invalid_argument("symplectic size must be even and >= 4");
    const int n = size / 2;
    std::vector<SquareMatrix> small, conj;
    auto xs = additive_generators(I);
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) {
            if (i == j) continue;
            for (const auto& x : xs) small.push_back(elem_symplectic(r, n, i, j, x));
            conj.push_back(elem_symplectic(r, n, i, j, r.one()));
        }
    if (small.empty()) small.push_back(SquareMatrix::identity(r, size));
    auto closure = subgroup_closure(small, conj, cap);
    if (!closure.complete) throw std::length_error("closure cap exceeded at " + std::to_string(closure.elements.size()));

    MembershipReport rep;
    rep.samples = samples;
    rep.group_order = closure.elements.size();
    const std::int64_t d = ideal_modulus(I);
    std::mt19937_64 rng(seed);
    std::vector<SquareMatrix> words;
    for (int s = 0; s < samples; ++s) {
        GeneratorWord w(r, size);
        w.tag = WordClass::FirstRowCol;
        w.ideal = I;
        std::vector<GeneratorAtom> row_part;
        int len = 1 + static_cast<int>(bounded_draw(rng, 8));
        for (int t = 0; t < len; ++t) {
            int j = 2 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(size - 1)));
            if (bounded_draw(rng, 2) == 0) {
                auto a = symplectic_atom(1, j, r.from_int(static_cast<std::int64_t>(bounded_draw(rng, static_cast<std::uint64_t>(r.modulus())))));
                w.push(a);
                row_part.push_back(a);
            } else {
                auto x = r.from_int(d * static_cast<std::int64_t>(bounded_draw(rng, static_cast<std::uint64_t>(r.modulus()))));
                w.push(symplectic_atom(j, 1, x));
            }
        }
        // First-column arguments vanish mod I, so undoing the first-row part makes the word ≡ 1 mod I.
        for (auto it = row_part.rbegin(); it != row_part.rend(); ++it) w.push(it->inverse());
        validate_tag(w);
        words.push_back(eval_word(w));
    }
    std::vector<char> member(words.size(), 0), congruent(words.size(), 0);
    auto check = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            bool ok = true;
            for (int i = 1; i <= size && ok; ++i)
                for (int j = 1; j <= size && ok; ++j)
                    ok = I.contains(words[k].at(i, j) - (i == j ? r.one() : r.zero()));
            congruent[k] = ok;
            member[k] = ok && closure.elements.contains(words[k]);
        }
    };
    const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1) {
        check(0, words.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (words.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t lo = std::min(words.size(), w * chunk), hi = std::min(words.size(), lo + chunk);
            pool.emplace_back(check, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    for (std::size_t k = 0; k < words.size(); ++k) {
        rep.tested += congruent[k];
        rep.members += member[k];
    }
    return rep;
}

MembershipReport square_ideal_inclusion_test(const Ring& r, int size, const Ideal& I, int samples, std::uint64_t seed,
                                             std::uint64_t cap) {
    require_finite(r);
    if (size < 4 || size % 2) throw std::invalid_argument("symplectic size must be even and >= 4");
    const int n = size / 2;
    std::vector<SquareMatrix> small;
    auto xs = additive_generators(I);
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j)
            if (i != j)
                for (const auto& x : xs) small.push_back(elem_symplectic(r, n, i, j, x));
    if (small.empty()) small.push_back(SquareMatrix::identity(r, size));
    auto closure = subgroup_closure(small, {}, cap);
    if (!closure.complete) throw std::length_error("closure cap exceeded at " + std::to_string(closure.elements.size()));

    MembershipReport rep;
    rep.samples = samples;
    rep.group_order = closure.elements.size();
    const std::int64_t d = ideal_modulus(I);
    const auto m = static_cast<std::uint64_t>(r.modulus());
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        int i = 1 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(size)));
        int j = 1 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(size - 1)));
        if (j >= i) ++j;
        auto [k, l] = (s % 2 == 0) ? std::pair{j, i} : std::pair{sigma(i), sigma(j)};
        if (k == l) std::tie(k, l) = std::pair{j, i};
        RingElement z = r.from_int(static_cast<std::int64_t>(bounded_draw(rng, m)));
        RingElement a = r.from_int(d * static_cast<std::int64_t>(bounded_draw(rng, m)));
        RingElement b = r.from_int(d * static_cast<std::int64_t>(bounded_draw(rng, m)));
        SquareMatrix g = elem_symplectic(r, n, k, l, z) * elem_symplectic(r, n, i, j, a * b) *
                         elem_symplectic(r, n, k, l, -z);
        ++rep.tested;
        if (closure.elements.contains(g)) ++rep.members;
        auto f = conjugate_square_ideal(n, i, j, k, l, z, {a}, {b}, I);
        ++rep.factorizations_checked;
        if (f.ok() && eval_word(f.rhs) == g && closure.elements.contains(eval_word(f.rhs))) ++rep.factorizations_ok;
    }
    return rep;
}

}  // namespace transvect
