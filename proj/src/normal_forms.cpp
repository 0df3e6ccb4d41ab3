#include <future>
#include <stdexcept>

#include "transvect/normal_forms.hpp"

namespace transvect {

namespace {

bool is_prime_power(std::int64_t m, std::int64_t& p) {
    if (m < 2) return false;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            p = d;
            while (m % d == 0) m /= d;
            return m == 1;
        }
    p = m;
    return true;
}

bool relative(const std::optional<Ideal>& I) { return I && I->is_proper(); }

// Records column operations as a relative or plain word of the given size.
struct OpWord {
    GeneratorWord w;
    bool rel = false;

    OpWord(const Ring& r, int size, const std::optional<Ideal>& I) : w(r, size), rel(relative(I)) {
        if (rel) {
            w.tag = WordClass::Relative;
            w.ideal = I;
        }
    }
    // E_ij(x) with x in I when relative.
    void small(int i, int j, const RingElement& x) {
        if (x.is_zero()) return;
        if (rel) w.append(relative_generator(Family::Linear, w.size, j, i, x.ring().zero(), x, *w.ideal));
        else w.push(linear_atom(i, j, x));
    }
    // E_ji(a) E_ij(x) E_ji(-a), relative triple.
    void triple(int i, int j, const RingElement& a, const RingElement& x) {
        w.append(relative_generator(Family::Linear, w.size, j, i, a, x, *w.ideal));
    }
};

void apply_ops_to_row(Row& v, const GeneratorWord& w) {
    for (const auto& a : w.atoms) {
        RingElement z = a.effective_arg();
        v[static_cast<std::size_t>(a.j - 1)] += z * v[static_cast<std::size_t>(a.i - 1)];
    }
}

// Column operations g with v·g = e_1.
GeneratorWord clearing_ops(Row v, const LocalRingWitness& L, const std::optional<Ideal>& I) {
    const Ring& r = L.ring();
    const int n = static_cast<int>(v.size());
    OpWord ops(r, n, I);
    auto at = [&](int k) -> RingElement& { return v[static_cast<std::size_t>(k - 1)]; };
    if (ops.rel) {
        const Ideal& J = *I;
        if (!J.contains(at(1) - r.one())) throw std::invalid_argument("row is not congruent to e_1 modulo the ideal");
        for (int k = 2; k <= n; ++k)
            if (!J.contains(at(k))) throw std::invalid_argument("row is not congruent to e_1 modulo the ideal");
        RingElement u = at(1), uinv = u.inverse();
        for (int k = 2; k <= n; ++k) {
            RingElement x = -at(k) * uinv;
            ops.small(1, k, x);
            at(k) = r.zero();
        }
        if (!u.is_one()) {
            if (n < 2) throw std::invalid_argument("length-1 row with non-unit residue");
            RingElement t = u - r.one();
            // (u,0) E_21(1) E_12(t/u) E_21(-1) = (1, t), then E_12(-t).
            ops.triple(1, 2, r.one(), t * uinv);
            ops.small(1, 2, -t);
        }
        return ops.w;
    }
    int piv = 0;
    for (int k = 1; k <= n; ++k)
        if (at(k).is_unit()) {
            piv = k;
            break;
        }
    if (piv == 0) throw std::invalid_argument("row is not unimodular");
    if (!at(1).is_one()) {
        int other = 0;
        for (int k = 2; k <= n && !other; ++k)
            if (at(k).is_unit()) other = k;
        if (!other) {
            if (n < 2) throw std::invalid_argument("length-1 row is not e_1");
            // Only v_1 is a unit: make v_2 = 1 first.
            RingElement c = (r.one() - at(2)) * at(1).inverse();
            ops.small(1, 2, c);
            at(2) = r.one();
            other = 2;
        }
        RingElement c = (r.one() - at(1)) * at(other).inverse();
        ops.small(other, 1, c);
        at(1) = r.one();
    }
    for (int k = 2; k <= n; ++k) {
        ops.small(1, k, -at(k));
        at(k) = r.zero();
    }
    return ops.w;
}

GeneratorWord shifted(const GeneratorWord& w, int size, int by) {
    GeneratorWord out(w.ring, size);
    out.tag = w.tag;
    out.ideal = w.ideal;
    for (auto a : w.atoms) {
        a.i += by;
        a.j += by;
        out.push(a);
    }
    return out;
}

// φ := E^t φ E for E = E_ij(z).
void congruence(SquareMatrix& phi, const GeneratorAtom& a) {
    const int n = phi.size();
    RingElement z = a.effective_arg();
    for (int k = 1; k <= n; ++k) phi.at(k, a.j) += z * phi.at(k, a.i);
    for (int k = 1; k <= n; ++k) phi.at(a.j, k) += z * phi.at(a.i, k);
}

}  // namespace

LocalRingWitness::LocalRingWitness(const Ring& r) : ring_(r), max_(Ideal::zero(r)) {
    if (r.is_polynomial() || r.kind() == BaseKind::Dyadic) throw std::invalid_argument("local witness needs GF(p) or Z/p^k");
    std::int64_t p = 0;
    if (!is_prime_power(r.modulus(), p)) throw std::invalid_argument(r.to_string() + " is not local");
    if (p == 2) throw std::invalid_argument("even characteristic is excluded");
    p_ = p;
    max_ = Ideal::principal(r, r.from_int(p));
}

GeneratorWord complete_unimodular_local(const Row& v, const LocalRingWitness& L, const std::optional<Ideal>& I) {
    if (v.empty()) throw std::invalid_argument("empty row");
    GeneratorWord g = clearing_ops(v, L, I);
    Row check = v;
    apply_ops_to_row(check, g);
    for (std::size_t k = 0; k < check.size(); ++k)
        if (!(k == 0 ? check[k].is_one() : check[k].is_zero())) throw std::logic_error("unimodular completion failed");
    return g.inverse();
}

GeneratorWord reduce_alternating_local(const AlternatingForm& phi, const LocalRingWitness& L,
                                       const std::optional<Ideal>& I) {
    const Ring& r = L.ring();
    const int size = phi.matrix().size();
    if (!pfaffian(phi).is_one()) throw std::invalid_argument("Pfaffian is not 1");
    const bool rel = relative(I);
    if (rel) {
        auto psi = standard_form(size / 2, r).matrix();
        for (int i = 1; i <= size; ++i)
            for (int j = 1; j <= size; ++j)
                if (!I->contains(phi.matrix().at(i, j) - psi.at(i, j)))
                    throw std::invalid_argument("form is not congruent to the standard form modulo the ideal");
    }
    SquareMatrix m = phi.matrix();
    OpWord ops(r, size, I);  // column operations on the full index range
    for (int top = 1; top + 1 <= size; top += 2) {
        // Row `top` restricted to indices top+1..size becomes e_1 there.
        Row w;
        for (int k = top + 1; k <= size; ++k) w.push_back(m.at(top, k));
        GeneratorWord g = shifted(clearing_ops(w, L, I), size, top);
        for (const auto& a : g.atoms) congruence(m, a);
        ops.w.append(g);
        const int rest = size - top - 1;
        if (rest == 0) break;
        // Clear row top+1 beyond the block with E_{j,top+1}(λ_j), λ = -row·φ''^{-1}.
        SquareMatrix inner(r, rest);
        for (int i = 1; i <= rest; ++i)
            for (int j = 1; j <= rest; ++j) inner.at(i, j) = m.at(top + 1 + i, top + 1 + j);
        SquareMatrix inv = inverse_matrix(inner);
        Row row;
        for (int k = 1; k <= rest; ++k) row.push_back(-m.at(top + 1, top + 1 + k));
        Row lam = row_times(row, inv);
        OpWord clear(r, size, I);
        for (int k = 1; k <= rest; ++k) clear.small(top + 1 + k, top + 1, lam[static_cast<std::size_t>(k - 1)]);
        for (const auto& a : clear.w.atoms) congruence(m, a);
        ops.w.append(clear.w);
    }
    if (m != standard_form(size / 2, r).matrix()) throw std::logic_error("form reduction did not reach the standard form");
    // G = product of the operations with G^t φ G = ψ; ε = G^{-1} on indices 2..size.
    GeneratorWord eps = shifted(ops.w.inverse(), size - 1, -1);
    return eps;
}

bool verify_form_reduction(const AlternatingForm& phi, const GeneratorWord& eps) {
    const Ring& r = phi.matrix().ring();
    SquareMatrix E = direct_sum(SquareMatrix::identity(r, 1), eval_word(eps));
    return E.transpose() * standard_form(phi.half_size(), r).matrix() * E == phi.matrix();
}

std::map<std::int64_t, LocalFactorReduction> reduce_alternating_semilocal(const AlternatingForm& phi,
                                                                          const std::optional<Ideal>& I, int threads) {
    const Ring& r = phi.matrix().ring();
    if (r.is_polynomial() || r.kind() == BaseKind::Dyadic) throw std::invalid_argument("semilocal reduction needs Z/m");
    auto primes = prime_divisors(r.modulus());
    auto one = [&](std::int64_t p) {
        Localization loc = localize_at_prime(r, p);
        SquareMatrix m = phi.matrix().map(loc.local, [&](const RingElement& x) { return loc.map(x); });
        AlternatingForm f(m);
        std::optional<Ideal> J;
        if (I) {
            switch (I->shape()) {
                case Ideal::Shape::Zero: J = Ideal::zero(loc.local); break;
                case Ideal::Shape::Full: J = Ideal::full(loc.local); break;
                default: J = Ideal::principal(loc.local, loc.map(I->generator())); break;
            }
        }
        LocalFactorReduction out{loc.local, reduce_alternating_local(f, LocalRingWitness(loc.local), J), false};
        out.verified = verify_form_reduction(f, out.epsilon);
        return out;
    };
    std::map<std::int64_t, LocalFactorReduction> res;
    if (threads <= 1) {
        for (auto p : primes) res.emplace(p, one(p));
        return res;
    }
    std::vector<std::future<LocalFactorReduction>> futs;
    for (auto p : primes) futs.push_back(std::async(std::launch::async, one, p));
    for (std::size_t k = 0; k < primes.size(); ++k) res.emplace(primes[k], futs[k].get());
    return res;
}

}  // namespace transvect
