#include <stdexcept>

#include "transvect/identity.hpp"

namespace transvect {

namespace {

using Atoms = std::vector<GeneratorAtom>;

Atoms inv(const Atoms& w) {
    Atoms out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse().normalized());
    return out;
}

void append(Atoms& dst, const Atoms& src) { dst.insert(dst.end(), src.begin(), src.end()); }

// α g α^-1 = [α, g] g with the commutator read as commuting root elements.
Atoms conjugate_atom(int size, const GeneratorAtom& alpha, const GeneratorAtom& g) {
    SquareMatrix a = atom_matrix(alpha, size), ai = atom_matrix(alpha.inverse(), size);
    SquareMatrix x = atom_matrix(g, size), xi = atom_matrix(g.inverse(), size);
    auto c = read_root_elements(a * x * ai * xi);
    if (!c) throw std::logic_error("commutator is not a product of root elements");
    Atoms out = *c;
    out.push_back(g.normalized());
    return out;
}

Atoms commutator(const Atoms& g, const Atoms& h) {
    Atoms out = g;
    append(out, h);
    append(out, inv(g));
    append(out, inv(h));
    return out;
}

}  // namespace

SquareMatrix substitute_matrix(const SquareMatrix& m, int var, const RingElement& value) {
    return m.map(m.ring(), [&](const RingElement& e) { return e.substitute(var, value); });
}

FormChangeReport form_change_conjugate(const Row& q, const RingElement& alpha, const RingElement& beta,
                                       const GeneratorWord& eps, const AlternatingForm& phi_star,
                                       const std::optional<Ideal>& I) {
    const Ring& r = phi_star.matrix().ring();
    const int n2 = phi_star.matrix().size();
    if (eps.size != n2 - 1) throw std::invalid_argument("ε must have size one less than the form");
    if (static_cast<int>(q.size()) != n2) throw std::invalid_argument("q must have the length of the form");
    SquareMatrix one = SquareMatrix::identity(r, 1);
    SquareMatrix E = direct_sum(one, eval_word(eps));
    SquareMatrix Einv = direct_sum(one, eval_word(eps.inverse()));
    AlternatingForm phi(E.transpose() * phi_star.matrix() * E);

    SquareMatrix W = direct_sum(SquareMatrix::identity(r, 2), E);
    SquareMatrix Winv = direct_sum(SquareMatrix::identity(r, 2), Einv);
    Row qt = row_times(q, Einv.transpose());

    FormChangeReport rep;
    rep.rho_holds = Winv * rho_matrix(q, alpha, phi_star) * W == rho_matrix(qt, alpha, phi);
    rep.mu_holds = Winv * mu_matrix(q, beta, phi_star) * W == mu_matrix(qt, beta, phi);

    // Bass transvection with u = q, v = β q, which satisfies u φ v^t = 0.
    Row u = q, v;
    for (const auto& x : q) v.push_back(beta * x);
    Row ut = row_times(u, E.transpose()), vt = row_times(v, E.transpose());
    rep.bass_holds = bass_symplectic_transvection(u, v, alpha, phi) ==
                     Einv * bass_symplectic_transvection(ut, vt, alpha, phi_star) * E;
    if (I) {
        for (int k = 0; k < n2; ++k)
            if (!I->contains(qt[static_cast<std::size_t>(k)] - q[static_cast<std::size_t>(k)])) rep.q_congruent = false;
    }
    return rep;
}

SquareIdealResult conjugate_square_ideal(int n, int i, int j, int k, int l, const RingElement& z,
                                         const std::vector<RingElement>& a, const std::vector<RingElement>& b,
                                         const Ideal& I) {
    const int size = 2 * n;
    auto bad = [&](int x) { return x < 1 || x > size; };
    if (n < 2 || bad(i) || bad(j) || bad(k) || bad(l) || i == j || k == l)
        throw std::invalid_argument("index out of range or repeated");
    if (a.size() != b.size()) throw std::invalid_argument("a and b must have equal length");
    for (std::size_t t = 0; t < a.size(); ++t)
        if (!I.contains(a[t]) || !I.contains(b[t])) throw std::invalid_argument("a_t and b_t must lie in I");
    const Ring& r = I.ring();
    const RingElement half = r.inverse_of_two();
    const RingElement sgn = ((i + j) % 2) ? -r.one() : r.one();

    GeneratorAtom alpha = symplectic_atom(k, l, z);
    SquareIdealResult res;
    res.lhs = GeneratorWord(r, size);
    res.lhs.push(alpha);
    for (std::size_t t = 0; t < a.size(); ++t) res.lhs.push(symplectic_atom(i, j, a[t] * b[t]));
    res.lhs.push(alpha.inverse());
    res.rhs = GeneratorWord(r, size);
    res.rhs.tag = WordClass::Relative;
    res.rhs.ideal = I;

    bool opposite = opposite_roots(alpha, symplectic_atom(i, j, r.one()));
    Atoms out;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const RingElement& at = a[t];
        const RingElement& bt = b[t];
        if (!opposite) {
            append(out, conjugate_atom(size, alpha, symplectic_atom(i, j, at * bt)));
        } else if (j == sigma(i)) {
            // Long root: se_{iσ(i)}(ab) = [se_im(a/2), se_{mσ(i)}(b)] with m ∉ {i, σ(i)}.
            int m = (i <= 2) ? 3 : 1;
            Atoms g = conjugate_atom(size, alpha, symplectic_atom(i, m, at * half));
            Atoms h = conjugate_atom(size, alpha, symplectic_atom(m, sigma(i), bt));
            append(out, commutator(g, h));
        } else {
            // se_ij(ab) = [se_{σ(i)j}(b), se_{iσ(i)}(-a)] se_{σ(j)j}(-(-1)^{i+j} a b^2)
            Atoms g = conjugate_atom(size, alpha, symplectic_atom(sigma(i), j, bt));
            Atoms h = conjugate_atom(size, alpha, symplectic_atom(i, sigma(i), -at));
            append(out, commutator(g, h));
            append(out, conjugate_atom(size, alpha, symplectic_atom(sigma(j), j, -sgn * at * bt * bt)));
        }
    }
    res.rhs.atoms = out;
    res.certificate = eval_word(res.lhs) == eval_word(res.rhs);
    res.arguments_in_ideal = true;
    for (const auto& x : out)
        if (!I.contains(x.effective_arg())) res.arguments_in_ideal = false;
    return res;
}

std::vector<SquareMatrix> splice_telescoping(const SquareMatrix& alpha, int xvar, const std::vector<RingElement>& c,
                                             const std::vector<RingElement>& b) {
    const Ring& r = alpha.ring();
    if (c.empty() || c.size() != b.size()) throw std::invalid_argument("c and b must be nonempty and of equal length");
    RingElement total = r.zero();
    for (std::size_t t = 0; t < c.size(); ++t) total += c[t] * b[t];
    if (!total.is_one()) throw std::invalid_argument("sum of c_i b_i is not 1");
    if (!substitute_matrix(alpha, xvar, r.zero()).is_identity()) throw std::invalid_argument("alpha(0) is not the identity");
    RingElement x = r.var(r.vars().at(static_cast<std::size_t>(xvar)));
    std::vector<RingElement> tail(c.size() + 1, r.zero());
    for (std::size_t t = c.size(); t-- > 0;) tail[t] = tail[t + 1] + c[t] * b[t];
    std::vector<SquareMatrix> out;
    SquareMatrix prev = alpha;  // α(tail[0] X) = α(X)
    for (std::size_t t = 0; t < c.size(); ++t) {
        SquareMatrix next = substitute_matrix(alpha, xvar, tail[t + 1] * x);
        out.push_back(prev * inverse_matrix(next));
        prev = next;
    }
    return out;
}

std::optional<int> find_dilation_exponent(const SquareMatrix& alpha, const SquareMatrix& beta, int xvar,
                                          const RingElement& a, int bound) {
    const Ring& r = alpha.ring();
    if (substitute_matrix(alpha, xvar, r.zero()) != substitute_matrix(beta, xvar, r.zero()))
        throw std::invalid_argument("alpha(0) differs from beta(0)");
    RingElement x = r.var(r.vars().at(static_cast<std::size_t>(xvar)));
    RingElement s = r.one();
    for (int N = 0; N <= bound; ++N) {
        if (substitute_matrix(alpha, xvar, s * x) == substitute_matrix(beta, xvar, s * x)) return N;
        s *= a;
    }
    return std::nullopt;
}

}  // namespace transvect

namespace transvect {

namespace {

Row random_row(const Ring& r, int len, std::mt19937_64& rng) {
    Row v;
    for (int k = 0; k < len; ++k) v.push_back(sample_element(r, rng));
    return v;
}

RingElement pairing(const Row& x, const SquareMatrix& phi, const Row& y) {
    Row xp = row_times(x, phi);
    RingElement s = phi.ring().zero();
    for (std::size_t k = 0; k < y.size(); ++k) s += xp[k] * y[k];
    return s;
}

}  // namespace

DecompositionReport check_decompositions(const Ring& ring, int n, int samples, std::uint64_t seed) {
    auto psi = standard_form(n, ring);
    DecompositionReport rep;
    auto one = [&](const Row& q, const RingElement& al, const RingElement& be) {
        ++rep.tested;
        if (eval_word(decompose_rho(q, al)) == rho_matrix(q, al, psi)) ++rep.rho_exact;
        if (eval_word(decompose_mu(q, be)) == mu_matrix(q, be, psi)) ++rep.mu_exact;
    };
    if (ring.is_polynomial()) {
        Row q;
        for (int k = 1; k <= 2 * n; ++k) q.push_back(ring.var("q" + std::to_string(k)));
        one(q, ring.var("al"), ring.var("be"));
        return rep;
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Row q = random_row(ring, 2 * n, rng);
        RingElement al = sample_element(ring, rng), be = sample_element(ring, rng);
        one(q, al, be);
    }
    return rep;
}

TransvectionReport check_bass_correspondence(const Ring& ring, int n, int samples, std::uint64_t seed,
                                             bool transposed) {
    auto phi = standard_form(n, ring);
    SquareMatrix Q = direct_sum(standard_form(1, ring).matrix(), phi.matrix());
    AlternatingForm form(Q);
    const int size = 2 * n + 2;
    std::mt19937_64 rng(seed);
    TransvectionReport rep;
    for (int s = 0; s < samples; ++s) {
        Row q = random_row(ring, 2 * n, rng);
        RingElement al = sample_element(ring, rng);
        Row x = random_row(ring, size, rng);
        RingElement a = x[0], b = x[1];
        Row p(x.begin() + 2, x.end());
        RingElement pq = transposed ? pairing(q, phi.matrix(), p) : pairing(p, phi.matrix(), q);

        Row u1(static_cast<std::size_t>(size), ring.zero()), u2 = u1, v(static_cast<std::size_t>(size), ring.zero());
        u1[1] = ring.one();
        u2[0] = -ring.one();
        for (int k = 0; k < 2 * n; ++k) v[static_cast<std::size_t>(k + 2)] = q[static_cast<std::size_t>(k)];

        auto apply = [&](const SquareMatrix& m) {
            Row out;
            for (int i = 1; i <= size; ++i) {
                RingElement t = ring.zero();
                for (int j = 1; j <= size; ++j) t += m.at(i, j) * x[static_cast<std::size_t>(j - 1)];
                out.push_back(t);
            }
            return out;
        };
        Row first = {a, b - pq + al * a}, second = {a + pq - al * b, b};
        for (int k = 0; k < 2 * n; ++k) {
            first.push_back(p[static_cast<std::size_t>(k)] + a * q[static_cast<std::size_t>(k)]);
            second.push_back(p[static_cast<std::size_t>(k)] + b * q[static_cast<std::size_t>(k)]);
        }
        ++rep.tested;
        if (apply(bass_symplectic_transvection(u1, v, al, form)) == first) ++rep.first_match;
        if (apply(bass_symplectic_transvection(u2, v, al, form)) == second) ++rep.second_match;
    }
    return rep;
}

}  // namespace transvect
