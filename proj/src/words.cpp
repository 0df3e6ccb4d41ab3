#include "transvect/words.hpp"

#include <sstream>
#include <stdexcept>

namespace transvect {

int sigma(int i) {
    if (i < 1) throw std::invalid_argument("sigma needs a positive index");
    return (i % 2 == 0) ? i - 1 : i + 1;
}

GeneratorAtom linear_atom(int i, int j, RingElement arg) { return GeneratorAtom{Family::Linear, i, j, std::move(arg), false}; }

GeneratorAtom symplectic_atom(int i, int j, RingElement arg) {
    return GeneratorAtom{Family::Symplectic, i, j, std::move(arg), false};
}

GeneratorAtom GeneratorAtom::inverse() const {
    GeneratorAtom a = *this;
    a.inverted = !inverted;
    return a.normalized();
}

GeneratorAtom GeneratorAtom::normalized() const {
    GeneratorAtom a = *this;
    a.arg = effective_arg();
    a.inverted = false;
    return a;
}

std::string GeneratorAtom::to_string() const {
    std::ostringstream os;
    os << (family == Family::Linear ? "E" : "se") << "_" << i << "," << j << "(" << effective_arg().to_string() << ")";
    return os.str();
}

GeneratorWord GeneratorWord::inverse() const {
    GeneratorWord w = *this;
    w.atoms.clear();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) w.atoms.push_back(it->inverse());
    return w;
}

GeneratorWord& GeneratorWord::append(const GeneratorWord& other) {
    if (other.size != size) throw std::invalid_argument("word size mismatch");
    for (const auto& a : other.atoms) atoms.push_back(a);
    return *this;
}

GeneratorWord& GeneratorWord::push(GeneratorAtom a) {
    atoms.push_back(std::move(a));
    return *this;
}

std::string GeneratorWord::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < atoms.size(); ++k) s += (k ? " " : "") + atoms[k].to_string();
    return s.empty() ? "1" : s;
}

void check_atom(const GeneratorAtom& a, int size) {
    if (a.i == a.j) throw std::invalid_argument("generator needs i != j");
    if (a.i < 1 || a.j < 1 || a.i > size || a.j > size)
        throw std::invalid_argument("generator index out of range for size " + std::to_string(size));
    if (a.family == Family::Symplectic && size % 2 != 0) throw std::invalid_argument("symplectic generators need even size");
}

namespace {

// Second entry of a symplectic generator: position (σ(j), σ(i)) with
// coefficient -(-1)^{i+j} z; absent when i = σ(j).
bool symplectic_partner(const GeneratorAtom& a, int& k, int& l, RingElement& w) {
    if (a.i == sigma(a.j)) return false;
    k = sigma(a.j);
    l = sigma(a.i);
    RingElement z = a.effective_arg();
    w = ((a.i + a.j) % 2 == 0) ? -z : z;
    return true;
}

}  // namespace

void apply_right(SquareMatrix& m, const GeneratorAtom& a) {
    check_atom(a, m.size());
    RingElement z = a.effective_arg();
    if (z.is_zero()) return;
    const int n = m.size();
    for (int r = 1; r <= n; ++r)
        if (!m.at(r, a.i).is_zero()) m.at(r, a.j) += m.at(r, a.i) * z;
    if (a.family == Family::Symplectic) {
        int k, l;
        RingElement w;
        if (symplectic_partner(a, k, l, w))
            for (int r = 1; r <= n; ++r)
                if (!m.at(r, k).is_zero()) m.at(r, l) += m.at(r, k) * w;
    }
}

void apply_left(const GeneratorAtom& a, SquareMatrix& m) {
    check_atom(a, m.size());
    RingElement z = a.effective_arg();
    if (z.is_zero()) return;
    const int n = m.size();
    for (int c = 1; c <= n; ++c)
        if (!m.at(a.j, c).is_zero()) m.at(a.i, c) += z * m.at(a.j, c);
    if (a.family == Family::Symplectic) {
        int k, l;
        RingElement w;
        if (symplectic_partner(a, k, l, w))
            for (int c = 1; c <= n; ++c)
                if (!m.at(l, c).is_zero()) m.at(k, c) += w * m.at(l, c);
    }
}

SquareMatrix atom_matrix(const GeneratorAtom& a, int size) {
    SquareMatrix m = SquareMatrix::identity(a.arg.ring(), size);
    apply_right(m, a);
    return m;
}

SquareMatrix elem_linear(const Ring& r, int n, int i, int j, const RingElement& lambda) {
    return atom_matrix(linear_atom(i, j, lambda.valid() ? lambda : r.zero()), n);
}

SquareMatrix elem_symplectic(const Ring& r, int n, int i, int j, const RingElement& z) {
    return atom_matrix(symplectic_atom(i, j, z.valid() ? z : r.zero()), 2 * n);
}

SquareMatrix eval_atoms(const Ring& r, int size, const std::vector<GeneratorAtom>& atoms) {
    SquareMatrix m = SquareMatrix::identity(r, size);
    for (const auto& a : atoms) apply_right(m, a);
    return m;
}

SquareMatrix eval_word(const GeneratorWord& w) { return eval_atoms(w.ring, w.size, w.atoms); }

void validate_tag(const GeneratorWord& w) {
    for (const auto& a : w.atoms) check_atom(a, w.size);
    if (w.tag == WordClass::Plain) return;
    if (!w.ideal) throw std::invalid_argument("tagged word carries no ideal");
    const Ideal& I = *w.ideal;
    if (w.tag == WordClass::Relative) {
        if (w.atoms.size() % 3 != 0) throw std::invalid_argument("relative word is not a list of triples");
        for (std::size_t k = 0; k < w.atoms.size(); k += 3) {
            const auto &a = w.atoms[k], &b = w.atoms[k + 1], &c = w.atoms[k + 2];
            bool shape = a.family == b.family && b.family == c.family && a.i == c.i && a.j == c.j && b.i == a.j &&
                         b.j == a.i && c.effective_arg() == -a.effective_arg();
            if (!shape) throw std::invalid_argument("relative word: triple " + std::to_string(k / 3) + " malformed");
            if (!I.contains(b.effective_arg()))
                throw std::invalid_argument("relative word: middle argument not in the ideal");
        }
        return;
    }
    for (const auto& a : w.atoms) {
        if (a.i == 1) continue;
        if (a.j != 1) throw std::invalid_argument("first-row/column word contains " + a.to_string());
        if (!I.contains(a.effective_arg()))
            throw std::invalid_argument("first-column argument not in the ideal: " + a.to_string());
    }
}

GeneratorWord relative_generator(Family f, int size, int i, int j, const RingElement& a, const RingElement& x,
                                 const Ideal& I) {
    if (!I.contains(x)) throw std::invalid_argument("relative generator: x is not in the ideal");
    GeneratorWord w(a.ring(), size);
    w.tag = WordClass::Relative;
    w.ideal = I;
    w.push(GeneratorAtom{f, i, j, a, false});
    w.push(GeneratorAtom{f, j, i, x, false});
    w.push(GeneratorAtom{f, i, j, -a, false});
    for (const auto& atom : w.atoms) check_atom(atom, size);
    return w;
}

// ---------------------------------------------------------------- rho / mu

namespace {

Row q_times_phi(const Row& q, const AlternatingForm& phi) { return row_times(q, phi.matrix()); }

void require_q(const Row& q, const AlternatingForm& phi) {
    if (static_cast<int>(q.size()) != phi.matrix().size()) throw std::invalid_argument("q length must match the form size");
}

RingElement pair_sum(const Row& q) {
    RingElement c = q.front().ring().zero();
    for (std::size_t k = 0; k + 1 < q.size(); k += 2) c += q[k] * q[k + 1];
    return c;
}

}  // namespace

SquareMatrix rho_matrix(const Row& q, const RingElement& alpha, const AlternatingForm& phi, Convention c) {
    require_q(q, phi);
    const Ring& r = phi.matrix().ring();
    const int n2 = phi.matrix().size();
    SquareMatrix m = SquareMatrix::identity(r, n2 + 2);
    Row qp = q_times_phi(q, phi);
    m.at(2, 1) = alpha;
    for (int k = 1; k <= n2; ++k) {
        m.at(2, 2 + k) = (c == Convention::Corrected) ? -qp[k - 1] : qp[k - 1];
        m.at(2 + k, 1) = q[k - 1];
    }
    return m;
}

SquareMatrix mu_matrix(const Row& q, const RingElement& beta, const AlternatingForm& phi, Convention c) {
    require_q(q, phi);
    const Ring& r = phi.matrix().ring();
    const int n2 = phi.matrix().size();
    SquareMatrix m = SquareMatrix::identity(r, n2 + 2);
    Row qp = q_times_phi(q, phi);
    m.at(1, 2) = -beta;
    for (int k = 1; k <= n2; ++k) {
        m.at(1, 2 + k) = (c == Convention::Corrected) ? qp[k - 1] : -qp[k - 1];
        m.at(2 + k, 2) = q[k - 1];
    }
    return m;
}

GeneratorWord decompose_rho(const Row& q, const RingElement& alpha, Convention c) {
    if (q.empty() || q.size() % 2) throw std::invalid_argument("q must have even positive length");
    const int size = static_cast<int>(q.size()) + 2;
    GeneratorWord w(alpha.ring(), size);
    w.push(symplectic_atom(2, 1, c == Convention::Corrected ? alpha + pair_sum(q) : alpha));
    for (int i = 3; i <= size; ++i) w.push(symplectic_atom(i, 1, q[i - 3]));
    return w;
}

GeneratorWord decompose_mu(const Row& q, const RingElement& beta, Convention c) {
    if (q.empty() || q.size() % 2) throw std::invalid_argument("q must have even positive length");
    const int size = static_cast<int>(q.size()) + 2;
    GeneratorWord w(beta.ring(), size);
    w.push(symplectic_atom(1, 2, c == Convention::Corrected ? -beta + pair_sum(q) : beta));
    for (int i = 3; i <= size; ++i) {
        const RingElement& qs = q[sigma(i - 2) - 1];
        w.push(symplectic_atom(1, i, (i % 2 == 0) ? qs : -qs));
    }
    return w;
}

SquareMatrix bass_symplectic_transvection(const Row& u, const Row& v, const RingElement& alpha,
                                          const AlternatingForm& phi) {
    const SquareMatrix& f = phi.matrix();
    const int n = f.size();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw std::invalid_argument("u, v must match the form size");
    const Ring& r = f.ring();
    Row uf = row_times(u, f), vf = row_times(v, f);
    RingElement uv = r.zero();
    for (int k = 0; k < n; ++k) uv += uf[k] * v[k];
    if (!uv.is_zero()) throw std::invalid_argument("Bass transvection needs <u,v> = 0");
    SquareMatrix a = SquareMatrix::identity(r, n), b = SquareMatrix::identity(r, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            a.at(i, j) -= v[i - 1] * uf[j - 1] + u[i - 1] * vf[j - 1];
            b.at(i, j) -= alpha * u[i - 1] * uf[j - 1];
        }
    return a * b;
}

SquareMatrix elementary_linear_transvection(LinearTransvectionKind k, const Row& vec) {
    if (vec.empty()) throw std::invalid_argument("empty vector");
    const Ring& r = vec.front().ring();
    const int n = static_cast<int>(vec.size());
    SquareMatrix m = SquareMatrix::identity(r, n + 1);
    for (int t = 1; t <= n; ++t) {
        if (k == LinearTransvectionKind::Ex) m.at(1, t + 1) = vec[t - 1];
        else m.at(t + 1, 1) = vec[t - 1];
    }
    return m;
}

GeneratorWord linear_transvection_word(LinearTransvectionKind k, const Row& vec) {
    const int n = static_cast<int>(vec.size());
    GeneratorWord w(vec.front().ring(), n + 1);
    for (int t = 1; t <= n; ++t) {
        if (k == LinearTransvectionKind::Ex) w.push(linear_atom(1, t + 1, vec[t - 1]));
        else w.push(linear_atom(t + 1, 1, vec[t - 1]));
    }
    return w;
}

// ---------------------------------------------------------------- serialization

nlohmann::json word_to_json(const GeneratorWord& w) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& a : w.atoms) {
        out.push_back({{"fam", a.family == Family::Linear ? "L" : "S"},
                       {"i", a.i},
                       {"j", a.j},
                       {"arg", a.effective_arg().to_string()}});
    }
    return out;
}

namespace {

Family parse_family(const std::string& f) {
    if (f == "L") return Family::Linear;
    if (f == "S") return Family::Symplectic;
    throw std::invalid_argument("unknown generator family '" + f + "'");
}

}  // namespace

GeneratorWord word_from_json(const nlohmann::json& j, const Ring& r, int size) {
    GeneratorWord w(r, size);
    const nlohmann::json& list = j.is_object() ? j.at("atoms") : j;
    for (const auto& a : list) {
        GeneratorAtom atom{parse_family(a.at("fam").get<std::string>()), a.at("i").get<int>(), a.at("j").get<int>(),
                           a.at("arg").is_string() ? r.parse_element(a.at("arg").get<std::string>())
                                                   : r.from_int(a.at("arg").get<std::int64_t>()),
                           a.value("inv", false)};
        check_atom(atom, size);
        w.push(atom.normalized());
    }
    return w;
}

GeneratorWord parse_inline_word(const std::string& text, const Ring& r, int size) {
    GeneratorWord w(r, size);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        auto c1 = item.find(':');
        auto c2 = item.find(':', c1 == std::string::npos ? 0 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("inline atom must look like F:i,j:arg, got '" + item + "'");
        std::string fam = item.substr(0, c1);
        fam.erase(0, fam.find_first_not_of(' '));
        std::string idx = item.substr(c1 + 1, c2 - c1 - 1);
        auto comma = idx.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("inline atom indices must be i,j: '" + item + "'");
        GeneratorAtom atom{parse_family(fam), std::stoi(idx.substr(0, comma)), std::stoi(idx.substr(comma + 1)),
                           r.parse_element(item.substr(c2 + 1)), false};
        check_atom(atom, size);
        w.push(atom);
    }
    return w;
}

}  // namespace transvect
