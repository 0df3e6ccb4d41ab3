#include "transvect/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace transvect {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in coefficient arithmetic");
    return r;
}

std::int64_t checked_shift(std::int64_t a, int k) {
    for (int i = 0; i < k; ++i) a = checked_mul(a, 2);
    return a;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = a % m;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("element is not a unit");
    std::int64_t inv = t0 % m;
    return inv < 0 ? inv + m : inv;
}

Scalar dyadic_normalize(std::int64_t num, std::int64_t exp) {
    if (num == 0) return {0, 0};
    while (exp > 0 && num % 2 == 0) {
        num /= 2;
        --exp;
    }
    if (exp < 0) {
        num = checked_shift(num, static_cast<int>(-exp));
        exp = 0;
    }
    return {num, static_cast<std::int32_t>(exp)};
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// ---------------------------------------------------------------- Ring

Ring Ring::integers_mod(std::int64_t m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("zmod requires an odd modulus >= 3 (2 must be a unit)");
    if (m > (std::int64_t{1} << 31)) throw std::invalid_argument("modulus too large");
    auto info = std::make_shared<RingInfo>();
    info->kind = BaseKind::IntegersMod;
    info->modulus = m;
    return Ring(info);
}

Ring Ring::prime_field(std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("gf requires an odd prime");
    if (p > (std::int64_t{1} << 31)) throw std::invalid_argument("modulus too large");
    auto info = std::make_shared<RingInfo>();
    info->kind = BaseKind::PrimeField;
    info->modulus = p;
    return Ring(info);
}

Ring Ring::dyadic() {
    static const Ring instance = [] {
        auto info = std::make_shared<RingInfo>();
        info->kind = BaseKind::Dyadic;
        return Ring(info);
    }();
    return instance;
}

Ring Ring::polynomial(const Ring& base, std::vector<std::string> vars) {
    if (base.is_polynomial()) throw std::invalid_argument("nested polynomial rings are not supported");
    if (vars.empty()) throw std::invalid_argument("polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::string& v = vars[i];
        if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
            throw std::invalid_argument("bad variable name '" + v + "'");
        for (char c : v)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw std::invalid_argument("bad variable name '" + v + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (vars[j] == v) throw std::invalid_argument("duplicate variable '" + v + "'");
    }
    auto info = std::make_shared<RingInfo>(*base.info_);
    info->vars = std::move(vars);
    return Ring(info);
}

Ring Ring::parse(const std::string& text) {
    std::string d = trim(text);
    if (d == "dyadic") return dyadic();
    if (d.rfind("zmod:", 0) == 0) return integers_mod(parse_int(d.substr(5)));
    if (d.rfind("gf:", 0) == 0) return prime_field(parse_int(d.substr(3)));
    if (d.rfind("poly:", 0) == 0) {
        std::size_t last = d.rfind(':');
        if (last <= 5) throw std::invalid_argument("poly descriptor needs base and variables: " + d);
        Ring base = parse(d.substr(5, last - 5));
        std::vector<std::string> vars;
        for (auto& v : split(d.substr(last + 1), ',')) vars.push_back(trim(v));
        return polynomial(base, vars);
    }
    throw std::invalid_argument("unknown ring descriptor '" + d + "'");
}

Ring Ring::base() const {
    if (!is_polynomial()) return *this;
    auto info = std::make_shared<RingInfo>(*info_);
    info->vars.clear();
    if (info->kind == BaseKind::Dyadic) return dyadic();
    return Ring(info);
}

int Ring::var_index(const std::string& name) const {
    const auto& v = info_->vars;
    auto it = std::find(v.begin(), v.end(), name);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

std::string Ring::to_string() const {
    std::string b;
    switch (kind()) {
        case BaseKind::IntegersMod: b = "zmod:" + std::to_string(modulus()); break;
        case BaseKind::PrimeField: b = "gf:" + std::to_string(modulus()); break;
        case BaseKind::Dyadic: b = "dyadic"; break;
    }
    if (!is_polynomial()) return b;
    std::string s = "poly:" + b + ":";
    for (std::size_t i = 0; i < vars().size(); ++i) s += (i ? "," : "") + vars()[i];
    return s;
}

bool Ring::operator==(const Ring& o) const {
    if (info_ == o.info_) return true;
    if (!info_ || !o.info_) return false;
    return info_->kind == o.info_->kind && info_->modulus == o.info_->modulus && info_->vars == o.info_->vars;
}

Scalar Ring::s_add(Scalar a, Scalar b) const {
    if (kind() == BaseKind::Dyadic) {
        std::int32_t e = std::max(a.exp, b.exp);
        std::int64_t x = checked_shift(a.num, e - a.exp);
        std::int64_t y = checked_shift(b.num, e - b.exp);
        return dyadic_normalize(checked_add(x, y), e);
    }
    std::int64_t s = a.num + b.num;
    if (s >= modulus()) s -= modulus();
    return {s, 0};
}

Scalar Ring::s_neg(Scalar a) const {
    if (kind() == BaseKind::Dyadic) return {checked_mul(a.num, -1), a.exp};
    return {a.num == 0 ? 0 : modulus() - a.num, 0};
}

Scalar Ring::s_mul(Scalar a, Scalar b) const {
    if (kind() == BaseKind::Dyadic) {
        return dyadic_normalize(checked_mul(a.num, b.num), static_cast<std::int64_t>(a.exp) + b.exp);
    }
    return {static_cast<std::int64_t>((static_cast<__int128>(a.num) * b.num) % modulus()), 0};
}

Scalar Ring::s_from_int(std::int64_t v) const {
    if (kind() == BaseKind::Dyadic) return dyadic_normalize(v, 0);
    std::int64_t r = v % modulus();
    if (r < 0) r += modulus();
    return {r, 0};
}

bool Ring::s_is_unit(Scalar a) const {
    if (kind() == BaseKind::Dyadic) {
        std::int64_t n = a.num < 0 ? -a.num : a.num;
        return n != 0 && (n & (n - 1)) == 0;
    }
    return gcd64(a.num, modulus()) == 1;
}

Scalar Ring::s_inverse(Scalar a) const {
    if (!s_is_unit(a)) throw std::domain_error("element is not a unit");
    if (kind() == BaseKind::Dyadic) {
        std::int64_t n = a.num < 0 ? -a.num : a.num;
        int k = 0;
        while ((std::int64_t{1} << k) < n) ++k;
        std::int64_t sign = a.num < 0 ? -1 : 1;
        return dyadic_normalize(sign * checked_shift(1, a.exp), k);
    }
    return {mod_inverse(a.num, modulus()), 0};
}

std::string Ring::s_to_string(Scalar a) const {
    if (kind() == BaseKind::Dyadic && a.exp > 0) return std::to_string(a.num) + "/2^" + std::to_string(a.exp);
    return std::to_string(a.num);
}

RingElement Ring::zero() const { return RingElement(*this, {}); }

RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(std::int64_t v) const {
    Term t{Exponents(nvars(), 0), s_from_int(v)};
    return RingElement(*this, {t});
}

RingElement Ring::var(const std::string& name) const {
    int k = var_index(name);
    if (k < 0) throw std::invalid_argument("unknown variable '" + name + "' in " + to_string());
    Exponents e(nvars(), 0);
    e[k] = 1;
    return RingElement(*this, {Term{e, s_from_int(1)}});
}

RingElement Ring::inverse_of_two() const { return from_int(2).inverse(); }

std::int64_t Ring::cardinality() const {
    if (!is_finite()) throw std::domain_error("ring is infinite");
    return modulus();
}

std::vector<RingElement> Ring::elements() const {
    std::vector<RingElement> out;
    for (std::int64_t v = 0; v < cardinality(); ++v) out.push_back(from_int(v));
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class ElementParser {
public:
    ElementParser(const Ring& r, const std::string& s) : r_(r), s_(s) {}

    RingElement run() {
        RingElement v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const Ring& r_;
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("cannot parse element '" + s_ + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::int64_t integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return parse_int(s_.substr(start, pos_ - start));
    }
    RingElement expr() {
        RingElement v = r_.zero();
        bool first = true;
        for (;;) {
            bool neg = false;
            if (eat('-')) neg = true;
            else if (!first && !eat('+')) break;
            else if (first) eat('+');
            RingElement t = term();
            v = neg ? v - t : v + t;
            first = false;
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
        }
        return v;
    }
    RingElement term() {
        RingElement v = factor();
        for (;;) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                RingElement d = power();
                if (!d.is_constant() || !d.is_unit()) fail("division only by unit constants");
                v = v * d.inverse();
            } else {
                break;
            }
        }
        return v;
    }
    RingElement factor() {
        if (eat('-')) return -factor();
        return power();
    }
    RingElement power() {
        RingElement b = primary();
        if (eat('^')) {
            std::int64_t k = integer();
            if (k < 0 || k > 100000) fail("bad exponent");
            b = b.pow(static_cast<unsigned>(k));
        }
        return b;
    }
    RingElement primary() {
        skip();
        if (eat('(')) {
            RingElement v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return r_.from_int(integer());
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("unexpected character");
        return r_.var(s_.substr(start, pos_ - start));
    }
};

}  // namespace

RingElement Ring::parse_element(const std::string& text) const { return ElementParser(*this, text).run(); }

// ---------------------------------------------------------------- RingElement

bool grlex_greater(const Exponents& a, const Exponents& b) {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return a > b;
}

RingElement::RingElement(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grlex_greater(x.exps, y.exps); });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().exps == t.exps) {
            terms_.back().coef = ring_.s_add(terms_.back().coef, t.coef);
        } else {
            terms_.push_back(std::move(t));
        }
    }
    std::erase_if(terms_, [](const Term& t) { return t.coef.num == 0; });
}

bool RingElement::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_[0].exps)
        if (e) return false;
    return true;
}

Scalar RingElement::constant_term() const {
    if (terms_.empty()) return {0, 0};
    const Term& t = terms_.back();
    for (auto e : t.exps)
        if (e) return {0, 0};
    return t.coef;
}

bool RingElement::is_one() const { return is_constant() && !is_zero() && constant_term() == ring_.s_from_int(1); }

bool RingElement::is_unit() const { return is_constant() && !is_zero() && ring_.s_is_unit(constant_term()); }

RingElement RingElement::inverse() const {
    if (!is_unit()) throw std::domain_error("element " + to_string() + " is not invertible");
    Term t{Exponents(ring_.nvars(), 0), ring_.s_inverse(constant_term())};
    return RingElement(ring_, {t});
}

static void require_same(const Ring& a, const Ring& b) {
    if (a != b) throw std::invalid_argument("ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

RingElement RingElement::operator+(const RingElement& o) const {
    require_same(ring_, o.ring_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && grlex_greater(terms_[i].exps, o.terms_[j].exps))) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || grlex_greater(o.terms_[j].exps, terms_[i].exps)) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar c = ring_.s_add(terms_[i].coef, o.terms_[j].coef);
            if (c.num != 0) out.push_back(Term{terms_[i].exps, c});
            ++i;
            ++j;
        }
    }
    RingElement r;
    r.ring_ = ring_;
    r.terms_ = std::move(out);
    return r;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& t : r.terms_) t.coef = ring_.s_neg(t.coef);
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    require_same(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return ring_.zero();
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    const std::size_t nv = ring_.nvars();
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Term t;
            t.exps.resize(nv);
            for (std::size_t k = 0; k < nv; ++k) {
                unsigned e = static_cast<unsigned>(a.exps[k]) + b.exps[k];
                if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
                t.exps[k] = static_cast<std::uint16_t>(e);
            }
            t.coef = ring_.s_mul(a.coef, b.coef);
            if (t.coef.num != 0) prod.push_back(std::move(t));
        }
    }
    return RingElement(ring_, std::move(prod));
}

RingElement RingElement::pow(unsigned k) const {
    RingElement result = ring_.one();
    RingElement base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

RingElement RingElement::scale(Scalar s) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Scalar c = ring_.s_mul(t.coef, s);
        if (c.num != 0) out.push_back(Term{t.exps, c});
    }
    RingElement r;
    r.ring_ = ring_;
    r.terms_ = std::move(out);
    return r;
}

bool RingElement::operator==(const RingElement& o) const {
    if (ring_ != o.ring_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || !(terms_[i].coef == o.terms_[i].coef)) return false;
    return true;
}

unsigned RingElement::valuation(int var) const {
    if (terms_.empty()) return 0;
    unsigned v = std::numeric_limits<unsigned>::max();
    for (const auto& t : terms_) v = std::min<unsigned>(v, t.exps[var]);
    return v;
}

unsigned RingElement::degree(int var) const {
    unsigned v = 0;
    for (const auto& t : terms_) v = std::max<unsigned>(v, t.exps[var]);
    return v;
}

RingElement RingElement::divide_by_var_power(int var, unsigned k) const {
    RingElement r = *this;
    for (auto& t : r.terms_) {
        if (t.exps[var] < k) throw std::domain_error("not divisible by " + ring_.vars()[var] + "^" + std::to_string(k));
        t.exps[var] = static_cast<std::uint16_t>(t.exps[var] - k);
    }
    // Dividing every term by the same monomial keeps grlex order within a
    // fixed-degree shift, but re-canonicalize to be safe.
    return RingElement(ring_, r.terms_);
}

RingElement RingElement::substitute(int var, const RingElement& value) const {
    require_same(ring_, value.ring_);
    std::map<unsigned, RingElement> powers;
    RingElement out = ring_.zero();
    for (const auto& t : terms_) {
        unsigned e = t.exps[var];
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
        Term rest = t;
        rest.exps[var] = 0;
        out += RingElement(ring_, {rest}) * it->second;
    }
    return out;
}

bool RingElement::every_term_has_var(const std::vector<int>& vars) const {
    for (const auto& t : terms_) {
        bool has = false;
        for (int v : vars)
            if (t.exps[v] > 0) has = true;
        if (!has) return false;
    }
    return true;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const bool dy = ring_.kind() == BaseKind::Dyadic;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coef;
        bool neg = dy && c.num < 0;
        if (neg) c.num = -c.num;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t k = 0; k < t.exps.size(); ++k) {
            if (!t.exps[k]) continue;
            if (any) mono << "*";
            mono << ring_.vars()[k];
            if (t.exps[k] > 1) mono << "^" << t.exps[k];
            any = true;
        }
        bool unit_coef = c.num == 1 && c.exp == 0;
        if (!any) {
            os << ring_.s_to_string(c);
        } else if (unit_coef) {
            os << mono.str();
        } else {
            os << ring_.s_to_string(c) << "*" << mono.str();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- Ideal

Ideal Ideal::zero(const Ring& r) { return Ideal(r, Shape::Zero); }

Ideal Ideal::full(const Ring& r) { return Ideal(r, Shape::Full); }

Ideal Ideal::principal(const Ring& r, const RingElement& gen) {
    if (gen.ring() != r) throw std::invalid_argument("ring mismatch in ideal generator");
    if (!gen.is_constant()) throw std::invalid_argument("principal ideals need a constant generator");
    if (gen.is_zero()) return zero(r);
    Scalar c = gen.constant_term();
    Ideal I(r, Shape::Principal);
    if (r.kind() == BaseKind::Dyadic) {
        std::int64_t n = c.num < 0 ? -c.num : c.num;
        while (n % 2 == 0) n /= 2;
        if (n == 1) return full(r);
        I.gen_ = r.from_int(n);
    } else {
        std::int64_t g = gcd64(c.num, r.modulus());
        if (g == 1) return full(r);
        I.gen_ = r.from_int(g);
    }
    return I;
}

Ideal Ideal::vars(const Ring& r, const std::vector<std::string>& names) {
    if (names.empty()) return zero(r);
    Ideal I(r, Shape::Vars);
    for (const auto& n : names) {
        int k = r.var_index(n);
        if (k < 0) throw std::invalid_argument("ideal variable '" + n + "' not in ring " + r.to_string());
        I.var_idx_.push_back(k);
    }
    std::sort(I.var_idx_.begin(), I.var_idx_.end());
    I.var_idx_.erase(std::unique(I.var_idx_.begin(), I.var_idx_.end()), I.var_idx_.end());
    return I;
}

Ideal Ideal::parse(const Ring& r, const std::string& text) {
    std::string t = trim(text);
    if (t.rfind("ideal:", 0) == 0) t = t.substr(6);
    if (t == "full" || t == "R") return full(r);
    if (t == "zero") return zero(r);
    if (t.rfind("vars:", 0) == 0) {
        std::vector<std::string> names;
        for (auto& v : split(t.substr(5), ',')) names.push_back(trim(v));
        return vars(r, names);
    }
    return principal(r, r.from_int(parse_int(t)));
}

bool Ideal::is_full() const { return shape_ == Shape::Full; }

bool Ideal::contains(const RingElement& x) const {
    if (x.ring() != ring_) throw std::invalid_argument("ring mismatch in ideal membership");
    switch (shape_) {
        case Shape::Zero: return x.is_zero();
        case Shape::Full: return true;
        case Shape::Vars: return x.every_term_has_var(var_idx_);
        case Shape::Principal: {
            std::int64_t g = gen_.constant_term().num;
            for (const auto& t : x.terms()) {
                if (t.coef.num % g != 0) return false;
            }
            return true;
        }
    }
    return false;
}

RingElement Ideal::additive_generator() const {
    if (!ring_.is_finite()) throw std::domain_error("additive generator needs a finite ring");
    switch (shape_) {
        case Shape::Zero: return ring_.zero();
        case Shape::Full: return ring_.one();
        case Shape::Principal: return gen_;
        case Shape::Vars: break;
    }
    throw std::domain_error("variable ideal in finite ring");
}

RingElement Ideal::reduce(const RingElement& x) const {
    if (!ring_.is_finite()) throw std::domain_error("reduction mod I needs a finite base ring");
    switch (shape_) {
        case Shape::Zero: return x;
        case Shape::Full: return ring_.zero();
        case Shape::Principal: return ring_.from_int(x.constant_term().num % gen_.constant_term().num);
        case Shape::Vars: break;
    }
    return x;
}

std::string Ideal::to_string() const {
    switch (shape_) {
        case Shape::Zero: return "ideal:0";
        case Shape::Full: return "ideal:1";
        case Shape::Principal: return "ideal:" + gen_.to_string();
        case Shape::Vars: {
            std::string s = "ideal:vars:";
            for (std::size_t i = 0; i < var_idx_.size(); ++i) s += (i ? "," : "") + ring_.vars()[var_idx_[i]];
            return s;
        }
    }
    return "";
}

bool ideal_contains(const Ideal& I, const RingElement& r) { return I.contains(r); }

// ---------------------------------------------------------------- localization

std::vector<std::int64_t> prime_divisors(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

Localization localize_at_prime(const Ring& r, std::int64_t p) {
    if (r.is_polynomial() || r.kind() == BaseKind::Dyadic)
        throw std::invalid_argument("localization is defined for zmod and gf rings");
    if (p == 2) throw std::invalid_argument("p = 2 is excluded (2 is a unit)");
    if (!is_prime(p) || r.modulus() % p != 0)
        throw std::invalid_argument(std::to_string(p) + " is not a prime divisor of " + std::to_string(r.modulus()));
    Localization L;
    L.prime = p;
    std::int64_t q = 1, m = r.modulus();
    while (m % p == 0) {
        m /= p;
        q *= p;
        ++L.exponent;
    }
    L.local = (r.kind() == BaseKind::PrimeField) ? r : Ring::integers_mod(q);
    return L;
}

RingElement Localization::map(const RingElement& x) const {
    if (x.ring().is_polynomial()) throw std::invalid_argument("localization map expects a base element");
    return local.from_int(x.constant_term().num);
}

// ---------------------------------------------------------------- sampling

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % n;
    }
}

namespace {

Scalar sample_scalar(const Ring& r, std::mt19937_64& rng, const SampleBounds* b) {
    if (r.kind() != BaseKind::Dyadic) return {static_cast<std::int64_t>(bounded_draw(rng, r.modulus())), 0};
    if (!b) throw std::invalid_argument("sampling the dyadic integers needs explicit bounds");
    std::int64_t span = 2 * b->coef_range + 1;
    std::int64_t num = static_cast<std::int64_t>(bounded_draw(rng, span)) - b->coef_range;
    std::int64_t e = static_cast<std::int64_t>(bounded_draw(rng, b->max_dyadic_exp + 1));
    return dyadic_normalize(num, e);
}

}  // namespace

RingElement sample_element(const Ring& r, std::mt19937_64& rng, const SampleBounds* bounds) {
    if (!r.is_polynomial()) {
        Scalar s = sample_scalar(r, rng, bounds);
        return RingElement(r, {Term{Exponents{}, s}});
    }
    if (!bounds) throw std::invalid_argument("sampling a polynomial ring needs explicit degree/coefficient bounds");
    std::size_t nterms = bounded_draw(rng, bounds->max_terms + 1);
    std::vector<Term> terms;
    for (std::size_t t = 0; t < nterms; ++t) {
        Exponents e(r.nvars(), 0);
        unsigned budget = static_cast<unsigned>(bounded_draw(rng, bounds->max_degree + 1));
        for (unsigned d = 0; d < budget; ++d) ++e[bounded_draw(rng, r.nvars())];
        terms.push_back(Term{e, sample_scalar(r, rng, bounds)});
    }
    return RingElement(r, terms);
}

}  // namespace transvect
