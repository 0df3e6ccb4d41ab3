#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace transvect {

enum class BaseKind { IntegersMod, PrimeField, Dyadic };

// Coefficient of the base ring. For residue rings `num` is in [0, m) and
// `exp` is 0. For the dyadic integers the value is num / 2^exp, with num odd
// whenever exp > 0.
struct Scalar {
    std::int64_t num = 0;
    std::int32_t exp = 0;
    bool operator==(const Scalar&) const = default;
};

struct RingInfo {
    BaseKind kind = BaseKind::IntegersMod;
    std::int64_t modulus = 0;       // 0 for dyadic
    std::vector<std::string> vars;  // empty for a base ring
};

class RingElement;

// Immutable ring descriptor: ℤ/m, GF(p), ℤ[1/2], or a polynomial ring over one of them.
class Ring {
public:
    Ring() = default;
    static Ring integers_mod(std::int64_t m);
    static Ring prime_field(std::int64_t p);
    static Ring dyadic();
    static Ring polynomial(const Ring& base, std::vector<std::string> vars);
    static Ring parse(const std::string& descriptor);

    BaseKind kind() const { return info_->kind; }
    std::int64_t modulus() const { return info_->modulus; }
    const std::vector<std::string>& vars() const { return info_->vars; }
    std::size_t nvars() const { return info_->vars.size(); }
    bool is_polynomial() const { return !info_->vars.empty(); }
    bool is_finite() const { return !is_polynomial() && kind() != BaseKind::Dyadic; }
    Ring base() const;
    int var_index(const std::string& name) const;  // -1 when absent

    std::string to_string() const;
    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(std::int64_t v) const;
    RingElement var(const std::string& name) const;
    RingElement parse_element(const std::string& text) const;
    RingElement inverse_of_two() const;

    // Finite base rings only: every element in canonical order.
    std::vector<RingElement> elements() const;
    std::int64_t cardinality() const;

    // Scalar arithmetic of the coefficient ring.
    Scalar s_add(Scalar a, Scalar b) const;
    Scalar s_neg(Scalar a) const;
    Scalar s_mul(Scalar a, Scalar b) const;
    Scalar s_from_int(std::int64_t v) const;
    bool s_is_unit(Scalar a) const;
    Scalar s_inverse(Scalar a) const;
    std::string s_to_string(Scalar a) const;

    const std::shared_ptr<const RingInfo>& info() const { return info_; }

private:
    explicit Ring(std::shared_ptr<const RingInfo> info) : info_(std::move(info)) {}
    std::shared_ptr<const RingInfo> info_;
};

using Exponents = std::vector<std::uint16_t>;

struct Term {
    Exponents exps;
    Scalar coef;
};

// Graded lexicographic comparison: true when a sorts before b (higher first).
bool grlex_greater(const Exponents& a, const Exponents& b);

class RingElement {
public:
    RingElement() = default;
    RingElement(Ring ring, std::vector<Term> terms);  // canonicalizes

    const Ring& ring() const { return ring_; }
    bool valid() const { return ring_.info() != nullptr; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    Scalar constant_term() const;
    bool is_unit() const;
    RingElement inverse() const;  // units of a base ring only

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& o) const;
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    RingElement pow(unsigned k) const;
    RingElement scale(Scalar s) const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    // Polynomial helpers.
    unsigned valuation(int var) const;  // min exponent of var over terms; 0 for zero
    unsigned degree(int var) const;
    RingElement divide_by_var_power(int var, unsigned k) const;  // exact, throws otherwise
    RingElement substitute(int var, const RingElement& value) const;
    bool every_term_has_var(const std::vector<int>& vars) const;

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
    friend class Ring;
};

class Ideal {
public:
    enum class Shape { Zero, Full, Principal, Vars };

    static Ideal zero(const Ring& r);
    static Ideal full(const Ring& r);
    static Ideal principal(const Ring& r, const RingElement& gen);
    static Ideal vars(const Ring& r, const std::vector<std::string>& names);
    static Ideal parse(const Ring& r, const std::string& text);

    const Ring& ring() const { return ring_; }
    Shape shape() const { return shape_; }
    bool contains(const RingElement& x) const;
    bool is_full() const;
    bool is_proper() const { return !is_full(); }
    // Finite base rings: smallest additive generator of the ideal (gcd(d, m) for ℤ/m).
    RingElement additive_generator() const;
    RingElement reduce(const RingElement& x) const;  // canonical residue mod I, finite rings
    std::string to_string() const;
    const RingElement& generator() const { return gen_; }
    const std::vector<int>& var_indices() const { return var_idx_; }

private:
    Ideal(Ring r, Shape s) : ring_(std::move(r)), shape_(s) {}
    Ring ring_;
    Shape shape_;
    RingElement gen_;
    std::vector<int> var_idx_;
};

bool ideal_contains(const Ideal& I, const RingElement& r);

struct Localization {
    Ring local;
    std::int64_t prime = 0;
    int exponent = 0;
    RingElement map(const RingElement& x) const;
};

Localization localize_at_prime(const Ring& r, std::int64_t p);
std::vector<std::int64_t> prime_divisors(std::int64_t m);

struct SampleBounds {
    unsigned max_degree = 2;
    std::int64_t coef_range = 5;  // integer numerators in [-range, range]
    int max_dyadic_exp = 2;
    unsigned max_terms = 3;
};

// Uniform draw in [0, n) independent of the standard library's distribution
// implementation, so seeds reproduce across platforms.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

RingElement sample_element(const Ring& r, std::mt19937_64& rng, const SampleBounds* bounds = nullptr);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace transvect
