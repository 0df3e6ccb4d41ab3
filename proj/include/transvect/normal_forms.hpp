#pragma once

#include <map>

#include "transvect/words.hpp"

namespace transvect {

// GF(p) or ℤ/p^k with p odd, together with its maximal ideal (p).
class LocalRingWitness {
public:
    explicit LocalRingWitness(const Ring& r);  // throws when r is not of that form

    const Ring& ring() const { return ring_; }
    const Ideal& maximal_ideal() const { return max_; }
    std::int64_t prime() const { return p_; }

private:
    Ring ring_;
    Ideal max_;
    std::int64_t p_ = 0;
};

// β with v = e_1·eval(β). With I proper, v ≡ e_1 mod I is required and β is a relative(I) word.
GeneratorWord complete_unimodular_local(const Row& v, const LocalRingWitness& L,
                                        const std::optional<Ideal>& I = std::nullopt);

// ε of size 2n-1 with (1 ⊥ eval(ε))^t ψ_n (1 ⊥ eval(ε)) = φ. With I proper, φ ≡ ψ_n mod I is required
// and ε is a relative(I) word.
GeneratorWord reduce_alternating_local(const AlternatingForm& phi, const LocalRingWitness& L,
                                       const std::optional<Ideal>& I = std::nullopt);

// Round-trip check of a reduction.
bool verify_form_reduction(const AlternatingForm& phi, const GeneratorWord& eps);

struct LocalFactorReduction {
    Ring local;
    GeneratorWord epsilon;
    bool verified = false;
};

// ℤ/m with m odd: one reduction per prime factor over ℤ/p^k.
std::map<std::int64_t, LocalFactorReduction> reduce_alternating_semilocal(
    const AlternatingForm& phi, const std::optional<Ideal>& I = std::nullopt, int threads = 1);

}  // namespace transvect
