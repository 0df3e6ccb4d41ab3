#pragma once

#include <functional>
#include <optional>

#include "transvect/words.hpp"

namespace transvect {

// Commutator relations among symplectic generators, numbered 3..15:
//   3,4,5   the commutator calculus identities [gh,k], [g,hk], g[h,k]g^-1
//   6..13   two-generator commutator formulas
//   14      long root element as a commutator of short ones
//   15      commuting pairs
struct RelationInstance {
    int id = 0;
    int n = 2;                // half size
    std::vector<int> indices;  // (i,j), (i,k) or (i,j,k,l); six indices for 3..5
    RingElement a, b;
};

struct RelationReport {
    int id = 0;
    std::vector<int> indices;
    bool holds = false;            // the relation exactly as stated
    bool has_correction = false;
    bool corrected_holds = false;  // the corrected statement (equal to `holds` when none)
    SquareMatrix lhs, rhs;         // of the stated form
    std::string statement;
    std::string correction;
};

std::vector<int> relation_ids();
std::string relation_statement(int id);
// Every index tuple allowed by the relation's constraints for half size n.
std::vector<std::vector<int>> admissible_tuples(int id, int n);
bool tuple_admissible(int id, int n, const std::vector<int>& idx);

RelationReport verify_relation(const RelationInstance& inst);

struct SuiteMode {
    bool symbolic = true;
    int samples = 50;
    std::uint64_t seed = 1;
    int threads = 1;
};

// Symbolic mode works over base[a,b] where base is the ring itself or the base of a polynomial ring.
// Sampled mode draws (a,b) per tuple; a tuple holds when every sample holds.
std::vector<RelationReport> verify_relation_suite(int n, const Ring& ring, const SuiteMode& mode,
                                                  const std::vector<int>& ids = {});

// Classification of symplectic root elements relative to the first index pair {1,2}.
enum class AtomRegion { FirstRow, FirstCol, Inner };
// Rewrites se_ij with j = 2 or i = 2 into the equal generator with index 1, so first-row and
// first-column generators have i = 1 or j = 1; inner generators use the lexicographically smaller label.
GeneratorAtom canonical_atom(const GeneratorAtom& a);
AtomRegion region(const GeneratorAtom& a);
bool opposite_roots(const GeneratorAtom& a, const GeneratorAtom& b);

// Reads a product of pairwise commuting symplectic root elements off a matrix; nullopt when the
// matrix is not of that form.
std::optional<std::vector<GeneratorAtom>> read_root_elements(const SquareMatrix& c);

struct DilationContext {
    Ring ring;       // polynomial ring carrying the dilation variable
    int yvar = -1;   // index of Y
    unsigned unit = 1;  // arguments are measured in powers of Y^unit
    Ideal ideal;     // generated by designated variables
    int size = 0;    // matrix dimension (even)
    int budget = 0;  // Y^unit factors required of a target; 0 means required_budget(size)
};

struct RewriteResult {
    GeneratorWord lhs;
    GeneratorWord rhs;
    bool certificate = false;   // eval(lhs) == eval(rhs)
    bool shape_ok = false;      // every atom has i = 1 or j = 1
    bool divisible = false;     // every argument divisible by Y^unit
    bool ideal_ok = false;      // first-column arguments lie in I
    std::string strategy;
    bool ok() const { return certificate && shape_ok && divisible && ideal_ok; }
};

// Checks the four invariants of a rewrite and fills the flags.
void certify(RewriteResult& r, const DilationContext& ctx);

// Minimum number of Y^unit factors the target argument must carry.
int required_budget(int size);

// ε·t·ε^-1 for one E¹ generator ε and a first-row or first-column target t.
RewriteResult conjugate_first_rowcol(const GeneratorAtom& conjugator, const GeneratorAtom& target,
                                     const DilationContext& ctx);

// ε·ge_ij(Y^{4^r} X f(Y^{4^r} X))·ε^-1 as a first-row/column word. `target` carries the undilated
// argument X f(X) in ctx.ring; `xvar` is the variable substituted by Y^{4^r} X.
RewriteResult dilate_word(const GeneratorWord& eps, const GeneratorAtom& target, int xvar,
                          const DilationContext& ctx);

// A named entry of the dilation case tables.
struct RewriteCase {
    std::string name;
    int size = 0;
    GeneratorAtom conjugator;
    GeneratorAtom target;
};
// Ring: dyadic[a, X, Y, f, x1, x2] with I = (x1, x2). Targets carry Y^budget X f (times x2 for
// first-column targets); conjugators carry a (first row) or x1 (first column).
Ring rewrite_case_ring();
DilationContext rewrite_case_context(int size);
// `budget` overrides the power of Y carried by the targets.
std::vector<RewriteCase> rewrite_case_table(int size, bool include_column_targets = true, int budget = 0);

// Conjugation of rho/mu by I_2 ⊥ (1 ⊥ ε) against the changed form.
struct FormChangeReport {
    bool rho_holds = false;
    bool mu_holds = false;
    bool bass_holds = false;
    bool q_congruent = true;  // transformed q stays ≡ q mod I (relative case)
    bool ok() const { return rho_holds && mu_holds && bass_holds && q_congruent; }
};
// phi_star: alternating form of size 2n; eps: linear word of size 2n-1. phi = (1⊥ε)^t phi_star (1⊥ε).
FormChangeReport form_change_conjugate(const Row& q, const RingElement& alpha, const RingElement& beta,
                                       const GeneratorWord& eps, const AlternatingForm& phi_star,
                                       const std::optional<Ideal>& I = std::nullopt);

// α·(∏ se_ij(a_t b_t))·α^-1 with α = se_kl(z), rewritten as generators with arguments in I.
struct SquareIdealResult {
    GeneratorWord lhs;
    GeneratorWord rhs;
    bool certificate = false;
    bool arguments_in_ideal = false;
    bool ok() const { return certificate && arguments_in_ideal; }
};
SquareIdealResult conjugate_square_ideal(int n, int i, int j, int k, int l, const RingElement& z,
                                         const std::vector<RingElement>& a, const std::vector<RingElement>& b,
                                         const Ideal& I);

// rho/mu matrices against their generator decompositions, for random or symbolic arguments.
struct DecompositionReport {
    int tested = 0;
    int rho_exact = 0;
    int mu_exact = 0;
    bool ok() const { return rho_exact == tested && mu_exact == tested; }
};
// Symbolic when `ring` is a polynomial ring with variables al, be, q1..q2n; sampled otherwise.
DecompositionReport check_decompositions(const Ring& ring, int n, int samples, std::uint64_t seed);

// Bass transvections with (u,v) = ((0,1,0),(0,0,q)) and ((-1,0,0),(0,0,q)) against the elementary actions
//   (a,b,p) -> (a, b - <p,q> + αa, p + aq)  and  (a,b,p) -> (a + <p,q> - βb, b, p + bq).
// `transposed` reads <p,q> as q φ p^t, the pairing of the Bass matrix formula; otherwise p φ q^t.
struct TransvectionReport {
    int tested = 0;
    int first_match = 0;
    int second_match = 0;
    bool ok() const { return first_match == tested && second_match == tested; }
};
TransvectionReport check_bass_correspondence(const Ring& ring, int n, int samples, std::uint64_t seed,
                                             bool transposed = true);

// Polynomial-matrix families in one variable.
using MatrixFamily = std::function<SquareMatrix(const RingElement&)>;

// γ factors whose ordered product telescopes to α(X); c_i b_i must sum to 1.
std::vector<SquareMatrix> splice_telescoping(const SquareMatrix& alpha, int xvar,
                                             const std::vector<RingElement>& c,
                                             const std::vector<RingElement>& b);

// Least N ≤ bound with α(a^N X) = β(a^N X).
std::optional<int> find_dilation_exponent(const SquareMatrix& alpha, const SquareMatrix& beta, int xvar,
                                          const RingElement& a, int bound);

// Substitutes var -> value in every entry.
SquareMatrix substitute_matrix(const SquareMatrix& m, int var, const RingElement& value);

}  // namespace transvect
