#pragma once

#include <optional>

#include "transvect/matrix.hpp"

namespace transvect {

enum class Family { Linear, Symplectic };

// ge_ij(arg): E_ij(λ) for the linear family, se_ij(z) for the symplectic one.
struct GeneratorAtom {
    Family family = Family::Linear;
    int i = 0;
    int j = 0;
    RingElement arg;
    bool inverted = false;

    RingElement effective_arg() const { return inverted ? -arg : arg; }
    GeneratorAtom inverse() const;
    GeneratorAtom normalized() const;  // drops the inverted flag
    std::string to_string() const;
};

GeneratorAtom linear_atom(int i, int j, RingElement arg);
GeneratorAtom symplectic_atom(int i, int j, RingElement arg);

enum class WordClass { Plain, Relative, FirstRowCol };

struct GeneratorWord {
    Ring ring;
    int size = 0;  // matrix dimension
    std::vector<GeneratorAtom> atoms;
    WordClass tag = WordClass::Plain;
    std::optional<Ideal> ideal;

    GeneratorWord() = default;
    GeneratorWord(Ring r, int n) : ring(std::move(r)), size(n) {}

    GeneratorWord inverse() const;  // formal inverse, same tag
    GeneratorWord& append(const GeneratorWord& other);
    GeneratorWord& push(GeneratorAtom a);
    std::string to_string() const;
};

int sigma(int i);

SquareMatrix elem_linear(const Ring& r, int n, int i, int j, const RingElement& lambda);
// Symplectic generator of size 2n.
SquareMatrix elem_symplectic(const Ring& r, int n, int i, int j, const RingElement& z);

void check_atom(const GeneratorAtom& a, int size);
SquareMatrix atom_matrix(const GeneratorAtom& a, int size);
// m := m * atom (column operations) and m := atom * m (row operations).
void apply_right(SquareMatrix& m, const GeneratorAtom& a);
void apply_left(const GeneratorAtom& a, SquareMatrix& m);
SquareMatrix eval_word(const GeneratorWord& w);
SquareMatrix eval_atoms(const Ring& r, int size, const std::vector<GeneratorAtom>& atoms);

// Checks the shape promised by the class tag; throws std::invalid_argument with a reason.
void validate_tag(const GeneratorWord& w);

// ge_ij(a) ge_ji(x) ge_ij(-a), tagged relative(I).
GeneratorWord relative_generator(Family f, int size, int i, int j, const RingElement& a, const RingElement& x,
                                 const Ideal& I);

// Sign convention for the rho/mu block matrices and their decompositions.
// Corrected: blocks and decompositions that are symplectic and exact.
// Printed: the matrices and products exactly as displayed in the source text.
enum class Convention { Corrected, Printed };

using Row = std::vector<RingElement>;

SquareMatrix rho_matrix(const Row& q, const RingElement& alpha, const AlternatingForm& phi,
                        Convention c = Convention::Corrected);
SquareMatrix mu_matrix(const Row& q, const RingElement& beta, const AlternatingForm& phi,
                       Convention c = Convention::Corrected);
GeneratorWord decompose_rho(const Row& q, const RingElement& alpha, Convention c = Convention::Corrected);
GeneratorWord decompose_mu(const Row& q, const RingElement& beta, Convention c = Convention::Corrected);

// (I - v^t u φ - u^t v φ)(I - α u^t u φ); requires u φ v^t = 0.
SquareMatrix bass_symplectic_transvection(const Row& u, const Row& v, const RingElement& alpha,
                                          const AlternatingForm& phi);

enum class LinearTransvectionKind { Ex, EStar };
// Ex: [[1, x], [0, I]]; EStar: [[1, 0], [y^t, I]].
SquareMatrix elementary_linear_transvection(LinearTransvectionKind k, const Row& vec);
GeneratorWord linear_transvection_word(LinearTransvectionKind k, const Row& vec);

nlohmann::json word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const nlohmann::json& j, const Ring& r, int size);
// Inline form "S:2,1:3;S:3,1:1".
GeneratorWord parse_inline_word(const std::string& text, const Ring& r, int size);

}  // namespace transvect
