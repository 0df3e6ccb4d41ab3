#pragma once

#include <json.hpp>

#include "transvect/ring.hpp"

namespace transvect {

// Dense square matrix with 1-based accessors.
class SquareMatrix {
public:
    SquareMatrix() = default;
    SquareMatrix(Ring ring, int n);  // zero matrix

    static SquareMatrix identity(const Ring& ring, int n);

    const Ring& ring() const { return ring_; }
    int size() const { return n_; }

    RingElement& at(int i, int j) { return e_[(i - 1) * n_ + (j - 1)]; }
    const RingElement& at(int i, int j) const { return e_[(i - 1) * n_ + (j - 1)]; }

    SquareMatrix operator*(const SquareMatrix& o) const;
    SquareMatrix operator+(const SquareMatrix& o) const;
    SquareMatrix operator-(const SquareMatrix& o) const;
    SquareMatrix operator-() const;
    SquareMatrix scaled(const RingElement& c) const;
    bool operator==(const SquareMatrix& o) const;
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

    SquareMatrix transpose() const;
    bool is_identity() const;
    bool is_zero() const;
    // Entrywise map into another ring (e.g. reduction or localization).
    template <class F>
    SquareMatrix map(const Ring& target, F&& f) const {
        SquareMatrix out(target, n_);
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = f(e_[k]);
        return out;
    }

    std::string to_string() const;
    // Row-major canonical text used for hashing reports.
    std::string canonical() const;

private:
    void require_compatible(const SquareMatrix& o) const;
    Ring ring_;
    int n_ = 0;
    std::vector<RingElement> e_;
};

// Block diagonal A ⊥ B.
SquareMatrix direct_sum(const SquareMatrix& a, const SquareMatrix& b);

// Entries of a row vector times a matrix, and matrix times column vector.
std::vector<RingElement> row_times(const std::vector<RingElement>& v, const SquareMatrix& m);

class AlternatingForm {
public:
    explicit AlternatingForm(SquareMatrix m);  // validates
    const SquareMatrix& matrix() const { return m_; }
    int half_size() const { return m_.size() / 2; }

private:
    SquareMatrix m_;
};

bool is_alternating(const SquareMatrix& m);
AlternatingForm standard_form(int n, const Ring& ring);
RingElement determinant(const SquareMatrix& m);
// Adjugate over the determinant; throws unless the determinant is a unit of the base ring.
SquareMatrix inverse_matrix(const SquareMatrix& m);
RingElement pfaffian(const AlternatingForm& phi);
bool is_symplectic(const SquareMatrix& m, const AlternatingForm& phi);

nlohmann::json matrix_to_json(const SquareMatrix& m, bool alternating = false);
SquareMatrix matrix_from_json(const nlohmann::json& j);

std::string stable_hash(const std::string& text);  // hex FNV-1a 64

}  // namespace transvect
