#include "transvect/matrix.hpp"

#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace transvect {

SquareMatrix::SquareMatrix(Ring ring, int n) : ring_(std::move(ring)), n_(n) {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    e_.assign(static_cast<std::size_t>(n) * n, ring_.zero());
}

SquareMatrix SquareMatrix::identity(const Ring& ring, int n) {
    SquareMatrix m(ring, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = ring.one();
    return m;
}

void SquareMatrix::require_compatible(const SquareMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    if (ring_ != o.ring_) throw std::invalid_argument("matrix ring mismatch");
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    require_compatible(o);
    SquareMatrix out(ring_, n_);
    for (int i = 1; i <= n_; ++i) {
        for (int k = 1; k <= n_; ++k) {
            const RingElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 1; j <= n_; ++j) {
                const RingElement& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
    require_compatible(o);
    SquareMatrix out = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] += o.e_[k];
    return out;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
    require_compatible(o);
    SquareMatrix out = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] -= o.e_[k];
    return out;
}

SquareMatrix SquareMatrix::operator-() const {
    SquareMatrix out = *this;
    for (auto& x : out.e_) x = -x;
    return out;
}

SquareMatrix SquareMatrix::scaled(const RingElement& c) const {
    SquareMatrix out = *this;
    for (auto& x : out.e_) x = x * c;
    return out;
}

bool SquareMatrix::operator==(const SquareMatrix& o) const {
    return n_ == o.n_ && ring_ == o.ring_ && e_ == o.e_;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix out(ring_, n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool SquareMatrix::is_identity() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

bool SquareMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::string SquareMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= n_; ++i) {
        os << "[";
        for (int j = 1; j <= n_; ++j) os << (j > 1 ? ", " : "") << at(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

std::string SquareMatrix::canonical() const {
    std::string s = ring_.to_string() + "|" + std::to_string(n_);
    for (const auto& x : e_) s += "|" + x.to_string();
    return s;
}

SquareMatrix direct_sum(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("matrix ring mismatch");
    int n = a.size() + b.size();
    SquareMatrix out(a.ring(), n);
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 1; i <= b.size(); ++i)
        for (int j = 1; j <= b.size(); ++j) out.at(a.size() + i, a.size() + j) = b.at(i, j);
    return out;
}

std::vector<RingElement> row_times(const std::vector<RingElement>& v, const SquareMatrix& m) {
    if (static_cast<int>(v.size()) != m.size()) throw std::invalid_argument("vector/matrix size mismatch");
    std::vector<RingElement> out(v.size(), m.ring().zero());
    for (int k = 1; k <= m.size(); ++k) {
        if (v[k - 1].is_zero()) continue;
        for (int j = 1; j <= m.size(); ++j) out[j - 1] += v[k - 1] * m.at(k, j);
    }
    return out;
}

bool is_alternating(const SquareMatrix& m) {
    for (int i = 1; i <= m.size(); ++i) {
        if (!m.at(i, i).is_zero()) return false;
        for (int j = i + 1; j <= m.size(); ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    }
    return true;
}

AlternatingForm::AlternatingForm(SquareMatrix m) : m_(std::move(m)) {
    if (m_.size() % 2 != 0) throw std::invalid_argument("alternating form needs even size");
    if (!is_alternating(m_)) throw std::invalid_argument("matrix is not alternating");
}

AlternatingForm standard_form(int n, const Ring& ring) {
    if (n < 1) throw std::invalid_argument("standard_form needs n >= 1");
    SquareMatrix m(ring, 2 * n);
    for (int i = 1; i <= n; ++i) {
        m.at(2 * i - 1, 2 * i) = ring.one();
        m.at(2 * i, 2 * i - 1) = -ring.one();
    }
    return AlternatingForm(m);
}

RingElement determinant(const SquareMatrix& m) {
    const int n = m.size();
    if (n > 20) throw std::invalid_argument("determinant size bound exceeded");
    // f[mask]: signed sum over injective assignments of the first popcount(mask)
    // rows to the columns in mask.
    std::vector<RingElement> f(std::size_t{1} << n, m.ring().zero());
    f[0] = m.ring().one();
    for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
        if (f[mask].is_zero()) continue;
        int row = std::popcount(mask) + 1;
        for (int c = 0; c < n; ++c) {
            if (mask & (1u << c)) continue;
            const RingElement& a = m.at(row, c + 1);
            if (a.is_zero()) continue;
            int above = std::popcount(mask >> (c + 1));
            RingElement t = f[mask] * a;
            f[mask | (1u << c)] += (above % 2) ? -t : t;
        }
    }
    return f[(1u << n) - 1];
}

SquareMatrix inverse_matrix(const SquareMatrix& m) {
    const int n = m.size();
    RingElement d = determinant(m);
    if (!d.is_unit()) throw std::invalid_argument("matrix is not invertible over its ring");
    RingElement dinv = d.inverse();
    SquareMatrix out(m.ring(), n);
    if (n == 1) {
        out.at(1, 1) = dinv;
        return out;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            SquareMatrix minor(m.ring(), n - 1);
            for (int r = 1, rr = 1; r <= n; ++r) {
                if (r == j) continue;
                for (int c = 1, cc = 1; c <= n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            RingElement cof = determinant(minor) * dinv;
            out.at(i, j) = ((i + j) % 2) ? -cof : cof;
        }
    return out;
}

namespace {

RingElement pf_rec(const SquareMatrix& m, std::uint32_t mask, std::unordered_map<std::uint32_t, RingElement>& memo) {
    if (mask == 0) return m.ring().one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int first = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << first);
    RingElement total = m.ring().zero();
    int k = 0;
    for (int j = first + 1; j < 32; ++j) {
        if (!(rest & (1u << j))) continue;
        ++k;
        const RingElement& a = m.at(first + 1, j + 1);
        if (a.is_zero()) continue;
        RingElement t = a * pf_rec(m, rest & ~(1u << j), memo);
        total += (k % 2 == 1) ? t : -t;
    }
    memo.emplace(mask, total);
    return total;
}

}  // namespace

RingElement pfaffian(const AlternatingForm& phi) {
    const SquareMatrix& m = phi.matrix();
    if (m.size() > 12) throw std::invalid_argument("pfaffian size bound (12) exceeded");
    std::unordered_map<std::uint32_t, RingElement> memo;
    return pf_rec(m, (1u << m.size()) - 1, memo);
}

bool is_symplectic(const SquareMatrix& m, const AlternatingForm& phi) {
    if (m.size() != phi.matrix().size()) throw std::invalid_argument("size mismatch");
    return m.transpose() * phi.matrix() * m == phi.matrix();
}

nlohmann::json matrix_to_json(const SquareMatrix& m, bool alternating) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    nlohmann::json j = {{"ring", m.ring().to_string()}, {"n", m.size()}, {"entries", rows}};
    if (alternating) j["alternating"] = true;
    return j;
}

SquareMatrix matrix_from_json(const nlohmann::json& j) {
    Ring r = Ring::parse(j.at("ring").get<std::string>());
    int n = j.at("n").get<int>();
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("entries row count != n");
    SquareMatrix m(r, n);
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows.at(i - 1);
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("entries column count != n");
        for (int k = 1; k <= n; ++k) {
            const auto& v = row.at(k - 1);
            m.at(i, k) = v.is_string() ? r.parse_element(v.get<std::string>()) : r.from_int(v.get<std::int64_t>());
        }
    }
    if (j.value("alternating", false) && !is_alternating(m)) throw std::invalid_argument("form is not alternating");
    return m;
}

std::string stable_hash(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace transvect
