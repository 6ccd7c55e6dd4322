#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpsym/rational.hpp"

namespace qpsym {

/// Square integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }
    BigInt& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    IntMatrix operator-() const {
        IntMatrix r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix size mismatch");
        IntMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                if (at(i, k) == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool operator<(const IntMatrix& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] < o.e_[i]) return true;
            if (o.e_[i] < e_[i]) return false;
        }
        return false;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    BigInt det() const {
        IntMatrix a = *this;
        BigInt prev = 1;
        int sgn = 1;
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            if (a.at(k, k) == 0) {
                std::size_t r = k + 1;
                while (r < n_ && a.at(r, k) == 0) ++r;
                if (r == n_) return 0;
                for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(k, j), a.at(r, j));
                sgn = -sgn;
            }
            for (std::size_t i = k + 1; i < n_; ++i) {
                for (std::size_t j = k + 1; j < n_; ++j)
                    a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
                a.at(i, k) = 0;
            }
            prev = a.at(k, k);
        }
        BigInt d = a.at(n_ - 1, n_ - 1);
        return sgn < 0 ? BigInt(-d) : d;
    }

    bool is_unimodular() const {
        BigInt d = det();
        return d == 1 || d == -1;
    }

    /// Inverse of a unimodular matrix; integral because det = +-1.
    IntMatrix inverse_unimodular() const;

    /// Characteristic polynomial, coefficients low-to-high, monic of degree n.
    std::vector<BigInt> char_poly() const;

    /// Row-major textual form: rows separated by ';', entries by ','.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ';';
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) s += ',';
                s += at(i, j).str();
            }
        }
        return s;
    }

    static IntMatrix parse(const std::string& text);

private:
    std::size_t n_;
    std::vector<BigInt> e_;
};

namespace detail {

/// Gauss-Jordan elimination over Q on an augmented matrix (rows x (cols+k)).
/// Returns the rank over the first `cols` columns; on exit pivot columns are
/// reduced and every non-pivot row is zero on the left block.
inline std::size_t gauss_jordan(std::vector<std::vector<Rational>>& m, std::size_t cols) {
    std::size_t rows = m.size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = m[rank][col].inverse();
        for (auto& v : m[rank]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Rank of a rational matrix, by exact elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    return detail::gauss_jordan(m, m[0].size());
}

/// Solves A X = B exactly for X (cols x k), where A is rows x cols with
/// full column rank. Returns nullopt if the system is inconsistent or the
/// solution is not unique.
inline std::optional<std::vector<std::vector<Rational>>> solve_linear(
    const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
    std::size_t rows = a.size();
    if (rows == 0 || b.size() != rows) return std::nullopt;
    std::size_t cols = a[0].size();
    std::size_t k = b[0].size();
    std::vector<std::vector<Rational>> aug(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        aug[r] = a[r];
        aug[r].insert(aug[r].end(), b[r].begin(), b[r].end());
    }
    std::size_t rank = detail::gauss_jordan(aug, cols);
    if (rank < cols) return std::nullopt;
    // rows below the rank must be entirely zero, otherwise inconsistent
    for (std::size_t r = rank; r < rows; ++r)
        for (std::size_t c = cols; c < cols + k; ++c)
            if (!aug[r][c].is_zero()) return std::nullopt;
    // with full column rank and Gauss-Jordan form, row i holds e_i | x_i
    std::vector<std::vector<Rational>> x(cols, std::vector<Rational>(k));
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t col = 0;
        while (col < cols && aug[r][col].is_zero()) ++col;
        for (std::size_t c = 0; c < k; ++c) x[col][c] = aug[r][cols + c];
    }
    return x;
}

inline IntMatrix IntMatrix::inverse_unimodular() const {
    BigInt d = det();
    if (d != 1 && d != -1) throw NotUnimodular("matrix determinant is not +-1");
    std::vector<std::vector<Rational>> aug(n_, std::vector<Rational>(2 * n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) aug[i][j] = Rational(at(i, j));
        aug[i][n_ + i] = Rational(1);
    }
    detail::gauss_jordan(aug, n_);
    IntMatrix inv(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Rational& v = aug[i][n_ + j];
            if (!v.is_integer()) throw NotUnimodular("inverse is not integral");
            inv.at(i, j) = v.numerator();
        }
    return inv;
}

inline std::vector<BigInt> IntMatrix::char_poly() const {
    // Faddeev-LeVerrier over Q; the coefficients of an integer matrix come
    // out integral.
    std::size_t n = n_;
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1); // M_0 = I
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = B * (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
        if (k > 1)
            for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < n; ++p) {
                if (at(i, p) == 0) continue;
                Rational aip{at(i, p)};
                for (std::size_t j = 0; j < n; ++j) next[i][j] += aip * m[p][j];
            }
        m = std::move(next);
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
        c[n - k] = -(tr / Rational(BigInt(k)));
    }
    std::vector<BigInt> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (!c[i].is_integer()) throw Error("characteristic polynomial not integral");
        out[i] = c[i].numerator();
    }
    return out;
}

inline IntMatrix IntMatrix::parse(const std::string& text) {
    std::vector<std::vector<BigInt>> rows(1);
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) throw ParseError("empty matrix entry in '" + text + "'");
        rows.back().push_back(Rational::parse_int(token));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush_token();
        } else if (ch == ';') {
            flush_token();
            rows.emplace_back();
        } else if (ch != ' ') {
            token += ch;
        }
    }
    flush_token();
    std::size_t n = rows.size();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ParseError("matrix is not square: '" + text + "'");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

} // namespace qpsym
