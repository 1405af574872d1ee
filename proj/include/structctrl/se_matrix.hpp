#pragma once

#include <stdexcept>
#include <vector>

#include "structctrl/basis.hpp"
#include "structctrl/rational.hpp"

namespace structctrl {

/// Dense (n+1)x(n+1) representation of an element of se(n). Indices are
/// 1-based to match the vertex/entry numbering used throughout.
///
/// Invariants: the top-left n x n block is skew-symmetric and row n+1 is
/// identically zero. Operations below preserve them; validate() is the
/// explicit check used in tests.
template <class T>
class SeMatrix {
public:
    explicit SeMatrix(int n) : n_(n), a_(static_cast<std::size_t>((n + 1) * (n + 1)), T{}) {
        if (n < 1) throw std::invalid_argument("SeMatrix: n must be positive");
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int rows() const noexcept { return n_ + 1; }

    [[nodiscard]] T& at(int r, int c) { return a_[index(r, c)]; }
    [[nodiscard]] const T& at(int r, int c) const { return a_[index(r, c)]; }

    [[nodiscard]] bool validate() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (!(at(i, j) == -at(j, i))) return false;
        for (int c = 1; c <= n_ + 1; ++c)
            if (!(at(n_ + 1, c) == T{})) return false;
        return true;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == T{})) return false;
        return true;
    }

    SeMatrix& operator+=(const SeMatrix& o) {
        require_same_n(o);
        for (std::size_t p = 0; p < a_.size(); ++p) a_[p] += o.a_[p];
        return *this;
    }

    SeMatrix& operator-=(const SeMatrix& o) {
        require_same_n(o);
        for (std::size_t p = 0; p < a_.size(); ++p) a_[p] -= o.a_[p];
        return *this;
    }

    SeMatrix& operator*=(const T& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend SeMatrix operator+(SeMatrix a, const SeMatrix& b) { return a += b; }
    friend SeMatrix operator-(SeMatrix a, const SeMatrix& b) { return a -= b; }
    friend SeMatrix operator*(const T& s, SeMatrix m) { return m *= s; }

    friend bool operator==(const SeMatrix&, const SeMatrix&) = default;

    void require_same_n(const SeMatrix& o) const {
        if (o.n_ != n_) throw std::invalid_argument("SeMatrix: dimension mismatch");
    }

private:
    [[nodiscard]] std::size_t index(int r, int c) const {
        if (r < 1 || r > n_ + 1 || c < 1 || c > n_ + 1)
            throw std::out_of_range("SeMatrix: index out of range");
        return static_cast<std::size_t>(r - 1) * (n_ + 1) + (c - 1);
    }

    int n_;
    std::vector<T> a_;
};

/// Matrix form of a basis element.
template <class T>
[[nodiscard]] SeMatrix<T> dense_of(const BasisElement& b) {
    SeMatrix<T> m(b.n());
    m.at(b.row(), b.col()) = T(1);
    if (b.kind() == BasisElement::Kind::rotation) m.at(b.col(), b.row()) = T(-1);
    return m;
}

/// Lie bracket [A, B] = AB - BA.
template <class T>
[[nodiscard]] SeMatrix<T> dense_bracket(const SeMatrix<T>& a, const SeMatrix<T>& b) {
    a.require_same_n(b);
    const int sz = a.rows();
    SeMatrix<T> out(a.n());
    for (int r = 1; r <= sz; ++r)
        for (int c = 1; c <= sz; ++c) {
            T acc{};
            for (int k = 1; k <= sz; ++k)
                acc += a.at(r, k) * b.at(k, c) - b.at(r, k) * a.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

using SeMatrixQ = SeMatrix<Rational>;
using SeMatrixD = SeMatrix<double>;

}  // namespace structctrl
