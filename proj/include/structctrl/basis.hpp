#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace structctrl {

/// Dimension of se(n) as a vector space: n(n+1)/2.
[[nodiscard]] constexpr int se_dimension(int n) noexcept { return n * (n + 1) / 2; }

/// One element of the standard basis of se(n), viewed as an (n+1)x(n+1) matrix:
/// either a rotation generator in the plane (i,j) with 1 <= i < j <= n (value +1
/// at (i,j), -1 at (j,i)), or a translation generator along axis k with
/// 1 <= k <= n (value +1 at (k, n+1)).
class BasisElement {
public:
    enum class Kind { rotation, translation };

    static BasisElement rotation(int n, int i, int j) {
        if (n < 1) throw std::invalid_argument("BasisElement: n must be positive");
        if (i < 1 || j <= i || j > n)
            throw std::invalid_argument("BasisElement: rotation indices must satisfy 1 <= i < j <= n");
        return BasisElement(n, Kind::rotation, i, j);
    }

    static BasisElement translation(int n, int k) {
        if (n < 1) throw std::invalid_argument("BasisElement: n must be positive");
        if (k < 1 || k > n)
            throw std::invalid_argument("BasisElement: translation index must satisfy 1 <= k <= n");
        return BasisElement(n, Kind::translation, k, n + 1);
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] int n() const noexcept { return n_; }

    /// Rotation plane indices, i < j. Valid only for rotations.
    [[nodiscard]] int i() const noexcept { return a_; }
    [[nodiscard]] int j() const noexcept { return b_; }

    /// Translation axis. Valid only for translations.
    [[nodiscard]] int k() const noexcept { return a_; }

    /// The nonzero matrix position (row, col) holding +1.
    [[nodiscard]] int row() const noexcept { return a_; }
    [[nodiscard]] int col() const noexcept { return b_; }

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
    // Canonical order: rotations in lexicographic (i,j) order first, then
    // translations by k. Matches coordinate_index below.
    friend std::strong_ordering operator<=>(const BasisElement&, const BasisElement&) = default;

private:
    BasisElement(int n, Kind kind, int a, int b) noexcept : n_(n), kind_(kind), a_(a), b_(b) {}

    int n_;
    Kind kind_;
    int a_;
    int b_;
};

/// Position of a basis element in the canonical coordinate order,
/// in [0, se_dimension(n)).
[[nodiscard]] int coordinate_index(const BasisElement& b);

/// The full standard basis of se(n) in canonical order.
[[nodiscard]] std::vector<BasisElement> basis_elements(int n);

/// A structural Lie bracket result: 0 or +/- a single basis element.
struct SignedBasisTerm {
    int coefficient = 0;  // -1, 0, or +1; 0 iff element is absent
    std::optional<BasisElement> element;

    static SignedBasisTerm zero() noexcept { return {}; }

    static SignedBasisTerm term(int sign, BasisElement b) {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("SignedBasisTerm: sign must be +1 or -1");
        return {sign, std::move(b)};
    }

    [[nodiscard]] bool is_zero() const noexcept { return coefficient == 0; }

    SignedBasisTerm operator-() const noexcept { return {-coefficient, element}; }

    friend bool operator==(const SignedBasisTerm&, const SignedBasisTerm&) = default;
};

/// A subspace of se(n) spanned by a subset of the standard basis.
/// Set semantics; all elements must share the same n.
class CanonicalSubspace {
public:
    explicit CanonicalSubspace(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("CanonicalSubspace: n must be positive");
    }

    CanonicalSubspace(int n, std::set<BasisElement> generators) : CanonicalSubspace(n) {
        for (const auto& g : generators)
            if (g.n() != n)
                throw std::invalid_argument("CanonicalSubspace: element dimension mismatch");
        gens_ = std::move(generators);
    }

    /// Span of the whole standard basis, i.e. se(n) itself.
    static CanonicalSubspace full(int n) {
        CanonicalSubspace s(n);
        for (const auto& b : basis_elements(n)) s.gens_.insert(b);
        return s;
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] const std::set<BasisElement>& elements() const noexcept { return gens_; }
    [[nodiscard]] bool contains(const BasisElement& b) const { return gens_.count(b) != 0; }

    void insert(const BasisElement& b) {
        if (b.n() != n_) throw std::invalid_argument("CanonicalSubspace: element dimension mismatch");
        gens_.insert(b);
    }

    friend bool operator==(const CanonicalSubspace&, const CanonicalSubspace&) = default;

private:
    int n_;
    std::set<BasisElement> gens_;
};

}  // namespace structctrl
