#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace structctrl {

using IndexPair = std::pair<int, int>;

/// The index set of permitted nonzero entries of structured matrices in se(n).
/// Entries are stored canonically as (i, j) with 1 <= i <= n and i < j <= n+1;
/// j <= n marks a rotation degree of freedom, j = n+1 a translation one.
///
/// Construction validates and canonicalizes raw input: a pair (j, i) with
/// j > i and both indices <= n names the same degree of freedom as (i, j)
/// and is swapped (reported via `warnings`); duplicates after
/// canonicalization are dropped likewise. A pair whose first index is n+1
/// cannot be a degree of freedom at all (row n+1 of se(n) is identically
/// zero) and is rejected.
class Pattern {
public:
    Pattern(int n, const std::vector<IndexPair>& raw_entries,
            std::vector<std::string>* warnings = nullptr);

    static Pattern empty(int n) { return Pattern(n, {}); }

    /// All of {(i,j) : i < j <= n+1}, i.e. every permitted entry.
    static Pattern full(int n) { return Pattern(n, all_entries(n)); }

    /// Every permitted entry position in canonical order: rotation pairs in
    /// lexicographic order, then translation pairs (k, n+1) by k. The order
    /// matches coordinate_index of the corresponding basis elements.
    static std::vector<IndexPair> all_entries(int n);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::set<IndexPair>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool contains(int i, int j) const { return entries_.count({i, j}) != 0; }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend std::strong_ordering operator<=>(const Pattern&, const Pattern&) = default;

private:
    int n_;
    std::set<IndexPair> entries_;
};

}  // namespace structctrl
