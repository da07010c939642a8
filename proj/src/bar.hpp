#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2.hpp"

namespace wh {

/* Thrown when a rewrite exceeds its fuel budget; carries the offender. */
struct FuelError : std::runtime_error {
    explicit FuelError(const std::string& what) : std::runtime_error(what) {}
};

/* A word bQ^{i1} ... bQ^{ik} acting on iota_n.  bQ^j raises degree by j-1,
** so degree = sum(i_m - 1) + n, an invariant of every rewrite step. */
struct BarWord {
    std::vector<int> idx;

    int length() const { return static_cast<int>(idx.size()); }
    int degree(int n = 1) const;
    friend std::strong_ordering operator<=>(const BarWord& a, const BarWord& b);
    bool operator==(const BarWord&) const = default;
};

using BarSum = std::set<BarWord>;

/* A word is normal iff i_s >= 2 i_{s+1} + 1 for all s and i_k >= n. */
bool bar_is_normal(const BarWord& w, int n = 1);

/* True iff some suffix (j_p,...,j_k) has j_p < j_{p+1} + ... + j_k + n,
** which forces the word to vanish. */
bool bar_is_killed(const BarWord& w, int n = 1);

/* One Adem move on an inadmissible pair (r, s), r <= 2s:
**   bQ^r bQ^s = sum_t [ C(s-r+t, s-t) + C(s-r+t, 2t-r) ] bQ^{r+s-t} bQ^t.
** The formal sum is infinite below; t_min is the caller's kill bound
** (suffix sum + n), below which every term dies by the suffix relation.
** Returns the surviving pairs (r+s-t, t), t descending from min(s, r-s-1). */
std::vector<std::pair<int, int>> bar_adem_pair(int r, int s, int t_min);

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

struct BarOptions {
    int n = 1;
    std::uint64_t fuel = 1'000'000;  // rewrite steps per normalization
    RewriteStrategy strategy = RewriteStrategy::LeftmostFirst;
};

/* Full normalization to the admissible basis.  Every returned word is
** normal; the degree of every term equals degree(w). */
BarSum normalize_bar(const BarWord& w, const BarOptions& opt = {});
BarSum normalize_bar(const BarSum& s, const BarOptions& opt = {});

/* All normal words of the given length and bar degree, in the global
** monomial order.  k = 0 yields the empty word in degree n only. */
std::vector<BarWord> enumerate_bar_basis(int k, int degree, int n = 1);

}  // namespace wh
