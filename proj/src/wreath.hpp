#pragma once

#include <compare>
#include <functional>
#include <set>
#include <vector>

#include "bar.hpp"
#include "f2.hpp"

namespace wh {

/* A word Q^{i1} wr ... wr Q^{ik} iota_1 spanning the summand of the
** homology of the k-fold wreath extended power of S^1.  Q^i raises
** degree by i, so degree = i1 + ... + ik + 1. */
struct WreathWord {
    std::vector<int> idx;

    int length() const { return static_cast<int>(idx.size()); }
    int degree() const;
    friend std::strong_ordering operator<=>(const WreathWord& a, const WreathWord& b);
    bool operator==(const WreathWord&) const = default;
};

using WreathSum = std::set<WreathWord>;

/* Spanning condition: i_s >= i_{s+1} + ... + i_k + 1 for every s.
** Words violating it are zero. */
bool wreath_is_valid(const WreathWord& w);

/* Kuhn's operator T_s (1-based, 1 <= s <= k-1): replaces positions
** (s, s+1) = (r, q) by (r+q-t, t) with coefficient
** C(q-r+t, q-t) + C(q-r+t, 2t-r); invalid outputs are dropped. */
WreathSum apply_T(int s, const WreathWord& w);

/* The idempotent e_k on one graded piece: basis of the valid words of
** the given length and degree (global order) together with the matrix
** rows e_k(basis[j]).  e_k is realized as the idempotent power of the
** composite T_1 T_2 ... T_{k-1}. */
struct EkBlock {
    int k = 0;
    int degree = 0;
    std::vector<WreathWord> basis;
    std::vector<F2Vector> rows;
    int iterations = 0;  // power at which the composite became idempotent

    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(const WreathWord& w) const;  // -1 if absent
    WreathSum apply(const WreathWord& w) const;
    WreathSum apply(const WreathSum& s) const;
};

std::vector<WreathWord> enumerate_wreath_basis(int k, int degree);

/* Builds e_k on the (k, degree) piece.  max_power bounds the search for
** the idempotent power (0 means a generous default). */
EkBlock compute_ek_block(int k, int degree, int max_power = 0);

/* Provider of e_k blocks; the engine routes this through its cache. */
using EkProvider = std::function<const EkBlock&(int k, int degree)>;

/* nu_k: replace each Q^i by bQ^i and normalize.  nu_k T_s = nu_k. */
BarSum nu_k(const WreathWord& w, const BarOptions& opt = {});
BarSum nu_k(const WreathSum& s, const BarOptions& opt = {});

/* (iota_k)_*: e_k applied to the wreath lift of a normal word. */
WreathSum iota_star(const EkBlock& block, const BarWord& normal_word);

}  // namespace wh
