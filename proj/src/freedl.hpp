#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "bar.hpp"
#include "wreath.hpp"

namespace wh {

/* sigma^k bQ^{I} iota_1 with I normal of length k: an algebra generator
** of the level-k algebra A_k.  Carries degree k + sum(i-1) + 1 and
** weight 2^k. */
struct GenClass {
    int k = 0;
    BarWord bars;

    int degree() const { return k + bars.degree(1); }
    long long weight() const { return 1LL << k; }
    friend std::strong_ordering operator<=>(const GenClass& a, const GenClass& b);
    bool operator==(const GenClass&) const = default;
};

using GenSum = std::set<GenClass>;

/* Q^{J} applied to a generator class, in GENERATOR form: J admissible
** (j_s <= 2 j_{s+1}) with excess e(J) = j_1 - (j_2+...+j_l) > degree of
** the base.  Degree = sum(J) + degree(base), weight = 2^{|J|} * 2^k. */
struct DLMonomial {
    std::vector<int> ops;
    GenClass base;

    int degree() const;
    long long weight() const { return base.weight() << ops.size(); }
    friend std::strong_ordering operator<=>(const DLMonomial& a, const DLMonomial& b);
    bool operator==(const DLMonomial&) const = default;
};

/* Commutative product of monomials in generator form; factors sorted,
** squares stored as repeated factors.  Empty product is the unit. */
struct Product {
    std::vector<DLMonomial> factors;

    int degree() const;
    long long weight() const;
    friend std::strong_ordering operator<=>(const Product& a, const Product& b);
    bool operator==(const Product&) const = default;
};

/* F_2-linear combination of products. */
struct AlgebraElement {
    std::set<Product> terms;

    bool is_zero() const { return terms.empty(); }
    static AlgebraElement zero() { return {}; }
    static AlgebraElement unit();
    static AlgebraElement from(const DLMonomial& m);
    static AlgebraElement from(const GenClass& g);
    AlgebraElement& operator+=(const AlgebraElement& other);
    bool operator==(const AlgebraElement&) const = default;
};

/* One Adem move for inadmissible Q^r Q^s, r > 2s:
**   Q^r Q^s = sum_i C(i-s-1, 2i-r) Q^{r+s-i} Q^i,
** supported on ceil(r/2) <= i <= r-s-1; every output pair is admissible. */
std::vector<std::pair<int, int>> dl_adem_pair(int r, int s);

/* Q^{J} x normalized by Adem moves, instability (Q^j y = 0 for j < |y|),
** squares (Q^{|y|} y = y^2), and Q^j(y^2) = (Q^{j/2} y)^2 for even j.
** J applies right to left. */
AlgebraElement apply_q(int j, const AlgebraElement& x);
AlgebraElement apply_q_seq(const std::vector<int>& ops, const AlgebraElement& x);

AlgebraElement algebra_product(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_square(const AlgebraElement& a);

/* All generators Q^J sigma^k bQ^I iota_1 of the given total degree,
** in the global monomial order. */
std::vector<DLMonomial> enumerate_generators(int k, int degree);

/* Single-generator terms of x as indices into the given sorted
** generator basis; product terms (squares included) are dropped. */
F2Vector indecomposables(const AlgebraElement& x, const std::vector<DLMonomial>& basis);

/* Monomial basis of one weight-graded piece: all products of generators
** (repeats allowed) with the given total degree and weight, sorted. */
std::vector<Product> enumerate_monomials(int k, int degree, long long weight);

/* Word basis of one piece: admissible Q^J sigma^k bQ^I with excess
** e(J) >= degree(base) -- the generators together with the 2^a-th powers
** of generators, each written as a single admissible word. */
std::vector<DLMonomial> enumerate_words(int k, int degree, long long weight);

/* Coordinates of x over a sorted monomial basis; throws if a term of x
** falls outside the basis. */
F2Vector element_in_basis(const AlgebraElement& x, const std::vector<Product>& basis);

/* (p_k)_*: nu_k followed by the k-fold suspension. */
GenSum p_star(int k, const WreathWord& w, const BarOptions& opt = {});
GenSum p_star(int k, const WreathSum& s, const BarOptions& opt = {});

}  // namespace wh
