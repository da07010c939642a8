#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freedl.hpp"

namespace wh {

/* Rightward transport of a barred operation past an unbarred one:
**   bQ^r Q^s = sum_t [ C(s-r+t, s-t) + C(s-r+t, 2t-r) ] Q^{r+s-t} bQ^t.
** Same coefficients as the bar Adem relation; used for every r, s.
** t_min is the caller's survival bound. */
std::vector<std::pair<int, int>> mixed_adem_pair(int r, int s, int t_min);

struct MapOptions {
    BarOptions bar;
    EkProvider ek;  // must cover every (k, degree) the maps touch
};

/* (d_k)_*: A_{k+1} -> A_k.  On a generator Q^J sigma^{k+1} bQ^I iota_1,
** expand e_{k+1} on the wreath lift of I and push each term
** Q^{i'_1} wr ... to Q^J Q^{i'_1} sigma^k bQ^{i'_2} ... iota_1, then
** normalize bar block and prefix.  Extended multiplicatively. */
AlgebraElement d_star(int k, const DLMonomial& g, const MapOptions& opt);
AlgebraElement d_star(int k, const AlgebraElement& x, const MapOptions& opt);

/* (delta_k)_*: A_k -> A_{k+1} on generators only.  Bars each prefix
** entry in turn, transports it to the suspension block with the mixed
** Adem relation, and converts bQ^t sigma^k into sigma^{k+1} bQ^t.
** Empty prefix yields 0. */
AlgebraElement delta_star(int k, const DLMonomial& g, const MapOptions& opt);

/* Canonical factorization of a basis monomial into words: each distinct
** generator with multiplicity e contributes one admissible word per set
** bit of e, the 2^a-th power m^{2^a} written as Q^{2^{a-1}|m|} ... Q^{|m|} m.
** (Squares are excess-equal words, so delta acts on them through the
** barring formula rather than dying on a product.) */
std::vector<DLMonomial> word_factors(const Product& p);

/* Weight-graded multiplicative extension of delta: the associated graded
** of (delta_k)_* is a map of algebras with respect to the word
** factorization above. */
AlgebraElement delta_star_e0(int k, const AlgebraElement& x, const MapOptions& opt);

/* (alpha_k)_* Q^j sigma^k bQ^I iota_1 = sigma^{k+1} bQ^j bQ^I iota_1,
** and the same map routed through the wreath splitting. */
GenSum alpha_star(int k, int j, const BarWord& I, const BarOptions& opt = {});
GenSum alpha_star_split(int k, int j, const BarWord& I, const MapOptions& opt);

enum class MapTag { D, Delta };

/* Matrix of a map on indecomposables between the generator bases of one
** (degree, weight) bidegree; images[j] = image of source[j]. */
struct E0Matrix {
    MapTag tag = MapTag::D;
    int k = 0;
    int degree = 0;
    long long weight = 0;
    std::vector<DLMonomial> source;
    std::vector<DLMonomial> target;
    std::vector<F2Vector> images;
};

E0Matrix e0_matrix(MapTag tag, int k, int degree, long long weight, const MapOptions& opt);

/* E0(second) o E0(first); bases must be compatible. */
std::vector<F2Vector> e0_compose(const E0Matrix& second, const E0Matrix& first);

int e0_rank(const std::vector<F2Vector>& images);

/* Matrix of d or delta on one full weight-graded piece over the given
** monomial bases; images[j] = image of source[j]. */
std::vector<F2Vector> piece_images(MapTag tag, int k, const std::vector<Product>& source,
                                   const std::vector<Product>& target,
                                   const MapOptions& opt);

}  // namespace wh
