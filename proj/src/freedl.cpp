#include "freedl.hpp"

#include <algorithm>
#include <stdexcept>

namespace wh {

std::strong_ordering operator<=>(const GenClass& a, const GenClass& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (auto c = a.k <=> b.k; c != 0)
        return c;
    return a.bars <=> b.bars;
}

int DLMonomial::degree() const
{
    int d = base.degree();
    for (int j : ops)
        d += j;
    return d;
}

std::strong_ordering operator<=>(const DLMonomial& a, const DLMonomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (auto c = a.weight() <=> b.weight(); c != 0)
        return c;
    if (auto c = a.base <=> b.base; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.ops.begin(), a.ops.end(),
                                                  b.ops.begin(), b.ops.end());
}

int Product::degree() const
{
    int d = 0;
    for (const DLMonomial& m : factors)
        d += m.degree();
    return d;
}

long long Product::weight() const
{
    long long w = 0;
    for (const DLMonomial& m : factors)
        w += m.weight();
    return w;
}

std::strong_ordering operator<=>(const Product& a, const Product& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (auto c = a.weight() <=> b.weight(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(),
                                                  b.factors.begin(), b.factors.end());
}

AlgebraElement AlgebraElement::unit()
{
    AlgebraElement e;
    e.terms.insert(Product{});
    return e;
}

AlgebraElement AlgebraElement::from(const DLMonomial& m)
{
    AlgebraElement e;
    e.terms.insert(Product{{m}});
    return e;
}

AlgebraElement AlgebraElement::from(const GenClass& g)
{
    return from(DLMonomial{{}, g});
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    toggle_all(terms, other.terms);
    return *this;
}

std::vector<std::pair<int, int>> dl_adem_pair(int r, int s)
{
    if (r <= 2 * s)
        throw std::invalid_argument("dl_adem_pair: pair already admissible");
    std::vector<std::pair<int, int>> out;
    int i_lo = (r + 1) / 2;
    for (int i = i_lo; i <= r - s - 1; ++i)
        if (binom2(i - s - 1, 2LL * i - r))
            out.emplace_back(r + s - i, i);
    return out;
}

AlgebraElement algebra_product(const AlgebraElement& a, const AlgebraElement& b)
{
    AlgebraElement out;
    for (const Product& p : a.terms) {
        for (const Product& q : b.terms) {
            Product pq;
            pq.factors.reserve(p.factors.size() + q.factors.size());
            std::merge(p.factors.begin(), p.factors.end(), q.factors.begin(),
                       q.factors.end(), std::back_inserter(pq.factors));
            toggle(out.terms, pq);
        }
    }
    return out;
}

AlgebraElement algebra_square(const AlgebraElement& a)
{
    // Over F_2 the cross terms of (sum)^2 cancel pairwise.
    AlgebraElement out;
    for (const Product& p : a.terms) {
        Product sq;
        sq.factors.reserve(2 * p.factors.size());
        for (const DLMonomial& m : p.factors) {
            sq.factors.push_back(m);
            sq.factors.push_back(m);
        }
        std::sort(sq.factors.begin(), sq.factors.end());
        toggle(out.terms, sq);
    }
    return out;
}

static AlgebraElement apply_q_monomial(int j, const DLMonomial& m);

/* Q^j on a single product term: a generator-form monomial or a power
** y^(2^e) held as repeated factors. */
static AlgebraElement apply_q_product(int j, const Product& p)
{
    if (p.factors.empty()) {
        // Unit in degree 0: Q^0 1 = 1, everything else vanishes.
        return j == 0 ? AlgebraElement::unit() : AlgebraElement::zero();
    }
    if (p.factors.size() == 1)
        return apply_q_monomial(j, p.factors.front());
    // Repeated-factor squares: Q^j(y^2) = (Q^{j/2} y)^2, 0 for odd j.
    // Sorted factors pair up adjacently iff the product is a square.
    bool is_square = p.factors.size() % 2 == 0;
    Product root;
    for (size_t i = 0; is_square && i < p.factors.size(); i += 2) {
        if (p.factors[i] == p.factors[i + 1])
            root.factors.push_back(p.factors[i]);
        else
            is_square = false;
    }
    if (!is_square)
        throw std::logic_error("apply_q: Q on a mixed product is not defined here");
    if (j % 2 != 0)
        return AlgebraElement::zero();
    AlgebraElement y;
    y.terms.insert(root);
    return algebra_square(apply_q(j / 2, y));
}

static AlgebraElement apply_q_monomial(int j, const DLMonomial& m)
{
    int d = m.degree();
    if (j < d)
        return AlgebraElement::zero();
    if (j == d)
        return algebra_square(AlgebraElement::from(m));
    if (m.ops.empty() || j <= 2 * m.ops.front()) {
        // Admissible prepend; excess is automatic from j > degree.
        DLMonomial out = m;
        out.ops.insert(out.ops.begin(), j);
        return AlgebraElement::from(out);
    }
    // Adem straightening: Q^j Q^{s} -> sum Q^{a} Q^{i} with a <= 2i.
    DLMonomial tail = m;
    int s = tail.ops.front();
    tail.ops.erase(tail.ops.begin());
    AlgebraElement out;
    for (auto [a, i] : dl_adem_pair(j, s))
        out += apply_q(a, apply_q_monomial(i, tail));
    return out;
}

AlgebraElement apply_q(int j, const AlgebraElement& x)
{
    AlgebraElement out;
    for (const Product& p : x.terms)
        out += apply_q_product(j, p);
    return out;
}

AlgebraElement apply_q_seq(const std::vector<int>& ops, const AlgebraElement& x)
{
    AlgebraElement out = x;
    for (size_t i = ops.size(); i-- > 0;)
        out = apply_q(ops[i], out);
    return out;
}

/* Admissible J with sum(J) = budget and excess > base_degree, built
** right to left; every entry exceeds the base degree (excess <= j_last). */
static void enumerate_ops_rec(int budget, int base_degree, std::vector<int>& tail,
                              std::vector<std::vector<int>>& out)
{
    if (!tail.empty()) {
        long long rest = 0;
        for (size_t i = 0; i + 1 < tail.size(); ++i)
            rest += tail[i];
        long long excess = tail.back() - rest;
        if (budget == 0 && excess > base_degree) {
            out.emplace_back(tail.rbegin(), tail.rend());
            // and keep extending: longer sequences use the same tail
        }
    }
    int next_min = base_degree + 1;
    int next_max = budget;
    if (!tail.empty()) {
        // Admissibility j_s <= 2 j_{s+1}; the new entry must also keep a
        // positive excess possible: j_new > sum(tail).
        long long sum_tail = 0;
        for (int i : tail)
            sum_tail += i;
        next_min = static_cast<int>(sum_tail) + base_degree + 1;
        next_max = std::min<long long>(budget, 2LL * tail.back());
    }
    for (int j = next_min; j <= next_max; ++j) {
        tail.push_back(j);
        enumerate_ops_rec(budget - j, base_degree, tail, out);
        tail.pop_back();
    }
}

std::vector<DLMonomial> enumerate_generators(int k, int degree)
{
    std::vector<DLMonomial> out;
    if (k < 0 || degree < 1)
        return out;
    // Bare classes: bar degree = degree - k.
    for (const BarWord& I : enumerate_bar_basis(k, degree - k))
        out.push_back(DLMonomial{{}, GenClass{k, I}});
    // Operated classes Q^J sigma^k bQ^I iota_1 with sum(J) = degree - |base|.
    for (int base_bar_degree = 1; base_bar_degree + k < degree; ++base_bar_degree) {
        int base_degree = base_bar_degree + k;
        int budget = degree - base_degree;
        std::vector<BarWord> bases = enumerate_bar_basis(k, base_bar_degree);
        if (bases.empty())
            continue;
        std::vector<std::vector<int>> seqs;
        std::vector<int> tail;
        enumerate_ops_rec(budget, base_degree, tail, seqs);
        for (const BarWord& I : bases)
            for (const auto& J : seqs)
                out.push_back(DLMonomial{J, GenClass{k, I}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

F2Vector indecomposables(const AlgebraElement& x, const std::vector<DLMonomial>& basis)
{
    F2Vector v;
    for (const Product& p : x.terms) {
        if (p.factors.size() != 1)
            continue;
        auto it = std::lower_bound(basis.begin(), basis.end(), p.factors.front());
        if (it == basis.end() || !(*it == p.factors.front()))
            throw std::logic_error("indecomposables: generator missing from basis");
        v.toggle(static_cast<int>(it - basis.begin()));
    }
    return v;
}

static void monomials_rec(const std::vector<DLMonomial>& gens, size_t start,
                          int deg_left, long long weight_left, Product& current,
                          std::vector<Product>& out)
{
    if (deg_left == 0 && weight_left == 0) {
        out.push_back(current);
        return;
    }
    for (size_t i = start; i < gens.size(); ++i) {
        if (gens[i].degree() > deg_left)
            break;  // gens sorted by degree first
        if (gens[i].weight() > weight_left)
            continue;
        current.factors.push_back(gens[i]);
        monomials_rec(gens, i, deg_left - gens[i].degree(),
                      weight_left - gens[i].weight(), current, out);
        current.factors.pop_back();
    }
}

std::vector<Product> enumerate_monomials(int k, int degree, long long weight)
{
    std::vector<DLMonomial> gens;
    for (int d = 1; d <= degree; ++d)
        for (const DLMonomial& g : enumerate_generators(k, d))
            gens.push_back(g);
    std::sort(gens.begin(), gens.end());
    std::vector<Product> out;
    Product current;
    monomials_rec(gens, 0, degree, weight, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DLMonomial> enumerate_words(int k, int degree, long long weight)
{
    std::vector<DLMonomial> out;
    int d = degree;
    long long w = weight;
    for (int a = 0;; ++a) {
        for (const DLMonomial& g : enumerate_generators(k, d)) {
            if (g.weight() != w)
                continue;
            DLMonomial word = g;
            for (int b = 0; b < a; ++b)
                word.ops.insert(word.ops.begin(), word.degree());
            out.push_back(std::move(word));
        }
        if (d % 2 != 0 || w % 2 != 0)
            break;
        d /= 2;
        w /= 2;
    }
    std::sort(out.begin(), out.end());
    return out;
}

F2Vector element_in_basis(const AlgebraElement& x, const std::vector<Product>& basis)
{
    F2Vector v;
    for (const Product& p : x.terms) {
        auto it = std::lower_bound(basis.begin(), basis.end(), p);
        if (it == basis.end() || !(*it == p))
            throw std::logic_error("element_in_basis: term outside the basis");
        v.toggle(static_cast<int>(it - basis.begin()));
    }
    return v;
}

GenSum p_star(int k, const WreathWord& w, const BarOptions& opt)
{
    if (w.length() != k)
        throw std::invalid_argument("p_star: word length does not match k");
    GenSum out;
    for (const BarWord& I : nu_k(w, opt))
        toggle(out, GenClass{k, I});
    return out;
}

GenSum p_star(int k, const WreathSum& s, const BarOptions& opt)
{
    GenSum out;
    for (const WreathWord& w : s)
        toggle_all(out, p_star(k, w, opt));
    return out;
}

}  // namespace wh
