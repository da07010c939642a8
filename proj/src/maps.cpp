#include "maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace wh {

std::vector<std::pair<int, int>> mixed_adem_pair(int r, int s, int t_min)
{
    std::vector<std::pair<int, int>> out;
    // Both binomials coincide (and cancel) once s - r + t >= 0, so the
    // support lies in t <= r - s - 1.
    for (int t = r - s - 1; t >= t_min; --t) {
        int c = binom2(s - r + t, s - t) ^ binom2(s - r + t, 2LL * t - r);
        if (c)
            out.emplace_back(r + s - t, t);
    }
    return out;
}

static void check_generator(int expect_k, const DLMonomial& g, const char* who)
{
    if (g.base.k != expect_k)
        throw std::invalid_argument(std::string(who) + ": generator has wrong level");
    if (!bar_is_normal(g.base.bars))
        throw std::invalid_argument(std::string(who) + ": bar block not normal");
}

AlgebraElement d_star(int k, const DLMonomial& g, const MapOptions& opt)
{
    check_generator(k + 1, g, "d_star");
    const EkBlock& block = opt.ek(k + 1, WreathWord{g.base.bars.idx}.degree());
    AlgebraElement out;
    for (const WreathWord& w : iota_star(block, g.base.bars)) {
        int head = w.idx.front();
        BarWord tail{std::vector<int>(w.idx.begin() + 1, w.idx.end())};
        for (const BarWord& I : normalize_bar(tail, opt.bar)) {
            std::vector<int> ops = g.ops;
            ops.push_back(head);
            out += apply_q_seq(ops, AlgebraElement::from(GenClass{k, I}));
        }
    }
    return out;
}

AlgebraElement d_star(int k, const AlgebraElement& x, const MapOptions& opt)
{
    AlgebraElement out;
    for (const Product& p : x.terms) {
        AlgebraElement term = AlgebraElement::unit();
        for (const DLMonomial& m : p.factors)
            term = algebra_product(term, d_star(k, m, opt));
        out += term;
    }
    return out;
}

/* Transports bQ^{bar} through suffix[from..], collecting the final
** (rewritten unbarred prefix, landed bar index) pairs mod 2. */
static void transport(int bar, const std::vector<int>& suffix, size_t from,
                      long long bar_block_sum, std::vector<int>& prefix,
                      std::set<std::pair<std::vector<int>, int>>& out)
{
    if (from == suffix.size()) {
        toggle(out, {prefix, bar});
        return;
    }
    // A surviving landing index needs bar >= block sum + 1 after losing
    // at least (q + 1) at each remaining pass.
    long long reserve = bar_block_sum + 1;
    for (size_t p = from + 1; p < suffix.size(); ++p)
        reserve += suffix[p] + 1;
    int q = suffix[from];
    for (auto [a, t] : mixed_adem_pair(bar, q, static_cast<int>(reserve))) {
        prefix.push_back(a);
        transport(t, suffix, from + 1, bar_block_sum, prefix, out);
        prefix.pop_back();
    }
}

AlgebraElement delta_star(int k, const DLMonomial& g, const MapOptions& opt)
{
    check_generator(k, g, "delta_star");
    const std::vector<int>& J = g.ops;
    long long bar_block_sum = 0;
    for (int i : g.base.bars.idx)
        bar_block_sum += i;

    AlgebraElement out;
    for (size_t s = 0; s < J.size(); ++s) {
        std::vector<int> suffix(J.begin() + s + 1, J.end());
        std::set<std::pair<std::vector<int>, int>> landed;
        std::vector<int> moved;
        transport(J[s], suffix, 0, bar_block_sum, moved, landed);
        for (const auto& [rewritten, t] : landed) {
            BarWord bars;
            bars.idx.reserve(g.base.bars.idx.size() + 1);
            bars.idx.push_back(t);
            bars.idx.insert(bars.idx.end(), g.base.bars.idx.begin(),
                            g.base.bars.idx.end());
            for (const BarWord& I : normalize_bar(bars, opt.bar)) {
                std::vector<int> ops(J.begin(), J.begin() + s);
                ops.insert(ops.end(), rewritten.begin(), rewritten.end());
                out += apply_q_seq(ops, AlgebraElement::from(GenClass{k + 1, I}));
            }
        }
    }
    return out;
}

std::vector<DLMonomial> word_factors(const Product& p)
{
    std::vector<DLMonomial> out;
    size_t i = 0;
    while (i < p.factors.size()) {
        size_t j = i;
        while (j < p.factors.size() && p.factors[j] == p.factors[i])
            ++j;
        size_t multiplicity = j - i;
        for (int bit = 0; multiplicity >> bit; ++bit) {
            if (!((multiplicity >> bit) & 1))
                continue;
            DLMonomial word = p.factors[i];
            for (int a = 0; a < bit; ++a)
                word.ops.insert(word.ops.begin(), word.degree());
            out.push_back(std::move(word));
        }
        i = j;
    }
    return out;
}

AlgebraElement delta_star_e0(int k, const AlgebraElement& x, const MapOptions& opt)
{
    AlgebraElement out;
    for (const Product& p : x.terms) {
        AlgebraElement term = AlgebraElement::unit();
        for (const DLMonomial& w : word_factors(p))
            term = algebra_product(term, delta_star(k, w, opt));
        out += term;
    }
    return out;
}

std::vector<F2Vector> piece_images(MapTag tag, int k, const std::vector<Product>& source,
                                   const std::vector<Product>& target,
                                   const MapOptions& opt)
{
    std::vector<F2Vector> images(source.size());
    for (size_t j = 0; j < source.size(); ++j) {
        AlgebraElement x;
        x.terms.insert(source[j]);
        AlgebraElement img =
            tag == MapTag::D ? d_star(k, x, opt) : delta_star_e0(k, x, opt);
        images[j] = element_in_basis(img, target);
    }
    return images;
}

GenSum alpha_star(int k, int j, const BarWord& I, const BarOptions& opt)
{
    if (I.length() != k)
        throw std::invalid_argument("alpha_star: bar word length must be k");
    BarWord w;
    w.idx.reserve(I.idx.size() + 1);
    w.idx.push_back(j);
    w.idx.insert(w.idx.end(), I.idx.begin(), I.idx.end());
    GenSum out;
    for (const BarWord& N : normalize_bar(w, opt))
        toggle(out, GenClass{k + 1, N});
    return out;
}

GenSum alpha_star_split(int k, int j, const BarWord& I, const MapOptions& opt)
{
    if (I.length() != k)
        throw std::invalid_argument("alpha_star_split: bar word length must be k");
    WreathSum lifted;
    if (k == 0)
        lifted.insert(WreathWord{});
    else {
        const EkBlock& block = opt.ek(k, WreathWord{I.idx}.degree());
        lifted = iota_star(block, I);
    }
    WreathSum wider;
    for (const WreathWord& w : lifted) {
        WreathWord v;
        v.idx.reserve(w.idx.size() + 1);
        v.idx.push_back(j);
        v.idx.insert(v.idx.end(), w.idx.begin(), w.idx.end());
        if (wreath_is_valid(v))
            toggle(wider, v);
    }
    GenSum out;
    for (const WreathWord& v : wider)
        toggle_all(out, p_star(k + 1, v, opt.bar));
    return out;
}

E0Matrix e0_matrix(MapTag tag, int k, int degree, long long weight, const MapOptions& opt)
{
    E0Matrix m;
    m.tag = tag;
    m.k = k;
    m.degree = degree;
    m.weight = weight;
    int src_level = tag == MapTag::D ? k + 1 : k;
    int tgt_level = tag == MapTag::D ? k : k + 1;
    for (const DLMonomial& g : enumerate_generators(src_level, degree))
        if (g.weight() == weight)
            m.source.push_back(g);
    for (const DLMonomial& g : enumerate_generators(tgt_level, degree))
        if (g.weight() == weight)
            m.target.push_back(g);
    m.images.resize(m.source.size());
    for (size_t j = 0; j < m.source.size(); ++j) {
        AlgebraElement img = tag == MapTag::D ? d_star(k, m.source[j], opt)
                                              : delta_star(k, m.source[j], opt);
        for (const Product& p : img.terms)
            if (p.degree() != degree || p.weight() != weight)
                throw std::logic_error("e0_matrix: image term left the bidegree");
        m.images[j] = indecomposables(img, m.target);
    }
    return m;
}

std::vector<F2Vector> e0_compose(const E0Matrix& second, const E0Matrix& first)
{
    if (first.target.size() != second.source.size())
        throw std::invalid_argument("e0_compose: incompatible bases");
    std::vector<F2Vector> out(first.images.size());
    for (size_t j = 0; j < first.images.size(); ++j)
        for (int i : first.images[j].bits)
            out[j] += second.images[i];
    return out;
}

int e0_rank(const std::vector<F2Vector>& images)
{
    F2Span span;
    for (const F2Vector& v : images)
        span.insert(v);
    return span.dim();
}

}  // namespace wh
