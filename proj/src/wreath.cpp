#include "wreath.hpp"

#include <algorithm>
#include <stdexcept>

namespace wh {

int WreathWord::degree() const
{
    int d = 1;
    for (int i : idx)
        d += i;
    return d;
}

std::strong_ordering operator<=>(const WreathWord& a, const WreathWord& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (auto c = a.idx.size() <=> b.idx.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.idx.begin(), a.idx.end(),
                                                  b.idx.begin(), b.idx.end());
}

bool wreath_is_valid(const WreathWord& w)
{
    long long suffix = 0;
    for (size_t p = w.idx.size(); p-- > 0;) {
        if (w.idx[p] < suffix + 1)
            return false;
        suffix += w.idx[p];
    }
    return true;
}

WreathSum apply_T(int s, const WreathWord& w)
{
    int k = w.length();
    if (s < 1 || s > k - 1)
        throw std::invalid_argument("apply_T: s out of range");
    if (!wreath_is_valid(w))
        return {};
    int r = w.idx[s - 1];
    int q = w.idx[s];
    // The two binomials coincide and cancel once q - r + t >= 0, so the
    // support lies in t <= r - q - 1.  (For t > q only the second binomial
    // can fire; on admissible pairs it produces terms above t = q, e.g.
    // T(Q^6 wr Q^2) picks up Q^5 wr Q^3.)  Validity of the output at
    // position s+1 bounds t from below.
    long long suffix = 0;
    for (int p = s + 1; p < k; ++p)
        suffix += w.idx[p];
    int t_min = static_cast<int>(suffix + 1);
    WreathSum out;
    for (int t = r - q - 1; t >= t_min; --t) {
        int c = binom2(q - r + t, q - t) ^ binom2(q - r + t, 2LL * t - r);
        if (!c)
            continue;
        WreathWord v = w;
        v.idx[s - 1] = r + q - t;
        v.idx[s] = t;
        if (wreath_is_valid(v))
            toggle(out, v);
    }
    return out;
}

static void enumerate_wreath_rec(int k, int remaining, std::vector<int>& tail,
                                 std::vector<WreathWord>& out)
{
    if (k == 0) {
        if (remaining == 0) {
            WreathWord w;
            w.idx.assign(tail.rbegin(), tail.rend());
            out.push_back(w);
        }
        return;
    }
    long long suffix = 0;
    for (int i : tail)
        suffix += i;
    for (int i = static_cast<int>(suffix) + 1; i <= remaining; ++i) {
        tail.push_back(i);
        enumerate_wreath_rec(k - 1, remaining - i, tail, out);
        tail.pop_back();
    }
}

std::vector<WreathWord> enumerate_wreath_basis(int k, int degree)
{
    std::vector<WreathWord> out;
    if (k < 0 || degree < 1)
        return out;
    if (k == 0) {
        if (degree == 1)
            out.push_back(WreathWord{});
        return out;
    }
    std::vector<int> tail;
    enumerate_wreath_rec(k, degree - 1, tail, out);
    std::sort(out.begin(), out.end());
    return out;
}

int EkBlock::index_of(const WreathWord& w) const
{
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it == basis.end() || !(*it == w))
        return -1;
    return static_cast<int>(it - basis.begin());
}

WreathSum EkBlock::apply(const WreathWord& w) const
{
    int j = index_of(w);
    if (j < 0)
        return {};  // invalid words are zero
    WreathSum out;
    for (int i : rows[j].bits)
        out.insert(basis[i]);
    return out;
}

WreathSum EkBlock::apply(const WreathSum& s) const
{
    WreathSum out;
    for (const WreathWord& w : s)
        toggle_all(out, apply(w));
    return out;
}

/* rows[j] of the returned matrix = image of basis[j]. */
static std::vector<F2Vector> t_matrix(int s, const std::vector<WreathWord>& basis)
{
    std::vector<F2Vector> rows(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        for (const WreathWord& v : apply_T(s, basis[j])) {
            auto it = std::lower_bound(basis.begin(), basis.end(), v);
            if (it == basis.end() || !(*it == v))
                throw std::logic_error("t_matrix: image left the graded piece");
            rows[j].toggle(static_cast<int>(it - basis.begin()));
        }
    }
    return rows;
}

static std::vector<F2Vector> compose(const std::vector<F2Vector>& second,
                                     const std::vector<F2Vector>& first)
{
    // (second o first)(x_j) = second(first(x_j))
    std::vector<F2Vector> out(first.size());
    for (size_t j = 0; j < first.size(); ++j)
        for (int i : first[j].bits)
            out[j] += second[i];
    return out;
}

EkBlock compute_ek_block(int k, int degree, int max_power)
{
    EkBlock block;
    block.k = k;
    block.degree = degree;
    block.basis = enumerate_wreath_basis(k, degree);
    int n = block.dim();
    if (k <= 1 || n == 0) {
        // No T_s exists: e_k is the identity.
        block.rows.resize(n);
        for (int i = 0; i < n; ++i)
            block.rows[i].bits = {i};
        return block;
    }

    std::vector<F2Vector> composite;
    for (int s = k - 1; s >= 1; --s) {
        auto ts = t_matrix(s, block.basis);
        composite = composite.empty() ? std::move(ts) : compose(ts, composite);
    }

    // Smallest m with (C^m)^2 = C^m; the cyclic semigroup generated by a
    // linear map over F_2 always contains exactly one idempotent.
    if (max_power <= 0)
        max_power = 8 * n + 16;
    std::vector<F2Vector> power = composite;
    for (int m = 1; m <= max_power; ++m) {
        auto squared = compose(power, power);
        if (squared == power) {
            block.rows = std::move(power);
            block.iterations = m;
            return block;
        }
        power = compose(power, composite);
    }
    throw FuelError("compute_ek_block: no idempotent power found for k=" +
                    std::to_string(k) + " degree=" + std::to_string(degree));
}

BarSum nu_k(const WreathWord& w, const BarOptions& opt)
{
    return normalize_bar(BarWord{w.idx}, opt);
}

BarSum nu_k(const WreathSum& s, const BarOptions& opt)
{
    BarSum out;
    for (const WreathWord& w : s)
        toggle_all(out, nu_k(w, opt));
    return out;
}

WreathSum iota_star(const EkBlock& block, const BarWord& normal_word)
{
    if (!bar_is_normal(normal_word))
        throw std::invalid_argument("iota_star: word not normal");
    return block.apply(WreathWord{normal_word.idx});
}

}  // namespace wh
