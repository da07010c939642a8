#include "bar.hpp"

#include <algorithm>
#include <numeric>

namespace wh {

int BarWord::degree(int n) const
{
    int d = n;
    for (int i : idx)
        d += i - 1;
    return d;
}

std::strong_ordering operator<=>(const BarWord& a, const BarWord& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (auto c = a.idx.size() <=> b.idx.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.idx.begin(), a.idx.end(),
                                                  b.idx.begin(), b.idx.end());
}

bool bar_is_normal(const BarWord& w, int n)
{
    const auto& v = w.idx;
    if (v.empty())
        return true;
    for (size_t s = 0; s + 1 < v.size(); ++s)
        if (v[s] < 2 * v[s + 1] + 1)
            return false;
    return v.back() >= n;
}

bool bar_is_killed(const BarWord& w, int n)
{
    // Relation (2) applied to every suffix of the word.
    long long suffix = 0;
    for (size_t p = w.idx.size(); p-- > 0;) {
        if (w.idx[p] < suffix + n)
            return true;
        suffix += w.idx[p];
    }
    return false;
}

static int adem_coefficient(int r, int s, int t)
{
    return binom2(s - r + t, s - t) ^ binom2(s - r + t, 2LL * t - r);
}

std::vector<std::pair<int, int>> bar_adem_pair(int r, int s, int t_min)
{
    if (r >= 2 * s + 1)
        throw std::invalid_argument("bar_adem_pair: pair already normal");
    // Coefficients vanish for t >= r - s: the two binomials coincide once
    // the top s - r + t is nonnegative.
    std::vector<std::pair<int, int>> out;
    for (int t = r - s - 1; t >= t_min; --t)
        if (adem_coefficient(r, s, t))
            out.emplace_back(r + s - t, t);
    return out;
}

/* Index of the pair to rewrite, or -1 if the word is normal apart from
** its terminal index. */
static int find_inadmissible(const BarWord& w, RewriteStrategy strategy)
{
    const auto& v = w.idx;
    if (v.size() < 2)
        return -1;
    if (strategy == RewriteStrategy::LeftmostFirst) {
        for (size_t s = 0; s + 1 < v.size(); ++s)
            if (v[s] <= 2 * v[s + 1])
                return static_cast<int>(s);
    } else {
        for (size_t s = v.size() - 1; s-- > 0;)
            if (v[s] <= 2 * v[s + 1])
                return static_cast<int>(s);
    }
    return -1;
}

BarSum normalize_bar(const BarWord& w, const BarOptions& opt)
{
    BarSum pending;
    BarSum done;
    if (!bar_is_killed(w, opt.n))
        pending.insert(w);
    std::uint64_t steps = 0;
    while (!pending.empty()) {
        BarWord u = *pending.begin();
        pending.erase(pending.begin());
        int p = find_inadmissible(u, opt.strategy);
        if (p < 0) {
            toggle(done, u);
            continue;
        }
        if (++steps > opt.fuel) {
            std::string s = "normalize_bar: fuel exhausted at";
            for (int i : u.idx)
                s += " " + std::to_string(i);
            throw FuelError(s);
        }
        int r = u.idx[p], sdx = u.idx[p + 1];
        long long suffix = 0;
        for (size_t q = p + 2; q < u.idx.size(); ++q)
            suffix += u.idx[q];
        int t_min = static_cast<int>(suffix + opt.n);
        for (auto [a, t] : bar_adem_pair(r, sdx, t_min)) {
            BarWord v = u;
            v.idx[p] = a;
            v.idx[p + 1] = t;
            if (!bar_is_killed(v, opt.n))
                toggle(pending, v);
        }
    }
    return done;
}

BarSum normalize_bar(const BarSum& s, const BarOptions& opt)
{
    BarSum out;
    for (const BarWord& w : s)
        toggle_all(out, normalize_bar(w, opt));
    return out;
}

static void enumerate_rec(int k, int remaining, int n, int min_allowed,
                          std::vector<int>& tail, std::vector<BarWord>& out)
{
    // Builds right-to-left: tail holds (i_{m+1},...,i_k) reversed.
    if (k == 0) {
        if (remaining == 0) {
            BarWord w;
            w.idx.assign(tail.rbegin(), tail.rend());
            out.push_back(w);
        }
        return;
    }
    // Remaining positions each consume at least (index - 1); the smallest
    // admissible index at each level roughly doubles, so cut off early.
    for (int i = std::max(min_allowed, n); i - 1 <= remaining; ++i) {
        tail.push_back(i);
        enumerate_rec(k - 1, remaining - (i - 1), n, 2 * i + 1, tail, out);
        tail.pop_back();
    }
}

std::vector<BarWord> enumerate_bar_basis(int k, int degree, int n)
{
    std::vector<BarWord> out;
    if (k < 0 || degree < n)
        return out;
    if (k == 0) {
        if (degree == n)
            out.push_back(BarWord{});
        return out;
    }
    std::vector<int> tail;
    enumerate_rec(k, degree - n, n, n, tail, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wh
