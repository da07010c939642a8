#include "f2.hpp"

#include <algorithm>
#include <cassert>

namespace wh {

int binom2(long long a, long long b)
{
    if (b < 0)
        return 0;
    if (a >= 0) {
        if (b > a)
            return 0;
        // Lucas: odd iff every binary digit of b is covered by a.
        return (a & b) == b ? 1 : 0;
    }
    // Reflection of the series (1+t)^a for a < 0: binom2(a,b) = binom2(b-a-1, b).
    long long top = b - a - 1;
    return (top & b) == b ? 1 : 0;
}

bool F2Vector::contains(int i) const
{
    return std::binary_search(bits.begin(), bits.end(), i);
}

void F2Vector::toggle(int i)
{
    auto it = std::lower_bound(bits.begin(), bits.end(), i);
    if (it != bits.end() && *it == i)
        bits.erase(it);
    else
        bits.insert(it, i);
}

F2Vector& F2Vector::operator+=(const F2Vector& other)
{
    std::vector<int> out;
    out.reserve(bits.size() + other.bits.size());
    std::set_symmetric_difference(bits.begin(), bits.end(), other.bits.begin(),
                                  other.bits.end(), std::back_inserter(out));
    bits = std::move(out);
    return *this;
}

F2Matrix F2Matrix::identity(int n)
{
    F2Matrix m;
    m.cols = n;
    m.rows.resize(n);
    for (int i = 0; i < n; ++i)
        m.rows[i].bits = {i};
    return m;
}

F2Vector F2Span::reduce(F2Vector v) const
{
    for (const F2Vector& e : echelon_) {
        if (v.is_zero())
            break;
        if (v.contains(e.bits.front()))
            v += e;
    }
    return v;
}

bool F2Span::insert(F2Vector v)
{
    v = reduce(v);
    if (v.is_zero())
        return false;
    auto pos = std::lower_bound(echelon_.begin(), echelon_.end(), v,
                                [](const F2Vector& a, const F2Vector& b) {
                                    return a.bits.front() < b.bits.front();
                                });
    echelon_.insert(pos, std::move(v));
    return true;
}

int rank(const F2Matrix& m)
{
    F2Span span;
    for (const F2Vector& r : m.rows)
        span.insert(r);
    return span.dim();
}

F2Matrix transpose(const F2Matrix& m)
{
    F2Matrix t;
    t.cols = static_cast<int>(m.rows.size());
    t.rows.resize(m.cols);
    for (int i = 0; i < static_cast<int>(m.rows.size()); ++i)
        for (int j : m.rows[i].bits)
            t.rows[j].bits.push_back(i);
    return t;
}

std::vector<F2Vector> image_basis(const F2Matrix& m)
{
    F2Span span;
    for (const F2Vector& r : m.rows)
        span.insert(r);
    // Back-substitute into reduced form for a canonical answer.
    std::vector<F2Vector> rows = span.rows();
    for (size_t i = rows.size(); i-- > 0;) {
        for (size_t j = 0; j < i; ++j)
            if (rows[j].contains(rows[i].bits.front()))
                rows[j] += rows[i];
    }
    return rows;
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m)
{
    // Column-reduce the transpose while tracking the combinations used.
    // Echelon rows are kept sorted by leading index so that a single
    // increasing-lead pass fully reduces (row indices never shrink below
    // the lead being added).
    F2Matrix t = transpose(m);
    int n = m.cols;
    std::vector<F2Vector> reduced;  // sorted by leading index
    std::vector<F2Vector> combo;    // combo[p]: columns combined into reduced[p]
    std::vector<F2Vector> kernel;
    for (int c = 0; c < n; ++c) {
        F2Vector v = t.rows[c];
        F2Vector acc;
        acc.bits = {c};
        for (size_t p = 0; p < reduced.size() && !v.is_zero(); ++p) {
            if (v.contains(reduced[p].bits.front())) {
                v += reduced[p];
                acc += combo[p];
            }
        }
        if (v.is_zero())
            kernel.push_back(acc);
        else {
            auto pos = std::lower_bound(reduced.begin(), reduced.end(), v,
                                        [](const F2Vector& a, const F2Vector& b) {
                                            return a.bits.front() < b.bits.front();
                                        });
            combo.insert(combo.begin() + (pos - reduced.begin()), acc);
            reduced.insert(pos, std::move(v));
        }
    }
    return kernel;
}

}  // namespace wh
