#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace wh {

/* Mod-2 binomial coefficient, defined for all integers a, b as the
** coefficient of t^b in the formal power series (1+t)^a over F_2. */
int binom2(long long a, long long b);

/* F_2 vector as the sorted set of coordinates equal to 1. */
struct F2Vector {
    std::vector<int> bits;

    bool is_zero() const { return bits.empty(); }
    bool contains(int i) const;
    void toggle(int i);
    F2Vector& operator+=(const F2Vector& other);
    friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }
    bool operator==(const F2Vector&) const = default;
    auto operator<=>(const F2Vector&) const = default;
};

/* Rows over a shared column basis [0, cols). As a linear map it sends
** a coordinate vector x in F_2^cols to the vector of row-dot-products. */
struct F2Matrix {
    int cols = 0;
    std::vector<F2Vector> rows;

    static F2Matrix identity(int n);
    bool operator==(const F2Matrix&) const = default;
};

int rank(const F2Matrix& m);
F2Matrix transpose(const F2Matrix& m);

/* Basis of {x : m x = 0}, vectors over the column space. */
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

/* Basis of the row space, in reduced echelon form. */
std::vector<F2Vector> image_basis(const F2Matrix& m);

/* Incremental echelon span used for rank counting and membership tests. */
class F2Span {
public:
    /* Reduce v against the span; returns the residue. */
    F2Vector reduce(F2Vector v) const;
    /* Insert v; returns true if it enlarged the span. */
    bool insert(F2Vector v);
    bool contains(const F2Vector& v) const { return reduce(v).is_zero(); }
    int dim() const { return static_cast<int>(echelon_.size()); }
    const std::vector<F2Vector>& rows() const { return echelon_; }

private:
    std::vector<F2Vector> echelon_;  // each with a distinct leading index
};

/* Symmetric-difference accumulation: the universal mod-2 sum container. */
template <class T>
void toggle(std::set<T>& s, const T& x)
{
    auto [it, inserted] = s.insert(x);
    if (!inserted)
        s.erase(it);
}

template <class T>
void toggle_all(std::set<T>& s, const std::set<T>& xs)
{
    for (const T& x : xs)
        toggle(s, x);
}

}  // namespace wh
