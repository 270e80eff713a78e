#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsymp/matrix.hpp"

namespace qsymp {

/// Laurent polynomial in s with natural-number coefficients, counting
/// generators per degree.
class DimPoly {
public:
    DimPoly() = default;
    explicit DimPoly(std::map<int, long> coeffs) : c_(std::move(coeffs)) { prune(); }

    long coeff(int k) const
    {
        auto it = c_.find(k);
        return it == c_.end() ? 0 : it->second;
    }
    const std::map<int, long>& coeffs() const { return c_; }

    DimPoly operator+(const DimPoly& o) const
    {
        DimPoly r = *this;
        for (auto& [k, v] : o.c_)
            r.c_[k] += v;
        r.prune();
        return r;
    }

    DimPoly operator-(const DimPoly& o) const
    {
        DimPoly r = *this;
        for (auto& [k, v] : o.c_)
            r.c_[k] -= v;
        r.prune();
        return r;
    }

    /// Multiplication by s^k.
    DimPoly shifted(int k) const
    {
        DimPoly r;
        for (auto& [d, v] : c_)
            r.c_[d + k] = v;
        return r;
    }

    /// Substitution s -> s^{-1}.
    DimPoly reflected() const
    {
        DimPoly r;
        for (auto& [d, v] : c_)
            r.c_[-d] = v;
        return r;
    }

    bool operator==(const DimPoly& o) const { return c_ == o.c_; }
    bool operator!=(const DimPoly& o) const { return !(*this == o); }

    bool is_zero() const { return c_.empty(); }

private:
    void prune()
    {
        for (auto it = c_.begin(); it != c_.end();)
            it = it->second == 0 ? c_.erase(it) : std::next(it);
    }

    std::map<int, long> c_;
};

/// Finite-dimensional graded vector space given by an ordered list of
/// generator degrees. The empty list is the point *.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<int> degrees, std::string name = {})
        : degrees_(std::move(degrees)), name_(std::move(name)) {}
    GradedSpace(std::initializer_list<int> degrees) : degrees_(degrees) {}

    std::size_t dim() const { return degrees_.size(); }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int parity(std::size_t i) const { return ((degrees_[i] % 2) + 2) % 2; }
    const std::string& name() const { return name_; }

    bool is_point() const { return degrees_.empty(); }

    bool operator==(const GradedSpace& o) const { return degrees_ == o.degrees_; }
    bool operator!=(const GradedSpace& o) const { return !(*this == o); }

    /// Generator indices of the given degree, ascending.
    std::vector<std::size_t> indices_of_degree(int d) const
    {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < degrees_.size(); ++i)
            if (degrees_[i] == d)
                idx.push_back(i);
        return idx;
    }

private:
    std::vector<int> degrees_;
    std::string name_;
};

inline DimPoly dimsum(const GradedSpace& v)
{
    std::map<int, long> c;
    for (int d : v.degrees())
        c[d] += 1;
    return DimPoly(std::move(c));
}

/// Degree shift with dimsum(V[k]) = s^{-k} dimsum(V): degrees drop by k.
inline GradedSpace shift(const GradedSpace& v, int k)
{
    std::vector<int> d = v.degrees();
    for (int& x : d)
        x -= k;
    return GradedSpace(std::move(d), v.name());
}

/// Graded dual; generator i of the dual pairs with generator i of V.
inline GradedSpace dual(const GradedSpace& v)
{
    std::vector<int> d = v.degrees();
    for (int& x : d)
        x = -x;
    return GradedSpace(std::move(d), v.name().empty() ? std::string() : v.name() + "*");
}

/// Product (= direct sum) with V's generators listed first.
inline GradedSpace product(const GradedSpace& v, const GradedSpace& w)
{
    std::vector<int> d = v.degrees();
    d.insert(d.end(), w.degrees().begin(), w.degrees().end());
    return GradedSpace(std::move(d));
}

} // namespace qsymp
