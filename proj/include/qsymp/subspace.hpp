#pragma once

#include <algorithm>
#include <optional>

#include "qsymp/graded.hpp"

namespace qsymp {

/// Degree of a homogeneous coordinate vector, std::nullopt for the zero
/// vector. Throws NotHomogeneous when support mixes degrees.
inline std::optional<int> homogeneous_degree(const GradedSpace& ambient,
                                             const std::vector<Rational>& v)
{
    std::optional<int> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        if (!deg)
            deg = ambient.degree(i);
        else if (*deg != ambient.degree(i))
            throw NotHomogeneous();
    }
    return deg;
}

/// Graded kernel of a constraint matrix whose every row touches columns of a
/// single degree only. Returns a homogeneous basis, one block per degree.
inline Matrix graded_kernel(const Matrix& constraints, const std::vector<int>& col_degrees)
{
    std::vector<int> degrees_present;
    for (int d : col_degrees)
        if (std::find(degrees_present.begin(), degrees_present.end(), d) == degrees_present.end())
            degrees_present.push_back(d);
    std::sort(degrees_present.begin(), degrees_present.end());

    std::vector<std::vector<Rational>> out_cols;
    for (int d : degrees_present) {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < col_degrees.size(); ++j)
            if (col_degrees[j] == d)
                idx.push_back(j);
        Matrix block = constraints.columns_subset(idx);
        Matrix k = block.kernel_basis();
        for (std::size_t c = 0; c < k.cols(); ++c) {
            std::vector<Rational> full(col_degrees.size());
            for (std::size_t r = 0; r < idx.size(); ++r)
                full[idx[r]] = k(r, c);
            out_cols.push_back(std::move(full));
        }
    }
    return Matrix::from_columns(col_degrees.size(), out_cols);
}

/// Homogeneous subspace of a graded space, held in canonical form: the basis
/// vectors, viewed as rows, are the reduced row echelon form of any spanning
/// set, ordered by pivot (generator) index. Two subspaces are equal iff their
/// canonical matrices are identical.
class Subspace {
public:
    Subspace() = default;

    Subspace(GradedSpace ambient, const Matrix& spanning_columns)
        : ambient_(std::move(ambient))
    {
        if (spanning_columns.cols() > 0 && spanning_columns.rows() != ambient_.dim())
            throw NotASubspace();
        canonicalize(spanning_columns);
    }

    static Subspace zero(GradedSpace ambient)
    {
        return Subspace(std::move(ambient), Matrix(0, 0));
    }

    static Subspace full(GradedSpace ambient)
    {
        const std::size_t n = ambient.dim();
        return Subspace(std::move(ambient), Matrix::identity(n));
    }

    static Subspace span(GradedSpace ambient, const std::vector<std::vector<Rational>>& cols)
    {
        return Subspace(std::move(ambient), Matrix::from_columns(ambient.dim(), cols));
    }

    const GradedSpace& ambient() const { return ambient_; }
    const Matrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.cols(); }
    int column_degree(std::size_t j) const { return col_degrees_[j]; }
    const std::vector<int>& column_degrees() const { return col_degrees_; }

    /// The abstract graded space spanned by this subspace's basis columns.
    GradedSpace as_space() const { return GradedSpace(col_degrees_); }

    bool operator==(const Subspace& o) const
    {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains_vector(const std::vector<Rational>& v) const
    {
        return coordinates_of(v).has_value();
    }

    /// Coordinates of v in the canonical basis, if v lies in the span.
    std::optional<std::vector<Rational>> coordinates_of(const std::vector<Rational>& v) const
    {
        std::vector<Rational> x;
        try {
            x = basis_.solve(v);
        } catch (const SingularForm&) {
            return std::nullopt;
        }
        if (basis_.apply(x) != v)
            return std::nullopt;
        return x;
    }

private:
    void canonicalize(const Matrix& cols)
    {
        for (std::size_t j = 0; j < cols.cols(); ++j)
            homogeneous_degree(ambient_, cols.column(j));
        Matrix rowmat = cols.transposed();
        auto pivots = rowmat.rref();
        basis_ = Matrix(ambient_.dim(), pivots.size());
        col_degrees_.clear();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            for (std::size_t i = 0; i < ambient_.dim(); ++i)
                basis_(i, r) = rowmat(r, i);
            col_degrees_.push_back(ambient_.degree(pivots[r]));
        }
    }

    GradedSpace ambient_;
    Matrix basis_;
    std::vector<int> col_degrees_;
};

inline void require_same_ambient(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw MixedAmbient();
}

inline DimPoly dimsum(const Subspace& s)
{
    std::map<int, long> c;
    for (int d : s.column_degrees())
        c[d] += 1;
    return DimPoly(std::move(c));
}

inline Subspace sum(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b);
    return Subspace(a.ambient(), a.basis().hcat(b.basis()));
}

inline bool contains(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b);
    return sum(a, b) == a;
}

inline Subspace intersect(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b);
    // Solutions of A x = B y; coefficient columns inherit the degree of the
    // corresponding basis vector, so each ambient-coordinate row is
    // degree-pure and the graded kernel applies.
    const Matrix constraints = a.basis().hcat(-b.basis());
    std::vector<int> coeff_degrees = a.column_degrees();
    coeff_degrees.insert(coeff_degrees.end(), b.column_degrees().begin(),
                         b.column_degrees().end());
    const Matrix k = graded_kernel(constraints, coeff_degrees);
    std::vector<std::vector<Rational>> cols;
    for (std::size_t c = 0; c < k.cols(); ++c) {
        std::vector<Rational> x(a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j)
            x[j] = k(j, c);
        cols.push_back(a.basis().apply(x));
    }
    return Subspace::span(a.ambient(), cols);
}

inline bool equals(const Subspace& a, const Subspace& b) { return a == b; }

/// Annihilator of W inside the dual space; dual generator i pairs with
/// ambient generator i.
inline Subspace annihilator(const Subspace& w)
{
    const GradedSpace dual_space = dual(w.ambient());
    // alpha in Ann W iff alpha . w_j = 0 for every basis column w_j.
    const Matrix constraints = w.basis().transposed();
    std::vector<int> col_degrees = dual_space.degrees();
    const Matrix k = graded_kernel(constraints, col_degrees);
    return Subspace(dual_space, k);
}

struct Quotient {
    GradedSpace space;          // degrees of the chosen representatives
    Matrix representatives;     // ambient column per quotient generator
    Matrix projection;          // dim(space) x dim(ambient)
};

/// Quotient V/W presented by greedy standard-basis representatives (first
/// generators, in order, that complete W to a larger span).
inline Quotient quotient(const GradedSpace& v, const Subspace& w)
{
    if (w.ambient() != v)
        throw MixedAmbient();
    const std::size_t n = v.dim();
    Matrix chosen(n, 0);
    std::vector<int> degrees;
    Matrix work = w.basis();
    std::size_t current_rank = work.rank();
    for (std::size_t i = 0; i < n && current_rank + 0 < n; ++i) {
        Matrix candidate(n, 1);
        candidate(i, 0) = 1;
        Matrix ext = work.hcat(candidate);
        if (ext.rank() > current_rank) {
            work = ext;
            ++current_rank;
            chosen = chosen.hcat(candidate);
            degrees.push_back(v.degree(i));
        }
    }
    Quotient q;
    q.space = GradedSpace(std::move(degrees));
    q.representatives = chosen;
    const Matrix full = w.basis().hcat(chosen);
    const Matrix inv = full.inverse();
    q.projection = Matrix(chosen.cols(), n);
    for (std::size_t r = 0; r < chosen.cols(); ++r)
        for (std::size_t j = 0; j < n; ++j)
            q.projection(r, j) = inv(w.dim() + r, j);
    return q;
}

/// Image of a subspace under a linear map given on ambient coordinates.
inline Subspace apply_map(const Matrix& m, const Subspace& s, const GradedSpace& target)
{
    return Subspace(target, m * s.basis());
}

/// Greedy complement of `inner` inside `outer` (both canonical), spanned by
/// the first canonical basis columns of `outer` that grow the span.
inline Subspace complement_within(const Subspace& inner, const Subspace& outer)
{
    require_same_ambient(inner, outer);
    Matrix work = inner.basis();
    std::size_t current_rank = work.rank();
    std::vector<std::vector<Rational>> chosen;
    for (std::size_t j = 0; j < outer.dim(); ++j) {
        Matrix cand = Matrix::from_columns(outer.ambient().dim(), {outer.basis().column(j)});
        Matrix ext = work.hcat(cand);
        if (ext.rank() > current_rank) {
            work = ext;
            ++current_rank;
            chosen.push_back(outer.basis().column(j));
        }
    }
    return Subspace::span(inner.ambient(), chosen);
}

} // namespace qsymp
