#pragma once

#include <random>

#include "qsymp/symplectic.hpp"

namespace qsymp {

using Rng = std::mt19937_64;

inline Rational random_small(Rng& rng, int lo = -3, int hi = 3)
{
    std::uniform_int_distribution<int> d(lo, hi);
    return Rational(d(rng));
}

inline GradedSpace random_graded_space(Rng& rng, std::size_t max_dim, int deg_lo = -2,
                                       int deg_hi = 2)
{
    std::uniform_int_distribution<std::size_t> nd(0, max_dim);
    std::uniform_int_distribution<int> dd(deg_lo, deg_hi);
    std::vector<int> degrees(nd(rng));
    for (int& d : degrees)
        d = dd(rng);
    return GradedSpace(std::move(degrees));
}

/// Random degree-preserving invertible matrix (block per degree).
inline Matrix random_invertible_degree0(const GradedSpace& space, Rng& rng)
{
    const std::size_t n = space.dim();
    Matrix t(n, n);
    std::vector<int> degs = space.degrees();
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int d : degs) {
        const auto idx = space.indices_of_degree(d);
        Matrix block(idx.size(), idx.size());
        do {
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < idx.size(); ++j)
                    block(i, j) = random_small(rng, -2, 2);
        } while (block.determinant() == 0);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                t(idx[i], idx[j]) = block(i, j);
    }
    return t;
}

/// Random odd symplectic space: a shifted cotangent of a random base, with
/// the pairing pulled back along a random degree-0 isomorphism.
inline OddSympSpace random_odd_symp(Rng& rng, std::size_t max_base_dim, int deg_lo = -1,
                                    int deg_hi = 1)
{
    const GradedSpace base = random_graded_space(rng, max_base_dim, deg_lo, deg_hi);
    const OddSympSpace model = shifted_cotangent(base);
    const Matrix t = random_invertible_degree0(model.space(), rng);
    return OddSympSpace(model.space(), t.transposed() * model.omega() * t);
}

/// Random homogeneous vector inside a subspace (small coefficients).
inline std::vector<Rational> random_vector_in(const Subspace& s, int degree, Rng& rng)
{
    std::vector<Rational> v(s.ambient().dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (s.column_degree(j) != degree)
            continue;
        const Rational c = random_small(rng, -2, 2);
        if (c == 0)
            continue;
        for (std::size_t i = 0; i < s.ambient().dim(); ++i)
            v[i] += c * s.basis()(i, j);
    }
    return v;
}

/// Random isotropic subspace grown greedily inside the tower of complements.
inline Subspace random_isotropic(const OddSympSpace& v, Rng& rng, std::size_t max_dim)
{
    Subspace w = Subspace::zero(v.space());
    std::uniform_int_distribution<std::size_t> nd(0, max_dim);
    const std::size_t want = nd(rng);
    for (std::size_t step = 0; step < want; ++step) {
        const Subspace comp = symp_complement(w, v);
        std::vector<int> degrees;
        for (std::size_t j = 0; j < comp.dim(); ++j) {
            const int d = comp.column_degree(j);
            if (dimsum(comp).coeff(d) > dimsum(w).coeff(d))
                degrees.push_back(d);
        }
        if (degrees.empty())
            break;
        bool added = false;
        for (int attempt = 0; attempt < 24 && !added; ++attempt) {
            const int d = degrees[rng() % degrees.size()];
            const auto cand = random_vector_in(comp, d, rng);
            if (!w.contains_vector(cand)) {
                w = sum(w, Subspace::span(v.space(), {cand}));
                added = true;
            }
        }
        if (!added)
            break;
    }
    return w;
}

/// Random Lagrangian: isotropic growth to half dimension.
inline Subspace random_lagrangian(const OddSympSpace& v, Rng& rng)
{
    const std::size_t half = v.dim() / 2;
    Subspace w = Subspace::zero(v.space());
    int guard = 0;
    while (w.dim() < half && guard++ < 400) {
        const Subspace comp = symp_complement(w, v);
        std::vector<int> degrees;
        for (std::size_t j = 0; j < comp.dim(); ++j) {
            const int d = comp.column_degree(j);
            if (dimsum(comp).coeff(d) > dimsum(w).coeff(d))
                degrees.push_back(d);
        }
        if (degrees.empty())
            break;
        const int d = degrees[rng() % degrees.size()];
        const auto cand = random_vector_in(comp, d, rng);
        if (!w.contains_vector(cand))
            w = sum(w, Subspace::span(v.space(), {cand}));
    }
    return w;
}

inline Subspace random_coisotrope(const OddSympSpace& v, Rng& rng, std::size_t max_codim = 2)
{
    return symp_complement(random_isotropic(v, rng, max_codim), v);
}

inline Relation random_lagrangian_relation(const OddSympSpace& u, const OddSympSpace& v,
                                           Rng& rng)
{
    const OddSympSpace prod = product_symp(flip(u), v);
    const Subspace g = random_lagrangian(prod, rng);
    return Relation(u, v, Subspace(product(u.space(), v.space()), g.basis()));
}

inline Relation random_reduction(const OddSympSpace& v, Rng& rng, std::size_t max_codim = 2)
{
    const Subspace c = random_coisotrope(v, rng, max_codim);
    return reduction_relation(coisotropic_reduce(c, v), v);
}

/// Random symplectomorphism assembled from block maps and shears along a
/// random Lagrangian splitting V = A (+) B.
inline Matrix random_symplectomorphism(const OddSympSpace& v, Rng& rng)
{
    if (v.is_point())
        return Matrix(0, 0);
    const Subspace a = random_lagrangian(v, rng);
    const CoisotropeDecomposition dec = decompose_coisotrope(a, v);
    const Subspace& b = dec.b_part;
    const Matrix basis = a.basis().hcat(b.basis()); // columns: A then B
    const Matrix basis_inv = basis.inverse();
    const std::size_t h = a.dim();
    const std::size_t n = v.dim();

    // omega in the split basis.
    const Matrix omega_split = basis.transposed() * v.omega() * basis;

    auto embed = [&](const Matrix& block) { return basis * block * basis_inv; };

    // (a) invertible g on A, extended to B by solving omega(g a, T b) = omega(a, b).
    auto block_map = [&]() {
        const GradedSpace a_space = a.as_space();
        const Matrix g = random_invertible_degree0(a_space, rng);
        // omega_AB in split coordinates: rows A, cols B.
        Matrix omega_ab(h, n - h), omega_gab(h, n - h);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j + h < n; ++j)
                omega_ab(i, j) = omega_split(i, h + j);
        // Solve omega(g a_i, T b_j) = omega(a_i, b_j) with T b_j in B:
        // (g^T omega_ab) X = omega_ab.
        const Matrix lhs = g.transposed() * omega_ab;
        Matrix x(n - h, n - h);
        for (std::size_t j = 0; j + h < n; ++j) {
            const auto col = lhs.solve(omega_ab.column(j));
            for (std::size_t i = 0; i + h < n; ++i)
                x(i, j) = col[i];
        }
        Matrix t(n, n);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j)
                t(i, j) = g(i, j);
        for (std::size_t i = 0; i + h < n; ++i)
            for (std::size_t j = 0; j + h < n; ++j)
                t(h + i, h + j) = x(i, j);
        return embed(t);
    };

    // (b) shear 1 + N with N: A -> B (or B -> A), constrained by
    //     omega(N x, y) + omega(x, N y) = 0 on the shear's source.
    auto shear = [&](bool from_a) {
        const std::size_t src_lo = from_a ? 0 : h, src_n = from_a ? h : n - h;
        const std::size_t dst_lo = from_a ? h : 0, dst_n = from_a ? n - h : h;
        std::vector<std::pair<std::size_t, std::size_t>> slots; // (dst, src)
        for (std::size_t i = 0; i < dst_n; ++i)
            for (std::size_t j = 0; j < src_n; ++j) {
                const int dd = from_a ? b.column_degree(i) : a.column_degree(i);
                const int sd = from_a ? a.column_degree(j) : b.column_degree(j);
                if (dd == sd)
                    slots.emplace_back(i, j);
            }
        if (slots.empty())
            return Matrix::identity(n);
        // Constraints over the slot variables.
        Matrix cons(src_n * src_n, slots.size());
        for (std::size_t t = 0; t < slots.size(); ++t) {
            const auto [di, sj] = slots[t];
            for (std::size_t y = 0; y < src_n; ++y) {
                // omega(N e_sj, e_y) coefficient for x = e_sj
                cons(sj * src_n + y, t) += omega_split(dst_lo + di, src_lo + y);
                // omega(e_x, N e_sj) coefficient for y = e_sj
                cons(y * src_n + sj, t) += omega_split(src_lo + y, dst_lo + di);
            }
        }
        const Matrix kb = cons.kernel_basis();
        if (kb.cols() == 0)
            return Matrix::identity(n);
        std::vector<Rational> sol(slots.size());
        for (std::size_t c = 0; c < kb.cols(); ++c) {
            const Rational w = random_small(rng, -1, 1);
            if (w == 0)
                continue;
            for (std::size_t t = 0; t < slots.size(); ++t)
                sol[t] += w * kb(t, c);
        }
        Matrix t_split = Matrix::identity(n);
        for (std::size_t t = 0; t < slots.size(); ++t)
            t_split(dst_lo + slots[t].first, src_lo + slots[t].second) += sol[t];
        return embed(t_split);
    };

    return block_map() * shear(true) * shear(false) * block_map();
}

} // namespace qsymp
