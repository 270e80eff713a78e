#pragma once

#include <optional>

#include "qsymp/subspace.hpp"

namespace qsymp {

/// Graded vector space with an exact antisymmetric degree -1 pairing:
/// omega(e_i, e_j) != 0 only when deg i + deg j = 1, and the matrix is
/// invertible.
class OddSympSpace {
public:
    OddSympSpace() = default;

    OddSympSpace(GradedSpace space, Matrix omega)
        : space_(std::move(space)), omega_(std::move(omega))
    {
        const std::size_t n = space_.dim();
        if (omega_.rows() != n || omega_.cols() != n)
            throw DomainError("omega has wrong shape");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (omega_(i, j) != -omega_(j, i))
                    throw DomainError("omega is not antisymmetric");
                if (omega_(i, j) != 0 && space_.degree(i) + space_.degree(j) != 1)
                    throw DomainError("omega entry violates degree -1");
            }
        omega_inv_ = omega_.inverse(); // throws NotInvertible when degenerate
    }

    static OddSympSpace point() { return OddSympSpace(GradedSpace{}, Matrix(0, 0)); }

    const GradedSpace& space() const { return space_; }
    const Matrix& omega() const { return omega_; }
    const Matrix& omega_inv() const { return omega_inv_; }
    std::size_t dim() const { return space_.dim(); }
    bool is_point() const { return space_.is_point(); }

    Rational pair(const std::vector<Rational>& v, const std::vector<Rational>& w) const
    {
        const std::vector<Rational> ow = omega_.apply(w);
        Rational r = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0 && ow[i] != 0)
                r += v[i] * ow[i];
        return r;
    }

    bool operator==(const OddSympSpace& o) const
    {
        return space_ == o.space_ && omega_ == o.omega_;
    }
    bool operator!=(const OddSympSpace& o) const { return !(*this == o); }

private:
    GradedSpace space_;
    Matrix omega_, omega_inv_;
};

inline OddSympSpace flip(const OddSympSpace& v)
{
    return OddSympSpace(v.space(), -v.omega());
}

/// Product with block-diagonal pairing.
inline OddSympSpace product_symp(const OddSympSpace& a, const OddSympSpace& b)
{
    const std::size_t n = a.dim(), m = b.dim();
    Matrix omega(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            omega(i, j) = a.omega()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            omega(n + i, n + j) = b.omega()(i, j);
    return OddSympSpace(product(a.space(), b.space()), omega);
}

/// T*[1]W = W*[1] (+) W with the fiber listed first; omega_can(a (+) v,
/// a' (+) v') = a(v') - a'(v), so fiber i pairs base i with coefficient +1.
inline OddSympSpace shifted_cotangent(const GradedSpace& w)
{
    const std::size_t n = w.dim();
    std::vector<int> degrees;
    degrees.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        degrees.push_back(1 - w.degree(i));
    for (std::size_t i = 0; i < n; ++i)
        degrees.push_back(w.degree(i));
    Matrix omega(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        omega(i, n + i) = 1;
        omega(n + i, i) = -1;
    }
    return OddSympSpace(GradedSpace(std::move(degrees)), omega);
}

inline Subspace symp_complement(const Subspace& w, const OddSympSpace& v)
{
    if (w.ambient() != v.space())
        throw NotASubspace();
    const Matrix constraints = (v.omega() * w.basis()).transposed();
    return Subspace(v.space(), graded_kernel(constraints, v.space().degrees()));
}

enum class SubspaceClass { isotropic, coisotropic, lagrangian, symplectic, none };

inline const char* to_string(SubspaceClass c)
{
    switch (c) {
    case SubspaceClass::isotropic: return "isotropic";
    case SubspaceClass::coisotropic: return "coisotropic";
    case SubspaceClass::lagrangian: return "lagrangian";
    case SubspaceClass::symplectic: return "symplectic";
    case SubspaceClass::none: return "none";
    }
    return "none";
}

inline SubspaceClass classify(const Subspace& w, const OddSympSpace& v)
{
    const Subspace comp = symp_complement(w, v);
    const bool iso = contains(comp, w);
    const bool coiso = contains(w, comp);
    if (iso && coiso)
        return SubspaceClass::lagrangian;
    if (iso)
        return SubspaceClass::isotropic;
    if (coiso)
        return SubspaceClass::coisotropic;
    if (intersect(w, comp).dim() == 0)
        return SubspaceClass::symplectic;
    return SubspaceClass::none;
}

/// Restriction of omega to a subspace, as a symplectic space on the
/// subspace's canonical basis. Throws NotInvertible when degenerate.
inline OddSympSpace restrict_symplectic(const Subspace& w, const OddSympSpace& v)
{
    const Matrix m = w.basis();
    const Matrix omega_sub = m.transposed() * v.omega() * m;
    return OddSympSpace(w.as_space(), omega_sub);
}

/// Exact left inverse of a full-column-rank matrix via the Gram matrix.
inline Matrix left_inverse(const Matrix& m)
{
    const Matrix gram = m.transposed() * m;
    return gram.inverse() * m.transposed();
}

class Relation;

/// A coisotropic reduction C -> R = C/C^omega with a fixed, deterministic
/// choice of representatives (greedy complement of C^omega in C).
struct CoisotropicReduction {
    Subspace coisotrope;   // C, canonical
    Subspace isotrope;     // I = C^omega
    Subspace reps;         // complement of I in C; its columns present R
    OddSympSpace reduced;  // R with omega_R on the representative basis
    Matrix projection;     // dim(R) x dim(V); valid on C only

    std::vector<Rational> project(const std::vector<Rational>& v) const
    {
        return projection.apply(v);
    }
};

inline CoisotropicReduction coisotropic_reduce(const Subspace& c, const OddSympSpace& v)
{
    const SubspaceClass cls = classify(c, v);
    if (cls != SubspaceClass::coisotropic && cls != SubspaceClass::lagrangian)
        throw NotCoisotropic();
    CoisotropicReduction r;
    r.coisotrope = c;
    r.isotrope = symp_complement(c, v);
    r.reps = complement_within(r.isotrope, c);
    r.reduced = restrict_symplectic(r.reps, v);
    const Matrix full = r.reps.basis().hcat(r.isotrope.basis());
    const Matrix li = left_inverse(full);
    r.projection = Matrix(r.reps.dim(), v.dim());
    for (std::size_t a = 0; a < r.reps.dim(); ++a)
        for (std::size_t j = 0; j < v.dim(); ++j)
            r.projection(a, j) = li(a, j);
    return r;
}

// ---------------------------------------------------------------------------
// Graph-level relation algebra (no symplectic structure involved).
// ---------------------------------------------------------------------------

/// Composition of linear relations graphA <= U x V, graphB <= V x W.
inline Subspace compose_graphs(const Subspace& a, std::size_t dim_u, std::size_t dim_v,
                               const Subspace& b, std::size_t dim_w,
                               const GradedSpace& uw_ambient)
{
    Matrix constraints(dim_v, a.dim() + b.dim());
    for (std::size_t i = 0; i < dim_v; ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j)
            constraints(i, j) = a.basis()(dim_u + i, j);
        for (std::size_t j = 0; j < b.dim(); ++j)
            constraints(i, a.dim() + j) = -b.basis()(i, j);
    }
    std::vector<int> coeff_degrees = a.column_degrees();
    coeff_degrees.insert(coeff_degrees.end(), b.column_degrees().begin(),
                         b.column_degrees().end());
    const Matrix k = graded_kernel(constraints, coeff_degrees);
    std::vector<std::vector<Rational>> cols;
    for (std::size_t t = 0; t < k.cols(); ++t) {
        std::vector<Rational> col(dim_u + dim_w);
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (k(j, t) != 0)
                for (std::size_t i = 0; i < dim_u; ++i)
                    col[i] += a.basis()(i, j) * k(j, t);
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (k(a.dim() + j, t) != 0)
                for (std::size_t i = 0; i < dim_w; ++i)
                    col[dim_u + i] += b.basis()(dim_v + i, j) * k(a.dim() + j, t);
        cols.push_back(std::move(col));
    }
    return Subspace::span(uw_ambient, cols);
}

inline Subspace transpose_graph(const Subspace& g, std::size_t dim_u, std::size_t dim_v,
                                const GradedSpace& vu_ambient)
{
    std::vector<std::vector<Rational>> cols;
    for (std::size_t j = 0; j < g.dim(); ++j) {
        std::vector<Rational> col(dim_u + dim_v);
        for (std::size_t i = 0; i < dim_v; ++i)
            col[i] = g.basis()(dim_u + i, j);
        for (std::size_t i = 0; i < dim_u; ++i)
            col[dim_v + i] = g.basis()(i, j);
        cols.push_back(std::move(col));
    }
    return Subspace::span(vu_ambient, cols);
}

inline Subspace kernel_of_graph(const Subspace& g, std::size_t dim_u, std::size_t dim_v,
                                const GradedSpace& u_space)
{
    Matrix target_rows(dim_v, g.dim());
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            target_rows(i, j) = g.basis()(dim_u + i, j);
    const Matrix k = graded_kernel(target_rows, g.column_degrees());
    std::vector<std::vector<Rational>> cols;
    for (std::size_t t = 0; t < k.cols(); ++t) {
        std::vector<Rational> col(dim_u);
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (k(j, t) != 0)
                for (std::size_t i = 0; i < dim_u; ++i)
                    col[i] += g.basis()(i, j) * k(j, t);
        cols.push_back(std::move(col));
    }
    return Subspace::span(u_space, cols);
}

inline Subspace image_of_graph(const Subspace& g, std::size_t dim_u, std::size_t dim_v,
                               const GradedSpace& v_space)
{
    std::vector<std::vector<Rational>> cols;
    for (std::size_t j = 0; j < g.dim(); ++j) {
        std::vector<Rational> col(dim_v);
        for (std::size_t i = 0; i < dim_v; ++i)
            col[i] = g.basis()(dim_u + i, j);
        cols.push_back(std::move(col));
    }
    return Subspace::span(v_space, cols);
}

// ---------------------------------------------------------------------------
// Relations between odd symplectic spaces.
// ---------------------------------------------------------------------------

/// Linear relation between odd symplectic spaces: a graded subspace of the
/// product carrying the pairing -omega_src (+) omega_tgt.
class Relation {
public:
    Relation() = default;
    Relation(OddSympSpace source, OddSympSpace target, Subspace graph)
        : source_(std::move(source)), target_(std::move(target)), graph_(std::move(graph))
    {
        if (graph_.ambient() != product(source_.space(), target_.space()))
            throw NotASubspace();
    }

    const OddSympSpace& source() const { return source_; }
    const OddSympSpace& target() const { return target_; }
    const Subspace& graph() const { return graph_; }

    OddSympSpace product_form() const { return product_symp(flip(source_), target_); }

    SubspaceClass classification() const
    {
        if (!class_)
            class_ = classify(graph_, product_form());
        return *class_;
    }
    bool is_lagrangian() const { return classification() == SubspaceClass::lagrangian; }

    bool operator==(const Relation& o) const
    {
        return source_ == o.source_ && target_ == o.target_ && graph_ == o.graph_;
    }
    bool operator!=(const Relation& o) const { return !(*this == o); }

private:
    OddSympSpace source_, target_;
    Subspace graph_;
    mutable std::optional<SubspaceClass> class_;
};

inline Relation diagonal(const OddSympSpace& v)
{
    std::vector<std::vector<Rational>> cols;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        std::vector<Rational> col(2 * v.dim());
        col[i] = 1;
        col[v.dim() + i] = 1;
        cols.push_back(std::move(col));
    }
    return Relation(v, v, Subspace::span(product(v.space(), v.space()), cols));
}

/// Graph {(v, Mv)} of a degree-0 linear map.
inline Relation graph_of_map(const OddSympSpace& src, const OddSympSpace& tgt, const Matrix& m)
{
    std::vector<std::vector<Rational>> cols;
    for (std::size_t j = 0; j < src.dim(); ++j) {
        std::vector<Rational> col(src.dim() + tgt.dim());
        col[j] = 1;
        for (std::size_t i = 0; i < tgt.dim(); ++i)
            col[src.dim() + i] = m(i, j);
        cols.push_back(std::move(col));
    }
    return Relation(src, tgt, Subspace::span(product(src.space(), tgt.space()), cols));
}

inline Relation compose(const Relation& l1, const Relation& l2)
{
    if (l1.target() != l2.source())
        throw SourceTargetMismatch();
    const Subspace g = compose_graphs(l1.graph(), l1.source().dim(), l1.target().dim(),
                                      l2.graph(), l2.target().dim(),
                                      product(l1.source().space(), l2.target().space()));
    return Relation(l1.source(), l2.target(), g);
}

inline Relation transpose(const Relation& l)
{
    const Subspace g = transpose_graph(l.graph(), l.source().dim(), l.target().dim(),
                                       product(l.target().space(), l.source().space()));
    return Relation(l.target(), l.source(), g);
}

inline Subspace kernel(const Relation& l)
{
    return kernel_of_graph(l.graph(), l.source().dim(), l.target().dim(), l.source().space());
}

inline Subspace image(const Relation& l)
{
    return image_of_graph(l.graph(), l.source().dim(), l.target().dim(), l.target().space());
}

inline bool is_reduction(const Relation& l)
{
    if (!l.is_lagrangian())
        throw NotLagrangian();
    return kernel(transpose(l)).dim() == 0;
}

inline bool is_coreduction(const Relation& l)
{
    if (!l.is_lagrangian())
        throw NotLagrangian();
    return kernel(l).dim() == 0;
}

/// The reduction V ->> R of a coisotropic reduction, as the relation
/// {(c, pi(c)) | c in C}.
inline Relation reduction_relation(const CoisotropicReduction& red, const OddSympSpace& v)
{
    std::vector<std::vector<Rational>> cols;
    for (std::size_t j = 0; j < red.coisotrope.dim(); ++j) {
        const std::vector<Rational> c = red.coisotrope.basis().column(j);
        const std::vector<Rational> pc = red.project(c);
        std::vector<Rational> col(v.dim() + red.reduced.dim());
        for (std::size_t i = 0; i < v.dim(); ++i)
            col[i] = c[i];
        for (std::size_t i = 0; i < red.reduced.dim(); ++i)
            col[v.dim() + i] = pc[i];
        cols.push_back(std::move(col));
    }
    return Relation(v, red.reduced,
                    Subspace::span(product(v.space(), red.reduced.space()), cols));
}

/// Cotangent lift of a degree-preserving linear map f: W1 -> W2, the
/// Lagrangian {(beta o f, v, beta, f(v))}.
inline Relation cotangent_lift(const Matrix& f, const GradedSpace& w1, const GradedSpace& w2)
{
    const std::size_t n = w1.dim(), m = w2.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f(i, j) != 0 && w2.degree(i) != w1.degree(j))
                throw DomainError("cotangent lift needs a degree-preserving map");
    const OddSympSpace src = shifted_cotangent(w1);
    const OddSympSpace tgt = shifted_cotangent(w2);
    std::vector<std::vector<Rational>> cols;
    for (std::size_t j = 0; j < n; ++j) { // (0, e_j, 0, f e_j)
        std::vector<Rational> col(2 * n + 2 * m);
        col[n + j] = 1;
        for (std::size_t i = 0; i < m; ++i)
            col[2 * n + m + i] = f(i, j);
        cols.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < m; ++i) { // (beta o f, 0, beta, 0), beta = phi^i
        std::vector<Rational> col(2 * n + 2 * m);
        for (std::size_t j = 0; j < n; ++j)
            col[j] = f(i, j);
        col[2 * n + i] = 1;
        cols.push_back(std::move(col));
    }
    return Relation(src, tgt, Subspace::span(product(src.space(), tgt.space()), cols));
}

struct FactorizationCospan {
    Relation left;        // U ->> R
    Relation right;       // V ->> R
    OddSympSpace middle;  // R
};

/// Canonical factorization of a Lagrangian relation through
/// R = Im L / Ker L^T, as left = L_V o L and right = L_V.
inline FactorizationCospan factorize(const Relation& l)
{
    if (!l.is_lagrangian())
        throw NotLagrangian();
    const Subspace im = image(l);
    const CoisotropicReduction red_v = coisotropic_reduce(im, l.target());
    const Relation right = reduction_relation(red_v, l.target());
    const Relation left = compose(l, right);
    return FactorizationCospan{left, right, red_v.reduced};
}

struct CoisotropeDecomposition {
    Subspace r_part; // symplectic complement of I inside C
    Subspace i_part; // C^omega
    Subspace b_part; // Lagrangian complement of I inside R^omega
};

/// V = R (+) I (+) B with omega block-diagonal: omega_R on R and a
/// nondegenerate pairing between I and B. B is grown by the inductive
/// complement construction inside the symplectic subspace R^omega, picking
/// the first canonical candidate in generator order at each step.
inline CoisotropeDecomposition decompose_coisotrope(const Subspace& c, const OddSympSpace& v)
{
    const SubspaceClass cls = classify(c, v);
    if (cls != SubspaceClass::coisotropic && cls != SubspaceClass::lagrangian)
        throw NotCoisotropic();
    CoisotropeDecomposition out;
    out.i_part = symp_complement(c, v);
    out.r_part = complement_within(out.i_part, c);
    const Subspace r_omega = symp_complement(out.r_part, v);
    const OddSympSpace sub = restrict_symplectic(r_omega, v);

    // Coordinates of I inside R^omega.
    std::vector<std::vector<Rational>> icols;
    for (std::size_t j = 0; j < out.i_part.dim(); ++j) {
        auto coords = r_omega.coordinates_of(out.i_part.basis().column(j));
        if (!coords)
            throw DomainError("internal: I not inside R^omega");
        icols.push_back(*coords);
    }
    const Subspace i_sub = Subspace::span(sub.space(), icols);

    Subspace b = Subspace::zero(sub.space());
    const DimPoly i_dims = dimsum(i_sub);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [deg_i, count] : i_dims.coeffs()) {
            const int k = 1 - deg_i; // b-degree paired with I-degree deg_i
            if (dimsum(b).coeff(k) >= count)
                continue;
            const Subspace b_omega = symp_complement(b, sub);
            const Subspace avoid = sum(b, i_sub);
            for (std::size_t j = 0; j < b_omega.dim(); ++j) {
                if (b_omega.column_degree(j) != k)
                    continue;
                const auto cand = b_omega.basis().column(j);
                if (!avoid.contains_vector(cand)) {
                    b = sum(b, Subspace::span(sub.space(), {cand}));
                    grew = true;
                    break;
                }
            }
        }
    }
    out.b_part = Subspace(v.space(), r_omega.basis() * b.basis());
    return out;
}

inline bool orthogonal_span(const Relation& l, const Relation& lt)
{
    if (l.source() != lt.source())
        throw SourceTargetMismatch();
    if (!is_reduction(l) || !is_reduction(lt))
        throw NotLagrangian();
    const Subspace k1 = kernel(l), k2 = kernel(lt);
    return (k1.basis().transposed() * l.source().omega() * k2.basis()).is_zero();
}

/// Pushout of an orthogonal span of reductions: the factorization cospan of
/// Ltilde o L^T.
inline FactorizationCospan pushout_span(const Relation& l, const Relation& lt)
{
    if (!orthogonal_span(l, lt))
        throw NotOrthogonal();
    return factorize(compose(transpose(l), lt));
}

/// K = M o L^T when Im M^T is contained in Im L^T; then K o L = M.
inline Relation factor_through(const Relation& m, const Relation& l)
{
    if (m.source() != l.source())
        throw SourceTargetMismatch();
    if (!is_reduction(m) || !is_reduction(l))
        throw NotLagrangian();
    if (!contains(image(transpose(l)), image(transpose(m))))
        throw DoesNotFactor();
    return compose(transpose(l), m);
}

/// A coisotropic relation V1 -> V2 together with its chosen reduction data.
struct CoisoRelation {
    OddSympSpace from, to;
    Subspace coisotrope;        // inside flip(V1) x V2
    CoisotropicReduction red;   // reduction of the coisotrope

    static CoisoRelation make(const OddSympSpace& from, const OddSympSpace& to,
                              const Subspace& c)
    {
        CoisoRelation r;
        r.from = from;
        r.to = to;
        r.coisotrope = c;
        r.red = coisotropic_reduce(c, product_symp(flip(from), to));
        return r;
    }
};

/// Set-theoretic composition of coisotropic relations.
inline Subspace compose_coisotropes(const CoisoRelation& c1, const CoisoRelation& c2)
{
    if (c1.to != c2.from)
        throw SourceTargetMismatch();
    return compose_graphs(c1.coisotrope, c1.from.dim(), c1.to.dim(), c2.coisotrope,
                          c2.to.dim(), product(c1.from.space(), c2.to.space()));
}

/// The reduction X: R_C x R_C' ->> R_{C' o C} through which quantum
/// compositions integrate, {([v1,v2], [v2,v3], [v1,v3])}.
inline Relation compositor(const CoisoRelation& c1, const CoisoRelation& c2,
                           const CoisotropicReduction& red_composed)
{
    if (c1.to != c2.from)
        throw SourceTargetMismatch();
    const std::size_t n1 = c1.from.dim(), n2 = c1.to.dim(), n3 = c2.to.dim();
    const Subspace& a = c1.coisotrope;
    const Subspace& b = c2.coisotrope;

    // Pairs (x, y) of coefficients with matching middle component.
    Matrix constraints(n2, a.dim() + b.dim());
    for (std::size_t i = 0; i < n2; ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j)
            constraints(i, j) = a.basis()(n1 + i, j);
        for (std::size_t j = 0; j < b.dim(); ++j)
            constraints(i, a.dim() + j) = -b.basis()(i, j);
    }
    std::vector<int> coeff_degrees = a.column_degrees();
    coeff_degrees.insert(coeff_degrees.end(), b.column_degrees().begin(),
                         b.column_degrees().end());
    const Matrix ker = graded_kernel(constraints, coeff_degrees);

    const std::size_t r1 = c1.red.reduced.dim();
    const std::size_t r2 = c2.red.reduced.dim();
    const std::size_t r3 = red_composed.reduced.dim();
    std::vector<std::vector<Rational>> cols;
    for (std::size_t t = 0; t < ker.cols(); ++t) {
        std::vector<Rational> ca(n1 + n2), cb(n2 + n3);
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (ker(j, t) != 0)
                for (std::size_t i = 0; i < n1 + n2; ++i)
                    ca[i] += a.basis()(i, j) * ker(j, t);
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (ker(a.dim() + j, t) != 0)
                for (std::size_t i = 0; i < n2 + n3; ++i)
                    cb[i] += b.basis()(i, j) * ker(a.dim() + j, t);
        std::vector<Rational> cc(n1 + n3);
        for (std::size_t i = 0; i < n1; ++i)
            cc[i] = ca[i];
        for (std::size_t i = 0; i < n3; ++i)
            cc[n1 + i] = cb[n2 + i];
        const auto pa = c1.red.project(ca);
        const auto pb = c2.red.project(cb);
        const auto pc = red_composed.project(cc);
        std::vector<Rational> col(r1 + r2 + r3);
        for (std::size_t i = 0; i < r1; ++i)
            col[i] = pa[i];
        for (std::size_t i = 0; i < r2; ++i)
            col[r1 + i] = pb[i];
        for (std::size_t i = 0; i < r3; ++i)
            col[r1 + r2 + i] = pc[i];
        cols.push_back(std::move(col));
    }
    const OddSympSpace src = product_symp(c1.red.reduced, c2.red.reduced);
    return Relation(src, red_composed.reduced,
                    Subspace::span(product(src.space(), red_composed.reduced.space()), cols));
}

} // namespace qsymp
