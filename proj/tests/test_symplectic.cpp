#include <catch2/catch_amalgamated.hpp>

#include "qsymp/random_instances.hpp"

using namespace qsymp;

namespace {

std::vector<Rational> vec(std::initializer_list<int> xs)
{
    std::vector<Rational> v;
    for (int x : xs)
        v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("shifted cotangent of the line")
{
    const OddSympSpace v = shifted_cotangent(GradedSpace({0}));
    CHECK(v.space().degrees() == std::vector<int>{1, 0});
    CHECK(v.omega()(0, 1) == 1);
    CHECK(v.omega()(1, 0) == -1);

    // the base is Lagrangian and equals its own complement
    const Subspace base = Subspace::span(v.space(), {vec({0, 1})});
    CHECK(symp_complement(base, v) == base);
    CHECK(classify(base, v) == SubspaceClass::lagrangian);

    CHECK(symp_complement(Subspace::full(v.space()), v).dim() == 0);
    CHECK(symp_complement(Subspace::zero(v.space()), v) == Subspace::full(v.space()));
}

TEST_CASE("odd symplectic dimension balance")
{
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        const DimPoly p = dimsum(v.space());
        CHECK(p.reflected().shifted(1) == p);
    }
}

TEST_CASE("complement involution and dimsum identity")
{
    Rng rng(23);
    for (int i = 0; i < 15; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        const Subspace w = random_isotropic(v, rng, 2);
        const Subspace c = symp_complement(w, v);
        CHECK(symp_complement(c, v) == w);
        // s^{-1} dimsum(W^omega)(s) = dimsum(V)(s^{-1}) - dimsum(W)(s^{-1})
        CHECK(dimsum(c).shifted(-1) == dimsum(v.space()).reflected() - dimsum(w).reflected());
    }
}

TEST_CASE("classification against a brute-force pairing oracle")
{
    Rng rng(37);
    for (int i = 0; i < 20; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        if (v.is_point())
            continue;
        Subspace w = random_isotropic(v, rng, 2);
        if (rng() % 2)
            w = symp_complement(w, v);
        const SubspaceClass cls = classify(w, v);

        // oracle: evaluate omega on all basis pairs
        const Subspace comp = symp_complement(w, v);
        bool iso = true;
        for (std::size_t a = 0; a < w.dim(); ++a)
            for (std::size_t b = 0; b < w.dim(); ++b)
                if (v.pair(w.basis().column(a), w.basis().column(b)) != 0)
                    iso = false;
        const bool coiso = contains(w, comp);
        if (iso && coiso)
            CHECK(cls == SubspaceClass::lagrangian);
        else if (iso)
            CHECK(cls == SubspaceClass::isotropic);
        else if (coiso)
            CHECK(cls == SubspaceClass::coisotropic);
    }
}

TEST_CASE("conormal of a subspace is Lagrangian")
{
    const GradedSpace w({0, 0, 1});
    const OddSympSpace tv = shifted_cotangent(w);
    // N*[1] span(e_1): Ann(span(e_1)) in the fiber block plus the base line.
    const Subspace conormal = Subspace::span(
        tv.space(), {vec({0, 1, 0, 0, 0, 0}), vec({0, 0, 1, 0, 0, 0}), vec({0, 0, 0, 1, 0, 0})});
    CHECK(classify(conormal, tv) == SubspaceClass::lagrangian);
}

TEST_CASE("coisotropic reduction")
{
    Rng rng(41);
    for (int i = 0; i < 12; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        // C = V reduces to V itself
        const CoisotropicReduction full = coisotropic_reduce(Subspace::full(v.space()), v);
        CHECK(full.reduced.dim() == v.dim());
        // Lagrangian reduces to the point
        if (v.dim() > 0) {
            const Subspace l = random_lagrangian(v, rng);
            CHECK(coisotropic_reduce(l, v).reduced.is_point());
        }
        // iota^* omega = pi^* omega_R on a random coisotrope
        const Subspace c = random_coisotrope(v, rng);
        const CoisotropicReduction red = coisotropic_reduce(c, v);
        for (std::size_t a = 0; a < c.dim(); ++a)
            for (std::size_t b = 0; b < c.dim(); ++b) {
                const auto ca = c.basis().column(a), cb = c.basis().column(b);
                CHECK(v.pair(ca, cb) == red.reduced.pair(red.project(ca), red.project(cb)));
            }
    }
    for (int i = 0; i < 10; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 2);
        const Subspace bad = random_isotropic(v, rng, 1);
        if (bad.dim() > 0 && classify(bad, v) == SubspaceClass::isotropic) {
            CHECK_THROWS_AS(coisotropic_reduce(bad, v), NotCoisotropic);
            break;
        }
    }
}

TEST_CASE("relation composition, transpose, kernel, image")
{
    Rng rng(53);
    for (int i = 0; i < 12; ++i) {
        const OddSympSpace u = random_odd_symp(rng, 2);
        const OddSympSpace v = random_odd_symp(rng, 2);
        const Relation l = random_lagrangian_relation(u, v, rng);
        CHECK(l.is_lagrangian());

        // identity axiom
        CHECK(compose(diagonal(u), l) == l);
        CHECK(compose(l, diagonal(v)) == l);

        // kernel(L^T) = image(L)^omega
        CHECK(kernel(transpose(l)) == symp_complement(image(l), v));
        CHECK(kernel(l) == symp_complement(image(transpose(l)), u));

        // composition of Lagrangians is Lagrangian
        const OddSympSpace w = random_odd_symp(rng, 2);
        const Relation m = random_lagrangian_relation(v, w, rng);
        CHECK(compose(l, m).is_lagrangian());
    }
}

TEST_CASE("reductions satisfy L o L^T = 1")
{
    Rng rng(59);
    for (int i = 0; i < 12; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        const Relation l = random_reduction(v, rng);
        CHECK(is_reduction(l));
        CHECK(compose(transpose(l), l) == diagonal(l.target()));
        CHECK(is_coreduction(transpose(l)));
        CHECK(is_reduction(diagonal(v)));
        CHECK(is_coreduction(diagonal(v)));
    }
}

TEST_CASE("cotangent lift functoriality and kernels")
{
    Rng rng(61);
    const GradedSpace w1({0, 0, 1});
    const GradedSpace w2({0, 1});
    const GradedSpace w3({0, 1, 1});
    for (int i = 0; i < 6; ++i) {
        Matrix f(w2.dim(), w1.dim());
        for (std::size_t r = 0; r < f.rows(); ++r)
            for (std::size_t c = 0; c < f.cols(); ++c)
                if (w2.degree(r) == w1.degree(c))
                    f(r, c) = random_small(rng);
        Matrix g(w3.dim(), w2.dim());
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c)
                if (w3.degree(r) == w2.degree(c))
                    g(r, c) = random_small(rng);

        const Relation lf = cotangent_lift(f, w1, w2);
        const Relation lg = cotangent_lift(g, w2, w3);
        CHECK(lf.is_lagrangian());
        CHECK(compose(lf, lg) == cotangent_lift(g * f, w1, w3));

        // Ker(lift f) = 0 (+) Ker f ; Im(lift f) = V* (+) Im f
        const Matrix kf = f.kernel_basis();
        std::vector<std::vector<Rational>> kcols;
        for (std::size_t c = 0; c < kf.cols(); ++c) {
            std::vector<Rational> col(2 * w1.dim());
            for (std::size_t r = 0; r < w1.dim(); ++r)
                col[w1.dim() + r] = kf(r, c);
            kcols.push_back(col);
        }
        CHECK(kernel(lf) == Subspace::span(lf.source().space(), kcols));

        std::vector<std::vector<Rational>> imcols;
        for (std::size_t r = 0; r < w2.dim(); ++r) {
            std::vector<Rational> col(2 * w2.dim());
            col[r] = 1;
            imcols.push_back(col);
        }
        for (std::size_t c = 0; c < w1.dim(); ++c) {
            std::vector<Rational> col(2 * w2.dim());
            for (std::size_t r = 0; r < w2.dim(); ++r)
                col[w2.dim() + r] = f(r, c);
            imcols.push_back(col);
        }
        CHECK(image(lf) == Subspace::span(lf.target().space(), imcols));
    }

    // identity lifts to the diagonal
    const Relation id = cotangent_lift(Matrix::identity(2), w2, w2);
    CHECK(id == diagonal(shifted_cotangent(w2)));

    // zero map R -> R: the factorization middle is the point
    const GradedSpace line({0});
    const Relation zero_lift = cotangent_lift(Matrix(1, 1), line, line);
    CHECK(factorize(zero_lift).middle.is_point());
}

TEST_CASE("factorization cospan reproduces the relation")
{
    Rng rng(67);
    for (int i = 0; i < 25; ++i) {
        const OddSympSpace u = random_odd_symp(rng, 2);
        const OddSympSpace v = random_odd_symp(rng, 2);
        const Relation l = random_lagrangian_relation(u, v, rng);
        const FactorizationCospan fc = factorize(l);
        CHECK(is_reduction(fc.left));
        CHECK(is_reduction(fc.right));
        CHECK(compose(fc.left, transpose(fc.right)) == l);

        // induced map between the two canonical quotients is an isomorphism
        const CoisotropicReduction ru = coisotropic_reduce(image(transpose(l)), u);
        const Relation lu = reduction_relation(ru, u);
        const Relation phi = compose(compose(transpose(lu), l), fc.right);
        CHECK(is_reduction(phi));
        CHECK(is_coreduction(phi));
    }
}

TEST_CASE("factorization of a lifted map has middle T*[1](Im f)")
{
    const GradedSpace w1({0, 0});
    const GradedSpace w2({0});
    Matrix f(1, 2);
    f(0, 0) = 1;
    f(0, 1) = 2;
    const Relation lf = cotangent_lift(f, w1, w2);
    const FactorizationCospan fc = factorize(lf);
    CHECK(fc.middle.dim() == 2); // T*[1] of the one-dimensional image
    CHECK(dimsum(fc.middle.space()) == dimsum(shifted_cotangent(w2).space()));
}

TEST_CASE("coisotrope decomposition blocks")
{
    Rng rng(71);
    for (int i = 0; i < 15; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        const Subspace c = random_coisotrope(v, rng);
        const CoisotropeDecomposition d = decompose_coisotrope(c, v);

        // direct sum
        CHECK(sum(sum(d.r_part, d.i_part), d.b_part) == Subspace::full(v.space()));
        CHECK(dimsum(d.r_part) + dimsum(d.i_part) + dimsum(d.b_part) == dimsum(v.space()));

        // block form of omega
        CHECK((d.r_part.basis().transposed() * v.omega() * d.i_part.basis()).is_zero());
        CHECK((d.r_part.basis().transposed() * v.omega() * d.b_part.basis()).is_zero());
        CHECK((d.i_part.basis().transposed() * v.omega() * d.i_part.basis()).is_zero());
        CHECK((d.b_part.basis().transposed() * v.omega() * d.b_part.basis()).is_zero());

        // appendix dimension balance
        CHECK(dimsum(d.i_part).shifted(-1) == dimsum(d.b_part).reflected());

        // C = V gives I = B = 0
        const CoisotropeDecomposition full = decompose_coisotrope(Subspace::full(v.space()), v);
        CHECK(full.i_part.dim() == 0);
        CHECK(full.b_part.dim() == 0);
    }

    // Lagrangian in T*[1]R: R = *, I = C, B a complementary Lagrangian
    const OddSympSpace tv = shifted_cotangent(GradedSpace({0}));
    const Subspace base = Subspace::span(tv.space(), {vec({0, 1})});
    const CoisotropeDecomposition d = decompose_coisotrope(base, tv);
    CHECK(d.r_part.dim() == 0);
    CHECK(d.i_part == base);
    CHECK(classify(d.b_part, tv) == SubspaceClass::lagrangian);
}

TEST_CASE("orthogonal spans and pushouts")
{
    Rng rng(73);
    int orthogonal_seen = 0, nonorthogonal_seen = 0;
    for (int i = 0; i < 30; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        if (v.dim() == 0)
            continue;
        const Relation l = random_reduction(v, rng);
        // same reduction twice is orthogonal with pushout middle = target
        CHECK(orthogonal_span(l, l));
        const FactorizationCospan self = pushout_span(l, l);
        CHECK(self.middle.dim() == l.target().dim());

        const Relation lt = random_reduction(v, rng, 2);
        const bool ortho = orthogonal_span(l, lt);
        // three-way agreement
        const Subspace k_sum = sum(kernel(l), kernel(lt));
        const Subspace im_cap = intersect(image(transpose(l)), image(transpose(lt)));
        const SubspaceClass sum_cls = classify(k_sum, v);
        const SubspaceClass cap_cls = classify(im_cap, v);
        CHECK(ortho ==
              (sum_cls == SubspaceClass::isotropic || sum_cls == SubspaceClass::lagrangian));
        CHECK(ortho ==
              (cap_cls == SubspaceClass::coisotropic || cap_cls == SubspaceClass::lagrangian));

        if (ortho) {
            ++orthogonal_seen;
            const FactorizationCospan po = pushout_span(l, lt);
            CHECK(compose(l, po.left) == compose(lt, po.right));
        } else {
            ++nonorthogonal_seen;
            CHECK_THROWS_AS(pushout_span(l, lt), NotOrthogonal);
        }
    }
    CHECK(orthogonal_seen > 0);
}

TEST_CASE("footnote counterexample: reductions along R+I and R+B")
{
    Rng rng(79);
    for (int i = 0; i < 40; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        const Subspace c = random_coisotrope(v, rng);
        const CoisotropeDecomposition d = decompose_coisotrope(c, v);
        if (d.i_part.dim() == 0)
            continue;
        const Subspace c1 = sum(d.r_part, d.i_part);
        const Subspace c2 = sum(d.r_part, d.b_part);
        const Relation l1 = reduction_relation(coisotropic_reduce(c1, v), v);
        const Relation l2 = reduction_relation(coisotropic_reduce(c2, v), v);
        CHECK_FALSE(orthogonal_span(l1, l2));
        return;
    }
    FAIL("no instance generated");
}

TEST_CASE("factoring a reduction through another")
{
    Rng rng(83);
    int factored = 0, refused = 0;
    for (int i = 0; i < 30; ++i) {
        const OddSympSpace v = random_odd_symp(rng, 3);
        const Relation l = random_reduction(v, rng);
        // M = L factors with K = identity
        CHECK(factor_through(l, l) == diagonal(l.target()));

        const Relation m = random_reduction(v, rng);
        const bool cond4 = contains(image(transpose(l)), image(transpose(m)));
        // all four conditions of the factoring proposition agree
        const Relation mtm = compose(m, transpose(m)); // M^T o M : V -> V
        const Relation ltl = compose(l, transpose(l)); // L^T o L : V -> V
        const bool cond3 = compose(ltl, mtm) == mtm;   // M^T o M o L^T o L = M^T o M
        const bool cond2 = compose(ltl, m) == m;       // M o L^T o L = M
        CHECK(cond4 == cond3);
        CHECK(cond4 == cond2);
        if (cond4) {
            ++factored;
            const Relation k = factor_through(m, l);
            CHECK(compose(l, k) == m);
            CHECK(is_reduction(k));
        } else {
            ++refused;
            CHECK_THROWS_AS(factor_through(m, l), DoesNotFactor);
        }
    }
    CHECK(factored > 0);
    CHECK(refused > 0);
}

TEST_CASE("compositor is a surjective Lagrangian and is unital")
{
    Rng rng(89);
    int done = 0;
    for (int i = 0; i < 20 && done < 8; ++i) {
        const OddSympSpace v1 = random_odd_symp(rng, 2);
        const OddSympSpace v2 = random_odd_symp(rng, 2);
        const OddSympSpace v3 = random_odd_symp(rng, 2);
        const OddSympSpace p12 = product_symp(flip(v1), v2);
        const OddSympSpace p23 = product_symp(flip(v2), v3);

        const CoisoRelation c1 = CoisoRelation::make(
            v1, v2,
            Subspace(product(v1.space(), v2.space()), random_coisotrope(p12, rng).basis()));
        const CoisoRelation c2 = CoisoRelation::make(
            v2, v3,
            Subspace(product(v2.space(), v3.space()), random_coisotrope(p23, rng).basis()));

        const Subspace composed = compose_coisotropes(c1, c2);
        const OddSympSpace p13 = product_symp(flip(v1), v3);
        const CoisotropicReduction red_comp = coisotropic_reduce(composed, p13);
        const Relation x = compositor(c1, c2, red_comp);
        CHECK(is_reduction(x));

        // unitality: C' = diagonal gives X with trivial kernel
        const CoisoRelation diag_rel = CoisoRelation::make(v2, v2, diagonal(v2).graph());
        const Subspace cd = compose_coisotropes(c1, diag_rel);
        CHECK(cd == c1.coisotrope);
        const Relation xu = compositor(c1, diag_rel, c1.red);
        CHECK(xu.target() == c1.red.reduced);
        CHECK(kernel(xu).dim() == 0);
        CHECK(is_coreduction(xu));
        ++done;
    }
    CHECK(done > 0);
}

TEST_CASE("two Lagrangian coisotropes give the point compositor")
{
    Rng rng(91);
    const OddSympSpace v1 = shifted_cotangent(GradedSpace({0}));
    const OddSympSpace v2 = shifted_cotangent(GradedSpace({0}));
    const OddSympSpace p12 = product_symp(flip(v1), v2);
    const Subspace l1 = random_lagrangian(p12, rng);
    const Subspace l2 = random_lagrangian(p12, rng);
    const CoisoRelation c1 = CoisoRelation::make(v1, v2, l1);
    const CoisoRelation c2 = CoisoRelation::make(v2, v1, Subspace(
        product(v2.space(), v1.space()),
        transpose_graph(l2, v1.dim(), v2.dim(), product(v2.space(), v1.space())).basis()));
    const Subspace composed = compose_coisotropes(c1, c2);
    const CoisotropicReduction red_comp =
        coisotropic_reduce(composed, product_symp(flip(v1), v1));
    const Relation x = compositor(c1, c2, red_comp);
    CHECK(x.source().is_point());
    CHECK(x.target().is_point());
}

TEST_CASE("compositor associativity square")
{
    Rng rng(97);
    int done = 0;
    for (int i = 0; i < 30 && done < 6; ++i) {
        const OddSympSpace v1 = random_odd_symp(rng, 1);
        const OddSympSpace v2 = random_odd_symp(rng, 1);
        const OddSympSpace v3 = random_odd_symp(rng, 1);
        const OddSympSpace v4 = random_odd_symp(rng, 1);
        const OddSympSpace p12 = product_symp(flip(v1), v2);
        const OddSympSpace p23 = product_symp(flip(v2), v3);
        const OddSympSpace p34 = product_symp(flip(v3), v4);

        const CoisoRelation c1 = CoisoRelation::make(
            v1, v2,
            Subspace(product(v1.space(), v2.space()), random_coisotrope(p12, rng).basis()));
        const CoisoRelation c2 = CoisoRelation::make(
            v2, v3,
            Subspace(product(v2.space(), v3.space()), random_coisotrope(p23, rng).basis()));
        const CoisoRelation c3 = CoisoRelation::make(
            v3, v4,
            Subspace(product(v3.space(), v4.space()), random_coisotrope(p34, rng).basis()));

        const CoisoRelation c12 = CoisoRelation::make(v1, v3, compose_coisotropes(c1, c2));
        const CoisoRelation c23 = CoisoRelation::make(v2, v4, compose_coisotropes(c2, c3));
        const Subspace c123 = compose_coisotropes(c12, c3);
        CHECK(c123 == compose_coisotropes(c1, c23));
        const CoisotropicReduction red123 =
            coisotropic_reduce(c123, product_symp(flip(v1), v4));

        const Relation x12 = compositor(c1, c2, c12.red);
        const Relation x12_3 = compositor(c12, c3, red123);
        const Relation x23 = compositor(c2, c3, c23.red);
        const Relation x1_23 = compositor(c1, c23, red123);

        // X12 x diagonal_{R3}, then X_{C12,C3}
        const Relation left_top = [&] {
            const OddSympSpace src =
                product_symp(product_symp(c1.red.reduced, c2.red.reduced), c3.red.reduced);
            const OddSympSpace dst = product_symp(c12.red.reduced, c3.red.reduced);
            std::vector<std::vector<Rational>> cols;
            const Subspace& g = x12.graph();
            const std::size_t a = c1.red.reduced.dim() + c2.red.reduced.dim();
            const std::size_t b = c12.red.reduced.dim();
            const std::size_t d3 = c3.red.reduced.dim();
            for (std::size_t j = 0; j < g.dim(); ++j) {
                std::vector<Rational> col(a + d3 + b + d3);
                for (std::size_t r = 0; r < a; ++r)
                    col[r] = g.basis()(r, j);
                for (std::size_t r = 0; r < b; ++r)
                    col[a + d3 + r] = g.basis()(a + r, j);
                cols.push_back(col);
            }
            for (std::size_t e = 0; e < d3; ++e) {
                std::vector<Rational> col(a + d3 + b + d3);
                col[a + e] = 1;
                col[a + d3 + b + e] = 1;
                cols.push_back(col);
            }
            return Relation(src, dst, Subspace::span(product(src.space(), dst.space()), cols));
        }();
        // diagonal_{R1} x X23
        const Relation right_top = [&] {
            const OddSympSpace src =
                product_symp(product_symp(c1.red.reduced, c2.red.reduced), c3.red.reduced);
            const OddSympSpace dst = product_symp(c1.red.reduced, c23.red.reduced);
            std::vector<std::vector<Rational>> cols;
            const Subspace& g = x23.graph();
            const std::size_t d1 = c1.red.reduced.dim();
            const std::size_t a = c2.red.reduced.dim() + c3.red.reduced.dim();
            const std::size_t b = c23.red.reduced.dim();
            for (std::size_t e = 0; e < d1; ++e) {
                std::vector<Rational> col(d1 + a + d1 + b);
                col[e] = 1;
                col[d1 + a + e] = 1;
                cols.push_back(col);
            }
            for (std::size_t j = 0; j < g.dim(); ++j) {
                std::vector<Rational> col(d1 + a + d1 + b);
                for (std::size_t r = 0; r < a; ++r)
                    col[d1 + r] = g.basis()(r, j);
                for (std::size_t r = 0; r < b; ++r)
                    col[d1 + a + d1 + r] = g.basis()(a + r, j);
                cols.push_back(col);
            }
            return Relation(src, dst, Subspace::span(product(src.space(), dst.space()), cols));
        }();

        CHECK(compose(left_top, x12_3) == compose(right_top, x1_23));
        ++done;
    }
    CHECK(done > 0);
}
