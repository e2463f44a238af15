#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggb/closed_form.hpp"
#include "ggb/generic.hpp"
#include "testutil.hpp"

using namespace ggb;
using testutil::fp;
using testutil::mono;
using testutil::poly2;
using testutil::q;
using testutil::rat;

namespace {

ClosedFormBasis sampled_basis(int n, int m, const CoeffDomain& d, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        std::set<Scalar> used;
        const Polynomial f1 = sample_generic_form(n, 2, d, rng, used);
        const Polynomial f2 = sample_generic_form(m, 2, d, rng, used);
        try {
            return closed_form_basis(f1, reduce_second_generator(f1, f2));
        } catch (const Degenerate&) {
            if (attempt > 20) throw;
        }
    }
}

} // namespace

TEST_CASE("worked rational instance: the recursion ends at 3201/64 y^4") {
    const Polynomial f1 = poly2("x^2 + 3*x*y + 5*y^2");

    SUBCASE("monic second generator") {
        const ClosedFormBasis basis = closed_form_basis(f1, poly2("x*y^2 + 67/8*y^3"));
        REQUIRE(basis.polynomials().size() == 3);
        CHECK(basis.polynomials()[2] == poly2("3201/64*y^4"));
        CHECK(basis.coefficient(3, 1) == q("3201/64"));
    }
    SUBCASE("raw second generator gives the same tail") {
        const ClosedFormBasis basis = closed_form_basis(f1, poly2("8*x*y^2 + 67*y^3"));
        REQUIRE(basis.polynomials().size() == 3);
        CHECK(basis.polynomials()[2] == poly2("3201/64*y^4"));
    }
    SUBCASE("agrees with one S-polynomial reduction step") {
        const Polynomial f2 = poly2("x*y^2 + 67/8*y^3");
        const Polynomial direct = normal_form(s_polynomial(f1, f2), {f2});
        CHECK(direct == poly2("3201/64*y^4"));
    }
}

TEST_CASE("n = 1 has no recursion steps") {
    const Polynomial f1 = poly2("2*x + 3*y");
    const Polynomial r = poly2("7*y^5");
    const ClosedFormBasis basis = closed_form_basis(f1, r);
    REQUIRE(basis.polynomials().size() == 2);
    CHECK(basis.polynomials()[0] == f1);
    CHECK(basis.polynomials()[1] == r);
    CHECK(basis.spec().mu() == 4);
}

TEST_CASE("leading monomials follow the schedule") {
    for (auto [n, m] : {std::pair{2, 3}, {3, 3}, {4, 7}, {5, 6}}) {
        const ClosedFormBasis basis = sampled_basis(n, m, fp(), 50);
        const ClosedFormSpec& spec = basis.spec();
        REQUIRE(static_cast<int>(basis.polynomials().size()) == n + 1);
        CHECK(basis.polynomials()[0].leading_monomial() == mono({n, 0}));
        for (int t = 2; t <= n + 1; ++t) {
            CHECK(basis.polynomials()[static_cast<std::size_t>(t - 1)]
                      .leading_monomial() ==
                  Monomial({n - (t - 1), spec.mu() + 2 * t - 3}));
            CHECK(closed_form_leading_monomial(spec, t) ==
                  basis.polynomials()[static_cast<std::size_t>(t - 1)]
                      .leading_monomial());
        }
        // last element is a single term in y
        const Polynomial& last = basis.polynomials().back();
        REQUIRE(last.term_count() == 1);
        CHECK(last.leading_monomial() == Monomial({0, spec.mu() + 2 * n - 1}));
        // every stored coefficient is nonzero, rows shrink by one
        for (int t = 2; t <= n + 1; ++t)
            CHECK(closed_form_row_length(spec, t) == n - t + 2);
    }
}

TEST_CASE("shape validation raises Degenerate") {
    const Polynomial f1 = poly2("x^2 + 3*x*y + 5*y^2");
    // wrong support for r (x^2 term should be gone)
    CHECK_THROWS_AS(closed_form_basis(f1, poly2("x^2*y + y^3")), Degenerate);
    CHECK_THROWS_AS(closed_form_basis(f1, poly2("y^3")), Degenerate);
    CHECK_THROWS_AS(closed_form_basis(poly2("x^2 + y^2"), poly2("x*y^2 + y^3")),
                    Degenerate);
}

TEST_CASE("explicit initial ideal") {
    CHECK(closed_form_initial_ideal(ClosedFormSpec(2, 3)) ==
          MonomialIdeal(2, {mono({2, 0}), mono({1, 2}), mono({0, 4})}));
    CHECK(closed_form_initial_ideal(ClosedFormSpec(1, 4)) ==
          MonomialIdeal(2, {mono({1, 0}), mono({0, 4})}));
    CHECK(closed_form_initial_ideal(ClosedFormSpec(3, 3)) ==
          MonomialIdeal(2, {mono({3, 0}), mono({2, 1}), mono({1, 3}), mono({0, 5})}));
    for (int n = 1; n <= 6; ++n)
        for (int m = n; m <= 8; ++m)
            CHECK(closed_form_initial_ideal(ClosedFormSpec(n, m))
                      .generators()
                      .size() == static_cast<std::size_t>(n + 1));
    CHECK_THROWS_AS(ClosedFormSpec(0, 3), Error);
    CHECK_THROWS_AS(ClosedFormSpec(4, 3), Error);
}

TEST_CASE("staircase corners of the explicit ideal follow the formula") {
    for (int n = 1; n <= 6; ++n) {
        for (int m = n; m <= 9; ++m) {
            const Staircase s =
                staircase(closed_form_initial_ideal(ClosedFormSpec(n, m)));
            const int mu = m - n;
            REQUIRE(s.corners.size() == static_cast<std::size_t>(n + 1));
            CHECK(s.corners[0] == std::pair<int, int>(n, 0));
            for (int i = 1; i <= n; ++i)
                CHECK(s.corners[static_cast<std::size_t>(i)] ==
                      std::pair<int, int>(n - i, mu + 2 * i - 1));
        }
    }
}

TEST_CASE("consecutive syzygies") {
    const ClosedFormSpec spec(2, 3); // mu = 1
    const Syzygy s1 = syzygy_pair(1, spec, rat());
    REQUIRE(s1.entries.size() == 3);
    CHECK(s1.entries[0] == poly2("y^2")); // y^(mu+1)
    CHECK(s1.entries[1] == poly2("-x"));
    CHECK(s1.entries[2].is_zero());

    const Syzygy s2 = syzygy_pair(2, spec, rat());
    CHECK(s2.entries[0].is_zero());
    CHECK(s2.entries[1] == poly2("y^2"));
    CHECK(s2.entries[2] == poly2("-x"));

    CHECK_THROWS_AS(syzygy_pair(0, spec, rat()), IndexOutOfRange);
    CHECK_THROWS_AS(syzygy_pair(3, spec, rat()), IndexOutOfRange);
}

TEST_CASE("syzygy verification") {
    const ClosedFormBasis basis = sampled_basis(3, 5, fp(), 7);
    const ClosedFormSpec spec(3, 5);
    for (int i = 1; i <= 3; ++i)
        CHECK(verify_syzygy(syzygy_pair(i, spec, fp()), basis));

    // perturbing one entry breaks the relation
    Syzygy bad = syzygy_pair(1, spec, fp());
    bad.entries[0] = bad.entries[0].scaled(Scalar::from_int(fp(), 2));
    CHECK(!verify_syzygy(bad, basis));

    Syzygy short_one = syzygy_pair(1, spec, fp());
    short_one.entries.pop_back();
    CHECK_THROWS_AS(verify_syzygy(short_one, basis), LengthMismatch);
}

TEST_CASE("telescoping expansion") {
    SUBCASE("base case t = 1 is the consecutive syzygy") {
        const ClosedFormSpec spec(3, 4);
        for (int i = 1; i <= 3; ++i) {
            const SyzygyExpansion e = expand_syzygy(i, 1, spec, rat());
            CHECK(e.entrywise_equal);
            REQUIRE(e.certificate.size() == 1);
            CHECK(e.certificate[0].multiplier == mono({0, 0}));
            for (std::size_t k = 0; k < e.direct.entries.size(); ++k)
                CHECK(e.direct.entries[k] ==
                      syzygy_pair(i, spec, rat()).entries[k]);
        }
    }
    SUBCASE("i = 1, t = 2: middle entries cancel") {
        const ClosedFormSpec spec(2, 3); // mu = 1
        const SyzygyExpansion e = expand_syzygy(1, 2, spec, rat());
        CHECK(e.entrywise_equal);
        CHECK(e.direct.entries[0] == poly2("y^4")); // y^(mu+3)
        CHECK(e.direct.entries[1].is_zero());
        CHECK(e.direct.entries[2] == poly2("-x^2"));
        REQUIRE(e.certificate.size() == 2);
        CHECK(e.certificate[0].multiplier == mono({0, 2}));
        CHECK(e.certificate[0].pair == std::pair<int, int>(1, 2));
        CHECK(e.certificate[1].multiplier == mono({1, 0}));
        CHECK(e.certificate[1].pair == std::pair<int, int>(2, 3));
    }
    SUBCASE("i = 2, t = 2 inside a larger basis") {
        const ClosedFormSpec spec(3, 3);
        const SyzygyExpansion e = expand_syzygy(2, 2, spec, rat());
        CHECK(e.entrywise_equal);
        CHECK(e.direct.entries[0].is_zero());
        CHECK(e.direct.entries[1] == poly2("y^4"));
        CHECK(e.direct.entries[2].is_zero());
        CHECK(e.direct.entries[3] == poly2("-x^2"));
    }
    SUBCASE("identity holds for every admissible pair up to n = 8") {
        for (int n = 1; n <= 8; ++n) {
            for (int m : {n, n + 2}) {
                const ClosedFormSpec spec(n, m);
                for (int i = 1; i <= n; ++i)
                    for (int t = 1; i + t <= n + 1; ++t)
                        CHECK(expand_syzygy(i, t, spec, rat()).entrywise_equal);
            }
        }
    }
    CHECK_THROWS_AS(expand_syzygy(2, 3, ClosedFormSpec(3, 4), rat()),
                    IndexOutOfRange);
}

TEST_CASE("expanded syzygies verify against a sampled basis") {
    const ClosedFormBasis basis = sampled_basis(4, 6, fp(), 15);
    const ClosedFormSpec spec(4, 6);
    for (int i = 1; i <= 4; ++i) {
        for (int t = 1; i + t <= 5; ++t) {
            const SyzygyExpansion e = expand_syzygy(i, t, spec, fp());
            CHECK(verify_syzygy(e.direct, basis));
            CHECK(verify_syzygy(e.expanded, basis));
        }
    }
}

TEST_CASE("cross validation") {
    SUBCASE("worked rational pair") {
        const CrossValidateReport rep = cross_validate(
            ClosedFormSpec(2, 3), poly2("x^2 + 3*x*y + 5*y^2"),
            poly2("7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3"));
        CHECK(rep.agreement);
        CHECK(rep.mismatch.empty());
        REQUIRE(rep.buchberger_initial.size() == 3);
        CHECK(rep.buchberger_initial == rep.closed_form_initial);
    }
    SUBCASE("degenerate-size case (1, 5)") {
        Rng rng(61);
        std::set<Scalar> used;
        const Polynomial f1 = sample_generic_form(1, 2, fp(), rng, used);
        const Polynomial f2 = sample_generic_form(5, 2, fp(), rng, used);
        const CrossValidateReport rep = cross_validate(ClosedFormSpec(1, 5), f1, f2);
        CHECK(rep.agreement);
        CHECK(rep.buchberger_initial ==
              std::vector<Monomial>{mono({0, 5}), mono({1, 0})});
    }
    SUBCASE("(4, 7) over the default prime") {
        Rng rng(derive_seed(123, 0));
        std::set<Scalar> used;
        const Polynomial f1 = sample_generic_form(4, 2, fp(), rng, used);
        const Polynomial f2 = sample_generic_form(7, 2, fp(), rng, used);
        const CrossValidateReport rep = cross_validate(ClosedFormSpec(4, 7), f1, f2);
        CHECK(rep.agreement);
    }
    SUBCASE("degree mismatch is rejected") {
        CHECK_THROWS_AS(cross_validate(ClosedFormSpec(2, 4),
                                       poly2("x^2 + 3*x*y + 5*y^2"),
                                       poly2("7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3")),
                        Error);
    }
}
