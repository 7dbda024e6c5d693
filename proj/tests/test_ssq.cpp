#include "doctest.h"
#include "oracles.hpp"

#include "cytkit/errors.hpp"
#include "cytkit/ssq.hpp"

using namespace cytkit;
using namespace cytkit::ssq;

namespace {

intlat::AbelianInvariants group(std::size_t free, IntVector torsion = {}) { return {free, std::move(torsion)}; }

bool same(const intlat::AbelianInvariants& a, const intlat::AbelianInvariants& b)
{
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

// Nonzero groups of the closed-form table: H^2 = Z, H^4 = Z_order, H^7 = Z^2,
// H^0 = H^5 = H^9 = H^12 = H^14 = Z.
GradedAbelianGroup printed_table(const Int& order)
{
    GradedAbelianGroup g;
    for (int n : {0, 2, 5, 9, 12, 14})
        g.groups[n] = group(1);
    g.groups[7] = group(2);
    if (order != 1)
        g.groups[4] = group(0, {order});
    return g;
}

}  // namespace

TEST_CASE("restriction polynomials")
{
    auto p = restriction_polys(1, 0);
    CHECK(p.abs_m4() == 13);
    CHECK(p.abs_n6() == 6);
    CHECK(p.k8 == 0);
    p = restriction_polys(1, 1);
    CHECK(p.m4 == -36);
    CHECK(p.abs_n6() == 52);
    CHECK(p.abs_k8() == 15);
    p = restriction_polys(0, 1);
    CHECK(p.abs_m4() == 7);
    CHECK(p.abs_n6() == 2);
    CHECK(p.k8 == 0);

    // symmetric-polynomial form versus the closed forms in (k, l) on a box
    for (int k = -30; k <= 30; ++k)
        for (int l = -30; l <= 30; ++l) {
            Int m = -3 * k - 2 * l;
            auto q = restriction_polys_unchecked(k, l);
            CHECK(abs(q.m4) == abs(Int(13 * k * k + 7 * l * l + 16 * k * l)));
            CHECK(abs(q.n6) == abs(Int(6 * k * k * k + 2 * l * l * l + 26 * k * k * l + 18 * k * l * l)));
            CHECK(abs(q.k8) == abs(Int(6 * k * k * k * l + 2 * k * l * l * l + 7 * k * k * l * l)));
            // elementary symmetric origin: u4 = -(sum t_i^2) + sum_{i<j} t_i t_j is symmetric in (k, l, m)
            CHECK(restriction_polys_unchecked(k, l).m4 == -(k * k + l * l + m * m) + k * l + l * m + k * m);
            if (gcd(Int(k), Int(l)) == 1)
                CHECK_NOTHROW(restriction_polys(k, l));
        }
    CHECK_THROWS_AS(restriction_polys(2, 0), DomainError);
    CHECK_THROWS_AS(restriction_polys(2, 4), DomainError);
    CHECK_THROWS_AS(restriction_polys(0, 0), DomainError);
    CHECK(WeightChoice(1, 1).weights() == std::array<Int, 4>{1, 1, -5, 3});
}

TEST_CASE("gcd conditions")
{
    auto g = gcd_conditions(restriction_polys(1, 0));
    CHECK(g.l == 1);
    CHECK(g.eligible);
    CHECK(g.order == 13);
    g = gcd_conditions(restriction_polys(3, 1));
    CHECK(restriction_polys(3, 1).abs_m4() == 172);
    CHECK(restriction_polys(3, 1).abs_n6() == 452);
    CHECK(restriction_polys(3, 1).abs_k8() == 231);
    CHECK(g.l == 4);
    CHECK(g.eligible);
    CHECK(g.order == 43);
    g = gcd_conditions(restriction_polys(1, 1));
    CHECK(g.l == 4);
    CHECK(g.eligible);
    CHECK(g.order == 9);
    g = gcd_conditions({Int(-12), Int(18), Int(4)});
    CHECK(g.l == 6);
    CHECK_FALSE(g.eligible);
}

TEST_CASE("spectral sequence against the total complex")
{
    for (int k = -5; k <= 5; ++k)
        for (int l = -5; l <= 5; ++l) {
            if (gcd(Int(k), Int(l)) != 1)
                continue;
            auto p = restriction_polys(k, l);
            if (!gcd_conditions(p).eligible)
                continue;
            CAPTURE(k);
            CAPTURE(l);
            auto h = spectral_cohomology(k, l);
            auto oracle = oracle::koszul_cohomology(p.m4, p.n6, p.k8, GradedAbelianGroup::top_degree + 1);
            for (int n = 0; n <= GradedAbelianGroup::top_degree; ++n) {
                CAPTURE(n);
                CHECK(h.groups[n].free_rank == oracle[n].first);
                CHECK(h.groups[n].torsion == oracle[n].second);
            }
            CHECK(oracle[15].first == 0);
            CHECK(oracle[15].second.empty());
        }
    // restriction data not coming from weights, with gcd(M4, N6, K8) = 1
    for (auto p : {RestrictionPolys{-6, 4, 9}, RestrictionPolys{-10, 4, 3}, RestrictionPolys{-1, 0, 0}}) {
        auto s = run_spectral_sequence(p);
        auto oracle = oracle::koszul_cohomology(p.m4, p.n6, p.k8, GradedAbelianGroup::top_degree);
        for (int n = 0; n <= GradedAbelianGroup::top_degree; ++n) {
            CHECK(s.cohomology.groups[n].free_rank == oracle[n].first);
            CHECK(s.cohomology.groups[n].torsion == oracle[n].second);
        }
    }
    // without the gcd condition E_inf leaves a genuine extension problem in degree 11
    for (auto p : {RestrictionPolys{-12, 18, 4}, RestrictionPolys{-4, 6, 0}, RestrictionPolys{-2, 0, 0}})
        CHECK_THROWS_AS(run_spectral_sequence(p), InvariantViolation);
}

TEST_CASE("spectral sequence at (1, 0)")
{
    auto s = spectral_sequence(1, 0);
    const auto& h = s.cohomology;
    CHECK(h.betti() == std::vector<std::size_t>{1, 0, 1, 0, 0, 1, 0, 2, 0, 1, 0, 0, 1, 0, 1});
    CHECK(same(h.groups[4], group(0, {13})));
    // Poincare duality puts the same torsion in degree 11; the printed table omits it
    CHECK(same(h.groups[11], group(0, {13})));
    auto printed = printed_table(13);
    for (int n = 0; n <= GradedAbelianGroup::top_degree; ++n)
        if (n != 11)
            CHECK(same(h.groups[n], printed.groups[n]));
    CHECK_FALSE(h == printed);

    REQUIRE(s.pages.size() == 8);
    for (const auto& page : s.pages) {
        CAPTURE(page.r);
        bool expect = page.r == 4 || page.r == 6;
        CHECK(page.has_nonzero_differential() == expect);
    }
    // E_2 is free of rank one on every (even p, fiber degree q) cell
    const auto& e2 = s.pages.front();
    for (int p = 0; p <= 14; p += 2)
        for (int q : {0, 3, 5, 7, 8, 10, 12, 15}) {
            if (p + q > 15)
                continue;
            const Cell* c = e2.cell(p, q);
            REQUIRE(c != nullptr);
            CHECK(same(c->group, group(1)));
        }
    CHECK(e2.cell(1, 3) == nullptr);
    // d_4(1 (x) u3) = M4 s^2
    const Cell* e4 = s.pages[2].cell(4, 0);
    REQUIRE(e4 != nullptr);
    CHECK(same(e4->group, group(1)));
    CHECK(same(s.pages[3].cell(4, 0)->group, group(0, {13})));
    CHECK(same(s.infinity.cell(0, 3)->group, group(0)));
}

TEST_CASE("spectral sequence at (3, 1)")
{
    auto s = spectral_sequence(3, 1);
    const auto& h = s.cohomology;
    CHECK(same(h.groups[4], group(0, {172})));
    CHECK(same(h.groups[6], group(0, {4})));
    CHECK(same(h.groups[9], group(1, {4})));
    CHECK(same(h.groups[11], group(0, {172})));
    // |M4/L| = 43 is the order of the E_inf cell of s^2 u7, not of H^4
    CHECK(same(s.infinity.cell(4, 7)->group, group(0, {43})));
    CHECK(same(s.infinity.cell(6, 5)->group, group(0, {4})));
    CHECK(same(s.infinity.cell(4, 0)->group, group(0, {172})));
    for (const auto& page : s.pages) {
        bool expect = page.r == 4 || page.r == 6 || page.r == 8;
        CHECK(page.has_nonzero_differential() == expect);
    }
}

TEST_CASE("cohomology properties over a box of weights")
{
    int checked = 0;
    for (int k = -7; k <= 7; ++k)
        for (int l = -7; l <= 7; ++l) {
            if (gcd(Int(k), Int(l)) != 1 || !gcd_conditions(restriction_polys(k, l)).eligible)
                continue;
            CAPTURE(k);
            CAPTURE(l);
            auto s = spectral_sequence(k, l);
            const auto& h = s.cohomology;
            long euler = 0;
            for (int n = 0; n <= 14; ++n) {
                CHECK(h.groups[n].free_rank == h.groups[14 - n].free_rank);
                // torsion pairs degree n with degree 15 - n
                if (n >= 1)
                    CHECK(h.groups[n].torsion == h.groups[15 - n].torsion);
                euler += (n % 2 ? -1 : 1) * static_cast<long>(h.groups[n].free_rank);
            }
            CHECK(euler == 0);
            CHECK(h.betti() == std::vector<std::size_t>{1, 0, 1, 0, 0, 1, 0, 2, 0, 1, 0, 0, 1, 0, 1});
            auto p = restriction_polys(k, l);
            CHECK(h.groups[4].torsion == IntVector{p.abs_m4()});
            for (int r : {2, 3, 5, 7})
                CHECK_FALSE(s.pages[static_cast<std::size_t>(r - 2)].has_nonzero_differential());
            ++checked;
        }
    CHECK(checked > 50);
    CHECK_THROWS_AS(spectral_cohomology(2, 2), DomainError);
}

TEST_CASE("ring presentation")
{
    auto r = ring_relations(1, 0);
    CHECK(r.order == 13);
    CHECK(r.relations_text() == "13w^2 = w^3 = w^2v5 = w^2v7 = 0");
    CHECK(r.generators.size() == 3);
    CHECK(r.generators[1].degree == 5);
    CHECK(ring_relations(0, 1).relations_text() == "7w^2 = w^3 = w^2v5 = w^2v7 = 0");

    CHECK(r.additive_groups() == printed_table(13));
    auto h = spectral_cohomology(1, 0);
    for (int n = 0; n <= 14; ++n)
        CHECK(same(r.additive_groups().groups[n], h.groups[n]) == (n != 11));

    // with L > 1 the presentation also misses H^4, H^6 and H^9
    auto r31 = ring_relations(3, 1);
    auto h31 = spectral_cohomology(3, 1);
    std::vector<int> differ;
    for (int n = 0; n <= 14; ++n)
        if (!same(r31.additive_groups().groups[n], h31.groups[n]))
            differ.push_back(n);
    CHECK(differ == std::vector<int>{4, 6, 9, 11});
    CHECK_THROWS_AS(ring_relations(2, 0), DomainError);
}

TEST_CASE("family scan")
{
    auto rows = family_scan(20);
    REQUIRE(rows.size() == 20);
    std::vector<Int> orders;
    for (const auto& row : rows) {
        CHECK(row.l == 1);
        if (!row.eligible)
            continue;
        orders.push_back(row.order);
        auto h = spectral_cohomology(row.k, row.l);
        CHECK(h.groups[4].torsion == IntVector{row.polys.abs_m4()});
        CHECK(h.groups[4].torsion == IntVector{row.order * row.L});
    }
    std::sort(orders.begin(), orders.end());
    CHECK(orders.size() >= 3);
    CHECK(std::adjacent_find(orders.begin(), orders.end()) == orders.end());
    CHECK(rows[2].L == 4);
    CHECK(rows[2].order == 43);
    // gcd(M4, K8) divides 7(5k + 16), but not always 5k + 16 (k = 7: gcd = 21, 5k + 16 = 51)
    for (const auto& row : family_scan(60)) {
        Int s = gcd(row.polys.abs_m4(), row.polys.abs_k8());
        CHECK((7 * (5 * row.k + 16)) % s == 0);
        CHECK(((5 * row.k + 16) % s == 0) == (row.k % 7 != 0));
        CHECK(row.eligible);
    }
    CHECK_THROWS_AS(family_scan(0), DomainError);
}
