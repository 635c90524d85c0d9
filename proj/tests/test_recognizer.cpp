#include <doctest.h>

#include "ffc/algebra.hpp"
#include "ffc/recognizer.hpp"
#include "ffc/strategy.hpp"
#include "support.hpp"

using namespace ffc;
using namespace ffc::testing;

namespace {

// Summand cohomology must match the cohomology of the category it came from.
void checkCohomology(const FlowCategory& c)
{
    auto expr = recognize(c);
    REQUIRE_FALSE(expr.residue);
    std::map<int, CohomologyGroup> sum;
    for (const auto& s : expr.summands)
        for (const auto& [d, g] : summandCohomology(s))
        {
            auto& t = sum[d];
            t.rank += g.rank;
            t.torsion.insert(t.torsion.end(), g.torsion.begin(), g.torsion.end());
            std::sort(t.torsion.begin(), t.torsion.end());
        }
    CHECK(sum == cohomology(to_complex(c), Coefficients::Z));
}

FlowCategory twoCell(int n, int fr0, int fr1)
{
    Builder b;
    b.obj("t", n + 2).obj("b", n);
    for (int i = 0; i < fr0; ++i)
        b.circle("t", "b", 0);
    for (int i = 0; i < fr1; ++i)
        b.circle("t", "b", 1);
    return b.done();
}

// Top pair two same-sign points when top is true, else the bottom pair.
FlowCategory threeCell(int n, bool top, int fr0)
{
    Builder b;
    b.obj("t", n + 2).obj("m", n + 1).obj("b", n);
    if (top)
        b.pt("t", "m", "u1", 1).pt("t", "m", "u2", 1);
    else
        b.pt("m", "b", "l1", 0).pt("m", "b", "l2", 0);
    for (int i = 0; i < fr0; ++i)
        b.circle("t", "b", 0);
    b.circle("t", "b", 1);
    return b.done();
}

FlowCategory chang(int n, int fr0)
{
    // four objects; closing the composites t -> m2 -> b needs no intervals
    Builder b;
    b.obj("t", n + 2).obj("m1", n + 1).obj("m2", n + 1).obj("b", n);
    b.pt("t", "m2", "u1", 0).pt("t", "m2", "u2", 0);
    b.pt("m1", "b", "l1", 1).pt("m1", "b", "l2", 1);
    for (int i = 0; i < fr0; ++i)
        b.circle("t", "b", 0);
    return b.done();
}

}   // namespace

TEST_CASE("catalog patterns")
{
    CHECK(recognize(Builder().obj("z", 3).done()).text() == "S^3");

    auto moore = Builder().obj("u", 4).obj("d", 3).pt("u", "d", "a", 1).pt("u", "d", "b", 1).pt("u", "d", "c", 1);
    CHECK(recognize(moore.done()).text() == "Moore(Z/3,3)");
    checkCohomology(moore.done());

    auto mixed = Builder().obj("u", 1).obj("d", 0).pt("u", "d", "a", 0).pt("u", "d", "b", 0).pt("u", "d", "c", 1);
    auto mexpr = recognize(mixed.done());
    CHECK(mexpr.text() == "residue(d,u)");
    CHECK(mexpr.residueCohomology.empty());    // differential (1) is invertible

    CHECK(recognize(twoCell(0, 1, 1)).text() == "CP2@0");
    CHECK(recognize(twoCell(0, 3, 0)).text() == "CP2@0");
    CHECK(recognize(twoCell(-2, 1, 0)).suspensionText() == "Susp(-4) CP2");
    CHECK(recognize(twoCell(2, 2, 1)).text() == "S^2 v S^4");
    CHECK(recognize(twoCell(2, 0, 1)).text() == "S^2 v S^4");
    checkCohomology(twoCell(0, 1, 0));

    CHECK(recognize(threeCell(1, true, 1)).text() == "RP4/RP1@1");
    CHECK(recognize(threeCell(1, true, 2)).text() == "S^1 v Moore(Z/2,2)");
    CHECK(recognize(threeCell(2, false, 1)).text() == "RP5/RP2@2");
    CHECK(recognize(threeCell(2, false, 1)).suspensionText() == "Susp(-1) RP5/RP2");
    CHECK(recognize(threeCell(2, false, 0)).text() == "S^4 v Moore(Z/2,2)");
    for (bool top : {true, false})
        for (int r = 0; r < 3; ++r)
            checkCohomology(threeCell(3, top, r));

    CHECK(recognize(chang(4, 1)).text() == "RP2^RP2@4");
    CHECK(recognize(chang(4, 1)).suspensionText() == "Susp(2) RP2^RP2");
    checkCohomology(chang(4, 3));
    CHECK(recognize(chang(4, 2)).text() == "residue(b,m1,m2,t)");
}

TEST_CASE("summand order and the empty wedge")
{
    CHECK(recognize(FlowCategory{}).text() == "pt");
    Builder b;
    b.obj("t", 4).obj("b", 2).circle("t", "b", 0);                                // CP2@2
    b.obj("c", 1);                                                                // S^1
    b.obj("u", 3).obj("d", 2).pt("u", "d", "x", 0).pt("u", "d", "y", 0);          // Moore(Z/2,2)
    b.obj("e", 7).obj("f", 6).pt("e", "f", "x", 1).pt("e", "f", "y", 0);          // residue
    auto expr = recognize(b.done());
    CHECK(expr.text() == "S^1 v Moore(Z/2,2) v CP2@2 v residue(e,f)");
    CHECK(expr.strings().size() == 4);
    CHECK(expr.suspensionText() == "S^1 v Moore(Z/2,2) v CP2 v residue(e,f)");
}

TEST_CASE("recognition of the bundled data")
{
    CHECK(recognize(load("trefoil_q7.ffc")).text() == "Moore(Z/2,2)");
    CHECK(recognize(simplify(load("torus_3_4_q11.ffc")).category).text() == "RP5/RP2@2");
    auto q14 = recognize(load("two_trefoils_q14.ffc"));
    CHECK(q14.text() == "S^5 v S^5 v residue(alpha,beta1,beta2,gamma)");
    REQUIRE(q14.residue);
    CHECK(q14.residue->objects.size() == 4);
}
