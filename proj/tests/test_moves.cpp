#include <doctest.h>

#include <set>

#include "ffc/moves.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ffc;
using namespace ffc::testing;

namespace {

std::set<std::pair<std::string, std::string> > pairsOf(const std::vector<MoveDescriptor>& mvs, MoveKind kind)
{
    std::set<std::pair<std::string, std::string> > s;
    for (const auto& m : mvs)
        if (m.kind == kind)
            s.insert({m.x, m.y});
    return s;
}

Shape one(EndpointRef l, EndpointRef r, int fr)
{
    Shape s;
    addInterval(s, l, r, fr);
    return s;
}

}   // namespace

TEST_CASE("list_moves on the bundled data")
{
    auto mvs = list_moves(load("torus_3_4_q11.ffc"));
    CHECK(pairsOf(mvs, MoveKind::Whitney) == std::set<std::pair<std::string, std::string> >{
                                                 {"a25", "a11"}, {"a16", "a7"}, {"a16", "a5"}, {"a17", "a6"}});
    // grouped by kind in a fixed order
    for (size_t i = 1; i < mvs.size(); ++i)
        CHECK(static_cast<int>(mvs[i - 1].kind) <= static_cast<int>(mvs[i].kind));
    CHECK(list_moves(load("trefoil_q7.ffc")).empty());
    CHECK(list_moves(Builder().obj("x", 1).obj("y", 0).pt("x", "y", "a", 0).pt("x", "y", "b", 0).done()).empty());
    CHECK(list_moves(load("torus_3_4_q11.ffc")) == mvs);
}

TEST_CASE("whitney on the torus: closing in M(x,b) and joining two intervals")
{
    FlowCategory out = whitney(load("torus_3_4_q11.ffc"), "a25", "a11", "P", "M");
    CHECK(validate(out).empty());
    CHECK(shapeOf(out.components("a25", "a4")).circles == std::multiset<int>{1});
    CHECK(shapeOf(out.components("a25", "a4")).intervals.empty());
    CHECK(shapeOf(out.components("a25", "a7")) == one({"a16", "m", "P"}, {"a16", "p", "P"}, 1));
    CHECK(out.points("a25", "a11").empty());
    CHECK_FALSE(list_moves(out).empty());
    for (const auto& m : list_moves(out))
        CHECK_FALSE((m.kind == MoveKind::Whitney && m.x == "a25" && m.y == "a11"));
}

TEST_CASE("whitney on a bare pair empties everything")
{
    auto c = Builder().obj("x", 1).obj("y", 0).pt("x", "y", "P", 0).pt("x", "y", "M", 1).done();
    FlowCategory out = whitney(c, "x", "y", "P", "M");
    CHECK(out.moduli0.empty());
    CHECK(out.moduli1.empty());
    CHECK(out.objects.size() == 2);
}

TEST_CASE("cancel on the auxiliary two-trefoil category")
{
    FlowCategory out = cancel(load("two_trefoils_aux.ffc"), "tau", "beta2");
    CHECK(validate(out).empty());
    CHECK_FALSE(out.hasObject("tau"));
    CHECK_FALSE(out.hasObject("beta2"));
    for (const char* id : {"(m;Pt0)", "(m;Pt1)"})
    {
        const SignedPoint* p = out.findPoint("gamma", "beta1", id);
        REQUIRE(p);
        CHECK(p->sign == 1);
        REQUIRE(p->provenance);
        CHECK(p->provenance->first == "m");
    }
    for (const char* id : {"(p;Pt0)", "(p;Pt1)"})
    {
        const SignedPoint* p = out.findPoint("gamma", "sigma", id);
        REQUIRE(p);
        CHECK(p->sign == 0);
    }
    const auto& ga = out.components("gamma", "alpha");
    CHECK(ga.size() == 4);
    for (const auto& k : ga)
    {
        CHECK_FALSE(k.isCircle());
        CHECK(k.framing == 0);
        CHECK(k.start.mid == "beta1");
        CHECK(k.end.mid == "beta1");
    }
}

TEST_CASE("cancel on the torus mints a second point in M(a15,a9)")
{
    FlowCategory out = cancel(load("torus_3_4_q11.ffc"), "a14", "a7");
    CHECK(validate(out).empty());
    const auto& pts = out.points("a15", "a9");
    REQUIRE(pts.size() == 2);
    const SignedPoint* fresh = out.findPoint("a15", "a9", "(m;p)");
    REQUIRE(fresh);
    CHECK(fresh->sign == 0);    // 1 + 1 + 0 + 0
    CHECK(out.findPoint("a15", "a9", "p"));
}

TEST_CASE("circle removal")
{
    FlowCategory torus = whitney(load("torus_3_4_q11.ffc"), "a25", "a11", "P", "M");
    const auto& circ = torus.components("a25", "a4");
    REQUIRE(circ.size() == 1);
    FlowCategory gone = remove_circles(torus, "a25", "a4", {circ.front().id});
    CHECK(gone.components("a25", "a4").empty());
    CHECK(validate(gone).empty());

    auto c = Builder()
                 .obj("t", 3).obj("a", 2).obj("m", 1).obj("b", 0)
                 .circle("a", "b", 0).circle("a", "b", 0).circle("a", "b", 1)
                 .done();
    FlowCategory pair = remove_circles(c, "a", "b", {"k0", "k1"});
    CHECK(pair.components("a", "b").size() == 1);
    CHECK_THROWS_AS(remove_circles(c, "a", "b", {"k0"}), MoveError);
    CHECK_THROWS_AS(remove_circles(c, "a", "b", {"k0", "k2"}), MoveError);
    CHECK_THROWS_AS(remove_circles(c, "a", "b", {"k2", "k2"}), MoveError);
    CHECK_THROWS_AS(remove_circles(c, "a", "b", {"nope"}), MoveError);

    // a is the target of a nonempty space, so it is not terminal
    Builder nb;
    nb.obj("t", 3).obj("a", 2).obj("b", 0).pt("t", "a", "q", 0).circle("a", "b", 1);
    CHECK_THROWS_AS(remove_circles(nb.done(), "a", "b", {"k0"}), MoveError);
}

TEST_CASE("move preconditions")
{
    FlowCategory torus = load("torus_3_4_q11.ffc");
    CHECK_THROWS_AS(cancel(torus, "a16", "a7"), MoveError);      // two points
    CHECK_THROWS_AS(cancel(torus, "a25", "a4"), MoveError);      // gap 2
    CHECK_THROWS_AS(whitney(torus, "a11", "a4", "p", "p"), MoveError);
    CHECK_THROWS_AS(whitney(torus, "a16", "a7", "m", "p"), MoveError);    // signs swapped
    CHECK_THROWS_AS(whitney(torus, "a25", "a4", "P", "M"), MoveError);
    CHECK_THROWS_AS(cancel(torus, "a99", "a4"), MoveError);
    CHECK_THROWS_AS(parseMove("cancel:a11", torus), MoveError);
    CHECK_THROWS_AS(parseMove("shuffle:a11,a4", torus), MoveError);
    CHECK_THROWS_AS(parseMove("whitney:a25,a11:P", torus), MoveError);

    MoveDescriptor split;
    split.kind = MoveKind::SplitSummand;
    split.objects = {"a4"};
    CHECK_THROWS_AS(apply(torus, split), MoveError);
}

TEST_CASE("text forms")
{
    FlowCategory torus = load("torus_3_4_q11.ffc");
    MoveDescriptor c = parseMove("cancel:a11,a4", torus);
    CHECK(c.kind == MoveKind::Cancel);
    CHECK(c.point == "p");
    CHECK(c.text() == "cancel:a11,a4");
    MoveDescriptor w = parseMove("whitney:a25,a11:P,M", torus);
    CHECK(w.text() == "whitney:a25,a11:P,M");
    CHECK(std::string(moveKindName(MoveKind::RemoveCircleFr0Pair)).size() > 0);
}
