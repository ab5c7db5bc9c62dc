#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "lot/enumerate.hpp"
#include "lot/lot.hpp"

using namespace lot;
using doctest::Contains;

TEST_CASE("parse accepts the two-edge example") {
    Lot l = parse("u x y\ny u x\n");
    CHECK(l.n == 3);
    CHECK(l.names == std::vector<std::string>{"u", "x", "y"});
    REQUIRE(l.edges.size() == 2);
    CHECK(l.edges[0] == Edge{0, 1, 2});  // u x y
    CHECK(l.edges[1] == Edge{2, 0, 1});  // y u x
    CHECK(diameter(l) == 2);
    CHECK(is_reduced(l).reduced);
    CHECK(is_minimal(l).minimal);
}

TEST_CASE("parse handles comments, blanks, and stable ordering") {
    Lot l = parse("# header\n\nb c a   # trailing\n a b c \n");
    CHECK(l.names == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(l.edges.size() == 2);
    // sorted by (iota, tau): (a b c) before (b c a)
    CHECK(l.edges[0] == Edge{0, 1, 2});
    CHECK(l.edges[1] == Edge{1, 2, 0});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse("u v\n"), Contains("line 1"), DomainError);
    CHECK_THROWS_WITH_AS(parse("u v w x\n"), Contains("expected 3 tokens"), DomainError);
    CHECK_THROWS_WITH_AS(parse("u x y\nu u x\n"), Contains("line 2"), DomainError);
    CHECK_THROWS_WITH_AS(parse("u x y\nu u x\n"), Contains("endpoints are equal"),
                         DomainError);
    CHECK_THROWS_WITH_AS(parse("u v w\n"), Contains("never occurs as an endpoint"),
                         DomainError);
    CHECK_THROWS_WITH_AS(parse("u v u\nv u v\n"), Contains("duplicate edge"), DomainError);
    CHECK_THROWS_WITH_AS(parse("u v u\nv u v\n"), Contains("first on line 1"), DomainError);
    CHECK_THROWS_WITH_AS(parse(""), Contains("empty input"), DomainError);
    CHECK_THROWS_WITH_AS(parse("# only comments\n"), Contains("empty input"), DomainError);
    CHECK_THROWS_WITH_AS(parse("a b a\nc d c\n"), Contains("not a tree"), DomainError);
    CHECK_THROWS_WITH_AS(parse("a b \xc3\xa9\n"), Contains("non-ASCII"), DomainError);
}

TEST_CASE("labels equal to an endpoint parse but are not reduced") {
    Lot l = parse("u v u\n");
    CHECK(l.n == 2);
    ReducedReport r = is_reduced(l);
    CHECK_FALSE(r.reduced);
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("reducedness violations") {
    // two edges labelled w share the initial vertex u
    ReducedReport shared = is_reduced(parse("u x w\nu y w\nu w x\n"));
    CHECK_FALSE(shared.reduced);
    // leaf z never used as a label
    ReducedReport leaf = is_reduced(parse("u x y\ny u x\nu z x\n"));
    CHECK_FALSE(leaf.reduced);
    REQUIRE(leaf.violations.size() == 1);
    CHECK(leaf.violations[0] == "leaf z never occurs as a label");
}

TEST_CASE("serialize round-trips") {
    std::string text = "u x y\ny u x\n";
    Lot l = parse(text);
    CHECK(serialize(l) == text);
    CHECK(parse(serialize(l)) == l);

    // enumerated lots have canonical names and sorted edges; the text
    // format cannot express the edgeless single vertex
    EnumerationSpec spec{4, {}, false};
    enumerate_lots(spec, [&](const Lot& sample) {
        if (sample.n < 2) return;
        REQUIRE(parse(serialize(sample)) == sample);
    });
}

TEST_CASE("make_lot validates") {
    CHECK_THROWS_AS(make_lot(2, {{0, 0, 1}}), InternalError);  // loop edge
    CHECK_THROWS_AS(make_lot(3, {{0, 1, 5}, {1, 2, 0}}), InternalError);  // label range
    CHECK_THROWS_AS(make_lot(3, {{0, 1, 2}}), InternalError);  // wrong edge count
    Lot l = make_lot(2, {{0, 1, 0}});  // label equal to an endpoint is fine here
    CHECK(l.names == std::vector<std::string>{"v1", "v2"});
}

TEST_CASE("presentation of the two-edge example") {
    Presentation p = presentation(parse("u x y\ny u x\n"));
    CHECK(p.generators == std::vector<std::string>{"u", "x", "y"});
    REQUIRE(p.relators.size() == 2);
    CHECK(format_word(p.relators[0], p.generators) == "u y x^-1 y^-1");
    CHECK(format_word(p.relators[1], p.generators) == "y x u^-1 x^-1");
}

TEST_CASE("diameter") {
    CHECK(diameter(make_lot(1, {})) == 0);
    CHECK(diameter(make_lot(2, {{0, 1, 0}})) == 1);
    CHECK(diameter(parse("u x y\ny u x\n")) == 2);
    CHECK(diameter(parse("a b c\nb c d\nc d a\n")) == 3);
}

TEST_CASE("span and admissibility") {
    // path a-b-c-d labelled so that span({b,c}) closes over everything
    Lot l = parse("a b c\nb c d\nc d a\n");
    Subgraph whole = span(l, {1, 2});
    CHECK(whole.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(spans_whole(l, {1, 2}));
    CHECK(two_spanned(l).has_value());

    Subgraph seed_only = span(l, {0});
    CHECK(seed_only.vertices == std::vector<int>{0});
    CHECK(seed_only.edges.empty());

    // spans contain their seed and are admissible
    EnumerationSpec spec{4, {}, false};
    enumerate_lots(spec, [&](const Lot& sample) {
        Subgraph s = span(sample, {0, 1});
        REQUIRE(is_admissible(sample, s));
        REQUIRE(std::find(s.vertices.begin(), s.vertices.end(), 0) != s.vertices.end());
    });
}

TEST_CASE("tree convex hull") {
    Lot l = parse("a b c\nb c d\nc d a\n");  // path a-b-c-d
    CHECK(tree_convex_hull(l, {0, 3}) == std::vector<int>{0, 1, 2, 3});
    CHECK(tree_convex_hull(l, {1, 2}) == std::vector<int>{1, 2});
    CHECK(tree_convex_hull(l, {2}) == std::vector<int>{2});
}

TEST_CASE("minimality matches the brute-force oracle") {
    long disagreements = 0;
    EnumerationSpec spec{5, {}, false};
    enumerate_lots(spec, [&](const Lot& sample) {
        if (is_minimal(sample).minimal != is_minimal_brute(sample)) ++disagreements;
    });
    CHECK(disagreements == 0);
}

TEST_CASE("minimality witness is a proper admissible subgraph") {
    EnumerationSpec spec{4, {}, false};
    enumerate_lots(spec, [&](const Lot& sample) {
        MinimalReport r = is_minimal(sample);
        if (r.minimal) return;
        REQUIRE(r.witness.has_value());
        REQUIRE(r.witness->vertices.size() > 1);
        REQUIRE(r.witness->vertices.size() < static_cast<size_t>(sample.n));
        REQUIRE(is_admissible(sample, *r.witness));
    });
}

TEST_CASE("double label") {
    CHECK(double_label(parse("u x y\ny u x\n")) == std::nullopt);    // none twice
    CHECK(double_label(parse("a b c\nb c a\nc d a\n")) == 0);        // a twice
    CHECK(double_label(parse("a b c\nb c a\nc d a\nd e a\n")) == std::nullopt);  // thrice
}

TEST_CASE("abelianization invariant factors") {
    // every LOT presentation abelianizes to the infinite cyclic group
    EnumerationSpec spec{4, {}, false};
    enumerate_lots(spec, [&](const Lot& sample) {
        REQUIRE(abelianization(presentation(sample)) == std::vector<long long>{0});
    });

    Presentation doubled;
    doubled.generators = {"a", "b"};
    doubled.relators = {Word{{0, 1}, {0, 1}}};  // a^2
    CHECK(abelianization(doubled) == std::vector<long long>{2, 0});

    Presentation trivial;
    trivial.generators = {"a"};
    trivial.relators = {Word{{0, 1}}};
    CHECK(abelianization(trivial) == std::vector<long long>{});

    Presentation commutator;
    commutator.generators = {"a", "b"};
    commutator.relators = {Word{{0, 1}, {1, 1}, {0, -1}, {1, -1}}};
    CHECK(abelianization(commutator) == std::vector<long long>{0, 0});

    Presentation torsion;
    torsion.generators = {"a", "b"};
    torsion.relators = {Word{{0, 1}, {0, 1}},
                        Word{{1, 1}, {1, 1}, {1, 1}, {1, 1}}};
    CHECK(abelianization(torsion) == std::vector<long long>{2, 4});
}

TEST_CASE("spanning classification on a minimal diameter-3 input") {
    std::optional<Lot> w1 = find_first_core(8);
    REQUIRE(w1.has_value());
    SpanningReport sr = spanning_classification(*w1);
    CHECK(sr.u == 0);
    CHECK(sr.v == 5);
    CHECK_FALSE(sr.pair.has_value());
    CHECK(sr.a == 6);
    CHECK(sr.span_auv_whole);
    CHECK_THROWS_AS(spanning_classification(parse("u x y\ny u x\n")), DomainError);
}
