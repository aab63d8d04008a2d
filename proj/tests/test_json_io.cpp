#include "doctest.h"
#include "twchoose/certify.hpp"
#include "twchoose/json_io.hpp"

using namespace twc;

namespace {

const Graph& k3() {
    static Graph g = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    return g;
}

}  // namespace

TEST_CASE("rational strings round-trip") {
    CHECK(rational_to_string(rational(bigint(3), bigint(4))) == "3/4");
    CHECK(rational_to_string(rational(bigint(-5))) == "-5");
    CHECK(rational_to_string(rational(bigint(6), bigint(8))) == "3/4");
    CHECK(rational_to_string(rational_from_string("2/-4")) == "-1/2");
    CHECK(rational_from_string("3/4") == rational(bigint(3), bigint(4)));
    CHECK(rational_from_string("6/8") == rational(bigint(3), bigint(4)));
    CHECK(rational_from_string("-5") == rational(bigint(-5)));
    CHECK(rational_from_string("-6/4") == rational(bigint(-3), bigint(2)));
    CHECK_THROWS_AS(rational_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rational_from_string("a/b"), parse_error);
    CHECK_THROWS_AS(rational_from_string(""), parse_error);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), parse_error);
}

TEST_CASE("certificate documents round-trip and keep field order") {
    Certificate c = std::get<Certificate>(certify_1k(k3(), 3, 2));
    std::string text = certificate_to_json(c);
    CHECK(text.find("\"schema\": 1") != std::string::npos);
    CHECK(text.find("a2797913af3802c5") != std::string::npos);
    CHECK(text.find("\"schema\"") < text.find("\"graph\""));
    CHECK(text.find("\"graph\"") < text.find("\"method\""));
    CHECK(text.find("\"method\"") < text.find("\"p\""));
    CHECK(text.find("\"residue\"") < text.find("\"eta\""));
    CHECK(text.find("\"eta\"") < text.find("\"trace\""));
    CHECK(text.back() == '\n');

    Certificate back = certificate_from_json(text);
    CHECK(back.graph == c.graph);
    CHECK(back.method == c.method);
    CHECK(back.p == c.p);
    CHECK(back.residue == c.residue);
    CHECK(back.eta == c.eta);
    REQUIRE(back.trace.size() == c.trace.size());
    for (size_t i = 0; i < c.trace.size(); ++i) {
        CHECK(back.trace[i].step == c.trace[i].step);
        CHECK(back.trace[i].kind == c.trace[i].kind);
        CHECK(back.trace[i].detail == c.trace[i].detail);
    }
    CHECK(certificate_to_json(back) == text);
    CHECK(verify_certificate(k3(), back).ok);
}

TEST_CASE("certificate parsing rejects malformed documents") {
    Certificate c = std::get<Certificate>(certify_1k(k3(), 3, 2));
    std::string good = certificate_to_json(c);

    CHECK_THROWS_AS(certificate_from_json("{"), parse_error);
    CHECK_THROWS_AS(certificate_from_json("[]"), parse_error);
    CHECK_THROWS_AS(certificate_from_json("{}"), parse_error);

    std::string wrong_schema = good;
    wrong_schema.replace(wrong_schema.find("\"schema\": 1"), 11, "\"schema\": 2");
    CHECK_THROWS_AS(certificate_from_json(wrong_schema), parse_error);

    std::string bad_hash = good;
    bad_hash.replace(bad_hash.find("a2797913af3802c5"), 16, "A2797913AF3802C5");
    CHECK_THROWS_AS(certificate_from_json(bad_hash), parse_error);

    std::string no_method = good;
    size_t mp = no_method.find("\"method\"");
    no_method.erase(mp, no_method.find("\"p\"") - mp);
    CHECK_THROWS_AS(certificate_from_json(no_method), parse_error);

    std::string neg = good;
    neg.replace(neg.find("\"residue\": 1"), 12, "\"residue\": -1");
    CHECK_THROWS_AS(certificate_from_json(neg), parse_error);
}

TEST_CASE("list documents round-trip through the graph shape") {
    ListAssignment la = make_lists(
        k3(),
        {{rational(bigint(1))}, {rational(bigint(2), bigint(3))}, {rational(bigint(-1))}},
        {{rational(bigint(0)), rational(bigint(4))},
         {rational(bigint(7))},
         {rational(bigint(1), bigint(2)), rational(bigint(-3))}});
    std::string text = lists_to_json(la);
    ListAssignment back = lists_from_json(k3(), text);
    CHECK(back.vertices == la.vertices);
    CHECK(back.edges == la.edges);
    CHECK(lists_to_json(back) == text);

    // raw integers and unreduced fractions are accepted on input
    ListAssignment mixed = lists_from_json(
        k3(), R"({"vertices": [[1], [2], [3]], "edges": [["4/2", 5], [6], [0]]})");
    CHECK(mixed.edges[0] == std::vector<rational>{rational(bigint(2)), rational(bigint(5))});

    CHECK_THROWS_AS(lists_from_json(k3(), R"({"vertices": [[1]], "edges": [[1], [1], [1]]})"),
                    parse_error);
    CHECK_THROWS_AS(lists_from_json(k3(), R"({"vertices": [[1], [2], [3]]})"), parse_error);
    CHECK_THROWS_AS(
        lists_from_json(k3(), R"({"vertices": [[1], [2], [3]], "edges": [["1/0"], [1], [1]]})"),
        parse_error);
}

TEST_CASE("weighting documents round-trip") {
    Weighting w{{rational(bigint(0)), rational(bigint(1), bigint(2)), rational(bigint(-2))},
                {rational(bigint(3)), rational(bigint(5)), rational(bigint(1))}};
    std::string text = weighting_to_json(w);
    Weighting back = weighting_from_json(text);
    CHECK(back.vertices == w.vertices);
    CHECK(back.edges == w.edges);
    CHECK(weighting_to_json(back) == text);
    CHECK(text.find("\"1/2\"") != std::string::npos);
    CHECK(text.find("\"vertices\"") < text.find("\"edges\""));

    CHECK_THROWS_AS(weighting_from_json("{\"vertices\": [0]}"), parse_error);
    CHECK_THROWS_AS(weighting_from_json("null"), parse_error);
}
