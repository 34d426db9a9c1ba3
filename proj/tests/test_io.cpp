#include <doctest.h>

#include <cstdio>

#include "qpw/guess.hpp"
#include "qpw/io.hpp"
#include "qpw/models.hpp"
#include "qpw/walks.hpp"

using namespace qpw;

TEST_CASE("specialized series documents round-trip through JSON") {
    io::SeriesDoc doc;
    doc.model_id = 7;
    doc.a = Rat(2, 3);
    doc.b = Rat(-5);
    doc.g = Series<Rat>(4);
    doc.g.at(0) = Rat(1);
    doc.g.at(3) = Rat(22, 7);

    std::string text = io::to_json(doc);
    CHECK(text.find("qpwalks.series/1") != std::string::npos);
    CHECK(text.find("2/3") != std::string::npos);
    io::SeriesDoc back = io::series_from_json(text);
    CHECK(back.model_id == 7);
    CHECK(back.a == doc.a);
    CHECK(back.b == doc.b);
    CHECK(back.g == doc.g);
}

TEST_CASE("symbolic series documents round-trip through JSON") {
    io::SymbolicSeriesDoc doc;
    doc.model_id = 1;
    doc.g = boundary_views(enumerate_walks(get_model(1), 4)).g;
    io::SymbolicSeriesDoc back = io::symbolic_series_from_json(io::to_json(doc));
    CHECK(back.model_id == 1);
    CHECK(back.g == doc.g);
}

TEST_CASE("unknown schemas are rejected") {
    io::SeriesDoc doc;
    doc.model_id = 1;
    doc.a = Rat(1);
    doc.b = Rat(1);
    doc.g = Series<Rat>(0);
    std::string text = io::to_json(doc);
    auto pos = text.find("qpwalks.series/1");
    REQUIRE(pos != std::string::npos);
    std::string wrong = text;
    wrong.replace(pos, std::string("qpwalks.series/1").size(), "qpwalks.series/9");
    CHECK_THROWS_AS(io::series_from_json(wrong), Error);
    CHECK_THROWS_AS(io::series_from_json("{\"x\": 1}"), Error);
    CHECK_THROWS_AS(io::series_from_json("not json"), Error);
    CHECK_THROWS_AS(io::symbolic_series_from_json(text), Error);
}

TEST_CASE("guess documents round-trip, including absent candidates") {
    Series<Rat> cat(40);
    cat.at(0) = Rat(1);
    for (int n = 1; n <= 40; ++n) {
        Rat acc(0);
        for (int k = 0; k < n; ++k) acc += cat[k] * cat[n - 1 - k];
        cat.at(n) = acc;
    }
    io::GuessDoc doc;
    doc.model_id = 0;
    doc.a = Rat(1);
    doc.b = Rat(1);
    doc.order = 40;
    doc.alg = guess_algebraic(cat, 3, 3, 8);
    doc.ode = std::nullopt;
    REQUIRE(doc.alg.has_value());

    std::string text = io::to_json(doc);
    CHECK(text.find("qpwalks.guess/1") != std::string::npos);
    io::GuessDoc back = io::guess_from_json(text);
    REQUIRE(back.alg.has_value());
    CHECK(!back.ode.has_value());
    CHECK(back.alg->terms == doc.alg->terms);
    CHECK(back.alg->deg_g == doc.alg->deg_g);
    CHECK(back.alg->confirm_order == doc.alg->confirm_order);
    CHECK(annihilates(*back.alg, cat));
}

TEST_CASE("group and identity-check documents carry their content") {
    GroupResult g = group_closure(get_model(1));
    std::string text = io::to_json(g, 1);
    CHECK(text.find("qpwalks.group/1") != std::string::npos);
    CHECK(text.find("(1)/(x)") != std::string::npos);

    FeCheckResult fe;
    fe.model_id = 3;
    fe.order = 5;
    fe.ok = true;
    CHECK(io::to_json(fe).find("qpwalks.fe-check/1") != std::string::npos);

    std::vector<VerifyRecord> recs{{2, "hadamard", Rat(3), Rat(2), 12, true, -1}};
    std::string vtext = io::to_json(recs);
    CHECK(vtext.find("qpwalks.verify/1") != std::string::npos);
    CHECK(vtext.find("hadamard") != std::string::npos);
}

TEST_CASE("classification tables declare unfalsifiable cells") {
    // Build a tiny synthetic report for a model whose equal-weights column is
    // recorded as differentially algebraic: the text must say so verbatim.
    ClassificationReport rep;
    rep.model_id = 1;
    rep.bounds = GuessBounds{4, 4, 3, 4, 8};
    PointResult p11;
    p11.a = Rat(1);
    p11.b = Rat(1);
    p11.series_order = 40;
    p11.cls = FoundClass::DFinite;
    p11.ode = OdeCandidate{};
    rep.points.push_back(p11);
    PointResult paa;
    paa.a = Rat(2);
    paa.b = Rat(2);
    paa.series_order = 40;
    paa.cls = FoundClass::None;
    rep.points.push_back(paa);

    std::string text = io::tables_text({rep});
    CHECK(text.find("model 1") != std::string::npos);
    CHECK(text.find("conjecture — not checkable") != std::string::npos);

    std::string csv = io::tables_csv({rep});
    CHECK(csv.find("model,group_order,column") != std::string::npos);
    CHECK(csv.find("conjecture — not checkable") != std::string::npos);

    std::string json = io::to_json(rep);
    CHECK(json.find("qpwalks.tables/1") != std::string::npos);
}

TEST_CASE("files round-trip") {
    std::string path = "qpw_io_test_tmp.json";
    io::write_file(path, "contents\n");
    CHECK(io::read_file(path) == "contents\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::read_file("definitely/not/here.json"), Error);
}
