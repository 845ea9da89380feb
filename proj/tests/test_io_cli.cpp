#include "kodaira/cli.hpp"
#include "kodaira/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace kodaira;

namespace {

std::vector<BatchRecord> parse(const std::string& text, BatchFormat f) {
    std::istringstream in(text);
    return parse_batch(in, f);
}

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/kodaira_test_" + name;
}

}  // namespace

TEST_CASE("integers in JSON") {
    CHECK(int_json(Int(5)) == Json(5));
    Int big("123456789012345678901234567890");
    CHECK(int_json(big) == Json(big.get_str()));
    CHECK(json_int(int_json(big)) == big);
    CHECK(json_int(Json(-7)) == -7);
    CHECK_THROWS_AS(json_int(Json(1.5)), ArgumentError);
    CHECK(parse_ainvs("0, 1,0,-20,0") == Ainvs{0, 1, 0, -20, 0});
    CHECK(parse_ainvs("[1,1,1,0,0]") == Ainvs{1, 1, 1, 0, 0});
    CHECK_THROWS_AS(parse_ainvs("1,2,3"), ArgumentError);
}

TEST_CASE("local data serialization") {
    LocalData d = tate_local_data(WeierstrassModel(0, 1, 0, -20, 0), 2);
    Json j = to_json(d);
    CHECK(j["type"] == "I1*");
    CHECK(j["f"] == 3);
    CHECK(j["c"] == 4);
    CHECK(localdata_csv_row(d).rfind("2,I1*,3,4,", 0) == 0);
}

TEST_CASE("CSV ingestion") {
    auto recs = parse("label,a1,a2,a3,a4,a6,expected_c\n11.a3,0,-1,1,0,0,1\nsing,0,0,0,0,0,\n,1,1,1,0,0,\n",
                      BatchFormat::Csv);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].label == "11.a3");
    CHECK(recs[0].expected_c == 1);
    CHECK(recs[0].row == 2);
    CHECK(recs[1].rejection == "singular");
    CHECK_FALSE(recs[2].label);
    CHECK(parse("", BatchFormat::Csv).empty());
    CHECK(parse("", BatchFormat::JsonLines).empty());
    // headerless, positional
    CHECK(parse("x,0,-1,1,0,0\n", BatchFormat::Csv).size() == 1);
}

TEST_CASE("malformed rows report their row number") {
    try {
        parse("label,a1,a2,a3,a4,a6\na,0,1,0,-20,0\nb,0,1,zz,0,0\n", BatchFormat::Csv);
        FAIL("expected an error");
    } catch (const BatchError& e) {
        CHECK(e.row == 3);
    }
    try {
        parse("{\"ainvs\":[0,1,0,-20,0]}\n{\"ainvs\":[0,1]}\n", BatchFormat::JsonLines);
        FAIL("expected an error");
    } catch (const BatchError& e) {
        CHECK(e.row == 2);
    }
    CHECK_THROWS_AS(parse("not json\n", BatchFormat::JsonLines), BatchError);
    CHECK_THROWS_AS(parse("label,a1,a2\n", BatchFormat::Csv), BatchError);
}

TEST_CASE("JSON-lines ingestion") {
    auto recs = parse(
        "{\"label\":\"i\",\"ainvs\":[0,1,0,-20,0],\"expected\":{\"local\":[{\"p\":2,\"type\":\"I1*\",\"f\":3,\"c\":4}]}}\n"
        "{\"ainvs\":[\"0\",0,1,0,0],\"expected\":{\"c\":1}}\n",
        BatchFormat::JsonLines);
    REQUIRE(recs.size() == 2);
    REQUIRE(recs[0].expected_local.size() == 1);
    CHECK(recs[0].expected_local[0].type == KodairaType::Instar(1));
    CHECK(recs[1].expected_c == 1);
    auto res = run_batch(recs, 2);
    CHECK(batch_ok(res));
    for (const auto& r : res) CHECK(r.status == "ok");
}

TEST_CASE("batch round trip and ordering") {
    std::string text =
        "label,a1,a2,a3,a4,a6,expected_c\n"
        "b,1,1,1,0,0,1\n"
        "a,0,1,0,-20,0,\n"
        "a,0,-1,1,0,0,\n"
        "z,0,0,0,0,0,\n"
        "m,0,-1,1,-10,-20,2\n";
    for (BatchFormat f : {BatchFormat::Csv, BatchFormat::JsonLines}) {
        auto recs = parse(text, BatchFormat::Csv);
        auto r1 = run_batch(recs, 1);
        auto r3 = run_batch(recs, 3);
        REQUIRE(r1.size() == 5);
        std::ostringstream o1, o3;
        write_batch(o1, r1, f);
        write_batch(o3, r3, f);
        CHECK(o1.str() == o3.str());
        CHECK(*r1[0].record.label == "a");
        CHECK(r1[0].record.ainvs == Ainvs{0, -1, 1, 0, 0});
        CHECK(*r1[2].record.label == "b");
        CHECK(r1.back().status == "rejected: singular");
        CHECK_FALSE(batch_ok(r1));  // m expects 2, has 5
        auto again = parse(o1.str(), f);
        REQUIRE(again.size() == r1.size());
        for (size_t i = 0; i < again.size(); ++i) CHECK(again[i].same_record(r1[i].record));
        std::ostringstream o4;
        write_batch(o4, run_batch(again, 2), f);
        CHECK(o4.str() == o1.str());
    }
}

TEST_CASE("cli localdata") {
    auto r = cli({"localdata", "--ainvs", "0,1,0,-20,0"});
    CHECK(r.code == kExitOk);
    Json j = Json::parse(r.out);
    bool found = false;
    for (const auto& l : j["local"])
        if (l["p"] == 2) {
            found = true;
            CHECK(l["type"] == "I1*");
            CHECK(l["f"] == 3);
            CHECK(l["c"] == 4);
        }
    CHECK(found);
    r = cli({"--format", "csv", "localdata", "--ainvs", "0,1,0,-20,0", "--p", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("2,I1*,3,4,") != std::string::npos);
}

TEST_CASE("cli classify") {
    auto r = cli({"classify", "C3zero:1", "--p", "3"});
    REQUIRE(r.code == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j["local"][0]["type"] == "II");
    CHECK(j["local"][0]["f"] == 3);
    CHECK(j["local"][0]["c"] == 1);
    CHECK(cli({"classify", "C3zero:2", "--p", "5"}).code == kExitInput);
    CHECK(cli({"classify", "C2:1,1,4"}).code == kExitInput);
}

TEST_CASE("cli crosscheck") {
    auto r = cli({"crosscheck", "--family", "C4", "--a-max", "100", "--b-max", "100"});
    CHECK(r.code == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j["clean"] == true);
    CHECK(j["families"]["C4"]["mismatches"] == 0);
    CHECK(cli({"crosscheck", "--family", "C2xC8"}).code == kExitInput);
}

TEST_CASE("cli construct, tamagawa, dump-tables") {
    auto r = cli({"construct", "--at", "2=12", "--at", "3=7", "--at", "5=11", "--at", "7=8"});
    CHECK(r.code == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j["verified"] == true);
    CHECK(j["ainvs"][3] == "-27799801630334999999955900");
    CHECK(cli({"construct", "--at", "2=1"}).code == kExitInput);

    r = cli({"tamagawa", "--curve", "0,0,1,0,0"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["c"] == 1);
    r = cli({"tamagawa", "--search", "three-torsion-cubes", "--k-max", "5"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["all_c1"] == true);
    CHECK(cli({"tamagawa"}).code == kExitInput);

    r = cli({"dump-tables", "--table", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("row_id,family,p_pattern", 0) == 0);
    CHECK(cli({"dump-tables", "--papadopoulos"}).out.rfind("row_id,p,type", 0) == 0);
}

TEST_CASE("cli batch and exit codes") {
    std::string in = temp_path("in.csv"), out = temp_path("out.jsonl");
    {
        std::ofstream f(in);
        f << "label,a1,a2,a3,a4,a6,expected_c\n11.a3,0,-1,1,0,0,1\n";
    }
    auto r = cli({"batch", in, "--output", out});
    CHECK(r.code == kExitOk);
    auto recs = ingest_batch(out, BatchFormat::JsonLines);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].label == "11.a3");
    {
        std::ofstream f(in);
        f << "label,a1,a2,a3,a4,a6,expected_c\n11.a3,0,-1,1,0,0,2\n";
    }
    CHECK(cli({"batch", in}).code == kExitMismatch);
    CHECK(cli({"batch", temp_path("missing.csv")}).code == kExitInput);
    CHECK(cli({}).code == kExitInput);
    CHECK(cli({"nonsense"}).code == kExitInput);
    CHECK(cli({"--help"}).code == kExitOk);
    std::remove(in.c_str());
    std::remove(out.c_str());
}
