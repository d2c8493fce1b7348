#include <doctest.h>

#include <json.hpp>
#include <optional>
#include <string>

#include "sl3web/bijection.hpp"
#include "sl3web/errors.hpp"
#include "sl3web/io_json.hpp"
#include "sl3web/mdiagram.hpp"
#include "sl3web/tableau.hpp"
#include "sl3web/web.hpp"

using namespace sl3web;
using nlohmann::json;

namespace {

tableau T(const std::string& text) { return parse_tableau(text); }

template <typename Fn>
std::optional<errc> thrown_code(Fn&& fn) {
    try {
        fn();
        return std::nullopt;
    } catch (const op_error& e) {
        return e.code();
    }
}

}  // namespace

TEST_CASE("rationals travel as exact strings") {
    CHECK(rat_to_json(rat64(7, 2)) == json("7/2"));
    CHECK(rat_to_json(rat64(3)) == json("3"));
    CHECK(rat_to_json(rat64(-3, 2)) == json("-3/2"));

    CHECK(rat_from_json(json("7/2")) == rat64(7, 2));
    CHECK(rat_from_json(json("-6/4")) == rat64(-3, 2));
    CHECK(rat_from_json(json(5)) == rat64(5));
    CHECK(rat_from_json(json("47/7")) == rat64(47, 7));

    CHECK(thrown_code([] { rat_from_json(json::object()); }) == errc::bad_web_json);
    CHECK(thrown_code([] { rat_from_json(json("abc")); }) == errc::bad_web_json);
    CHECK(thrown_code([] { rat_from_json(json(2.5)); }) == errc::bad_web_json);
    CHECK(thrown_code([] { rat_from_json(json("7/0")); }) == errc::bad_web_json);
}

TEST_CASE("tableau JSON round trip") {
    tableau t = T("134/256/367");
    json j = tableau_to_json(t);
    CHECK(j["rows"].size() == 3);
    CHECK(tableau_from_json(j) == t);
    CHECK(tableau_from_json(tableau_to_json(tableau{})).rows.empty());

    // shape and order are the validator's business, not the parser's
    tableau raw = tableau_from_json(json::parse(R"({"rows": [[3,2,1]]})"));
    CHECK(raw.rows == std::vector<std::vector<int>>{{3, 2, 1}});
    CHECK(!validate_tableau(raw, tableau_mode::semistandard).empty());

    CHECK(thrown_code([] { tableau_from_json(json::array()); }) == errc::bad_tableau_text);
    CHECK(thrown_code([] { tableau_from_json(json::parse(R"({"rows": [1]})")); }) ==
          errc::bad_tableau_text);
    CHECK(thrown_code([] { tableau_from_json(json::parse(R"({"rows": [["x"]]})")); }) ==
          errc::bad_tableau_text);
}

TEST_CASE("sign string JSON round trip") {
    sign_string s = parse_signs("++-++-+");
    json j = sign_to_json(s);
    CHECK(j == json{{"sign", "++-++-+"}});
    CHECK(sign_from_json(j) == s);
    CHECK(sign_from_json(sign_to_json(sign_string{})).empty());

    CHECK(thrown_code([] { sign_from_json(json::object()); }) == errc::bad_sign_text);
    CHECK(thrown_code([] { sign_from_json(json{{"sign", "+x"}}); }) == errc::bad_sign_text);
}

TEST_CASE("chord diagram JSON round trip") {
    tableau std3 = standardize(T("112/233"), parse_signs("---")).tab;
    m_diagram md = build_m_diagram(conjugate(std3));
    json j = mdiagram_to_json(md);
    m_diagram back = mdiagram_from_json(j);
    CHECK(back.points == md.points);
    CHECK(back.left == md.left);
    CHECK(back.right == md.right);
    CHECK(format_m_diagram(back) == format_m_diagram(md));

    CHECK(thrown_code([] { mdiagram_from_json(json{{"points", 3}}); }) == errc::bad_web_json);
    CHECK(thrown_code([] {
              mdiagram_from_json(json::parse(R"({"points": 3, "left": [[1]], "right": []})"));
          }) == errc::bad_web_json);
}

TEST_CASE("web JSON round trip preserves the map and its layout") {
    web worked = tableau_to_web(T("134/256/367"), parse_signs("++-++-+"));
    web raw = tableau_to_web(T("124/356"), parse_signs("++++++"));
    web cup = cup_web(sign::minus);
    web bare = rotate(worked);  // no geometry

    for (const web& w : {worked, raw, cup, bare}) {
        json j = web_to_json(w);
        web back = web_from_json(j);
        CHECK(back == w);
        CHECK(canonical_code(back) == canonical_code(w));
        CHECK(j.contains("geometry") == w.geom.has_value());
    }

    // documents may carry extra keys (the CLI adds the canonical code)
    json doc = web_to_json(cup);
    doc["canonical_code"] = canonical_code(cup);
    CHECK(web_from_json(doc) == cup);

    // null geometry reads as absent
    json no_geom = web_to_json(worked);
    no_geom["geometry"] = nullptr;
    CHECK(!web_from_json(no_geom).geom.has_value());
}

TEST_CASE("web JSON rejections are named") {
    const json good = web_to_json(cup_web(sign::plus));

    CHECK(thrown_code([] { web_from_json(json{{"sign", "+-"}}); }) == errc::bad_web_json);
    CHECK(thrown_code([] { web_from_json(json::array()); }) == errc::bad_web_json);

    json bad_sign = good;
    bad_sign["sign"] = "+x";
    CHECK(thrown_code([&] { web_from_json(bad_sign); }) == errc::bad_web_json);

    json out_of_order = good;
    out_of_order["vertices"][0]["id"] = 1;
    CHECK(thrown_code([&] { web_from_json(out_of_order); }) == errc::bad_web_json);

    json bad_kind = good;
    bad_kind["vertices"][0]["kind"] = "emitter";
    CHECK(thrown_code([&] { web_from_json(bad_kind); }) == errc::bad_web_json);

    json contradicting = good;
    contradicting["vertices"][0]["kind"] = "boundary_sink";  // sign says plus
    CHECK(thrown_code([&] { web_from_json(contradicting); }) == errc::bad_web_json);

    json internal_as_boundary = web_to_json(tableau_to_web(T("112/233"), parse_signs("---")));
    internal_as_boundary["vertices"][3]["kind"] = "boundary_source";
    CHECK(thrown_code([&] { web_from_json(internal_as_boundary); }) == errc::bad_web_json);

    json rot_key = web_to_json(tableau_to_web(T("112/233"), parse_signs("---")));
    rot_key["rotations"]["abc"] = json::array({0, 1, 2});
    CHECK(thrown_code([&] { web_from_json(rot_key); }) == errc::bad_web_json);
    json rot_boundary = web_to_json(tableau_to_web(T("112/233"), parse_signs("---")));
    rot_boundary["rotations"]["0"] = json::array({0});
    CHECK(thrown_code([&] { web_from_json(rot_boundary); }) == errc::bad_web_json);

    json short_geom = good;
    short_geom["geometry"]["vertex_pos"].erase(0);
    CHECK(thrown_code([&] { web_from_json(short_geom); }) == errc::bad_web_json);

    // structurally impossible description: wrapped builder failure
    json doubled = good;
    doubled["edges"].push_back(json{{"from", 0}, {"to", 1}});
    auto code = thrown_code([&] { web_from_json(doubled); });
    CHECK(code == errc::bad_web_json);
}

TEST_CASE("verification reports serialize with their verdict") {
    json pass = report_to_json(verify_sign(parse_signs("--++")));
    CHECK(pass["check"] == "bijection");
    CHECK(pass["subject"] == "--++");
    CHECK(pass["filling_count"] == 2);
    CHECK(pass["web_count"] == 2);
    CHECK(pass["success"] == true);
    CHECK(pass["round_trip_failures"].empty());

    verification_report bad;
    bad.check = "rotation";
    bad.subject = "-+";
    bad.filling_count = 1;
    bad.rotation_mismatches = {"case 0: codes differ"};
    json fail_j = report_to_json(bad);
    CHECK(fail_j["success"] == false);
    CHECK(fail_j["rotation_mismatches"].size() == 1);
}
