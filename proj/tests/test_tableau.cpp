#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "sl3web/tableau.hpp"

using namespace sl3web;

namespace {

tableau T(const std::string& text) { return parse_tableau(text); }

// Independent standardization: list (value, column) per cell, sort, label 1..n.
// Different algorithm from the library's counting pass; must agree exactly.
tableau slow_standardize(const tableau& t) {
    std::vector<std::tuple<int, int, int, int>> cells;  // value, col, row -> label
    for (int r = 0; r < t.row_count(); ++r)
        for (int c = 0; c < t.col_count(); ++c) cells.emplace_back(t.at(r, c), c, r, 0);
    std::sort(cells.begin(), cells.end());
    tableau out = t;
    int label = 1;
    for (auto& [v, c, r, l] : cells) out.rows[r][c] = label++;
    return out;
}

}  // namespace

TEST_CASE("tableau text round trips in shorthand and comma form") {
    CHECK(format_tableau(T("112/235")) == "112/235");
    CHECK(T("1,1,2/2,3,5") == T("112/235"));
    CHECK(format_tableau(T("")) == "");
    CHECK(T("").empty());

    tableau big;
    big.rows = {{1, 2, 10}, {3, 4, 11}};
    CHECK(format_tableau(big) == "1,2,10/3,4,11");
    CHECK(parse_tableau(format_tableau(big)) == big);
}

TEST_CASE("tableau parsing rejects malformed text") {
    CHECK_THROWS_AS(T("1a2/345"), op_error);
    CHECK_THROWS_AS(T("1,,2/3,4,5"), op_error);
    CHECK_THROWS_AS(T("12//345"), op_error);
    try {
        T("1x");
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::bad_tableau_text);
    }
}

TEST_CASE("validation names each defect") {
    CHECK(is_valid(T("112/235")));
    CHECK(is_valid(T("")));

    auto codes = [](const std::vector<issue>& v) {
        std::set<errc> out;
        for (const auto& i : v) out.insert(i.code);
        return out;
    };

    CHECK(codes(validate_tableau(T("121/345"))).count(errc::row_not_weakly_increasing));
    CHECK(codes(validate_tableau(T("112/115"))).count(errc::column_not_strictly_increasing));
    CHECK(codes(validate_tableau(T("112/23"))).count(errc::wrong_shape));

    CHECK(validate_tableau(T("123/456"), tableau_mode::standard).empty());
    CHECK(codes(validate_tableau(T("112/345"), tableau_mode::standard)).count(errc::wrong_content));

    sign_string s = parse_signs("--++");
    CHECK(validate_tableau(T("112/234"), s).empty());
    CHECK(validate_tableau(T("113/224"), s).empty());
    CHECK(codes(validate_tableau(T("112/345"), s)).count(errc::wrong_content));
    CHECK(codes(validate_tableau(T("1123/2345"), s)).count(errc::wrong_shape));  // not 3 columns
}

TEST_CASE("conjugate transposes rectangles and is an involution") {
    CHECK(conjugate(T("124/357/689")) == T("136/258/479"));
    CHECK(conjugate(T("145/268/379")) == T("123/467/589"));
    CHECK(conjugate(T("13/25/46")) == T("124/356"));
    CHECK(conjugate(conjugate(T("145/268/379"))) == T("145/268/379"));
    CHECK(conjugate(T("")).empty());

    tableau ragged;
    ragged.rows = {{1, 2, 3}, {4, 5}};
    CHECK_THROWS_AS(conjugate(ragged), op_error);
}

TEST_CASE("tau set lists adjacent labels with the first strictly higher up") {
    CHECK(tau_set(T("123/467/589")) ==
          std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {7, 8}});
    CHECK(tau_set(T("13/25/46")) == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 6}});
    CHECK(tau_set(T("123456")).empty());  // single row: nothing is above anything
    CHECK(tau_set(T("123/456")) == std::vector<std::pair<int, int>>{{3, 4}});

    CHECK_THROWS_AS(tau_set(T("112/234")), op_error);  // semistandard input refused
    try {
        tau_set(T("112/234"));
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::not_standard);
    }
}

TEST_CASE("standardization relabels doubled values with the smaller label leftmost") {
    // the doubled values 1 and 2 of the all-minus filling: value 2 sits in
    // columns 3 (row 1) and 1 (row 2); the smaller column wins the smaller label
    standardized st = standardize(T("112/233"), parse_signs("---"));
    CHECK(st.tab == T("124/356"));
    REQUIRE(st.pm.spans.size() == 3);
    CHECK(st.pm.spans[0].first == 1);
    CHECK(st.pm.spans[0].count == 2);
    CHECK(st.pm.spans[1].first == 3);
    CHECK(st.pm.spans[2].first == 5);

    // worked seven-sign example
    standardized st2 = standardize(T("134/256/367"), parse_signs("++-++-+"));
    CHECK(st2.tab == T("145/268/379"));
    auto pairs = st2.pm.minus_pairs();
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == std::pair<int, std::pair<int, int>>{2, {3, 4}});
    CHECK(pairs[1] == std::pair<int, std::pair<int, int>>{5, {7, 8}});
    CHECK(st2.pm.value_of_label(1) == 1);
    CHECK(st2.pm.value_of_label(4) == 3);
    CHECK(st2.pm.value_of_label(8) == 6);
    CHECK(st2.pm.value_of_label(9) == 7);
    CHECK_THROWS_AS(st2.pm.value_of_label(10), op_error);

    CHECK_THROWS_AS(standardize(T("112/345"), parse_signs("--++")), op_error);
    try {
        standardize(T("112/345"), parse_signs("--++"));
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::not_content_of_s);
    }
}

TEST_CASE("standardization agrees with the sort-based oracle and destandardize inverts it") {
    for (const char* text : {"", "-++++", "--++", "---", "++-++-+", "+-+-+-"}) {
        sign_string s = parse_signs(text);
        for (const tableau& t : enumerate_fillings(s)) {
            standardized st = standardize(t, s);
            CHECK(st.tab == slow_standardize(t));
            CHECK(validate_tableau(st.tab, tableau_mode::standard).empty());
            CHECK(destandardize(st.tab, st.pm) == t);
        }
    }
}

TEST_CASE("promotion goldens") {
    CHECK(jdt_promote(T("112/345/678")) == T("134/267/588"));
    CHECK(jdt_promote(T("113/245")) == T("124/355"));
}

TEST_CASE("promotion rotates the content and has period equal to the value count") {
    for (const char* text : {"+++", "--++", "-++++", "++-++-+", "++++++"}) {
        sign_string s = parse_signs(text);
        for (const tableau& t : enumerate_fillings(s)) {
            tableau p = jdt_promote(t);
            CHECK(validate_tableau(p, rotate_left(s)).empty());
            tableau cycle = t;
            for (size_t k = 0; k < s.size(); ++k) cycle = jdt_promote(cycle);
            CHECK(cycle == t);
        }
    }
}

TEST_CASE("promotion rejects bad inputs by name") {
    try {
        jdt_promote(T("321/123"));
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::not_semistandard);
    }
    try {
        jdt_promote(T("113/335"));  // no 2, no 4
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::missing_value);
    }
}

TEST_CASE("shuffle golden: inserting a one-row standard block after value 1") {
    CHECK(shuffle(T("123"), T("114/235"), 1) == T("114/237/568"));
}

TEST_CASE("shuffle edge positions and empties") {
    // i = 0 stacks the inserted block first
    CHECK(shuffle(T("123"), T("114/235"), 0) == T("123/447/568"));
    // i = l1 stacks it last
    CHECK(shuffle(T("123"), T("114/235"), 5) == T("114/235/678"));
    CHECK(shuffle(tableau{}, T("114/235"), 3) == T("114/235"));
    CHECK(shuffle(T("123"), tableau{}, 0) == T("123"));
    CHECK(shuffle(tableau{}, tableau{}, 0).empty());
}

TEST_CASE("shuffle in three-row form matches conjugated column form") {
    tableau tp = T("123");
    tableau host = T("114/235");
    tableau expect = shuffle(tp, host, 1);
    tableau got3 = shuffle(conjugate(tp), conjugate(host), 1);
    CHECK(got3 == conjugate(expect));
}

TEST_CASE("shuffle rejects bad indices and mixed shapes by name") {
    try {
        shuffle(T("123"), T("114/235"), 6);
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::index_out_of_range);
    }
    CHECK_THROWS_AS(shuffle(T("123"), T("114/235"), -1), op_error);
    try {
        shuffle(conjugate(T("123")), T("114/235"), 1);  // 3-row block into 3-column host
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::wrong_shape);
    }
    try {
        shuffle(T("113"), T("114/235"), 1);  // inserted block has no value 2
        FAIL("expected a throw");
    } catch (const op_error& e) {
        CHECK(e.code() == errc::missing_value);
    }
}

TEST_CASE("shuffle of valid fillings is always semistandard") {
    sign_string s1 = parse_signs("--++"), s2 = parse_signs("+++");
    for (const tableau& host : enumerate_fillings(s1))
        for (const tableau& block : enumerate_fillings(s2))
            for (int i = 0; i <= int(s1.size()); ++i) {
                tableau out = shuffle(block, host, i);
                CHECK(is_valid(out));
                CHECK(out.cell_count() == host.cell_count() + block.cell_count());
            }
}
