#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sl3web/tableau.hpp"

using namespace sl3web;

namespace {

// Hook-length count of standard fillings of the 3-column rectangle with n rows.
// Computed with exact integer division at every step (the partial products of
// n!/(hooks) taken in a safe order), values stay far below 2^63 for n <= 4.
std::int64_t hook_length_count(int n) {
    if (n == 0) return 1;
    std::int64_t numerator = 1;
    for (int k = 1; k <= 3 * n; ++k) numerator *= k;
    std::int64_t hooks = 1;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < 3; ++c) hooks *= (2 - c) + (n - 1 - r) + 1;
    return numerator / hooks;
}

// Brute force: try every distinct arrangement of the content multiset over the
// row-major cells and keep the semistandard ones.
std::set<std::string> brute_force_fillings(const sign_string& s) {
    std::set<std::string> out;
    int w = weight(s);
    if (w % 3 != 0) return out;
    std::vector<int> values;
    composition content = content_of_sign(s);
    for (size_t v = 0; v < content.size(); ++v)
        for (int k = 0; k < content[v]; ++k) values.push_back(int(v) + 1);
    std::sort(values.begin(), values.end());
    int rows = w / 3;
    do {
        tableau t;
        t.rows.assign(rows, std::vector<int>(3));
        for (int cell = 0; cell < w; ++cell) t.rows[cell / 3][cell % 3] = values[cell];
        if (is_valid(t)) out.insert(format_tableau(t));
    } while (std::next_permutation(values.begin(), values.end()));
    if (w == 0) out.insert("");
    return out;
}

std::vector<std::string> sign_texts_of_weight(int w) {
    std::vector<std::string> out;
    for (int minuses = 0; 2 * minuses <= w; ++minuses) {
        int pluses = w - 2 * minuses;
        std::string base = std::string(size_t(minuses), '-') + std::string(size_t(pluses), '+');
        std::sort(base.begin(), base.end());
        do out.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
    }
    return out;
}

}  // namespace

TEST_CASE("filling catalogs match the figure lists, in lexicographic order") {
    auto texts = [](const sign_string& s) {
        std::vector<std::string> out;
        for (const tableau& t : enumerate_fillings(s)) out.push_back(format_tableau(t));
        return out;
    };
    CHECK(texts(parse_signs("---")) == std::vector<std::string>{"112/233"});
    CHECK(texts(parse_signs("--++")) == std::vector<std::string>{"112/234", "113/224"});
    CHECK(texts(parse_signs("-++++")) ==
          std::vector<std::string>{"112/345", "113/245", "114/235"});
    CHECK(texts(parse_signs("+++")) == std::vector<std::string>{"123"});
    CHECK(texts(parse_signs("+-")) == std::vector<std::string>{"122"});
    CHECK(texts(parse_signs("-+")) == std::vector<std::string>{"112"});
    CHECK(texts(parse_signs("")) == std::vector<std::string>{""});
    CHECK(texts(parse_signs("+")).empty());     // weight 1
    CHECK(texts(parse_signs("++-")).empty());   // weight 4
    CHECK(texts(parse_signs("--")).empty());    // weight 4
}

TEST_CASE("every emitted filling is a valid content filling") {
    for (const char* text : {"---", "--++", "-++++", "++-++-+", "+++++++++"}) {
        sign_string s = parse_signs(text);
        for (const tableau& t : enumerate_fillings(s)) CHECK(validate_tableau(t, s).empty());
    }
}

TEST_CASE("the stream restarts identically and matches the batch call") {
    sign_string s = parse_signs("-++++");
    filling_stream a(s), b(s);
    std::vector<tableau> batch = enumerate_fillings(s);
    for (const tableau& expect : batch) {
        auto ta = a.next(), tb = b.next();
        REQUIRE(ta.has_value());
        REQUIRE(tb.has_value());
        CHECK(*ta == expect);
        CHECK(*tb == expect);
    }
    CHECK(!a.next().has_value());
    CHECK(!a.next().has_value());  // stays exhausted
}

TEST_CASE("all-plus counts follow the hook length formula") {
    CHECK(hook_length_count(1) == 1);
    CHECK(hook_length_count(2) == 5);
    CHECK(hook_length_count(3) == 42);
    CHECK(hook_length_count(4) == 462);
    for (int n = 0; n <= 4; ++n)
        CHECK(std::int64_t(enumerate_fillings(all_plus(3 * n)).size()) == hook_length_count(n));
}

TEST_CASE("enumeration agrees with the brute-force multiset filter at weights 3 and 6") {
    for (int w : {3, 6})
        for (const std::string& text : sign_texts_of_weight(w)) {
            sign_string s = parse_signs(text);
            std::set<std::string> brute = brute_force_fillings(s);
            std::set<std::string> fast;
            for (const tableau& t : enumerate_fillings(s)) fast.insert(format_tableau(t));
            CAPTURE(text);
            CHECK(fast == brute);
        }
}

TEST_CASE("enumeration agrees with the brute force on two weight-9 strings") {
    for (const char* text : {"++-++-+", "---+++"}) {
        sign_string s = parse_signs(text);
        std::set<std::string> brute = brute_force_fillings(s);
        std::set<std::string> fast;
        for (const tableau& t : enumerate_fillings(s)) fast.insert(format_tableau(t));
        CAPTURE(text);
        CHECK(fast == brute);
    }
}

TEST_CASE("counts depend only on the sign multiset") {
    for (int w : {3, 6, 9}) {
        std::vector<std::string> all = sign_texts_of_weight(w);
        std::vector<size_t> count_by_minuses;
        for (const std::string& text : all) {
            size_t minuses = size_t(std::count(text.begin(), text.end(), '-'));
            size_t n = enumerate_fillings(parse_signs(text)).size();
            if (count_by_minuses.size() <= minuses) count_by_minuses.resize(minuses + 1, SIZE_MAX);
            if (count_by_minuses[minuses] == SIZE_MAX) count_by_minuses[minuses] = n;
            CAPTURE(text);
            CHECK(count_by_minuses[minuses] == n);
        }
    }
}
