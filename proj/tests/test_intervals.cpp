#include <doctest.h>

#include "cfcolor/colorers.hpp"
#include "cfcolor/intervals.hpp"
#include "cfcolor/potential.hpp"
#include "cfcolor/rng.hpp"

using namespace cfcolor;

namespace {

// Non-increasing vectors with entries in [1, max_entry], length n.
void each_size_vector(int n, int max_entry,
                      const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v;
    auto rec = [&](auto&& self, int pos, int cap) -> void {
        if (pos == n) {
            fn(v);
            return;
        }
        for (int x = 1; x <= cap; ++x) {
            v.push_back(x);
            self(self, pos + 1, x);
            v.pop_back();
        }
    };
    rec(rec, 0, max_entry);
}

}  // namespace

TEST_CASE("median coloring examples") {
    auto c7 = cf_color_intervals_median(7, ColorListFamily::uniform(7, 3));
    CHECK(verify_cf(build_interval_hypergraph(7), c7).ok);
    CHECK(verify_from_lists(c7, ColorListFamily::uniform(7, 3)));

    CHECK(cf_color_intervals_median(1, ColorListFamily(std::vector<std::vector<int>>{{9}})) == Coloring{9});

    // median of [0..2] is vertex 1; it takes color 1 first
    CHECK(cf_color_intervals_median(3, ColorListFamily::uniform(3, 2)) ==
          Coloring{2, 1, 2});

    CHECK_THROWS_AS(cf_color_intervals_median(7, ColorListFamily::uniform(7, 2)),
                    InputError);
}

TEST_CASE("median coloring at exactly the logarithmic size") {
    for (int n = 1; n <= 64; ++n) {
        int need = 1;
        while ((1 << need) <= n) ++need;  // floor(log2 n) + 1
        auto lists = ColorListFamily::uniform(n, need, 10);
        auto c = cf_color_intervals_median(n, lists);
        CHECK(verify_cf(build_interval_hypergraph(n), c).ok);
        CHECK(verify_from_lists(c, lists));
    }
}

TEST_CASE("tightness instances") {
    auto t11 = make_tightness_instance({1, 1});
    CHECK(t11.lists.lists() == std::vector<std::vector<int>>{{1}, {1}});

    auto t221 = make_tightness_instance({2, 2, 1});
    CHECK(t221.lists.lists() ==
          std::vector<std::vector<int>>{{1, 2}, {1, 2}, {2}});

    CHECK_THROWS_AS(make_tightness_instance({3, 3}), InputError);
    CHECK_THROWS_AS(make_tightness_instance({1, 2}), InputError);
    CHECK_THROWS_AS(make_tightness_instance({}), InputError);
}

TEST_CASE("tightness instances defeat um list coloring") {
    CHECK(!brute_force_um_list_colorable(build_interval_hypergraph(2),
                                         make_tightness_instance({1, 1}).lists)
               .has_value());
    CHECK(!brute_force_um_list_colorable(build_interval_hypergraph(3),
                                         make_tightness_instance({2, 2, 1}).lists)
               .has_value());

    auto witness = brute_force_um_list_colorable(build_interval_hypergraph(3),
                                                 ColorListFamily::uniform(3, 2));
    REQUIRE(witness.has_value());
    CHECK(*witness == Coloring{1, 2, 1});  // lexicographic first
}

TEST_CASE("tightness sweep at desk scale") {
    for (int n = 1; n <= 5; ++n) {
        each_size_vector(n, 4, [&](const std::vector<int>& sizes) {
            Rational sum = 0;
            for (int x : sizes)
                sum += Rational(1, bigint_pow(BigInt(2), unsigned(x)));
            if (sum < 1) return;
            auto inst = make_tightness_instance(sizes);
            CHECK(!brute_force_um_list_colorable(build_interval_hypergraph(n),
                                                 inst.lists)
                       .has_value());
        });
    }
}

TEST_CASE("uniform logarithmic lists keep H_n um-colorable") {
    for (int n = 1; n <= 8; ++n) {
        int size = 1;
        while ((1 << size) <= n) ++size;
        auto h = build_interval_hypergraph(n);
        auto lists = ColorListFamily::uniform(n, size);
        // the sufficient condition holds strictly below 1
        auto [ok, sum] = check_list_condition(lists, 2);
        CHECK(ok);
        auto res = um_color_from_lists(h, lists, make_interval_colorer());
        CHECK(res.verified);
        auto witness = brute_force_um_list_colorable(h, lists);
        CHECK(witness.has_value());
    }
}

TEST_CASE("product guard") {
    CHECK_THROWS_AS(
        brute_force_um_list_colorable(build_interval_hypergraph(12),
                                      ColorListFamily::uniform(12, 9), 1000),
        GuardError);
}
