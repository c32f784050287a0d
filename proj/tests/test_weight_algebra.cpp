#include <cmath>
#include <random>

#include "doctest.h"
#include "lpmln/errors.hpp"
#include "lpmln/parser.hpp"
#include "lpmln/weight_algebra.hpp"

using namespace lpmln;

TEST_SUITE_BEGIN("weight algebra");

TEST_CASE("degrees accumulate hard counts and soft sums separately") {
    CHECK(degree_of(parse_program("alpha : a.\n1 : b.")) == SymbolicWeight{1, 1.0});
    CHECK(degree_of(Program{}) == SymbolicWeight{0, 0.0});
    CHECK(degree_of(parse_program("alpha : a.\nalpha : b.\n0.5 : c.\n0.5 : c.")) ==
          SymbolicWeight{2, 1.0});
    CHECK(degree_of(parse_program("-2 : a.")) == SymbolicWeight{0, -2.0});
}

TEST_CASE("weight arithmetic works in the exponent") {
    SymbolicWeight w{2, 1.5};
    CHECK(w.times(SymbolicWeight{1, -0.5}) == SymbolicWeight{3, 1.0});
    CHECK(w.divided_by(SymbolicWeight{2, 1.5}) == SymbolicWeight::one());
    CHECK(SymbolicWeight::one() == SymbolicWeight{0, 0.0});
    CHECK(w.exponent_at(10.0) == doctest::Approx(21.5));
}

TEST_CASE("degree comparison is lexicographic in the hard count") {
    CHECK(degree_less(SymbolicWeight{0, 100.0}, SymbolicWeight{1, -100.0}));
    CHECK(degree_less(SymbolicWeight{1, 0.0}, SymbolicWeight{1, 0.5}));
    CHECK_FALSE(degree_less(SymbolicWeight{1, 0.5}, SymbolicWeight{1, 0.5}));
    CHECK(dominates(SymbolicWeight{1, -100.0}, SymbolicWeight{0, 100.0}));
}

TEST_CASE("approximate equality uses the pinned tolerance") {
    CHECK(approx_equal(SymbolicWeight{1, 1.0}, SymbolicWeight{1, 1.0 + 9e-10}));
    CHECK_FALSE(approx_equal(SymbolicWeight{1, 1.0}, SymbolicWeight{1, 1.0 + 2e-9}));
    CHECK_FALSE(approx_equal(SymbolicWeight{1, 1.0}, SymbolicWeight{2, 1.0}));
    CHECK(weight_tolerance == 1e-9);
}

TEST_CASE("weight rendering is exact and sign-aware") {
    CHECK(SymbolicWeight{2, 1.0}.to_string() == "2*alpha + 1");
    CHECK(SymbolicWeight{0, 0.0}.to_string() == "0*alpha + 0");
    CHECK(SymbolicWeight{0, -0.5}.to_string() == "0*alpha - 0.5");
    CHECK(SymbolicWeight{-1, 0.0}.to_string() == "-1*alpha + 0");
    CHECK(SymbolicWeight{0, -0.0}.to_string() == "0*alpha + 0");
}

TEST_CASE("limit distribution concentrates on the highest hard count") {
    SUBCASE("equal hard counts reduce to a softmax") {
        auto p = limit_distribution({SymbolicWeight{0, 0.0}, SymbolicWeight{0, 1.0}});
        double e = std::exp(1.0);
        CHECK(p[0] == doctest::Approx(1.0 / (1.0 + e)).epsilon(1e-12));
        CHECK(p[1] == doctest::Approx(e / (1.0 + e)).epsilon(1e-12));
    }
    SUBCASE("a higher hard count takes all the mass exactly") {
        auto p = limit_distribution({SymbolicWeight{1, 0.0}, SymbolicWeight{0, 1.0}});
        CHECK(p[0] == 1.0);
        CHECK(p[1] == 0.0);
    }
    SUBCASE("a singleton always gets probability one") {
        auto p = limit_distribution({SymbolicWeight{3, 5.0}});
        CHECK(p[0] == 1.0);
    }
    SUBCASE("the empty family has no distribution") {
        CHECK_THROWS_WITH_AS(limit_distribution({}),
                             "no stable models: distribution undefined", NoStableModels);
    }
    SUBCASE("large exponents stay finite") {
        auto p = limit_distribution({SymbolicWeight{0, 700.0}, SymbolicWeight{0, 701.0}});
        CHECK(std::isfinite(p[0]));
        CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p[1] / p[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-9));
    }
}

TEST_CASE("limit distribution properties on random families") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> size_dist(1, 8);
    std::uniform_int_distribution<long long> k_dist(0, 3);
    std::uniform_real_distribution<double> c_dist(-5.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<SymbolicWeight> ws;
        int n = size_dist(rng);
        for (int i = 0; i < n; ++i) ws.push_back(SymbolicWeight{k_dist(rng), c_dist(rng)});
        auto p = limit_distribution(ws);
        double total = 0.0;
        long long kmax = 0;
        for (const auto& w : ws) kmax = std::max(kmax, w.alpha_count);
        for (size_t i = 0; i < ws.size(); ++i) {
            total += p[i];
            if (ws[i].alpha_count < kmax) CHECK(p[i] == 0.0);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

        // Scaling every weight by a common factor leaves the distribution alone.
        std::vector<SymbolicWeight> scaled;
        for (const auto& w : ws) scaled.push_back(w.times(SymbolicWeight{2, 3.25}));
        auto q = limit_distribution(scaled);
        for (size_t i = 0; i < ws.size(); ++i) CHECK(p[i] == doctest::Approx(q[i]).epsilon(1e-9));
    }
}

TEST_CASE("the limit ranking agrees with a large concrete alpha") {
    // With integer soft weights, alpha = 1000 is big enough that the concrete
    // exponents order candidates exactly as the symbolic comparison does.
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> k_dist(0, 3);
    std::uniform_int_distribution<int> c_dist(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        SymbolicWeight a{k_dist(rng), double(c_dist(rng))};
        SymbolicWeight b{k_dist(rng), double(c_dist(rng))};
        if (a == b) continue;
        CHECK(degree_less(a, b) == (a.exponent_at(1000.0) < b.exponent_at(1000.0)));
    }
}

TEST_SUITE_END();
