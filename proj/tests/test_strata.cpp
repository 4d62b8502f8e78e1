#include "qmcount/strata.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qmc;

TEST_CASE("freckle codim") {
    CHECK(freckle_codim(1, 2, 1) == 2);
    CHECK(freckle_codim(2, 3, 1) == 2);
    for (long k = 1; k <= 3; ++k)
        for (long m = 1; m <= 4; ++m) CHECK(freckle_codim(k, k, m) == m);
    CHECK_THROWS_AS(freckle_codim(2, 1, 1), counting_error);
    CHECK_THROWS_AS(freckle_codim(1, 2, 0), counting_error);
}

TEST_CASE("scar locus dim") {
    CHECK(scar_locus_dim(2, 1, 1) == 0);
    CHECK(scar_locus_dim(3, 1, 1) == 1);
    CHECK(scar_locus_dim(5, 2, 3) == 2);
    for (long k = 2; k <= 5; ++k) CHECK(scar_locus_dim(k, k - 1, 1) == 0);
    CHECK_THROWS_AS(scar_locus_dim(2, 2, 1), counting_error);
}

TEST_CASE("scar closure shape") {
    CHECK(scar_closure_shape(2, 2, 1) == std::pair<long, long>(8, 2));
    CHECK(scar_closure_shape(2, 2, 2) == std::pair<long, long>(2, 5));
    CHECK(scar_closure_shape(2, 1, 1) == std::pair<long, long>(2, 2));
    CHECK(scar_closure_shape(1, 1, 1) == std::pair<long, long>(1, 2));
    CHECK_THROWS_AS(scar_closure_shape(2, 2, 3), counting_error);
    CHECK_THROWS_AS(scar_closure_shape(2, 2, 0), counting_error);
}

TEST_CASE("table for degree 1 maps P^2 -> P^2") {
    auto rows = stratification_table(2, 2, 1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].kind == StratumRow::Kind::maps);
    CHECK(rows[0].codim == 0);
    CHECK(rows[0].shape == "P^8");
    CHECK(rows[1].kind == StratumRow::Kind::freckle);
    CHECK(rows[1].param == 1);
    CHECK(rows[1].codim == 1);
    CHECK(rows[1].shape == "P^5-bundle over P^2");
    CHECK(rows[2].kind == StratumRow::Kind::scar);
    CHECK(rows[2].param == 1);
    CHECK(rows[2].codim == 4);
    CHECK(rows[2].shape == "P^2 x P^2");
}

TEST_CASE("table for degree 2 maps P^2 -> P^2") {
    auto rows = stratification_table(2, 2, 2);
    REQUIRE(rows.size() == 7);
    long codims[] = {0, 1, 2, 3, 4, 7, 10};
    for (int i = 0; i < 7; ++i) CHECK(rows[i].codim == codims[i]);
    CHECK(rows[0].shape == "P^17");
    CHECK(rows[1].shape == "P^14-bundle over P^2");
    CHECK(rows[2].shape == "P^11-bundle over Conf_2(P^2)");
    CHECK(rows[3].shape == "P^8-bundle over Conf_3(P^2)");
    CHECK(rows[4].shape == "P^5-bundle over Conf_4(P^2)");
    CHECK(rows[5].shape == "P^8 x P^2");
    CHECK(rows[6].shape == "P^2 x P^5");
    for (const auto& r : rows) CHECK_FALSE(r.generic_caveat);
}

TEST_CASE("table for degree 1 quasimaps P^2 -> P^1") {
    auto rows = stratification_table(2, 1, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].kind == StratumRow::Kind::freckle);
    CHECK(rows[0].codim == 0);
    CHECK(rows[0].shape == "P^5");
    CHECK(rows[1].kind == StratumRow::Kind::scar);
    CHECK(rows[1].codim == 2);
    CHECK(rows[1].shape == "P^1 x P^2");
}

TEST_CASE("k=1 tables") {
    auto rows = stratification_table(1, 2, 3);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].kind == StratumRow::Kind::maps);
    for (long m = 1; m <= 3; ++m) {
        CHECK(rows[m].codim == 2 * m);
        // closure dimension n_knd(1,n,d-m) + m
        CHECK(rows[m].shape ==
              "QMap_" + std::to_string(3 - m) + "(P^1,P^2) x P^" + std::to_string(m));
        CHECK(to_long(n_knd(1, 2, 3), "N") - rows[m].codim ==
              to_long(n_knd(1, 2, 3 - m), "N") + m);
    }
}

TEST_CASE("codims strictly increase down each fixture table") {
    for (auto [k, n, d] : {std::tuple<long, long, long>{2, 2, 1}, {2, 2, 2}, {2, 1, 1}}) {
        auto rows = stratification_table(k, n, d);
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].codim > rows[i - 1].codim);
    }
}

TEST_CASE("generic d rows carry the caveat") {
    auto rows = stratification_table(2, 2, 3);
    bool any = false;
    for (const auto& r : rows)
        if (r.kind == StratumRow::Kind::freckle) {
            CHECK(r.generic_caveat);
            any = true;
        }
    CHECK(any);
}
