#include "qmcount/ring.hpp"

#include "properties.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qmc;

TEST_CASE("basic arithmetic and truncation") {
    auto r3 = make_ring({{"H", 2}});  // Z[H]/(H^3)
    Class H = Class::generator(r3, "H");
    CHECK(H + H == mpz_class(2) * H);
    CHECK((H * H).coefficient({2}) == 1);
    CHECK((H * H * H).is_zero());

    auto r = make_ring({{"H", 5}, {"h", 1}});
    Class H2 = Class::generator(r, "H");
    Class h = Class::generator(r, "h");
    Class s = (H2 + h) * (H2 + h);
    CHECK(s == H2 * H2 + mpz_class(2) * H2 * h);

    Class one = Class::constant(r, 1);
    CHECK((one + H2) + (-(one + H2)) == Class(r));
}

TEST_CASE("pow") {
    auto r = make_ring({{"H", 5}, {"h", 1}});
    Class H = Class::generator(r, "H");
    Class h = Class::generator(r, "h");
    CHECK(pow(H + h, 2) == H * H + mpz_class(2) * H * h);
    CHECK(pow(H + h, 0) == Class::constant(r, 1));

    auto r9 = make_ring({{"H", 8}, {"h", 1}});
    Class H9 = Class::generator(r9, "H");
    Class h9 = Class::generator(r9, "h");
    Class one = Class::constant(r9, 1);
    Class p = pow(one + H9 + mpz_class(2) * h9, 2);
    CHECK(p.coefficient({0, 0}) == 1);
    CHECK(p.coefficient({1, 0}) == 2);
    CHECK(p.coefficient({0, 1}) == 4);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({1, 1}) == 4);
}

TEST_CASE("binomial products in a nilpotent variable") {
    auto r = make_ring({{"z", 1}});
    Class one = Class::constant(r, 1);
    Class z = Class::generator(r, "z");
    Class p = pow(one + z, 13) * pow(one + z, 2);
    CHECK(p.coefficient({0}) == 1);
    CHECK(p.coefficient({1}) == 15);
}

TEST_CASE("invert_unit") {
    auto r2 = make_ring({{"z", 1}});
    Class z = Class::generator(r2, "z");
    Class one2 = Class::constant(r2, 1);
    CHECK(invert_unit(one2 + z) == one2 - z);

    auto r4 = make_ring({{"H", 3}});
    Class H = Class::generator(r4, "H");
    Class one4 = Class::constant(r4, 1);
    CHECK(invert_unit(one4 + H) == one4 - H + H * H - H * H * H);

    auto r5 = make_ring({{"z", 4}});
    Class z5 = Class::generator(r5, "z");
    Class u = Class::constant(r5, 1) + mpz_class(3) * z5 + z5 * z5;
    CHECK(invert_unit(u) * u == Class::constant(r5, 1));
    Class mu = -u;
    CHECK(invert_unit(mu) * mu == Class::constant(r5, 1));

    CHECK_THROWS_AS(invert_unit(mpz_class(2) * Class::constant(r5, 1)), ring_error);
    CHECK_THROWS_AS(invert_unit(z5), ring_error);
}

TEST_CASE("integrate") {
    auto rn = make_ring({{"H", 4}});
    CHECK(integrate(pow(Class::generator(rn, "H"), 4)) == 1);
    CHECK(integrate(pow(Class::generator(rn, "H"), 3)) == 0);

    auto r = make_ring({{"H", 5}, {"h", 1}});
    Class H = Class::generator(r, "H");
    Class h = Class::generator(r, "h");
    CHECK(integrate(pow(H, 4) * pow(H + h, 2)) == 2);

    auto r2 = make_ring({{"H", 11}, {"h4", 1}, {"h5", 1}});
    Class H2 = Class::generator(r2, "H");
    CHECK(integrate(pow(H2, 7) * pow(H2 + Class::generator(r2, "h4"), 3) *
                    pow(H2 + Class::generator(r2, "h5"), 3)) == 9);
}

TEST_CASE("substitute") {
    long N = 5;
    auto src = make_ring({{"H", 2 * static_cast<int>(N) + 1}});
    Class H = Class::generator(src, "H");
    Class body = pow(Class::constant(src, 1) + H, 2 * N + 2);

    auto tgt = make_ring({{"z", static_cast<int>(N) - 2}});
    Class z = Class::generator(tgt, "z");
    Class img = substitute(body, tgt, {{"H", z}});
    for (int i = 0; i <= N - 2; ++i) {
        mpz_class want;
        mpz_bin_uiui(want.get_mpz_t(), 2 * N + 2, i);
        CHECK(img.coefficient({i}) == want);
    }

    auto r = make_ring({{"H", 5}, {"h", 1}});
    Class H5 = Class::generator(r, "H");
    Class h = Class::generator(r, "h");
    auto z1 = make_ring({{"z", 1}});
    Class zz = Class::generator(z1, "z");
    CHECK(substitute(H5 + h, z1, {{"H", zz}, {"h", Class(z1)}}) == zz);

    std::map<std::string, Class> idmap{{"H", H5}, {"h", h}};
    Class c = pow(H5 + h, 3) - mpz_class(7) * H5;
    CHECK(substitute(c, r, idmap) == c);

    CHECK_THROWS_AS(substitute(H5 + h, z1, {{"H", zz}}), ring_error);
}

TEST_CASE("ring mismatch is an error") {
    auto a = make_ring({{"H", 2}});
    auto b = make_ring({{"H", 3}});
    CHECK_THROWS_AS(Class::generator(a, "H") + Class::generator(b, "H"), ring_error);
    CHECK_THROWS_AS(Class::generator(a, "H") * Class::generator(b, "H"), ring_error);
}

TEST_CASE("randomized ring axioms") {
    CHECK_NOTHROW(qmc_test::ring_axioms_check(500, 12345));
}

TEST_CASE("dense polynomial oracle") {
    CHECK_NOTHROW(qmc_test::dense_oracle_check(60, 777));
}
