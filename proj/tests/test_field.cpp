#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "codist/field.hpp"

using namespace codist;

TEST_CASE("prime field construction") {
    auto f = Field::make(7);
    CHECK(f->order() == 7);
    CHECK(f->characteristic() == 7);
    CHECK(f->degree() == 1);
    CHECK(f->label() == "7");
}

TEST_CASE("GF(4) default modulus is x^2+x+1") {
    auto f = Field::make(2, 2);
    CHECK(f->order() == 4);
    CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("reducible modulus rejected") {
    // (x+1)^2 = x^2+1 over GF(2)
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(6), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(Field::make(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 3, std::vector<std::uint32_t>{1, 1, 1}),
                    std::invalid_argument);                   // degree mismatch
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}),
                    std::invalid_argument);                   // not monic
}

TEST_CASE("label parsing") {
    CHECK(Field::parse("7")->order() == 7);
    CHECK(Field::parse("2^2")->order() == 4);
    CHECK(Field::parse("3^2")->order() == 9);
    CHECK_THROWS_AS(Field::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse(""), std::invalid_argument);
}

TEST_CASE("basic arithmetic") {
    auto f7 = Field::make(7);
    CHECK(f7->mul(3, 5) == 1);
    CHECK(f7->inv(3) == 5);
    CHECK(f7->add(6, 4) == 3);
    CHECK(f7->sub(2, 5) == 4);
    CHECK_THROWS_AS(f7->inv(0), std::domain_error);

    // omega * omega = omega + 1 in GF(4): index 2 * index 2 -> index 3
    auto f4 = Field::make(2, 2);
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->add(2, 3) == 1);
}

TEST_CASE("element enumeration order") {
    auto f2 = Field::make(2);
    auto e2 = f2->elements();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].is_zero());
    CHECK(e2[1].index() == 1);

    auto f4 = Field::make(2, 2);
    auto e4 = f4->elements();
    REQUIRE(e4.size() == 4);
    CHECK(e4[0].coeffs() == std::vector<std::uint32_t>{0, 0});
    CHECK(e4[1].coeffs() == std::vector<std::uint32_t>{1, 0});
    CHECK(e4[2].coeffs() == std::vector<std::uint32_t>{0, 1});  // omega
    CHECK(e4[3].coeffs() == std::vector<std::uint32_t>{1, 1});  // omega + 1

    auto f7 = Field::make(7);
    for (std::uint32_t i = 0; i < 7; ++i) CHECK(f7->elements()[i].index() == i);
}

TEST_CASE("element operator interface") {
    auto f7 = Field::make(7);
    auto a = f7->element(3), b = f7->element(5);
    CHECK((a * b).index() == 1);
    CHECK((a + b).index() == 1);
    CHECK((a - b).index() == 5);
    CHECK((a / b).index() == 2);  // 3 * 3 = 9 = 2
    CHECK((-a).index() == 4);
    CHECK(a.pow(6).index() == 1);

    auto f5 = Field::make(5);
    CHECK_THROWS_AS(a + f5->element(1), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (auto f : {Field::make(7), Field::make(2, 2), Field::make(2, 3), Field::make(3, 2),
                   Field::make(5, 2), Field::make(17)}) {
        const auto q = f->order();
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = static_cast<std::uint32_t>(rng() % q);
            const auto b = static_cast<std::uint32_t>(rng() % q);
            const auto c = static_cast<std::uint32_t>(rng() % q);
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->div(f->mul(a, b), a) == b);
            }
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, 0) == a);
        }
    }
}

TEST_CASE("Frobenius a^q = a, exhaustive for q <= 64") {
    for (auto f : {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(2, 3),
                   Field::make(2, 4), Field::make(2, 5), Field::make(2, 6), Field::make(3, 2),
                   Field::make(3, 3), Field::make(5, 2), Field::make(7, 2), Field::make(61)}) {
        const auto q = f->order();
        REQUIRE(q <= 64);
        for (std::uint32_t a = 0; a < q; ++a) CHECK(f->pow(a, q) == a);
    }
}

TEST_CASE("coefficient round trip") {
    auto f = Field::make(3, 3);
    for (std::uint32_t i = 0; i < f->order(); ++i) CHECK(f->from_coeffs(f->coeffs(i)) == i);
    CHECK_THROWS_AS(f->from_coeffs({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(f->from_coeffs({3, 0, 0}), std::invalid_argument);
}

TEST_CASE("large prime field without tables") {
    auto f = Field::make(257);
    CHECK(f->mul(256, 256) == 1);  // (-1)^2
    CHECK(f->inv(2) == 129);
}
