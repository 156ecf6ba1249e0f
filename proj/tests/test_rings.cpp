#include <random>

#include "doctest.h"
#include "morava/presentation_io.hpp"
#include "morava/rings.hpp"
#include "oracles.hpp"

using morava::CoeffElem;
using morava::CoeffRingSpec;
using oracle::elem;
using oracle::sigma;

TEST_SUITE("rings") {
    TEST_CASE("coefficient ring shape") {
        CoeffRingSpec spec(2, 8, 8);
        CHECK(spec.describe() == "Z/2^8[a]/(a^8)");
        CHECK(CoeffRingSpec(2, 12, 1).describe() == "Z/2^12");
        CHECK_THROWS_AS(CoeffRingSpec(3, 4, 2), std::invalid_argument);
        CHECK_THROWS_AS(CoeffRingSpec(2, 4, 0), std::invalid_argument);
    }

    TEST_CASE("coefficient arithmetic and printing") {
        CoeffRingSpec spec(2, 8, 8);
        const auto a = CoeffElem::monomial(spec, 1, 1);
        CHECK((a.pow(8)).is_zero());
        CHECK(a.pow(7).degree() == 7);
        CHECK(CoeffElem(spec).degree() == -1);
        CHECK((a * a + CoeffElem::constant(spec, -12).shifted(1)).to_string() == "a^2 + 244*a");
        CHECK(CoeffElem::from_integers(spec, {-1}).to_string() == "255");
        CHECK(CoeffElem::constant(spec, 256).is_zero());
        CHECK(elem(spec, "2a^2").in_maximal_ideal());
        CHECK_FALSE(elem(spec, "a + 3").in_maximal_ideal());
        CHECK(elem(spec, "(a+1)^2") == elem(spec, "a^2 + 2a + 1"));
    }

    TEST_CASE("ring axioms on random elements") {
        CoeffRingSpec spec(2, 8, 8);
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            const auto x = oracle::random_element(spec, rng);
            const auto y = oracle::random_element(spec, rng);
            const auto z = oracle::random_element(spec, rng);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x - x == CoeffElem(spec));
            CHECK(x.pow(3) == x * x * x);
        }
    }

    TEST_CASE("reduction to a smaller ring is a ring map") {
        CoeffRingSpec big(2, 10, 10), small(2, 8, 8);
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            const auto x = oracle::random_element(big, rng);
            const auto y = oracle::random_element(big, rng);
            CHECK((x * y).reduced_to(small) == x.reduced_to(small) * y.reduced_to(small));
            CHECK((x + y).reduced_to(small) == x.reduced_to(small) + y.reduced_to(small));
        }
        CHECK_THROWS_AS(CoeffElem(small).reduced_to(big), std::invalid_argument);
    }

    TEST_CASE("graded order") {
        CoeffRingSpec spec(2, 8, 8);
        CHECK(morava::graded_less(elem(spec, "4"), elem(spec, "2a^2")));
        CHECK(morava::graded_less(elem(spec, "2a^2"), elem(spec, "a^6")));
        CHECK(morava::graded_less(elem(spec, "a"), elem(spec, "2a")));
        CHECK(morava::graded_less(elem(spec, "a + 2"), elem(spec, "a + 4")));
        CHECK_FALSE(morava::graded_less(elem(spec, "a"), elem(spec, "a")));
    }

    TEST_CASE("height-2 reductions") {
        const auto pres = oracle::load("height2.pres");
        CHECK(pres.rank() == 3);
        CHECK(morava::reduce_z_power(pres, 0) == sigma(pres, {"1"}));
        CHECK(morava::reduce_z_power(pres, 3) == sigma(pres, {"0", "0", "0", "1"}));
        CHECK(morava::reduce_z_power(pres, 4) == sigma(pres, {"0", "2", "a", "0"}));
        CHECK(morava::reduce_z_power(pres, 5) == sigma(pres, {"0", "0", "2", "a"}));
        CHECK(morava::reduce_z_power(pres, 6) == sigma(pres, {"0", "2a", "a^2", "2"}));
        CHECK(morava::reduce_z_power(pres, 7) == sigma(pres, {"0", "4", "4a", "a^2"}));
        CHECK(morava::reduce_z_power(pres, 8) == sigma(pres, {"0", "2a^2", "a^3 + 4", "4a"}));
        CHECK(morava::reduce_z_power(pres, 9) == sigma(pres, {"0", "8a", "6a^2", "a^3 + 4"}));
        CHECK(morava::reduce_z_power(pres, 9).to_string() == "(a^3 + 4)*z^3 + 6*a^2*z^2 + 8*a*z");
    }

    TEST_CASE("z-powers satisfy z^(j+k) = z^j z^k") {
        const auto pres = oracle::load("height2.pres");
        for (int j = 0; j <= 12; ++j)
            for (int k = 0; k <= 12; ++k)
                CHECK(morava::reduce_z_power(pres, j + k) ==
                      morava::reduce_z_power(pres, j) * morava::reduce_z_power(pres, k));
    }

    TEST_CASE("evaluation at z = 0 is a ring map") {
        const auto pres = oracle::load("height2.pres");
        std::mt19937_64 rng(41);
        auto random_sigma = [&] {
            std::vector<CoeffElem> c;
            for (int j = 0; j < 4; ++j) c.push_back(oracle::random_element(pres.spec(), rng));
            return morava::SigmaElem(pres.ring, c);
        };
        for (int i = 0; i < 100; ++i) {
            const auto x = random_sigma();
            const auto y = random_sigma();
            CHECK((x * y).at_zero() == x.at_zero() * y.at_zero());
            CHECK((x + y).at_zero() == x.at_zero() + y.at_zero());
            CHECK((x - y).at_zero() == x.at_zero() - y.at_zero());
        }
    }

    TEST_CASE("height-1 reductions and sign normalization") {
        const auto pres = oracle::load("height1.pres");
        CHECK(pres.spec().describe() == "Z/2^12");
        CHECK(pres.rank() == 1);
        // Stored as 2z - z^2, used as z^2 - 2z.
        CHECK(pres.printed_f.back() == CoeffElem::constant(pres.spec(), -1));
        CHECK(pres.ring->relation().back() == CoeffElem::constant(pres.spec(), 1));
        for (int n = 1; n <= 8; ++n)
            CHECK(morava::reduce_z_power(pres, n + 1) == sigma(pres, {"0", std::to_string(1 << n)}));
    }

    TEST_CASE("presentation data errors") {
        auto data = morava::load_presentation_file(oracle::data_path("height2.pres"));
        auto bad_degree = data;
        bad_degree.f.push_back({5, {1}});
        CHECK_THROWS_AS(morava::instantiate(bad_degree), std::invalid_argument);
        auto bad_lead = data;
        bad_lead.f.front().a_coeffs = {3};
        CHECK_THROWS_AS(morava::instantiate(bad_lead), std::invalid_argument);
        CHECK_THROWS_AS(morava::parse_presentation("{"), std::runtime_error);
        CHECK_THROWS_AS(morava::parse_presentation("[]"), std::runtime_error);
        CHECK_THROWS_AS(morava::parse_presentation(R"({"prime":2,"height":1,"precision":8,"truncation":1,"f":[[2,[1]]]})"),
                        std::runtime_error);
        CHECK_THROWS_AS(
            morava::parse_presentation(R"({"prime":2,"height":1,"precision":8,"truncation":1,"f":[[2,"x"]],"tr1":[]})"),
            std::runtime_error);
        CHECK_THROWS_AS(morava::load_presentation_file("/nonexistent/x.pres"), std::runtime_error);
        CHECK_THROWS_AS(morava::resolve_presentation_path("no-such.pres"), std::runtime_error);
    }

    TEST_CASE("re-instantiation at other truncations") {
        const auto small = oracle::load("height2.pres");
        const auto big = oracle::load("height2.pres", 10, 10);
        CHECK(big.spec().describe() == "Z/2^10[a]/(a^10)");
        for (int k = 1; k <= 9; ++k) {
            const auto zb = morava::reduce_z_power(big, k);
            const auto zs = morava::reduce_z_power(small, k);
            for (int j = 0; j < 4; ++j) CHECK(zb.coefficient(j).reduced_to(small.spec()) == zs.coefficient(j));
        }
    }

    TEST_CASE("window matrices print the known dual maps") {
        const auto pres = oracle::load("height2.pres");
        CHECK(morava::window_matrix(pres, 2).describe_dual_map() ==
              "delta_z -> 2*delta_z^4\n"
              "delta_z^2 -> a*delta_z^4 + 2*delta_z^5\n"
              "delta_z^3 -> delta_z^3 + a*delta_z^5\n");
        CHECK(morava::window_matrix(pres, 6).describe_dual_map() ==
              "delta_z -> 4*delta_z^7 + 2*a^2*delta_z^8 + 8*a*delta_z^9\n"
              "delta_z^2 -> 4*a*delta_z^7 + (a^3 + 4)*delta_z^8 + 6*a^2*delta_z^9\n"
              "delta_z^3 -> a^2*delta_z^7 + 4*a*delta_z^8 + (a^3 + 4)*delta_z^9\n");
        const auto id = morava::window_matrix(pres, 0);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) CHECK(id(i, j) == CoeffElem::constant(pres.spec(), i == j ? 1 : 0));
        CHECK(morava::window_shift_for_loop_level(4) == 2);
        CHECK(morava::window_shift_for_loop_level(12) == 6);
        CHECK(morava::window_shift_for_loop_level(5) == 2);
    }

    TEST_CASE("window composition law") {
        for (const char* name : {"height2.pres", "height1.pres"}) {
            const auto pres = oracle::load(name);
            for (int m1 = 0; m1 <= 6; ++m1)
                for (int m2 = 0; m1 + m2 <= 6; ++m2) {
                    CAPTURE(m1);
                    CAPTURE(m2);
                    CHECK(morava::window_matrix(pres, m1) * morava::window_matrix(pres, m2) ==
                          morava::window_matrix(pres, m1 + m2));
                }
        }
    }
}
