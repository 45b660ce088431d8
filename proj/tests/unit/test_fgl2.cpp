#include <doctest.h>

#include <fstream>

#include "rsyn/fgl2.hpp"

using namespace rsyn;
using namespace rsyn::fgl;

namespace {

F2Poly one() { return {Exps(2 * K, 0)}; }

}  // namespace

TEST_CASE("2-series modulo (v0)")
{
	auto s = two_series({0}, 6);
	CHECK(s.leading() == 2);
	CHECK(s.coeff(2) == F2Poly{v_exp(1)});
	CHECK(s.coeff(3).empty());
	CHECK(s.coeff(0).empty());
	CHECK(s.coeff(1).empty());
}

TEST_CASE("2-series modulo (v0, v1)")
{
	auto s = two_series({0, 1}, 10);
	CHECK(s.leading() == 4);
	CHECK(s.coeff(4) == F2Poly{v_exp(2)});
	CHECK(s.coeff(5).empty());
}

TEST_CASE("2-series coefficients are homogeneous")
{
	auto s = two_series({0}, 12);
	for (int k = 0; k < s.trunc; ++k) {
		CAPTURE(k);
		/* |[2](x)| = |x| = -2, so x^k carries degree 2(k-1) */
		CHECK(homogeneous(s.coeff(k), 2 * (k - 1)));
	}
	CHECK_THROWS_AS(two_series({1}, 6), std::invalid_argument);
	CHECK_THROWS_AS(two_series({0, 1}, 5), TruncationTooSmall);
}

TEST_CASE("right unit")
{
	auto r2 = right_unit_t(2);
	CHECK(r2.coeff(0).empty());
	CHECK(r2.coeff(1) == one());

	auto r = right_unit_t(5);
	CHECK(r.coeff(2) == antipode(1));
	CHECK(r.coeff(2) == F2Poly{t_exp(1)});
	CHECK(r.coeff(4) == antipode(2));
	CHECK(r.coeff(3).empty());
}

TEST_CASE("antipode")
{
	CHECK(antipode(0) == one());
	CHECK(antipode(1) == F2Poly{t_exp(1)});
	/* modulo t1-decomposables only t2 survives */
	F2Poly rest;
	for (auto& e : antipode(2))
		if (e[K] == 0)
			rest.insert(e);
	F2Poly t2{t_exp(2)};
	CHECK(rest == t2);
	CHECK(antipode(2).count(t_exp(1, 3)));
	/* chi(t_i) over Q has degree 2(2^i - 1) */
	for (auto& [e, c] : antipode_q(2))
		CHECK(internal_degree(e) == 6);
}

TEST_CASE("logarithm")
{
	auto l = log_coefficients(2);
	REQUIRE(l.size() == 3);
	CHECK(l[0] == q_const(1));
	CHECK(l[1] == q_scale(q_var(v_exp(1)), mpq_class(1, 2)));
	/* log(exp(x)) = x */
	int tr = 8;
	auto id = series_compose(log_series(tr), exp_series(tr), tr);
	for (int k = 0; k < tr; ++k)
		CHECK(id[k] == (k == 1 ? q_const(1) : QPoly{}));
}

TEST_CASE("differential seeds")
{
	auto s = differential_seeds(-1);
	REQUIRE(s.size() == 1);
	CHECK(s[0].page == 1);
	CHECK(s[0].source_gen == "epsbar0");
	REQUIRE(s[0].target.size() == 1);
	CHECK(s[0].target[0].mono == std::map<std::string, int>{{"tbar", 1}, {"mubar1", 1}});

	auto pages = [](int n) {
		std::set<int> p;
		for (auto& r : differential_seeds(n))
			p.insert(r.page);
		return p;
	};
	CHECK(pages(0) == std::set<int>{1, 2});
	CHECK(pages(1) == std::set<int>{1, 2, 4});
	CHECK(pages(2) == std::set<int>{1, 2, 4, 8});

	bool found = false;
	for (auto& r : differential_seeds(1))
		if (r.page == 4) {
			CHECK(r.source_gen == "tbar");
			CHECK(r.source_exp == 2);
			REQUIRE(r.target.size() == 1);
			CHECK(r.target[0].mono == std::map<std::string, int>{{"tbar", 6}, {"lambar2", 1}});
			found = true;
		}
	CHECK(found);
}

TEST_CASE("seed files match the built-in seeds")
{
	for (auto [n, name] : {std::pair{-1, "f2"}, {0, "z2"}, {1, "kr"}, {2, "tmf13"}}) {
		CAPTURE(name);
		std::ifstream in(std::string(RSYN_DATA_DIR) + "/seeds/" + name + ".json");
		REQUIRE(in);
		auto file = rules_from_json(nlohmann::json::parse(in));
		auto built = differential_seeds(n);
		REQUIRE(file.size() == built.size());
		for (size_t i = 0; i < file.size(); ++i)
			CHECK(rule_str(file[i]) == rule_str(built[i]));
	}
}
