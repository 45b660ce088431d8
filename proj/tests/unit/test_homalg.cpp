#include <doctest.h>

#include "rsyn/homalg.hpp"
#include "rsyn/syntomic.hpp"

using namespace rsyn;

namespace {

int total(const RankTable& t)
{
	int s = 0;
	for (auto& [_, r] : t)
		s += r;
	return s;
}

}  // namespace

TEST_CASE("Tor over an exterior algebra")
{
	auto lp = named_generator("lambarprime1");
	CHECK(lp.degree.V == RHO + SIGMA);
	auto g = tor_over_exterior({lp});
	REQUIRE(g.gens.size() == 1);
	CHECK(g.gens[0].kind == GenKind::DividedPower);
	CHECK(g.gens[0].degree.V == RHO * 2);

	auto u = tor_over_exterior({});
	CHECK(u.gens.empty());
	CHECK(total(monomial_ranks(u, 10)) == 1);

	for (auto name : {"lambarprime1", "lambarprime2", "lambar1", "lambar2"}) {
		CAPTURE(name);
		auto x = named_generator(name);
		CHECK(monomial_ranks(tor_over_exterior({x}), 24) == restrict_underlying(bar_tor_oracle({x}, 24), 24));
	}
}

TEST_CASE("Tor over a polynomial algebra")
{
	auto v1 = named_generator("vbar1");
	auto e = tor_over_polynomial({v1});
	REQUIRE(e.gens.size() == 1);
	CHECK(e.gens[0].kind == GenKind::Exterior);
	CHECK(e.gens[0].degree.V == v1.degree.V + ONE);

	auto v2 = named_generator("vbar2");
	auto two = tor_over_polynomial({v1, v2});
	CHECK(two.gens.size() == 2);
	CHECK(total(monomial_ranks(two, 40)) == 4);

	KoszulInput in{{v1, v2}, {"vbar1", "vbar2"}, {"vbar1", "vbar2"}};
	CHECK(monomial_ranks(two, 30) == koszul_oracle(in, 30));
	CHECK(monomial_ranks(tor_over_polynomial({v1}), 30) == restrict_underlying(bar_tor_oracle({v1}, 30), 30));
}

TEST_CASE("Koszul complex of a regular element")
{
	GeneratorSpec y{"y", GenKind::Polynomial, {{1, 1}, 1, 0}, ""};
	/* y^15 sits at the top of the window with its bounding chain outside it */
	auto h = restrict_underlying(koszul_oracle({{y}, {"y"}, {}}, 30), 27);
	REQUIRE(total(h) == 1);
	CHECK(h.begin()->first == TriDegree{});
}

TEST_CASE("factorized cotor")
{
	auto p1 = cotor_factorized(thr_factorization(1));
	auto ref = thr_presentation(1);
	CHECK(monomial_ranks(p1, 40) == monomial_ranks(ref, 40));
	CHECK(p1.find("mubar4") >= 0);
	CHECK(p1.find("lambar1") >= 0);
	CHECK(p1.find("lambar2") >= 0);

	auto pm = cotor_factorized(thr_factorization(-1));
	REQUIRE(pm.gens.size() == 1);
	CHECK(pm.gens[0].name == "mubar1");
	CHECK(pm.gens[0].degree == TriDegree{RHO, 1, 0});

	auto triv = cotor_factorized({{FactorKind::Trivial, {}, ""}, {FactorKind::Trivial, {}, ""}});
	CHECK(triv.gens.empty());

	CHECK(parse_factor_kind("primitive-exterior") == FactorKind::PrimitiveExterior);
	CHECK_THROWS_AS(parse_factor_kind("cofree"), UnknownFactorKind);
}

TEST_CASE("convolution and restriction")
{
	RankTable a{{{{0, 0}, 0, 0}, 1}, {{{1, 2}, 2, 0}, 1}};
	auto sq = convolve(a, a, 10);
	CHECK(sq[TriDegree{{1, 2}, 2, 0}] == 2);
	CHECK(sq[TriDegree{{2, 4}, 4, 0}] == 1);
	CHECK(restrict_underlying(sq, 3).size() == 2);
}
