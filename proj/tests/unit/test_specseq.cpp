#include <doctest.h>

#include "rsyn/fgl2.hpp"
#include "rsyn/specseq.hpp"
#include "rsyn/syntomic.hpp"

using namespace rsyn;

namespace {

std::map<TriDegree, size_t> ranks(const Page& pg, bool certified_only = true)
{
	std::map<TriDegree, size_t> r;
	for (auto& [d, c] : pg.cells)
		if (c.rank() && (!certified_only || pg.is_certified(d)))
			r[d] = c.rank();
	return r;
}

/* M2[tbar^(+-N)]<lambar_1..lambar_k> at every cell of w, by the cone rule */
std::map<TriDegree, size_t> expected_einf(int N, const std::vector<TriDegree>& lams, const Window& w)
{
	std::vector<TriDegree> ys{{}};
	for (auto& l : lams) {
		auto cur = ys;
		for (auto& y : cur)
			ys.push_back(y + l);
	}
	std::map<TriDegree, size_t> r;
	for (int e = w.fMin; e <= w.fMax; ++e) {
		if (e % N)
			continue;
		for (auto& y : ys) {
			TriDegree base = tbar_degree() * e + y;
			for (int a = w.aMin; a <= w.aMax; ++a)
				for (int b = w.bMin; b <= w.bMax; ++b)
					if (m2_rank(RODegree{a, b} - base.V))
						r[{{a, b}, base.m, base.f}]++;
		}
	}
	return r;
}

std::shared_ptr<const Presentation> f2_periodic()
{
	return std::make_shared<const Presentation>(build_bockstein(thr_mod_presentation(-1), BocksteinMode::Periodic));
}

}  // namespace

TEST_CASE("E1 of the F2 case")
{
	auto p = f2_periodic();
	Window w{-3, 3, -3, 3, -2, 2};
	auto pg = init_page(p, w);
	CHECK(pg.r == 1);
	CHECK(pg.total_rank() > 0);
	/* every E1 basis element is M2 times tbar^j mubar^k epsbar0^e */
	size_t count = 0;
	for (int a = w.aMin; a <= w.aMax; ++a)
		for (int b = w.bMin; b <= w.bMax; ++b)
			for (int j = w.fMin; j <= w.fMax; ++j)
				for (int k = 0; k <= 40; ++k)
					for (int e = 0; e <= 1; ++e) {
						RODegree V = RODegree{-j, -j} + RODegree{k, k} + RODegree{e, 0};
						count += m2_rank(RODegree{a, b} - V);
					}
	CHECK(pg.total_rank() == count);
}

TEST_CASE("empty window gives an empty page")
{
	auto pg = init_page(f2_periodic(), Window{});
	CHECK(pg.cells.empty());
	CHECK(pg.total_rank() == 0);
}

TEST_CASE("tbar shift symmetry of E1")
{
	auto p = std::make_shared<const Presentation>(build_bockstein(thr_mod_presentation(0), BocksteinMode::Periodic));
	Window w{-3, 3, -3, 3, -2, 2};
	Window s = w;
	s.aMin -= 1, s.aMax -= 1, s.bMin -= 1, s.bMax -= 1, s.fMin += 1, s.fMax += 1;
	auto r0 = ranks(init_page(p, w), false);
	auto r1 = ranks(init_page(p, s), false);
	REQUIRE(r0.size() == r1.size());
	for (auto& [d, k] : r0) {
		auto it = r1.find(d + tbar_degree());
		REQUIRE(it != r1.end());
		CHECK(it->second == k);
	}
}

TEST_CASE("Leibniz extension of the seed rules")
{
	auto p = build_bockstein(thr_mod_presentation(-1), BocksteinMode::Periodic);
	auto rules = resolve_rules(p, fgl::differential_seeds(-1), 1);
	REQUIRE(rules.size() == 1);
	for (int k = 0; k <= 4; ++k) {
		Mono src = p.gen_mono("epsbar0");
		src[p.index("mubar1")] = k;
		Mono tgt = p.gen_mono("tbar");
		tgt[p.index("mubar1")] = k + 1;
		auto d = apply_d(p, rules, Term{src, M2Basis::one()});
		CHECK(d == Element::of(Term{tgt, M2Basis::one()}));
		CHECK(apply_d(p, rules, Term{p.gen_mono("mubar1", k), M2Basis::one()}).is_zero());
	}
	/* epsbar0^2 = 0 and d of it vanishes too */
	CHECK_FALSE(p.mono_mul(p.gen_mono("epsbar0"), p.gen_mono("epsbar0")));
	CHECK(apply_d(p, rules, Element{}).is_zero());
	CHECK(apply_d(p, resolve_rules(p, fgl::differential_seeds(-1), 2), Term{p.gen_mono("epsbar0"), M2Basis::one()}).is_zero());
}

TEST_CASE("turning pages")
{
	/* F2: E2 = M2[tbar^+-1] */
	Window einf = einf_window(-1, -4, 4, -4, 4, true, false);
	auto f2 = run_bockstein(-1, BocksteinMode::Periodic, einf, true);
	CHECK(f2.stable_page == 2);
	CHECK(ranks(f2.einf) == expected_einf(1, {}, einf));

	/* no rules: ranks unchanged */
	auto p = f2_periodic();
	auto pg = init_page(p, Window{-3, 3, -3, 3, -1, 1});
	apply_rules(pg, {});
	auto next = turn_page(pg);
	CHECK(next.r == 2);
	CHECK(ranks(next, false) == ranks(pg, false));

	/* Z2: E3 = M2[tbar^+-2]<lambar1> */
	Window wz = einf_window(0, -4, 4, -4, 4, true, false);
	auto z2 = run_bockstein(0, BocksteinMode::Periodic, wz);
	CHECK(z2.stable_page == 3);
	CHECK(ranks(z2.einf) == expected_einf(2, {named_generator("lambar1").degree}, wz));
}

TEST_CASE("stable pages")
{
	int expect[] = {2, 3, 5};
	for (int n = -1; n <= 1; ++n) {
		CAPTURE(n);
		auto run = run_bockstein(n, BocksteinMode::Periodic, einf_window(n, -3, 3, -3, 3, true, false), true);
		CHECK(run.stable_page == expect[n + 1]);
		for (auto& pg : run.pages)
			CHECK_NOTHROW(check_d_squared(pg));
	}
	auto kr = run_bockstein(1, BocksteinMode::Periodic, einf_window(1, -3, 3, -3, 3, true, false));
	CHECK(ranks(kr.einf) == expected_einf(4, {named_generator("lambar1").degree, named_generator("lambar2").degree},
										  einf_window(1, -3, 3, -3, 3, true, false)));
}

TEST_CASE("Bockstein modes")
{
	auto base = thr_mod_presentation(-1);
	auto per = build_bockstein(base, BocksteinMode::Periodic);
	auto bnd = build_bockstein(base, BocksteinMode::Bounded);
	auto apx = build_bockstein(base, BocksteinMode::Approximate, 1);
	CHECK(per.gens[per.index("tbar")].kind == GenKind::Laurent);
	CHECK(bnd.gens[bnd.index("tbar")].kind == GenKind::Polynomial);
	CHECK(apx.killed(apx.gen_mono("tbar", 2)));
	CHECK_FALSE(apx.killed(apx.gen_mono("tbar")));
	/* approximate k = 1 still sees d1(epsbar0) = tbar mubar */
	auto rules = resolve_rules(apx, fgl::differential_seeds(-1), 1);
	Mono tm = apx.gen_mono("tbar");
	tm[apx.index("mubar1")] = 1;
	CHECK(apply_d(apx, rules, Term{apx.gen_mono("epsbar0"), M2Basis::one()}) == Element::of(Term{tm, M2Basis::one()}));

	CHECK_THROWS_AS(build_bockstein(per, BocksteinMode::Periodic), NameClash);
	CHECK_THROWS_AS(build_bockstein(base, BocksteinMode::Approximate, -1), std::invalid_argument);

	/* bounded and periodic E1 agree in f >= 0 */
	Window w{-4, 4, -4, 4, 0, 3};
	auto pb = init_page(bnd, w), pp = init_page(per, w);
	CHECK(ranks(pb, false) == ranks(pp, false));
	Window neg{-4, 4, -4, 4, -3, -1};
	CHECK(init_page(bnd, neg).total_rank() == 0);
	CHECK(init_page(per, neg).total_rank() > 0);
}

TEST_CASE("rule files round trip")
{
	auto rules = fgl::differential_seeds(1);
	auto back = rules_from_json(rules_to_json(rules));
	REQUIRE(back.size() == rules.size());
	for (size_t i = 0; i < rules.size(); ++i)
		CHECK(rule_str(back[i]) == rule_str(rules[i]));
}

TEST_CASE("page json carries the page number")
{
	auto run = run_bockstein(-1, BocksteinMode::Periodic, einf_window(-1, -2, 2, -2, 2, true, false));
	auto j = page_to_json(run.einf);
	CHECK(j.at("page") == run.einf.r);
	CHECK(j.at("cells").size() == ranks(run.einf).size());
}
