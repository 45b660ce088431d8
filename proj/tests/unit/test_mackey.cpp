#include <doctest.h>

#include "rsyn/mackey.hpp"

using namespace rsyn;

TEST_CASE("constant Z")
{
	auto M = constant(AbelianGroup::Z());
	CHECK(M.fixed == AbelianGroup::Z());
	CHECK(M.res == IntMat{{1}});
	CHECK(M.tr == IntMat{{2}});
	CHECK(M.check());
	CHECK(M.is_constant());
}

TEST_CASE("constant F2 has zero transfer")
{
	auto M = constant(AbelianGroup::F2());
	CHECK(M.fixed == AbelianGroup::F2());
	CHECK(hom_equal(M.tr, IntMat{{0}}, M.fixed, 1));
	CHECK(M.check());
}

TEST_CASE("burnside functor is well formed")
{
	std::string why;
	CHECK_MESSAGE(burnside().check(&why), why);
	CHECK_FALSE(burnside().is_constant());
}

TEST_CASE("f1_sub")
{
	auto F = f1_sub(constant(AbelianGroup::F2()));
	CHECK(F.fixed.is_zero());
	CHECK(F.underlying == AbelianGroup::F2());

	/* image of tr in A(C2) is Z{[C2]} */
	auto B = f1_sub(burnside());
	CHECK(B.fixed == AbelianGroup::Z());
	CHECK(B.underlying == AbelianGroup::Z());
	CHECK(B.check());

	MackeyFunctor top{AbelianGroup::Z(), AbelianGroup::zero(), {}, {{}}, {}};
	CHECK(f1_sub(top).is_zero());

	/* constant Z: image of tr is 2Z, still Z as a group */
	auto Z = f1_sub(constant(AbelianGroup::Z()));
	CHECK(Z.fixed == AbelianGroup::Z());
	CHECK(Z.check());
}

TEST_CASE("slice_graded")
{
	SliceTable t;
	t.kmin = 0, t.kmax = 0;
	t.even[0] = AbelianGroup::Z();
	auto s = slice_graded(t, true);
	REQUIRE(s.size() == 1);
	CHECK(s[0].n == 0);
	CHECK(s[0].suspension == RODegree{0, 0});
	CHECK(s[0].M.fixed == AbelianGroup::Z());
	CHECK(s[0].M.is_constant());

	SliceTable w;
	w.kmin = -2, w.kmax = 2;
	for (int k = -2; k <= 2; ++k)
		w.even[k] = AbelianGroup::F2();
	w.odd[1] = constant(AbelianGroup::F2());
	auto even_only = slice_graded(w, true);
	CHECK(even_only.size() == 5);
	for (auto& e : even_only) {
		CHECK(e.n % 2 == 0);
		CHECK(e.suspension == RHO * (e.n / 2));
	}

	CHECK(slice_graded(SliceTable{}, true).empty());

	SliceTable bad;
	bad.kmin = 0, bad.kmax = 0;
	bad.even[3] = AbelianGroup::Z();
	CHECK_THROWS_AS(slice_graded(bad, true), std::out_of_range);
}

TEST_CASE("smith normal form")
{
	IntMat A{{2, 4}, {6, 8}};
	auto S = smith_normal_form(A, 2, 2);
	auto UAV = int_mul(int_mul(S.U, A, 2), S.V, 2);
	CHECK(UAV == S.D);
	CHECK(std::abs(S.D[0][0]) == 2);
	CHECK(std::abs(S.D[1][1]) == 4);
	CHECK(S.D[0][1] == 0);
	CHECK(S.D[1][0] == 0);
}
