#include "fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace rsyn::acc {

namespace {

/* the loops of the figure sources: positive cone bullets at (-m+s, n+s) for m <= 0, n <= m;
 * negative cone bullets at (-k+s, n+s) for the listed (k, n-range) */
struct Loops
{
	std::vector<int> pos_shifts;
	int pos_low = -5; /* lower end of the m and n loops */
	std::vector<int> neg_shifts;
	std::vector<std::tuple<int, int, int>> neg_rows; /* k, n from, n to */
};

Loops loops_for(const std::string& id)
{
	auto range = [](int lo, int hi, int step = 1) {
		std::vector<int> v;
		for (int i = lo; i <= hi; i += step)
			v.push_back(i);
		return v;
	};
	auto rows = [](int kmax, int top) {
		std::vector<std::tuple<int, int, int>> r;
		for (int k = 2; k <= kmax; ++k)
			r.push_back({k, k, top});
		return r;
	};
	if (id == "coefficients")
		return {{0}, -5, {0}, rows(5, 5)};
	if (id == "f2")
		return {range(-5, 5), -5, range(-3, 3), rows(5, 5)};
	if (id == "z2")
		/* the source lists the shifts of three rows as {-2,1,0,1,2}, read as {-2,0,2} */
		return {range(-4, 4, 2), -5, range(-2, 2, 2), {{2, 2, 5}, {3, 3, 6}, {4, 4, 5}, {5, 5, 5}}};
	if (id == "kr")
		/* rows k >= 6 are written with -14+s in the source; read as -k+s */
		return {range(-8, 8, 4), -10, range(-4, 4, 4), rows(14, 14)};
	throw std::invalid_argument("unknown figure " + id);
}

void draw(BulletCount& out, const Loops& L, const std::vector<std::tuple<int, int, int>>& layers, int hw)
{
	auto put = [&](int a, int b) {
		for (auto [da, db, layer] : layers) {
			int x = a + da, y = b + db;
			if (std::abs(x) <= hw && std::abs(y) <= hw)
				out[{x, y, layer}]++;
		}
	};
	for (int s : L.pos_shifts)
		for (int m = L.pos_low; m <= 0; ++m)
			for (int n = L.pos_low; n <= m; ++n)
				put(-m + s, n + s);
	for (int s : L.neg_shifts)
		for (auto [k, lo, hi] : L.neg_rows)
			for (int n = lo; n <= hi; ++n)
				put(-k + s, n + s);
}

}  // namespace

BulletCount FigureFixture::literal() const
{
	BulletCount out;
	draw(out, loops_for(id), layers, half_width);
	return out;
}

BulletCount FigureFixture::extended() const
{
	const int R = 8 * half_width + 16;
	Loops L;
	L.pos_low = -R;
	if (period == 0)
		L.pos_shifts = L.neg_shifts = {0};
	else
		for (int s = -R; s <= R; ++s)
			if (s % period == 0)
				L.pos_shifts.push_back(s), L.neg_shifts.push_back(s);
	for (int k = 2; k <= R; ++k)
		L.neg_rows.push_back({k, k, R});
	BulletCount out;
	draw(out, L, layers, half_width);
	return out;
}

FigureFixture figure_coefficients()
{
	return {"coefficients", -2, 5, 0, {{0, 0, 0}}, 0};
}

FigureFixture figure_f2_periodic()
{
	return {"f2", -1, 5, 1, {{0, 0, 0}}, 2};
}

FigureFixture figure_z2_periodic()
{
	/* blue copy drawn with xshift -1.15, yshift .15: offset (-1,0) plus a nudge */
	return {"z2", 0, 5, 2, {{0, 0, 0}, {-1, 0, 1}}, 3};
}

FigureFixture figure_kr_periodic()
{
	/* offsets (2.85,4.15), (.85,2.15), (2.7,6.3) read as (3,4), (1,2), (4,6) */
	return {"kr", 1, 7, 4, {{0, 0, 0}, {3, 4, 1}, {1, 2, 1}, {4, 6, 2}}, 5};
}

SyntomicFixture syntomic_fixture(int n)
{
	SyntomicFixture f;
	f.n = n;
	std::vector<ChartGenerator> g = {{"1", 0, 0}, {"del", -1, 1}};
	if (n >= 0) {
		std::vector<ChartGenerator> z = {{"Xibar1", 1, 1}, {"lambar1", 3, 1}, {"del*lambar1", 2, 2}};
		g.insert(g.end(), z.begin(), z.end());
	}
	if (n >= 1) {
		std::vector<ChartGenerator> k = {{"Xibar2", 3, 1},          {"del*lambar2", 6, 2},        {"lambar1*Xibar2", 6, 2},
										 {"lambar2", 7, 1},         {"Xibar1*lambar2", 8, 2},     {"lambar1*lambar2", 10, 2},
										 {"del*lambar1*lambar2", 9, 3}};
		g.insert(g.end(), k.begin(), k.end());
	}
	if (n >= 2) {
		std::vector<ChartGenerator> t = {{"Xibar3", 7, 1},
										 {"lambar1*Xibar3", 10, 2},
										 {"del*lambar3", 14, 2},
										 {"lambar2*Xibar3", 14, 2},
										 {"lambar3", 15, 1},
										 {"Xibar1*lambar3", 16, 2},
										 {"del*lambar1*lambar3", 17, 3},
										 {"lambar1*lambar3", 18, 2},
										 {"Xibar2*lambar3", 18, 2},
										 {"Xibar3*lambar1*lambar2", 17, 3},
										 {"lambar1*Xibar2*lambar3", 21, 3},
										 {"del*lambar2*lambar3", 21, 3},
										 {"lambar2*lambar3", 22, 2},
										 {"Xibar1*lambar2*lambar3", 23, 3},
										 {"del*lambar1*lambar2*lambar3", 24, 4},
										 {"lambar1*lambar2*lambar3", 25, 3}};
		g.insert(g.end(), t.begin(), t.end());
	}
	f.generators = g;
	if (n == -1)
		f.segments = {{0, 0, -1, 1}};
	if (n == 0)
		f.segments = {{0, 0, 2, 2}, {0, 0, -1, 1}, {3, 1, 2, 2}};
	if (n >= 1) {
		f.xlabels = {{-1, "-1"},     {0, "0"},      {1, "ρ-1"},    {2, "2ρ-2"},   {3, "2ρ-1"},
					 {6, "4ρ-2"},    {7, "4ρ-1"},   {8, "5ρ-2"},   {9, "6ρ-3"},   {10, "6ρ-2"}};
		if (n == 2) {
			/* label at 16 set to 9ρ-2, the stem of the class there */
			std::map<int, std::string> more = {{14, "8ρ-2"},  {15, "8ρ-1"},  {16, "9ρ-2"},  {17, "10ρ-3"},
											   {18, "10ρ-2"}, {21, "12ρ-3"}, {22, "12ρ-2"}, {23, "13ρ-3"},
											   {24, "14ρ-4"}, {25, "14ρ-3"}};
			f.xlabels.insert(more.begin(), more.end());
		}
	}
	return f;
}

std::vector<std::string> factors(const std::string& name)
{
	std::vector<std::string> out;
	std::stringstream ss(name);
	std::string tok;
	while (std::getline(ss, tok, '*'))
		out.push_back(tok);
	std::sort(out.begin(), out.end());
	return out;
}

}  // namespace rsyn::acc
