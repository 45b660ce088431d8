#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace rsyn::acc {

/* (a, b, layer) -> number of bullets drawn there */
using BulletCount = std::map<std::tuple<int, int, int>, int>;

struct FigureFixture
{
	std::string id;
	int n = 0;          /* spectrum index, -2 for the bare coefficient chart */
	int half_width = 0; /* window is |a|, |b| <= half_width */
	int period = 1;     /* tbar-periodicity of the black pattern */
	/* offset of each coloured copy of the black pattern and its layer */
	std::vector<std::tuple<int, int, int>> layers;
	int expected_stable_page = 0;

	/* the bullets drawn by the figure source, clipped to the window; layer included */
	BulletCount literal() const;
	/* the same loops with every shift and range extended until the window is saturated */
	BulletCount extended() const;
};

FigureFixture figure_coefficients();
FigureFixture figure_f2_periodic();
FigureFixture figure_z2_periodic();
FigureFixture figure_kr_periodic();

struct ChartGenerator
{
	std::string name; /* factors joined by '*' */
	int x = 0, y = 0;
};

struct SyntomicFixture
{
	int n = 0;
	std::vector<ChartGenerator> generators;
	std::vector<std::tuple<int, int, int, int>> segments; /* drawn lines (x1,y1)-(x2,y2) */
	std::map<int, std::string> xlabels;                   /* axis labels */
};

SyntomicFixture syntomic_fixture(int n);

/* factor multiset of a product name, for order-insensitive comparison */
std::vector<std::string> factors(const std::string& name);

}  // namespace rsyn::acc
