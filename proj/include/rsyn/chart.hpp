#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsyn/homalg.hpp"
#include "rsyn/specseq.hpp"
#include "rsyn/syntomic.hpp"

namespace rsyn {

struct ChartClass
{
	std::string name;
	int layer = 0; /* motivic filtration, drawn as the bullet colour */
};

struct ChartCell
{
	RODegree V;
	int m = 0, f = 0;
	int x = 0, y = 0;
	std::vector<ChartClass> classes;
	size_t rank() const { return classes.size(); }
};

struct ChartLine
{
	std::string from, to, kind;
	int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};

enum class ChartAxes { Bidegree, StemWeight };

struct ChartSpec
{
	std::string title;
	ChartAxes axes = ChartAxes::Bidegree;
	Window window;
	int xMin = 0, xMax = -1, yMin = 0, yMax = -1;
	std::vector<ChartCell> cells;
	std::vector<ChartLine> edges;
	std::map<int, std::string> xlabels; /* symbolic stem labels */

	size_t total_rank() const;
	/* rank summed over all cells drawn at (x, y) */
	std::map<std::pair<int, int>, int> grid() const;
};

/* x = V.a, y = V.b; layer = Adams weight of the monomial part of each class */
ChartSpec chart_from_page(const Page& pg, const std::string& title);
/* x = underlying stem, y = Adams weight */
ChartSpec chart_from_syntomic(const SyntomicResult& r);
ChartSpec chart_from_ranks(const RankTable& t, const std::string& title);

nlohmann::json chart_to_json(const ChartSpec& c);
ChartSpec chart_from_json(const nlohmann::json& j);

/* throws WindowTooLarge when the grid has more than max_cells cells */
std::string render_ascii(const ChartSpec& c, size_t max_cells = 40000);
std::string render_svg(const ChartSpec& c, size_t max_cells = 40000);

}  // namespace rsyn
