#include "rsyn/chart.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rsyn {

size_t ChartSpec::total_rank() const
{
	size_t n = 0;
	for (auto& c : cells)
		n += c.rank();
	return n;
}

std::map<std::pair<int, int>, int> ChartSpec::grid() const
{
	std::map<std::pair<int, int>, int> g;
	for (auto& c : cells)
		if (c.rank())
			g[{c.x, c.y}] += int(c.rank());
	return g;
}

ChartSpec chart_from_page(const Page& pg, const std::string& title)
{
	ChartSpec c;
	c.title = title;
	c.axes = ChartAxes::Bidegree;
	c.window = pg.certified;
	c.xMin = pg.certified.aMin, c.xMax = pg.certified.aMax;
	c.yMin = pg.certified.bMin, c.yMax = pg.certified.bMax;
	for (auto& [d, cell] : pg.cells) {
		if (!pg.is_certified(d) || cell.rank() == 0)
			continue;
		ChartCell cc{d.V, d.m, d.f, d.V.a, d.V.b, {}};
		for (size_t i = 0; i < cell.rank(); ++i) {
			TriDegree md = pg.pres->degree(pg.class_term(d, i).mono);
			cc.classes.push_back({pg.class_name(d, i), md.m - md.V.a});
		}
		c.cells.push_back(std::move(cc));
	}
	return c;
}

ChartSpec chart_from_syntomic(const SyntomicResult& r)
{
	ChartSpec c;
	c.title = "syntomic " + spectrum_name(r.n);
	c.axes = ChartAxes::StemWeight;
	c.window = r.window;
	std::map<std::string, std::pair<int, int>> at;
	std::map<TriDegree, ChartCell> cells;
	c.xMin = c.yMin = 0;
	c.xMax = c.yMax = 0;
	for (auto& g : r.generators) {
		int x = g.degree.V.underlying(), y = g.weight();
		auto& cc = cells[g.degree];
		cc.V = g.degree.V, cc.m = g.degree.m, cc.f = g.degree.f, cc.x = x, cc.y = y;
		cc.classes.push_back({g.name, y});
		at[g.name] = {x, y};
		c.xMin = std::min(c.xMin, x - 1), c.xMax = std::max(c.xMax, x + 1);
		c.yMin = std::min(c.yMin, y - 1), c.yMax = std::max(c.yMax, y + 1);
		c.xlabels[x] = ro_label(g.degree.V);
	}
	for (auto& [_, cc] : cells)
		c.cells.push_back(std::move(cc));
	for (auto& e : r.edges) {
		auto a = at.find(e.from), b = at.find(e.to);
		if (a == at.end() || b == at.end())
			throw std::logic_error("edge " + e.from + " -> " + e.to + " names a missing generator");
		c.edges.push_back({e.from, e.to, e.kind, a->second.first, a->second.second, b->second.first, b->second.second});
	}
	return c;
}

ChartSpec chart_from_ranks(const RankTable& t, const std::string& title)
{
	ChartSpec c;
	c.title = title;
	bool first = true;
	for (auto& [d, n] : t) {
		if (!n)
			continue;
		ChartCell cc{d.V, d.m, d.f, d.V.a, d.V.b, {}};
		for (int i = 0; i < n; ++i)
			cc.classes.push_back({"", d.m - d.V.a});
		if (first)
			c.xMin = c.xMax = d.V.a, c.yMin = c.yMax = d.V.b, first = false;
		c.xMin = std::min(c.xMin, d.V.a), c.xMax = std::max(c.xMax, d.V.a);
		c.yMin = std::min(c.yMin, d.V.b), c.yMax = std::max(c.yMax, d.V.b);
		c.cells.push_back(std::move(cc));
	}
	return c;
}

nlohmann::json chart_to_json(const ChartSpec& c)
{
	nlohmann::json cells = nlohmann::json::array();
	for (auto& cc : c.cells) {
		nlohmann::json names = nlohmann::json::array(), layers = nlohmann::json::array();
		for (auto& k : cc.classes)
			names.push_back(k.name), layers.push_back(k.layer);
		cells.push_back({{"V", cc.V}, {"m", cc.m}, {"f", cc.f}, {"x", cc.x}, {"y", cc.y}, {"rank", cc.rank()},
						 {"names", names}, {"layers", layers}});
	}
	nlohmann::json edges = nlohmann::json::array();
	for (auto& e : c.edges)
		edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", e.kind}, {"x1", e.x1}, {"y1", e.y1}, {"x2", e.x2}, {"y2", e.y2}});
	nlohmann::json labels = nlohmann::json::object();
	for (auto& [x, s] : c.xlabels)
		labels[std::to_string(x)] = s;
	return {{"title", c.title},
			{"axes", c.axes == ChartAxes::Bidegree ? "bidegree" : "stem-weight"},
			{"window", c.window},
			{"range", {c.xMin, c.xMax, c.yMin, c.yMax}},
			{"cells", cells},
			{"edges", edges},
			{"xlabels", labels}};
}

ChartSpec chart_from_json(const nlohmann::json& j)
{
	ChartSpec c;
	c.title = j.value("title", "");
	c.axes = j.value("axes", "bidegree") == "bidegree" ? ChartAxes::Bidegree : ChartAxes::StemWeight;
	c.window = j.at("window").get<Window>();
	auto& r = j.at("range");
	c.xMin = r.at(0), c.xMax = r.at(1), c.yMin = r.at(2), c.yMax = r.at(3);
	for (auto& e : j.at("cells")) {
		ChartCell cc;
		cc.V = e.at("V").get<RODegree>();
		cc.m = e.at("m"), cc.f = e.at("f");
		cc.x = e.value("x", cc.V.a), cc.y = e.value("y", cc.V.b);
		auto names = e.at("names").get<std::vector<std::string>>();
		auto layers = e.value("layers", std::vector<int>(names.size(), 0));
		if (names.size() != e.at("rank").get<size_t>() || layers.size() != names.size())
			throw std::invalid_argument("chart cell rank does not match its names");
		for (size_t i = 0; i < names.size(); ++i)
			cc.classes.push_back({names[i], layers[i]});
		c.cells.push_back(std::move(cc));
	}
	for (auto& e : j.at("edges"))
		c.edges.push_back({e.at("from"), e.at("to"), e.at("kind"), e.at("x1"), e.at("y1"), e.at("x2"), e.at("y2")});
	if (j.contains("xlabels"))
		for (auto& [k, v] : j["xlabels"].items())
			c.xlabels[std::stoi(k)] = v.get<std::string>();
	return c;
}

static void check_size(const ChartSpec& c, size_t max_cells)
{
	long long w = c.xMax - c.xMin + 1, h = c.yMax - c.yMin + 1;
	if (w > 0 && h > 0 && size_t(w * h) > max_cells)
		throw WindowTooLarge("chart has " + std::to_string(w * h) + " cells, limit " + std::to_string(max_cells));
}

static char glyph(int layer)
{
	static const char g[] = "o*+#@";
	return layer >= 0 && layer < 5 ? g[layer] : '?';
}

std::string render_ascii(const ChartSpec& c, size_t max_cells)
{
	check_size(c, max_cells);
	std::map<std::pair<int, int>, std::string> at;
	size_t width = 1;
	for (auto& cc : c.cells)
		for (auto& k : cc.classes) {
			auto& s = at[{cc.x, cc.y}];
			s += glyph(k.layer);
			width = std::max(width, s.size());
		}
	std::ostringstream os;
	os << c.title << "\n";
	for (int y = c.yMax; y >= c.yMin; --y) {
		char buf[16];
		std::snprintf(buf, sizeof buf, "%4d |", y);
		os << buf;
		for (int x = c.xMin; x <= c.xMax; ++x) {
			auto it = at.find({x, y});
			std::string s = it == at.end() ? "." : it->second;
			os << ' ' << s << std::string(width - s.size(), ' ');
		}
		os << "\n";
	}
	os << "     +";
	for (int x = c.xMin; x <= c.xMax; ++x)
		os << std::string(width + 1, '-');
	os << "\n      ";
	for (int x = c.xMin; x <= c.xMax; ++x) {
		std::string s = std::to_string(x);
		if (s.size() > width + 1)
			s = s.substr(s.size() - width - 1);
		os << std::string(width + 1 - s.size(), ' ') << s;
	}
	os << "\n";
	return os.str();
}

namespace {

const char* layer_colour(int layer)
{
	switch (layer) {
	case 0: return "black";
	case 1: return "blue";
	case 2: return "orange";
	case 3: return "green";
	default: return "gray";
	}
}

std::string esc(const std::string& s)
{
	std::string o;
	for (char ch : s) {
		switch (ch) {
		case '&': o += "&amp;"; break;
		case '<': o += "&lt;"; break;
		case '>': o += "&gt;"; break;
		case '"': o += "&quot;"; break;
		default: o += ch;
		}
	}
	return o;
}

std::string num(double v)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.1f", v);
	return buf;
}

}  // namespace

std::string render_svg(const ChartSpec& c, size_t max_cells)
{
	check_size(c, max_cells);
	const double S = 32, M = 48;
	int w = std::max(0, c.xMax - c.xMin + 1), h = std::max(0, c.yMax - c.yMin + 1);
	double W = 2 * M + w * S, H = 2 * M + h * S;
	auto px = [&](double x) { return M + (x - c.xMin + 0.5) * S; };
	auto py = [&](double y) { return M + (c.yMax - y + 0.5) * S; };

	std::ostringstream os;
	os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
	os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(W) << "\" height=\"" << num(H)
	   << "\" viewBox=\"0 0 " << num(W) << " " << num(H) << "\">\n";
	os << "<title>" << esc(c.title) << "</title>\n";
	os << "<g class=\"grid\" stroke=\"lightgray\" stroke-width=\"0.5\">\n";
	for (int x = c.xMin; x <= c.xMax; ++x)
		os << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(M) << "\" x2=\"" << num(px(x)) << "\" y2=\"" << num(H - M) << "\"/>\n";
	for (int y = c.yMin; y <= c.yMax; ++y)
		os << "<line x1=\"" << num(M) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(W - M) << "\" y2=\"" << num(py(y)) << "\"/>\n";
	os << "</g>\n<g class=\"labels\" font-size=\"9\" font-family=\"sans-serif\" text-anchor=\"middle\">\n";
	for (int x = c.xMin; x <= c.xMax; ++x) {
		auto it = c.xlabels.find(x);
		std::string s = it != c.xlabels.end() ? it->second : c.axes == ChartAxes::Bidegree ? std::to_string(x) : "";
		if (!s.empty())
			os << "<text x=\"" << num(px(x)) << "\" y=\"" << num(H - M + 14) << "\">" << esc(s) << "</text>\n";
	}
	for (int y = c.yMin; y <= c.yMax; ++y)
		os << "<text x=\"" << num(M - 12) << "\" y=\"" << num(py(y) + 3) << "\">" << y << "</text>\n";
	os << "</g>\n";

	os << "<g class=\"edges\" stroke-width=\"1.2\">\n";
	for (auto& e : c.edges)
		os << "<line class=\"edge edge-" << esc(e.kind) << "\" stroke=\"" << (e.kind == "eta" ? "black" : "dimgray") << "\" x1=\""
		   << num(px(e.x1)) << "\" y1=\"" << num(py(e.y1)) << "\" x2=\"" << num(px(e.x2)) << "\" y2=\"" << num(py(e.y2))
		   << "\"><title>" << esc(e.kind + ": " + e.from + " -> " + e.to) << "</title></line>\n";
	os << "</g>\n<g class=\"bullets\">\n";

	/* classes sharing a grid point are spread horizontally inside the cell */
	std::map<std::pair<int, int>, int> count, seen;
	for (auto& cc : c.cells)
		count[{cc.x, cc.y}] += int(cc.rank());
	for (auto& cc : c.cells)
		for (auto& k : cc.classes) {
			int n = count[{cc.x, cc.y}], i = seen[{cc.x, cc.y}]++;
			double step = std::min(6.0, (S - 8) / std::max(1, n - 1));
			double dx = (i - (n - 1) / 2.0) * step;
			double dy = n > 5 ? ((i % 2) ? 3 : -3) : 0;
			os << "<circle class=\"bullet layer-" << k.layer << "\" cx=\"" << num(px(cc.x) + dx) << "\" cy=\""
			   << num(py(cc.y) + dy) << "\" r=\"2.5\" fill=\"" << layer_colour(k.layer) << "\"><title>"
			   << esc(k.name + " V=(" + std::to_string(cc.V.a) + "," + std::to_string(cc.V.b) + ") " + ro_label(cc.V) +
					  " m=" + std::to_string(cc.m) + " f=" + std::to_string(cc.f))
			   << "</title></circle>\n";
		}
	os << "</g>\n</svg>\n";
	return os.str();
}

}  // namespace rsyn
