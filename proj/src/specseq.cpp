#include "rsyn/specseq.hpp"

#include <algorithm>

namespace rsyn {

std::string rule_str(const DifferentialRule& r)
{
	std::string s = "d" + std::to_string(r.page) + "(" + r.source_gen;
	if (r.source_exp != 1)
		s += "^" + std::to_string(r.source_exp);
	s += ") = ";
	bool first = true;
	for (auto& t : r.target) {
		if (!first)
			s += " + ";
		first = false;
		std::string m;
		for (auto& [g, e] : t.mono)
			if (e)
				m += (m.empty() ? "" : "*") + g + (e == 1 ? "" : "^" + std::to_string(e));
		if (!t.x.is_one())
			m = t.x.str() + (m.empty() ? "" : "*" + m);
		s += m.empty() ? "1" : m;
	}
	return first ? s + "0" : s;
}

nlohmann::json rules_to_json(const std::vector<DifferentialRule>& rules)
{
	nlohmann::json a = nlohmann::json::array();
	for (auto& r : rules) {
		nlohmann::json tgt = nlohmann::json::array();
		for (auto& t : r.target)
			tgt.push_back({{"coef", t.x}, {"mono", t.mono}});
		nlohmann::json e{{"page", r.page}, {"source", {{r.source_gen, r.source_exp}}}, {"target", tgt}};
		if (!r.note.empty())
			e["note"] = r.note;
		a.push_back(e);
	}
	return a;
}

std::vector<DifferentialRule> rules_from_json(const nlohmann::json& j)
{
	std::vector<DifferentialRule> rules;
	for (auto& e : j) {
		DifferentialRule r;
		r.page = e.at("page").get<int>();
		if (r.page < 1)
			throw std::invalid_argument("rule page must be >= 1");
		auto& src = e.at("source");
		if (src.size() != 1)
			throw std::invalid_argument("rule sources must be a single generator power");
		r.source_gen = src.begin().key();
		r.source_exp = src.begin().value().get<int>();
		for (auto& t : e.at("target")) {
			RuleTerm rt;
			if (t.contains("coef"))
				rt.x = t["coef"].get<M2Basis>();
			rt.mono = t.at("mono").get<std::map<std::string, int>>();
			r.target.push_back(rt);
		}
		r.note = e.value("note", "");
		rules.push_back(std::move(r));
	}
	return rules;
}

std::vector<ResolvedRule> resolve_rules(const Presentation& p, const std::vector<DifferentialRule>& rules, int page)
{
	std::vector<ResolvedRule> out;
	for (auto& r : rules) {
		if (r.page != page)
			continue;
		ResolvedRule rr{r.page, p.index(r.source_gen), r.source_exp, {}};
		if (rr.c < 1)
			throw std::invalid_argument("rule source exponent must be positive");
		for (auto& t : r.target) {
			Mono m = p.unit();
			for (auto& [g, e] : t.mono)
				m[p.index(g)] += e;
			if (!p.killed(m))
				rr.target.add(Term{m, t.x});
		}
		TriDegree src = p.degree(p.gen_mono(r.source_gen, r.source_exp));
		TriDegree want = differential_target(src, r.page);
		for (auto& t : rr.target.terms)
			if (term_degree(p, t) != want)
				throw DegreeMismatch("rule " + rule_str(r) + ": target has degree " + to_string(term_degree(p, t)) +
									 ", expected " + to_string(want));
		out.push_back(std::move(rr));
	}
	return out;
}

Element apply_d(const Presentation& p, const std::vector<ResolvedRule>& rules, const Term& t)
{
	Element out;
	for (auto& r : rules) {
		int e = t.mono[r.gen];
		Term base = t;
		if (p.gens[r.gen].kind == GenKind::DividedPower) {
			/* d(gamma_k) = d(x) gamma_{k-1} */
			if (e < 1 || r.c != 1)
				continue;
			base.mono[r.gen] = e - 1;
		}
		else {
			/* t = (g^c)^q * rest with q odd contributes rest * (g^c)^{q-1} * d(g^c) */
			if (e % r.c != 0)
				continue;
			int q = e / r.c;
			if (q % 2 == 0)
				continue;
			base.mono[r.gen] = e - r.c;
		}
		for (auto& s : r.target.terms)
			if (auto z = mul(p, base, s))
				out.add(*z);
	}
	return out;
}

Element apply_d(const Presentation& p, const std::vector<ResolvedRule>& rules, const Element& e)
{
	Element out;
	for (auto& t : e.terms)
		out += apply_d(p, rules, t);
	return out;
}

int Cell::index_of(const Term& t) const
{
	auto it = std::lower_bound(basis.begin(), basis.end(), t);
	if (it == basis.end() || !(*it == t))
		return -1;
	return int(it - basis.begin());
}

static void rebuild_coord(Cell& c)
{
	size_t n = c.basis.size();
	c.coord = Echelon(n, c.reps.size());
	for (auto& [p, row] : c.bnd.rows())
		c.coord.insert(row.first, BitVec(c.reps.size()));
	for (size_t i = 0; i < c.reps.size(); ++i)
		if (!c.coord.insert(c.reps[i], BitVec::unit(c.reps.size(), i)))
			throw std::logic_error("class representatives are dependent modulo boundaries");
}

size_t Page::rank(const TriDegree& d) const
{
	auto it = cells.find(d);
	return it == cells.end() ? 0 : it->second.rank();
}

const Cell* Page::cell(const TriDegree& d) const
{
	auto it = cells.find(d);
	return it == cells.end() ? nullptr : &it->second;
}

const Term& Page::class_term(const TriDegree& d, size_t i) const
{
	const Cell& c = cells.at(d);
	return c.basis[c.reps.at(i).lowest()];
}

std::string Page::class_name(const TriDegree& d, size_t i) const
{
	const Cell& c = cells.at(d);
	const BitVec& v = c.reps.at(i);
	std::string s = term_str(*pres, c.basis[v.lowest()]);
	if (v.count() > 1)
		s += "+...";
	return s;
}

std::vector<std::string> Page::names(const TriDegree& d) const
{
	std::vector<std::string> out;
	for (size_t i = 0; i < rank(d); ++i)
		out.push_back(class_name(d, i));
	return out;
}

size_t Page::total_rank() const
{
	size_t n = 0;
	for (auto& [_, c] : cells)
		n += c.rank();
	return n;
}

BitVec Page::coordinates(const TriDegree& d, const BitVec& v) const
{
	const Cell& c = cells.at(d);
	auto red = c.coord.reduce(v);
	if (!red.rem.is_zero())
		throw NotACycle("vector in " + to_string(d) + " is not a cycle modulo boundaries on E" + std::to_string(r));
	return red.tag;
}

BitVec Page::e1_vector(const TriDegree& d, const Element& e) const
{
	const Cell& c = cells.at(d);
	BitVec v(c.basis.size());
	for (auto& t : e.terms) {
		int i = c.index_of(t);
		if (i < 0)
			throw std::logic_error("term " + term_str(*pres, t) + " not in cell " + to_string(d));
		v.flip(i);
	}
	return v;
}

Page init_page(const Presentation& p, const Window& w)
{
	return init_page(std::make_shared<const Presentation>(p), w);
}

Page init_page(std::shared_ptr<const Presentation> p, const Window& w)
{
	Page pg;
	pg.r = 1;
	pg.window = w;
	pg.certified = w;
	pg.pres = p;
	for (auto& [d, basis] : enumerate_window(*p, w)) {
		Cell c;
		c.basis = std::move(basis);
		size_t n = c.basis.size();
		c.bnd = Echelon(n, 0);
		for (size_t i = 0; i < n; ++i)
			c.reps.push_back(BitVec::unit(n, i));
		rebuild_coord(c);
		pg.cells.emplace(d, std::move(c));
	}
	return pg;
}

void apply_rules(Page& pg, const std::vector<DifferentialRule>& rules)
{
	const Presentation& p = *pg.pres;
	auto rr = resolve_rules(p, rules, pg.r);
	pg.has_rules = !rr.empty();
	bool nonzero = false;
	for (auto& [d, c] : pg.cells) {
		c.d.clear();
		TriDegree td = differential_target(d, pg.r);
		auto it = pg.cells.find(td);
		c.has_target = it != pg.cells.end();
		if (!c.has_target || rr.empty())
			continue;
		const Cell& tc = it->second;
		for (auto& rep : c.reps) {
			Element img;
			for (int i : rep.support())
				img += apply_d(p, rr, c.basis[i]);
			BitVec v(tc.basis.size());
			for (auto& t : img.terms) {
				int k = tc.index_of(t);
				if (k < 0)
					throw std::logic_error("differential leaves its target cell: " + term_str(p, t));
				v.flip(k);
			}
			auto red = tc.coord.reduce(v);
			if (!red.rem.is_zero())
				throw NotACycle("d" + std::to_string(pg.r) + " of a class in " + to_string(d) + " is not a cycle on this page");
			nonzero |= !red.tag.is_zero();
			c.d.push_back(std::move(red.tag));
		}
	}
	if (nonzero)
		pg.last_nonzero_page = pg.r;
}

void check_d_squared(const Page& pg)
{
	for (auto& [d, c] : pg.cells) {
		if (c.d.empty())
			continue;
		const Cell& tc = pg.cells.at(differential_target(d, pg.r));
		if (tc.d.empty())
			continue;
		for (size_t i = 0; i < c.d.size(); ++i) {
			BitVec dd(tc.d.empty() ? 0 : tc.d[0].size());
			for (int k : c.d[i].support())
				dd ^= tc.d[k];
			if (!dd.is_zero())
				throw DSquareNonzero("d^2 != 0 on E" + std::to_string(pg.r) + " at " + to_string(d), d);
		}
	}
}

Page turn_page(const Page& pg)
{
	check_d_squared(pg);
	Page nx;
	nx.r = pg.r + 1;
	nx.window = pg.window;
	nx.pres = pg.pres;
	nx.last_nonzero_page = pg.last_nonzero_page;
	nx.certified = pg.certified;
	if (pg.has_rules)
		nx.certified = pg.certified.padded(-1, -pg.r);

	for (auto& [d, c] : pg.cells) {
		size_t n = c.basis.size(), k = c.rank();
		Cell out;
		out.basis = c.basis;
		out.bnd = c.bnd;
		out.changed_at = c.changed_at;

		/* incoming boundaries */
		TriDegree sd = d;
		sd.V = sd.V + ONE;
		sd.f -= pg.r;
		auto sit = pg.cells.find(sd);
		bool changed = false;
		if (sit != pg.cells.end())
			for (auto& img : sit->second.d) {
				if (img.is_zero())
					continue;
				BitVec v(n);
				for (int i : img.support())
					v ^= c.reps[i];
				if (out.bnd.insert(v))
					changed = true;
			}

		/* cycles */
		std::vector<BitVec> cyc;
		if (c.d.empty()) {
			for (size_t i = 0; i < k; ++i)
				cyc.push_back(BitVec::unit(k, i));
		}
		else {
			size_t tdim = pg.cells.at(differential_target(d, pg.r)).rank();
			cyc = kernel(c.d, tdim);
			changed |= cyc.size() != k;
		}

		Echelon e = out.bnd;
		for (auto& z : cyc) {
			BitVec v(n);
			for (int i : z.support())
				v ^= c.reps[i];
			auto red = e.reduce(v);
			if (red.rem.is_zero())
				continue;
			e.insert(red.rem);
			out.reps.push_back(red.rem);
		}
		if (changed)
			out.changed_at = nx.r;
		rebuild_coord(out);
		nx.cells.emplace(d, std::move(out));
	}
	return nx;
}

Page run_to_stable(Page pg, const std::vector<DifferentialRule>& rules, int max_r, const std::function<void(const Page&)>& on_page)
{
	int top = 0;
	for (auto& r : rules)
		top = std::max(top, r.page);
	if (max_r < top)
		throw std::invalid_argument("max_r is below the largest rule page");
	while (pg.r <= max_r) {
		apply_rules(pg, rules);
		if (on_page)
			on_page(pg);
		pg = turn_page(pg);
	}
	if (on_page)
		on_page(pg);
	return pg;
}

TriDegree tbar_degree()
{
	return {-RHO, -1, 1};
}

Presentation build_bockstein(const Presentation& algebra, BocksteinMode mode, int k)
{
	if (algebra.find(TBAR) >= 0)
		throw NameClash("presentation already has a generator named tbar");
	Presentation p = algebra;
	GenKind kind = mode == BocksteinMode::Periodic ? GenKind::Laurent : GenKind::Polynomial;
	p.add_generator({TBAR, kind, tbar_degree(), "Bockstein parameter"});
	switch (mode) {
	case BocksteinMode::Bounded: p.name = algebra.name + "[tbar]"; break;
	case BocksteinMode::Periodic: p.name = algebra.name + "[tbar^+-1]"; break;
	case BocksteinMode::Approximate:
		if (k < 0)
			throw std::invalid_argument("truncation must be >= 0");
		p.name = algebra.name + "[tbar]/tbar^" + std::to_string(k + 1);
		p.relations.push_back(p.gen_mono(TBAR, k + 1));
		break;
	}
	return p;
}

nlohmann::json page_to_json(const Page& pg, bool certified_only)
{
	nlohmann::json cells = nlohmann::json::array();
	for (auto& [d, c] : pg.cells) {
		if (c.rank() == 0 || (certified_only && !pg.is_certified(d)))
			continue;
		cells.push_back({{"V", d.V}, {"m", d.m}, {"f", d.f}, {"rank", c.rank()}, {"names", pg.names(d)}});
	}
	return {{"page", pg.r}, {"window", certified_only ? pg.certified : pg.window}, {"cells", cells}, {"edges", nlohmann::json::array()}};
}

}  // namespace rsyn
