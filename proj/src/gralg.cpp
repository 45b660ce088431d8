#include "rsyn/gralg.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rsyn {

const char* kind_name(GenKind k)
{
	switch (k) {
	case GenKind::Polynomial: return "polynomial";
	case GenKind::Exterior: return "exterior";
	case GenKind::DividedPower: return "dividedpower";
	case GenKind::Laurent: return "laurent";
	}
	return "?";
}

GenKind parse_kind(const std::string& s)
{
	if (s == "polynomial") return GenKind::Polynomial;
	if (s == "exterior") return GenKind::Exterior;
	if (s == "dividedpower") return GenKind::DividedPower;
	if (s == "laurent") return GenKind::Laurent;
	throw std::invalid_argument("unknown generator kind '" + s + "'");
}

int Presentation::find(const std::string& gen) const
{
	for (size_t i = 0; i < gens.size(); ++i)
		if (gens[i].name == gen)
			return int(i);
	return -1;
}

int Presentation::index(const std::string& gen) const
{
	int i = find(gen);
	if (i < 0)
		throw UnknownGenerator("unknown generator '" + gen + "'");
	return i;
}

Mono Presentation::gen_mono(const std::string& gen, int e) const
{
	Mono m = unit();
	m[index(gen)] = e;
	return m;
}

TriDegree Presentation::degree(const Mono& m) const
{
	TriDegree d;
	for (size_t i = 0; i < gens.size(); ++i)
		if (m[i])
			d += gens[i].degree * m[i];
	return d;
}

bool Presentation::killed(const Mono& m) const
{
	for (size_t i = 0; i < gens.size(); ++i) {
		if (gens[i].kind == GenKind::Exterior && (m[i] < 0 || m[i] > 1))
			return true;
		if (gens[i].kind != GenKind::Laurent && m[i] < 0)
			return true;
	}
	for (auto& r : relations) {
		bool divides = true;
		for (size_t i = 0; i < gens.size() && divides; ++i)
			if (r[i] > 0 && m[i] < r[i])
				divides = false;
		if (divides)
			return true;
	}
	return false;
}

std::optional<Mono> Presentation::mono_mul(const Mono& x, const Mono& y) const
{
	Mono z(gens.size());
	for (size_t i = 0; i < gens.size(); ++i) {
		if (gens[i].kind == GenKind::DividedPower && (x[i] & y[i]))
			return std::nullopt; /* binom(x+y, x) is even */
		z[i] = x[i] + y[i];
	}
	if (killed(z))
		return std::nullopt;
	return z;
}

std::string Presentation::mono_str(const Mono& m) const
{
	std::string s;
	for (size_t i = 0; i < gens.size(); ++i) {
		if (!m[i])
			continue;
		if (!s.empty())
			s += "*";
		s += gens[i].name;
		if (m[i] != 1)
			s += "^" + std::to_string(m[i]);
	}
	return s.empty() ? "1" : s;
}

Mono Presentation::parse_mono(const std::string& str) const
{
	Mono m = unit();
	std::string s;
	for (char c : str)
		if (!isspace((unsigned char)c))
			s += c;
	if (s.empty() || s == "1")
		return m;
	std::stringstream ss(s);
	std::string factor;
	while (std::getline(ss, factor, '*')) {
		auto caret = factor.find('^');
		std::string name = factor.substr(0, caret);
		int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
		m[index(name)] += e;
	}
	return m;
}

void Presentation::add_generator(GeneratorSpec g)
{
	if (find(g.name) >= 0)
		throw std::invalid_argument("duplicate generator '" + g.name + "'");
	gens.push_back(std::move(g));
	for (auto& r : relations)
		r.push_back(0);
}

std::string term_str(const Presentation& p, const Term& t)
{
	std::string ms = p.mono_str(t.mono);
	if (t.x.is_one())
		return ms;
	return ms == "1" ? t.x.str() : t.x.str() + "*" + ms;
}

TriDegree term_degree(const Presentation& p, const Term& t)
{
	TriDegree d = p.degree(t.mono);
	d.V += t.x.degree();
	return d;
}

void Element::add(const Term& t)
{
	auto it = std::lower_bound(terms.begin(), terms.end(), t);
	if (it != terms.end() && *it == t)
		terms.erase(it);
	else
		terms.insert(it, t);
}

Element& Element::operator+=(const Element& o)
{
	for (auto& t : o.terms)
		add(t);
	return *this;
}

std::optional<Term> mul(const Presentation& p, const Term& x, const Term& y)
{
	auto c = m2_mul(x.x, y.x);
	if (!c)
		return std::nullopt;
	auto m = p.mono_mul(x.mono, y.mono);
	if (!m)
		return std::nullopt;
	return Term{std::move(*m), *c};
}

Element mul(const Presentation& p, const Element& x, const Element& y)
{
	Element r;
	for (auto& s : x.terms)
		for (auto& t : y.terms)
			if (auto z = mul(p, s, t))
				r.add(*z);
	return r;
}

std::string element_str(const Presentation& p, const Element& e)
{
	if (e.terms.empty())
		return "0";
	std::string s;
	for (auto& t : e.terms)
		s += (s.empty() ? "" : " + ") + term_str(p, t);
	return s;
}

std::optional<TriDegree> element_degree(const Presentation& p, const Element& e)
{
	if (e.terms.empty())
		return std::nullopt;
	TriDegree d = term_degree(p, e.terms[0]);
	for (auto& t : e.terms)
		if (term_degree(p, t) != d)
			throw std::invalid_argument("inhomogeneous element " + element_str(p, e));
	return d;
}

void to_json(nlohmann::json& j, const Window& w)
{
	j = nlohmann::json{{"a", {w.aMin, w.aMax}}, {"b", {w.bMin, w.bMax}}, {"f", {w.fMin, w.fMax}}};
	if (w.m)
		j["m"] = {w.m->first, w.m->second};
	if (w.integral)
		j["integral"] = true;
}

void from_json(const nlohmann::json& j, Window& w)
{
	w.aMin = j.at("a").at(0), w.aMax = j.at("a").at(1);
	w.bMin = j.at("b").at(0), w.bMax = j.at("b").at(1);
	w.fMin = j.at("f").at(0), w.fMax = j.at("f").at(1);
	if (j.contains("m"))
		w.m = std::make_pair(j["m"].at(0).get<int>(), j["m"].at(1).get<int>());
	else
		w.m.reset();
	w.integral = j.value("integral", false);
}

/* ------------------------------------------------------------------ */
/* enumeration: interval propagation over the linear forms (a, a+b, f, m) */

namespace {

constexpr long long INF = 1LL << 40;

bool infinite(long long v)
{
	return v >= INF / 2 || v <= -INF / 2;
}

long long floor_div(long long a, long long b)
{
	long long q = a / b;
	if ((a % b != 0) && ((a < 0) != (b < 0)))
		--q;
	return q;
}

long long ceil_div(long long a, long long b)
{
	return -floor_div(-a, b);
}

struct Lin
{
	std::vector<long long> c;
	long long lo, hi; /* +-INF when absent */
};

struct Range
{
	long long lo, hi;
	bool lo_inf, hi_inf;
};

Range term_range(long long c, long long lo, long long hi)
{
	if (c == 0)
		return {0, 0, false, false};
	if (c > 0)
		return {c * (infinite(lo) ? 0 : lo), c * (infinite(hi) ? 0 : hi), infinite(lo), infinite(hi)};
	return {c * (infinite(hi) ? 0 : hi), c * (infinite(lo) ? 0 : lo), infinite(hi), infinite(lo)};
}

bool propagate(const std::vector<Lin>& cons, std::vector<long long>& lo, std::vector<long long>& hi)
{
	size_t n = lo.size();
	for (int iter = 0; iter < 64; ++iter) {
		bool changed = false;
		for (auto& L : cons) {
			for (size_t g = 0; g < n; ++g) {
				long long cg = L.c[g];
				if (!cg)
					continue;
				long long rmin = 0, rmax = 0;
				bool rmin_inf = false, rmax_inf = false;
				for (size_t h = 0; h < n; ++h) {
					if (h == g)
						continue;
					Range r = term_range(L.c[h], lo[h], hi[h]);
					rmin += r.lo, rmax += r.hi;
					rmin_inf |= r.lo_inf, rmax_inf |= r.hi_inf;
				}
				long long nlo = lo[g], nhi = hi[g];
				if (!infinite(L.hi) && !rmin_inf) {
					long long U = L.hi - rmin; /* cg*e <= U */
					if (cg > 0)
						nhi = std::min(nhi, floor_div(U, cg));
					else
						nlo = std::max(nlo, ceil_div(U, cg));
				}
				if (!infinite(L.lo) && !rmax_inf) {
					long long D = L.lo - rmax; /* cg*e >= D */
					if (cg > 0)
						nlo = std::max(nlo, ceil_div(D, cg));
					else
						nhi = std::min(nhi, floor_div(D, cg));
				}
				if (nlo > nhi)
					return false;
				if (nlo != lo[g] || nhi != hi[g]) {
					lo[g] = nlo, hi[g] = nhi;
					changed = true;
				}
			}
		}
		if (!changed)
			break;
	}
	return true;
}

struct Enumerator
{
	const Presentation& p;
	const Window& w;
	std::map<TriDegree, std::vector<Term>>& out;
	M2Basis::Cone cone;
	std::vector<Lin> cons;
	std::vector<long long> lo, hi;
	Mono cur;

	void leaf()
	{
		if (p.killed(cur))
			return;
		TriDegree S = p.degree(cur);
		if (S.f < w.fMin || S.f > w.fMax)
			return;
		if (w.m && (S.m < w.m->first || S.m > w.m->second))
			return;
		if (w.integral) {
			if (cone == M2Basis::Pos && w.contains_V(S.V))
				out[S].push_back(Term{cur, M2Basis::one()});
			return;
		}
		for (int a = w.aMin; a <= w.aMax; ++a)
			for (int b = w.bMin; b <= w.bMax; ++b) {
				RODegree V{a, b};
				auto x = m2_basis_at(V - S.V);
				if (x && x->cone == cone)
					out[{V, S.m, S.f}].push_back(Term{cur, *x});
			}
	}

	/* remaining-range feasibility of each constraint given a partial assignment */
	bool feasible(size_t depth, const std::vector<long long>& partial) const
	{
		for (size_t k = 0; k < cons.size(); ++k) {
			auto& L = cons[k];
			long long rmin = partial[k], rmax = partial[k];
			bool rmin_inf = false, rmax_inf = false;
			for (size_t h = depth; h < lo.size(); ++h) {
				Range r = term_range(L.c[h], lo[h], hi[h]);
				rmin += r.lo, rmax += r.hi;
				rmin_inf |= r.lo_inf, rmax_inf |= r.hi_inf;
			}
			if (!infinite(L.hi) && !rmin_inf && rmin > L.hi)
				return false;
			if (!infinite(L.lo) && !rmax_inf && rmax < L.lo)
				return false;
		}
		return true;
	}

	void dfs(size_t depth, std::vector<long long>& partial)
	{
		if (!feasible(depth, partial))
			return;
		if (depth == lo.size()) {
			leaf();
			return;
		}
		for (long long e = lo[depth]; e <= hi[depth]; ++e) {
			cur[depth] = int(e);
			for (size_t k = 0; k < cons.size(); ++k)
				partial[k] += cons[k].c[depth] * e;
			dfs(depth + 1, partial);
			for (size_t k = 0; k < cons.size(); ++k)
				partial[k] -= cons[k].c[depth] * e;
		}
		cur[depth] = 0;
	}
};

}  // namespace

std::map<TriDegree, std::vector<Term>> enumerate_window(const Presentation& p, const Window& w)
{
	std::map<TriDegree, std::vector<Term>> out;
	if (w.empty() || (w.m && w.m->first > w.m->second))
		return out;
	size_t n = p.gens.size();
	for (auto& g : p.gens)
		if (g.degree == TriDegree{})
			throw NonTerminating("generator '" + g.name + "' has zero tri-degree");

	std::vector<long long> lo0(n), hi0(n);
	for (size_t i = 0; i < n; ++i) {
		switch (p.gens[i].kind) {
		case GenKind::Exterior: lo0[i] = 0, hi0[i] = 1; break;
		case GenKind::Laurent: lo0[i] = -INF, hi0[i] = INF; break;
		default: lo0[i] = 0, hi0[i] = INF;
		}
	}
	/* pure powers among the relations truncate a generator */
	for (auto& r : p.relations) {
		int nz = 0, gi = -1;
		for (size_t i = 0; i < n; ++i)
			if (r[i])
				++nz, gi = int(i);
		if (nz == 1 && p.gens[gi].kind != GenKind::Laurent)
			hi0[gi] = std::min<long long>(hi0[gi], r[gi] - 1);
		if (nz == 0)
			return out; /* 1 = 0 */
	}

	Lin A, D, F, M;
	for (auto* L : {&A, &D, &F, &M})
		L->c.resize(n);
	for (size_t i = 0; i < n; ++i) {
		auto& d = p.gens[i].degree;
		A.c[i] = d.V.a, D.c[i] = d.V.a + d.V.b, F.c[i] = d.f, M.c[i] = d.m;
	}
	F.lo = w.fMin, F.hi = w.fMax;
	M.lo = w.m ? w.m->first : -INF, M.hi = w.m ? w.m->second : INF;

	for (auto cone : {M2Basis::Pos, M2Basis::Neg}) {
		/* positive cone: x_a >= 0, x_d <= 0. negative cone: x_a <= -2, x_d >= 0 */
		if (cone == M2Basis::Pos) {
			A.lo = -INF, A.hi = w.aMax;
			D.lo = w.aMin + w.bMin, D.hi = INF;
		}
		else {
			A.lo = w.aMin + 2, A.hi = INF;
			D.lo = -INF, D.hi = w.aMax + w.bMax;
		}
		Enumerator e{p, w, out, cone, {A, D, F, M}, lo0, hi0, p.unit()};
		if (!propagate(e.cons, e.lo, e.hi))
			continue;
		for (size_t i = 0; i < n; ++i)
			if (infinite(e.lo[i]) || infinite(e.hi[i]))
				throw NonTerminating("exponent of '" + p.gens[i].name + "' is unbounded in the window");
		std::vector<long long> partial(e.cons.size(), 0);
		e.dfs(0, partial);
	}
	for (auto& [_, v] : out)
		std::sort(v.begin(), v.end());
	return out;
}

std::vector<Term> basis_in_degree(const Presentation& p, const TriDegree& d, const Window& w)
{
	if (!w.contains(d))
		return {};
	return basis_in_degree(p, d);
}

std::vector<Term> basis_in_degree(const Presentation& p, const TriDegree& d)
{
	auto cells = enumerate_window(p, Window::exact(d));
	auto it = cells.find(d);
	return it == cells.end() ? std::vector<Term>{} : it->second;
}

Presentation localize(const Presentation& p, const std::string& g)
{
	int i = p.index(g);
	Presentation q = p;
	if (p.gens[i].kind == GenKind::Laurent)
		return q;
	if (p.gens[i].kind != GenKind::Polynomial)
		throw std::invalid_argument("can only localize at a polynomial generator, '" + g + "' is " + kind_name(p.gens[i].kind));
	q.gens[i].kind = GenKind::Laurent;
	/* g invertible: a relation g^k*r = 0 becomes r = 0 */
	std::set<Mono> rels;
	for (auto r : q.relations) {
		r[i] = 0;
		rels.insert(r);
	}
	q.relations.assign(rels.begin(), rels.end());
	return q;
}

Presentation quotient_adjoin(const Presentation& p, const std::string& v, std::string new_name)
{
	int i = p.index(v);
	if (p.gens[i].kind != GenKind::Polynomial)
		throw std::invalid_argument("'" + v + "' is not a polynomial generator");
	if (new_name.empty())
		new_name = v.rfind("vbar", 0) == 0 ? "epsbar" + v.substr(4) : "eps_" + v;
	Presentation q;
	q.name = p.name + "/" + v;
	for (size_t k = 0; k < p.gens.size(); ++k)
		if (int(k) != i)
			q.gens.push_back(p.gens[k]);
	for (auto& r : p.relations) {
		if (r[i])
			continue; /* v acts by zero, the relation is vacuous */
		Mono s;
		for (size_t k = 0; k < r.size(); ++k)
			if (int(k) != i)
				s.push_back(r[k]);
		q.relations.push_back(s);
	}
	const TriDegree& dv = p.gens[i].degree;
	/* stem(v) + 1, Adams weight -1 */
	TriDegree de{dv.V + ONE, dv.V.b, dv.f};
	q.add_generator({new_name, GenKind::Exterior, de, "adjoined for the quotient by " + v});
	return q;
}

nlohmann::json presentation_to_json(const Presentation& p)
{
	nlohmann::json g = nlohmann::json::array();
	for (auto& s : p.gens) {
		nlohmann::json e{{"name", s.name}, {"kind", kind_name(s.kind)}, {"V", s.degree.V}, {"m", s.degree.m}, {"f", s.degree.f}};
		if (!s.note.empty())
			e["note"] = s.note;
		g.push_back(e);
	}
	nlohmann::json r = nlohmann::json::array();
	for (auto& m : p.relations)
		r.push_back(p.mono_str(m));
	return {{"name", p.name}, {"generators", g}, {"relations", r}};
}

Presentation presentation_from_json(const nlohmann::json& j)
{
	Presentation p;
	p.name = j.value("name", "");
	for (auto& g : j.at("generators")) {
		GeneratorSpec s;
		s.name = g.at("name").get<std::string>();
		s.kind = parse_kind(g.at("kind").get<std::string>());
		s.degree = {g.at("V").get<RODegree>(), g.at("m").get<int>(), g.value("f", 0)};
		s.note = g.value("note", "");
		p.add_generator(std::move(s));
	}
	if (j.contains("relations"))
		for (auto& r : j["relations"])
			p.relations.push_back(p.parse_mono(r.get<std::string>()));
	return p;
}

Presentation load_presentation(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	return presentation_from_json(nlohmann::json::parse(in));
}

}  // namespace rsyn
