#include "rsyn/homalg.hpp"

#include <algorithm>

#include "rsyn/f2.hpp"

namespace rsyn {

static std::string strip_prefix(const std::string& s, const std::string& pre, const std::string& fallback)
{
	return s.rfind(pre, 0) == 0 && s.size() > pre.size() ? s.substr(pre.size()) : fallback + s;
}

Presentation tor_over_exterior(const std::vector<GeneratorSpec>& gens)
{
	Presentation p;
	p.name = "Tor_Lambda";
	for (auto& g : gens) {
		if (g.kind != GenKind::Exterior)
			throw std::invalid_argument("tor_over_exterior: '" + g.name + "' is not exterior");
		TriDegree d = g.degree;
		d.V += ONE;
		p.add_generator({"d" + g.name, GenKind::DividedPower, d, "suspension of " + g.name});
	}
	return p;
}

Presentation tor_over_polynomial(const std::vector<GeneratorSpec>& gens)
{
	Presentation p;
	p.name = "Tor_poly";
	for (auto& g : gens) {
		if (g.kind != GenKind::Polynomial)
			throw std::invalid_argument("tor_over_polynomial: '" + g.name + "' is not polynomial");
		TriDegree d = g.degree;
		d.V += ONE;
		p.add_generator({"sigma" + g.name, GenKind::Exterior, d, "suspension of " + g.name});
	}
	return p;
}

FactorKind parse_factor_kind(const std::string& s)
{
	if (s == "trivial") return FactorKind::Trivial;
	if (s == "primitive-exterior") return FactorKind::PrimitiveExterior;
	if (s == "polynomial-base") return FactorKind::PolynomialBase;
	throw UnknownFactorKind("unknown Hopf algebroid factor kind '" + s + "'");
}

Presentation cotor_factorized(const std::vector<HopfFactor>& factors)
{
	std::vector<GeneratorSpec> base, ext;
	for (auto& f : factors) {
		switch (f.kind) {
		case FactorKind::Trivial: break;
		case FactorKind::PolynomialBase:
			for (auto& g : f.gens)
				base.push_back(g);
			break;
		case FactorKind::PrimitiveExterior:
			/* Cotor over a primitively generated Gamma(dx) is Lambda on a class one stem lower */
			for (auto& g : f.gens) {
				TriDegree d = g.degree;
				d.V -= ONE;
				ext.push_back({strip_prefix(g.name, "d", "c_"), GenKind::Exterior, d, "desuspension of " + g.name});
			}
			break;
		default: throw UnknownFactorKind("unknown factor kind");
		}
	}
	Presentation p;
	p.name = "Cotor";
	for (auto& g : base)
		p.add_generator(g);
	for (auto& g : ext)
		p.add_generator(g);
	return p;
}

std::vector<HopfFactor> thr_factorization(int n)
{
	int N = 1 << (n + 1);
	std::vector<HopfFactor> fs;
	fs.push_back({FactorKind::Trivial, {}, "Gamma(dlambar'_i, dlambar''_j) part, trivial cohomology"});
	fs.push_back({FactorKind::Trivial, {}, "free part P, trivial cohomology"});
	HopfFactor ext{FactorKind::PrimitiveExterior, {}, "Gamma(dlambar_1..dlambar_{n+1})"};
	for (int i = 1; i <= n + 1; ++i) {
		int k = 1 << i;
		ext.gens.push_back({"dlambar" + std::to_string(i), GenKind::DividedPower, {RHO * k, k, 0}, "stem 2^i rho"});
	}
	if (!ext.gens.empty())
		fs.push_back(ext);
	fs.push_back({FactorKind::PolynomialBase,
				  {{"mubar" + std::to_string(N), GenKind::Polynomial, {RHO * N, N, 0}, "stem 2^(n+1) rho"}},
				  "F2[mubar^(2^(n+1))]"});
	return fs;
}

/* all monomials of p with 0 < underlying stem <= max_u (unit included) */
static std::vector<Mono> list_monomials(const Presentation& p, int max_u, size_t cap)
{
	for (auto& g : p.gens) {
		if (g.degree.V.underlying() <= 0)
			throw NonTerminating("generator '" + g.name + "' has non-positive underlying degree");
		if (g.kind == GenKind::Laurent)
			throw NonTerminating("laurent generator '" + g.name + "'");
	}
	std::vector<Mono> out;
	Mono cur = p.unit();
	std::function<void(size_t, int)> rec = [&](size_t i, int u) {
		if (i == p.gens.size()) {
			if (!p.killed(cur)) {
				out.push_back(cur);
				if (out.size() > cap)
					throw WindowTooLarge("more than " + std::to_string(cap) + " monomials");
			}
			return;
		}
		int du = p.gens[i].degree.V.underlying();
		int hi = p.gens[i].kind == GenKind::Exterior ? 1 : (max_u - u) / du;
		for (int e = 0; e <= hi && u + e * du <= max_u; ++e) {
			cur[i] = e;
			rec(i + 1, u + e * du);
		}
		cur[i] = 0;
	};
	rec(0, 0);
	return out;
}

RankTable monomial_ranks(const Presentation& p, int max_underlying, size_t cap)
{
	RankTable t;
	for (auto& m : list_monomials(p, max_underlying, cap))
		t[p.degree(m)]++;
	return t;
}

namespace {

/* homology of a graded F2 complex: cells[D] lists basis keys, d maps D to D - ONE */
template <class Key, class DiffFn>
RankTable homology(const std::map<TriDegree, std::vector<Key>>& cells, DiffFn d)
{
	std::map<TriDegree, size_t> rank_out;
	for (auto& [D, basis] : cells) {
		TriDegree T = D;
		T.V -= ONE;
		auto it = cells.find(T);
		if (it == cells.end()) {
			rank_out[D] = 0;
			continue;
		}
		const auto& tb = it->second;
		std::vector<BitVec> imgs;
		for (auto& k : basis) {
			BitVec v(tb.size());
			for (auto& img : d(k)) {
				auto pos = std::lower_bound(tb.begin(), tb.end(), img);
				if (pos == tb.end() || !(*pos == img))
					throw std::logic_error("differential leaves the complex");
				v.flip(pos - tb.begin());
			}
			imgs.push_back(v);
		}
		rank_out[D] = rank_of(imgs, tb.size());
	}
	RankTable h;
	for (auto& [D, basis] : cells) {
		TriDegree S = D;
		S.V += ONE;
		size_t in = 0;
		if (auto it = rank_out.find(S); it != rank_out.end())
			in = it->second;
		int r = int(basis.size() - rank_out[D] - in);
		if (r)
			h[D] = r;
	}
	return h;
}

}  // namespace

RankTable bar_tor_oracle(const std::vector<GeneratorSpec>& gens, int max_underlying, size_t cap)
{
	Presentation A;
	for (auto& g : gens) {
		if (g.kind != GenKind::Polynomial && g.kind != GenKind::Exterior)
			throw std::invalid_argument("bar oracle supports polynomial and exterior generators");
		A.add_generator(g);
	}
	std::vector<Mono> abar;
	for (auto& m : list_monomials(A, max_underlying, cap))
		if (m != A.unit())
			abar.push_back(m);
	std::sort(abar.begin(), abar.end());
	auto idx = [&](const Mono& m) { return int(std::lower_bound(abar.begin(), abar.end(), m) - abar.begin()); };

	/* a bar element [a1|...|as] is stored as its index sequence; the total degree carries s */
	using Tuple = std::vector<int>;
	std::map<TriDegree, std::vector<Tuple>> cells;
	size_t count = 0;
	Tuple cur;
	std::function<void(TriDegree, int)> rec = [&](TriDegree internal, int u) {
		TriDegree D = internal;
		D.V += ONE * int(cur.size());
		cells[D].push_back(cur);
		if (++count > cap)
			throw WindowTooLarge("bar complex exceeds " + std::to_string(cap) + " elements");
		for (size_t i = 0; i < abar.size(); ++i) {
			TriDegree da = A.degree(abar[i]);
			int du = da.V.underlying();
			if (u + du > max_underlying)
				continue;
			cur.push_back(int(i));
			rec(internal + da, u + du);
			cur.pop_back();
		}
	};
	rec(TriDegree{}, 0);
	for (auto& [_, v] : cells)
		std::sort(v.begin(), v.end());

	auto d = [&](const Tuple& t) {
		std::vector<Tuple> out;
		for (size_t i = 0; i + 1 < t.size(); ++i) {
			auto prod = A.mono_mul(abar[t[i]], abar[t[i + 1]]);
			if (!prod)
				continue;
			Tuple s(t.begin(), t.begin() + i);
			s.push_back(idx(*prod));
			s.insert(s.end(), t.begin() + i + 2, t.end());
			auto it = std::find(out.begin(), out.end(), s);
			if (it != out.end())
				out.erase(it);
			else
				out.push_back(s);
		}
		return out;
	};
	return homology(cells, d);
}

RankTable koszul_oracle(const KoszulInput& in, int max_underlying, size_t cap)
{
	Presentation K;
	for (auto& g : in.ring) {
		if (g.kind != GenKind::Polynomial)
			throw std::invalid_argument("Koszul ring generators must be polynomial");
		K.add_generator(g);
	}
	std::vector<std::pair<int, int>> ev; /* (exterior index, ring index) */
	for (auto& s : in.sequence) {
		int y = K.index(s);
		TriDegree d = K.gens[y].degree;
		d.V += ONE;
		K.add_generator({"e_" + s, GenKind::Exterior, d, ""});
		ev.push_back({int(K.gens.size()) - 1, y});
	}
	std::vector<int> killed;
	for (auto& s : in.kill)
		killed.push_back(K.index(s));
	auto dead = [&](const Mono& m) {
		return std::any_of(killed.begin(), killed.end(), [&](int i) { return m[i] > 0; });
	};
	std::map<TriDegree, std::vector<Mono>> cells;
	for (auto& m : list_monomials(K, max_underlying, cap))
		if (!dead(m))
			cells[K.degree(m)].push_back(m);
	for (auto& [_, v] : cells)
		std::sort(v.begin(), v.end());
	auto d = [&](const Mono& m) {
		std::vector<Mono> out;
		for (auto [e, y] : ev)
			if (m[e]) {
				Mono n = m;
				n[e] = 0;
				n[y] += 1;
				if (!dead(n))
					out.push_back(n);
			}
		return out;
	};
	/* the boundary of a top-degree element may leave the window; drop those cells */
	auto h = homology(cells, [&](const Mono& m) {
		std::vector<Mono> out;
		for (auto& n : d(m))
			if (K.degree(n).V.underlying() <= max_underlying)
				out.push_back(n);
		return out;
	});
	return h;
}

RankTable restrict_underlying(const RankTable& t, int max_underlying)
{
	RankTable r;
	for (auto& [d, n] : t)
		if (d.V.underlying() <= max_underlying && n)
			r[d] = n;
	return r;
}

RankTable convolve(const RankTable& a, const RankTable& b, int max_underlying)
{
	RankTable r;
	for (auto& [da, na] : a)
		for (auto& [db, nb] : b) {
			TriDegree d = da + db;
			if (d.V.underlying() <= max_underlying)
				r[d] += na * nb;
		}
	return r;
}

nlohmann::json rank_table_to_json(const RankTable& t)
{
	nlohmann::json cells = nlohmann::json::array();
	for (auto& [d, n] : t)
		cells.push_back({{"V", d.V}, {"m", d.m}, {"f", d.f}, {"rank", n}});
	return {{"cells", cells}};
}

}  // namespace rsyn
