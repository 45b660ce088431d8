#include "rsyn/syntomic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rsyn/fgl2.hpp"

namespace rsyn {

namespace {

int big_n(int n) { return 1 << (n + 1); }
std::string mu_name(int n) { return "mubar" + std::to_string(big_n(n)); }
std::string lam_name(int i) { return "lambar" + std::to_string(i); }
std::string eps_name(int n) { return "epsbar" + std::to_string(n + 1); }

void check_n(int n)
{
	if (n < -1 || n > 2)
		throw std::out_of_range("n must lie in -1..2, got " + std::to_string(n));
}

/* stems of all products of distinct lambar_1..lambar_{n+1} */
std::vector<RODegree> lambda_subset_stems(int n)
{
	std::vector<RODegree> out;
	int k = n + 1;
	for (int s = 0; s < (1 << k); ++s) {
		RODegree V;
		for (int i = 1; i <= k; ++i)
			if (s >> (i - 1) & 1)
				V += RODegree{(1 << i) - 1, 1 << i};
		out.push_back(V);
	}
	return out;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

int spectrum_n(const std::string& s)
{
	if (s == "f2") return -1;
	if (s == "z2") return 0;
	if (s == "kr") return 1;
	if (s == "tmf13") return 2;
	throw std::invalid_argument("unknown spectrum '" + s + "' (expected f2, z2, kr, tmf13)");
}

std::string spectrum_name(int n)
{
	check_n(n);
	static const char* names[] = {"f2", "z2", "kr", "tmf13"};
	return names[n + 1];
}

Presentation thr_presentation(int n)
{
	check_n(n);
	int N = big_n(n);
	Presentation p;
	p.name = "grTHR(" + spectrum_name(n) + ")/(v0..v" + std::to_string(n) + ")";
	p.add_generator({mu_name(n), GenKind::Polynomial, {RHO * N, N, 0}, "stem N rho, weight 0"});
	for (int i = 1; i <= n + 1; ++i)
		p.add_generator(named_generator(lam_name(i)));
	return p;
}

Presentation thr_with_vbar(int n)
{
	Presentation p = thr_presentation(n);
	auto v = named_generator("vbar" + std::to_string(n + 1));
	v.note = "acts by zero";
	p.add_generator(v);
	return p;
}

Presentation thr_mod_presentation(int n)
{
	Presentation q = quotient_adjoin(thr_with_vbar(n), "vbar" + std::to_string(n + 1));
	q.name = thr_presentation(n).name + "/v" + std::to_string(n + 1);
	return q;
}

std::vector<GeneratorSpec> generator_table()
{
	std::vector<GeneratorSpec> t;
	t.push_back({"tbar", GenKind::Polynomial, tbar_degree(), "Bockstein parameter, (-rho, 0, 1)"});
	for (int n = -1; n <= 2; ++n) {
		int N = big_n(n);
		t.push_back({"mubar" + std::to_string(N), GenKind::Polynomial, {RHO * N, N, 0}, "stem N rho, weight 0"});
	}
	for (int i = 1; i <= 3; ++i) {
		int k = 1 << i;
		t.push_back({lam_name(i), GenKind::Exterior, {{k - 1, k}, k, 0}, "stem 2^i rho - 1, weight 1"});
	}
	for (int i = 1; i <= 3; ++i)
		t.push_back({"lambarprime" + std::to_string(i), GenKind::Exterior, {{i, i + 1}, i + 1, 0}, "stem i rho + sigma"});
	for (int i = 0; i <= 3; ++i) {
		int k = 1 << i;
		t.push_back({"vbar" + std::to_string(i), GenKind::Polynomial, {{k - 1, k - 1}, k - 1, 0}, "stem (2^i - 1) rho"});
	}
	for (int i = 0; i <= 3; ++i) {
		int k = 1 << i;
		t.push_back({"epsbar" + std::to_string(i), GenKind::Exterior, {{k, k - 1}, k - 1, 0}, "stem (2^i - 1) rho + 1, weight -1"});
	}
	t.push_back({"del", GenKind::Exterior, {{-1, 0}, 0, 0}, "stem -1, weight 1"});
	for (int j = 1; j <= 3; ++j) {
		int h = 1 << (j - 1), k = 1 << j;
		TriDegree d = tbar_degree() * h + TriDegree{{k - 1, k}, k, 0};
		t.push_back({"Xibar" + std::to_string(j), GenKind::Exterior, d, "tri-degree of tbar^(2^(j-1)) lambar_j"});
	}
	return t;
}

const GeneratorSpec& named_generator(const std::string& name)
{
	static const std::vector<GeneratorSpec> table = generator_table();
	for (auto& g : table)
		if (g.name == name)
			return g;
	throw UnknownGenerator("no generator named '" + name + "' in the table");
}

int last_seeded_page(int n)
{
	check_n(n);
	return big_n(n);
}

Window einf_window(int n, int aMin, int aMax, int bMin, int bMax, bool periodic, bool integral)
{
	check_n(n);
	Window w{aMin, aMax, bMin, bMax, 0, 0, std::nullopt, integral};
	int dMin = aMin + bMin, dMax = aMax + bMax;
	int lo = 0, hi = std::max(0, (1 << std::max(n, 0)) * (n >= 0 ? 1 : 0));
	/* E_infty is spanned by x * tbar^j * y with x in M2 and y a product of lambars */
	for (auto y : lambda_subset_stems(n)) {
		int ay = y.a, dy = y.underlying();
		if (integral) {
			lo = std::min(lo, ay - aMax);
			hi = std::max(hi, ay - aMin);
		}
		else {
			lo = std::min({lo, ay - aMax, floor_div(dy - dMax, 2)});
			hi = std::max({hi, ceil_div(dy - dMin, 2), ay - aMin - 2});
		}
	}
	w.fMin = periodic ? lo : 0;
	w.fMax = hi;
	return w;
}

Window e1_window(int n, const Window& w)
{
	int pages = n + 2;
	int reach = 2 * big_n(n) - 1;
	return w.padded(pages, reach);
}

static bool covers(const Window& big, const Window& w)
{
	return big.aMin <= w.aMin && big.aMax >= w.aMax && big.bMin <= w.bMin && big.bMax >= w.bMax && big.fMin <= w.fMin &&
		   big.fMax >= w.fMax;
}

BocksteinRun run_bockstein(int n, BocksteinMode mode, const Window& einf, const std::vector<DifferentialRule>& rules,
						   bool keep_pages)
{
	auto p = std::make_shared<const Presentation>(build_bockstein(thr_mod_presentation(n), mode));
	Page pg = init_page(p, e1_window(n, einf));
	int top = last_seeded_page(n);
	for (auto& r : rules)
		top = std::max(top, r.page);
	BocksteinRun run;
	run.einf = run_to_stable(std::move(pg), rules, top, [&](const Page& x) {
		if (keep_pages)
			run.pages.push_back(x);
	});
	if (!covers(run.einf.certified, einf))
		throw std::logic_error("certified window does not cover the requested E_infty window");
	run.einf.certified = einf;
	run.stable_page = run.einf.stable_page();
	return run;
}

BocksteinRun run_bockstein(int n, BocksteinMode mode, const Window& einf, bool keep_pages)
{
	return run_bockstein(n, mode, einf, fgl::differential_seeds(n), keep_pages);
}

const char* block_name(Block b)
{
	switch (b) {
	case Block::A00: return "A00";
	case Block::A01: return "A01";
	case Block::A10: return "A10";
	case Block::A11: return "A11";
	}
	return "?";
}

Block classify(const Presentation& p, const Mono& m, int n)
{
	int N = big_n(n);
	int t = p.index(TBAR), mu = p.index(mu_name(n)), eps = p.find(eps_name(n));
	int te = m[t], me = m[mu];
	auto fail = [&](const char* why) { return UnclassifiedClass("class " + p.mono_str(m) + " " + why); };
	if (eps >= 0 && m[eps])
		throw fail("still contains epsbar");
	if (te < 0)
		throw fail("has a negative tbar power");
	if (te > 0 && me > 0)
		throw fail("mixes tbar and mubar");
	if (me > 0)
		return Block::A01;
	if (te == 0)
		return Block::A00;
	if (te % N == 0)
		return Block::A10;
	for (int i = 1; i <= n + 1; ++i)
		if (te == 1 << (i - 1) && m[p.index(lam_name(i))])
			return Block::A11;
	throw fail("fits no Nygaard block");
}

NygaardDecomposition decompose(const Page& pg, int n)
{
	NygaardDecomposition d;
	d.n = n;
	d.page = &pg;
	const Presentation& p = *pg.pres;
	for (auto& [deg, c] : pg.cells) {
		if (!pg.is_certified(deg))
			continue;
		for (size_t i = 0; i < c.rank(); ++i) {
			std::optional<Block> b;
			for (int k : c.reps[i].support()) {
				Block bk = classify(p, c.basis[k].mono, n);
				if (b && *b != bk)
					throw UnclassifiedClass("class " + pg.class_name(deg, i) + " straddles two blocks");
				b = bk;
			}
			d.blocks[*b].push_back({deg, i, pg.class_name(deg, i)});
			d.block_of[{deg, i}] = *b;
		}
	}
	return d;
}

BlockMap can_map(const NygaardDecomposition&)
{
	return {"can", {BlockAction::Identity, BlockAction::Zero, BlockAction::Identity, BlockAction::Zero}};
}

BlockMap frobenius_map(const NygaardDecomposition&)
{
	return {"phi", {BlockAction::Identity, BlockAction::InvertMu, BlockAction::Zero, BlockAction::Zero}};
}

std::optional<Term> apply_block_map(const BlockMap& f, Block b, const Term& t, const Presentation& src,
									const Presentation& tgt, int n)
{
	Term out{tgt.unit(), t.x};
	for (size_t k = 0; k < src.gens.size(); ++k)
		out.mono[tgt.index(src.gens[k].name)] = t.mono[k];
	switch (f.on(b)) {
	case BlockAction::Zero: return std::nullopt;
	case BlockAction::Identity: return out;
	case BlockAction::InvertMu: {
		/* mubar^N -> tbar^-N up to a unit */
		int mu = tgt.index(mu_name(n)), tb = tgt.index(TBAR);
		out.mono[tb] -= big_n(n) * out.mono[mu];
		out.mono[mu] = 0;
		if (tgt.killed(out.mono))
			return std::nullopt;
		return out;
	}
	}
	return std::nullopt;
}

size_t EqualizerResult::kernel_rank() const
{
	size_t k = 0;
	for (auto& [_, c] : cells)
		k += c.kernel.size();
	return k;
}

size_t EqualizerResult::cokernel_rank() const
{
	size_t k = 0;
	for (auto& [_, c] : cells)
		k += c.cokernel.size();
	return k;
}

EqualizerResult equalizer(const NygaardDecomposition& dec, const BlockMap& canm, const BlockMap& phim, const Page& tp)
{
	const Page& tc = *dec.page;
	const Presentation& sp = *tc.pres;
	const Presentation& tpp = *tp.pres;
	using Key = std::pair<RODegree, int>;
	std::map<Key, std::vector<std::pair<TriDegree, size_t>>> src, tgt;
	for (auto& [ref, _] : dec.block_of)
		src[{ref.first.V, ref.first.m}].push_back(ref);
	for (auto& [d, c] : tp.cells)
		if (tp.is_certified(d))
			for (size_t i = 0; i < c.rank(); ++i)
				tgt[{d.V, d.m}].push_back({d, i});
	std::set<Key> keys;
	for (auto& [k, _] : src)
		keys.insert(k);
	for (auto& [k, _] : tgt)
		keys.insert(k);

	EqualizerResult res;
	for (auto& key : keys) {
		auto& S = src[key];
		auto& T = tgt[key];
		std::map<TriDegree, size_t> offset; /* first coordinate of each target cell in the group */
		for (size_t j = 0; j < T.size(); ++j)
			if (!offset.count(T[j].first))
				offset[T[j].first] = j;

		std::vector<BitVec> images;
		for (auto& [d, i] : S) {
			Block b = dec.block_of.at({d, i});
			const Cell& c = tc.cells.at(d);
			std::map<TriDegree, Element> img;
			for (int k : c.reps[i].support())
				for (auto* f : {&canm, &phim})
					if (auto t = apply_block_map(*f, b, c.basis[k], sp, tpp, dec.n))
						img[term_degree(tpp, *t)].add(*t);
			BitVec v(T.size());
			for (auto& [td, e] : img) {
				if (e.is_zero())
					continue;
				auto it = offset.find(td);
				if (it == offset.end() || !tp.is_certified(td))
					throw std::logic_error("image of " + tc.class_name(d, i) + " leaves the periodic window at " + to_string(td));
				BitVec coords = tp.coordinates(td, tp.e1_vector(td, e));
				for (int q : coords.support())
					v.flip(it->second + q);
			}
			images.push_back(std::move(v));
		}

		EqualizerCell cell;
		cell.V = key.first;
		cell.m = key.second;
		cell.source_rank = S.size();
		cell.target_rank = T.size();
		cell.image_rank = rank_of(images, T.size());
		for (auto& z : kernel(images, T.size())) {
			auto sup = z.support();
			EqualizerClass k;
			k.d = S[sup.front()].first;
			k.block = dec.block_of.at(S[sup.front()]);
			for (int s : sup)
				k.terms.push_back(tc.class_name(S[s].first, S[s].second));
			std::ostringstream os;
			for (size_t q = 0; q < k.terms.size(); ++q)
				os << (q ? " + " : "") << k.terms[q];
			k.name = os.str();
			cell.kernel.push_back(std::move(k));
		}
		Echelon im(T.size(), 0);
		for (auto& v : images)
			im.insert(v);
		for (size_t j = 0; j < T.size(); ++j) {
			BitVec e = BitVec::unit(T.size(), j);
			if (!im.insert(e))
				continue;
			EqualizerClass k;
			k.d = T[j].first;
			k.name = tp.class_name(T[j].first, T[j].second);
			k.terms = {k.name};
			cell.cokernel.push_back(std::move(k));
		}
		if (cell.kernel.size() + cell.image_rank != cell.source_rank ||
			cell.cokernel.size() + cell.image_rank != cell.target_rank)
			throw std::logic_error("rank identity fails at " + to_string(key.first));
		if (cell.source_rank || cell.target_rank)
			res.cells.emplace(key, std::move(cell));
	}
	return res;
}

std::string syntomic_name(const std::string& raw, int n)
{
	if (raw == "1")
		return raw;
	std::vector<std::pair<std::string, int>> f;
	std::stringstream ss(raw);
	std::string tok;
	while (std::getline(ss, tok, '*')) {
		auto c = tok.find('^');
		f.push_back({tok.substr(0, c), c == std::string::npos ? 1 : std::stoi(tok.substr(c + 1))});
	}
	int te = 0;
	for (auto& [g, e] : f)
		if (g == TBAR)
			te = e;
	if (te > 0)
		for (int j = 1; j <= n + 1; ++j) {
			if (te != 1 << (j - 1))
				continue;
			auto it = std::find_if(f.begin(), f.end(), [&](auto& x) { return x.first == lam_name(j); });
			if (it == f.end())
				continue;
			it->first = "Xibar" + std::to_string(j);
			std::erase_if(f, [](auto& x) { return x.first == TBAR; });
			break;
		}
	std::string s;
	for (auto& [g, e] : f)
		s += (s.empty() ? "" : "*") + g + (e == 1 ? "" : "^" + std::to_string(e));
	return s;
}

std::vector<ChartEdge> configured_edges(int n)
{
	const std::string prov = "configured chart data, not computed";
	switch (n) {
	case -1: return {{"1", "del", "del", prov}};
	case 0:
		return {{"1", "Xibar1", "eta", prov},
				{"Xibar1", "del*lambar1", "eta", prov + "; eta times Xibar1 is detected by del*lambar1"},
				{"1", "del", "del", prov},
				{"lambar1", "del*lambar1", "del", prov}};
	default: return {};
	}
}

SyntomicResult assemble_syntomic(int n)
{
	return assemble_syntomic(n, fgl::differential_seeds(n));
}

SyntomicResult assemble_syntomic(int n, const std::vector<DifferentialRule>& rules)
{
	check_n(n);
	/* every generator lives in the box spanned by the lambar stems; a margin shows nothing else appears nearby */
	int A = 0, B = 0;
	for (int i = 1; i <= n + 1; ++i)
		A += (1 << i) - 1, B += 1 << i;
	const int margin = 2;
	int aMin = -margin, aMax = A + margin, bMin = -margin, bMax = B + margin;
	Window wc = einf_window(n, aMin, aMax, bMin, bMax, false, true);
	Window wp = einf_window(n, aMin, aMax, bMin, bMax, true, true);
	auto tcm = run_bockstein(n, BocksteinMode::Bounded, wc, rules);
	auto tpr = run_bockstein(n, BocksteinMode::Periodic, wp, rules);

	SyntomicResult r;
	r.n = n;
	r.window = wc;
	r.polynomial_over = n >= 0 ? "vbar" + std::to_string(n + 1) : "";
	auto dec = decompose(tcm.einf, n);
	for (auto b : {Block::A00, Block::A01, Block::A10, Block::A11})
		r.block_sizes[b] = dec.size(b);
	r.eq = equalizer(dec, can_map(dec), frobenius_map(dec), tpr.einf);

	auto add = [&](std::string name, TriDegree d, std::string block) {
		if (name.find('+') != std::string::npos)
			throw std::logic_error("syntomic generator is not a single monomial: " + name);
		r.generators.push_back({std::move(name), d, std::move(block)});
	};
	for (auto& [key, c] : r.eq.cells) {
		for (auto& k : c.kernel)
			add(syntomic_name(k.name, n), k.d, block_name(k.block));
		for (auto& k : c.cokernel) {
			TriDegree d = k.d;
			d.V -= ONE;
			std::string base = syntomic_name(k.name, n);
			add(base == "1" ? "del" : "del*" + base, d, "del*A00");
		}
	}
	for (auto& g : r.generators)
		r.ranks[{g.degree.V.underlying(), g.weight()}]++;
	r.edges = configured_edges(n);
	r.notes.push_back("E_infty pages assume no differentials beyond the seeded ones");
	if (n >= 0)
		r.notes.push_back("vbar" + std::to_string(n + 1) + "-Bockstein assumed to collapse; generators are over M2[vbar" +
						  std::to_string(n + 1) + "]");
	if (n >= 1)
		r.notes.push_back("blocks use <lambar_1..lambar_{n+1}> uniformly");
	r.blocks_tcm = dec;
	r.blocks_tcm.page = nullptr;
	return r;
}

nlohmann::json syntomic_to_json(const SyntomicResult& r)
{
	nlohmann::json gens = nlohmann::json::array();
	for (auto& g : r.generators)
		gens.push_back({{"name", g.name},
						{"stem", g.degree.V},
						{"stem_label", ro_label(g.degree.V)},
						{"weight", g.weight()},
						{"m", g.degree.m},
						{"f", g.degree.f},
						{"block", g.block}});
	nlohmann::json edges = nlohmann::json::array();
	for (auto& e : r.edges)
		edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", e.kind}, {"provenance", e.provenance}});
	nlohmann::json blocks;
	for (auto& [b, k] : r.block_sizes)
		blocks[block_name(b)] = k;
	return {{"n", r.n},
			{"window", r.window},
			{"polynomial_over", r.polynomial_over},
			{"generators", gens},
			{"edges", edges},
			{"blocks", blocks},
			{"kernel_rank", r.eq.kernel_rank()},
			{"cokernel_rank", r.eq.cokernel_rank()},
			{"notes", r.notes}};
}

std::map<int, int> underlying_collapse(const Page& pg)
{
	std::map<int, std::set<Mono>> seen;
	for (auto& [d, c] : pg.cells) {
		if (!pg.is_certified(d))
			continue;
		for (size_t i = 0; i < c.rank(); ++i) {
			const Term& t = pg.class_term(d, i);
			if (m2_restricts_to_unit(t.x))
				seen[d.V.underlying()].insert(t.mono);
		}
	}
	std::map<int, int> out;
	for (auto& [u, s] : seen)
		out[u] = int(s.size());
	return out;
}

}  // namespace rsyn
