#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "rsyn/chart.hpp"
#include "rsyn/fgl2.hpp"
#include "rsyn/homalg.hpp"
#include "rsyn/syntomic.hpp"

using namespace rsyn;

namespace {

constexpr int EXIT_COMPUTE = 1, EXIT_MISMATCH = 2, EXIT_USAGE = 64;

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct Box
{
	int aMin, aMax, bMin, bMax;
};

Box parse_window(const std::string& s)
{
	static const std::regex re(R"(^\s*(-?\d+):(-?\d+),(-?\d+):(-?\d+)\s*$)");
	std::smatch m;
	if (!std::regex_match(s, m, re))
		throw UsageError("--window expects aMin:aMax,bMin:bMax, got '" + s + "'");
	Box b{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])};
	if (b.aMin > b.aMax || b.bMin > b.bMax)
		throw UsageError("--window has an empty range");
	return b;
}

std::vector<std::string> split(const std::string& s)
{
	std::vector<std::string> out;
	std::stringstream ss(s);
	std::string t;
	while (std::getline(ss, t, ','))
		if (!t.empty())
			out.push_back(t);
	return out;
}

/* 0: mod (v0..vn), 1: mod (v0..v_{n+1}) */
int parse_mod(const std::string& s, int n)
{
	if (s == "auto")
		return -1;
	auto parts = split(s);
	for (size_t i = 0; i < parts.size(); ++i)
		if (parts[i] != "v" + std::to_string(i))
			throw std::invalid_argument("--mod must list v0,v1,... in order, got '" + s + "'");
	int top = int(parts.size()) - 1;
	if (top == n)
		return 0;
	if (top == n + 1)
		return 1;
	throw std::invalid_argument("--mod supports (v0..v" + std::to_string(n) + ") or (v0..v" + std::to_string(n + 1) + ") for " +
								spectrum_name(n));
}

void emit(const std::string& text, const std::string& out)
{
	if (out.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(out, std::ios::binary);
	if (!f)
		throw std::runtime_error("cannot write " + out);
	f << text;
}

std::string render(const ChartSpec& c, const std::string& format)
{
	if (format == "svg")
		return render_svg(c);
	if (format == "json")
		return chart_to_json(c).dump(1) + "\n";
	return render_ascii(c);
}

struct ComputeOpts
{
	std::string spectrum, target = "syntomic", mod = "auto", window, seed_file, format = "ascii", out;
	bool pages = false;
};

int compute(const ComputeOpts& o)
{
	int n = spectrum_n(o.spectrum);
	std::vector<DifferentialRule> rules = fgl::differential_seeds(n);
	if (!o.seed_file.empty()) {
		std::ifstream in(o.seed_file);
		if (!in)
			throw std::runtime_error("cannot open " + o.seed_file);
		rules = rules_from_json(nlohmann::json::parse(in));
	}
	int hw = n >= 1 ? 7 : 5;
	Box box{-hw, hw, -hw, hw};
	if (!o.window.empty())
		box = parse_window(o.window);
	int mod = parse_mod(o.mod, n);

	if (o.target == "syntomic") {
		if (mod == 0)
			throw std::invalid_argument("syntomic charts are computed mod (v0..v" + std::to_string(n + 1) + ")");
		auto r = assemble_syntomic(n, rules);
		ChartSpec c = chart_from_syntomic(r);
		if (o.format == "json") {
			auto j = syntomic_to_json(r);
			j["chart"] = chart_to_json(c);
			emit(j.dump(1) + "\n", o.out);
		}
		else
			emit(render(c, o.format), o.out);
		return 0;
	}
	if (o.target == "thr") {
		Presentation p = mod == 1 ? thr_mod_presentation(n) : thr_presentation(n);
		Page pg = init_page(p, Window{box.aMin, box.aMax, box.bMin, box.bMax, 0, 0});
		emit(render(chart_from_page(pg, p.name), o.format), o.out);
		return 0;
	}
	if (mod == 0)
		throw std::invalid_argument("the tbar-Bockstein is computed mod (v0..v" + std::to_string(n + 1) + ")");
	bool periodic = o.target == "tpr";
	auto w = einf_window(n, box.aMin, box.aMax, box.bMin, box.bMax, periodic, false);
	auto run = run_bockstein(n, periodic ? BocksteinMode::Periodic : BocksteinMode::Bounded, w, rules, o.pages);
	std::string name = std::string(periodic ? "TPR" : "TCR-") + "(" + spectrum_name(n) + ")";

	std::vector<std::pair<std::string, ChartSpec>> charts;
	if (o.pages) {
		for (size_t i = 0; i < run.pages.size(); ++i) {
			const Page& pg = run.pages[i];
			if (!pg.has_rules && i + 1 != run.pages.size())
				continue;
			/* earlier pages are drawn over the E_infty window; their certified part is larger */
			Page shown = pg;
			shown.certified = w;
			charts.push_back({"E" + std::to_string(pg.r), chart_from_page(shown, name + " E" + std::to_string(pg.r))});
		}
	}
	else
		charts.push_back({"E" + std::to_string(run.stable_page), chart_from_page(run.einf, name + " E_infty")});

	if (o.format == "json") {
		nlohmann::json j{{"target", o.target}, {"spectrum", spectrum_name(n)}, {"stable_page", run.stable_page},
						 {"rules", rules_to_json(rules)}};
		nlohmann::json pages = nlohmann::json::array();
		for (auto& [label, c] : charts) {
			auto cj = chart_to_json(c);
			cj["page"] = label;
			pages.push_back(cj);
		}
		j["pages"] = pages;
		emit(j.dump(1) + "\n", o.out);
		return 0;
	}
	if (o.format == "svg" && charts.size() > 1) {
		if (o.out.empty())
			throw UsageError("--pages with --format svg needs --out; one file per page is written");
		std::string stem = o.out, ext = ".svg";
		if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".svg")
			stem.resize(stem.size() - 4);
		for (auto& [label, c] : charts)
			emit(render_svg(c), stem + "_" + label + ext);
		return 0;
	}
	std::string text;
	for (auto& [label, c] : charts)
		text += render(c, o.format) + (o.format == "ascii" ? "\n" : "");
	emit(text, o.out);
	return 0;
}

int verify(const std::string& suite, bool verbose)
{
	auto ids = acc::suite_ids(suite);
	int rc = 0;
	for (int id : ids) {
		auto o = acc::run_criterion(id);
		std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", o.id, o.title.c_str());
		if (verbose)
			for (auto& n : o.notes)
				std::printf("    %s\n", n.c_str());
		if (!o.pass) {
			std::printf("    first mismatch: %s\n", o.first_mismatch.c_str());
			rc = EXIT_MISMATCH;
		}
	}
	return rc;
}

struct OracleOpts
{
	std::string ring, sequence, kill, format = "ascii";
	int max_u = 24;
};

int oracle(const OracleOpts& o)
{
	KoszulInput in;
	std::vector<std::string> ring = o.ring.empty() ? std::vector<std::string>{} : split(o.ring);
	if (ring.empty())
		for (auto& g : generator_table())
			if (g.kind == GenKind::Polynomial && g.degree.V.underlying() > 0)
				ring.push_back(g.name);
	for (auto& name : ring) {
		auto g = named_generator(name);
		if (g.kind != GenKind::Polynomial)
			throw std::invalid_argument("'" + name + "' is not a polynomial generator");
		in.ring.push_back(g);
	}
	in.sequence = o.sequence.empty() ? ring : split(o.sequence);
	in.kill = o.kill.empty() ? in.sequence : split(o.kill);
	auto ranks = koszul_oracle(in, o.max_u);

	/* when the sequence and the kill list are the whole ring this is Tor over the ring */
	bool tor = in.sequence == ring && in.kill == ring;
	bool agree = true;
	if (tor) {
		std::vector<GeneratorSpec> gens = in.ring;
		agree = monomial_ranks(tor_over_polynomial(gens), o.max_u) == ranks;
	}
	if (o.format == "json") {
		auto j = rank_table_to_json(ranks);
		j["max_underlying"] = o.max_u;
		if (tor)
			j["matches_structural_rule"] = agree;
		std::cout << j.dump(1) << "\n";
	}
	else {
		for (auto& [d, r] : ranks)
			std::printf("%-28s %s  rank %d\n", to_string(d).c_str(), ro_label(d.V).c_str(), r);
		if (tor)
			std::printf("structural rule: %s\n", agree ? "agrees" : "DISAGREES");
	}
	return agree ? 0 : EXIT_MISMATCH;
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"RO(C2)-graded charts for Real syntomic cohomology of BP_R<n>"};
	app.require_subcommand(1);

	ComputeOpts co;
	auto* cmp = app.add_subcommand("compute", "compute a page or the syntomic answer and render it");
	cmp->add_option("--spectrum", co.spectrum, "f2, z2, kr or tmf13")->required()->check(CLI::IsMember({"f2", "z2", "kr", "tmf13"}));
	cmp->add_option("--target", co.target, "thr, tcr-minus, tpr or syntomic")
		->check(CLI::IsMember({"thr", "tcr-minus", "tpr", "syntomic"}));
	cmp->add_option("--mod", co.mod, "auto or v0,v1,...");
	cmp->add_option("--window", co.window, "aMin:aMax,bMin:bMax");
	cmp->add_flag("--pages", co.pages, "dump the pages that carry differentials and the final page");
	cmp->add_option("--seed-file", co.seed_file, "JSON differential rules replacing the built-in seeds");
	cmp->add_option("--format", co.format, "ascii, svg or json")->check(CLI::IsMember({"ascii", "svg", "json"}));
	cmp->add_option("--out", co.out, "output path");

	std::string suite = "all";
	bool verbose = false;
	auto* ver = app.add_subcommand("verify", "run the acceptance suite");
	ver->add_option("--suite", suite, "all, figures, thr, syntomic, fgl, properties or underlying");
	ver->add_flag("-v,--verbose", verbose);

	OracleOpts oo;
	auto* orc = app.add_subcommand("oracle", "Koszul complex homology of polynomial generators");
	orc->add_option("--ring", oo.ring, "comma separated polynomial generators (default: all with positive stem)");
	orc->add_option("--sequence", oo.sequence, "generators receiving an exterior partner (default: the ring)");
	orc->add_option("--kill", oo.kill, "generators set to zero afterwards (default: the sequence)");
	orc->add_option("--max-underlying", oo.max_u, "largest underlying stem")->check(CLI::Range(0, 64));
	orc->add_option("--format", oo.format)->check(CLI::IsMember({"ascii", "json"}));

	std::string seed_spectrum;
	auto* sd = app.add_subcommand("seeds", "print the derived differential seeds in rule file format");
	sd->add_option("--spectrum", seed_spectrum)->required()->check(CLI::IsMember({"f2", "z2", "kr", "tmf13"}));

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return EXIT_USAGE;
	}

	try {
		if (*cmp)
			return compute(co);
		if (*ver)
			return verify(suite, verbose);
		if (*orc)
			return oracle(oo);
		if (*sd) {
			std::cout << rules_to_json(fgl::differential_seeds(spectrum_n(seed_spectrum))).dump(1) << "\n";
			return 0;
		}
	} catch (const UsageError& e) {
		std::fprintf(stderr, "usage error: %s\n", e.what());
		return EXIT_USAGE;
	} catch (const std::invalid_argument& e) {
		std::fprintf(stderr, "error: %s\n", e.what());
		return EXIT_USAGE;
	} catch (const std::exception& e) {
		std::fprintf(stderr, "error: %s\n", e.what());
		return EXIT_COMPUTE;
	}
	return EXIT_USAGE;
}
