#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsyn/specseq.hpp"

namespace rsyn {

struct UnclassifiedClass : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/* f2, z2, kr, tmf13 <-> n = -1, 0, 1, 2 */
int spectrum_n(const std::string& s);
std::string spectrum_name(int n);

/* gr THR(BP_R<n>)/(v0..vn) = M2[mubar^N]<lambar_1..lambar_{n+1}>, N = 2^(n+1) */
Presentation thr_presentation(int n);
/* the same with vbar_{n+1} adjoined as a polynomial generator acting by zero */
Presentation thr_with_vbar(int n);
/* mod vbar_{n+1}: the exterior class epsbar_{n+1} replaces vbar_{n+1} */
Presentation thr_mod_presentation(int n);
/* every named generator used by the engine, with its tri-degree */
std::vector<GeneratorSpec> generator_table();
const GeneratorSpec& named_generator(const std::string& name);

/* E_infty window for the t-bar Bockstein of thr_mod_presentation(n) over a V-box */
Window einf_window(int n, int aMin, int aMax, int bMin, int bMax, bool periodic, bool integral);
/* E1 window whose certified part after all seeded pages covers w */
Window e1_window(int n, const Window& w);
int last_seeded_page(int n);

struct BocksteinRun
{
	Page einf;
	std::vector<Page> pages; /* filled when keep_pages */
	int stable_page = 0;
};
BocksteinRun run_bockstein(int n, BocksteinMode mode, const Window& einf, const std::vector<DifferentialRule>& rules,
						   bool keep_pages = false);
BocksteinRun run_bockstein(int n, BocksteinMode mode, const Window& einf, bool keep_pages = false);

enum class Block { A00, A01, A10, A11 };
const char* block_name(Block b);

struct ClassRef
{
	TriDegree d;
	size_t i;
	std::string name;
};

struct NygaardDecomposition
{
	int n = 0;
	const Page* page = nullptr;
	std::map<Block, std::vector<ClassRef>> blocks;
	std::map<std::pair<TriDegree, size_t>, Block> block_of;

	size_t size(Block b) const
	{
		auto it = blocks.find(b);
		return it == blocks.end() ? 0 : it->second.size();
	}
};

/* block of a monomial of the bounded Bockstein algebra; throws UnclassifiedClass */
Block classify(const Presentation& p, const Mono& m, int n);
NygaardDecomposition decompose(const Page& einf_tcminus, int n);

enum class BlockAction { Identity, Zero, InvertMu };
struct BlockMap
{
	std::string name;
	std::array<BlockAction, 4> action; /* indexed by Block */
	BlockAction on(Block b) const { return action[int(b)]; }
};
BlockMap can_map(const NygaardDecomposition& d);
BlockMap frobenius_map(const NygaardDecomposition& d);
/* image of a term of the bounded algebra in the periodic algebra */
std::optional<Term> apply_block_map(const BlockMap& f, Block b, const Term& t, const Presentation& src,
									const Presentation& tgt, int n);

struct EqualizerClass
{
	TriDegree d;     /* lowest-f class in the combination */
	std::string name;
	std::vector<std::string> terms; /* names of the classes in the combination */
	Block block = Block::A00;       /* kernel: block of the lowest class */
};

struct EqualizerCell
{
	RODegree V;
	int m = 0;
	size_t source_rank = 0, target_rank = 0, image_rank = 0;
	std::vector<EqualizerClass> kernel, cokernel;
};

struct EqualizerResult
{
	std::map<std::pair<RODegree, int>, EqualizerCell> cells;
	size_t kernel_rank() const;
	size_t cokernel_rank() const;
};

/* F2 kernel and cokernel of can - phi, computed per (V, m) across all Nygaard filtrations */
EqualizerResult equalizer(const NygaardDecomposition& d, const BlockMap& canm, const BlockMap& phim, const Page& einf_tp);

struct SyntomicGenerator
{
	std::string name;
	TriDegree degree;
	std::string block; /* A00, A11, or del*A00 */
	RODegree stem() const { return degree.V; }
	int weight() const { return adams_weight(degree).value(); }
};

struct ChartEdge
{
	std::string from, to, kind, provenance;
};

struct SyntomicResult
{
	int n = 0;
	Window window;
	std::string polynomial_over; /* vbar_{n+1}, empty for n = -1 */
	std::vector<SyntomicGenerator> generators;
	std::map<std::pair<int, int>, int> ranks; /* (underlying stem, weight) -> number of generators */
	std::vector<ChartEdge> edges;
	std::vector<std::string> notes;
	EqualizerResult eq;
	NygaardDecomposition blocks_tcm; /* page pointer is not kept */
	std::map<Block, size_t> block_sizes;
};

/* generator name with tbar^(2^(j-1))*lambar_j rewritten as Xibar_j */
std::string syntomic_name(const std::string& raw, int n);
std::vector<ChartEdge> configured_edges(int n);
SyntomicResult assemble_syntomic(int n);
SyntomicResult assemble_syntomic(int n, const std::vector<DifferentialRule>& rules);
nlohmann::json syntomic_to_json(const SyntomicResult& r);

/* underlying collapse: (a,b) -> a+b, u -> 1, a -> 0, negative cone -> 0; distinct monomials per degree */
std::map<int, int> underlying_collapse(const Page& pg);

}  // namespace rsyn
