#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsyn/f2.hpp"
#include "rsyn/gralg.hpp"

namespace rsyn {

struct DegreeMismatch : std::runtime_error
{
	using std::runtime_error::runtime_error;
};
struct DSquareNonzero : std::runtime_error
{
	TriDegree cell;
	DSquareNonzero(const std::string& s, TriDegree c) : std::runtime_error(s), cell(c) {}
};
struct NameClash : std::runtime_error
{
	using std::runtime_error::runtime_error;
};
struct NotACycle : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/* symbolic term used in rule files: M2 coefficient times a named monomial */
struct RuleTerm
{
	M2Basis x = M2Basis::one();
	std::map<std::string, int> mono;
};

/* d_page(source_gen^source_exp) = target */
struct DifferentialRule
{
	int page = 1;
	std::string source_gen;
	int source_exp = 1;
	std::vector<RuleTerm> target;
	std::string note;
};

std::string rule_str(const DifferentialRule& r);
nlohmann::json rules_to_json(const std::vector<DifferentialRule>& rules);
std::vector<DifferentialRule> rules_from_json(const nlohmann::json& j);

/* a rule resolved against a presentation */
struct ResolvedRule
{
	int page;
	int gen;
	int c;
	Element target;
};

std::vector<ResolvedRule> resolve_rules(const Presentation& p, const std::vector<DifferentialRule>& rules, int page);
/* Leibniz extension of the rules to a term; valid on E_r representatives */
Element apply_d(const Presentation& p, const std::vector<ResolvedRule>& rules, const Term& t);
Element apply_d(const Presentation& p, const std::vector<ResolvedRule>& rules, const Element& e);

struct Cell
{
	std::vector<Term> basis;  /* E1 basis, sorted */
	Echelon bnd;              /* boundaries B_r inside E1 */
	std::vector<BitVec> reps; /* class representatives, independent modulo B_r */
	Echelon coord;            /* bnd rows followed by reps, tagged by class index */
	std::vector<BitVec> d;    /* d_r of each class in the target's class coordinates */
	bool has_target = false;
	int changed_at = 1;       /* last page whose turning changed this cell */

	size_t rank() const { return reps.size(); }
	int index_of(const Term& t) const;
};

class Page
{
public:
	int r = 1;
	Window window;
	Window certified;
	std::shared_ptr<const Presentation> pres;
	std::map<TriDegree, Cell> cells;
	bool has_rules = false; /* rules were applied on this page */
	int last_nonzero_page = 0;

	size_t rank(const TriDegree& d) const;
	const Cell* cell(const TriDegree& d) const;
	/* lowest term of the class representative */
	const Term& class_term(const TriDegree& d, size_t i) const;
	std::string class_name(const TriDegree& d, size_t i) const;
	std::vector<std::string> names(const TriDegree& d) const;
	bool is_certified(const TriDegree& d) const { return certified.contains(d); }
	size_t total_rank() const;
	/* class coordinates of an E1 cycle vector; throws NotACycle */
	BitVec coordinates(const TriDegree& d, const BitVec& v) const;
	BitVec e1_vector(const TriDegree& d, const Element& e) const;
	/* stabilization page: the page after the last nonzero differential */
	int stable_page() const { return last_nonzero_page + 1; }
};

Page init_page(const Presentation& p, const Window& w);
Page init_page(std::shared_ptr<const Presentation> p, const Window& w);
/* fills the d_r matrices of pg from rules of page pg.r */
void apply_rules(Page& pg, const std::vector<DifferentialRule>& rules);
/* throws DSquareNonzero */
void check_d_squared(const Page& pg);
Page turn_page(const Page& pg);

/* runs pages r..max_r; the callback sees each page after its differentials are set */
Page run_to_stable(Page pg, const std::vector<DifferentialRule>& rules, int max_r,
				   const std::function<void(const Page&)>& on_page = {});

enum class BocksteinMode { Bounded, Periodic, Approximate };
Presentation build_bockstein(const Presentation& algebra, BocksteinMode mode, int k = 1);
inline const char* TBAR = "tbar";
TriDegree tbar_degree();

nlohmann::json page_to_json(const Page& pg, bool certified_only = true);

}  // namespace rsyn
