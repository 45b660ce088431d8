#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsyn/coeffm2.hpp"
#include "rsyn/rocgrade.hpp"

namespace rsyn {

struct NonTerminating : std::runtime_error
{
	using std::runtime_error::runtime_error;
};
struct UnknownGenerator : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

enum class GenKind { Polynomial, Exterior, DividedPower, Laurent };
const char* kind_name(GenKind k);
GenKind parse_kind(const std::string& s);

struct GeneratorSpec
{
	std::string name;
	GenKind kind = GenKind::Polynomial;
	TriDegree degree;
	std::string note; /* where the degree comes from, free text */
	bool operator==(const GeneratorSpec& o) const { return name == o.name && kind == o.kind && degree == o.degree; }
};

using Mono = std::vector<int>; /* exponents, aligned with Presentation::gens */

struct Presentation
{
	std::string name;
	std::vector<GeneratorSpec> gens;
	std::vector<Mono> relations; /* monomials declared zero */

	int index(const std::string& gen) const; /* throws UnknownGenerator */
	int find(const std::string& gen) const;  /* -1 if absent */
	Mono unit() const { return Mono(gens.size(), 0); }
	Mono gen_mono(const std::string& gen, int e = 1) const;
	TriDegree degree(const Mono& m) const;
	/* zero because of a relation or an exterior square */
	bool killed(const Mono& m) const;
	/* product of monomials with kind rules (exterior, Lucas for divided powers) and relations */
	std::optional<Mono> mono_mul(const Mono& x, const Mono& y) const;
	std::string mono_str(const Mono& m) const;
	Mono parse_mono(const std::string& s) const;
	void add_generator(GeneratorSpec g); /* pads existing relations */
};

struct Term
{
	Mono mono;
	M2Basis x;
	auto operator<=>(const Term&) const = default;
};

std::string term_str(const Presentation& p, const Term& t);
TriDegree term_degree(const Presentation& p, const Term& t);

/* F2-linear combination of terms, kept sorted and reduced */
struct Element
{
	std::vector<Term> terms;

	bool is_zero() const { return terms.empty(); }
	void add(const Term& t);          /* xor one term in */
	Element& operator+=(const Element& o);
	bool operator==(const Element&) const = default;
	static Element of(Term t)
	{
		Element e;
		e.terms.push_back(std::move(t));
		return e;
	}
};

std::optional<Term> mul(const Presentation& p, const Term& x, const Term& y);
Element mul(const Presentation& p, const Element& x, const Element& y);
std::string element_str(const Presentation& p, const Element& e);
/* homogeneous degree; throws on inhomogeneous input */
std::optional<TriDegree> element_degree(const Presentation& p, const Element& e);

/* V-box plus Nygaard range; optional motivic range */
struct Window
{
	int aMin = 0, aMax = -1, bMin = 0, bMax = -1;
	int fMin = 0, fMax = 0;
	std::optional<std::pair<int, int>> m;
	/* only cells of integral Adams weight (V.b == m); there the M2 coefficient is forced to be 1 */
	bool integral = false;

	bool empty() const { return aMin > aMax || bMin > bMax || fMin > fMax; }
	bool contains(const TriDegree& d) const
	{
		return d.V.a >= aMin && d.V.a <= aMax && d.V.b >= bMin && d.V.b <= bMax && d.f >= fMin && d.f <= fMax &&
			   (!m || (d.m >= m->first && d.m <= m->second)) && (!integral || d.V.b == d.m);
	}
	bool contains_V(RODegree V) const { return V.a >= aMin && V.a <= aMax && V.b >= bMin && V.b <= bMax; }
	static Window exact(const TriDegree& d) { return {d.V.a, d.V.a, d.V.b, d.V.b, d.f, d.f, std::make_pair(d.m, d.m)}; }
	Window padded(int da, int df) const
	{
		Window w = *this;
		w.aMin -= da, w.aMax += da, w.fMin -= df, w.fMax += df;
		return w;
	}
};

void to_json(nlohmann::json& j, const Window& w);
void from_json(const nlohmann::json& j, Window& w);

/* all basis terms with tri-degree in the window, grouped by cell and sorted */
std::map<TriDegree, std::vector<Term>> enumerate_window(const Presentation& p, const Window& w);
std::vector<Term> basis_in_degree(const Presentation& p, const TriDegree& d, const Window& w);
std::vector<Term> basis_in_degree(const Presentation& p, const TriDegree& d);

Presentation localize(const Presentation& p, const std::string& g);
/* drop the polynomial generator v and adjoin an exterior class one stem higher with weight -1 */
Presentation quotient_adjoin(const Presentation& p, const std::string& v, std::string new_name = "");

nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);
Presentation load_presentation(const std::string& path);

}  // namespace rsyn
