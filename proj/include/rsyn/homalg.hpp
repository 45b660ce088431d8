#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsyn/gralg.hpp"

namespace rsyn {

struct UnknownFactorKind : std::runtime_error
{
	using std::runtime_error::runtime_error;
};
struct WindowTooLarge : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/* Tor_{Lambda(x)}(F2,F2) = Gamma(dx), |dx| = |x| + 1 */
Presentation tor_over_exterior(const std::vector<GeneratorSpec>& gens);
/* Tor_{F2[y]}(F2,F2) = Lambda(sigma y), |sigma y| = |y| + 1 */
Presentation tor_over_polynomial(const std::vector<GeneratorSpec>& gens);

enum class FactorKind { Trivial, PrimitiveExterior, PolynomialBase };
FactorKind parse_factor_kind(const std::string& s); /* throws UnknownFactorKind */

struct HopfFactor
{
	FactorKind kind;
	std::vector<GeneratorSpec> gens;
	std::string note;
};

Presentation cotor_factorized(const std::vector<HopfFactor>& factors);
/* the factorization of the motivic THR computation for BP_R<n> mod (v0..vn) */
std::vector<HopfFactor> thr_factorization(int n);

/* ranks keyed by total degree (homological degree s adds s to the stem) */
using RankTable = std::map<TriDegree, int>;

/* ranks of the monomial algebra (no M2 coefficients) with underlying stem <= max_underlying */
RankTable monomial_ranks(const Presentation& p, int max_underlying, size_t cap = 2000000);

/* Tor over the monomial algebra generated by gens (polynomial/exterior), via the normalized bar complex;
 * internal underlying degree <= max_underlying */
RankTable bar_tor_oracle(const std::vector<GeneratorSpec>& gens, int max_underlying, size_t cap = 400000);

/* homology of F2[y_1..y_k] (x) Lambda(e_i : i in seq) with d e_i = y_i, tensored down along the
 * ring generators listed in kill (kill = sequence gives Tor over F2[seq]) */
struct KoszulInput
{
	std::vector<GeneratorSpec> ring; /* polynomial generators */
	std::vector<std::string> sequence;
	std::vector<std::string> kill;
};
RankTable koszul_oracle(const KoszulInput& in, int max_underlying, size_t cap = 400000);

RankTable restrict_underlying(const RankTable& t, int max_underlying);
/* degreewise convolution of two rank tables */
RankTable convolve(const RankTable& a, const RankTable& b, int max_underlying);
nlohmann::json rank_table_to_json(const RankTable& t);

}  // namespace rsyn
