#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rsyn/specseq.hpp"

namespace rsyn::fgl {

struct TruncationTooSmall : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

/* Variables v_1..v_K then t_1..t_K. Exponent vectors have length 2K. */
constexpr int K = 5;
using Exps = std::vector<int>;
Exps v_exp(int i, int e = 1);
Exps t_exp(int i, int e = 1);
/* internal degree, |v_i| = |t_i| = 2(2^i - 1) */
int internal_degree(const Exps& e);

using QPoly = std::map<Exps, mpq_class>;
using F2Poly = std::set<Exps>;

QPoly q_const(const mpq_class& c);
QPoly q_var(const Exps& e);
QPoly q_add(const QPoly& a, const QPoly& b);
QPoly q_mul(const QPoly& a, const QPoly& b);
QPoly q_scale(const QPoly& a, const mpq_class& c);
QPoly q_pow(const QPoly& a, int n);

/* coefficients must be 2-integral; kills v_1..v_top when top >= 1 */
F2Poly reduce_mod2(const QPoly& a, int top = 0);
F2Poly f2_mul(const F2Poly& a, const F2Poly& b);
F2Poly f2_add(const F2Poly& a, const F2Poly& b);
std::string poly_str(const F2Poly& p);
bool homogeneous(const F2Poly& p, int degree);

/* series in x (standing for tbar) with polynomial coefficients */
using QSeries = std::vector<QPoly>;

struct TruncatedSeries
{
	std::string variable = "tbar";
	int trunc = 0;              /* coefficients of x^0 .. x^{trunc-1} */
	std::vector<F2Poly> coeffs; /* size trunc */

	const F2Poly& coeff(int k) const { return coeffs.at(k); }
	/* lowest exponent with a nonzero coefficient, -1 if none */
	int leading() const;
	std::string str() const;
};

/* Hazewinkel logarithm coefficients ell_0..ell_n over Q[v] */
std::vector<QPoly> log_coefficients(int n);
QSeries log_series(int trunc);
QSeries exp_series(int trunc);
QSeries series_mul(const QSeries& a, const QSeries& b, int trunc);
/* a(b(x)) for b without constant term */
QSeries series_compose(const QSeries& a, const QSeries& b, int trunc);

/* [2](x) mod (v_0, ..., v_n); ideal lists the indices 0..n */
TruncatedSeries two_series(const std::vector<int>& ideal, int trunc);
/* conjugation chi(t_i) over Q, then mod 2 and mod the ideal */
QPoly antipode_q(int i);
F2Poly antipode(int i, const std::vector<int>& ideal = {0});
/* sum chi(t_i) x^{2^i}, truncated */
TruncatedSeries right_unit_t(int trunc, const std::vector<int>& ideal = {0});

/* how a coefficient of the series is detected in the Bockstein E1 page */
struct Detection
{
	Exps coefficient;
	std::map<std::string, int> detected_by;
	std::string note;
};
std::vector<Detection> default_detection(int n);

std::vector<DifferentialRule> differential_seeds(int n);

}  // namespace rsyn::fgl
