#include "rsyn/fgl2.hpp"

#include <algorithm>
#include <mutex>

namespace rsyn::fgl {

Exps v_exp(int i, int e)
{
	if (i < 1 || i > K)
		throw std::out_of_range("v index out of range");
	Exps x(2 * K, 0);
	x[i - 1] = e;
	return x;
}

Exps t_exp(int i, int e)
{
	if (i < 1 || i > K)
		throw std::out_of_range("t index out of range");
	Exps x(2 * K, 0);
	x[K + i - 1] = e;
	return x;
}

int internal_degree(const Exps& e)
{
	int d = 0;
	for (int i = 1; i <= K; ++i)
		d += 2 * ((1 << i) - 1) * (e[i - 1] + e[K + i - 1]);
	return d;
}

QPoly q_const(const mpq_class& c)
{
	QPoly p;
	if (c != 0)
		p[Exps(2 * K, 0)] = c;
	return p;
}

QPoly q_var(const Exps& e)
{
	return QPoly{{e, mpq_class(1)}};
}

QPoly q_add(const QPoly& a, const QPoly& b)
{
	QPoly r = a;
	for (auto& [e, c] : b) {
		mpq_class& s = r[e];
		s += c;
		if (s == 0)
			r.erase(e);
	}
	return r;
}

QPoly q_mul(const QPoly& a, const QPoly& b)
{
	QPoly r;
	Exps e(2 * K);
	for (auto& [ea, ca] : a)
		for (auto& [eb, cb] : b) {
			for (int i = 0; i < 2 * K; ++i)
				e[i] = ea[i] + eb[i];
			mpq_class& s = r[e];
			s += ca * cb;
			if (s == 0)
				r.erase(e);
		}
	return r;
}

QPoly q_scale(const QPoly& a, const mpq_class& c)
{
	if (c == 0)
		return {};
	QPoly r = a;
	for (auto& [_, x] : r)
		x *= c;
	return r;
}

QPoly q_pow(const QPoly& a, int n)
{
	QPoly r = q_const(1), b = a;
	while (n > 0) {
		if (n & 1)
			r = q_mul(r, b);
		n >>= 1;
		if (n)
			b = q_mul(b, b);
	}
	return r;
}

F2Poly reduce_mod2(const QPoly& a, int top)
{
	F2Poly r;
	for (auto& [e, c] : a) {
		mpz_class den = c.get_den();
		if (mpz_even_p(den.get_mpz_t()))
			throw std::domain_error("coefficient is not 2-integral");
		if (mpz_even_p(c.get_num().get_mpz_t()))
			continue;
		bool killed = false;
		for (int i = 1; i <= std::min(top, K); ++i)
			if (e[i - 1] > 0)
				killed = true;
		if (!killed)
			r.insert(e);
	}
	return r;
}

F2Poly f2_add(const F2Poly& a, const F2Poly& b)
{
	F2Poly r = a;
	for (auto& e : b)
		if (!r.erase(e))
			r.insert(e);
	return r;
}

F2Poly f2_mul(const F2Poly& a, const F2Poly& b)
{
	F2Poly r;
	Exps e(2 * K);
	for (auto& x : a)
		for (auto& y : b) {
			for (int i = 0; i < 2 * K; ++i)
				e[i] = x[i] + y[i];
			if (!r.erase(e))
				r.insert(e);
		}
	return r;
}

std::string poly_str(const F2Poly& p)
{
	if (p.empty())
		return "0";
	std::string s;
	for (auto& e : p) {
		std::string m;
		for (int i = 0; i < 2 * K; ++i) {
			if (!e[i])
				continue;
			m += (m.empty() ? "" : "*") + std::string(i < K ? "v" : "t") + std::to_string(i % K + 1);
			if (e[i] != 1)
				m += "^" + std::to_string(e[i]);
		}
		s += (s.empty() ? "" : " + ") + (m.empty() ? "1" : m);
	}
	return s;
}

bool homogeneous(const F2Poly& p, int degree)
{
	for (auto& e : p)
		if (internal_degree(e) != degree)
			return false;
	return true;
}

int TruncatedSeries::leading() const
{
	for (int k = 0; k < trunc; ++k)
		if (!coeffs[k].empty())
			return k;
	return -1;
}

std::string TruncatedSeries::str() const
{
	std::string s;
	for (int k = 0; k < trunc; ++k) {
		if (coeffs[k].empty())
			continue;
		std::string c = poly_str(coeffs[k]);
		if (coeffs[k].size() > 1)
			c = "(" + c + ")";
		std::string x = k == 0 ? "" : k == 1 ? variable : variable + "^" + std::to_string(k);
		s += (s.empty() ? "" : " + ") + (c == "1" && k ? x : x.empty() ? c : c + "*" + x);
	}
	return (s.empty() ? "0" : s) + " + O(" + variable + "^" + std::to_string(trunc) + ")";
}

std::vector<QPoly> log_coefficients(int n)
{
	std::vector<QPoly> ell{q_const(1)};
	for (int k = 1; k <= n; ++k) {
		QPoly s;
		for (int i = 0; i < k; ++i)
			s = q_add(s, q_mul(ell[i], q_var(v_exp(k - i, 1 << i))));
		ell.push_back(q_scale(s, mpq_class(1, 2)));
	}
	return ell;
}

QSeries log_series(int trunc)
{
	int n = 0;
	while ((1 << (n + 1)) < trunc)
		++n;
	auto ell = log_coefficients(n);
	QSeries L(trunc);
	for (int k = 0; k <= n; ++k)
		if ((1 << k) < trunc)
			L[1 << k] = ell[k];
	return L;
}

QSeries series_mul(const QSeries& a, const QSeries& b, int trunc)
{
	QSeries r(trunc);
	for (int i = 0; i < trunc && i < (int)a.size(); ++i) {
		if (a[i].empty())
			continue;
		for (int j = 0; i + j < trunc && j < (int)b.size(); ++j)
			if (!b[j].empty())
				r[i + j] = q_add(r[i + j], q_mul(a[i], b[j]));
	}
	return r;
}

QSeries series_compose(const QSeries& a, const QSeries& b, int trunc)
{
	if (!b.empty() && !b[0].empty())
		throw std::invalid_argument("inner series has a constant term");
	QSeries r(trunc), pw(trunc);
	pw[0] = q_const(1);
	for (int j = 0; j < trunc && j < (int)a.size(); ++j) {
		if (!a[j].empty())
			for (int k = 0; k < trunc; ++k)
				if (!pw[k].empty())
					r[k] = q_add(r[k], q_mul(a[j], pw[k]));
		pw = series_mul(pw, b, trunc);
	}
	return r;
}

QSeries exp_series(int trunc)
{
	QSeries L = log_series(trunc);
	std::vector<QSeries> Lp(trunc); /* powers of L */
	Lp[0] = QSeries(trunc);
	Lp[0][0] = q_const(1);
	for (int j = 1; j < trunc; ++j)
		Lp[j] = series_mul(Lp[j - 1], L, trunc);
	QSeries e(trunc);
	if (trunc > 1)
		e[1] = q_const(1);
	for (int k = 2; k < trunc; ++k) {
		/* coefficient of x^k in sum_{j<k} e_j L^j must vanish; L^k = x^k + ... */
		QPoly s;
		for (int j = 1; j < k; ++j)
			if (!e[j].empty())
				s = q_add(s, q_mul(e[j], Lp[j][k]));
		e[k] = q_scale(s, -1);
	}
	return e;
}

static int check_ideal(const std::vector<int>& ideal)
{
	if (ideal.empty() || ideal.front() != 0)
		throw std::invalid_argument("the ideal must contain v0 = 2 (coefficients are reduced mod 2)");
	for (size_t i = 0; i < ideal.size(); ++i)
		if (ideal[i] != int(i))
			throw std::invalid_argument("the ideal must be (v0, ..., vn)");
	return int(ideal.size()) - 1;
}

static TruncatedSeries to_f2(const QSeries& s, int trunc, int top)
{
	TruncatedSeries r;
	r.trunc = trunc;
	r.coeffs.resize(trunc);
	for (int k = 0; k < trunc; ++k)
		r.coeffs[k] = reduce_mod2(s[k], top);
	return r;
}

TruncatedSeries two_series(const std::vector<int>& ideal, int trunc)
{
	int n = check_ideal(ideal);
	if (n + 1 > K - 1)
		throw std::out_of_range("ideal too large for the configured number of variables");
	if (trunc < (1 << (n + 1)) + 2)
		throw TruncationTooSmall("truncation " + std::to_string(trunc) + " < 2^(n+1)+2");
	QSeries L = log_series(trunc);
	QSeries twoL = L;
	for (auto& c : twoL)
		c = q_scale(c, 2);
	QSeries s = series_compose(exp_series(trunc), twoL, trunc);
	return to_f2(s, trunc, n);
}

namespace {
std::mutex chi_mutex;
std::vector<QPoly> chi_cache{QPoly{{Exps(2 * K, 0), mpq_class(1)}}};
}  // namespace

QPoly antipode_q(int n)
{
	if (n < 0 || n > K)
		throw std::out_of_range("antipode index out of range");
	std::lock_guard<std::mutex> lock(chi_mutex);
	auto ell = log_coefficients(n);
	auto t = [](int j) { return j == 0 ? q_const(1) : q_var(t_exp(j)); };
	while ((int)chi_cache.size() <= n) {
		int m = (int)chi_cache.size();
		/* ell_m = sum_{i+j=m} eta_R(ell_i) chi(t_j)^{2^i}, eta_R(ell_i) = sum_{a+b=i} ell_a t_b^{2^a} */
		QPoly rest;
		for (int i = 1; i <= m; ++i) {
			QPoly etaR;
			for (int a = 0; a <= i; ++a)
				etaR = q_add(etaR, q_mul(ell[a], q_pow(t(i - a), 1 << a)));
			rest = q_add(rest, q_mul(etaR, q_pow(chi_cache[m - i], 1 << i)));
		}
		chi_cache.push_back(q_add(ell[m], q_scale(rest, -1)));
	}
	return chi_cache[n];
}

F2Poly antipode(int i, const std::vector<int>& ideal)
{
	int n = check_ideal(ideal);
	return reduce_mod2(antipode_q(i), n);
}

TruncatedSeries right_unit_t(int trunc, const std::vector<int>& ideal)
{
	if (trunc < 2)
		throw TruncationTooSmall("right unit needs truncation >= 2");
	TruncatedSeries r;
	r.trunc = trunc;
	r.coeffs.resize(trunc);
	for (int i = 0; (1 << i) < trunc; ++i)
		r.coeffs[1 << i] = antipode(i, ideal);
	return r;
}

std::vector<Detection> default_detection(int n)
{
	int N = 1 << (n + 1);
	std::vector<Detection> d;
	Exps v_top = n + 1 == 0 ? Exps{} : v_exp(n + 1);
	d.push_back({v_top, {{"tbar", 1}, {"mubar" + std::to_string(N), 1}}, "the leading 2-series coefficient is detected by tbar*mubar^N"});
	for (int j = 1; j <= n + 1; ++j)
		d.push_back({t_exp(1, 1 << (j - 1)), {{"tbar", 1 << (j - 1)}, {"lambar" + std::to_string(j), 1}},
					 "power of t1 detected by tbar^(2^(j-1))*lambar_j"});
	return d;
}

static const Detection& detect(const std::vector<Detection>& det, const Exps& c)
{
	for (auto& d : det)
		if (d.coefficient == c)
			return d;
	throw std::runtime_error("no detection configured for a series coefficient");
}

static int f_of(const std::map<std::string, int>& m)
{
	auto it = m.find("tbar");
	return it == m.end() ? 0 : it->second;
}

std::vector<DifferentialRule> differential_seeds(int n)
{
	if (n < -1 || n > 2)
		throw std::out_of_range("differential seeds are configured for -1 <= n <= 2");
	int N = 1 << (n + 1);
	auto det = default_detection(n);
	std::vector<DifferentialRule> rules;

	/* leading coefficient of the 2-series mod (v0..vn) */
	Exps lead;
	if (n == -1) {
		QSeries L = log_series(4);
		QSeries twoL = L;
		for (auto& c : twoL)
			c = q_scale(c, 2);
		QSeries s = series_compose(exp_series(4), twoL, 4);
		if (!(s[1] == q_const(2)))
			throw std::logic_error("2-series does not start with 2x");
	}
	else {
		std::vector<int> ideal;
		for (int i = 0; i <= n; ++i)
			ideal.push_back(i);
		auto s = two_series(ideal, N + 2);
		if (s.leading() != N || s.coeff(N).size() != 1)
			throw std::logic_error("unexpected leading term of the 2-series");
		lead = *s.coeff(N).begin();
	}
	const Detection& dv = detect(det, lead);
	DifferentialRule eps{0, "epsbar" + std::to_string(n + 1), 1, {RuleTerm{M2Basis::one(), dv.detected_by}}, dv.note};
	eps.page = f_of(dv.detected_by); /* the source sits in Nygaard filtration 0 */
	rules.push_back(eps);

	/* eta_R(tbar)^{2^{j-1}} - tbar^{2^{j-1}}: lowest term chi(t1)^{2^{j-1}} tbar^{2^j} */
	for (int j = 1; j <= n + 1; ++j) {
		int s = 1 << (j - 1);
		int trunc = (1 << j) + 1;
		auto eta = right_unit_t(trunc);
		std::vector<F2Poly> pw(trunc);
		pw[0] = {Exps(2 * K, 0)};
		for (int k = 0; k < s; ++k) {
			std::vector<F2Poly> nx(trunc);
			for (int a = 0; a < trunc; ++a)
				for (int b = 0; a + b < trunc; ++b)
					if (!pw[a].empty() && !eta.coeffs[b].empty())
						nx[a + b] = f2_add(nx[a + b], f2_mul(pw[a], eta.coeffs[b]));
			pw = nx;
		}
		pw[s] = f2_add(pw[s], {Exps(2 * K, 0)});
		int e = -1;
		for (int k = 0; k < trunc; ++k)
			if (!pw[k].empty()) {
				e = k;
				break;
			}
		if (e < 0 || pw[e].size() != 1)
			throw std::logic_error("unexpected shape of the right unit");
		const Detection& dt = detect(det, *pw[e].begin());
		std::map<std::string, int> tgt = dt.detected_by;
		tgt["tbar"] += e;
		DifferentialRule r{0, "tbar", s, {RuleTerm{M2Basis::one(), tgt}}, dt.note};
		r.page = f_of(tgt) - s;
		rules.push_back(r);
	}
	return rules;
}

}  // namespace rsyn::fgl
