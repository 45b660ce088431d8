#include "rsyn/coeffm2.hpp"

#include <stdexcept>

namespace rsyn {

RODegree M2Basis::degree() const
{
	if (cone == Pos)
		return {p, -p - q};
	return {-2 - p, 2 + p + q};
}

static std::string power(const char* s, int e)
{
	if (e == 0)
		return "";
	if (e == 1)
		return s;
	return std::string(s) + "^" + std::to_string(e);
}

std::string M2Basis::str() const
{
	if (cone == Pos) {
		if (p == 0 && q == 0)
			return "1";
		std::string s = power("u", p);
		if (q)
			s += (s.empty() ? "" : "*") + power("a", q);
		return s;
	}
	if (p == 0 && q == 0)
		return "theta";
	std::string den = power("u", p);
	if (q)
		den += (den.empty() ? "" : "*") + power("a", q);
	return "theta/(" + den + ")";
}

std::optional<M2Basis> m2_basis_at(RODegree V)
{
	if (V.a >= 0 && V.a + V.b <= 0)
		return M2Basis::pos(V.a, -V.a - V.b);
	if (V.a <= -2 && V.a + V.b >= 0)
		return M2Basis::neg(-2 - V.a, V.a + V.b);
	return std::nullopt;
}

std::optional<M2Basis> m2_mul(const M2Basis& x, const M2Basis& y)
{
	if (x.cone == M2Basis::Pos && y.cone == M2Basis::Pos)
		return M2Basis::pos(x.p + y.p, x.q + y.q);
	if (x.cone == M2Basis::Neg && y.cone == M2Basis::Neg)
		return std::nullopt;
	const M2Basis& P = x.cone == M2Basis::Pos ? x : y;
	const M2Basis& N = x.cone == M2Basis::Pos ? y : x;
	if (N.p >= P.p && N.q >= P.q)
		return M2Basis::neg(N.p - P.p, N.q - P.q);
	return std::nullopt;
}

bool strongly_even_gap(const std::function<int(RODegree)>& rank, int kmax)
{
	for (int k = -kmax; k <= kmax; ++k)
		for (int i = 1; i <= 3; ++i)
			if (rank(RHO * k - ONE * i) != 0)
				return false;
	return true;
}

bool m2_restricts_to_unit(const M2Basis& x)
{
	return x.cone == M2Basis::Pos && x.q == 0;
}

void to_json(nlohmann::json& j, const M2Basis& x)
{
	if (x.cone == M2Basis::Pos)
		j = nlohmann::json{{"cone", "pos"}, {"i", x.p}, {"j", x.q}};
	else
		j = nlohmann::json{{"cone", "neg"}, {"j", x.p}, {"k", x.q}};
}

void from_json(const nlohmann::json& j, M2Basis& x)
{
	std::string c = j.at("cone").get<std::string>();
	if (c == "pos")
		x = M2Basis::pos(j.at("i").get<int>(), j.at("j").get<int>());
	else if (c == "neg")
		x = M2Basis::neg(j.at("j").get<int>(), j.at("k").get<int>());
	else
		throw std::invalid_argument("unknown M2 cone '" + c + "'");
	if (x.p < 0 || x.q < 0)
		throw std::invalid_argument("negative M2 exponent");
}

}  // namespace rsyn
