#include "rsyn/rocgrade.hpp"

#include <stdexcept>

namespace rsyn {

RODegree ro_add(RODegree x, RODegree y)
{
	return x + y;
}

AdamsWeight adams_weight(const TriDegree& d)
{
	RODegree w = RHO * d.m - d.V;
	return {w, w.b == 0};
}

TriDegree differential_target(const TriDegree& d, int r)
{
	if (r < 1)
		throw std::invalid_argument("differential page must be >= 1");
	return {d.V - ONE, d.m, d.f + r};
}

std::string ro_label(RODegree V)
{
	/* V = k*rho - j with k = b */
	int k = V.b, j = V.b - V.a;
	if (k == 0)
		return std::to_string(-j);
	std::string s = k == 1 ? "ρ" : k == -1 ? "-ρ" : std::to_string(k) + "ρ";
	if (j > 0)
		s += "-" + std::to_string(j);
	else if (j < 0)
		s += "+" + std::to_string(-j);
	return s;
}

std::string to_string(RODegree V)
{
	return "(" + std::to_string(V.a) + "," + std::to_string(V.b) + ")";
}

std::string to_string(const TriDegree& d)
{
	return "{V=" + to_string(d.V) + ",m=" + std::to_string(d.m) + ",f=" + std::to_string(d.f) + "}";
}

void to_json(nlohmann::json& j, const RODegree& d)
{
	j = nlohmann::json::array({d.a, d.b});
}

void from_json(const nlohmann::json& j, RODegree& d)
{
	d.a = j.at(0).get<int>();
	d.b = j.at(1).get<int>();
}

void to_json(nlohmann::json& j, const TriDegree& d)
{
	j = nlohmann::json{{"V", d.V}, {"m", d.m}, {"f", d.f}};
}

void from_json(const nlohmann::json& j, TriDegree& d)
{
	d.V = j.at("V").get<RODegree>();
	d.m = j.at("m").get<int>();
	d.f = j.value("f", 0);
}

}  // namespace rsyn
