#pragma once

#include <compare>
#include <string>

#include <json.hpp>

namespace rsyn {

/* a*1 + b*sigma in RO(C2) */
struct RODegree
{
	int a = 0;
	int b = 0;

	constexpr RODegree operator+(const RODegree& o) const { return {a + o.a, b + o.b}; }
	constexpr RODegree operator-(const RODegree& o) const { return {a - o.a, b - o.b}; }
	constexpr RODegree operator-() const { return {-a, -b}; }
	constexpr RODegree operator*(int k) const { return {a * k, b * k}; }
	RODegree& operator+=(const RODegree& o) { a += o.a; b += o.b; return *this; }
	RODegree& operator-=(const RODegree& o) { a -= o.a; b -= o.b; return *this; }
	constexpr auto operator<=>(const RODegree&) const = default;

	constexpr int underlying() const { return a + b; }
	constexpr int fixed() const { return a; }
};

inline constexpr RODegree RHO{1, 1};
inline constexpr RODegree SIGMA{0, 1};
inline constexpr RODegree ONE{1, 0};

/* (stem V, motivic index m, Nygaard filtration f). The Adams weight is derived. */
struct TriDegree
{
	RODegree V;
	int m = 0;
	int f = 0;

	constexpr TriDegree operator+(const TriDegree& o) const { return {V + o.V, m + o.m, f + o.f}; }
	constexpr TriDegree operator-(const TriDegree& o) const { return {V - o.V, m - o.m, f - o.f}; }
	constexpr TriDegree operator*(int k) const { return {V * k, m * k, f * k}; }
	TriDegree& operator+=(const TriDegree& o) { V += o.V; m += o.m; f += o.f; return *this; }
	constexpr auto operator<=>(const TriDegree&) const = default;
};

struct AdamsWeight
{
	RODegree w;     /* m*rho - V */
	bool integral;  /* w.b == 0 */
	int value() const { return w.a; }
};

RODegree ro_add(RODegree x, RODegree y);
AdamsWeight adams_weight(const TriDegree& d);
/* d_r : (V, m, f) -> (V - 1, m, f + r) */
TriDegree differential_target(const TriDegree& d, int r);

/* "2ρ-1" style label; falls back to "a+bσ" form */
std::string ro_label(RODegree V);
std::string to_string(RODegree V);
std::string to_string(const TriDegree& d);

void to_json(nlohmann::json& j, const RODegree& d);
void from_json(const nlohmann::json& j, RODegree& d);
void to_json(nlohmann::json& j, const TriDegree& d);
void from_json(const nlohmann::json& j, TriDegree& d);

}  // namespace rsyn

template <>
struct std::hash<rsyn::TriDegree>
{
	size_t operator()(const rsyn::TriDegree& d) const noexcept
	{
		size_t h = (size_t)(uint32_t)d.V.a;
		h = h * 1000003u ^ (size_t)(uint32_t)d.V.b;
		h = h * 1000003u ^ (size_t)(uint32_t)d.m;
		h = h * 1000003u ^ (size_t)(uint32_t)d.f;
		return h;
	}
};
