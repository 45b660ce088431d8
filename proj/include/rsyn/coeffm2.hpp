#pragma once

#include <functional>
#include <optional>
#include <string>

#include "rsyn/rocgrade.hpp"

namespace rsyn {

/* Basis element of M2 = pi_*^{C2} HF2.
 * positive cone: u^i a^j, degree (i, -i-j)
 * negative cone: theta/(u^j a^k), degree (-2-j, 2+j+k) */
struct M2Basis
{
	enum Cone : int8_t { Pos = 0, Neg = 1 };
	Cone cone = Pos;
	int p = 0; /* Pos: i (u exponent); Neg: j (u divisibility) */
	int q = 0; /* Pos: j (a exponent); Neg: k (a divisibility) */

	static constexpr M2Basis one() { return {Pos, 0, 0}; }
	static constexpr M2Basis pos(int i, int j) { return {Pos, i, j}; }
	static constexpr M2Basis neg(int j, int k) { return {Neg, j, k}; }
	bool is_one() const { return cone == Pos && p == 0 && q == 0; }

	RODegree degree() const;
	std::string str() const;
	constexpr auto operator<=>(const M2Basis&) const = default;
};

inline constexpr M2Basis U_SIGMA = M2Basis::pos(1, 0);
inline constexpr M2Basis A_SIGMA = M2Basis::pos(0, 1);
inline constexpr M2Basis THETA = M2Basis::neg(0, 0);

std::optional<M2Basis> m2_basis_at(RODegree V);
inline int m2_rank(RODegree V) { return m2_basis_at(V) ? 1 : 0; }
std::optional<M2Basis> m2_mul(const M2Basis& x, const M2Basis& y);

/* true iff rank(k*rho - i) = 0 for i = 1,2,3 and |k| <= kmax */
bool strongly_even_gap(const std::function<int(RODegree)>& rank, int kmax);

/* underlying restriction: u -> 1, a -> 0, negative cone -> 0 */
bool m2_restricts_to_unit(const M2Basis& x);

void to_json(nlohmann::json& j, const M2Basis& x);
void from_json(const nlohmann::json& j, M2Basis& x);

}  // namespace rsyn
