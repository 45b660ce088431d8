#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsyn/rocgrade.hpp"

namespace rsyn {

using IntMat = std::vector<std::vector<long long>>; /* row-major, rows x cols */

IntMat int_identity(size_t n);
IntMat int_mul(const IntMat& A, const IntMat& B, size_t inner);

/* Z^rank + Z/t_1 + ... ; generators are the free ones first, then the torsion ones */
struct AbelianGroup
{
	int rank = 0;
	std::vector<long long> torsion;

	size_t ngens() const { return size_t(rank) + torsion.size(); }
	bool is_zero() const { return rank == 0 && torsion.empty(); }
	/* modulus of generator i, 0 for free */
	long long modulus(size_t i) const { return i < size_t(rank) ? 0 : torsion[i - rank]; }
	std::string str() const;
	bool operator==(const AbelianGroup&) const = default;

	static AbelianGroup Z() { return {1, {}}; }
	static AbelianGroup F2() { return {0, {2}}; }
	static AbelianGroup zero() { return {0, {}}; }
};

/* a C2 Mackey functor; res: fixed -> underlying, tr: underlying -> fixed, conj on underlying */
struct MackeyFunctor
{
	AbelianGroup fixed;
	AbelianGroup underlying;
	IntMat res;  /* underlying.ngens x fixed.ngens */
	IntMat tr;   /* fixed.ngens x underlying.ngens */
	IntMat conj; /* underlying.ngens x underlying.ngens */

	bool is_zero() const { return fixed.is_zero() && underlying.is_zero(); }
	/* checks well-definedness, conj^2 = 1, res tr = 1 + conj, conj res = res, tr conj = tr */
	bool check(std::string* why = nullptr) const;
	bool is_constant() const;
};

/* reduce row i of a homomorphism matrix modulo the target's torsion */
IntMat normalize_hom(const IntMat& A, const AbelianGroup& target, size_t cols);
bool hom_equal(const IntMat& A, const IntMat& B, const AbelianGroup& target, size_t cols);

MackeyFunctor constant(const AbelianGroup& B);
MackeyFunctor burnside();
MackeyFunctor zero_mackey();
/* sub-functor generated by the underlying level: fixed level becomes image(tr) */
MackeyFunctor f1_sub(const MackeyFunctor& M);

struct SliceTable
{
	int kmin = 0, kmax = -1;                    /* declared window */
	std::map<int, AbelianGroup> even;           /* k -> pi^e_{2k} */
	std::map<int, MackeyFunctor> odd;           /* k -> pi_{k rho - 1} (parity data) */
};

struct SliceEntry
{
	int n;              /* slice index */
	MackeyFunctor M;
	RODegree suspension;
};

std::vector<SliceEntry> slice_graded(const SliceTable& t, bool strongly_even);

/* Smith normal form: U*A*V = D; exposed for tests */
struct SmithForm
{
	IntMat U, V, D;
	size_t rows, cols;
};
SmithForm smith_normal_form(const IntMat& A, size_t rows, size_t cols);

nlohmann::json to_json(const AbelianGroup& G);
nlohmann::json to_json(const MackeyFunctor& M);

}  // namespace rsyn
