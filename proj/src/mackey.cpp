#include "rsyn/mackey.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace rsyn {

IntMat int_identity(size_t n)
{
	IntMat I(n, std::vector<long long>(n, 0));
	for (size_t i = 0; i < n; ++i)
		I[i][i] = 1;
	return I;
}

IntMat int_mul(const IntMat& A, const IntMat& B, size_t inner)
{
	size_t rows = A.size();
	size_t cols = B.empty() ? 0 : B[0].size();
	if (inner == 0 && !B.empty())
		throw std::logic_error("int_mul: inconsistent shapes");
	IntMat C(rows, std::vector<long long>(cols, 0));
	for (size_t i = 0; i < rows; ++i)
		for (size_t k = 0; k < inner; ++k)
			if (A[i][k])
				for (size_t j = 0; j < cols; ++j)
					C[i][j] += A[i][k] * B[k][j];
	return C;
}

static IntMat zeros(size_t r, size_t c)
{
	return IntMat(r, std::vector<long long>(c, 0));
}

static long long mod_pos(long long x, long long m)
{
	long long r = x % m;
	return r < 0 ? r + m : r;
}

std::string AbelianGroup::str() const
{
	std::string s;
	auto add = [&](const std::string& t) { s += (s.empty() ? "" : "+") + t; };
	if (rank == 1)
		add("Z");
	else if (rank > 1)
		add("Z^" + std::to_string(rank));
	for (auto t : torsion)
		add("Z/" + std::to_string(t));
	return s.empty() ? "0" : s;
}

IntMat normalize_hom(const IntMat& A, const AbelianGroup& target, size_t cols)
{
	IntMat R = A;
	R.resize(target.ngens(), std::vector<long long>(cols, 0));
	for (size_t i = 0; i < target.ngens(); ++i) {
		R[i].resize(cols, 0);
		if (long long m = target.modulus(i))
			for (auto& x : R[i])
				x = mod_pos(x, m);
	}
	return R;
}

bool hom_equal(const IntMat& A, const IntMat& B, const AbelianGroup& target, size_t cols)
{
	return normalize_hom(A, target, cols) == normalize_hom(B, target, cols);
}

static bool well_defined(const IntMat& A, const AbelianGroup& src, const AbelianGroup& tgt)
{
	for (size_t j = 0; j < src.ngens(); ++j) {
		long long c = src.modulus(j);
		if (!c)
			continue;
		for (size_t i = 0; i < tgt.ngens(); ++i) {
			long long m = tgt.modulus(i);
			long long v = c * A[i][j];
			if (m ? mod_pos(v, m) != 0 : v != 0)
				return false;
		}
	}
	return true;
}

bool MackeyFunctor::check(std::string* why) const
{
	auto fail = [&](const char* s) {
		if (why)
			*why = s;
		return false;
	};
	size_t f = fixed.ngens(), u = underlying.ngens();
	if (res.size() != u || tr.size() != f || conj.size() != u)
		return fail("matrix shape");
	if (!well_defined(res, fixed, underlying) || !well_defined(tr, underlying, fixed) || !well_defined(conj, underlying, underlying))
		return fail("ill-defined homomorphism");
	IntMat I = int_identity(u);
	if (!hom_equal(int_mul(conj, conj, u), I, underlying, u))
		return fail("conj^2 != 1");
	IntMat one_plus = I;
	for (size_t i = 0; i < u; ++i)
		for (size_t j = 0; j < u; ++j)
			one_plus[i][j] += conj[i][j];
	if (!hom_equal(int_mul(res, tr, f), one_plus, underlying, u))
		return fail("res tr != 1 + conj");
	if (!hom_equal(int_mul(conj, res, u), res, underlying, f))
		return fail("conj res != res");
	if (!hom_equal(int_mul(tr, conj, u), tr, fixed, u))
		return fail("tr conj != tr");
	return true;
}

bool MackeyFunctor::is_constant() const
{
	if (!(fixed == underlying))
		return false;
	size_t n = fixed.ngens();
	return hom_equal(res, int_identity(n), underlying, n) && hom_equal(conj, int_identity(n), underlying, n);
}

MackeyFunctor constant(const AbelianGroup& B)
{
	size_t n = B.ngens();
	MackeyFunctor M{B, B, int_identity(n), int_identity(n), int_identity(n)};
	for (size_t i = 0; i < n; ++i)
		M.tr[i][i] = 2;
	M.tr = normalize_hom(M.tr, B, n);
	return M;
}

MackeyFunctor burnside()
{
	/* A(C2) = Z{1, [C2]}, A(e) = Z */
	MackeyFunctor M;
	M.fixed = {2, {}};
	M.underlying = AbelianGroup::Z();
	M.res = {{1, 2}};
	M.tr = {{0}, {1}};
	M.conj = {{1}};
	return M;
}

MackeyFunctor zero_mackey()
{
	return {AbelianGroup::zero(), AbelianGroup::zero(), {}, {}, {}};
}

SmithForm smith_normal_form(const IntMat& A, size_t m, size_t n)
{
	SmithForm S{int_identity(m), int_identity(n), A, m, n};
	IntMat& D = S.D;
	D.resize(m, std::vector<long long>(n, 0));
	auto row_sub = [&](size_t i, size_t t, long long q) { /* row_i -= q row_t */
		if (!q)
			return;
		for (size_t j = 0; j < n; ++j)
			D[i][j] -= q * D[t][j];
		for (size_t j = 0; j < m; ++j)
			S.U[i][j] -= q * S.U[t][j];
	};
	auto col_sub = [&](size_t j, size_t t, long long q) {
		if (!q)
			return;
		for (size_t i = 0; i < m; ++i)
			D[i][j] -= q * D[i][t];
		for (size_t i = 0; i < n; ++i)
			S.V[i][j] -= q * S.V[i][t];
	};
	auto swap_rows = [&](size_t i, size_t k) {
		std::swap(D[i], D[k]);
		std::swap(S.U[i], S.U[k]);
	};
	auto swap_cols = [&](size_t j, size_t k) {
		for (size_t i = 0; i < m; ++i)
			std::swap(D[i][j], D[i][k]);
		for (size_t i = 0; i < n; ++i)
			std::swap(S.V[i][j], S.V[i][k]);
	};

	for (size_t t = 0; t < std::min(m, n); ++t) {
		for (;;) {
			/* smallest nonzero entry of the lower-right block goes to (t,t) */
			size_t bi = m, bj = n;
			for (size_t i = t; i < m; ++i)
				for (size_t j = t; j < n; ++j)
					if (D[i][j] && (bi == m || std::llabs(D[i][j]) < std::llabs(D[bi][bj])))
						bi = i, bj = j;
			if (bi == m)
				return S;
			swap_rows(t, bi);
			swap_cols(t, bj);
			bool clean = true;
			for (size_t i = t + 1; i < m; ++i) {
				row_sub(i, t, D[i][t] / D[t][t]);
				clean &= D[i][t] == 0;
			}
			for (size_t j = t + 1; j < n; ++j) {
				col_sub(j, t, D[t][j] / D[t][t]);
				clean &= D[t][j] == 0;
			}
			if (!clean)
				continue;
			bool divides = true;
			for (size_t i = t + 1; i < m && divides; ++i)
				for (size_t j = t + 1; j < n; ++j)
					if (D[i][j] % D[t][t]) {
						row_sub(t, i, -1);
						divides = false;
						break;
					}
			if (divides)
				break;
		}
		if (D[t][t] < 0) {
			for (auto& x : D[t])
				x = -x;
			for (auto& x : S.U[t])
				x = -x;
		}
	}
	return S;
}

/* inverse of a unimodular matrix by exact Gauss-Jordan over Z (pivots are units) */
static IntMat unimodular_inverse(const IntMat& A, size_t n)
{
	SmithForm S = smith_normal_form(A, n, n);
	/* U A V = I  =>  A^{-1} = V U */
	for (size_t i = 0; i < n; ++i)
		if (S.D[i][i] != 1)
			throw std::logic_error("matrix is not unimodular");
	return int_mul(S.V, S.U, n);
}

MackeyFunctor f1_sub(const MackeyFunctor& M)
{
	size_t k = M.fixed.ngens(), u = M.underlying.ngens();
	if (u == 0)
		return zero_mackey();
	size_t r = size_t(M.fixed.rank), s = M.fixed.torsion.size();

	/* H = span(tr) + relations inside Z^k; the new fixed level is H / relations */
	IntMat Mt = zeros(k, u + s);
	for (size_t i = 0; i < k; ++i)
		for (size_t j = 0; j < u; ++j)
			Mt[i][j] = M.tr[i][j];
	for (size_t q = 0; q < s; ++q)
		Mt[r + q][u + q] = M.fixed.torsion[q];
	SmithForm S1 = smith_normal_form(Mt, k, u + s);
	size_t t = 0;
	while (t < std::min(k, u + s) && S1.D[t][t])
		++t;
	IntMat Uinv = unimodular_inverse(S1.U, k);

	IntMat B = zeros(k, t); /* basis of H */
	for (size_t i = 0; i < k; ++i)
		for (size_t c = 0; c < t; ++c)
			B[i][c] = Uinv[i][c] * S1.D[c][c];

	/* relations in B-coordinates */
	IntMat L = zeros(k, s);
	for (size_t q = 0; q < s; ++q)
		L[r + q][q] = M.fixed.torsion[q];
	IntMat UL = int_mul(S1.U, L, k);
	IntMat X = zeros(t, s);
	for (size_t c = 0; c < t; ++c)
		for (size_t q = 0; q < s; ++q)
			X[c][q] = UL[c][q] / S1.D[c][c];
	IntMat UT = int_mul(S1.U, M.tr, k);
	IntMat C = zeros(t, u);
	for (size_t c = 0; c < t; ++c)
		for (size_t j = 0; j < u; ++j)
			C[c][j] = UT[c][j] / S1.D[c][c];

	SmithForm S2 = smith_normal_form(X, t, s);
	size_t t2 = 0;
	while (t2 < std::min(t, s) && S2.D[t2][t2])
		++t2;
	IntMat U2inv = t ? unimodular_inverse(S2.U, t) : IntMat{};
	IntMat G = t ? int_mul(B, U2inv, t) : zeros(k, 0); /* generators of H/L, in Z^k */
	IntMat C2 = t ? int_mul(S2.U, C, t) : zeros(0, u);

	std::vector<size_t> keep; /* free generators first, then torsion */
	MackeyFunctor R;
	R.underlying = M.underlying;
	R.conj = M.conj;
	for (size_t c = t2; c < t; ++c) {
		keep.push_back(c);
		R.fixed.rank++;
	}
	for (size_t c = 0; c < t2; ++c)
		if (S2.D[c][c] != 1) {
			keep.push_back(c);
			R.fixed.torsion.push_back(S2.D[c][c]);
		}

	size_t h = keep.size();
	R.res = zeros(u, h);
	R.tr = zeros(h, u);
	for (size_t c = 0; c < h; ++c) {
		for (size_t i = 0; i < u; ++i)
			for (size_t l = 0; l < k; ++l)
				R.res[i][c] += M.res[i][l] * G[l][keep[c]];
		for (size_t j = 0; j < u; ++j)
			R.tr[c][j] = C2[keep[c]][j];
	}
	R.res = normalize_hom(R.res, R.underlying, h);
	R.tr = normalize_hom(R.tr, R.fixed, u);
	return R;
}

std::vector<SliceEntry> slice_graded(const SliceTable& t, bool strongly_even)
{
	std::vector<SliceEntry> out;
	for (int k = t.kmin; k <= t.kmax; ++k) {
		if (!strongly_even) {
			auto it = t.odd.find(k);
			if (it != t.odd.end()) {
				MackeyFunctor F = f1_sub(it->second);
				if (!F.is_zero())
					out.push_back({2 * k - 1, F, RHO * k - ONE});
			}
		}
		auto it = t.even.find(k);
		if (it != t.even.end() && !it->second.is_zero())
			out.push_back({2 * k, constant(it->second), RHO * k});
	}
	for (auto& [k, _] : t.even)
		if (k < t.kmin || k > t.kmax)
			throw std::out_of_range("slice table entry outside its declared window");
	return out;
}

nlohmann::json to_json(const AbelianGroup& G)
{
	return {{"rank", G.rank}, {"torsion", G.torsion}};
}

nlohmann::json to_json(const MackeyFunctor& M)
{
	return {{"fixed", to_json(M.fixed)}, {"underlying", to_json(M.underlying)}, {"res", M.res}, {"tr", M.tr}, {"conj", M.conj}};
}

}  // namespace rsyn
