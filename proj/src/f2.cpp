#include "rsyn/f2.hpp"

#include <bit>
#include <stdexcept>

namespace rsyn {

BitVec& BitVec::operator^=(const BitVec& o)
{
	if (o.n_ != n_)
		throw std::logic_error("BitVec size mismatch");
	for (size_t i = 0; i < w_.size(); ++i)
		w_[i] ^= o.w_[i];
	return *this;
}

bool BitVec::is_zero() const
{
	for (auto x : w_)
		if (x)
			return false;
	return true;
}

int BitVec::lowest() const
{
	for (size_t i = 0; i < w_.size(); ++i)
		if (w_[i])
			return int(i * 64 + std::countr_zero(w_[i]));
	return -1;
}

int BitVec::count() const
{
	int c = 0;
	for (auto x : w_)
		c += std::popcount(x);
	return c;
}

std::vector<int> BitVec::support() const
{
	std::vector<int> s;
	for (size_t i = 0; i < w_.size(); ++i) {
		uint64_t x = w_[i];
		while (x) {
			s.push_back(int(i * 64 + std::countr_zero(x)));
			x &= x - 1;
		}
	}
	return s;
}

std::string BitVec::str() const
{
	std::string s(n_, '0');
	for (size_t i = 0; i < n_; ++i)
		if (test(i))
			s[i] = '1';
	return s;
}

Echelon::Reduced Echelon::reduce(const BitVec& v) const
{
	Reduced r{v, BitVec(tag_dim_)};
	/* rows sorted by pivot; xor with a row never touches lower bits */
	for (auto& [p, row] : rows_)
		if (r.rem.test(p)) {
			r.rem ^= row.first;
			r.tag ^= row.second;
		}
	return r;
}

bool Echelon::insert(const BitVec& v, const BitVec& tag, BitVec* dep)
{
	Reduced r = reduce(v);
	r.tag ^= tag;
	int p = r.rem.lowest();
	if (p < 0) {
		if (dep)
			*dep = r.tag;
		return false;
	}
	rows_.emplace(p, std::make_pair(std::move(r.rem), std::move(r.tag)));
	return true;
}

std::vector<int> Echelon::pivots() const
{
	std::vector<int> ps;
	for (auto& [p, _] : rows_)
		ps.push_back(p);
	return ps;
}

std::vector<BitVec> kernel(const std::vector<BitVec>& images, size_t target_dim)
{
	Echelon e(target_dim, images.size());
	std::vector<BitVec> ker;
	for (size_t i = 0; i < images.size(); ++i) {
		BitVec dep;
		if (!e.insert(images[i], BitVec::unit(images.size(), i), &dep))
			ker.push_back(std::move(dep));
	}
	return ker;
}

size_t rank_of(const std::vector<BitVec>& vecs, size_t dim)
{
	Echelon e(dim, 0);
	for (auto& v : vecs)
		e.insert(v);
	return e.rank();
}

}  // namespace rsyn
