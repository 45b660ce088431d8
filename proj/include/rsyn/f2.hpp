#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rsyn {

/* dense vector over F2 */
class BitVec
{
public:
	BitVec() = default;
	explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}
	static BitVec unit(size_t n, size_t i)
	{
		BitVec v(n);
		v.set(i);
		return v;
	}

	size_t size() const { return n_; }
	bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
	void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
	void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }
	BitVec& operator^=(const BitVec& o);
	BitVec operator^(const BitVec& o) const
	{
		BitVec r(*this);
		r ^= o;
		return r;
	}
	bool is_zero() const;
	/* index of lowest set bit, -1 if zero */
	int lowest() const;
	int count() const;
	std::vector<int> support() const;
	bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
	std::string str() const;

private:
	size_t n_ = 0;
	std::vector<uint64_t> w_;
};

/* Row echelon form keyed by lowest-bit pivots; each row carries a tag recording
 * which inserted vectors it is a combination of. */
class Echelon
{
public:
	Echelon() = default;
	Echelon(size_t dim, size_t tag_dim) : dim_(dim), tag_dim_(tag_dim) {}

	struct Reduced
	{
		BitVec rem;
		BitVec tag;
	};

	/* reduce v; the returned tag is the combination of rows used */
	Reduced reduce(const BitVec& v) const;
	/* inserts v with the given tag; returns false (and the dependency in dep) if v is in the span */
	bool insert(const BitVec& v, const BitVec& tag, BitVec* dep = nullptr);
	bool insert(const BitVec& v) { return insert(v, BitVec(tag_dim_)); }

	size_t rank() const { return rows_.size(); }
	size_t dim() const { return dim_; }
	bool contains(const BitVec& v) const { return reduce(v).rem.is_zero(); }
	std::vector<int> pivots() const;
	const std::map<int, std::pair<BitVec, BitVec>>& rows() const { return rows_; }

private:
	size_t dim_ = 0;
	size_t tag_dim_ = 0;
	std::map<int, std::pair<BitVec, BitVec>> rows_; /* pivot -> (row, tag) */
};

/* kernel of the map e_i -> images[i]; each kernel vector lives in F2^{images.size()} */
std::vector<BitVec> kernel(const std::vector<BitVec>& images, size_t target_dim);
size_t rank_of(const std::vector<BitVec>& vecs, size_t dim);

}  // namespace rsyn
