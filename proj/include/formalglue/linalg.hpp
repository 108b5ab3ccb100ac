#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace formalglue {

// Dense matrix over an exact field; plain Gauss-Jordan, deterministic pivots.
template <class K>
class Matrix {
public:
	Matrix() : r_(0), c_(0) {}
	Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
	Matrix(int rows, int cols, K one) : Matrix(rows, cols) { one_ = std::move(one); }

	static Matrix from_columns(int rows, const std::vector<std::vector<K>>& cols)
	{
		Matrix m(rows, static_cast<int>(cols.size()));
		for (int j = 0; j < m.c_; ++j) {
			assert(static_cast<int>(cols[j].size()) == rows);
			for (int i = 0; i < rows; ++i)
				m.at(i, j) = cols[j][i];
		}
		return m;
	}

	int rows() const { return r_; }
	int cols() const { return c_; }

	K& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
	const K& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

	// reduced row echelon form in place; returns the pivot columns
	std::vector<int> rref()
	{
		std::vector<int> pivots;
		int row = 0;
		for (int col = 0; col < c_ && row < r_; ++col) {
			int p = -1;
			for (int i = row; i < r_; ++i)
				if (!at(i, col).is_zero()) {
					p = i;
					break;
				}
			if (p < 0)
				continue;
			if (p != row)
				for (int j = 0; j < c_; ++j)
					std::swap(at(p, j), at(row, j));
			K inv = at(row, col).inv();
			for (int j = col; j < c_; ++j)
				at(row, j) *= inv;
			for (int i = 0; i < r_; ++i) {
				if (i == row || at(i, col).is_zero())
					continue;
				K f = at(i, col);
				for (int j = col; j < c_; ++j)
					at(i, j) -= f * at(row, j);
			}
			pivots.push_back(col);
			++row;
		}
		return pivots;
	}

	int rank() const
	{
		Matrix m = *this;
		return static_cast<int>(m.rref().size());
	}

	// one solution of A x = b, if any
	std::optional<std::vector<K>> solve(const std::vector<K>& b) const
	{
		assert(static_cast<int>(b.size()) == r_);
		Matrix aug(r_, c_ + 1);
		for (int i = 0; i < r_; ++i) {
			for (int j = 0; j < c_; ++j)
				aug.at(i, j) = at(i, j);
			aug.at(i, c_) = b[i];
		}
		std::vector<int> piv = aug.rref();
		if (!piv.empty() && piv.back() == c_)
			return std::nullopt;
		std::vector<K> x(c_);
		for (size_t k = 0; k < piv.size(); ++k)
			x[piv[k]] = aug.at(static_cast<int>(k), c_);
		return x;
	}

	// basis of the null space, one vector per free column
	std::vector<std::vector<K>> kernel_basis() const
	{
		Matrix m = *this;
		std::vector<int> piv = m.rref();
		std::vector<int> pivot_of_col(c_, -1);
		for (size_t k = 0; k < piv.size(); ++k)
			pivot_of_col[piv[k]] = static_cast<int>(k);
		std::vector<std::vector<K>> out;
		for (int col = 0; col < c_; ++col) {
			if (pivot_of_col[col] >= 0)
				continue;
			std::vector<K> v(c_);
			v[col] = unit_like();
			for (size_t k = 0; k < piv.size(); ++k)
				if (!m.at(static_cast<int>(k), col).is_zero())
					v[piv[k]] = -m.at(static_cast<int>(k), col);
			out.push_back(std::move(v));
		}
		return out;
	}

	// the span of our columns contains v
	bool span_contains(const std::vector<K>& v) const
	{
		return solve(v).has_value();
	}

	friend Matrix operator*(const Matrix& a, const Matrix& b)
	{
		assert(a.c_ == b.r_);
		Matrix r(a.r_, b.c_, a.one_);
		for (int i = 0; i < a.r_; ++i)
			for (int k = 0; k < a.c_; ++k) {
				if (a.at(i, k).is_zero())
					continue;
				for (int j = 0; j < b.c_; ++j)
					r.at(i, j) += a.at(i, k) * b.at(k, j);
			}
		return r;
	}

	friend bool operator==(const Matrix& a, const Matrix& b)
	{
		return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
	}

private:
	// multiplicative identity with the right field context, taken from any entry
	K unit_like() const
	{
		for (const auto& x : a_)
			if (!x.is_zero())
				return x.one_like();
		return one_;
	}

	int r_, c_;
	std::vector<K> a_;
	K one_;
};

// rank of a list of coordinate vectors
template <class K>
int rank_of_vectors(const std::vector<std::vector<K>>& vecs, int dim)
{
	Matrix<K> m = Matrix<K>::from_columns(dim, vecs);
	return m.rank();
}

} // namespace formalglue
