#pragma once

#include <cassert>
#include <string>

#include "errors.hpp"

namespace formalglue {

// Scalar in F_p. Each element carries its modulus; the default-constructed
// element is an unattached zero that combines with any modulus.
class PrimeField {
public:
	PrimeField() : v_(0), p_(0) {}
	PrimeField(long v, long p) : v_(v), p_(p)
	{
		assert(p > 1);
		v_ %= p_;
		if (v_ < 0)
			v_ += p_;
	}

	static PrimeField from_long(long n, const PrimeField& like)
	{
		assert(like.p_ > 0);
		return PrimeField(n, like.p_);
	}

	static PrimeField from_ratio(long num, long den, const PrimeField& like)
	{
		PrimeField d = from_long(den, like);
		if (d.is_zero())
			fail(ErrorCode::BadField, "denominator " + std::to_string(den) + " vanishes mod " + std::to_string(like.p_));
		return from_long(num, like) * d.inv();
	}

	PrimeField one_like() const
	{
		assert(p_ > 0);
		return PrimeField(1, p_);
	}

	long modulus() const { return p_; }
	long value() const { return v_; }

	bool is_zero() const { return v_ == 0; }
	bool is_one() const { return v_ == 1; }

	PrimeField inv() const
	{
		assert(v_ != 0 && p_ > 0);
		// extended Euclid
		long a = v_, b = p_, x0 = 1, x1 = 0;
		while (b != 0) {
			long q = a / b;
			long t = a - q * b;
			a = b;
			b = t;
			t = x0 - q * x1;
			x0 = x1;
			x1 = t;
		}
		assert(a == 1);
		return PrimeField(x0, p_);
	}

	friend PrimeField operator+(const PrimeField& a, const PrimeField& b)
	{
		long p = unify(a, b);
		if (p == 0)
			return PrimeField();
		return PrimeField(a.v_ + b.v_, p);
	}

	friend PrimeField operator-(const PrimeField& a, const PrimeField& b)
	{
		long p = unify(a, b);
		if (p == 0)
			return PrimeField();
		return PrimeField(a.v_ - b.v_, p);
	}

	friend PrimeField operator*(const PrimeField& a, const PrimeField& b)
	{
		long p = unify(a, b);
		if (p == 0)
			return PrimeField();
		return PrimeField(static_cast<long>(static_cast<__int128>(a.v_) * b.v_ % p), p);
	}

	PrimeField operator-() const
	{
		if (p_ == 0)
			return PrimeField();
		return PrimeField(-v_, p_);
	}

	PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
	PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
	PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

	friend bool operator==(const PrimeField& a, const PrimeField& b)
	{
		unify(a, b);
		return a.v_ == b.v_;
	}
	friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

	std::string to_string() const { return std::to_string(v_); }

	static const char* field_name() { return "Fp"; }

private:
	// moduli must agree; an unattached zero adopts the other side's modulus
	static long unify(const PrimeField& a, const PrimeField& b)
	{
		assert(a.p_ == 0 || b.p_ == 0 || a.p_ == b.p_);
		return a.p_ != 0 ? a.p_ : b.p_;
	}

	long v_;
	long p_;
};

} // namespace formalglue
