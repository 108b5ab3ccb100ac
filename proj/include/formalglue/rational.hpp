#pragma once

#include <gmpxx.h>
#include <cassert>
#include <string>
#include <utility>

namespace formalglue {

// Exact rational scalar backed by GMP. Value-semantic; always canonical.
class Rational {
public:
	Rational() : v_(0) {}
	Rational(long n) : v_(n) {}
	Rational(long num, long den) : v_(num, den)
	{
		assert(den != 0);
		v_.canonicalize();
	}

	static Rational from_long(long n, const Rational&) { return Rational(n); }
	static Rational from_ratio(long num, long den, const Rational&) { return Rational(num, den); }

	Rational one_like() const { return Rational(1); }

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }

	Rational inv() const
	{
		assert(!is_zero());
		Rational r;
		r.v_ = 1 / v_;
		return r;
	}

	friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
	friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
	friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
	Rational operator-() const { return Rational(-v_); }

	Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
	Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
	Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

	friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

	std::string to_string() const { return v_.get_str(); }

	static const char* field_name() { return "Q"; }

private:
	explicit Rational(mpq_class v) : v_(std::move(v)) {}
	mpq_class v_;
};

} // namespace formalglue
