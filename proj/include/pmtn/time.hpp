#ifndef PMTN_TIME_HPP
#define PMTN_TIME_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pmtn {

	namespace detail {

		using wide_int = __int128;

		inline wide_int wide_gcd(wide_int a, wide_int b) {
			if (a < 0) a = -a;
			if (b < 0) b = -b;
			while (b != 0) {
				wide_int r = a % b;
				a = b;
				b = r;
			}
			return a;
		}

		inline long long narrow(wide_int v) {
			if (v > wide_int(INT64_MAX) || v < wide_int(INT64_MIN))
				throw std::overflow_error("rational time arithmetic overflow");
			return static_cast<long long>(v);
		}

	}

	/**
	 * Exact non-negative rational time, kept in canonical form
	 * (gcd(numerator, denominator) = 1, denominator >= 1).
	 *
	 * All arithmetic is exact. An operation whose canonical result does not
	 * fit 64-bit numerator/denominator throws std::overflow_error instead of
	 * rounding. Subtraction below zero throws std::domain_error; callers that
	 * need a sign use signed_difference().
	 */
	class Time_point {
	public:
		Time_point() : num(0), den(1) {}

		Time_point(long long value) : num(value), den(1) {
			if (value < 0)
				throw std::domain_error("time cannot be negative");
		}

		Time_point(int value) : Time_point(static_cast<long long>(value)) {}

		Time_point(long long numerator, long long denominator) {
			if (denominator == 0)
				throw std::domain_error("zero denominator");
			*this = make(numerator, denominator);
		}

		// accepts "7", "110/3", surrounding whitespace allowed
		static Time_point parse(std::string_view text);

		long long numerator() const { return num; }
		long long denominator() const { return den; }
		bool is_integer() const { return den == 1; }

		long long floor() const { return num / den; }
		long long ceil() const { return (num + den - 1) / den; }
		double to_double() const {
			return static_cast<double>(num) / static_cast<double>(den);
		}

		std::string to_string() const {
			if (den == 1)
				return std::to_string(num);
			return std::to_string(num) + "/" + std::to_string(den);
		}

		friend Time_point operator+(const Time_point& a, const Time_point& b) {
			detail::wide_int n = detail::wide_int(a.num) * b.den
			                   + detail::wide_int(b.num) * a.den;
			return make_wide(n, detail::wide_int(a.den) * b.den);
		}

		friend Time_point operator-(const Time_point& a, const Time_point& b) {
			detail::wide_int n = detail::wide_int(a.num) * b.den
			                   - detail::wide_int(b.num) * a.den;
			if (n < 0)
				throw std::domain_error("time subtraction below zero");
			return make_wide(n, detail::wide_int(a.den) * b.den);
		}

		friend Time_point operator*(const Time_point& a, const Time_point& b) {
			return make_wide(detail::wide_int(a.num) * b.num,
			                 detail::wide_int(a.den) * b.den);
		}

		friend Time_point operator/(const Time_point& a, const Time_point& b) {
			if (b.num == 0)
				throw std::domain_error("division by zero time");
			return make_wide(detail::wide_int(a.num) * b.den,
			                 detail::wide_int(a.den) * b.num);
		}

		Time_point& operator+=(const Time_point& o) { return *this = *this + o; }
		Time_point& operator-=(const Time_point& o) { return *this = *this - o; }
		Time_point& operator*=(const Time_point& o) { return *this = *this * o; }
		Time_point& operator/=(const Time_point& o) { return *this = *this / o; }

		friend std::strong_ordering operator<=>(const Time_point& a,
		                                        const Time_point& b) {
			detail::wide_int lhs = detail::wide_int(a.num) * b.den;
			detail::wide_int rhs = detail::wide_int(b.num) * a.den;
			if (lhs < rhs) return std::strong_ordering::less;
			if (lhs > rhs) return std::strong_ordering::greater;
			return std::strong_ordering::equal;
		}

		friend bool operator==(const Time_point& a, const Time_point& b) {
			return a.num == b.num && a.den == b.den;
		}

	private:
		long long num;
		long long den;

		static Time_point make(long long n, long long d) {
			return make_wide(detail::wide_int(n), detail::wide_int(d));
		}

		static Time_point make_wide(detail::wide_int n, detail::wide_int d) {
			if (d < 0) {
				n = -n;
				d = -d;
			}
			if (n < 0)
				throw std::domain_error("time cannot be negative");
			detail::wide_int g = detail::wide_gcd(n, d);
			if (g > 1) {
				n /= g;
				d /= g;
			}
			Time_point t;
			t.num = detail::narrow(n);
			t.den = detail::narrow(d);
			return t;
		}
	};

	// sign of a - b together with |a - b|
	struct Time_delta {
		int sign;              // -1, 0, +1
		Time_point magnitude;
	};

	inline Time_delta signed_difference(const Time_point& a, const Time_point& b) {
		if (a == b)
			return {0, Time_point()};
		if (a > b)
			return {+1, a - b};
		return {-1, b - a};
	}

	inline Time_point Time_point::parse(std::string_view text) {
		auto fail = [&]() -> void {
			throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
		};
		std::size_t begin = text.find_first_not_of(" \t");
		std::size_t end = text.find_last_not_of(" \t");
		if (begin == std::string_view::npos)
			fail();
		std::string_view body = text.substr(begin, end - begin + 1);

		auto parse_int = [&](std::string_view part) -> long long {
			if (part.empty())
				fail();
			bool negative = false;
			std::size_t i = 0;
			if (part[0] == '-') {
				negative = true;
				i = 1;
				if (part.size() == 1)
					fail();
			}
			long long value = 0;
			for (; i < part.size(); ++i) {
				if (part[i] < '0' || part[i] > '9')
					fail();
				detail::wide_int next = detail::wide_int(value) * 10 + (part[i] - '0');
				value = detail::narrow(next);
			}
			return negative ? -value : value;
		};

		std::size_t slash = body.find('/');
		if (slash == std::string_view::npos)
			return Time_point(parse_int(body));
		long long n = parse_int(body.substr(0, slash));
		long long d = parse_int(body.substr(slash + 1));
		if (d == 0)
			throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
		return Time_point(n, d);
	}

}

#endif
