#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swc/errors.hpp"

namespace swc {

using Int = mpz_class;
using Rat = mpq_class;

/* Exact rational p/q, reduced, q > 0. */
Rat rat(long p, long q = 1);
Rat rat(const Int& p, const Int& q);

/* Parses "p/q" or "p". Throws DomainError on malformed input or q == 0. */
Rat parse_rat(std::string_view s);

/* Canonical serialization: always "p/q", lowest terms, q > 0 (so "3" -> "3/1"). */
std::string rat_str(const Rat& x);

Int rat_floor(const Rat& x);
bool rat_is_integer(const Rat& x);

/* 2^e for e >= 0 as Int; cheap even for e in the millions (single set bit). */
Int pow2(unsigned long e);

/* (-1/2)^n */
Rat half_pow_signed(unsigned long n);

double rat_approx(const Rat& x);

using Point = std::vector<Rat>;

std::string point_str(const Point& p);

} // namespace swc
