#include "swc/rat.hpp"

#include <sstream>

namespace swc {

Rat rat(long p, long q) {
    if (q == 0)
        throw DomainError("rat: zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat rat(const Int& p, const Int& q) {
    if (q == 0)
        throw DomainError("rat: zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat parse_rat(std::string_view s) {
    if (s.empty())
        throw DomainError("parse_rat: empty string");
    std::string str(s);
    Rat r;
    if (r.set_str(str, 10) != 0)
        throw DomainError("parse_rat: malformed rational '" + str + "'");
    if (r.get_den() == 0)
        throw DomainError("parse_rat: zero denominator in '" + str + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool rat_is_integer(const Rat& x) {
    return x.get_den() == 1;
}

Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Rat half_pow_signed(unsigned long n) {
    Rat r = rat(Int(n % 2 == 0 ? 1 : -1), pow2(n));
    return r;
}

double rat_approx(const Rat& x) {
    return x.get_d();
}

std::string point_str(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i)
            os << ", ";
        os << rat_str(p[i]);
    }
    os << ")";
    return os.str();
}

} // namespace swc
