#include "firetree/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "firetree/errors.hpp"

namespace firetree {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            if (s.find('/') != std::string::npos)
                throw ParseError("rational literal mixes '.' and '/': " + s);
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            if (head.empty() || head == "-") head += "0";
            bool neg = head[0] == '-';
            Int whole(head);
            Int num = 0;
            Int den = 1;
            for (char c : tail) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("bad decimal literal: " + s);
                num = num * 10 + (c - '0');
                den *= 10;
            }
            Rat frac(num, den);
            frac.canonicalize();
            return Rat(whole) + (neg ? -frac : frac);
        }
        Rat r(s);
        if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
    Int num = r.get_num(), den = r.get_den();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    bool neg = num < 0;
    if (neg) num = -num;
    Int whole = num / den, rem = num % den;
    std::string out = (neg ? "-" : "") + whole.get_str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            Int d = rem / den;
            rem %= den;
            out += static_cast<char>('0' + d.get_si());
        }
    }
    return out;
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

std::vector<Rat> make_rats(const std::vector<long long>& vs) {
    std::vector<Rat> out;
    out.reserve(vs.size());
    for (long long v : vs) out.push_back(make_rat(v));
    return out;
}

Int phi_certificate(const Int& p, const Int& q) { return p * p + p * q - q * q; }

int cmp_inv_phi(const Rat& x) {
    if (x <= 0) return -1;
    Int cert = phi_certificate(x.get_num(), x.get_den());
    return cert > 0 ? 1 : -1;
}

}  // namespace firetree
