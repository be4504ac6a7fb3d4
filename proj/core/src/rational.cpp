#include "slopestab/rational.hpp"

namespace slopestab {

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

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    // mpq_class(string) accepts forms we do not want (whitespace, base
    // prefixes), so validate the shape first: -?digits(/digits)?
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') { ++i; ++digits; }
    if (digits == 0) throw Error("bad rational literal: '" + text + "'");
    if (i != text.size()) {
        if (text[i] != '/') throw Error("bad rational literal: '" + text + "'");
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') { ++i; ++den_digits; }
        if (den_digits == 0 || i != text.size())
            throw Error("bad rational literal: '" + text + "'");
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error("bad rational literal: '" + text + "'");
    if (r.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

}  // namespace slopestab
