#include "twistedlab/rational.hpp"

namespace twistedlab {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw ParseError("bad rational literal: '" + s + "'");
    }
    mpq_class v(q);
    mpq_clear(q);
    if (v.get_den() == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
    return Rational(v);  // ctor canonicalizes
}

}  // namespace twistedlab
