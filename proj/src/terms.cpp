#include "clausen/terms.hpp"

namespace clausen {

std::vector<cplx> term_sequence(const Params& p, AlphaMode mode, std::size_t n_max) {
    if (!(p.b > 0.0) || !(p.c > 0.0))
        throw domain_violation_error("term_sequence requires b, c > 0");
    std::vector<cplx> out;
    out.reserve(n_max + 1);
    if (mode == AlphaMode::Modulus) {
        TermRecurrence rec(std::abs(p.a), p.b, p.c);
        for (std::size_t n = 0; n <= n_max; ++n, rec.advance())
            out.emplace_back(rec.value(), 0.0);
    } else {
        ComplexTermRecurrence rec(p.a, p.b, p.c);
        for (std::size_t n = 0; n <= n_max; ++n, rec.advance())
            out.push_back(rec.value());
    }
    return out;
}

std::vector<double> term_sequence(double alpha, double b, double c, std::size_t n_max) {
    if (!(b > 0.0) || !(c > 0.0))
        throw domain_violation_error("term_sequence requires b, c > 0");
    std::vector<double> out;
    out.reserve(n_max + 1);
    TermRecurrence rec(alpha, b, c);
    for (std::size_t n = 0; n <= n_max; ++n, rec.advance()) out.push_back(rec.value());
    return out;
}

} // namespace clausen
