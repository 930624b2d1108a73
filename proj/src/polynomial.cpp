#include "ordcert/polynomial.hpp"

#include <sstream>

#include "ordcert/errors.hpp"

namespace ordcert {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.back() != 1)
        throw InvalidInput("IntPolynomial: must be monic");
}

IntPolynomial IntPolynomial::x_power(std::size_t e) {
    std::vector<Int> c(e + 1);
    c[e] = 1;
    return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    if (i >= coeffs_.size())
        throw InvalidInput("IntPolynomial: coefficient index out of range");
    return coeffs_[i];
}

std::string IntPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0 && !(first && i == 0)) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int ac = abs(c);
        if (i == 0) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<std::uint64_t> reduce_mod_p(const IntPolynomial& g,
                                        std::uint64_t p) {
    if (p == 0) throw InvalidInput("reduce_mod_p: modulus must be positive");
    std::vector<std::uint64_t> out;
    out.reserve(g.coeffs().size());
    Int m = Int(static_cast<unsigned long>(p));
    for (const Int& c : g.coeffs()) {
        Int r = c % m;
        if (r < 0) r += m;
        out.push_back(r.get_ui());
    }
    return out;
}

}  // namespace ordcert
