#include "fftile/rational.hpp"

#include <cctype>

namespace fftile {

BigRational parse_rational(std::string_view text) {
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty rational literal");
    auto digits_only = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!digits_only(num) || !digits_only(den))
        throw Error(ErrorKind::ParseError, "bad rational literal '" + std::string(text) + "'");
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    if (!den.empty() && den.front() == '+') den.remove_prefix(1);
    BigRational q(std::string(num) + "/" + std::string(den));
    if (q.get_den() == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

BigRational canonical_rational(BigRational q) {
    q.canonicalize();
    return q;
}

std::string format_rational(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integral(const BigRational& q) { return q.get_den() == 1; }

}  // namespace fftile
