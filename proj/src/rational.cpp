#include "minfill/rational.hpp"

#include <algorithm>
#include <cctype>

namespace minfill {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c) != 0; }),
            s.end());
    if (s.empty()) throw DomainError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw DomainError("malformed rational literal '" + text + "'");
        Int n(num), d(den);
        if (d == 0) throw DomainError("zero denominator in '" + text + "'");
        return Rat(n) / Rat(d);
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.erase(0, 1);
        if (head.empty()) head = "0";
        if (!is_integer_token(head) || frac.empty() || !is_integer_token(frac))
            throw DomainError("malformed decimal literal '" + text + "'");
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int num = Int(head) * scale + Int(frac);
        if (neg) num = -num;
        return Rat(num) / Rat(scale);
    }

    if (!is_integer_token(s))
        throw DomainError("malformed rational literal '" + text + "'");
    return Rat(Int(s));
}

std::string rat_to_string(const Rat& q) { return q.str(); }

Int lcm_denominators(const std::vector<Rat>& v) {
    Int l = 1;
    for (const Rat& q : v) l = boost::multiprecision::lcm(l, denominator(q));
    return l;
}

}  // namespace minfill
