#include "isys/rational.hpp"

#include <cctype>
#include <limits>

namespace isys {

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Scalar parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);

    if (s.find_first_of(".eE") != std::string_view::npos)
        throw RationalParseError("float literal '" + std::string(text) + "' is not a rational");

    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw RationalParseError("malformed rational '" + std::string(text) + "'");

    std::string n(num);
    if (n[0] == '+')
        n.erase(0, 1);
    Integer p(n);
    Integer q{std::string(den)};
    if (q == 0)
        throw RationalParseError("zero denominator in '" + std::string(text) + "'");
    return Scalar(p, q);
}

std::string to_string(const Scalar& q)
{
    const Integer& d = boost::multiprecision::denominator(q);
    if (d == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + d.str();
}

Integer floor_int(const Scalar& q)
{
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    Integer r = n / d;  // truncates toward zero
    if (n < 0 && r * d != n)
        r -= 1;
    return r;
}

Integer ceil_int(const Scalar& q)
{
    return -floor_int(-q);
}

std::int64_t to_int64(const Integer& z)
{
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + z.str());
    return z.convert_to<std::int64_t>();
}

double to_double(const Scalar& q)
{
    return q.convert_to<double>();
}

}  // namespace isys
