#include <jfs/rational.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jfs {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
}

}  // namespace

Rational parse_rational(std::string_view token)
{
    std::string_view body = token;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    if (!all_digits(num))
        throw std::invalid_argument("malformed rational '" + std::string(token) + "'");
    if (slash != std::string_view::npos)
    {
        const std::string_view den = body.substr(slash + 1);
        if (!all_digits(den))
            throw std::invalid_argument("malformed rational '" + std::string(token) + "'");
        if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
            throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
    }
    std::string text(token.front() == '+' ? token.substr(1) : token);
    Rational value;
    value.set_str(text, 10);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    Rational c(value);
    c.canonicalize();
    return c.get_str();
}

std::string to_string(const Vec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

Vec zeros(std::size_t n)
{
    return Vec(n);  // default-constructed rationals are zero
}

Vec unit_vector(std::size_t n, std::size_t i)
{
    Vec e = zeros(n);
    e[i] = 1;
    return e;
}

Rational dot(const Vec& a, const Vec& b)
{
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            acc += a[i] * b[i];
    return acc;
}

Vec add(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rational& s, const Vec& v)
{
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

Vec negate(const Vec& v)
{
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = -v[i];
    return r;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vec normalize_direction(const Vec& v)
{
    for (const Rational& x : v)
        if (sgn(x) != 0)
            return scale(Rational(1) / abs(x), v);
    return v;
}

bool lex_less(const Vec& a, const Vec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace jfs
