#include "poinc/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "poinc/error.hpp"

namespace poinc {

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (x == 0)
        x = 0;  // drop the sign of -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string trim(const std::string& text)
{
    auto const ws = " \t\r\n";
    auto b = text.find_first_not_of(ws);
    if (b == std::string::npos)
        return {};
    auto e = text.find_last_not_of(ws);
    return text.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text, char delim)
{
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (true)
    {
        auto pos = text.find(delim, start);
        out.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return out;
}

double parse_number(const std::string& text)
{
    auto s = trim(text);
    double value = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw DomainError("not a number: '" + text + "'");
    if (!std::isfinite(value))
        throw DomainError("non-finite number: '" + text + "'");
    return value;
}

}  // namespace poinc
