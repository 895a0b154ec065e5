#include "schur/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace schur {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<mpq_class> parse_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
            eneg = es[0] == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) return std::nullopt;
        exp10 = std::strtol(std::string(es).c_str(), nullptr, 10);
        if (eneg) exp10 = -exp10;
        s = s.substr(0, e);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        if (!all_digits(s)) return std::nullopt;
        digits = s;
    } else {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) return std::nullopt;
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) return std::nullopt;
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    }
    if (digits.empty()) digits = "0";
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    mpq_class q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

}  // namespace

std::optional<mpq_class> parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);
    auto n = parse_decimal(trim(text.substr(0, slash)));
    auto d = parse_decimal(trim(text.substr(slash + 1)));
    if (!n || !d || *d == 0) return std::nullopt;
    mpq_class q = *n / *d;
    q.canonicalize();
    return q;
}

std::optional<std::vector<mpq_class>> parse_rational_list(std::string_view text) {
    std::vector<mpq_class> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto v = parse_rational(text.substr(start, comma - start));
        if (!v) return std::nullopt;
        out.push_back(*v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

mpq_class pow(const mpq_class& b, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), e);
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace schur
