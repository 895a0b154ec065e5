#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

// "3", "-2/7", "0.125", "1e-3" → exact rational; nullopt for anything else (nan, inf, garbage).
std::optional<mpq_class> parse_rational(std::string_view text);
std::optional<std::vector<mpq_class>> parse_rational_list(std::string_view text);

std::string to_string(const mpq_class& q);
mpq_class pow(const mpq_class& b, unsigned long e);

}  // namespace schur
