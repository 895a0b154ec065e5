#include "schur/word.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

namespace schur {

std::size_t Word::left_count() const {
    return static_cast<std::size_t>(std::count_if(symbols_.begin(), symbols_.end(), is_left));
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Relation> s(a.begin(), a.end());
    s.insert(s.end(), b.begin(), b.end());
    return Word(std::move(s));
}

Word repeat(const Word& w, std::size_t n) {
    std::vector<Relation> s;
    s.reserve(w.size() * n);
    for (std::size_t k = 0; k < n; ++k) s.insert(s.end(), w.begin(), w.end());
    return Word(std::move(s));
}

namespace {

class WordParser {
public:
    explicit WordParser(std::string_view t) : text_(t) {}

    Word parse() {
        auto out = sequence();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return Word(std::move(out));
    }

private:
    std::vector<Relation> sequence() {
        std::vector<Relation> out;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size()) return out;
            char c = text_[pos_];
            if (c == '<' || c == '>') {
                ++pos_;
                bool primed = false;
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '\'') {
                    primed = true;
                    ++pos_;
                }
                out.push_back(make_relation(c == '<', primed));
            } else if (c == '(') {
                ++pos_;
                auto inner = sequence();
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
                ++pos_;
                std::size_t times = 1;
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '^') {
                    ++pos_;
                    skip_ws();
                    times = number();
                }
                for (std::size_t k = 0; k < times; ++k) out.insert(out.end(), inner.begin(), inner.end());
            } else if (c == ')') {
                return out;
            } else {
                fail("unexpected character");
            }
        }
    }

    std::size_t number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected repetition count");
        std::size_t v = 0;
        std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (v > 1'000'000) fail("repetition count too large");
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const char* what) const {
        throw std::invalid_argument(std::string("word syntax error at column ") + std::to_string(pos_ + 1) +
                                    ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string to_string(const Word& w) {
    std::string s;
    for (Relation r : w) s += ascii(r);
    return s;
}

Partition encoded_shape(const Word& w) {
    std::vector<int> parts;
    int lefts = 0;
    for (Relation r : w) {
        if (is_left(r))
            ++lefts;
        else
            parts.push_back(lefts);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition::from_trusted(std::move(parts));
}

std::string_view to_string(BoxType t) {
    switch (t) {
        case BoxType::HH: return "HH";
        case BoxType::HV: return "HV";
        case BoxType::VH: return "VH";
        case BoxType::VV: return "VV";
    }
    return "?";
}

std::vector<std::pair<int, int>> boundary_points(const Word& w) {
    std::vector<std::pair<int, int>> pts;
    pts.reserve(w.size() + 1);
    int i = 0;
    int j = static_cast<int>(w.right_count());
    pts.emplace_back(i, j);
    for (Relation r : w) {
        if (is_left(r))
            ++i;
        else
            --j;
        pts.emplace_back(i, j);
    }
    return pts;
}

std::vector<double> q_volume_parameters(const Word& w, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q must lie in (0,1)");
    std::vector<double> z(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        double e = static_cast<double>(k + 1);
        z[k] = is_left(w[k]) ? std::pow(q, -e) : std::pow(q, e);
    }
    return z;
}

std::vector<double> symmetric_q_volume_parameters(const Word& w, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q must lie in (0,1)");
    const std::size_t n = w.size();
    std::vector<double> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        double e = static_cast<double>(n - k);
        z[k] = is_left(w[k]) ? std::pow(q, e) : std::pow(q, -e);
    }
    return z;
}

double parse_real(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto to_double = [&](std::string_view s) {
        s = trim(s);
        std::string buf(s);
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(buf, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a number: '" + buf + "'");
        }
        if (used != buf.size()) throw std::invalid_argument("not a number: '" + buf + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return to_double(text);
    double den = to_double(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return to_double(text.substr(0, slash)) / den;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        out.push_back(parse_real(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace schur
