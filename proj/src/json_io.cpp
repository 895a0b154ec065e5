#include "schur/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur::io {

namespace {

void expect_format(const json& j, std::string_view fmt) {
    if (!j.is_object() || !j.contains("format") || j.at("format") != fmt)
        throw std::invalid_argument("expected a JSON object with format \"" + std::string(fmt) + "\"");
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

json partitions(const std::vector<Partition>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(to_json(p));
    return a;
}

std::vector<Partition> partitions_from(const json& a) {
    std::vector<Partition> out;
    for (const auto& p : a) out.push_back(partition_from_json(p));
    return out;
}

}  // namespace

std::string format_of(const json& j) {
    if (j.is_array()) return j.empty() ? "" : format_of(j.front());
    if (!j.is_object() || !j.contains("format") || !j.at("format").is_string()) return "";
    return j.at("format").get<std::string>();
}

json to_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Partition partition_from_json(const json& j) {
    return guarded([&] { return Partition(j.get<std::vector<int>>()); });
}

json to_json(const ProcessSample& s) {
    return {{"format", process_sample_format},
            {"word", to_string(s.word)},
            {"z", s.z},
            {"seed", s.seed},
            {"lambdas", partitions(s.lambdas)}};
}

ProcessSample process_sample_from_json(const json& j) {
    expect_format(j, process_sample_format);
    return guarded([&] {
        ProcessSample s{parse_word(j.at("word").get<std::string>()), j.at("z").get<std::vector<double>>(),
                        j.at("seed").get<std::uint64_t>(), partitions_from(j.at("lambdas"))};
        if (s.z.size() != s.word.size()) throw std::invalid_argument("parameter count does not match word length");
        validate_sample(s);
        return s;
    });
}

json to_json(const SymmetricSample& s) {
    return {{"format", symmetric_sample_format},
            {"word", to_string(s.word)},
            {"z", s.z},
            {"t", s.t},
            {"mode", std::string(to_string(s.mode))},
            {"seed", s.seed},
            {"lambdas", partitions(s.lambdas)}};
}

SymmetricSample symmetric_sample_from_json(const json& j) {
    expect_format(j, symmetric_sample_format);
    return guarded([&] {
        SymmetricSample s{parse_word(j.at("word").get<std::string>()),
                          j.at("z").get<std::vector<double>>(),
                          j.at("t").get<double>(),
                          parse_boundary_mode(j.at("mode").get<std::string>()),
                          j.at("seed").get<std::uint64_t>(),
                          partitions_from(j.at("lambdas"))};
        validate_symmetric(s);
        return s;
    });
}

json to_json(const PyramidalSample& s, const std::string& convention) {
    return {{"format", pyramidal_sample_format},
            {"convention", convention},
            {"min_index", s.min_index},
            {"lambdas", partitions(s.lambdas)}};
}

PyramidalSample pyramidal_sample_from_json(const json& j) {
    expect_format(j, pyramidal_sample_format);
    return guarded([&] {
        PyramidalSample s{j.at("min_index").get<long>(), partitions_from(j.at("lambdas"))};
        return s;
    });
}

json to_json(const HeightMatrix& h) {
    return {{"format", plane_partition_format},
            {"word", to_string(h.word)},
            {"shape", to_json(h.shape)},
            {"rows", h.rows}};
}

HeightMatrix plane_partition_from_json(const json& j) {
    expect_format(j, plane_partition_format);
    return guarded([&] {
        HeightMatrix h{parse_word(j.at("word").get<std::string>()), partition_from_json(j.at("shape")),
                       j.at("rows").get<std::vector<std::vector<long>>>()};
        if (!is_reverse_plane_partition(h)) throw std::invalid_argument("filling is not a reverse plane partition");
        return h;
    });
}

json to_json(const DominoTiling& t) {
    json d = json::array();
    for (const auto& x : t.dominoes)
        d.push_back({{"x", x.x}, {"y", x.y}, {"vertical", x.vertical}, {"positive", x.positive}});
    json out{{"format", steep_tiling_format},
             {"word", to_string(t.word)},
             {"ymin", t.ymin},
             {"ymax", t.ymax},
             {"dominoes", d}};
    out["aztec_order"] = t.aztec_order ? json(*t.aztec_order) : json(nullptr);
    return out;
}

DominoTiling steep_tiling_from_json(const json& j) {
    expect_format(j, steep_tiling_format);
    return guarded([&] {
        DominoTiling t;
        t.word = parse_word(j.at("word").get<std::string>());
        t.ymin = j.at("ymin").get<long>();
        t.ymax = j.at("ymax").get<long>();
        if (j.contains("aztec_order") && !j.at("aztec_order").is_null()) t.aztec_order = j.at("aztec_order").get<int>();
        for (const auto& d : j.at("dominoes"))
            t.dominoes.push_back(
                {d.at("x").get<long>(), d.at("y").get<long>(), d.at("vertical").get<bool>(), d.at("positive").get<bool>()});
        std::sort(t.dominoes.begin(), t.dominoes.end());
        return t;
    });
}

json to_json(const OverpartitionTableau& t) {
    json text = json::array();
    for (std::size_t r = 0; r < t.doubled.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < t.doubled[r].size(); ++c) row.push_back(t.text(r, c));
        text.push_back(row);
    }
    return {{"format", overpartition_format},
            {"n", t.n},
            {"shape", to_json(t.shape)},
            {"doubled", t.doubled},
            {"text", text}};
}

OverpartitionTableau overpartition_from_json(const json& j) {
    expect_format(j, overpartition_format);
    return guarded([&] {
        OverpartitionTableau t{j.at("n").get<int>(), partition_from_json(j.at("shape")),
                               j.at("doubled").get<std::vector<std::vector<int>>>()};
        from_plane_overpartition(t);  // validates
        return t;
    });
}

}  // namespace schur::io
