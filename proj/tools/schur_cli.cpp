#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "schur/growth.hpp"
#include "schur/json_io.hpp"
#include "schur/oracle.hpp"
#include "schur/partition_function.hpp"
#include "schur/plancherel.hpp"
#include "schur/rational.hpp"
#include "schur/svg.hpp"
#include "schur/symmetric.hpp"
#include "schur/tilings.hpp"
#include "schur/unbounded.hpp"

using namespace schur;
using io::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Word word_arg(const std::string& text) {
    try {
        return parse_word(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--word: ") + e.what());
    }
}

std::vector<double> params_arg(const Word& w, const std::string& z, const std::optional<double>& q,
                               bool symmetric = false) {
    if (q) {
        if (!z.empty()) throw UsageError("give either --z or --q, not both");
        return symmetric ? symmetric_q_volume_parameters(w, *q) : q_volume_parameters(w, *q);
    }
    if (z.empty()) throw UsageError("--z or --q is required");
    std::vector<double> out;
    try {
        out = parse_real_list(z);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--z: ") + e.what());
    }
    if (out.size() != w.size())
        throw UsageError("--z has " + std::to_string(out.size()) + " values but the word has " +
                         std::to_string(w.size()) + " symbols");
    return out;
}

json read_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not JSON: ") + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::vector<json> items(const json& j) {
    if (j.is_array()) return std::vector<json>(j.begin(), j.end());
    return {j};
}

// Runs f for each index on a pool; results come back in index order.
std::vector<json> batch(std::size_t count, unsigned threads, std::uint64_t seed,
                        const std::function<json(RandomSource&)>& f) {
    std::vector<json> out(count);
    auto run_one = [&](std::size_t k) {
        RandomSource src(count == 1 ? seed : stream_seed(seed, k));
        out[k] = f(src);
    };
    if (threads <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k) run_one(k);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex m;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t k = next++;
                if (k >= count) return;
                try {
                    run_one(k);
                } catch (...) {
                    std::lock_guard lock(m);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

std::string emit(const std::vector<json>& v, bool pretty) {
    json out = v.size() == 1 ? v.front() : json(v);
    return (pretty ? out.dump(2) : out.dump()) + "\n";
}

struct Batch {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string output;
    bool pretty = false;

    void add(CLI::App* c) {
        c->add_option("--seed", seed, "random seed");
        c->add_option("--count", count, "number of independent samples")->check(CLI::PositiveNumber);
        c->add_option("--threads", threads, "worker threads for --count")->check(CLI::PositiveNumber);
        c->add_option("-o,--output", output, "output file (default stdout)");
        c->add_flag("--pretty", pretty, "indent JSON");
    }
};

mpq_class exact(double v) { return mpq_class(v); }

std::vector<mpq_class> exact_params(const std::string& z_text, const std::vector<double>& z) {
    if (!z_text.empty())
        if (auto q = parse_rational_list(z_text)) return *q;
    std::vector<mpq_class> out;
    for (double v : z) out.push_back(exact(v));
    return out;
}

int verify_distribution(const Word& w, const std::vector<mpq_class>& zq, std::optional<std::pair<mpq_class, BoundaryMode>> sym,
                        long cap, const std::vector<oracle::Sequence>& samples, double tolerance, double alpha) {
    oracle::WeightedSupport sup = sym ? oracle::enumerate_symmetric_support(w, zq, sym->first, sym->second, cap)
                                      : oracle::enumerate_support(w, zq, cap);
    oracle::Histogram h;
    for (const auto& s : samples) h.add(s, sup);
    double tv = oracle::tv_distance(h, sup);

    // chi-square against the closed-form normalization, leftover mass pooled
    ZValue z = sym ? z_symmetric(w, zq, sym->first, sym->second) : z_finite(w, zq);
    std::vector<std::uint64_t> obs;
    std::vector<double> prob;
    for (const auto& [seq, wt] : sup.entries) {
        auto it = h.counts.find(seq);
        obs.push_back(it == h.counts.end() ? 0 : it->second);
        prob.push_back(z.finite ? mpq_class(wt / z.rational).get_d() : 0.0);
    }
    std::cout << "samples: " << h.total << "\n";
    std::cout << "support entries: " << sup.entries.size() << " (cap " << cap << ")\n";
    std::cout << "tail probability bound: " << (sup.divergent ? std::string("inf") : std::to_string(sup.tail_probability.get_d()))
              << "\n";
    std::cout << "outside support: " << h.overflow << "\n";
    // a perfect sampler still shows this much TV at finite sample size
    double floor = oracle::expected_null_tv(sup, h.total);
    std::cout << "TV distance: " << std::setprecision(6) << tv << " (noise floor " << floor << ")\n";
    bool pass = tv <= tolerance + floor;
    if (z.finite) {
        auto chi = oracle::chi_square(obs, prob, h.overflow);
        std::cout << "chi-square: " << chi.statistic << " (dof " << chi.dof << ", p=" << chi.p_value << ")\n";
        pass = pass && chi.p_value >= alpha;
    }
    std::cout << "result: " << (pass ? "PASS" : "FAIL") << " (tolerance " << tolerance << ", alpha " << alpha << ")\n";
    return pass ? 0 : 1;
}

json sample_view(const json& j, const std::string& to) {
    std::string fmt = io::format_of(j);
    if (to == "plane-partition") {
        if (fmt != io::process_sample_format) throw std::invalid_argument("plane-partition needs a process sample");
        return io::to_json(to_plane_partition(io::process_sample_from_json(j)));
    }
    if (to == "steep-tiling") {
        if (fmt != io::process_sample_format) throw std::invalid_argument("steep-tiling needs a process sample");
        return io::to_json(to_steep_tiling(io::process_sample_from_json(j)));
    }
    if (to == "overpartition") {
        if (fmt != io::symmetric_sample_format) throw std::invalid_argument("overpartition needs a symmetric sample");
        return io::to_json(to_plane_overpartition(io::symmetric_sample_from_json(j)));
    }
    if (to == "sample") {
        // views carry no parameters; z is reported as all ones
        std::vector<Partition> lambdas;
        Word w;
        if (fmt == io::plane_partition_format) {
            auto h = io::plane_partition_from_json(j);
            lambdas = from_plane_partition(h);
            w = h.word;
        } else if (fmt == io::steep_tiling_format) {
            auto t = io::steep_tiling_from_json(j);
            lambdas = from_steep_tiling(t);
            w = t.word;
        } else {
            throw std::invalid_argument("--to sample needs a plane-partition or steep-tiling view");
        }
        return io::to_json(ProcessSample{w, std::vector<double>(w.size(), 1.0), 0, lambdas});
    }
    throw UsageError("unknown --to target '" + to + "'");
}

std::string render(const json& j, std::optional<RenderModel> model, RenderStyle style) {
    std::string fmt = io::format_of(j);
    auto pick = [&](RenderModel d) {
        style.model = model.value_or(d);
        return style.model;
    };
    if (fmt == io::plane_partition_format) {
        if (pick(RenderModel::lozenge) != RenderModel::lozenge) throw std::invalid_argument("plane partitions render as lozenges");
        return render_svg(io::plane_partition_from_json(j), style);
    }
    if (fmt == io::steep_tiling_format) {
        if (pick(RenderModel::domino) != RenderModel::domino) throw std::invalid_argument("steep tilings render as dominoes");
        return render_svg(io::steep_tiling_from_json(j), style);
    }
    if (fmt == io::process_sample_format) {
        auto s = io::process_sample_from_json(j);
        bool unprimed = std::none_of(s.word.begin(), s.word.end(), [](Relation r) { return is_primed(r); });
        RenderModel d = unprimed ? RenderModel::lozenge : is_steep_word(s.word) ? RenderModel::domino : RenderModel::maya_particles;
        switch (pick(d)) {
            case RenderModel::lozenge: return render_svg(to_plane_partition(s), style);
            case RenderModel::domino: return render_svg(to_steep_tiling(s), style);
            case RenderModel::maya_particles: return render_maya_svg(s.lambdas, style);
        }
    }
    if (fmt == io::symmetric_sample_format) {
        if (pick(RenderModel::maya_particles) != RenderModel::maya_particles)
            throw std::invalid_argument("symmetric samples render as Maya diagrams");
        return render_maya_svg(io::symmetric_sample_from_json(j).lambdas, style);
    }
    if (fmt == io::pyramidal_sample_format) {
        if (pick(RenderModel::maya_particles) != RenderModel::maya_particles)
            throw std::invalid_argument("pyramidal samples render as Maya diagrams");
        return render_maya_svg(io::pyramidal_sample_from_json(j).lambdas, style);
    }
    throw std::invalid_argument("cannot render input of format '" + fmt + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact samplers for Schur processes"};
    app.require_subcommand(1);

    // sample
    auto* sample = app.add_subcommand("sample", "sample a Schur process");
    std::string word, z, order = "row-major";
    std::optional<double> q;
    bool in_place = false;
    Batch b1;
    sample->add_option("--word", word, "word, e.g. \"(<'>)^2\"")->required();
    sample->add_option("--z", z, "comma-separated parameters (a/b allowed)");
    sample->add_option("--q", q, "q^volume parameters instead of --z");
    sample->add_option("--order", order, "row-major or diagonal")->check(CLI::IsMember({"row-major", "diagonal"}));
    sample->add_flag("--in-place", in_place, "keep only one row of partitions in memory");
    b1.add(sample);

    // sample-symmetric
    auto* ssym = app.add_subcommand("sample-symmetric", "sample a free-boundary (symmetric) Schur process");
    std::string sword, sz, mode = "free";
    std::optional<double> sq;
    std::string t_text = "1";
    Batch b2;
    ssym->add_option("--word", sword, "half word")->required();
    ssym->add_option("--z", sz, "comma-separated parameters");
    ssym->add_option("--q", sq, "q^volume parameters instead of --z");
    ssym->add_option("--t", t_text, "free-boundary parameter (a/b allowed)");
    ssym->add_option("--mode", mode, "free, even-rows or even-columns");
    b2.add(ssym);

    // sample-unbounded
    auto* sunb = app.add_subcommand("sample-unbounded", "sample a pyramidal (bi-infinite) Schur process");
    std::optional<double> uq;
    double a0 = 0, ra = 0, b0 = 0, rb = 0;
    std::string conv = "alternating";
    Batch b3;
    sunb->add_option("--q", uq, "a_i = b_i = q^(i+1/2)");
    sunb->add_option("--a0", a0, "a_i = a0 * ra^i");
    sunb->add_option("--ra", ra);
    sunb->add_option("--b0", b0, "b_j = b0 * rb^j");
    sunb->add_option("--rb", rb);
    sunb->add_option("--convention", conv, "unprimed or alternating")->check(CLI::IsMember({"unprimed", "alternating"}));
    b3.add(sunb);

    // sample-plancherel
    auto* spl = app.add_subcommand("sample-plancherel", "sample the Poissonized Plancherel measure");
    double theta = 1.0;
    Batch b4;
    spl->add_option("--theta", theta, "Poisson parameter")->required();
    b4.add(spl);

    // zfun
    auto* zf = app.add_subcommand("zfun", "evaluate a partition function");
    std::string zword, zz, zt, zmode = "free";
    std::optional<double> zq;
    zf->add_option("--word", zword, "word, or half word with --t")->required();
    zf->add_option("--z", zz, "comma-separated parameters (exact when rational)");
    zf->add_option("--q", zq, "q^volume parameters instead of --z");
    zf->add_option("--t", zt, "free-boundary parameter; selects the symmetric product");
    zf->add_option("--mode", zmode, "free, even-rows or even-columns");

    // verify
    auto* ver = app.add_subcommand("verify", "compare samples with the exact law");
    std::string vword, vz, vinput, vt, vmode;
    long cap = 12;
    std::size_t nsamples = 100000;
    double tol = 0.02;
    double alpha = 1e-3;
    int bij = -1;
    std::uint64_t vseed = 0;
    unsigned vthreads = std::max(1u, std::thread::hardware_concurrency());
    ver->add_option("--word", vword, "word to sample");
    ver->add_option("--z", vz, "comma-separated parameters");
    ver->add_option("--t", vt, "symmetric process parameter");
    ver->add_option("--mode", vmode, "symmetric boundary mode");
    ver->add_option("--input", vinput, "JSON samples to check instead of sampling");
    ver->add_option("--cap", cap, "largest partition size enumerated")->check(CLI::NonNegativeNumber);
    ver->add_option("--samples", nsamples, "number of samples drawn")->check(CLI::PositiveNumber);
    ver->add_option("--seed", vseed, "random seed");
    ver->add_option("--threads", vthreads, "worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--tolerance", tol, "accepted TV distance above the sampling noise floor");
    ver->add_option("--alpha", alpha, "smallest accepted chi-square p-value")->check(CLI::Range(0.0, 1.0));
    ver->add_option("--bijections", bij, "exhaustively check the local rules up to this weight");

    // convert
    auto* cv = app.add_subcommand("convert", "turn a sample into a combinatorial view");
    std::string cin_path = "-", cto, cout_path;
    cv->add_option("--input", cin_path, "JSON file or - for stdin");
    cv->add_option("--to", cto, "plane-partition, steep-tiling, overpartition or sample")->required();
    cv->add_option("-o,--output", cout_path, "output file (default stdout)");

    // render
    auto* rd = app.add_subcommand("render", "draw a sample or view as SVG");
    std::string rin = "-", rout, rmodel, rpalette;
    RenderStyle style;
    rd->add_option("--input", rin, "JSON file or - for stdin");
    rd->add_option("-o,--output", rout, "SVG file (default stdout)");
    rd->add_option("--model", rmodel, "lozenge, domino or maya-particles");
    rd->add_option("--scale", style.scale, "pixels per unit");
    rd->add_option("--rotation", style.rotation, "degrees");
    rd->add_option("--palette", rpalette, "comma-separated colors");
    rd->add_flag("!--no-outline", style.outline, "omit the region outline");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sample) {
            Word w = word_arg(word);
            auto zv = params_arg(w, z, q);
            TraversalOrder ord = order == "diagonal" ? TraversalOrder::diagonal : TraversalOrder::row_major;
            check_convergence(precompute_par<double>(w, zv));
            auto out = batch(b1.count, b1.threads, b1.seed, [&](RandomSource& src) {
                return io::to_json(in_place ? in_place_boundary_sample(w, zv, src) : schur_sample(w, zv, src, ord));
            });
            write_text(b1.output, emit(out, b1.pretty));
        } else if (*ssym) {
            Word w = word_arg(sword);
            auto zv = params_arg(w, sz, sq, true);
            BoundaryMode m;
            try {
                m = parse_boundary_mode(mode);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            double t;
            try {
                t = parse_real(t_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            auto out = batch(b2.count, b2.threads, b2.seed,
                             [&](RandomSource& src) { return io::to_json(symmetric_schur_sample(w, zv, t, m, src)); });
            write_text(b2.output, emit(out, b2.pretty));
        } else if (*sunb) {
            if (!uq && sunb->count("--a0") + sunb->count("--b0") == 0) throw UsageError("give --q or --a0/--ra/--b0/--rb");
            ParameterSequences p = uq ? ParameterSequences::q_volume(*uq) : ParameterSequences::geometric(a0, ra, b0, rb);
            WordConvention c = conv == "unprimed" ? WordConvention::all_unprimed() : WordConvention::alternating();
            auto out = batch(b3.count, b3.threads, b3.seed, [&](RandomSource& src) {
                TruncationSampler trunc(p, c);
                return io::to_json(unbounded_schur_run(trunc, src).sample, conv);
            });
            write_text(b3.output, emit(out, b3.pretty));
        } else if (*spl) {
            if (!(theta >= 0)) throw UsageError("--theta must be nonnegative");
            auto out = batch(b4.count, b4.threads, b4.seed, [&](RandomSource& src) {
                return json{{"format", io::partition_format},
                            {"theta", theta},
                            {"seed", src.seed()},
                            {"partition", io::to_json(plancherel_sample(theta, src))}};
            });
            write_text(b4.output, emit(out, b4.pretty));
        } else if (*zf) {
            Word w = word_arg(zword);
            BoundaryMode m;
            try {
                m = parse_boundary_mode(zmode);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            ZValue v;
            const std::string* tp = zt.empty() ? nullptr : &zt;
            if (zq) {
                if (!zz.empty()) throw UsageError("give either --z or --q, not both");
                auto zv = tp ? symmetric_q_volume_parameters(w, *zq) : q_volume_parameters(w, *zq);
                v = tp ? z_symmetric(w, zv, parse_real(zt), m) : z_finite(w, zv);
            } else {
                if (zz.empty()) throw UsageError("--z or --q is required");
                params_arg(w, zz, std::nullopt);  // count and syntax check
                v = z_from_text(w, zz, tp, m);
            }
            std::cout << v.str() << "\n";
            if (!v.finite) return 1;
        } else if (*ver) {
            if (bij >= 0) {
                auto rep = oracle::verify_bijections(bij);
                std::cout << rep.summary();
                std::cout << "result: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
                return rep.ok() ? 0 : 1;
            }
            std::optional<std::pair<mpq_class, BoundaryMode>> sym;
            if (!vinput.empty()) {
                auto arr = items(read_json(vinput));
                if (arr.empty()) throw std::invalid_argument("no samples in input");
                std::string fmt = io::format_of(arr.front());
                std::vector<oracle::Sequence> seqs;
                Word w;
                std::vector<double> zv;
                for (const auto& j : arr) {
                    if (fmt == io::symmetric_sample_format) {
                        auto s = io::symmetric_sample_from_json(j);
                        if (seqs.empty()) {
                            w = s.word;
                            zv = s.z;
                            sym = std::make_pair(exact(s.t), s.mode);
                        } else if (s.word != w || s.z != zv || exact(s.t) != sym->first || s.mode != sym->second) {
                            throw std::invalid_argument("samples mix different parameters");
                        }
                        seqs.emplace_back(s.lambdas.begin(), s.lambdas.begin() + static_cast<long>(s.word.size()) + 1);
                    } else {
                        auto s = io::process_sample_from_json(j);
                        if (seqs.empty()) {
                            w = s.word;
                            zv = s.z;
                        } else if (s.word != w || s.z != zv) {
                            throw std::invalid_argument("samples mix different parameters");
                        }
                        seqs.push_back(s.lambdas);
                    }
                }
                std::cout << "all " << seqs.size() << " samples are valid interlaced sequences\n";
                if (ver->count("--cap") == 0) return 0;
                // explicit --z/--t/--mode override what the samples record
                if (!vword.empty() && word_arg(vword) != w) throw UsageError("--word differs from the samples' word");
                std::vector<mpq_class> zq;
                if (!vz.empty()) {
                    zq = exact_params(vz, params_arg(w, vz, std::nullopt));
                } else {
                    for (double v : zv) zq.push_back(exact(v));
                }
                if (sym && !vt.empty()) {
                    auto tq = parse_rational(vt);
                    if (!tq) throw UsageError("--t must be a number");
                    sym->first = *tq;
                }
                if (sym && !vmode.empty()) {
                    try {
                        sym->second = parse_boundary_mode(vmode);
                    } catch (const std::invalid_argument& e) {
                        throw UsageError(e.what());
                    }
                }
                return verify_distribution(w, zq, sym, cap, seqs, tol, alpha);
            }
            if (vword.empty()) throw UsageError("verify needs --word and --z, --input, or --bijections");
            Word w = word_arg(vword);
            auto zv = params_arg(w, vz, std::nullopt);
            auto zq = exact_params(vz, zv);
            if (!vt.empty() || !vmode.empty()) {
                BoundaryMode m;
                try {
                    m = parse_boundary_mode(vmode.empty() ? "free" : vmode);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                auto tq = vt.empty() ? std::optional<mpq_class>(1) : parse_rational(vt);
                if (!tq) throw UsageError("--t must be a number");
                sym = std::make_pair(*tq, m);
            }
            double tt = sym ? sym->first.get_d() : 1.0;
            auto out = batch(nsamples, vthreads, vseed, [&](RandomSource& src) {
                std::vector<Partition> seq;
                if (sym) {
                    auto s = symmetric_schur_sample(w, zv, tt, sym->second, src);
                    seq.assign(s.lambdas.begin(), s.lambdas.begin() + static_cast<long>(w.size()) + 1);
                } else {
                    seq = schur_sample(w, zv, src).lambdas;
                }
                json j = json::array();
                for (const auto& p : seq) j.push_back(io::to_json(p));
                return j;
            });
            std::vector<oracle::Sequence> seqs;
            seqs.reserve(out.size());
            for (const auto& j : out) {
                oracle::Sequence s;
                for (const auto& p : j) s.push_back(io::partition_from_json(p));
                seqs.push_back(std::move(s));
            }
            return verify_distribution(w, zq, sym, cap, seqs, tol, alpha);
        } else if (*cv) {
            auto in = read_json(cin_path);
            std::vector<json> out;
            for (const auto& j : items(in)) out.push_back(sample_view(j, cto));
            write_text(cout_path, emit(out, false));
        } else if (*rd) {
            std::optional<RenderModel> model;
            if (!rmodel.empty()) {
                try {
                    model = parse_render_model(rmodel);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
            if (!rpalette.empty()) {
                std::stringstream ss(rpalette);
                std::string c;
                while (std::getline(ss, c, ',')) style.palette.push_back(c);
            }
            if (!(style.scale > 0)) throw UsageError("--scale must be positive");
            auto in = read_json(rin);
            if (in.is_array()) {
                if (in.empty()) throw std::invalid_argument("nothing to render");
                in = in.front();
            }
            write_text(rout, render(in, model, style));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
