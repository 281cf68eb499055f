#include "hdepth/cli.hpp"

#include "hdepth/couples.hpp"
#include "hdepth/decomp.hpp"
#include "hdepth/errors.hpp"
#include "hdepth/json_io.hpp"
#include "hdepth/kernels.hpp"
#include "hdepth/oracle.hpp"
#include "hdepth/semigroup.hpp"
#include "hdepth/star.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#ifdef HDEPTH_HAVE_OPENMP
#include <omp.h>
#endif

namespace hdepth::cli {

namespace {

using json_io::json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

json error_json(const std::string& kind, const std::string& message)
{
    return {{"error", kind}, {"message", message}};
}

json read_json(const std::string& path, std::istream& in)
{
    try {
        if (path == "-")
            return json::parse(in);
        std::ifstream file(path);
        if (!file)
            throw input_error("FileNotFound", "cannot open " + path);
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw input_error("MalformedJson", e.what());
    }
}

json_io::SeriesDocument read_series(const std::string& path, std::istream& in, bool allow_common_factor)
{
    auto doc = json_io::parse_series(read_json(path, in));
    if (!allow_common_factor)
        doc.series.pair();
    return doc;
}

json semigroup_json(const SemigroupPair& s)
{
    return {{"alpha", s.alpha()},         {"beta", s.beta()},
            {"gaps", s.gaps()},           {"conductor", s.conductor()},
            {"genus", s.genus()},         {"apery_alpha", s.apery(s.alpha())},
            {"apery_beta", s.apery(s.beta())}};
}

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

json selftest(std::uint64_t seed, bool quick)
{
    std::vector<Check> checks;
    const std::vector<std::pair<int, int>> pairs = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 7},
                                                    {4, 5}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
    {
        Check c{"present_matches_brute_force", true, {}};
        const std::int64_t top = quick ? 100 : 500;
        for (auto [a, b] : pairs) {
            const auto s = SemigroupPair::from_weights(a, b);
            for (std::int64_t n = 1; n <= top && c.passed; ++n)
                if (!(s.present(n) == oracle::brute_present(s, n))) {
                    c.passed = false;
                    c.detail = "(" + std::to_string(a) + "," + std::to_string(b) + ") n=" + std::to_string(n);
                }
        }
        checks.push_back(c);
    }
    {
        Check c{"couple_count_matches_brute_force", true, {}};
        const std::int64_t limit = quick ? 60 : 150;
        for (std::int64_t a = 1; a * a <= limit && c.passed; ++a)
            for (std::int64_t b = a + 1; a * b <= limit && c.passed; ++b) {
                if (std::gcd(a, b) != 1)
                    continue;
                const auto s = SemigroupPair::from_weights(a, b);
                const auto table = couple_table(s);
                const bool ok = count_couples(s) == oracle::brute_count_couples(s) &&
                                Integer(table->size()) == count_couples(s);
                if (!ok) {
                    c.passed = false;
                    c.detail = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
                for (std::size_t k = 0; k < table->size() && c.passed; ++k)
                    if (!is_fundamental(s, table->lhs(k), table->rhs(k))) {
                        c.passed = false;
                        c.detail = "non-fundamental couple for (" + std::to_string(a) + "," + std::to_string(b) + ")";
                    }
            }
        checks.push_back(c);
    }
    {
        Check c{"corpus_satisfies_couple_inequalities", true, {}};
        for (auto [a, b] : pairs) {
            const auto s = SemigroupPair::from_weights(a, b);
            const auto corpus = oracle::make_corpus(s, seed + a * 31 + b, quick ? 10 : 50, 5, 2 * a * b);
            for (const auto& m : corpus.members)
                if (c.passed && (!check_star(m.series).holds || !check_inequality_24(m.series))) {
                    c.passed = false;
                    c.detail = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
        }
        checks.push_back(c);
    }
    {
        Check c{"star_matches_brute_force_decomposition", true, {}};
        const int degree = quick ? 4 : 6;
        for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}}) {
            const auto s = SemigroupPair::from_weights(a, b);
            std::vector<int> digits(static_cast<std::size_t>(degree + 1), 0);
            while (c.passed) {
                LaurentPoly n;
                for (int k = 0; k <= degree; ++k)
                    n.add_term(k, digits[static_cast<std::size_t>(k)]);
                const RationalSeries h(s, n.times_one_minus(1), true, true);
                if (!h.is_zero() && is_nonnegative(h)) {
                    const auto brute = oracle::brute_decomposable_dim1(h);
                    if (brute != oracle::SearchResult::budget_exceeded &&
                        (brute == oracle::SearchResult::decomposable) != check_star(h).holds) {
                        c.passed = false;
                        c.detail = "(" + std::to_string(a) + "," + std::to_string(b) + ") numerator " + n.to_string();
                    }
                }
                std::size_t k = 0;
                while (k < digits.size() && ++digits[k] == 3)
                    digits[k++] = 0;
                if (k == digits.size())
                    break;
            }
        }
        checks.push_back(c);
    }
    {
        Check c{"parallel_kernels_match_serial", true, {}};
        const auto s = SemigroupPair::from_weights(6, 11);
        const auto poset = kernels::build_gap_poset(s);
        const auto serial = kernels::serial::enumerate(poset);
        const auto parallel = kernels::parallel::enumerate(poset);
        c.passed = serial.size() == parallel.size();
        for (std::size_t k = 0; k < serial.size() && c.passed; ++k)
            c.passed = serial.couple(k) == parallel.couple(k);
        if (!c.passed)
            c.detail = "enumeration order differs";
        checks.push_back(c);
    }
    json out{{"seed", seed}, {"quick", quick}};
    bool all = true;
    json list = json::array();
    for (const auto& c : checks) {
        all = all && c.passed;
        json entry{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        list.push_back(std::move(entry));
    }
    out["passed"] = all;
    out["checks"] = std::move(list);
    return out;
}

void apply_thread_env()
{
#ifdef HDEPTH_HAVE_OPENMP
    if (const char* env = std::getenv("HDEPTH_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            omp_set_num_threads(n);
    }
#endif
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in)
{
    apply_thread_env();

    CLI::App app{"Hilbert depth of series over two-variable weighted polynomial rings"};
    app.require_subcommand(1);
    bool quiet_status = false;
    app.add_flag("--quiet-status", quiet_status, "Exit with 1 when the verdict is negative");

    std::int64_t w1 = 0, w2 = 0;
    auto* sg = app.add_subcommand("semigroup", "Gaps, conductor, genus and Apery sets");
    sg->add_option("A", w1)->required();
    sg->add_option("B", w2)->required();

    bool count_only = false, jsonl = false;
    std::int64_t limit = -1;
    auto* cp = app.add_subcommand("couples", "Fundamental couples of <A, B>");
    cp->add_option("A", w1)->required();
    cp->add_option("B", w2)->required();
    cp->add_flag("--count", count_only, "Only count them");
    cp->add_option("--limit", limit, "Print at most N couples");
    cp->add_flag("--jsonl", jsonl, "One couple per line");

    std::string file;
    auto* ck = app.add_subcommand("check", "Decide the couple inequalities for a series");
    ck->add_option("FILE", file, "Series JSON, or - for stdin")->required();

    auto* dp = app.add_subcommand("depth", "Hilbert depth with certificate");
    dp->add_option("FILE", file)->required();

    std::string out_path;
    auto* dc = app.add_subcommand("decompose", "Explicit decomposition witness");
    dc->add_option("FILE", file)->required();
    dc->add_option("-o,--output", out_path, "Also write the result to this file");

    std::int64_t d = 0;
    auto* pp = app.add_subcommand("pd", "Largest r with (1 - t^d)^r H nonnegative");
    pp->add_option("FILE", file)->required();
    pp->add_option("--d", d, "Exponent d (default alpha*beta)");

    bool quick = false;
    std::uint64_t seed = 1;
    auto* st = app.add_subcommand("selftest", "Run the oracle suite");
    st->add_flag("--quick", quick);
    st->add_option("--seed", seed);

    std::vector<std::string> argv{"hdepth"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargv;
    for (const auto& a : argv)
        cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << json{{"help", app.help()}}.dump() << '\n';
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        out << error_json("Usage", e.what()).dump() << '\n';
        return exit_input;
    }

    bool negative = false;
    try {
        if (sg->parsed()) {
            out << semigroup_json(SemigroupPair::from_weights(w1, w2)).dump() << '\n';
        } else if (cp->parsed()) {
            const auto s = SemigroupPair::from_weights(w1, w2);
            if (count_only) {
                out << json{{"count", json_io::integer(count_couples(s))}}.dump() << '\n';
            } else if (jsonl) {
                std::int64_t emitted = 0;
                for_each_couple(s, [&](const FundamentalCouple& c) {
                    if (limit >= 0 && emitted >= limit)
                        return false;
                    out << json_io::to_json(c).dump() << '\n';
                    ++emitted;
                    return true;
                });
            } else {
                json list = json::array();
                std::int64_t emitted = 0;
                for_each_couple(s, [&](const FundamentalCouple& c) {
                    if (limit >= 0 && emitted >= limit)
                        return false;
                    list.push_back(json_io::to_json(c));
                    ++emitted;
                    return true;
                });
                out << json{{"alpha", s.alpha()}, {"beta", s.beta()}, {"couples", std::move(list)}}.dump() << '\n';
            }
        } else if (ck->parsed()) {
            const auto doc = read_series(file, in, true);
            const auto verdict = check_star_general(doc.series);
            negative = !verdict.holds;
            out << json_io::to_json(verdict).dump() << '\n';
        } else if (dp->parsed()) {
            const auto doc = read_series(file, in, true);
            const bool coprime = std::gcd(doc.alpha, doc.beta) == 1;
            const auto report = coprime && doc.terms
                                    ? hilbert_depth(doc.series.pair(), *doc.terms)
                                    : hilbert_depth(doc.series);
            negative = report.hdep == 0;
            out << json_io::to_json(doc.alpha, doc.beta, report).dump() << '\n';
        } else if (dc->parsed()) {
            const auto doc = read_series(file, in, false);
            json result;
            try {
                const auto dec = doc.terms ? decompose(doc.series.pair(), *doc.terms) : decompose(doc.series);
                result = json_io::to_json(doc.alpha, doc.beta, dec);
            } catch (const StarFails& e) {
                negative = true;
                result = {{"decomposable", false},
                          {"reason", "StarFails"},
                          {"violation", json_io::to_json(StarVerdict{false, e.violation()})["violation"]}};
            } catch (const NotFound&) {
                negative = true;
                result = {{"decomposable", false}, {"reason", "NotFound"}};
            }
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f)
                    throw input_error("FileNotWritable", "cannot write " + out_path);
                f << result.dump(2) << '\n';
            }
            out << result.dump() << '\n';
        } else if (pp->parsed()) {
            const auto doc = read_series(file, in, false);
            const std::int64_t step = d > 0 ? d : doc.alpha * doc.beta;
            const auto r = pd(doc.series, step);
            out << json{{"d", step}, {"pd", r ? json(*r) : json("unbounded")}}.dump() << '\n';
        } else if (st->parsed()) {
            const json report = selftest(seed, quick);
            out << report.dump() << '\n';
            if (!report["passed"].get<bool>())
                return exit_internal;
        }
    } catch (const InputError& e) {
        out << error_json(e.kind(), e.what()).dump() << '\n';
        return exit_input;
    } catch (const InternalError& e) {
        out << error_json(e.kind(), e.what()).dump() << '\n';
        return exit_internal;
    } catch (const std::exception& e) {
        out << error_json("Internal", e.what()).dump() << '\n';
        return exit_internal;
    }
    return quiet_status && negative ? exit_negative : exit_ok;
}

} // namespace hdepth::cli
