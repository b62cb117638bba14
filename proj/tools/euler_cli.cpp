#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "euler/harmonic.hpp"
#include "euler/parser.hpp"
#include "euler/serialize.hpp"
#include "euler/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace euler;

struct CommonOpts {
    int r = 0;
    std::string format = "text";
    int digits = 12;
    bool use_stdin = false;
};

void attach_common(CLI::App* cmd, CommonOpts& opts)
{
    cmd->add_option("--r", opts.r, "ambient index r of the algebra")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--digits", opts.digits, "significant digits of decimal renderings")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--stdin", opts.use_stdin, "read each expression as one line of stdin");
}

int resolve_r(CommonOpts& opts)
{
    if (opts.r == 0)
        if (const char* env = std::getenv("EULER_DEFAULT_R"))
            opts.r = std::atoi(env);
    if (opts.r < 1)
        throw std::domain_error("ambient index missing: pass --r or set EULER_DEFAULT_R");
    return opts.r;
}

std::string next_expression(const CommonOpts& opts, std::vector<std::string>& positional)
{
    if (opts.use_stdin) {
        std::string line;
        if (!std::getline(std::cin, line))
            throw std::domain_error("expected an expression on stdin");
        return line;
    }
    if (positional.empty())
        throw std::domain_error("expected an expression argument");
    std::string out = positional.front();
    positional.erase(positional.begin());
    return out;
}

void require_not_csv(const CommonOpts& opts)
{
    if (opts.format == "csv")
        throw std::domain_error("csv output is only available for eval");
}

void emit_element(const CommonOpts& opts, const std::string& command, const std::string& exact)
{
    if (opts.format == "json") {
        json out = {{"command", command}, {"r", opts.r},
                    {"result", {{"exact", exact}, {"approx", nullptr}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << exact << "\n";
    }
}

int run_unary(CLI::App* cmd, const std::string& name, CommonOpts& opts,
              std::vector<std::string>& positional)
{
    (void)cmd;
    resolve_r(opts);
    require_not_csv(opts);
    AlgebraElement x = parse_word_expression(next_expression(opts, positional), opts.r);
    if (name == "coproduct") {
        emit_element(opts, name, to_string(coproduct(x)));
        return 0;
    }
    AlgebraElement result(opts.r);
    if (name == "antipode")
        result = antipode(x);
    else if (name == "overline")
        result = overline(x);
    else if (name == "reverse")
        result = reverse_linear(x);
    emit_element(opts, name, to_string(result));
    return 0;
}

int run_mul(CommonOpts& opts, std::vector<std::string>& positional)
{
    resolve_r(opts);
    require_not_csv(opts);
    AlgebraElement x = parse_word_expression(next_expression(opts, positional), opts.r);
    AlgebraElement y = parse_word_expression(next_expression(opts, positional), opts.r);
    emit_element(opts, "mul", to_string(star(x, y)));
    return 0;
}

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

int run_eval(CommonOpts& opts, std::vector<std::string>& positional, const std::string& kind,
             int n)
{
    resolve_r(opts);
    if (kind != "A" && kind != "S")
        throw std::domain_error("--kind must be A or S");
    if (n < 0)
        throw std::domain_error("--n must be nonnegative");
    AlgebraElement x = parse_word_expression(next_expression(opts, positional), opts.r);
    if (x.terms().size() != 1 || !(x.terms().begin()->second == 1))
        throw std::domain_error("eval expects a single word with unit coefficient");
    const Word& w = x.terms().begin()->first;

    Cyclotomic value = kind == "A" ? eval_A(w, n) : eval_S(w, n);
    ComplexApprox approx = approximate(value, opts.digits);
    std::string exact = to_string(value);
    std::string approx_pair = "(" + approx.real_text + ", " + approx.imag_text + ")";

    if (opts.format == "json") {
        json out = {{"command", "eval"},
                    {"r", opts.r},
                    {"word", to_string(w)},
                    {"n", n},
                    {"kind", kind},
                    {"result", {{"exact", exact}, {"approx", approx_pair}}}};
        std::cout << out.dump(2) << "\n";
    } else if (opts.format == "csv") {
        std::cout << "word,n,kind,exact,re,im\n"
                  << csv_quote(to_string(w)) << "," << n << "," << kind << ","
                  << csv_quote(exact) << "," << approx.real_text << "," << approx.imag_text
                  << "\n";
    } else {
        std::cout << exact << "\n" << approx_pair << "\n";
    }
    return 0;
}

int run_lyndon(CommonOpts& opts, int degree)
{
    resolve_r(opts);
    require_not_csv(opts);
    if (degree < 1)
        throw std::domain_error("--degree must be positive");
    Integer count = lyndon_count(degree, opts.r);
    std::vector<std::string> words;
    for (const Word& w : enumerate_words(degree, opts.r))
        if (is_lyndon(w))
            words.push_back(to_string(w));

    if (opts.format == "json") {
        json out = {{"command", "lyndon"},
                    {"r", opts.r},
                    {"degree", degree},
                    {"result", {{"count", count.str()}, {"words", words}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "count: " << count.str() << "\n";
        for (const std::string& w : words)
            std::cout << w << "\n";
    }
    return 0;
}

int run_verify_cmd(CommonOpts& opts, const std::string& suite, const VerifyOptions& base)
{
    resolve_r(opts);
    require_not_csv(opts);
    VerifyOptions vo = base;
    vo.r = opts.r;
    std::vector<VerifyReport> reports = run_verify(suite, vo);

    bool ok = true;
    double total_ms = 0;
    for (const VerifyReport& rep : reports) {
        ok = ok && rep.ok();
        total_ms += rep.wall_ms;
    }

    if (opts.format == "json") {
        json suites = json::array();
        for (const VerifyReport& rep : reports) {
            json failures = json::array();
            for (const VerifyFailure& f : rep.failures)
                failures.push_back({{"case", f.case_id}, {"lhs", f.lhs}, {"rhs", f.rhs}});
            suites.push_back(
                {{"name", rep.suite}, {"cases", rep.cases}, {"failures", failures}});
        }
        json out = {{"command", "verify"},
                    {"r", opts.r},
                    {"result", {{"suites", suites}, {"ok", ok}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const VerifyReport& rep : reports) {
            std::cout << "suite " << rep.suite << ": " << rep.cases << " cases, "
                      << rep.failures.size() << " failures\n";
            for (const VerifyFailure& f : rep.failures)
                std::cout << "  FAIL " << f.case_id << "\n    lhs = " << f.lhs
                          << "\n    rhs = " << f.rhs << "\n";
        }
        std::cout << (ok ? "verify: OK" : "verify: FAILED") << "\n";
    }
    // timing goes to stderr so reports stay bit-identical across runs
    std::cerr << "elapsed: " << total_ms << " ms\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact quasi-shuffle algebra of words and multiple harmonic sums"};
    app.require_subcommand(1);

    CommonOpts mul_opts, cop_opts, ant_opts, ovl_opts, rev_opts, eval_opts, lyn_opts, ver_opts;
    std::vector<std::string> mul_args, cop_args, ant_args, ovl_args, rev_args, eval_args;
    std::string eval_kind = "A";
    int eval_n = 0;
    int lyndon_degree = 0;
    std::string verify_suite = "all";
    VerifyOptions verify_base;

    CLI::App* mul = app.add_subcommand("mul", "quasi-shuffle product of two expressions");
    attach_common(mul, mul_opts);
    mul->add_option("expr", mul_args, "two word expressions");

    CLI::App* cop = app.add_subcommand("coproduct", "deconcatenation coproduct");
    attach_common(cop, cop_opts);
    cop->add_option("expr", cop_args, "word expression");

    CLI::App* ant = app.add_subcommand("antipode", "antipode of an expression");
    attach_common(ant, ant_opts);
    ant->add_option("expr", ant_args, "word expression");

    CLI::App* ovl = app.add_subcommand("overline", "sum of coarsenings, extended linearly");
    attach_common(ovl, ovl_opts);
    ovl->add_option("expr", ovl_args, "word expression");

    CLI::App* rev = app.add_subcommand("reverse", "word reversal, extended linearly");
    attach_common(rev, rev_opts);
    rev->add_option("expr", rev_args, "word expression");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a harmonic sum exactly");
    attach_common(eval, eval_opts);
    eval->add_option("--kind", eval_kind, "A (strict) or S (weak)");
    eval->add_option("--n", eval_n, "upper summation bound")->required();
    eval->add_option("word", eval_args, "single word");

    CLI::App* lyn = app.add_subcommand("lyndon", "count and list Lyndon words of a degree");
    attach_common(lyn, lyn_opts);
    lyn->add_option("--degree", lyndon_degree, "degree to enumerate")->required();

    CLI::App* ver = app.add_subcommand("verify", "run identity verification suites");
    attach_common(ver, ver_opts);
    ver->add_option("--suite", verify_suite,
                    "hopf|antipode|homomorphism|duality|symmetric|all");
    ver->add_option("--max-degree", verify_base.max_degree, "word degree bound");
    ver->add_option("--max-length", verify_base.max_length, "word length bound");
    ver->add_option("--max-n", verify_base.max_n, "summation bound");
    ver->add_option("--seed", verify_base.seed, "seed of the documented generator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*mul)
            return run_mul(mul_opts, mul_args);
        if (*cop)
            return run_unary(cop, "coproduct", cop_opts, cop_args);
        if (*ant)
            return run_unary(ant, "antipode", ant_opts, ant_args);
        if (*ovl)
            return run_unary(ovl, "overline", ovl_opts, ovl_args);
        if (*rev)
            return run_unary(rev, "reverse", rev_opts, rev_args);
        if (*eval)
            return run_eval(eval_opts, eval_args, eval_kind, eval_n);
        if (*lyn)
            return run_lyndon(lyn_opts, lyndon_degree);
        if (*ver)
            return run_verify_cmd(ver_opts, verify_suite, verify_base);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
