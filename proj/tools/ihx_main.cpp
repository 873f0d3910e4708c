#include <CLI11.hpp>

#include "ihx/control.hpp"
#include "ihx/io.hpp"
#include "ihx/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ihx;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep))
        out.push_back(item);
    return out;
}

Perversity parse_perversity_flag(const std::string& text)
{
    Perversity p;
    for (const auto& t : split(text, ','))
        try {
            std::size_t used = 0;
            p.values.push_back(std::stoi(t, &used));
            if (used != t.size())
                throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed perversity entry '" + t + "'");
        }
    if (p.values.size() < 3)
        throw std::runtime_error("perversity needs entries p_0..p_n with n >= 2");
    return p;
}

/// Entries "j=rational", e.g. --alpha 3=1 --beta 3=3/2.
std::map<int, Rational> parse_param_entries(const std::vector<std::string>& entries,
                                            const std::string& flag)
{
    std::map<int, Rational> out;
    for (const auto& e : entries) {
        auto eq = e.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("--" + flag + " entries must look like j=value, got '" + e +
                                     "'");
        int j = 0;
        try {
            std::size_t used = 0;
            j = std::stoi(e.substr(0, eq), &used);
            if (used != eq)
                throw std::invalid_argument(e);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed codimension in '" + e + "'");
        }
        out[j] = parse_rational(e.substr(eq + 1));
    }
    return out;
}

void emit(const Report& r, const std::string& format)
{
    std::cout << (format == "records" ? r.render_records() : r.render_table());
}

Report header(const std::string& command)
{
    Report r;
    r.add("tool", tool_version);
    r.add("command", command);
    return r;
}

int cmd_betti(const std::string& path, const std::string& format)
{
    std::string text = read_file(path);
    auto pc = parse_complex_file(text);
    Report r = header("betti");
    r.add("input", digest_hex(text));
    r.note("ordinary betti numbers of " + path);
    for (const auto& [k, v] : betti_numbers(pc.filtered.ambient))
        r.add("betti." + std::to_string(k), v);
    emit(r, format);
    return 0;
}

int cmd_ih(const std::string& path, const std::string& perversity_flag,
           const std::vector<std::string>& alpha, const std::vector<std::string>& beta,
           const std::string& format)
{
    std::string text = read_file(path);
    auto pc = parse_complex_file(text);
    if (!pc.has_filtration)
        throw std::runtime_error("filtration required for ih");
    Report r = header("ih");
    r.add("input", digest_hex(text));

    Perversity p;
    if (!alpha.empty() || !beta.empty()) {
        ControlParams params;
        params.n = pc.filtered.n;
        params.alpha = parse_param_entries(alpha, "alpha");
        params.beta = parse_param_entries(beta, "beta");
        p = perversity_from_control(params);
        for (int j : params.active()) {
            r.add("control.alpha." + std::to_string(j), rational_to_string(params.alpha.at(j)));
            r.add("control.beta." + std::to_string(j), rational_to_string(params.beta.at(j)));
            r.add("control.floor." + std::to_string(j), pole_exponent(params, j));
        }
        r.note("perversity derived from control parameters: " + p.str());
    } else if (!perversity_flag.empty()) {
        p = parse_perversity_flag(perversity_flag);
        if (static_cast<int>(p.values.size()) != pc.filtered.n + 1)
            throw std::runtime_error("perversity has " + std::to_string(p.values.size()) +
                                     " entries, expected " + std::to_string(pc.filtered.n + 1));
        if (!p.valid_gm())
            throw std::runtime_error("perversity " + p.str() + " violates the growth axioms");
    } else {
        p = zero_perversity(pc.filtered.n);
    }
    r.add("perversity", p.str());
    r.note("intersection betti of " + path);
    for (const auto& [k, v] : intersection_betti(pc.filtered, p))
        r.add("ih." + std::to_string(k), v);
    emit(r, format);
    return 0;
}

int cmd_cyclic(const std::string& path, const std::string& which, int max_degree,
               const std::string& format)
{
    std::string text = read_file(path);
    FiniteAlgebra a = parse_algebra_file(text);
    Report r = header("cyclic");
    r.add("input", digest_hex(text));
    r.add("which", which);
    r.add("max-degree", static_cast<long>(max_degree));
    if (which == "hh") {
        r.note("Hochschild betti, reliable in degrees 0.." + std::to_string(max_degree - 1));
        for (const auto& [k, v] : hh_betti(a, max_degree))
            r.add("hh." + std::to_string(k), v);
    } else if (which == "hc") {
        r.note("cyclic betti, reliable in degrees 0.." + std::to_string(max_degree - 2));
        auto hc = cyclic_betti(mixed_from_algebra(a, max_degree), max_degree);
        for (const auto& [k, v] : hc)
            if (k <= max_degree - 2)
                r.add("hc." + std::to_string(k), v);
    } else if (which == "hp") {
        auto hp = periodic_betti(mixed_from_algebra(a, max_degree), max_degree);
        r.note("stabilized periodicity ranks (tower: " + hp.detail + ")");
        r.add("hp.even", hp.even);
        r.add("hp.odd", hp.odd);
        r.add("hp.stabilized", hp.stabilized ? "yes" : "no");
    } else {
        auto rep = sbi_check(mixed_from_algebra(a, max_degree), max_degree);
        r.note("rank-exactness of the Connes sequence, degrees 0.." +
               std::to_string(max_degree - 2));
        for (const auto& node : rep.nodes)
            r.add("sbi." + node.at + "." + std::to_string(node.degree),
                  node.exact ? "exact" : "broken");
        r.add("sbi.all", rep.all_exact ? "exact" : "broken");
    }
    emit(r, format);
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& convention, const std::string& format)
{
    std::vector<SuiteResult> results;
    if (suite.empty())
        results = run_all_suites();
    else
        results.push_back(run_verify_suite(suite));
    Report r = header("verify");
    r.add("cutoff-convention", convention);
    long total = 0, failed = 0;
    for (const auto& s : results) {
        long bad = 0;
        for (const auto& c : s.checks) {
            ++total;
            r.add(c.name, c.pass ? "pass" : "fail");
            if (!c.pass) {
                ++failed;
                ++bad;
                r.add(c.name + ".expected", c.expected);
                r.add(c.name + ".actual", c.actual);
            }
        }
        r.note("suite " + s.name + ": " + std::to_string(s.checks.size()) + " checks, " +
               std::to_string(bad) + " failed");
    }
    r.add("checks.total", total);
    r.add("checks.failed", failed);
    emit(r, format);
    return 0; // failures are report content, not process errors
}

int cmd_perversity(int n, const std::vector<std::string>& alpha,
                   const std::vector<std::string>& beta, const std::string& format)
{
    ControlParams params;
    params.n = n;
    params.alpha = parse_param_entries(alpha, "alpha");
    params.beta = parse_param_entries(beta, "beta");
    Perversity p = perversity_from_control(params);
    Report r = header("perversity");
    for (int j : params.active())
        r.add("floor." + std::to_string(j), pole_exponent(params, j));
    r.add("perversity", p.str());
    r.note("p_j = j - 2 - floor(beta_j/alpha_j), minimal growth elsewhere");
    emit(r, format);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-arithmetic workbench: intersection homology, cyclic homology, and the "
                 "pole-to-perversity bridge"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string complex_path, algebra_path, perversity_flag, which = "hh", suite, convention =
                                                                                      "both";
    std::vector<std::string> alpha, beta;
    int max_degree = 5, dim = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "records"}));
    };

    auto* betti = app.add_subcommand("betti", "ordinary betti numbers of a complex file");
    betti->add_option("file", complex_path, "complex file")->required();
    add_format(betti);

    auto* ih = app.add_subcommand("ih", "intersection betti numbers of a filtered complex");
    ih->add_option("file", complex_path, "complex file with filtration")->required();
    ih->add_option("--perversity", perversity_flag, "comma-separated p_0,...,p_n");
    ih->add_option("--alpha", alpha, "pinching exponents as j=rational entries");
    ih->add_option("--beta", beta, "pole orders as j=rational entries");
    add_format(ih);

    auto* cyc = app.add_subcommand("cyclic", "Hochschild/cyclic/periodic homology of an algebra");
    cyc->add_option("file", algebra_path, "algebra file")->required();
    cyc->add_option("--which", which, "hh, hc, hp or sbi")
        ->check(CLI::IsMember({"hh", "hc", "hp", "sbi"}));
    cyc->add_option("--max-degree", max_degree, "truncation degree K")->check(CLI::Range(2, 8));
    add_format(cyc);

    auto* verify = app.add_subcommand("verify", "run the built-in cross-check suites");
    verify->add_option("suite", suite, "suite name (default: all)");
    verify->add_option("--cutoff-convention", convention, "cutoff candidate to highlight")
        ->check(CLI::IsMember({"m-1", "m", "both"}));
    add_format(verify);

    auto* perv = app.add_subcommand("perversity", "derive a perversity from control parameters");
    perv->add_option("--dim", dim, "ambient dimension n")->required();
    perv->add_option("--alpha", alpha, "pinching exponents as j=rational entries")->required();
    perv->add_option("--beta", beta, "pole orders as j=rational entries")->required();
    add_format(perv);

    CLI11_PARSE(app, argc, argv);

    try {
        if (betti->parsed())
            return cmd_betti(complex_path, format);
        if (ih->parsed())
            return cmd_ih(complex_path, perversity_flag, alpha, beta, format);
        if (cyc->parsed())
            return cmd_cyclic(algebra_path, which, max_degree, format);
        if (verify->parsed())
            return cmd_verify(suite, convention, format);
        if (perv->parsed())
            return cmd_perversity(dim, alpha, beta, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
