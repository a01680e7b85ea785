#include "deltafock/export.hpp"
#include "deltafock/fock.hpp"
#include "deltafock/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace deltafock;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_identity = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& name)
{
    static const std::map<std::string, Format> table{
        {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    return table.at(name);
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + path + "' for writing");
    file << text;
    if (!file)
        throw UsageError("failed writing '" + path + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact delta-deformed Heisenberg algebra, Fock space and Hermite polynomials"};
    app.require_subcommand(1);

    int s_max = 1;
    int power = 0;
    int samples = 257;
    std::string format = "csv";
    std::string out;
    std::string method = "exact";
    std::string suite = "all";
    std::string quantity;
    std::vector<int> s_max_list;

    auto common = [&](CLI::App* sub, bool text_allowed) {
        sub->add_option("--format", format, "output format")
            ->check(text_allowed ? CLI::IsMember({"text", "csv", "json"}) : CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out, "output path (default stdout)");
    };

    auto* hermite = app.add_subcommand("hermite", "coefficients of H_s by recurrence, closed form and classical");
    hermite->add_option("--smax", s_max, "s_max, delta^2 = 1/s_max")->required();
    hermite->add_option("--s", power, "polynomial index, 0 <= s <= s_max")->required();
    common(hermite, false);

    auto* gram = app.add_subcommand("gram", "Gram matrix <s|s'> in units of sqrt(s_max/pi)");
    gram->add_option("--smax", s_max, "s_max, delta^2 = 1/s_max")->required();
    gram->add_option("--method", method, "exact, recurrence or both")
        ->check(CLI::IsMember({"exact", "recurrence", "both"}));
    common(gram, false);

    auto* verify = app.add_subcommand("verify", "run identity suites; exit 1 if any identity fails");
    verify->add_option("--smax", s_max, "s_max, delta^2 = 1/s_max")->required();
    verify->add_option("--suite", suite, "algebra, fock, limits or all")
        ->check(CLI::IsMember({"algebra", "fock", "limits", "all"}));
    common(verify, true);

    auto* states = app.add_subcommand("states", "wavefunction samples f_0..f_smax over [-pi/delta, pi/delta]");
    states->add_option("--smax", s_max, "s_max, delta^2 = 1/s_max")->required();
    states->add_option("--samples", samples, "number of phi samples (>= 16)");
    common(states, false);

    auto* limit = app.add_subcommand("limit", "convergence tables as s_max grows");
    limit->add_option("--quantity", quantity, "hermite, kernel, vacuum_norm or gaussian")
        ->required()
        ->check(CLI::IsMember({"hermite", "kernel", "vacuum_norm", "gaussian"}));
    limit->add_option("--smax", s_max_list, "comma-separated s_max values")->required()->delimiter(',');
    limit->add_option("--s", power, "polynomial index for quantity=hermite (default 4)");
    common(limit, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*hermite) {
            emit(export_hermite(DeformationParam(s_max), power, parse_format(format)), out);
        } else if (*gram) {
            const GramChoice choice = method == "exact"        ? GramChoice::exact
                                      : method == "recurrence" ? GramChoice::recurrence
                                                               : GramChoice::both;
            bool all_match = true;
            emit(export_gram(DeformationParam(s_max), choice, parse_format(format), &all_match), out);
            if (!all_match) {
                std::cerr << "gram: exact and recurrence routes disagree\n";
                return exit_identity;
            }
        } else if (*verify) {
            if (verify->count("--format") == 0)
                format = "text";
            const RunReport report = run_suite(suite, DeformationParam(s_max));
            emit(export_report(report, parse_format(format)), out);
            return report.passed() ? exit_ok : exit_identity;
        } else if (*states) {
            emit(export_states(DeformationParam(s_max), samples, parse_format(format)), out);
        } else if (*limit) {
            const LimitQuantity q = quantity == "hermite"  ? LimitQuantity::hermite
                                    : quantity == "kernel" ? LimitQuantity::kernel
                                    : quantity == "vacuum_norm" ? LimitQuantity::vacuum_norm
                                                                : LimitQuantity::gaussian;
            const int hermite_power = limit->count("--s") ? power : 4;
            emit(export_limit(q, s_max_list, parse_format(format), hermite_power), out);
        }
    } catch (const GramInconsistency& e) {
        std::cerr << "identity failure: " << e.what() << '\n';
        return exit_identity;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
