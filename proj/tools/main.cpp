#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "hk/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact Hensel, implicit-function and Newton-Puiseux computations"};
    std::string command, path;
    std::optional<int> order, tprec;
    bool as_json = false;
    std::string names;
    for (const auto& c : hk::cli::commands()) names += (names.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + names)->required()->check(CLI::IsMember(hk::cli::commands()));
    app.add_option("file", path, "problem file, or - for stdin")->required();
    app.add_option("--order", order, "X-adic truncation order");
    app.add_option("--tprec", tprec, "t-adic precision");
    app.add_flag("--json", as_json, "print the JSON report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot read " << path << "\n";
            return 1;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const auto out = hk::cli::run(command, text, {order, tprec});
    for (const auto& d : out.report["diagnostics"])
        std::cerr << d.value("level", "") << ": " << d.value("message", "") << "\n";
    if (as_json)
        std::cout << out.report.dump(2) << "\n";
    else
        std::cout << hk::cli::render_text(out.report);
    return out.exit_code;
}
