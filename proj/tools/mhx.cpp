#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "mhx/runner.hpp"

namespace {

mhx::ReportDocument process_file(const std::string& path, const std::string& command,
                                 const mhx::RunOptions& options) {
    std::ifstream in(path);
    if (!in) {
        mhx::ReportDocument report;
        report.exit_code = 2;
        report.body["error"] = "cannot open file: " + path;
        report.body["command"] = command;
        report.body["exit_code"] = 2;
        return report;
    }
    std::ostringstream text;
    text << in.rdbuf();
    mhx::InstanceDocument doc;
    try {
        doc = mhx::parse_instance(text.str());
    } catch (const mhx::InputError& e) {
        mhx::ReportDocument report;
        report.exit_code = 2;
        report.body["error"] = e.what();
        report.body["command"] = command;
        report.body["file"] = path;
        report.body["exit_code"] = 2;
        return report;
    }
    if (doc.name.empty()) doc.name = path;
    return mhx::run(command, doc, options);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mhx - exact verdicts for mixed Hodge structures, weight filtrations,"
                 " nilpotent orbits and their limit gradings"};
    std::string command;
    std::vector<std::string> files;
    std::string ys_text = "1,2,4,8";
    std::string mode_text = "exact";
    std::string out_path;
    std::string s_text;
    std::string weights_text, content_text, ext_text;
    unsigned long seed = 0;
    unsigned jobs = 1;

    app.add_option("command", command, "one of: bigrading wfilt relwfilt grading-y factorize"
                                       " orbit-check admissible theorem4 trace gen")
        ->required();
    app.add_option("files", files, "instance JSON files");
    app.add_option("--ys", ys_text, "sample points y (comma-separated rationals)");
    app.add_option("--mode", mode_text, "trace mode: exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--jobs", jobs, "parallel workers across instance files")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "write the report JSON here instead of stdout");
    app.add_option("--s", s_text, "rational s for exact decoupled traces (default 0)");
    app.add_option("--weights", weights_text, "gen: weight filtration jumps, e.g. 0,2");
    app.add_option("--content", content_text,
                   "gen: graded content per weight, e.g. 0:0;2:1x2t1 (weight:d[xN][tT])");
    app.add_option("--ext", ext_text, "gen: extension generators, e.g. 2:1,3:1");
    CLI11_PARSE(app, argc, argv);

    const auto& commands = mhx::known_commands();
    if (std::find(commands.begin(), commands.end(), command) == commands.end()) {
        std::cerr << "unknown command: " << command << "\n";
        return 2;
    }

    auto emit = [&](const nlohmann::json& payload) {
        if (out_path.empty()) {
            std::cout << payload.dump(2) << "\n";
            return true;
        }
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return false;
        }
        out << payload.dump(2) << "\n";
        return true;
    };

    try {
        if (command == "gen") {
            if (weights_text.empty() && content_text.empty()) {
                std::cerr << "gen requires --weights (or --content)\n";
                return 2;
            }
            if (weights_text.empty()) weights_text = "0";
            const mhx::GeneratorSpec spec =
                mhx::parse_generator_spec(weights_text, content_text, ext_text, seed);
            const mhx::ReportDocument report = mhx::run_generate(spec);
            if (!emit(report.body)) return 2;
            return report.exit_code;
        }

        if (files.empty()) {
            std::cerr << command << " requires at least one instance file\n";
            return 2;
        }
        mhx::RunOptions options;
        options.ys = mhx::parse_rational_list(ys_text);
        options.mode = mode_text == "float" ? mhx::TraceMode::Float
                                            : mhx::TraceMode::ExactDecoupled;
        options.seed = seed;
        if (!s_text.empty()) {
            const mhx::Scalar s = mhx::parse_scalar(s_text);
            options.s_exact = s.re;
        }

        std::vector<mhx::ReportDocument> reports(files.size());
        if (jobs <= 1 || files.size() <= 1) {
            for (std::size_t i = 0; i < files.size(); ++i)
                reports[i] = process_file(files[i], command, options);
        } else {
            std::vector<std::future<mhx::ReportDocument>> futures;
            futures.reserve(files.size());
            for (const std::string& file : files)
                futures.push_back(std::async(std::launch::async, process_file, file, command,
                                             options));
            for (std::size_t i = 0; i < files.size(); ++i) reports[i] = futures[i].get();
        }

        int exit_code = 0;
        for (const auto& r : reports) exit_code = std::max(exit_code, r.exit_code);
        nlohmann::json payload;
        if (reports.size() == 1)
            payload = reports[0].body;
        else {
            payload = nlohmann::json::array();
            for (const auto& r : reports) payload.push_back(r.body);
        }
        if (!emit(payload)) return 2;
        return exit_code;
    } catch (const mhx::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
