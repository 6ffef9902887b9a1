// minlap: validate connection-data documents, compute their minimal Laplace
// transform, and check a fixture corpus against stored golden reports.
// Exit codes: 0 success, 1 domain failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "minlap/minlap.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw minlap::parse_error("cannot read " + p.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw minlap::domain_error("cannot write " + p.string());
    out << text;
}

std::vector<fs::path> fixture_files(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (p.extension() != ".json") continue;
        if (p.stem().string().ends_with(".report")) continue;
        files.push_back(p);
    }
    std::sort(files.begin(), files.end());
    return files;
}

fs::path golden_path(const fs::path& input) {
    fs::path p = input;
    p.replace_extension(".report.json");
    return p;
}

int cmd_validate(const std::string& path) {
    minlap::ParabolicConnection conn = minlap::parse_connection_text(read_file(path));
    minlap::ValidationReport rf = minlap::validate_resonance_free(conn);
    minlap::ValidationReport ad = minlap::validate_admissible(conn);
    minlap::ordered_json rep;
    rep["input_digest"] = minlap::fnv1a_hex(minlap::connection_to_json(conn).dump());
    rep["validation"] = {{"resonance_free", minlap::validation_to_json(rf)},
                         {"admissible", minlap::validation_to_json(ad)}};
    std::cout << rep.dump(2) << "\n";
    if (rf.passed() && ad.passed()) return 0;
    std::cerr << "validation failed\n";
    return 1;
}

std::string report_text(const fs::path& input, const minlap::ReportOptions& opt, bool timing) {
    minlap::ParabolicConnection conn = minlap::parse_connection_text(read_file(input));
    minlap::require_transform_ready(conn);
    auto start = std::chrono::steady_clock::now();
    minlap::ordered_json rep = minlap::run_report(conn, opt);
    if (timing) {
        auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cerr << input.filename().string() << ": " << ms.count() << " ms\n";
    }
    return rep.dump(2) + "\n";
}

int cmd_transform(const std::string& path, const minlap::ReportOptions& opt, const std::string& out,
                  bool timing) {
    if (fs::is_directory(path)) {
        fs::path outdir = out.empty() ? fs::path(path) : fs::path(out);
        fs::create_directories(outdir);
        for (const fs::path& input : fixture_files(path)) {
            fs::path dest = outdir / golden_path(input.filename());
            write_file(dest, report_text(input, opt, timing));
            std::cout << input.filename().string() << ": report written\n";
        }
        return 0;
    }
    std::string text = report_text(path, opt, timing);
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    return 0;
}

int cmd_corpus_check(const std::string& dir) {
    if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir);
    std::vector<fs::path> files = fixture_files(dir);
    if (files.empty()) {
        std::cerr << "warning: no fixtures in " << dir << "\n";
        std::cout << "corpus-check: 0 entries\n";
        return 0;
    }
    minlap::ReportOptions opt;
    opt.full = true;
    opt.involution = true;
    for (const fs::path& input : files) {
        fs::path golden = golden_path(input);
        if (!fs::exists(golden)) {
            std::cout << input.filename().string() << ": golden report missing\n";
            return 1;
        }
        std::string stored = read_file(golden);
        std::string computed = report_text(input, opt, false);
        if (stored != computed) {
            std::istringstream a(stored), b(computed);
            std::string la, lb;
            int line = 0;
            while (true) {
                ++line;
                bool ga = static_cast<bool>(std::getline(a, la));
                bool gb = static_cast<bool>(std::getline(b, lb));
                if (!ga && !gb) break;
                if (!ga || !gb || la != lb) {
                    std::cout << input.filename().string() << ": differs at line " << line << "\n";
                    std::cout << "  stored:   " << (ga ? la : std::string("<end>")) << "\n";
                    std::cout << "  computed: " << (gb ? lb : std::string("<end>")) << "\n";
                    break;
                }
            }
            return 1;
        }
        std::cout << input.filename().string() << ": identical\n";
    }
    std::cout << "corpus-check: " << files.size() << " entries, all identical\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal Laplace transform of parabolic connections"};
    app.require_subcommand(1);

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check a connection-data document");
    validate->add_option("path", validate_path, "document to check")->required();

    std::string transform_path, transform_out;
    bool predict_only = false, full = false, involution = false, timing = false;
    CLI::App* transform = app.add_subcommand("transform", "compute the transform and its report");
    transform->add_option("path", transform_path, "document or fixture directory")->required();
    CLI::Option* po = transform->add_flag("--predict-only", predict_only, "prediction only, no cokernel");
    transform->add_flag("--full", full, "include the X(xi) entries")->excludes(po);
    transform->add_flag("--involution", involution, "append round-trip verdicts")->excludes(po);
    transform->add_option("--out", transform_out, "output file (or directory for corpus input)");
    transform->add_flag("--timing", timing, "per-entry wall time on stderr");

    std::string corpus_dir;
    CLI::App* corpus = app.add_subcommand("corpus-check", "recompute and diff stored golden reports");
    corpus->add_option("dir", corpus_dir, "fixture directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(validate_path);
        if (app.got_subcommand(transform)) {
            minlap::ReportOptions opt;
            opt.predict_only = predict_only;
            opt.full = full;
            opt.involution = involution;
            return cmd_transform(transform_path, opt, transform_out, timing);
        }
        return cmd_corpus_check(corpus_dir);
    } catch (const minlap::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const minlap::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
