#include "cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef PAIRLAB_DEFAULT_CORPUS_DIR
#define PAIRLAB_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace pairlab::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string default_corpus_dir() {
    if (const char* env = std::getenv("PAIRLAB_CORPUS_DIR"); env != nullptr && *env != '\0') return env;
    return PAIRLAB_DEFAULT_CORPUS_DIR;
}

namespace {

// Arguments of the form "corpus:<relative path>" point into the corpus directory.
std::vector<std::string> resolve_args(const json& args, const fs::path& root) {
    std::vector<std::string> out;
    for (const auto& a : args) {
        std::string s = a.get<std::string>();
        if (s.rfind("corpus:", 0) == 0) s = (root / s.substr(7)).string();
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

int verify_corpus(const std::string& dir, std::ostream& out, std::ostream& err) {
    const fs::path root(dir);
    const fs::path cases_dir = root / "cases";
    if (!fs::is_directory(cases_dir)) {
        err << "error: no corpus cases under " << cases_dir.string() << "\n";
        return kMalformedInput;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(cases_dir)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    json results = json::array();
    int passed = 0;
    int failed = 0;
    for (const auto& file : files) {
        std::ifstream in(file);
        json cases;
        try {
            cases = json::parse(in);
        } catch (const json::parse_error& e) {
            err << "error: " << file.string() << ": " << e.what() << "\n";
            return kMalformedInput;
        }
        for (const auto& c : cases) {
            const std::string name = file.stem().string() + "/" + c.at("name").get<std::string>();
            const int expected_exit = c.value("exit", 0);
            std::ostringstream case_out;
            std::ostringstream case_err;
            const int code = run(resolve_args(c.at("args"), root), case_out, case_err);
            std::string expected_text;
            if (c.contains("expected")) expected_text = c.at("expected").dump() + "\n";
            const bool ok = code == expected_exit && (!c.contains("expected") || case_out.str() == expected_text);
            if (ok) {
                ++passed;
            } else {
                ++failed;
                err << "FAIL " << name << ": exit " << code << " (want " << expected_exit << ")\n"
                    << "  got:  " << case_out.str() << "  want: " << expected_text;
                if (!case_err.str().empty()) err << "  stderr: " << case_err.str();
            }
            results.push_back({{"name", name}, {"ok", ok}});
        }
    }
    out << json{{"passed", passed}, {"failed", failed}, {"results", results}}.dump() << "\n";
    return failed == 0 && passed > 0 ? kOk : kCheckFailed;
}

}  // namespace pairlab::cli
