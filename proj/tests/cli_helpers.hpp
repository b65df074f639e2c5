#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

// Shared helpers for tests that drive the CLI binary. INTEREST_CLI_PATH and
// INTEREST_FIXTURE_DIR come from the build system.

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

inline CommandResult run_command(const std::string& command, bool merge_stderr = false) {
    const std::string wrapped = command + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed for: " + command);
    }
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t read = 0;
    while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), read);
    }
    const int status = pclose(pipe);
    CommandResult result;
    result.output = std::move(output);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::string cli_path() { return INTEREST_CLI_PATH; }

inline std::string fixture_path(const std::string& name) {
    return std::string(INTEREST_FIXTURE_DIR) + "/" + name;
}

inline std::filesystem::path test_tmp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("interest_test_" + name);
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

// Splits simple CSV (no quoted fields needed by the fixtures).
inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

// Returns data rows (header line dropped).
inline std::vector<std::vector<std::string>> parse_csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream stream(text);
    std::string line;
    bool header = true;
    while (std::getline(stream, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (!line.empty()) rows.push_back(split_csv_line(line));
    }
    return rows;
}
