#include "interest/corpus_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace interest {

namespace {

std::string trim(const std::string& line) {
    const auto begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line_no,
                          const std::string& message) {
    throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + message);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    return in;
}

}  // namespace

std::vector<CorpusRecord> read_corpus_records(std::istream& in, const std::string& source_name) {
    std::vector<CorpusRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;

        nlohmann::json entry;
        try {
            entry = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            fail_at(source_name, line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!entry.is_object()) {
            fail_at(source_name, line_no, "corpus record must be a JSON object");
        }
        if (!entry.contains("id") || !entry["id"].is_string()) {
            fail_at(source_name, line_no, "corpus record requires a string \"id\" field");
        }

        CorpusRecord record;
        record.id = entry["id"].get<std::string>();
        if (record.id.empty()) {
            fail_at(source_name, line_no, "corpus record \"id\" must be non-empty");
        }
        const auto read_string_field = [&](const char* key) -> std::string {
            if (!entry.contains(key)) return "";
            if (!entry[key].is_string()) {
                fail_at(source_name, line_no,
                        std::string("corpus record field \"") + key + "\" must be a string");
            }
            return entry[key].get<std::string>();
        };
        record.title = read_string_field("title");
        record.summary = read_string_field("summary");
        const std::string body = read_string_field("body");
        if (!body.empty()) {
            record.summary = record.summary.empty() ? body : record.summary + " " + body;
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<CorpusRecord> read_corpus_file(const std::filesystem::path& path) {
    std::ifstream in = open_or_throw(path);
    return read_corpus_records(in, path.string());
}

void write_corpus_records(std::ostream& out, const std::vector<CorpusRecord>& records) {
    for (const auto& record : records) {
        const nlohmann::json entry = {
            {"id", record.id}, {"title", record.title}, {"summary", record.summary}};
        out << entry.dump() << "\n";
    }
}

void write_corpus_file(const std::filesystem::path& path,
                       const std::vector<CorpusRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    write_corpus_records(out, records);
}

Corpus corpus_from_records(const std::vector<CorpusRecord>& records,
                           const TokenizerConfig& config, const StopwordList& stopwords) {
    std::vector<Document> documents;
    documents.reserve(records.size());
    for (const auto& record : records) {
        documents.push_back(
            build_document(record.id, record.title, record.summary, config, stopwords));
    }
    return Corpus(std::move(documents));
}

Corpus load_corpus_file(const std::filesystem::path& path, const TokenizerConfig& config,
                        const StopwordList& stopwords) {
    return corpus_from_records(read_corpus_file(path), config, stopwords);
}

StopwordList read_stopword_list(std::istream& in) {
    StopwordList stopwords;
    std::string line;
    while (std::getline(in, line)) {
        const std::string word = trim(line);
        if (word.empty() || word.front() == '#') continue;
        stopwords.insert(word);
    }
    return stopwords;
}

StopwordList load_stopword_file(const std::filesystem::path& path) {
    std::ifstream in = open_or_throw(path);
    return read_stopword_list(in);
}

FieldMetadata read_field_metadata(std::istream& in, const TokenizerConfig& config,
                                  const StopwordList& stopwords,
                                  const std::string& source_name) {
    TermSet keywords;
    std::string label;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        if (content.rfind("label:", 0) == 0) {
            label = trim(content.substr(6));
            continue;
        }
        for (auto& token : tokenize(content, config, stopwords)) {
            keywords.insert(std::move(token));
        }
    }
    if (keywords.empty()) {
        throw std::runtime_error(source_name +
                                 ": field metadata file contains no usable keywords");
    }
    return FieldMetadata(std::move(keywords), std::move(label));
}

FieldMetadata load_field_file(const std::filesystem::path& path, const TokenizerConfig& config,
                              const StopwordList& stopwords) {
    std::ifstream in = open_or_throw(path);
    return read_field_metadata(in, config, stopwords, path.string());
}

}  // namespace interest
