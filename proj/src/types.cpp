#include "qog/types.hpp"

#include <cctype>
#include <set>
#include <utility>

#include "qog/errors.hpp"
#include "qog/text_util.hpp"

namespace qog {

std::vector<std::string> QOPair::distractors() const {
    std::vector<std::string> out;
    out.reserve(3);
    for (size_t i = 0; i < options.size(); ++i) {
        if (static_cast<int>(i) != answer_index) out.push_back(options[i]);
    }
    return out;
}

std::string describe_invalid(const QOPair& pair) {
    if (trim(pair.question).empty()) return "empty question";
    if (pair.answer_index < 0 || pair.answer_index >= 4) return "answer_index out of range";
    std::set<std::string> seen;
    for (const auto& opt : pair.options) {
        std::string norm = collapse_whitespace(opt);
        if (norm.empty()) return "empty option";
        if (norm == kPadOption) continue;  // pad sentinels exempt from distinctness
        if (!seen.insert(norm).second) return "duplicate option: " + norm;
    }
    return {};
}

bool is_valid(const QOPair& pair) { return describe_invalid(pair).empty(); }

void validate(const QOPair& pair) {
    std::string why = describe_invalid(pair);
    if (!why.empty()) throw FormatError("invalid QO pair: " + why);
}

std::string ContextDoc::sentence_text(size_t idx) const {
    const SentenceSpan& s = sentences.at(idx);
    return text.substr(s.begin, s.end - s.begin);
}

void validate(const ContextDoc& doc) {
    size_t prev_end = 0;
    for (const auto& s : doc.sentences) {
        if (s.begin >= s.end || s.end > doc.text.size())
            throw FormatError("sentence span out of bounds in doc " + doc.id);
        if (s.begin < prev_end)
            throw FormatError("sentence spans overlap or are out of order in doc " + doc.id);
        prev_end = s.end;
    }
    // All non-whitespace must fall inside some span.
    size_t span_idx = 0;
    for (size_t i = 0; i < doc.text.size(); ++i) {
        while (span_idx < doc.sentences.size() && i >= doc.sentences[span_idx].end) ++span_idx;
        bool covered = span_idx < doc.sentences.size() && i >= doc.sentences[span_idx].begin &&
                       i < doc.sentences[span_idx].end;
        if (!covered && !std::isspace(static_cast<unsigned char>(doc.text[i])))
            throw FormatError("sentence spans do not cover all text of doc " + doc.id);
    }
}

std::vector<SentenceSpan> split_sentences(const std::string& text, size_t min_sentence_chars) {
    auto is_ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    auto is_terminal = [](char c) { return c == '.' || c == '?' || c == '!'; };

    std::vector<SentenceSpan> spans;
    size_t start = 0;
    size_t i = 0;
    auto emit = [&](size_t begin, size_t end) {
        while (begin < end && is_ws(text[begin])) ++begin;
        while (end > begin && is_ws(text[end - 1])) --end;
        if (begin < end) spans.push_back({begin, end});
    };
    while (i < text.size()) {
        if (is_terminal(text[i]) && (i + 1 == text.size() || is_ws(text[i + 1]))) {
            size_t b = start, e = i + 1;
            while (b < e && is_ws(text[b])) ++b;
            if (e >= b && e - b >= min_sentence_chars) {
                emit(start, i + 1);
                start = i + 1;
            }
            // otherwise keep accumulating into the next candidate
        }
        ++i;
    }
    emit(start, text.size());  // trailing material, even if short
    return spans;
}

ContextDoc make_context_doc(std::string id, std::string domain, std::string text) {
    ContextDoc doc;
    doc.id = std::move(id);
    doc.domain = std::move(domain);
    doc.text = std::move(text);
    doc.sentences = split_sentences(doc.text);
    return doc;
}

const char* task_name(Task t) {
    switch (t) {
        case Task::AE: return "AE";
        case Task::QG: return "QG";
        case Task::DG: return "DG";
        case Task::E2E: return "E2E";
    }
    return "?";
}

Task task_from_name(const std::string& name) {
    if (name == "AE") return Task::AE;
    if (name == "QG") return Task::QG;
    if (name == "DG") return Task::DG;
    if (name == "E2E") return Task::E2E;
    throw FormatError("unknown task name: " + name);
}

}  // namespace qog
