#include "qog/codec.hpp"

#include <string>

#include "qog/errors.hpp"
#include "qog/text_util.hpp"

namespace qog {
namespace codec {

namespace {

// Whitespace convention: single space inside the markers, so the wrapped
// region reads "<hl> answer <hl>".
std::string wrap_highlight(const std::string& text, size_t begin, size_t end) {
    std::string out;
    out.reserve(text.size() + 10);
    out.append(text, 0, begin);
    out += kHighlight;
    out += ' ';
    out.append(text, begin, end - begin);
    out += ' ';
    out += kHighlight;
    out.append(text, end, std::string::npos);
    return out;
}

std::string highlight_answer(const ContextDoc& doc, const std::string& answer,
                             size_t answer_offset) {
    if (answer.empty()) throw UsageError("answer text is empty");
    if (answer_offset + answer.size() > doc.text.size() ||
        doc.text.compare(answer_offset, answer.size(), answer) != 0) {
        throw UsageError("context does not contain the answer at offset " +
                         std::to_string(answer_offset));
    }
    return wrap_highlight(doc.text, answer_offset, answer_offset + answer.size());
}

}  // namespace

bool question_has_reserved_token(const std::string& text) {
    return contains(text, "|") || contains(text, kQuestionMarker) ||
           contains(text, kOptionsMarker) || contains(text, kHighlight);
}

bool option_has_reserved_token(const std::string& text) {
    return question_has_reserved_token(text) || contains(text, kOptionSeparator);
}

bool pair_has_reserved_token(const QOPair& pair) {
    if (question_has_reserved_token(pair.question)) return true;
    for (const auto& opt : pair.options)
        if (option_has_reserved_token(opt)) return true;
    return false;
}

std::string build_ae_input(const ContextDoc& doc, size_t sentence_idx) {
    if (sentence_idx >= doc.sentences.size())
        throw UsageError("sentence index " + std::to_string(sentence_idx) +
                         " out of range for doc with " + std::to_string(doc.sentences.size()) +
                         " sentences");
    const SentenceSpan& span = doc.sentences[sentence_idx];
    return wrap_highlight(doc.text, span.begin, span.end);
}

std::string build_qg_input(const ContextDoc& doc, const std::string& answer,
                           size_t answer_offset) {
    return highlight_answer(doc, answer, answer_offset);
}

std::string build_dg_input(const ContextDoc& doc, const std::string& answer,
                           size_t answer_offset) {
    return highlight_answer(doc, answer, answer_offset);
}

std::string add_task_prefix(Task task, const std::string& body) {
    const char* prefix = nullptr;
    switch (task) {
        case Task::AE: prefix = kPrefixAE; break;
        case Task::QG: prefix = kPrefixQG; break;
        case Task::DG: prefix = kPrefixDG; break;
        case Task::E2E:
            throw UsageError("the end-to-end task uses no input prefix");
    }
    return std::string(prefix) + ": " + body;
}

std::string encode_options(const QOPair& pair) {
    validate(pair);
    std::vector<std::string> ordered;
    ordered.reserve(4);
    ordered.push_back(pair.answer());
    for (const auto& d : pair.distractors()) ordered.push_back(d);
    for (const auto& opt : ordered) {
        if (option_has_reserved_token(opt))
            throw ReservedTokenError("option contains a reserved token: " + opt);
    }
    return join(ordered, kOptionSeparator);
}

std::vector<std::string> decode_options(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& piece : split_on(text, kOptionSeparator)) {
        std::string t = trim(piece);
        if (!t.empty()) out.push_back(std::move(t));
    }
    return out;
}

std::string encode_flat(const std::vector<QOPair>& pairs) {
    std::vector<std::string> segments;
    segments.reserve(pairs.size());
    for (const auto& pair : pairs) {
        if (question_has_reserved_token(pair.question))
            throw ReservedTokenError("question contains a reserved token: " + pair.question);
        segments.push_back(std::string(kQuestionMarker) + " " + pair.question + ", " +
                           kOptionsMarker + " " + encode_options(pair));
    }
    return join(segments, kPairSeparator);
}

DecodeReport decode_flat(const std::string& text) {
    DecodeReport report;
    if (trim(text).empty()) return report;

    // Split on every '|'; the canonical separator is " | " but model output
    // cannot be trusted to keep the spaces.
    for (const auto& raw : split_on(text, "|")) {
        ++report.raw_segments;
        std::string seg = trim(raw);

        size_t qpos = seg.find(kQuestionMarker);
        size_t opos = qpos == std::string::npos
                          ? std::string::npos
                          : seg.find(kOptionsMarker, qpos + std::string(kQuestionMarker).size());
        if (qpos == std::string::npos || opos == std::string::npos) {
            ++report.malformed_segments;
            continue;
        }

        size_t qbegin = qpos + std::string(kQuestionMarker).size();
        std::string question = trim(seg.substr(qbegin, opos - qbegin));
        // Drop the single separator comma between question and options.
        if (!question.empty() && question.back() == ',') question.pop_back();
        question = trim(question);

        std::vector<std::string> options =
            decode_options(seg.substr(opos + std::string(kOptionsMarker).size()));

        if (question.empty() || options.size() < 2) {
            ++report.malformed_segments;
            continue;
        }

        bool padded = options.size() < 4;
        while (options.size() < 4) options.emplace_back(kPadOption);
        if (padded) ++report.padded_segments;

        QOPair pair;
        pair.question = std::move(question);
        for (size_t i = 0; i < 4; ++i) pair.options[i] = std::move(options[i]);
        pair.answer_index = 0;
        report.pairs.push_back(std::move(pair));
    }
    return report;
}

std::string build_e2e_target(const std::vector<QOPair>& pairs) { return encode_flat(pairs); }

}  // namespace codec
}  // namespace qog
