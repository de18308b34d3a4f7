#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qog {

// Sentinel used wherever the toolkit has to pad a short option list.
// Sentinel options are excluded from distinctness checks.
inline constexpr const char* kPadOption = "N/A";

// One question plus exactly four options, one of which is correct.
struct QOPair {
    std::string question;
    std::array<std::string, 4> options;
    int answer_index = 0;

    const std::string& answer() const { return options[static_cast<size_t>(answer_index)]; }
    // The three options that are not the answer, in stored order.
    std::vector<std::string> distractors() const;

    bool operator==(const QOPair&) const = default;
};

// Validity per the QO data model: non-empty question, 4 non-empty options,
// options pairwise distinct after whitespace normalization (pad sentinels
// excluded), answer_index in [0,4). Returns an empty string when valid,
// otherwise a description of the first violation.
std::string describe_invalid(const QOPair& pair);
bool is_valid(const QOPair& pair);
// Throws FormatError when invalid.
void validate(const QOPair& pair);

struct SentenceSpan {
    size_t begin = 0;  // character offsets into ContextDoc::text
    size_t end = 0;    // half-open

    bool operator==(const SentenceSpan&) const = default;
};

// A passage plus its sentence segmentation.
struct ContextDoc {
    std::string id;
    std::string domain;  // e.g. amazon/wiki/nyt/reddit/fin
    std::string text;
    std::vector<SentenceSpan> sentences;

    std::string sentence_text(size_t idx) const;

    bool operator==(const ContextDoc&) const = default;
};

// Spans must be in order, non-overlapping, within bounds, and cover all
// non-whitespace of text. Throws FormatError on violation.
void validate(const ContextDoc& doc);

// Default sentence segmentation: break after '.', '?' or '!' followed by
// whitespace, but only once the accumulated sentence is at least
// min_sentence_chars long (measured trimmed). Spans exclude surrounding
// whitespace. Pluggable: callers may supply their own spans instead.
std::vector<SentenceSpan> split_sentences(const std::string& text, size_t min_sentence_chars = 3);

// Convenience constructor running the default splitter.
ContextDoc make_context_doc(std::string id, std::string domain, std::string text);

enum class Task { AE, QG, DG, E2E };

const char* task_name(Task t);
Task task_from_name(const std::string& name);

// One (task, input, target) training triple.
struct TaskExample {
    Task task = Task::AE;
    std::string input_text;
    std::string target_text;

    bool operator==(const TaskExample&) const = default;
};

// Result of decoding a flattened QO string. Every raw segment is accounted
// for exactly once: malformed_segments + pairs.size() == raw_segments.
// padded_segments counts pairs that needed option padding; they still parse
// but signal degraded output quality.
struct DecodeReport {
    std::vector<QOPair> pairs;
    int malformed_segments = 0;
    int raw_segments = 0;
    int padded_segments = 0;
};

}  // namespace qog
