#pragma once

#include <string>
#include <vector>

#include "qog/types.hpp"

namespace qog {
namespace codec {

// Reserved surface tokens. Bit-exact; the encoder rejects them inside
// payload text, the decoder tolerates anything.
inline constexpr const char* kHighlight = "<hl>";
inline constexpr const char* kPairSeparator = " | ";
inline constexpr const char* kQuestionMarker = "question:";
inline constexpr const char* kOptionsMarker = "options:";
inline constexpr const char* kOptionSeparator = ", ";

inline constexpr const char* kPrefixAE = "extract answer";
inline constexpr const char* kPrefixQG = "question generation";
inline constexpr const char* kPrefixDG = "distractor generation";

// True when the text cannot appear inside a question of the flat format.
bool question_has_reserved_token(const std::string& text);
// Options additionally may not contain the ", " separator.
bool option_has_reserved_token(const std::string& text);
// True when any field of the pair would break the flat encoding.
bool pair_has_reserved_token(const QOPair& pair);

// Context with the idx-th sentence wrapped in "<hl> ... <hl>".
// Throws UsageError when idx is out of range.
std::string build_ae_input(const ContextDoc& doc, size_t sentence_idx);

// Context with the answer occurrence at answer_offset wrapped in
// "<hl> ... <hl>". Throws UsageError when the context does not contain
// the answer at that offset.
std::string build_qg_input(const ContextDoc& doc, const std::string& answer, size_t answer_offset);

// Same input form as QG; kept separate so the contracts can diverge.
std::string build_dg_input(const ContextDoc& doc, const std::string& answer, size_t answer_offset);

// "extract answer: <body>" etc. E2E uses no prefix; passing it throws.
std::string add_task_prefix(Task task, const std::string& body);

// Canonical option serialization: the correct answer first, then the three
// distractors in stored order, joined by ", ". Throws ReservedTokenError.
std::string encode_options(const QOPair& pair);

// Inverse of encode_options for clean text: split on ", " and trim.
std::vector<std::string> decode_options(const std::string& text);

// "question: q1, options: o1 | question: q2, options: o2 | ...".
// Throws ReservedTokenError when any field contains a reserved token.
std::string encode_flat(const std::vector<QOPair>& pairs);

// Total inverse of encode_flat: never throws, accepts arbitrary text.
// Segments with a non-empty question and at least two options become pairs
// (answer_index 0; options padded with "N/A" / truncated to four); all
// other segments count as malformed.
DecodeReport decode_flat(const std::string& text);

// Training target for the end-to-end approach. Alias of encode_flat today;
// kept distinct so target policy can diverge from the wire format.
std::string build_e2e_target(const std::vector<QOPair>& pairs);

}  // namespace codec
}  // namespace qog
