#pragma once

#include <string>
#include <string_view>

#include "lightkey/text/segmenter.hpp"
#include "lightkey/text/token.hpp"
#include "lightkey/text/tokenizer.hpp"
#include "lightkey/util/error.hpp"

namespace lightkey::text {

struct AnalyzerOptions {
  Language lang = Language::English;
  AbbreviationList abbrevs = AbbreviationList::builtin();
};

// Segments, tokenizes, and stems raw text into a Document. Spans that yield
// no tokens (punctuation-only) are dropped.
inline Document make_document(std::string id, std::string_view raw, std::string source_path,
                              const AnalyzerOptions& opt = {}) {
  Document doc;
  doc.id = std::move(id);
  doc.source_path = std::move(source_path);
  for (auto span : segment_sentences(raw, opt.abbrevs)) {
    Sentence s;
    s.text = std::string(raw.substr(span.begin, span.end - span.begin));
    s.tokens = tokenize(s.text, opt.lang);
    if (s.tokens.empty()) continue;
    s.index = doc.sentences.size();
    doc.sentences.push_back(std::move(s));
  }
  if (doc.sentences.empty())
    throw DataError("document has no sentences: " + doc.id);
  return doc;
}

}  // namespace lightkey::text
