// Copyright 2026 The erag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "erag/prompt.hpp"

#include <array>
#include <utility>

namespace erag {

std::string SubstitutePlaceholders(
    std::string_view pattern,
    std::span<const std::pair<std::string_view, std::string_view>> values) {
  std::string out;
  out.reserve(pattern.size());
  std::size_t i = 0;
  while (i < pattern.size()) {
    if (pattern[i] == '{') {
      const std::size_t close = pattern.find('}', i + 1);
      if (close != std::string_view::npos) {
        const std::string_view name = pattern.substr(i + 1, close - i - 1);
        bool replaced = false;
        for (const auto& [key, value] : values) {
          if (key == name) {
            out.append(value);
            replaced = true;
            break;
          }
        }
        if (replaced) {
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(pattern[i++]);
  }
  return out;
}

std::string PromptTemplate::Render(std::string_view query,
                                   std::span<const Document> documents) const {
  std::string blocks;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    if (i > 0) blocks.append(document_separator);
    const std::string index = std::to_string(i + 1);
    const std::array<std::pair<std::string_view, std::string_view>, 4> fields{{
        {"index", index},
        {"doc_id", documents[i].doc_id},
        {"title", documents[i].title},
        {"text", documents[i].text},
    }};
    blocks.append(SubstitutePlaceholders(document_format, fields));
  }
  const std::array<std::pair<std::string_view, std::string_view>, 2> top{{
      {"query", query},
      {"documents", blocks},
  }};
  return SubstitutePlaceholders(body, top);
}

PromptTemplate DefaultGenerationTemplate() {
  PromptTemplate t;
  t.template_id = "qa-v1";
  t.instruction_header =
      "Answer the question using the provided documents. Reply with the "
      "answer only.";
  t.body = "{documents}\n\nQuestion: {query}\nAnswer:";
  t.document_format = "Document [{index}]: {text}";
  t.document_separator = "\n\n";
  return t;
}

PromptTemplate DefaultJudgeTemplate() {
  PromptTemplate t;
  t.template_id = "judge-v1";
  t.instruction_header =
      "You judge whether a document is relevant to a query. Reply with "
      "exactly \"relevant\" or \"not relevant\".";
  t.body =
      "Query: {query}\n\n{documents}\n\nIs the document relevant to the "
      "query? Answer \"relevant\" or \"not relevant\".";
  t.document_format = "Document: {text}";
  t.document_separator = "\n\n";
  return t;
}

}  // namespace erag
