// Copyright 2026 The Polarlex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polarlex/corpus.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unordered_set>

#include "polarlex/error.h"
#include "polarlex/text_io.h"

namespace polarlex {

namespace internal {
extern const std::string_view kDefaultStopwordsText;
}  // namespace internal

std::string_view to_string(Label label) {
  switch (label) {
    case Label::kGood:
      return "Good";
    case Label::kPotentiallyUseful:
      return "PotentiallyUseful";
    case Label::kBad:
      return "Bad";
  }
  return "Bad";
}

std::string_view to_string(BinaryLabel label) {
  return label == BinaryLabel::kGood ? "Good" : "Bad";
}

std::optional<Label> label_from_string(std::string_view text) {
  if (text == "Good") return Label::kGood;
  if (text == "PotentiallyUseful") return Label::kPotentiallyUseful;
  if (text == "Bad") return Label::kBad;
  return std::nullopt;
}

BinaryLabel binarize_label(std::optional<Label> label) {
  if (!label) {
    throw ValidationError("cannot binarize an absent label; filter "
                          "unannotated comments first");
  }
  return *label == Label::kGood ? BinaryLabel::kGood : BinaryLabel::kBad;
}

void validate_thread(const Thread& thread) {
  if (thread.question.id.empty()) {
    throw ValidationError("thread with empty question id");
  }
  std::unordered_set<std::string> seen;
  int expected_rank = 1;
  for (const Comment& c : thread.comments) {
    if (c.id.empty()) {
      throw ValidationError("question " + thread.question.id +
                            ": comment with empty id");
    }
    if (!seen.insert(c.id).second) {
      throw ValidationError("question " + thread.question.id +
                            ": duplicate comment id " + c.id);
    }
    if (c.rank_in_thread != expected_rank) {
      throw ValidationError("question " + thread.question.id + ": comment " +
                            c.id + " has rank " +
                            std::to_string(c.rank_in_thread) + ", expected " +
                            std::to_string(expected_rank));
    }
    ++expected_rank;
  }
}

ThreadFormat thread_format_from_string(std::string_view name) {
  if (name == "jsonl") return ThreadFormat::kJsonl;
  if (name == "semeval-xml" || name == "xml") return ThreadFormat::kSemevalXml;
  throw Error(ErrorKind::kUsage,
              "unknown thread format '" + std::string(name) +
                  "' (expected jsonl or semeval-xml)");
}

namespace {

std::string string_field(const nlohmann::json& object, const char* key,
                         const std::string& context, bool required) {
  const auto it = object.find(key);
  if (it == object.end() || it->is_null()) {
    if (required) {
      throw ParseError(context + ": missing field \"" + key + "\"");
    }
    return {};
  }
  if (!it->is_string()) {
    throw ParseError(context + ": field \"" + key + "\" must be a string");
  }
  return it->get<std::string>();
}

Thread thread_from_json(const nlohmann::json& record,
                        const std::string& context) {
  if (!record.is_object()) throw ParseError(context + ": expected an object");
  Thread thread;
  thread.question.id = string_field(record, "qid", context, true);
  thread.question.author_id = string_field(record, "qauthor", context, false);
  thread.question.subject = string_field(record, "subject", context, false);
  thread.question.body = string_field(record, "body", context, false);
  thread.question.category = string_field(record, "category", context, false);

  const auto comments = record.find("comments");
  if (comments == record.end()) return thread;
  if (!comments->is_array()) {
    throw ParseError(context + ": \"comments\" must be an array");
  }
  int position = 0;
  for (const auto& item : *comments) {
    ++position;
    const std::string item_context =
        context + ": comment " + std::to_string(position);
    if (!item.is_object()) throw ParseError(item_context + ": expected object");
    Comment c;
    c.id = string_field(item, "cid", item_context, true);
    c.author_id = string_field(item, "author", item_context, false);
    c.text = string_field(item, "text", item_context, false);
    const auto rank = item.find("rank");
    if (rank == item.end() || rank->is_null()) {
      c.rank_in_thread = position;
    } else if (rank->is_number_integer()) {
      c.rank_in_thread = rank->get<int>();
    } else {
      throw ParseError(item_context + ": \"rank\" must be an integer");
    }
    const std::string label = string_field(item, "label", item_context, false);
    if (!label.empty()) {
      c.label = label_from_string(label);
      if (!c.label) {
        throw ParseError(item_context + ": unknown label \"" + label + "\"");
      }
    }
    thread.comments.push_back(std::move(c));
  }
  std::stable_sort(thread.comments.begin(), thread.comments.end(),
                   [](const Comment& a, const Comment& b) {
                     return a.rank_in_thread < b.rank_in_thread;
                   });
  return thread;
}

nlohmann::json thread_to_json(const Thread& thread) {
  nlohmann::json comments = nlohmann::json::array();
  for (const Comment& c : thread.comments) {
    nlohmann::json item = {{"cid", c.id},
                           {"author", c.author_id},
                           {"rank", c.rank_in_thread},
                           {"text", c.text}};
    if (c.label) item["label"] = std::string(to_string(*c.label));
    comments.push_back(std::move(item));
  }
  return {{"qid", thread.question.id},
          {"qauthor", thread.question.author_id},
          {"subject", thread.question.subject},
          {"body", thread.question.body},
          {"category", thread.question.category},
          {"comments", std::move(comments)}};
}

using boost::property_tree::ptree;

std::string attribute(const ptree& node, const char* name) {
  return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

Thread thread_from_xml(const std::string& chunk, const std::string& context) {
  ptree doc;
  try {
    std::istringstream stream(chunk);
    boost::property_tree::read_xml(stream, doc);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw ParseError(context + ": " + e.message());
  }
  const auto thread_node = doc.get_child_optional("Thread");
  if (!thread_node) throw ParseError(context + ": missing <Thread> element");

  Thread thread;
  const auto question = thread_node->get_child_optional("RelQuestion");
  if (!question) throw ParseError(context + ": missing <RelQuestion>");
  thread.question.id = attribute(*question, "RELQ_ID");
  if (thread.question.id.empty()) {
    thread.question.id = attribute(*thread_node, "THREAD_SEQUENCE");
  }
  thread.question.author_id = attribute(*question, "RELQ_USERID");
  thread.question.category = attribute(*question, "RELQ_CATEGORY");
  thread.question.subject =
      strip_tags(question->get<std::string>("RelQSubject", ""));
  thread.question.body = strip_tags(question->get<std::string>("RelQBody", ""));

  int rank = 0;
  for (const auto& [name, node] : *thread_node) {
    if (name != "RelComment") continue;
    Comment c;
    c.rank_in_thread = ++rank;
    c.id = attribute(node, "RELC_ID");
    c.author_id = attribute(node, "RELC_USERID");
    c.text = strip_tags(node.get<std::string>("RelCText", ""));
    c.label = label_from_string(attribute(node, "RELC_RELEVANCE2RELQ"));
    thread.comments.push_back(std::move(c));
  }
  return thread;
}

void check_thread(const Thread& thread, const std::string& context) {
  try {
    validate_thread(thread);
  } catch (const ValidationError& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

}  // namespace

std::vector<Thread> parse_threads_jsonl(std::istream& in,
                                        const std::string& source) {
  std::vector<Thread> threads;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (text.find_first_not_of(" \t") == std::string_view::npos) continue;
    const std::string context = source + ":" + std::to_string(line_no);
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(context + ": " + e.what());
    }
    Thread thread = thread_from_json(record, context);
    check_thread(thread, context);
    threads.push_back(std::move(thread));
  }
  return threads;
}

std::vector<Thread> parse_threads_semeval_xml(std::istream& in,
                                              const std::string& source) {
  // Threads are parsed one element at a time so that the 1.9M-comment
  // unannotated dump does not need to fit in a single DOM.
  std::vector<Thread> threads;
  std::string buffer;
  std::string line;
  std::size_t line_no = 0;
  std::size_t thread_line = 0;
  static constexpr std::string_view kClose = "</Thread>";

  auto find_open = [](const std::string& text, std::size_t from) {
    std::size_t pos = from;
    while ((pos = text.find("<Thread", pos)) != std::string::npos) {
      const char next = pos + 7 < text.size() ? text[pos + 7] : '\0';
      if (next == ' ' || next == '>' || next == '\t' || next == '\n' ||
          next == '\r') {
        return pos;
      }
      pos += 7;
    }
    return std::string::npos;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (buffer.empty()) {
      const std::size_t open = find_open(line, 0);
      if (open == std::string::npos) continue;
      thread_line = line_no;
      buffer.assign(line, open);
    } else {
      buffer += '\n';
      buffer += line;
    }
    std::size_t close;
    while (!buffer.empty() &&
           (close = buffer.find(kClose)) != std::string::npos) {
      const std::string context =
          source + ": Thread starting at line " + std::to_string(thread_line);
      Thread thread =
          thread_from_xml(buffer.substr(0, close + kClose.size()), context);
      check_thread(thread, context);
      threads.push_back(std::move(thread));
      const std::size_t open = find_open(buffer, close + kClose.size());
      if (open == std::string::npos) {
        buffer.clear();
      } else {
        buffer.erase(0, open);
        thread_line = line_no;
      }
    }
  }
  if (!buffer.empty()) {
    throw ParseError(source + ": unterminated <Thread> starting at line " +
                     std::to_string(thread_line));
  }
  return threads;
}

std::vector<Thread> parse_threads(const std::filesystem::path& path,
                                  ThreadFormat format) {
  std::ifstream in = open_input(path);
  return format == ThreadFormat::kJsonl
             ? parse_threads_jsonl(in, path.string())
             : parse_threads_semeval_xml(in, path.string());
}

void write_threads_jsonl(std::ostream& out, const std::vector<Thread>& threads) {
  for (const Thread& thread : threads) {
    out << thread_to_json(thread).dump() << '\n';
  }
}

void write_threads_jsonl(const std::filesystem::path& path,
                         const std::vector<Thread>& threads) {
  std::ofstream out = open_output(path);
  write_threads_jsonl(out, threads);
}

std::string strip_tags(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '<') {
      const std::size_t end = text.find('>', i);
      if (end == std::string_view::npos) {
        out.append(text.substr(i));
        break;
      }
      out.push_back(' ');
      i = end + 1;
      continue;
    }
    if (ch == '&') {
      static constexpr std::pair<std::string_view, char> kEntities[] = {
          {"&lt;", '<'},   {"&gt;", '>'},    {"&amp;", '&'},
          {"&quot;", '"'}, {"&apos;", '\''},
      };
      bool matched = false;
      for (const auto& [entity, replacement] : kEntities) {
        if (text.substr(i, entity.size()) == entity) {
          out.push_back(replacement);
          i += entity.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    out.push_back(ch);
    ++i;
  }
  return out;
}

namespace {

void append_utf8(std::string& out, UChar32 c) {
  char buffer[U8_MAX_LENGTH];
  int32_t length = 0;
  U8_APPEND_UNSAFE(buffer, length, c);
  out.append(buffer, static_cast<std::size_t>(length));
}

std::string lowercase_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      out.append(text.substr(start, i - start));
    } else {
      append_utf8(out, u_tolower(c));
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& cfg) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t current_length = 0;

  auto flush = [&] {
    if (current.empty()) return;
    if (current_length >= cfg.min_token_length &&
        cfg.stopwords.find(current) == cfg.stopwords.end()) {
      tokens.push_back(current);
    }
    current.clear();
    current_length = 0;
  };

  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c >= 0 && u_isalnum(c)) {
      append_utf8(current, cfg.lowercase ? u_tolower(c) : c);
      ++current_length;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::set<std::string, std::less<>> parse_stopwords(std::string_view text) {
  std::set<std::string, std::less<>> words;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const std::size_t last = line.find_last_not_of(" \t\r");
    words.insert(lowercase_utf8(line.substr(first, last - first + 1)));
  }
  return words;
}

std::set<std::string, std::less<>> load_stopwords(
    const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return parse_stopwords(contents.str());
}

const std::set<std::string, std::less<>>& default_stopwords() {
  static const auto* const words =
      new std::set<std::string, std::less<>>(
          parse_stopwords(internal::kDefaultStopwordsText));
  return *words;
}

}  // namespace polarlex
