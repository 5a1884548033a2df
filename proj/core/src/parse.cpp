// Copyright 2026 The altdist Authors
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

#include "altdist/parse.hpp"

#include <cctype>
#include <charconv>

#include "altdist/builder.hpp"
#include "altdist/error.hpp"

namespace altdist {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip_space();
    long v = 0;
    auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    i_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string near(s_.substr(i_, 12));
    throw Error(Errc::malformed_token,
                what + " at column " + std::to_string(i_ + 1) + (near.empty() ? "" : " near '" + near + "'"));
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

PlanarDiagram parse_pd(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw Error(Errc::empty_input, "empty input");
  DiagramBuilder b;
  while (!cur.done()) {
    cur.expect('X');
    cur.expect('(');
    int x = b.add_crossing();
    for (int s = 0; s < 4; ++s) {
      if (s) cur.expect(',');
      long label = cur.integer();
      if (label < 1) cur.fail("edge labels must be positive");
      b.set_slot(Dart{x, s}, static_cast<int>(label - 1));
      // The under strand enters at slot 0 and leaves at slot 2.
      if (s == 0) b.hint_head(static_cast<int>(label - 1), Dart{x, 0});
      if (s == 2) b.hint_tail(static_cast<int>(label - 1), Dart{x, 2});
    }
    cur.expect(')');
  }
  return b.build(DiagramBuilder::Hints::strict);
}

BraidWord parse_braid(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw Error(Errc::empty_input, "empty input");
  cur.expect('B');
  cur.expect('R');
  cur.expect('(');
  long p = cur.integer();
  cur.expect(')');
  cur.expect(':');
  BraidWord w;
  w.strands = static_cast<int>(p);
  cur.accept('[');
  while (!cur.done()) {
    if (cur.accept(']')) {
      if (!cur.done()) cur.fail("trailing text after ']'");
      break;
    }
    w.letters.push_back(static_cast<int>(cur.integer()));
    cur.accept(',');
  }
  w.validate();
  return w;
}

NamedDiagram parse_diagram_line(std::string_view line) {
  NamedDiagram out;
  std::string_view body = trim(line);
  if (body.empty()) throw Error(Errc::empty_input, "empty input");
  if (!body.starts_with("X") && !body.starts_with("BR")) {
    auto colon = body.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::malformed_token, "unrecognized diagram");
    out.name = std::string(trim(body.substr(0, colon)));
    body = trim(body.substr(colon + 1));
  }
  out.source = std::string(body);
  if (out.name.empty()) out.name = out.source;
  out.diagram = body.starts_with("BR") ? braid_closure(parse_braid(body)) : parse_pd(body);
  return out;
}

std::vector<NamedDiagram> parse_diagram_file(std::string_view text) {
  std::vector<NamedDiagram> out;
  int lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    try {
      out.push_back(parse_diagram_line(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace altdist
