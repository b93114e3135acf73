// Prompt template registry and renderer. The eight canonical templates are
// embedded at build time from the prompts/ directory; a config directory can
// override any of them per file.

#include <array>
#include <fstream>
#include <sstream>

#include "das/pipeline.hpp"

namespace das::pipeline {

namespace detail {
extern const std::string_view kTemplate_paraphrase;
extern const std::string_view kTemplate_translate;
extern const std::string_view kTemplate_single_prompt;
extern const std::string_view kTemplate_encode;
extern const std::string_view kTemplate_generate_context;
extern const std::string_view kTemplate_localize_context;
extern const std::string_view kTemplate_localize_das;
extern const std::string_view kTemplate_decode;
}  // namespace detail

namespace {

struct TemplateInfo {
  TemplateId id;
  const char* stem;
  const std::string_view* builtin;
};

const std::array<TemplateInfo, 8> kCatalog{{
    {TemplateId::Encode, "encode", &detail::kTemplate_encode},
    {TemplateId::GenerateContext, "generate_context", &detail::kTemplate_generate_context},
    {TemplateId::LocalizeContext, "localize_context", &detail::kTemplate_localize_context},
    {TemplateId::LocalizeDas, "localize_das", &detail::kTemplate_localize_das},
    {TemplateId::Decode, "decode", &detail::kTemplate_decode},
    {TemplateId::Translate, "translate", &detail::kTemplate_translate},
    {TemplateId::Paraphrase, "paraphrase", &detail::kTemplate_paraphrase},
    {TemplateId::SinglePrompt, "single_prompt", &detail::kTemplate_single_prompt},
}};

// The repeated-entry block in the encode template that expands to one entry
// per taxonomy act.
constexpr std::string_view kFunctionBlock =
    "<function name>: <description>\n    - example: <example>\n...\n";

constexpr std::array<std::string_view, 6> kKnownPlaceholders{
    "language", "conversation", "context",
    "localized context", "DAS turns", "localized DAS turns"};

std::string expand_taxonomy(const core::Taxonomy& taxonomy) {
  std::string out;
  for (const core::ActDefinition& act : taxonomy.acts) {
    out += act.name;
    out += ": ";
    out += act.description;
    out += "\n";
    for (const std::string& example : act.examples) {
      out += "    - example: ";
      out += example;
      out += "\n";
    }
  }
  return out;
}

}  // namespace

TemplateSet TemplateSet::builtin() {
  TemplateSet set;
  for (const TemplateInfo& info : kCatalog)
    set.templates_[info.id] = PromptTemplate{info.id, std::string(*info.builtin)};
  return set;
}

TemplateSet TemplateSet::load(const std::filesystem::path& dir) {
  TemplateSet set = builtin();
  for (const TemplateInfo& info : kCatalog) {
    std::filesystem::path path = dir / (std::string(info.stem) + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (!in) continue;
    std::ostringstream buf;
    buf << in.rdbuf();
    set.templates_[info.id].body = buf.str();
  }
  return set;
}

const PromptTemplate& TemplateSet::get(TemplateId id) const { return templates_.at(id); }

std::string TemplateSet::file_name(TemplateId id) {
  for (const TemplateInfo& info : kCatalog)
    if (info.id == id) return std::string(info.stem) + ".txt";
  return "";
}

std::string render_prompt(const PromptTemplate& tmpl, const Bindings& bindings,
                          const core::Taxonomy* taxonomy) {
  std::string body = tmpl.body;

  std::size_t block = body.find(kFunctionBlock);
  if (block != std::string::npos) {
    if (!taxonomy) throw UnboundPlaceholder("function name");
    body = body.substr(0, block) + expand_taxonomy(*taxonomy) +
           body.substr(block + kFunctionBlock.size());
  }

  // Single pass: substituted text is never rescanned, so binding values may
  // safely contain placeholder-like text.
  std::string out;
  out.reserve(body.size() * 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    char c = body[pos];
    if (c != '<') {
      out.push_back(c);
      ++pos;
      continue;
    }
    std::size_t best_len = 0;
    const std::string* best_value = nullptr;
    for (const auto& [name, value] : bindings) {
      std::size_t len = name.size() + 2;
      if (len <= best_len) continue;
      if (body.compare(pos, len, "<" + name + ">") == 0) {
        best_len = len;
        best_value = &value;
      }
    }
    if (best_value) {
      out += *best_value;
      pos += best_len;
      continue;
    }
    for (std::string_view name : kKnownPlaceholders) {
      std::string pattern = "<" + std::string(name) + ">";
      if (body.compare(pos, pattern.size(), pattern) == 0)
        throw UnboundPlaceholder(std::string(name));
    }
    out.push_back(c);
    ++pos;
  }
  return out;
}

std::string render_conversation(const Dialogue& dialogue) {
  std::string out;
  for (std::size_t i = 0; i < dialogue.turns.size(); ++i) {
    if (i) out.push_back('\n');
    out += dialogue.turns[i].speaker;
    out += ": ";
    out += dialogue.turns[i].text;
  }
  return out;
}

}  // namespace das::pipeline
