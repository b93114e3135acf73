// Persistent record/replay store: one file per request key, containing a
// small metadata header followed by the raw completion text. Writes go to a
// temp file first and are renamed into place.

#include <fstream>
#include <sstream>

#include "das/backend.hpp"

namespace das::llm {

namespace {

constexpr std::string_view kMagic = "das-cache 1";
constexpr std::string_view kSeparator = "--";

struct CacheEntry {
  std::string origin;
  std::string text;
};

std::optional<CacheEntry> read_entry(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string data = buf.str();

  std::size_t pos = 0;
  CacheEntry entry;
  bool in_header = true;
  bool magic_ok = false;
  while (in_header && pos <= data.size()) {
    std::size_t eol = data.find('\n', pos);
    if (eol == std::string::npos) return std::nullopt;  // truncated header
    std::string_view line(data.data() + pos, eol - pos);
    pos = eol + 1;
    if (line == kMagic) {
      magic_ok = true;
    } else if (line == kSeparator) {
      in_header = false;
    } else if (line.substr(0, 8) == "origin: ") {
      entry.origin = std::string(line.substr(8));
    }
  }
  if (!magic_ok || in_header) return std::nullopt;
  entry.text = data.substr(pos);
  return entry;
}

}  // namespace

CacheBackend::CacheBackend(std::filesystem::path dir, Mode mode, std::shared_ptr<Backend> delegate)
    : dir_(std::move(dir)), mode_(mode), delegate_(std::move(delegate)) {
  if (mode_ == Mode::Record && !delegate_)
    throw std::invalid_argument("record mode requires a delegate backend");
  std::filesystem::create_directories(dir_);
}

std::filesystem::path CacheBackend::path_for(const std::string& key) const {
  return dir_ / (key + ".txt");
}

Completion CacheBackend::complete(const ChatRequest& request) {
  const std::string key = request_key(request);
  const std::filesystem::path path = path_for(key);

  if (auto entry = read_entry(path)) {
    Completion c;
    c.text = std::move(entry->text);
    c.backend_id = id();
    c.cached = true;
    return c;
  }

  if (mode_ == Mode::Replay)
    throw CacheMiss("no cached completion for request key " + key);

  Completion fresh = delegate_->complete(request);

  std::string body;
  body += kMagic;
  body += "\nkey: " + key;
  body += "\norigin: " + fresh.backend_id;
  body += "\n";
  body += kSeparator;
  body += "\n";
  body += fresh.text;
  {
    std::lock_guard lock(write_mutex_);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw BackendError("cannot write cache file " + tmp.string());
    out << body;
    out.close();
    std::filesystem::rename(tmp, path);
  }
  fresh.backend_id = id();
  return fresh;
}

std::string CacheBackend::id() const {
  return std::string(mode_ == Mode::Record ? "record:" : "replay:") +
         (delegate_ ? delegate_->id() : "store");
}

}  // namespace das::llm
