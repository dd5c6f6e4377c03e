#include "fabopt/instances.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "fabopt/errors.hpp"
#include "fabopt/serialization.hpp"

namespace fabopt {
namespace {

// Unbiased draw in [0, bound] from raw 64-bit engine output.
std::int64_t draw(std::mt19937_64& engine, std::int64_t bound) {
  const auto range = static_cast<std::uint64_t>(bound) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine());  // bound == 2^64 - 1, unreachable for int64
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  std::uint64_t x = 0;
  do {
    x = engine();
  } while (x > limit);
  return static_cast<std::int64_t>(x % range);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// RFC 4180-style split of one record (no embedded newlines).
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

void validate(const GeneratorConfig& config) {
  if (config.n == 0) throw ValidationError("n", "must be at least 1");
  if (config.max_attack < 0) throw ValidationError("max_attack", "must be non-negative");
  if (config.max_cost < 0) throw ValidationError("max_cost", "must be non-negative");
  if (config.max_resource < 0) throw ValidationError("max_resource", "must be non-negative");
  if (config.max_defense < 0) throw ValidationError("max_defense", "must be non-negative");
  if (config.initial_resources < 0) throw ValidationError("initial_resources", "must be non-negative");
}

Instance generate(const GeneratorConfig& config) {
  validate(config);
  std::mt19937_64 engine(config.seed);
  std::vector<Card> cards;
  cards.reserve(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    Card c;
    c.name = "c" + std::to_string(i + 1);
    c.attack = draw(engine, config.max_attack);
    if (config.correlation == Correlation::CostCorrelated) {
      c.pitch_cost = std::max<std::int64_t>(0, c.attack + draw(engine, 4) - 2);
    } else {
      c.pitch_cost = draw(engine, config.max_cost);
    }
    c.pitch_resource = draw(engine, config.max_resource);
    c.defense = draw(engine, config.max_defense);
    cards.push_back(std::move(c));
  }
  return Instance(std::move(cards), config.lambda, config.initial_resources);
}

std::string_view to_string(Correlation c) noexcept {
  return c == Correlation::CostCorrelated ? "cost-correlated" : "uncorrelated";
}

Correlation parse_correlation(std::string_view text) {
  if (text == "uncorrelated") return Correlation::Uncorrelated;
  if (text == "cost-correlated") return Correlation::CostCorrelated;
  throw ParseError("unknown correlation '" + std::string(text) + "' (expected uncorrelated or cost-correlated)");
}

std::string instance_to_json_text(const Instance& instance) { return to_json(instance).dump(2) + "\n"; }

Instance instance_from_json_text(std::string_view text) { return instance_from_json(parse_json_text(text)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  write_text_file(path, instance_to_json_text(instance));
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_json_text(read_text_file(path)); }

CardCatalog::CardCatalog(std::vector<Card> cards) {
  for (std::size_t i = 0; i < cards.size(); ++i) {
    validate_card(cards[i], "catalog[" + std::to_string(i) + "]");
    const std::string name = cards[i].name;
    if (!entries_.emplace(name, std::move(cards[i])).second) {
      throw ValidationError("catalog[" + std::to_string(i) + "].name", "duplicate card name '" + name + "'");
    }
  }
}

const Card* CardCatalog::find(std::string_view name) const {
  const auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const Card& CardCatalog::at(std::string_view name) const {
  if (const Card* c = find(name)) return *c;
  std::string message = "unknown card '" + std::string(name) + "'";
  const auto close = nearest(name);
  if (!close.empty()) {
    message += "; did you mean ";
    for (std::size_t i = 0; i < close.size(); ++i) message += (i ? ", '" : "'") + close[i] + "'";
    message += "?";
  }
  throw LookupError(message);
}

std::vector<Card> CardCatalog::cards() const {
  std::vector<Card> out;
  out.reserve(entries_.size());
  for (const auto& [name, card] : entries_) out.push_back(card);
  return out;
}

std::vector<Card> CardCatalog::search(std::string_view query) const {
  const std::string needle = lower(trim(query));
  std::vector<Card> out;
  for (const auto& [name, card] : entries_) {
    if (lower(name).find(needle) != std::string::npos) out.push_back(card);
  }
  return out;
}

std::vector<std::string> CardCatalog::nearest(std::string_view name, std::size_t limit) const {
  const std::string target = lower(name);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& [key, card] : entries_) scored.emplace_back(edit_distance(target, lower(key)), key);
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && i < limit; ++i) out.push_back(scored[i].second);
  return out;
}

CardCatalog catalog_from_csv_text(std::string_view text) {
  static constexpr std::array<std::string_view, 5> kColumns = {"name", "attack", "pitch_cost", "pitch_resource",
                                                                "defense"};
  std::vector<Card> cards;
  std::array<std::size_t, 5> column_of{};
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (trim(line).empty()) continue;

    const auto fields = split_csv_line(line, line_no);
    if (!have_header) {
      for (std::size_t c = 0; c < kColumns.size(); ++c) {
        const auto it = std::find_if(fields.begin(), fields.end(),
                                     [&](const std::string& f) { return lower(trim(f)) == kColumns[c]; });
        if (it == fields.end()) throw ParseError("catalog header is missing column '" + std::string(kColumns[c]) + "'", line_no);
        column_of[c] = static_cast<std::size_t>(it - fields.begin());
      }
      have_header = true;
      continue;
    }
    if (fields.size() < kColumns.size()) {
      throw ParseError("expected " + std::to_string(kColumns.size()) + " fields, got " + std::to_string(fields.size()),
                       line_no);
    }
    const auto number = [&](std::size_t c) {
      const std::string_view f = trim(fields[column_of[c]]);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size()) {
        throw ParseError("field '" + std::string(kColumns[c]) + "' is not an integer: '" + std::string(f) + "'",
                         line_no);
      }
      return v;
    };
    Card card{std::string(trim(fields[column_of[0]])), number(1), number(2), number(3), number(4)};
    validate_card(card, "line " + std::to_string(line_no));
    cards.push_back(std::move(card));
  }
  if (!have_header) throw ParseError("catalog is empty (no header row)", 1);
  return CardCatalog(std::move(cards));
}

CardCatalog load_catalog(const std::filesystem::path& path) { return catalog_from_csv_text(read_text_file(path)); }

Instance build_instance_from_names(const CardCatalog& catalog, const std::vector<std::string>& names, Lambda lambda,
                                   std::int64_t initial_resources) {
  std::vector<Card> cards;
  cards.reserve(names.size());
  for (const auto& name : names) cards.push_back(catalog.at(name));
  return Instance(std::move(cards), lambda, initial_resources);
}

}  // namespace fabopt
