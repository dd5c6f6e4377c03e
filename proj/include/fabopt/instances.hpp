#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fabopt/model.hpp"

namespace fabopt {

// ---------------------------------------------------------------------------
// Random generation
//
// Reproducible across languages: the engine is std::mt19937_64 seeded with
// the 64-bit seed as-is (the standard single-integer seeding routine). A
// draw in [0, bound] uses unbiased rejection: with m = bound + 1, take raw
// 64-bit outputs x until x < 2^64 - (2^64 mod m) and return x mod m. Per card
// the draws are attack, pitch_cost, pitch_resource, defense, in that order.
// Cost-correlated instances replace the pitch_cost draw with
// max(0, attack + u - 2), u drawn in [0, 4].
// ---------------------------------------------------------------------------

enum class Correlation { Uncorrelated, CostCorrelated };

struct GeneratorConfig {
  std::size_t n = 10;
  std::int64_t max_attack = 9;
  std::int64_t max_cost = 9;
  std::int64_t max_resource = 9;
  std::int64_t max_defense = 9;
  Correlation correlation = Correlation::Uncorrelated;
  std::uint64_t seed = 0;
  Lambda lambda;
  std::int64_t initial_resources = 0;
};

/// Throws ValidationError for n == 0 or a negative bound.
void validate(const GeneratorConfig& config);

Instance generate(const GeneratorConfig& config);

std::string_view to_string(Correlation c) noexcept;
Correlation parse_correlation(std::string_view text);

// ---------------------------------------------------------------------------
// Instance files (JSON)
// ---------------------------------------------------------------------------

/// Canonical text: two-space indented JSON with keys in schema order and a
/// trailing newline. Byte-identical for equal instances.
std::string instance_to_json_text(const Instance& instance);
/// ParseError (with line) on malformed JSON; ValidationError (with field
/// path) on schema or invariant violations.
Instance instance_from_json_text(std::string_view text);

void save_instance(const Instance& instance, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Card catalog (CSV: name,attack,pitch_cost,pitch_resource,defense)
// ---------------------------------------------------------------------------

class CardCatalog {
 public:
  CardCatalog() = default;
  /// ValidationError on a duplicate name or invalid card.
  explicit CardCatalog(std::vector<Card> cards);

  const Card* find(std::string_view name) const;
  const Card& at(std::string_view name) const;  // LookupError with suggestions
  std::size_t size() const noexcept { return entries_.size(); }
  std::vector<Card> cards() const;

  /// Case-insensitive substring match over names, in name order.
  std::vector<Card> search(std::string_view query) const;
  /// Up to `limit` names closest by edit distance (case-insensitive).
  std::vector<std::string> nearest(std::string_view name, std::size_t limit = 3) const;

 private:
  std::map<std::string, Card, std::less<>> entries_;
};

CardCatalog catalog_from_csv_text(std::string_view text);
CardCatalog load_catalog(const std::filesystem::path& path);

/// Hand in the given order; duplicate names give duplicate cards.
Instance build_instance_from_names(const CardCatalog& catalog, const std::vector<std::string>& names,
                                   Lambda lambda = {}, std::int64_t initial_resources = 0);

/// Reads a whole file; Error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace fabopt
