#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stackgame/game_model.hpp"

namespace stackgame {

/// Parsed instance file: the assets plus an optional bundled attack vector.
struct InstanceDocument {
  GameInstance instance;
  std::optional<AttackVector> attack;
};

/// Parses the JSON instance format:
///   {"assets": [{"name": ..., "reward_defender": ..., "cost_defender": ...,
///                "reward_attacker": ..., "cost_attacker": ...}, ...],
///    "attack": ["0", "1/2", ...]}            // optional
/// Values are rational strings ("5", "-39/14", "0.5") or JSON integers.
InstanceDocument parse_instance_document(const std::string& text);

GameInstance parse_instance(const std::string& text);

/// Serializes back to the document format with canonical rational strings;
/// re-parsing yields an equal instance.
std::string instance_to_json(const GameInstance& instance,
                             const std::optional<AttackVector>& attack = std::nullopt);

/// Moves the named asset (or 1-based index) to the last position, keeping
/// the relative order of the rest.
GameInstance rotate_anchor(const GameInstance& instance, std::string_view selector);

/// Same rotation applied to a whole document; a bundled attack vector is
/// reordered alongside its assets.
InstanceDocument rotate_anchor(InstanceDocument document, std::string_view selector);

/// Inline attack syntax: "e5" (pure attack on asset 5), "uniform", or
/// comma-separated rationals of full length.
AttackVector parse_attack_spec(std::string_view spec, std::size_t asset_count);

/// The bundled eight-asset example instance, embedded so `selftest` runs
/// without any files. data/paper_example.json carries the same document.
const char* paper_example_json();
GameInstance paper_example_instance();

}  // namespace stackgame
