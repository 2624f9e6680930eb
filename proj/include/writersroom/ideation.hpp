#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "writersroom/core.hpp"
#include "writersroom/journal.hpp"
#include "writersroom/provider.hpp"

namespace writersroom {

// Lenient labeled-section parser. A line "<Label>: text" opens a section that
// runs until the next label. Genre, setting, characters, shape, plot and
// conflict map to fields (case-insensitive); any other label lands in extras.
// Text before the first label only survives in `raw`. Never throws.
NarrativeProposal parse_proposal(std::string_view author, std::string_view text);

// The canonical labeled form that parse_proposal reads back unchanged.
std::string compose_proposal(const NarrativeProposal& proposal);

// Each writer proposes independently; calls run concurrently. Results are
// recorded in canonical order (phase=ideation, round=1).
std::map<std::string, NarrativeProposal> run_ideation(const RoomConfig& room,
                                                      ChatProvider& provider, Journal& journal,
                                                      const RunControl& control = {});

// The proposals in the room's canonical writer order.
std::vector<NarrativeProposal> ordered_proposals(
    const RoomConfig& room, const std::map<std::string, NarrativeProposal>& proposals);

}  // namespace writersroom
