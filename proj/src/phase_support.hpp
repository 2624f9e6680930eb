#pragma once

#include "writersroom/core.hpp"
#include "writersroom/journal.hpp"
#include "writersroom/prompts.hpp"
#include "writersroom/provider.hpp"

namespace writersroom::detail {

inline ChatTurnRequest make_request(const WriterProfile& writer, const PromptBundle& bundle,
                                    RequestTag tag) {
  return {writer.binding, bundle.messages(), std::move(tag)};
}

// Stored text for `proto` when replaying; otherwise asks the provider and
// records the answer with `proto`'s identity.
inline std::string recall_or_request(Journal& journal, ChatProvider& provider,
                                     const WriterProfile& writer, const PromptBundle& bundle,
                                     const RequestTag& tag, TurnRecord proto) {
  if (auto stored = journal.recall(proto.phase, proto.round, proto.writer, proto.kind,
                                   proto.attempt)) {
    return stored->text;
  }
  proto.text = provider.complete(make_request(writer, bundle, tag)).text;
  journal.record(proto);
  return proto.text;
}

}  // namespace writersroom::detail
