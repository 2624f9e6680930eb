#include "writersroom/templating.hpp"

#include <algorithm>

#include "writersroom/assets.hpp"
#include "writersroom/errors.hpp"

namespace writersroom {

namespace {

constexpr std::string_view kOpen = "{{";
constexpr std::string_view kClose = "}}";

template <typename OnText, typename OnMarker>
void scan(std::string_view source, OnText on_text, OnMarker on_marker) {
  std::size_t pos = 0;
  while (pos < source.size()) {
    const auto open = source.find(kOpen, pos);
    if (open == std::string_view::npos) {
      on_text(source.substr(pos));
      return;
    }
    on_text(source.substr(pos, open - pos));
    const auto close = source.find(kClose, open + kOpen.size());
    if (close == std::string_view::npos) {
      throw Error("unterminated template marker at offset " + std::to_string(open));
    }
    on_marker(source.substr(open + kOpen.size(), close - open - kOpen.size()));
    pos = close + kClose.size();
  }
}

}  // namespace

std::string render_template(std::string_view source, const TemplateValues& values) {
  std::string out;
  out.reserve(source.size());
  scan(
      source, [&](std::string_view text) { out.append(text); },
      [&](std::string_view name) {
        auto it = values.find(name);
        if (it == values.end()) {
          throw Error("template placeholder {{" + std::string(name) + "}} has no value");
        }
        out.append(it->second);
      });
  return out;
}

std::vector<std::string> template_placeholders(std::string_view source) {
  std::vector<std::string> names;
  scan(
      source, [](std::string_view) {},
      [&](std::string_view name) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
          names.emplace_back(name);
        }
      });
  return names;
}

std::string_view template_asset(std::string_view name) {
  const auto path = "templates/" + std::string(name) + ".tmpl";
  auto text = assets::find(path);
  if (!text) throw Error("template asset " + path + " is not bundled");
  return *text;
}

}  // namespace writersroom
