#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace writersroom {

using TemplateValues = std::map<std::string, std::string, std::less<>>;

// Replaces {{name}} markers. Substituted values are inserted verbatim and are
// never scanned for markers themselves. Throws Error when the template names a
// placeholder that has no value or contains an unterminated marker.
std::string render_template(std::string_view source, const TemplateValues& values);

// Placeholder names in order of first appearance.
std::vector<std::string> template_placeholders(std::string_view source);

// Loads assets/templates/<name>.tmpl. Throws Error if it is not bundled.
std::string_view template_asset(std::string_view name);

}  // namespace writersroom
