#pragma once

#include <optional>
#include <string_view>

namespace writersroom::assets {

// Files under assets/, compiled into the library. Names are relative paths,
// e.g. "templates/base.tmpl".
std::optional<std::string_view> find(std::string_view name);

}  // namespace writersroom::assets
