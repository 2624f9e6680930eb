#include <gtest/gtest.h>

#include "writersroom/errors.hpp"
#include "writersroom/templating.hpp"

using namespace writersroom;

TEST(Templating, SubstitutesEveryMarker) {
  EXPECT_EQ(render_template("Hi {{name}}, meet {{other}}. Bye {{name}}.",
                            {{"name", "JW"}, {"other", "MM"}}),
            "Hi JW, meet MM. Bye JW.");
}

TEST(Templating, ValuesAreNotRescanned) {
  EXPECT_EQ(render_template("[{{a}}]", {{"a", "{{b}}"}}), "[{{b}}]");
}

TEST(Templating, MissingValueThrows) {
  EXPECT_THROW(render_template("{{missing}}", {}), Error);
}

TEST(Templating, UnterminatedMarkerThrows) {
  EXPECT_THROW(render_template("text {{open", {{"open", "x"}}), Error);
}

TEST(Templating, TextWithoutMarkersIsUnchanged) {
  const std::string text = "Plain text with { single braces } and }} closers.";
  EXPECT_EQ(render_template(text, {}), text);
}

TEST(Templating, PlaceholdersInFirstAppearanceOrder) {
  EXPECT_EQ(template_placeholders("{{b}} {{a}} {{b}} {{c}}"),
            (std::vector<std::string>{"b", "a", "c"}));
}

TEST(Templating, BundledTemplatesLoad) {
  for (const char* name : {"base", "ideation", "consensus", "decisions", "summary", "writing",
                           "repair"}) {
    EXPECT_FALSE(template_asset(name).empty()) << name;
  }
  EXPECT_THROW(template_asset("nope"), Error);
}

TEST(Templating, BaseTemplateHasFourSlots) {
  EXPECT_EQ(template_placeholders(template_asset("base")),
            (std::vector<std::string>{"agent_name", "other_agents", "topic_brief",
                                      "position_statement"}));
}
