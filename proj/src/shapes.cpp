#include "writersroom/core.hpp"

namespace writersroom {

// Reconstructed from Vonnegut's story-shape lectures and the six emotional
// arcs of Reagan et al.
std::vector<StoryShape> shape_catalog() {
  return {
      {"man-in-a-hole", "Man in a Hole",
       "Somebody gets into trouble, then gets out of it again and ends up better off than before. "
       "Fortune falls, then rises."},
      {"boy-meets-girl", "Boy Meets Girl",
       "An ordinary day turns when the protagonist comes across something wonderful, loses it, and "
       "wins it back for good. Fortune rises, falls, and rises again."},
      {"cinderella", "Cinderella",
       "A humble character receives unexpected help and climbs toward happiness, loses everything "
       "at the worst moment, then rises to a lasting good fortune."},
      {"rags-to-riches", "Rags to Riches",
       "A steady, ongoing rise from misfortune to good fortune."},
      {"riches-to-rags", "Riches to Rags",
       "A steady fall from good fortune into ruin. This is the shape of tragedy."},
      {"icarus", "Icarus",
       "The protagonist climbs to great heights and is then brought down. Fortune rises, then "
       "falls."},
      {"oedipus", "Oedipus",
       "Misfortune, then a recovery that looks like escape, then a final fall. Fortune falls, "
       "rises, and falls."},
      {"creation-story", "Creation Story",
       "Gifts arrive one after another in a stepwise ascent, as in tales of a world being made."},
      {"old-testament", "Old Testament",
       "The protagonist is lifted to great fortune and then cast down to the depths, as in a fall "
       "from grace."},
      {"which-way-is-up", "Which Way Is Up?",
       "Things happen, but it is impossible to tell whether they are good news or bad news. The "
       "line of fortune stays ambiguous."},
  };
}

}  // namespace writersroom
