#include "macro_table.hpp"

namespace clobber::detail {

// Waypoint tables. Each entry lists panes ('L'/'R' anchored to the left or
// right edge of the active window), then waypoints separated by alternating
// runs such as `W3`. Panes are split by `~`, rows by `|`. Upper case and lower
// case letters are stones; `.` and `_` are empty cells. Runs after `(` are
// played only when the step is the last one.
const MacroSource kMacroSources[] = {
    {"EE.trim0", "LR",
     "BW|WB ~ BW|WB W3 BW|WB ~ ._|W. B3 ._|.B ~ ._|W."},
    {"EE.trim6", "LR",
     ".BWB|BWBW ~ WBW.|BWBW W4 .W.B|.BbW ~ W.B.|BWw. W4 ._.B|._Ww ~ W._.|Bb._ W4 ._._|._.W ~ ._._|B._."},
    {"EE.m2.1", "L",
     ".BWBW.|BWBWBW W3 ._.BW.|.WBWBW B3 ._._._|.WBWB. W2 ._._._|._WB._ ( W1 ._._._|._.W._"},
    {"EE.m2.2", "L",
     "._WB._|.BWBW.|BWBWBW W2 ._W._.|.BWB._|BWBWBW W2 ._W._.|._Bb._|BWBWw. W2 ._._._|._WB._|.BbWw. W2 ._._._|._._._|.BWBW. W3 ._._._|._._._|._W._."},
    {"EE.m2.3", "L",
     "._W._.|.BWBW.|BWBWBW B2 ._W._.|.BWBW.|.BbWw. B2 ._._._|._WBW.|.BbWw. B2 ._._._|._._B.|.BWwW. B1 ._._._|._._._|.BWwB. W2 ._._._|._._._|.W.B._"},
    {"EE.m2.4", "L",
     ".W.B._|.BWBW.|BWBWBW W2 .W._._|.B.BW.|BWBWBW W2 ._._._|.W._B.|BWBWBW W2 ._._._|.W._B.|.BbWw. W2 ._._._|._._._|.WBWB. W2 ._._._|._._._|._WB._ ( W1 ._._._|._._._|._.W._"},
    {"EE.m1.1", "L",
     ".BWBWBW.|BWBWBWBW W12 ._._._._|._.WB._. W1 ._._._._|._._W._."},
    {"EE.m1.2", "L",
     "._._W._.|.BWBWBW.|BWBWBWBW B3 ._._W._.|.BWBW._.|BWBWBWB. W3 ._._W._.|._.BW._.|.WBWBWB. B2 ._._._._|._._W._.|.WBWBWB. B2 ._._._._|._._._._|.WBWwB._ B4 ._._._._|._._._._|._.W._._"},
    {"EE.m1.3", "L",
     "._.W._._|.BWBWBW.|BWBWBWBW B3 ._.W._._|.BWBW._.|BWBWBWB. W2 ._.W._._|.W.BW._.|.BbWBWB. W2 ._.W._._|._.BW._.|.WBWBb._ W2 ._.W._._|._.B._._|.WBWB._. W4 ._._._._|._._._._|.W.B._._"},
    {"EE.m1.4", "L",
     ".W.B._._|.BWBWBW.|BWBWBWBW W2 .W.B._._|.BWBW.B.|BWBWBWw. W4 ._.B._._|._WBW._.|.WBWBWB. W2 ._._._._|._.BW._.|.WBWBWB. W4 ._._._._|._._W._.|._.WBb._ W3 ._._._._|._._._._|._._W._."},
    {"EE.m0.1", "L",
     ".BWBWBWBW.|BWBWBWBWBW W12 ._._WB._._|._.WBWB._. W4 ._._._._._|._.W.B._._"},
    {"EE.m0.2", "L",
     "._.W.B._._|.BWBWBWBW.|BWBWBWBWBW W6 ._.W.B._._|._.BWBW._.|.WBWBWBWB. W4 ._.W._._._|._.Bb.W._.|._WwB.BWB. W4 ._._._._._|._._._._._|._WBb.WwB. W4 ._._._._._|._._._._._|._._W.B._."},
    {"EE.m0.3", "L",
     "._._W.B._.|.BWBWBWBW.|BWBWBWBWBW W6 ._._W.B._.|._.BWBW._.|.WBWBWBWB. W4 ._._._B._.|._._WBW._.|._WwBWBb._ W4 ._._._._._|._._._W._.|._WB.WBb._ W4 ._._._._._|._._._._._|._.W.B._._"},
    {"E3.1", "L",
     "BWB|WBW W2 ._B|BWw W2 ._.|W.B"},
    {"E3.2", "L",
     "W.B|BWB|WBW W2 W._|B.B|WBW W2 ._.|W.B|B.W W2 ._.|._.|W.B"},
    {"E5.1", "L",
     "BWBWB|WBWBW W2 .BbWB|.WwBW W2 .BbB.|.WwW. W2 .WB._|._WB. W3 ._._.|._W._"},
    {"E5.2", "L",
     "._W._|BWBWB|WBWBW B4 ._W._|.BbB.|.WwW. B3 ._._.|.BW._|.WB._ W3 ._._.|._._.|.W._."},
    {"E5.3", "L",
     ".W._.|BWBWB|WBWBW B4 .W._.|.BbB.|.WwW. B3 ._._.|.W.B.|.B.W. W2 ._._.|._._.|.W.B."},
    {"E5.4", "L",
     ".W.B.|BWBWB|WBWBW W4 .W._.|.BbBW|.WwB. W2 ._._.|.B.BW|.WwB. W2 ._._.|._.W.|.BWB. W3 ._._.|._._.|._W._"},
    {"O2.trim0", "LR",
     "BW|WB ~ WB|BW W3 .W|._ ~ WB|BW B3 .W|._ ~ ._|B."},
    {"O2.trim6", "LR",
     "WBWB|.WBW ~ BWB.|WBWB W3 WBWB|.WBW ~ B._.|WBW. B3 .BWB|._.W ~ B._.|WBW. W2 ._Bb|._.W ~ B._.|Ww._ W4 ._.B|._._ ~ ._._|W._."},
    {"O3.trim0", "LR",
     "BW|WB|BW ~ WB|BW|WB W8 .B|._|.W ~ W.|._|B."},
    {"O3.trim4", "LR",
     "BbW|.WB|WBW ~ WBW|BW.|WBb W3 .BW|._B|.Ww ~ WBW|BW.|WBb B3 ._B|._.|._W ~ WBW|BW.|WBb W3 ._B|._.|._W ~ Ww.|B._|WB. B3 ._B|._.|._W ~ W._|._.|B._"},
    {"O3.1", "L",
     "BbW|.W.|WBb W2 BbW|.W.|.B. W3 .B.|._.|.W."},
    {"O3.1p", "L",
     "BbWBW|.WBW.|WBWBb W2 .B.BW|.WBW.|WBWBb W2 .B.W.|.W.B.|WBWBb W2 ._._.|.B.W.|WBWBb W2 ._._.|._.W.|.BWBb W3 ._._.|._._.|.B.W."},
    {"C1.1a", "L",
     "BWBW.|.BWBW W2 BWBW.|._BW. W2 .BW._|._BW. W2 ._B._|._W._ ( W1 ._W._|._._."},
    {"C1.1b", "L",
     "WBWB.|.WBWB W2 .WB._|.WBWB W2 ._W._|.WBb. W3 ._._.|._W._"},
    {"C1.2a", "L",
     "._B._|._W._|BWBW.|.BWBW W2 ._B._|._W._|.BbW.|.W.BW W2 ._._.|._B._|.WBW.|._.BW W2 ._._.|._._.|._BW.|._.BW W2 ._._.|._._.|._.B.|._.W. ( W1 ._._.|._._.|._.W.|._._."},
    {"C1.2a3", "L",
     "._.B._.|._.W._.|BbWBWBW|.WBWBW.|WBWBWBb W4 ._.B._.|._.W._.|._.BWBW|.BbWBW.|.WwBWBb W4 ._.B._.|._.W._.|._.BWBW|._BWBW.|._._WBb W4 ._.B._.|._.W._.|._.BWw.|._BWBb.|._._._. W4 ._._._.|._.B._.|._.BW._|._.BW._|._._._. W4 ._._._.|._._._.|._._._.|._.B._.|._._._."},
    {"C1.2b", "L",
     "._W._|WBWB.|.WBWB B3 ._._.|WBW._|.WBb. W2 ._._.|WB._.|.WB._ W3 ._._.|._._.|.W._."},
    {"C1.2b3", "L",
     "._W._|BbWBW|.WBW.|WBWBb B4 ._W._|BbWBW|.B.W.|.W.B. B4 ._W._|BbWB.|.W._.|._._. B5 ._._.|._B._|._._.|._._."},
    {"C1.3a", "L",
     "._.B.|._.W.|BWBW.|.BWBW W2 ._.B.|._.W.|.BWw.|.B.BW W2 ._._.|._.B.|.W.W.|.B.BW W2 ._._.|._._.|._.B.|.W.BW W2 ._._.|._._.|._._.|.W.B."},
    {"C1.3a3", "L",
     "._._B._|._._W._|BbWBWBW|.WBWBW.|WBWBWBb W4 ._._B._|._._W._|._.BWBW|.BbWBW.|.WwBWBb W4 ._._B._|._._W._|._.BWBW|._BWBW.|._._WBb W4 ._._B._|._._W._|._.BWw.|._BWBb.|._._._. W4 ._._._.|._._B._|._.BW._|._.BW._|._._._. W4 ._._._.|._._._.|._.B._.|._._._.|._._._."},
    {"C1.3b", "L",
     ".W._.|WBWB.|.WBWB B3 ._._.|WB._.|.WBWB W2 ._._.|.W._.|.B.WB W2 ._._.|._._.|.W.B."},
    {"C1.3b3", "L",
     ".W._.|BbWBW|.WBW.|WBWBb B4 .W._.|BbWBW|.B.W.|.W.B. B4 .W._.|BbWB.|.W._.|._._. B5 ._._.|.B._.|._._.|._._."},
    {"C1.4a", "L",
     ".W.B.|BWBW.|.BWBW W2 .W.B.|.BbW.|.BWw. W2 ._._.|.WBb.|.BWw. W2 ._._.|._WB.|._BW. W2 ._._.|._B._|._W._ ( W1 ._._.|._W._|._._."},
    {"C1.4a3", "L",
     "W.B|BbW|.W.|WBb W2 ._.|WBb|.W.|WBb W2 ._.|.B.|.W.|WBb W3 ._.|.B.|._.|.W."},
    {"C1.4bm", "L",
     ".W.B.|.BWBW|BWBW. W2 .W._.|.BWB.|BWBW. W2 .W._.|.B.B.|.BWw. W2 ._._.|.W._.|.BWB. W3 ._._.|._._.|._W._"},
    {"C1.4b3", "L",
     ".W.B.|BbWBW|.WBW.|WBWBb W4 .W.B.|BbWBW|.B.W.|.W.B. W4 .W.B.|BbWB.|.W._.|._._. W5 ._._.|.W.B.|._._.|._._."},
    {"C2.1a", "L",
     "BWBWBW.|.BWBWBW W2 .BW.BW.|.BWBWBW W2 .W._BW.|.Bb.WBW W2 .W._.B.|.Bb.Ww. W4 ._._._.|._W.B._"},
    {"C2.1b", "L",
     "WBWBWB.|.WBWBWB W2 .WB.WB.|.WBWBWB W2 .B._WB.|.Ww.BWB W2 .B._.W.|.Ww.Bb. W4 ._._._.|._B.W._"},
    {"C2.2a", "L",
     "._W.B._|BWBWBW.|.BWBWBW W2 ._W.B._|.BbWw._|.BWBWBW W4 ._._B._|._W.W._|._BbWBW W2 ._._._.|._._B._|._WBWBW W2 ._._._.|._._B._|._W.BW. W2 ._._._.|._._._.|._W.B._"},
    {"C2.2b", "L",
     "._B.W._|WBWBWB.|.WBWBWB W2 ._._W._|.WBbWB.|.WBWBWB W2 ._._W._|.WB.Bb.|.Ww.BWB W2 ._._._.|.B._WB.|.Ww.BWB W6 ._._._.|._._._.|._B.W._"},
    {"C3.1a", "L",
     "BWBWBWBW.|.BWBWBWBW W4 .BbWBW.B.|.W.BWBWw. W4 ._WBbW._.|._._WBWB. W4 ._.WB._._|._._WB._. W3 ._._._._.|._._W._._"},
    {"C3.1b", "L",
     "WBWBWBWB.|.WBWBWBWB W4 .WwBWB.W.|.B.WBWBb. W4 ._BbWB._.|._.WBWw._ W4 ._.B._._.|._.WBW._. W3 ._._._._.|._.W._._."},
    {"C3.2a", "L",
     "._._W._._|BWBWBWBW.|.BWBWBWBW B4 ._._._._.|BWBWwW._.|.BWBWBWB. B4 ._._._._.|BWBWwW._.|.W.B.B._. B4 ._._._._.|._WwWB._.|._.B._._. ( B4 ._._._._.|._._W._._|._._._._."},
    {"C3.2a3", "L",
     "._.W._.|BbWBWBW|.WBWBW.|WBWBWBb B4 ._.W._.|.B.BWBW|.WBWBW.|WBb._WB B4 ._.W._.|._.BWBW|.WBWBW.|._B._B. B4 ._.W._.|._.BWw.|._BWBb.|._._._. B4 ._._._.|._._W._|._BWB._|._._._. B3 ._._._.|._._._.|._._B._|._._._."},
    {"C3.2b", "L",
     "._.W._._.|WBWBWBWB.|.WBWBWBWB B6 ._.W._._.|.BWBWB._.|._.WBWBW. B3 ._.W._._.|._BbW._._|._.WBbW._ W4 ._._._._.|._._B._._|._._WBW._ W3 ._._._._.|._._._._.|._._W._._"},
    {"C3.3a", "L",
     "._WwWB._.|._.B._._.|BWBWBWBW.|.BWBWBWBW B4 ._WwB._._|._.B._._.|BWBWBWBW.|._W._BWBW B4 ._WwB._._|._.B._._.|._BWBWwW.|._._.B.BW B4 ._._._._.|._.W._._.|._.BbWwW.|._._.B.BW B6 ._._._._.|._._._._.|._._.W._.|._._.B._W ( B1 ._._._._.|._._._._.|._._.B._.|._._._._W"},
    {"C3.3a3", "L",
     "WwWB.|.B._.|.BbW.|._W..|.WBb. B4 .W._.|.B._.|.BbW.|._W..|._WB. B4 ._._.|.W._.|.BW..|._B..|._._. B3 ._._.|._._.|.B._.|._._.|._._."},
    {"C3.3bm", "L",
     "._._W._._|.BWBWBWBW|BWBWBWBW. B6 ._._W._._|._.BWBWB.|.WBWBW._. B3 ._._W._._|._._BbB._|._WwBW._. W4 ._._._._.|._._.B._.|._WB.W._. W2 ._._._._.|._._._._.|._.W.B._."},
    {"C3.4am", "L",
     "._._.W._.|._._.B._W|.WBWBWBWB|WBWBWBWB. B4 ._._.W._.|._._.B._.|.WBWBWBW.|WBWBW.B._ B4 ._._._._.|._._.W._.|.B.WBWB._|WBWBW._._ B4 ._._._._.|._._._._.|._.WBW._.|.BWBW._._ B4 ._._._._.|._._._._.|._._W._._|._.BW._._ B2 ._._._._.|._._._._.|._._._._.|._._W._._"},
    {"C3.4a3", "L",
     "._W._._|._B._W.|BbWBWBW|.WBWBW.|WBWBWBb B4 ._W._._|._B._._|BbWBbWw|.WBW.W.|WBWB.B. B4 ._._._.|._W._._|BbWBbW.|.WBW._.|WBWB._. B4 ._._._.|._W._._|BbWBW._|.WBW._.|.B._._. B4 ._._._.|._W._._|BbWw._.|._B._._|._._._. B4 ._._._.|._._._.|B.W._._|._._._.|._._._."},
    {"C3.4b", "L",
     "._.W.B._.|WBWBWBWB.|.WBWBWBWB W4 ._.W.B._.|.BWB.WwB.|._.WBWBWB W4 ._.W._._.|.BWB.B._.|._.WBWBW. W4 ._.W._._.|._Bb._._.|._.WBW._. W5 ._._._._.|._._._._.|._.W._._."},
    {"A.2x2", "L",
     "BW|WB W1 B.|Ww B1 ._|BW W1 ._|W."},
    {"A.2x4", "L",
     "BWBW|WBWB W1 BWB.|WBWw B1 BW._|WBbW W1 BW._|WBW. B1 .W._|BbW. W1 ._._|BWw. B1 ._._|.BW. W1 ._._|.W._"},
    {"A.2x6", "L",
     "BWBWBW|WBWBWB W3 BWBW._|WBWBW. B3 ._BW._|.BWBW. W2 ._._._|.BbWw. W2 ._._._|._B.W."},
    {"A.3x3", "L",
     "BWB|WBW|BWB W2 W.B|B.W|BWB W5 ._.|._.|W.B"},
    {"A.3x5", "L",
     "BWBWB|WBWBW|BWBWB W2 BWBWB|._WBW|WBbWB W2 .BbWB|._WBW|.WBWB W2 ._BWB|._.BW|.WBWB W2 ._.BW|._.B.|.WBWB W2 ._.W.|._.B.|.WBb. W3 ._._.|._._.|.B.W."},
    {"A.4x4t", "L",
     ".W._|BWBW|WBWB B1 .W._|.BbW|WBWB W1 ._._|.WBW|WBWB B1 ._._|.B.W|WBWB W1 ._._|.B.W|.WwB B1 ._._|._.W|.BWB W1 ._._|._._|.BWw B1 ._._|._._|._BW W1 ._._|._._|._W."},
    {"A.4x6t", "L",
     "._B.W.|BWBWBW|WBWBWB W2 ._._W.|B.BWBW|WBWBWB W2 ._._._|B.BWwB|WBWBW. W2 ._._._|B.BWB.|Ww.BW. W2 ._._._|B._BW.|Ww.B._ W4 ._._._|._._._|.B.W._"},
    {"A.6x6t", "L",
     ".B.W._|BWBWBW|WBWBWB W2 ._.W._|WBbWBW|.BWBWB W2 ._.W._|.WBbBW|.BW.WB W2 ._._._|.BbWBW|._W.WB W2 ._._._|._B.BW|._W.WB W2 ._._._|._B._.|._W.BW W2 ._._._|._._._|._B.W."},
    {"C3.3a.fin", "L",
     "._WwWB._.|._.B._._.|BWBWBWBW.|.BWBWBWBW B4 ._WwB._._|._.B._._.|BWBWBWBW.|._W._BWBW B8 ._._._._.|._.W._._.|._BWBB.W.|._._.BWW. B7 ._._._._.|._._._._.|._._.W.B.|._._._._."},
    {"A.5x5", "L",
     "BWBWB|WBWBW|BWBWB|WBWBW|BWBWB W8 W_.B.|WB_BW|B_.W.|WBWB_|BWBWB W8 ._._.|_._._|W_.B.|WBWB_|B_WB. W8 ._._.|_._._|._._.|_B_._|._._."},
};

const std::size_t kMacroSourceCount = sizeof(kMacroSources) / sizeof(kMacroSources[0]);

}  // namespace clobber::detail
