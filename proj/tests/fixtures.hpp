// Hand-encoded structures and glosses of the worked examples. Indices follow
// the displayed structures (x_a is written xa).

#pragma once

#include <string_view>

namespace fixtures {

// Jack filled five buckets in twenty minutes
inline constexpr std::string_view kFillFive =
    "[index: e0, sort: event, pred: fill, agent: jack,"
    " patient: [index: x0, sort: object, pred: bucket, card: 5],"
    " duration: [number: 20, unit: minutes]]";

// Jack poured water into bucket A for thirty seconds (process reading)
inline constexpr std::string_view kPourProcess =
    "[index: e1, sort: process, pred: pour, agent: jack,"
    " patient: [index: x1, sort: substance, pred: water],"
    " goal: [index: xa, sort: object, pred: bucket, name: A],"
    " duration: [number: 30, unit: seconds]]";

// Jack poured five gallons of water into bucket A in thirty seconds (primed)
inline constexpr std::string_view kPourPrimed =
    "[index: e1', sort: event, pred: pour, agent: jack,"
    " patient: [index: x1', sort: object, pred: water,"
    "           quantity: [number: 5, unit: gallons]],"
    " goal: [index: xa, sort: object, pred: bucket, name: A],"
    " duration: [number: 30, unit: seconds]]";

// Jack poured water into bucket A for thirty seconds
inline constexpr std::string_view kPourFor30 =
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: pour, agent: jack,"
    "   patient: [index: x, sort: substance, pred: water],"
    "   goal: [index: xa, sort: object, pred: bucket, name: A]],"
    " duration: [number: 30, unit: seconds]]";

// Jack poured five gallons of water into bucket A in thirty seconds
inline constexpr std::string_view kPour5GalIn30 =
    "[index: e1, sort: event, pred: pour, agent: jack,"
    " patient: [index: x1, sort: object,"
    "   composed-of: [index: x, sort: substance, pred: water],"
    "   quantity: [number: 5, unit: gallons]],"
    " goal: [index: xa, sort: object, pred: bucket, name: A],"
    " duration: [number: 30, unit: seconds]]";

// * Jack ran to the bridge for thirty seconds
inline constexpr std::string_view kRanToFor30 =
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: event, pred: run, agent: jack,"
    "   path: [index: p, sort: delimited-path, pred: to,"
    "          ref-obj: [index: b, pred: bridge]]],"
    " duration: [number: 30, unit: seconds]]";

// Jack ran towards the bridge for thirty seconds
inline constexpr std::string_view kRanTowardsFor30 =
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: run, agent: jack,"
    "   path: [index: p, sort: non-delimited-path, pred: towards,"
    "          ref-obj: [index: b, pred: bridge]]],"
    " duration: [number: 30, unit: seconds]]";

// * Jack ran to the bridge for two miles
inline constexpr std::string_view kRanToFor2Miles =
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: event, pred: run, agent: jack,"
    "   path: [index: p, sort: delimited-path, pred: to,"
    "          ref-obj: [index: b, pred: bridge]]],"
    " distance: [number: 2, unit: miles]]";

// Jack ran two miles to the bridge
inline constexpr std::string_view kRan2MilesTo =
    "[index: e1, sort: event, pred: run, agent: jack,"
    " path: [index: p1, sort: delimited-path, pred: to,"
    "        ref-obj: [index: b, pred: bridge]],"
    " distance: [number: 2, unit: miles]]";

// Jack ran along the river for two miles
inline constexpr std::string_view kRanAlongFor2Miles =
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: run, agent: jack,"
    "   path: [index: p, sort: non-delimited-path, pred: along,"
    "          ref-obj: [index: r, pred: river]]],"
    " distance: [number: 2, unit: miles]]";

// Jack ran two miles along the river
inline constexpr std::string_view kRan2MilesAlong =
    "[index: e1, sort: event, pred: run, agent: jack,"
    " path: [index: p1, sort: delimited-path, pred: along,"
    "        ref-obj: [index: r, pred: river]],"
    " distance: [number: 2, unit: miles]]";

// Jack ran along the river, two hundred yards from the shore, for thirty seconds
inline constexpr std::string_view kRanAlongProximal =
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: run, agent: jack,"
    "   path: [index: p, sort: non-delimited-path, pred: along,"
    "          ref-obj: [index: r, pred: river],"
    "          proximal-distance: [ref-obj: [index: s, pred: shore],"
    "                              number: 200, unit: yards]]],"
    " duration: [number: 30, unit: seconds]]";

// * Jack poured five gallons of water into bucket A for thirty seconds
inline constexpr std::string_view kPour5GalFor30 =
    "[index: e1, sort: event,"
    " composed-of: [index: e, sort: process, pred: pour, agent: jack,"
    "   patient: [index: x1, sort: object,"
    "     composed-of: [index: x, sort: substance, pred: water],"
    "     quantity: [number: 5, unit: gallons]],"
    "   goal: [index: xa, sort: object, pred: bucket, name: A]],"
    " duration: [number: 30, unit: seconds]]";

// * Jack filled buckets in twenty minutes
inline constexpr std::string_view kFilledBucketsIn20 =
    "[index: e0, sort: event, pred: fill, agent: jack,"
    " patient: [index: x0, sort: substance, pred: bucket],"
    " duration: [number: 20, unit: minutes]]";

// Jack filled buckets for twenty minutes
inline constexpr std::string_view kFilledBucketsFor20 =
    "[index: e0, sort: event,"
    " composed-of: [index: e, sort: process, pred: fill, agent: jack,"
    "   patient: [index: x0, sort: substance, pred: bucket]],"
    " duration: [number: 20, unit: minutes]]";

// Jack filled a bucket
inline constexpr std::string_view kFilledABucket =
    "[index: e0, sort: event, pred: fill, agent: jack,"
    " patient: [index: x0, sort: object, pred: bucket]]";

// Jack filled something
inline constexpr std::string_view kFilledSomething =
    "[index: e0, sort: event, pred: fill, agent: jack,"
    " patient: [index: x0, sort: object]]";

inline constexpr std::string_view kUnstarredAvms[] = {
    kFillFive,        kPourProcess,   kPourPrimed,  kPourFor30,
    kPour5GalIn30,    kRanTowardsFor30, kRan2MilesTo, kRanAlongFor2Miles,
};

inline constexpr std::string_view kStarredAvms[] = {
    kRanToFor30, kRanToFor2Miles, kPour5GalFor30,
};

struct Gloss {
  std::string_view sentence;
  std::string_view avm;
};

// Sentences that parse directly; the two fill weakenings are included since
// they also parse.
inline constexpr Gloss kGlosses[] = {
    {"Jack filled five buckets in twenty minutes", kFillFive},
    {"Jack poured water into bucket A for thirty seconds", kPourFor30},
    {"Jack poured five gallons of water into bucket A in thirty seconds", kPour5GalIn30},
    {"Jack ran towards the bridge for thirty seconds", kRanTowardsFor30},
    {"Jack ran along the river, two hundred yards from the shore, for thirty seconds",
     kRanAlongProximal},
    {"Jack ran two miles to the bridge", kRan2MilesTo},
    {"Jack ran along the river for two miles", kRanAlongFor2Miles},
    {"Jack filled a bucket", kFilledABucket},
    {"Jack filled something", kFilledSomething},
};

inline constexpr std::string_view kStarredSentences[] = {
    "Jack ran to the bridge for thirty seconds",
    "Jack ran to the bridge for two miles",
    "Jack poured five gallons of water into bucket A for thirty seconds",
    "Jack filled buckets in twenty minutes",
};

}  // namespace fixtures
