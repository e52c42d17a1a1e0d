#pragma once

#include <string>

namespace hahnrank {

enum class Ordering { Less, Equal, Greater };

inline Ordering flip(Ordering o) {
    switch (o) {
    case Ordering::Less: return Ordering::Greater;
    case Ordering::Greater: return Ordering::Less;
    default: return Ordering::Equal;
    }
}

inline Ordering ordering_from_sign(int s) {
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

inline const char* ordering_name(Ordering o) {
    switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Greater: return "greater";
    default: return "equal";
    }
}

} // namespace hahnrank
