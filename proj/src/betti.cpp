#include "mpd/betti.hpp"

#include <algorithm>

namespace mpd {

void BettiTable::normalize() {
    for (auto it = rows.begin(); it != rows.end();) {
        if (it->second.empty()) {
            it = rows.erase(it);
        } else {
            std::sort(it->second.begin(), it->second.end());
            ++it;
        }
    }
}

}  // namespace mpd
