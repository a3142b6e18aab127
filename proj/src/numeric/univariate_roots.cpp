/*
   Copyright 2026 The fewnomial authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fewnomial/numeric/univariate_roots.hpp"

namespace fewnomial::numeric {

std::vector<NewtonSegment> lower_hull_slopes(std::vector<std::pair<long, long>> points) {
    std::sort(points.begin(), points.end());
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : points) {
        if (!hull.empty() && hull.back().first == pt.first)
            throw InputError("Newton polygon points need distinct abscissae");
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // Drop b unless it lies strictly below segment a-pt.
            const __int128 cross = static_cast<__int128>(b.first - a.first) * (pt.second - a.second) -
                                   static_cast<__int128>(b.second - a.second) * (pt.first - a.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    std::vector<NewtonSegment> out;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const long dx = hull[i].first - hull[i - 1].first;
        out.push_back({Rational(hull[i].second - hull[i - 1].second, dx), dx});
        out.back().slope.canonicalize();
    }
    return out;
}

}  // namespace fewnomial::numeric
