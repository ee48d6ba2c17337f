#include "bgd/report.hpp"

namespace bgd {

Json Report::to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json item{{"check", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty())
            for (auto it = c.detail.begin(); it != c.detail.end(); ++it) item[it.key()] = it.value();
        arr.push_back(std::move(item));
    }
    return arr;
}

}  // namespace bgd
