#include "baystow/instance.hpp"

#include <algorithm>
#include <cmath>

#include "baystow/error.hpp"

namespace baystow {

double priority(double delivery_date) {
    if (!(delivery_date > 0.0) || !std::isfinite(delivery_date))
        throw Error(ErrorCode::NonPositiveDate,
                    "delivery date must be positive and finite, got " + std::to_string(delivery_date));
    return 1.0 / delivery_date;
}

Instance::Instance(BayDims dims, std::vector<Container> containers)
    : dims_(dims), containers_(std::move(containers)) {
    dims_.check();
    if (containers_.size() > dims_.capacity())
        throw Error(ErrorCode::CapacityExceeded, std::to_string(containers_.size()) +
                                                     " containers exceed capacity " +
                                                     std::to_string(dims_.capacity()) + " of bay " +
                                                     to_string(dims_));
    std::sort(containers_.begin(), containers_.end(),
              [](const Container& a, const Container& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < containers_.size(); ++i) {
        const auto& c = containers_[i];
        if (c.id != i + 1)
            throw Error(ErrorCode::InvalidSpec, "container ids must be exactly 1.." +
                                                    std::to_string(containers_.size()) + ", found id " +
                                                    std::to_string(c.id) + " at rank " + std::to_string(i + 1));
        (void)priority(c.delivery_date);
    }
}

std::vector<double> Instance::priorities() const {
    std::vector<double> p;
    p.reserve(containers_.size());
    for (const auto& c : containers_)
        p.push_back(c.priority());
    return p;
}

} // namespace baystow
