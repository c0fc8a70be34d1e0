#pragma once

#include <span>
#include <vector>

#include "baystow/bay.hpp"

namespace baystow {

/// Priority of a container with delivery date `d`: 1/d. Throws NonPositiveDate.
double priority(double delivery_date);

struct Container {
    ContainerId id = kEmpty;
    double delivery_date = 1.0;

    double priority() const { return baystow::priority(delivery_date); }

    friend bool operator==(const Container&, const Container&) = default;
};

/// A bay and the containers waiting in it. Ids are exactly 1..Nc.
class Instance {
  public:
    Instance() = default;
    /// Containers must carry ids 1..Nc (any order); stored sorted by id.
    Instance(BayDims dims, std::vector<Container> containers);

    const BayDims& dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return containers_.size(); }
    std::span<const Container> containers() const noexcept { return containers_; }
    const Container& container(ContainerId id) const { return containers_.at(id - 1); }

    /// Priorities indexed by id - 1.
    std::vector<double> priorities() const;

    friend bool operator==(const Instance&, const Instance&) = default;

  private:
    BayDims dims_{};
    std::vector<Container> containers_;
};

} // namespace baystow
