#pragma once

#include "symext/diagram/diagram.hpp"

#include <memory>

namespace symext {

namespace detail {
struct FnNode;
}

// Immutable expression over a diagram, evaluated exactly at (k, instance). Each expression
// carries a scale S: past S every threshold comparison it makes is settled, which lets
// envelopes and limits in k be read off at finite witnesses.
class Fn {
public:
    Fn() = default;  // empty handle; only for later assignment
    static Fn constant(std::shared_ptr<const MeasureDiagram> d, Entropy v);
    static Fn sequence(std::shared_ptr<const MeasureDiagram> d, const SpecTable& specs);
    static Fn function(std::shared_ptr<const MeasureDiagram> d, const SpecTable& specs);

    Entropy at(std::int64_t k, const Instance& x) const;
    Entropy at(const Instance& x) const { return at(0, x); }
    std::int64_t scale() const;
    bool k_dependent() const;
    const MeasureDiagram& diagram() const;
    std::shared_ptr<const MeasureDiagram> diagram_ptr() const;

    // Upper semicontinuous envelope, taken separately for every k.
    Fn envelope() const;
    // Pointwise limit as k grows.
    Fn lim_k() const;
    // k -> f(k + 1).
    Fn shifted() const;

    friend Fn operator+(const Fn& a, const Fn& b);
    friend Fn operator-(const Fn& a, const Fn& b);
    friend Fn max(const Fn& a, const Fn& b);

private:
    explicit Fn(std::shared_ptr<const detail::FnNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const detail::FnNode> node_;
};

}  // namespace symext
