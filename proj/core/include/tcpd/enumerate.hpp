#pragma once

#include "tcpd/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tcpd {

/// Mixed-radix counter over `length` digits in [0, base), last digit
/// fastest. Starts at all zeros (or at a given linear index).
class Odometer {
public:
    Odometer(std::uint64_t base, std::size_t length, std::uint64_t start = 0);

    std::span<const std::uint64_t> digits() const noexcept { return digits_; }
    /// Advances to the next tuple; returns false after wrapping past the last.
    bool next() noexcept;

private:
    std::uint64_t base_;
    std::vector<std::uint64_t> digits_;
};

/// Ordered enumeration of all |R|^len vectors over a ring in odometer order
/// (last coordinate fastest, all-zeros first).
template <ScalarRing Ring>
class VectorEnumerator {
public:
    using Elem = typename Ring::Elem;

    VectorEnumerator(Ring ring, std::size_t length, std::uint64_t start = 0)
        : ring_(std::move(ring)), odo_(ring_.size(), length, start), current_(length) {
        sync();
    }

    std::span<const Elem> current() const noexcept { return current_; }
    bool next() noexcept {
        const bool more = odo_.next();
        sync();
        return more;
    }

private:
    void sync() noexcept {
        const auto d = odo_.digits();
        for (std::size_t i = 0; i < d.size(); ++i) current_[i] = ring_.element(d[i]);
    }

    Ring ring_;
    Odometer odo_;
    std::vector<Elem> current_;
};

/// Materializes every vector of the given length, in enumeration order.
template <ScalarRing Ring>
std::vector<std::vector<typename Ring::Elem>> enumerate_vectors(const Ring& ring, std::size_t length) {
    std::vector<std::vector<typename Ring::Elem>> out;
    VectorEnumerator<Ring> it(ring, length);
    do {
        out.emplace_back(it.current().begin(), it.current().end());
    } while (it.next());
    return out;
}

/// Calls fn(span<const Elem>) for every vector; stops early if fn returns false.
template <ScalarRing Ring, class Fn>
void for_each_vector(const Ring& ring, std::size_t length, Fn&& fn) {
    VectorEnumerator<Ring> it(ring, length);
    do {
        if (!fn(it.current())) return;
    } while (it.next());
}

} // namespace tcpd
