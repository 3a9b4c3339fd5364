#include "tcpd/enumerate.hpp"

namespace tcpd {

Odometer::Odometer(std::uint64_t base, std::size_t length, std::uint64_t start)
    : base_(base), digits_(length, 0) {
    for (std::size_t i = length; i-- > 0 && start > 0;) {
        digits_[i] = start % base_;
        start /= base_;
    }
}

bool Odometer::next() noexcept {
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (++digits_[i] < base_) return true;
        digits_[i] = 0;
    }
    return false;
}

} // namespace tcpd
