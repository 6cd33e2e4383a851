#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "quadeuler/error.hpp"

namespace quadeuler {

/// Shape of the ambient rectangle for Schubert classes on the Grassmannian
/// Gr(k, n) of rank-k quotients: k rows, w = n - k columns.
struct BoxShape {
    int k = 1;  // rows = rank of the universal quotient Q
    int w = 0;  // columns = n - k

    BoxShape() = default;
    BoxShape(int rows, int cols) : k(rows), w(cols) {
        if (k < 1 || w < 0) throw domain_error("BoxShape: need k >= 1 and w >= 0");
    }

    [[nodiscard]] static BoxShape for_grassmannian(int k, int n) {
        if (n < k) throw domain_error("Gr(k,n): need n >= k");
        return BoxShape(k, n - k);
    }

    [[nodiscard]] int ambient_n() const { return k + w; }
    [[nodiscard]] long long dimension() const { return static_cast<long long>(k) * w; }

    friend bool operator==(const BoxShape&, const BoxShape&) = default;
};

/// Integer partition: weakly decreasing parts, trailing zeros stripped.
/// Ordered lexicographically on the parts vector, which is the canonical
/// term order used for serialization.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> p) : parts_(p) { normalize(); }
    explicit Partition(std::vector<int> p) : parts_(std::move(p)) { normalize(); }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    /// Number of boxes |lambda|.
    [[nodiscard]] long long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    [[nodiscard]] int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    [[nodiscard]] bool fits(const BoxShape& box) const {
        if (length() > box.k) return false;
        return parts_.empty() || parts_.front() <= box.w;
    }

    /// Conjugate (transposed) diagram.
    [[nodiscard]] Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> conj(static_cast<size_t>(parts_.front()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) conj[static_cast<size_t>(j)]++;
        return Partition(std::move(conj));
    }

    [[nodiscard]] bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    void normalize() {
        for (size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1])
                throw domain_error("Partition: parts must be weakly decreasing");
        if (!parts_.empty() && parts_.back() < 0)
            throw domain_error("Partition: parts must be non-negative");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    std::vector<int> parts_;
};

/// The full k x w rectangle, i.e. the class of a rational point.
inline Partition full_box(const BoxShape& box) {
    if (box.w == 0) return {};
    return Partition(std::vector<int>(static_cast<size_t>(box.k), box.w));
}

/// Single column (1^j). j = 0 gives the empty partition.
inline Partition column_partition(int j) {
    return Partition(std::vector<int>(static_cast<size_t>(j), 1));
}

/// Single row (m). m = 0 gives the empty partition.
inline Partition row_partition(int m) {
    return m > 0 ? Partition{m} : Partition{};
}

/// All partitions fitting the box, in lexicographic order.
inline std::vector<Partition> partitions_in_box(const BoxShape& box) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int row, int maxPart) {
        out.emplace_back(current);
        if (row >= box.k) return;
        for (int p = 1; p <= maxPart; ++p) {
            current.push_back(p);
            rec(row + 1, p);
            current.pop_back();
        }
    };
    rec(0, box.w);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace quadeuler
