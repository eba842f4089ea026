#include "camspm/cam_array.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "camspm/errors.hpp"

namespace camspm {

CompareKey CompareKey::exact(std::uint64_t index, unsigned width) {
    const std::uint64_t mask = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    return {index & mask, mask};
}

CamRamArray::CamRamArray(std::size_t height, unsigned index_width) : height_(height), width_(index_width) {
    if (height_ == 0) {
        throw InvariantError("CAM/RAM array height must be at least 1");
    }
    if (width_ < 1 || width_ > 64) {
        throw InvariantError("CAM index width must be in [1, 64]");
    }
}

std::uint64_t CamRamArray::width_mask() const noexcept {
    return width_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
}

void CamRamArray::load_segment(std::span<const SparseEntry> entries) {
    if (entries.size() > height_) {
        throw CapacityError(std::to_string(entries.size()) + " entries exceed array height " +
                            std::to_string(height_) + "; tile the vector");
    }
    std::unordered_map<std::uint64_t, std::size_t> next;
    next.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::uint64_t idx = entries[i].index;
        if ((idx & ~width_mask()) != 0) {
            throw InvariantError("index " + std::to_string(idx) + " does not fit in " +
                                 std::to_string(width_) + " bits");
        }
        if (!next.emplace(idx, i).second) {
            throw InvariantError("duplicate index " + std::to_string(idx) + " in segment");
        }
    }

    if (rows_.size() < entries.size()) {
        rows_.resize(entries.size());
        write_count_.resize(entries.size(), 0);
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        rows_[i] = {entries[i].index, entries[i].value, true};
        max_writes_ = std::max(max_writes_, ++write_count_[i]);
    }
    for (std::size_t i = entries.size(); i < rows_.size(); ++i) {
        rows_[i].valid = false;
    }
    lookup_ = std::move(next);
    tally_.writes += entries.size();
}

std::optional<std::size_t> CamRamArray::compare_select(const CompareKey& key) {
    const std::uint64_t mask = key.mask & width_mask();
    tally_.compare_bit_ops += static_cast<std::uint64_t>(height_) * static_cast<unsigned>(std::popcount(mask));

    if (mask == width_mask()) {
        auto it = lookup_.find(key.key_bits & mask);
        if (it == lookup_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    std::optional<std::size_t> hit;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!rows_[r].valid || ((rows_[r].index_bits ^ key.key_bits) & mask) != 0) {
            continue;
        }
        if (hit) {
            throw CamFault("match lines " + std::to_string(*hit) + " and " + std::to_string(r) +
                           " both asserted");
        }
        hit = r;
    }
    return hit;
}

std::optional<double> CamRamArray::search(std::uint64_t index) {
    auto hit = compare_select(CompareKey::exact(index, width_));
    if (!hit) {
        return std::nullopt;
    }
    ++tally_.ram_reads;
    return rows_[*hit].value;
}

double CamRamArray::endurance_headroom(std::uint64_t budget) const {
    return camspm::endurance_headroom(max_writes_, budget);
}

std::uint64_t CamRamArray::write_count(std::size_t row) const {
    if (row >= height_) {
        throw std::out_of_range("row " + std::to_string(row) + " beyond array height");
    }
    return row < write_count_.size() ? write_count_[row] : 0;
}

CamRow CamRamArray::row(std::size_t r) const {
    if (r >= height_) {
        throw std::out_of_range("row " + std::to_string(r) + " beyond array height");
    }
    return r < rows_.size() ? rows_[r] : CamRow{};
}

std::string CamRamArray::dump() const {
    std::ostringstream out;
    char buf[64];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!rows_[r].valid) {
            continue;
        }
        out << r << ' ';
        for (unsigned b = width_; b-- > 0;) {
            out << (((rows_[r].index_bits >> b) & 1u) ? '1' : '0');
        }
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, rows_[r].value);
        out << ' ' << std::string_view(buf, static_cast<std::size_t>(end - buf)) << '\n';
    }
    return out.str();
}

CamRamArray CamRamArray::from_dump(std::string_view text, std::size_t height, unsigned index_width) {
    CamRamArray arr(height, index_width);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::size_t r = 0;
        std::string bits;
        double value = 0.0;
        if (!(ls >> r >> bits >> value)) {
            throw ParseError("expected '<row> <bits> <value>'", lineno);
        }
        if (r >= height) {
            throw ParseError("row " + std::to_string(r) + " beyond height", lineno);
        }
        if (bits.size() != index_width || bits.find_first_not_of("01") != std::string::npos) {
            throw ParseError("index bits must be " + std::to_string(index_width) + " binary digits", lineno);
        }
        std::uint64_t idx = 0;
        for (char c : bits) {
            idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
        }
        if (arr.lookup_.contains(idx)) {
            throw ParseError("duplicate index bits " + bits, lineno);
        }
        if (arr.rows_.size() <= r) {
            arr.rows_.resize(r + 1);
            arr.write_count_.resize(r + 1, 0);
        }
        if (arr.rows_[r].valid) {
            throw ParseError("row " + std::to_string(r) + " listed twice", lineno);
        }
        arr.rows_[r] = {idx, value, true};
        arr.max_writes_ = std::max(arr.max_writes_, ++arr.write_count_[r]);
        arr.lookup_.emplace(idx, r);
        ++arr.tally_.writes;
    }
    return arr;
}

double endurance_headroom(std::uint64_t max_writes, std::uint64_t budget) {
    if (budget == 0) {
        throw std::invalid_argument("endurance budget must be positive");
    }
    const double used = static_cast<double>(max_writes) / static_cast<double>(budget);
    return used >= 1.0 ? 0.0 : 1.0 - used;
}

}  // namespace camspm
