#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfh/errors.hpp"
#include "pfh/linalg/matrix.hpp"
#include "pfh/novikov/group_ring.hpp"
#include "pfh/novikov/novikov_polynomial.hpp"

namespace pfh {

/// Class of a disk: lattice coordinates and basepoint multiplicity n_z.
struct DiskClass {
    MultiExponent exp;
    std::size_t nz = 0;

    friend bool operator==(const DiskClass&, const DiskClass&) = default;
    friend auto operator<=>(const DiskClass&, const DiskClass&) = default;

    std::string str() const { return exp.str() + "@nz=" + std::to_string(nz); }
};

struct Generator {
    std::string name;
    int parity = 0;
    std::string spinc;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators plus, per ordered pair (from, to), a char-2 reduced set of disk classes.
///
/// A disk class packs into the group ring on b+1 coordinates, the last one being n_z;
/// composing disks then becomes ring multiplication.
class TwistedComplex {
  public:
    using Key = std::pair<std::size_t, std::size_t>;

    explicit TwistedComplex(std::size_t b = 0) : b_(b) {}

    std::size_t b() const { return b_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(std::size_t i) const { return gens_.at(i); }
    const std::map<Key, std::vector<DiskClass>>& entries() const { return entries_; }

    std::size_t add_generator(std::string name, int parity, std::string spinc) {
        if (parity != 0 && parity != 1) throw ValidationError("parity of " + name + " must be 0 or 1");
        if (index_.count(name)) throw ValidationError("duplicate generator " + name);
        index_[name] = gens_.size();
        gens_.push_back({std::move(name), parity, std::move(spinc)});
        return gens_.size() - 1;
    }

    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw ValidationError("unknown generator " + name);
        return it->second;
    }

    /// Adds one disk mod 2: a class already present is removed.
    void toggle_disk(std::size_t from, std::size_t to, DiskClass d) {
        if (from >= size() || to >= size()) throw DomainError("disk endpoint out of range");
        if (d.exp.width() != b_)
            throw ValidationError("disk " + gens_[from].name + "->" + gens_[to].name + " has exp of length " +
                                  std::to_string(d.exp.width()) + ", expected " + std::to_string(b_));
        auto& v = entries_[{from, to}];
        auto it = std::lower_bound(v.begin(), v.end(), d);
        if (it != v.end() && *it == d)
            v.erase(it);
        else
            v.insert(it, std::move(d));
        if (v.empty()) entries_.erase({from, to});
    }
    void toggle_disk(const std::string& from, const std::string& to, DiskClass d) {
        toggle_disk(index_of(from), index_of(to), std::move(d));
    }

    const std::vector<DiskClass>& entry(std::size_t from, std::size_t to) const {
        static const std::vector<DiskClass> none;
        auto it = entries_.find({from, to});
        return it == entries_.end() ? none : it->second;
    }

    std::size_t disk_count() const {
        std::size_t n = 0;
        for (const auto& [k, v] : entries_) n += v.size();
        return n;
    }

    static MultiExponent pack(const DiskClass& d) {
        std::vector<std::int64_t> c = d.exp.coords();
        c.push_back(static_cast<std::int64_t>(d.nz));
        return MultiExponent(std::move(c));
    }
    static DiskClass unpack(const MultiExponent& e) {
        std::vector<std::int64_t> c = e.coords();
        const std::int64_t nz = c.back();
        c.pop_back();
        if (nz < 0) throw ValidationError("negative basepoint multiplicity");
        return {MultiExponent(std::move(c)), static_cast<std::size_t>(nz)};
    }

    /// Row i, column j holds the packed classes of disks from generator i to generator j.
    Matrix<GroupRingElement> full_matrix() const {
        Matrix<GroupRingElement> m(size(), size());
        for (const auto& [k, v] : entries_) {
            std::vector<MultiExponent> t;
            t.reserve(v.size());
            for (const auto& d : v) t.push_back(pack(d));
            m(k.first, k.second) = GroupRingElement::from_terms(std::move(t));
        }
        return m;
    }

    /// Replaces all disks by the packed entries of m.
    void assign_full_matrix(const Matrix<GroupRingElement>& m) {
        if (m.rows() != size() || m.cols() != size()) throw DomainError("matrix does not match generators");
        entries_.clear();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (m(i, j).is_zero()) continue;
                std::vector<DiskClass> v;
                for (const auto& t : m(i, j).terms()) v.push_back(unpack(t));
                std::sort(v.begin(), v.end());
                entries_[{i, j}] = std::move(v);
            }
    }

    /// The subcomplex spanned by generators carrying one spin^c label.
    TwistedComplex restricted_to(const std::string& spinc) const {
        TwistedComplex out(b_);
        std::vector<std::size_t> remap(size(), size());
        for (std::size_t i = 0; i < size(); ++i)
            if (gens_[i].spinc == spinc) remap[i] = out.add_generator(gens_[i].name, gens_[i].parity, gens_[i].spinc);
        for (const auto& [k, v] : entries_) {
            if (remap[k.first] == size() || remap[k.second] == size()) continue;
            out.entries_[{remap[k.first], remap[k.second]}] = v;
        }
        return out;
    }

    std::vector<std::string> spinc_labels() const {
        std::vector<std::string> out;
        for (const auto& g : gens_)
            if (std::find(out.begin(), out.end(), g.spinc) == out.end()) out.push_back(g.spinc);
        return out;
    }

    friend bool operator==(const TwistedComplex& a, const TwistedComplex& b) {
        return a.b_ == b.b_ && a.gens_ == b.gens_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t b_;
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> index_;
    std::map<Key, std::vector<DiskClass>> entries_;
};

struct Violation {
    enum class Kind { parity, spinc, square };
    Kind kind;
    std::size_t from = 0;
    std::size_t to = 0;
    std::vector<DiskClass> residual;
    std::string message;
};

/// Checks odd differential, spin^c compatibility and d^2 = 0.
inline std::vector<Violation> validate(const TwistedComplex& c) {
    std::vector<Violation> out;
    const auto& g = c.generators();
    for (const auto& [k, v] : c.entries()) {
        const auto& [i, j] = k;
        if (g[i].parity == g[j].parity)
            out.push_back({Violation::Kind::parity, i, j, v,
                           "disk " + g[i].name + "->" + g[j].name + " does not change parity"});
        if (g[i].spinc != g[j].spinc)
            out.push_back({Violation::Kind::spinc, i, j, v,
                           "disk " + g[i].name + "->" + g[j].name + " joins spin^c " + g[i].spinc + " and " +
                               g[j].spinc});
    }
    const auto m = c.full_matrix();
    const auto sq = m * m;
    for (std::size_t i = 0; i < sq.rows(); ++i)
        for (std::size_t k = 0; k < sq.cols(); ++k) {
            if (sq(i, k).is_zero()) continue;
            Violation v{Violation::Kind::square, i, k, {}, {}};
            for (const auto& t : sq(i, k).terms()) v.residual.push_back(TwistedComplex::unpack(t));
            std::string r;
            for (const auto& d : v.residual) r += (r.empty() ? "" : " + ") + d.str();
            v.message = "d^2 != 0 from " + g[i].name + " to " + g[k].name + ": residual " + r;
            out.push_back(std::move(v));
        }
    return out;
}

inline void require_valid(const TwistedComplex& c) {
    auto v = validate(c);
    if (!v.empty()) throw ValidationError(v.front().message);
}

} // namespace pfh
