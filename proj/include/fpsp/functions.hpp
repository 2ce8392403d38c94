#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpsp/fset.hpp"

namespace fpsp {

/// Total function F_p^* -> F_p^*, stored as a table over 1..p-1.
class FnTable {
public:
    FnTable(PrimeField field, std::vector<Elem> values);  // values[x-1] = f(x)

    const PrimeField& field() const { return field_; }
    Elem operator()(Elem x) const { return values_[x - 1]; }
    const std::vector<Elem>& values() const { return values_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    friend bool operator==(const FnTable& a, const FnTable& b) {
        return a.field_ == b.field_ && a.values_ == b.values_;
    }

private:
    PrimeField field_;
    std::vector<Elem> values_;
    std::string label_;
};

struct FnSpec {
    enum class Kind { Const, Identity, Power, Affine, Random, Table } kind = Kind::Identity;
    std::int64_t a = 0;  // const c / power k / affine u / random seed
    std::int64_t b = 0;  // affine v
    std::vector<Elem> table;
};

FnTable make_fn(const PrimeField& field, const FnSpec& spec);

/// Parses `const:<c>`, `id`, `power:<k>`, `affine:<u>,<v>`, `random:<seed>`, `file:<path>`.
FnTable parse_fn(const PrimeField& field, const std::string& text);

/// Largest fibre size of g over `domain` (default F_p^*).
std::uint32_t mu(const FnTable& g, const std::optional<FSet>& domain = std::nullopt);

FnTable pointwise_product(const FnTable& g, const FnTable& h);

/// {g(a)(h(a) + b) : a in A, b in B}; 0 is kept when it occurs.
FSet f_image(const FnTable& g, const FnTable& h, const FSet& A, const FSet& B);

}  // namespace fpsp
