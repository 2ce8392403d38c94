#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpsp/field.hpp"

namespace fpsp {

/// Subset of F_p stored as a membership bit-vector of length p.
class FSet {
public:
    explicit FSet(PrimeField field);

    /// Elements must be canonical residues; duplicates are rejected.
    static FSet from_elements(PrimeField field, std::span<const Elem> elems);
    /// Sets bit v for every v with counts[v] != 0.
    static FSet support(PrimeField field, std::span<const std::uint64_t> counts);
    static FSet full(PrimeField field);
    static FSet nonzero(PrimeField field);

    const PrimeField& field() const { return field_; }
    std::uint32_t p() const { return field_.p(); }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(Elem x) const { return x < field_.p() && ((mask_[x >> 6] >> (x & 63)) & 1u); }
    void insert(Elem x);

    /// Ascending element list.
    std::vector<Elem> elements() const;
    std::vector<std::uint64_t> indicator() const;
    std::span<const std::uint64_t> words() const { return mask_; }

    bool is_subset_of(const FSet& other) const;

    friend bool operator==(const FSet& a, const FSet& b) {
        return a.field_ == b.field_ && a.mask_ == b.mask_;
    }

private:
    PrimeField field_;
    std::vector<std::uint64_t> mask_;
    std::size_t size_ = 0;
};

void require_same_field(const FSet& a, const FSet& b);

enum class Family { Interval, ArithmeticProgression, GeometricProgression, MulSubgroup, Random, Explicit };

struct FamilyParams {
    Family family = Family::Interval;
    Elem start = 0;          // interval/ap/gp first element
    Elem step = 1;           // ap difference
    Elem ratio = 1;          // gp ratio
    std::size_t length = 0;  // interval/ap/gp/random size
    std::uint32_t order = 0; // subgroup order
    bool zero_free = false;  // random draws from F_p^*; other families reject 0
    std::uint64_t instance_id = 0;
    std::vector<Elem> elements;  // explicit
};

FSet generate(const PrimeField& field, const FamilyParams& params, std::uint64_t seed);

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family f);

enum class SetOp { Sum, Diff, Prod, Ratio };

enum class Method { Naive, Transform, Auto };

FSet combine(const FSet& a, const FSet& b, SetOp op, Method method = Method::Auto);
FSet affine(const FSet& a, Elem lambda, Elem shift);

}  // namespace fpsp
