#ifndef GALREP_GL2_HPP
#define GALREP_GL2_HPP

/* Finite group theory of GL2(F_ell) and its central quotients GL2(F_ell)/S_i,
 * S_i = { x^{2^i} } <= F_ell^*. Everything is computed by explicit enumeration
 * (ell <= 31 throughout): canonical coset representatives, the action on
 * V_i = (F_ell^2 - 0)/S_i, conjugacy classes with trace/det invariants,
 * n-cycle candidates for the Frobenius at p, and the brute-force lemma
 * checks (index-2 subgroups of Borel groups, commutator = ker det). */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace galrep {

struct Mat2 {
    uint8_t a = 0, b = 0, c = 0, d = 0;  // [[a, b], [c, d]]
    bool operator==(const Mat2&) const = default;
};

// S_i = {x^{2^i} : x in F_ell*}, sorted. Throws if i > ord_2(ell - 1).
std::vector<uint16_t> subgroup_S(int ell, int level);
int two_adic_valuation(int m);  // ord_2(m)

enum class ClassKind { Scalar, SplitSemisimple, NonsplitSemisimple, NonSemisimple };

// A full GL2(F_ell) similarity class presented by its characteristic data.
struct GL2Class {
    int ell = 0;
    uint16_t trace = 0;
    uint16_t det = 0;
    ClassKind kind = ClassKind::Scalar;
};

// Factored minimal polynomial exactly as printed in the result tables:
// "(x-9)(x-4)", "x^2 + x + 8", "(x-3)^2", "(x-4)".
std::string factored_minpoly(const GL2Class& c);

class GL2Quot {
  public:
    GL2Quot(int ell, int level);
    // explicit subgroup variant; level_label = -1 marks the trivial subgroup
    // (the full group GL2, used by the census checks)
    GL2Quot(int ell, std::vector<uint16_t> S, int level_label);
    static GL2Quot full(int ell) { return GL2Quot(ell, {1}, -1); }

    int ell() const { return ell_; }
    int level() const { return level_; }
    int r() const { return r_; }
    const std::vector<uint16_t>& S() const { return S_; }

    // elements (canonical coset representatives, ascending lexicographic)
    int order() const { return static_cast<int>(elems_.size()); }
    const Mat2& elem(int id) const { return elems_[static_cast<size_t>(id)]; }
    int id_of(const Mat2& m) const;  // any representative of the coset
    int mul(int x, int y) const;
    int inverse(int x) const;
    int identity() const { return id_of(Mat2{1, 0, 0, 1}); }

    // V_level = (F_ell^2 - 0)/S_level
    int num_points() const { return static_cast<int>(orbits_.size()); }
    std::pair<uint8_t, uint8_t> point(int w) const { return orbits_[static_cast<size_t>(w)]; }
    int point_of(uint8_t x, uint8_t y) const;
    int act(int g, int w) const;
    int base_point() const { return point_of(1, 0); }

    // conjugacy classes
    struct ClassInfo {
        int rep;               // lexicographically smallest member id
        uint16_t trace_cls;    // canonical orbit representative of S*tr
        uint16_t det_cls;      // canonical orbit representative of S^2*det
        std::vector<int> members;
        int size() const { return static_cast<int>(members.size()); }
    };
    int num_classes() const { return static_cast<int>(classes_.size()); }
    const ClassInfo& cls(int i) const { return classes_[static_cast<size_t>(i)]; }
    int class_of(int id) const { return class_of_[static_cast<size_t>(id)]; }

    uint16_t trace_of(int id) const;
    uint16_t det_of(int id) const;
    uint16_t trace_class_rep(uint16_t t) const;  // min of S*t
    uint16_t det_class_rep(uint16_t d) const;    // min of S^2*d

    // all elements acting as a single cycle of full length on V_level
    std::vector<int> cyclic_candidates() const;

    // elements (by id) of the commutator subgroup, brute force
    std::vector<int> commutator_subgroup() const;

  private:
    int ell_, level_, r_;
    std::vector<uint16_t> S_, S2_;
    std::vector<Mat2> elems_;
    std::vector<int32_t> coset_id_;   // packed matrix -> element id
    std::vector<std::pair<uint8_t, uint8_t>> orbits_;
    std::vector<int16_t> orbit_id_;   // packed vector -> orbit id
    std::vector<int32_t> class_of_;
    std::vector<ClassInfo> classes_;

    int pack(const Mat2& m) const;
    void build_elements();
    void build_points();
    void build_classes();
};

// Unique GL2 class with the given determinant above a quotient class at level r.
// Requires level == r (so S^2 = S) and d = det(C) in F*/S; throws otherwise.
GL2Class lift_class_by_det(const GL2Quot& G, int class_id, uint16_t d);

// Orbits of V_r fixed by the image of complex conjugation diag(1, -1).
// d is the forced determinant class (-1 mod ell); validated.
int conjugation_fixed_points(int ell, int r, uint16_t d);

// Brute-force enumeration of the index-2 subgroups of the Borel-type group
// B = {[[s, x], [0, s']] : s in S, s' in Sp, x in F_ell}. Each subgroup is a
// sorted list of member indices into the returned element table.
struct BorelIndex2 {
    std::vector<Mat2> elements;              // the group B
    std::vector<std::vector<int>> subgroups; // each sorted, |B|/2 members
};
BorelIndex2 index2_subgroups_of_borel(int ell, const std::vector<uint16_t>& S,
                                      const std::vector<uint16_t>& Sp);

// Fibers of the projection V_{level} -> V_{level-1}: for each point of
// V_{level-1} (indexed by its canonical vector), the V_{level} points above it.
std::vector<std::vector<int>> projection_fibers(const GL2Quot& upper);

}  // namespace galrep

#endif
