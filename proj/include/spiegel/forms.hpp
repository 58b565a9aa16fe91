#ifndef SPIEGEL_FORMS_HPP
#define SPIEGEL_FORMS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "spiegel/errors.hpp"

namespace spiegel::forms {

/// A primitive integral binary quadratic form a*x^2 + b*x*y + c*y^2.
/// For negative discriminant additionally a > 0 (positive definite).
struct QuadForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

/// b^2 - 4ac. Throws BoundExceeded if it leaves the supported range.
std::int64_t discriminant(const QuadForm& f);

/// True iff disc is the discriminant of a quadratic field.
bool is_fundamental(std::int64_t disc);

/// The identity form (1, b0, c0) of the given discriminant, reduced.
QuadForm principal_form(std::int64_t disc);

/// Canonical reduction. Negative discriminant: the unique reduced
/// representative (|b| <= a <= c, b >= 0 when |b| = a or a = c). Positive
/// discriminant: a reduced form on the cycle of f (0 < b < sqrt(disc) and
/// sqrt(disc) - b < 2|a| < sqrt(disc) + b).
QuadForm reduce(QuadForm f);

/// Dirichlet composition followed by reduction. Both forms must be
/// primitive with equal nonsquare discriminant.
QuadForm compose(const QuadForm& f, const QuadForm& g);

/// The form class group of a fundamental discriminant: for disc < 0 the
/// reduced forms themselves, for disc > 0 the cycles of reduced forms under
/// the reduction step. Classes of positive discriminant are proper
/// equivalence classes, so the group is the narrow class group.
class ClassGroup {
  public:
    std::int64_t disc() const { return disc_; }
    std::size_t order() const { return reps_.size(); }

    /// Canonical representative per class (the least reduced form of the
    /// class in (a,b,c) order).
    const std::vector<QuadForm>& elements() const { return reps_; }

    std::size_t identity() const { return identity_; }

    /// Class of a reduced form of this discriminant.
    std::size_t class_index(const QuadForm& reduced) const;

    std::size_t compose_classes(std::size_t i, std::size_t j) const;

    /// Full h x h composition table (row-major), built on first use.
    /// Refused for order() > 5000.
    const std::vector<std::uint32_t>& op_table();

    /// Number of reduced forms (equals order() for disc < 0).
    std::size_t reduced_form_count() const { return class_of_.size(); }

    /// Every reduced form of the discriminant with its class index.
    const std::map<QuadForm, std::uint32_t>& reduced_class_map() const {
        return class_of_;
    }

  private:
    friend ClassGroup class_group(std::int64_t, std::int64_t);

    std::int64_t disc_ = 0;
    std::vector<QuadForm> reps_;
    std::map<QuadForm, std::uint32_t> class_of_;
    std::size_t identity_ = 0;
    std::vector<std::uint32_t> table_;
};

/// Builds the class group of a fundamental discriminant with |disc| <= bound.
ClassGroup class_group(std::int64_t disc, std::int64_t bound = 1'000'000);

/// rk4 from the group itself: log2(N4 / N2) with N2 = #{x : x^2 = e},
/// N4 = #{x : x^4 = e}, i.e. the number of elementary divisors divisible
/// by 4. Uses per-class squaring only, never the full table.
int rk4_oracle(std::int64_t disc, std::int64_t bound = 1'000'000);

} // namespace spiegel::forms

#endif
