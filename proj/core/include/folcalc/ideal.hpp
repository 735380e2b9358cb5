#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "folcalc/diff_form.hpp"
#include "folcalc/groebner.hpp"

namespace folcalc {

// Ideal of Q[x0..x_{n-1}], held by generators. Reduced Groebner bases are
// computed lazily and cached per order (write-once, mutex-guarded, so Ideal
// values can be shared across threads).
class Ideal {
  public:
    Ideal() = default;
    Ideal(int nvars, std::vector<Polynomial> gens);

    static Ideal zero(int nvars) { return Ideal(nvars, {}); }
    static Ideal unit(int nvars);
    static Ideal irrelevant(int nvars);  // (x0, ..., x_{n-1})
    static Ideal principal(Polynomial f);

    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    // Reduced GB: monic, auto-reduced, sorted descending by leading monomial.
    const std::vector<Polynomial>& groebner(
        const MonomialOrder& ord = MonomialOrder::grevlex()) const;
    // The canonical printing form: the reduced grevlex GB.
    std::vector<Polynomial> canonical_generators() const { return groebner(); }

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;  // other ⊆ this
    bool equals(const Ideal& other) const;    // double inclusion
    bool is_zero_ideal() const;
    bool is_unit() const;
    bool homogeneous_generators() const;

  private:
    int nvars_ = 0;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::vector<Polynomial>> gb;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal operator+(const Ideal& a, const Ideal& b);

// I ∩ J by eliminating t from t·I + (1−t)·J.
Ideal intersect(const Ideal& a, const Ideal& b);
// (I : J) = ∩_g (I ∩ (g))/g over nonzero generators g of J.
Ideal quotient(const Ideal& i, const Ideal& j);
// (I : J^∞) = ∩_g (I : g^∞), each via elimination of t from I + (1 − t·g).
Ideal saturate(const Ideal& i, const Ideal& j);
Ideal saturate(const Ideal& i, const Polynomial& g);

// f ∈ √I, by the Rabinowitsch trick: 1 ∈ I + (1 − t·f).
bool radical_membership(const Polynomial& f, const Ideal& i);
// Generator-wise mutual radical membership.
bool radical_equal(const Ideal& a, const Ideal& b);
// I + J = (1).
bool is_comaximal(const Ideal& a, const Ideal& b);

// Ideal generated by the components of a form.
Ideal coefficient_ideal(const DiffForm& a);

// Exact division: returns f/g when g | f in the polynomial ring.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

// GB-based elimination helper: generators of I ∩ Q[x0..x_{nv-k-1}] for an
// ideal of Q[x0..x_{nv-1}], with the k trailing variables dropped from the
// ring. The result is a reduced grevlex GB of the eliminated ideal.
std::vector<Polynomial> eliminate_trailing(const std::vector<Polynomial>& gens, int k);

std::string to_string(const Ideal& i, const std::vector<std::string>& names);
std::string to_string(const Ideal& i);

}  // namespace folcalc
