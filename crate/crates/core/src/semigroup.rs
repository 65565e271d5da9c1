//! Generic numerical-semigroup machinery.
//!
//! A numerical semigroup is a subset of N closed under addition, containing 0,
//! whose generators have gcd 1 (so the complement in N is finite). This module
//! provides:
//! - [`NumericalSemigroup`]: minimal generators, membership, multiplicity
//! - [`AperySet`]: the least element of the semigroup in each residue class
//! - [`GapProfile`]: Frobenius number, genus, and the full gap list
//!
//! Membership and Apéry sets are computed by round-robin shortest-path
//! relaxation over residue classes modulo the base element: starting from 0,
//! each generator g sends the value v in class r to v + g in class r + g,
//! and passes repeat until no class improves. The table entry for class r is
//! then the least element of the semigroup congruent to r, which is exactly
//! the Apéry element for that class.

use std::fmt;
use std::sync::OnceLock;

use crate::error::Error;

/// Greatest common divisor of two nonnegative integers.
pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Least element of the monoid generated by `generators` in each residue
/// class mod `base`, or `i64::MAX` for classes the monoid never meets.
///
/// Round-robin relaxation: each pass lets every generator extend every
/// reached class; values only decrease, so the fixpoint is the table of
/// least representatives.
fn least_in_residue_classes(generators: &[i64], base: i64) -> Vec<i64> {
    debug_assert!(base >= 1);
    let len = base as usize;
    let mut table = vec![i64::MAX; len];
    table[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..len {
            let v = table[r];
            if v == i64::MAX {
                continue;
            }
            for &g in generators {
                let w = v.checked_add(g).expect("integer overflow in residue table");
                let s = ((r as i64 + g) % base) as usize;
                if w < table[s] {
                    table[s] = w;
                    changed = true;
                }
            }
        }
    }
    table
}

/// Membership in the monoid generated by `generators` (sorted, positive).
///
/// Used during minimal-generator reduction, where the generating set may
/// have gcd > 1; unreachable residue classes stay at the MAX sentinel.
fn representable(n: i64, generators: &[i64]) -> bool {
    if n == 0 {
        return true;
    }
    if generators.is_empty() || n < 0 {
        return false;
    }
    let m = generators[0];
    let table = least_in_residue_classes(generators, m);
    let least = table[(n % m) as usize];
    least != i64::MAX && least <= n
}

/// A numerical semigroup, stored as its unique minimal generating system.
///
/// Immutable after construction. The residue table behind [`contains`] is
/// built once on first use; all later queries are O(1) table lookups.
///
/// [`contains`]: NumericalSemigroup::contains
#[derive(Debug)]
pub struct NumericalSemigroup {
    /// Minimal generators, strictly increasing.
    generators: Vec<i64>,
    /// Least element per residue class mod multiplicity, built lazily.
    residue_table: OnceLock<Vec<i64>>,
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        NumericalSemigroup {
            generators: self.generators.clone(),
            residue_table: self.residue_table.clone(),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl NumericalSemigroup {
    /// Build the semigroup generated by `raw`, reducing the list to the
    /// unique minimal generating system (sorted ascending).
    ///
    /// Candidates are tested in descending order; an element is dropped when
    /// it is a nonnegative combination of the smaller retained elements.
    pub fn from_generators(raw: &[i64]) -> Result<Self, Error> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = raw.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositive { value: bad });
        }
        let g = raw.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NonCoprime { gcd: g });
        }

        let mut gens: Vec<i64> = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        // Descending scan: removing a larger element never changes whether a
        // smaller one is representable.
        let mut i = gens.len();
        while i > 0 {
            i -= 1;
            if representable(gens[i], &gens[..i]) {
                gens.remove(i);
            }
        }

        Ok(NumericalSemigroup {
            generators: gens,
            residue_table: OnceLock::new(),
        })
    }

    /// The minimal generators, strictly increasing.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// The smallest nonzero element (the smallest generator).
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    fn residue_table(&self) -> &[i64] {
        self.residue_table
            .get_or_init(|| least_in_residue_classes(&self.generators, self.multiplicity()))
    }

    /// Membership test. Negative integers are never members.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = self.multiplicity();
        self.residue_table()[(n % m) as usize] <= n
    }

    /// Apéry set with respect to `a`: the least element of the semigroup in
    /// each residue class mod `a`.
    ///
    /// Errors with [`Error::NotMember`] unless `a` is a nonzero element.
    pub fn apery_set(&self, a: i64) -> Result<AperySet, Error> {
        if a <= 0 || !self.contains(a) {
            return Err(Error::NotMember { value: a });
        }
        let table = if a == self.multiplicity() {
            self.residue_table().to_vec()
        } else {
            least_in_residue_classes(&self.generators, a)
        };
        debug_assert!(table.iter().all(|&v| v != i64::MAX));
        Ok(AperySet::from_residue_table(a, table))
    }

    /// The greatest integer not in the semigroup: max Ap(Γ, m) − m.
    ///
    /// Returns −1 when the semigroup is all of N.
    pub fn frobenius(&self) -> i64 {
        let max = *self.residue_table().iter().max().expect("nonempty table");
        max - self.multiplicity()
    }

    /// Genus (number of gaps) computed from the Apéry sum:
    /// g = (Σ_{w ∈ Ap(Γ,m)} w)/m − (m−1)/2, evaluated exactly over Z.
    pub fn genus_from_apery(&self) -> i64 {
        let m = self.multiplicity();
        let sum: i64 = self
            .residue_table()
            .iter()
            .try_fold(0i64, |acc, &w| acc.checked_add(w))
            .expect("integer overflow in Apéry sum");
        let num = 2 * sum - m * (m - 1);
        debug_assert_eq!(num % (2 * m), 0, "Apéry sum formula must be integral");
        num / (2 * m)
    }

    /// Enumerate every gap and bundle it with the Frobenius number and genus.
    pub fn gap_profile(&self) -> GapProfile {
        let frobenius = self.frobenius();
        let gaps: Vec<i64> = (1..=frobenius).filter(|&x| !self.contains(x)).collect();
        GapProfile {
            frobenius,
            genus: gaps.len() as i64,
            gaps,
        }
    }

    /// Symmetry test: the Frobenius number is odd and g = (F+1)/2.
    ///
    /// Equivalent to the mirror criterion: for every 0 ≤ x ≤ F exactly one
    /// of x, F−x is in the semigroup.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        f.rem_euclid(2) == 1 && self.genus_from_apery() == (f + 1) / 2
    }
}

/// The Apéry set Ap(Γ, a): for each residue class r mod a, the least element
/// of Γ congruent to r. Position r of `elements` holds the class-r element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    base: i64,
    elements: Vec<i64>,
}

impl AperySet {
    fn from_residue_table(base: i64, elements: Vec<i64>) -> Self {
        debug_assert_eq!(elements.len(), base as usize);
        debug_assert_eq!(elements[0], 0);
        AperySet { base, elements }
    }

    /// Assemble an Apéry set from an unordered list of element values,
    /// indexing them by residue class mod `base`.
    ///
    /// Panics unless the values are nonnegative and form a complete residue
    /// system mod `base` containing 0; callers pass lists whose structure is
    /// a proven theorem, so a violation is a logic error.
    pub fn from_elements(base: i64, values: &[i64]) -> Self {
        assert!(base >= 1, "Apéry base must be positive");
        assert_eq!(
            values.len(),
            base as usize,
            "Apéry set mod {base} must have exactly {base} elements"
        );
        let mut elements = vec![-1_i64; base as usize];
        for &v in values {
            assert!(v >= 0, "Apéry elements are nonnegative, got {v}");
            let r = (v % base) as usize;
            assert!(
                elements[r] == -1,
                "two Apéry elements in residue class {r} mod {base}"
            );
            elements[r] = v;
        }
        assert_eq!(elements[0], 0, "residue class 0 must hold 0");
        AperySet { base, elements }
    }

    /// The base element a.
    pub fn base(&self) -> i64 {
        self.base
    }

    /// Elements indexed by residue class: position r holds the class-r element.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// Number of elements (always equal to the base).
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Largest element.
    pub fn max(&self) -> i64 {
        *self.elements.iter().max().expect("Apéry set is nonempty")
    }

    /// Sum of all elements, overflow-checked.
    pub fn sum(&self) -> i64 {
        self.elements
            .iter()
            .try_fold(0i64, |acc, &w| acc.checked_add(w))
            .expect("integer overflow in Apéry sum")
    }

    /// Element values in increasing order.
    pub fn sorted_values(&self) -> Vec<i64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }
}

/// Frobenius number, genus, and the sorted list of gaps of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapProfile {
    frobenius: i64,
    genus: i64,
    gaps: Vec<i64>,
}

impl GapProfile {
    /// The greatest gap, or −1 when there are none.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// All gaps in increasing order.
    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }
}
