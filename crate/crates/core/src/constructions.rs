//! The two parametric families of symmetric numerical semigroups.
//!
//! Family S takes an embedding dimension e >= 4, a positive q, a common
//! difference d with gcd(e + 2q + 1, d) = 1, and generates with
//!
//! ```text
//! m, m+d, (q+1)m + (q+2)d, ..., (q+1)m + (q+e-1)d        (m = e + 2q + 1)
//! ```
//!
//! Family T takes even e >= 4, positive even q >= e-4, odd d with
//! gcd(e + 2q, d) = 1, and generates with
//!
//! ```text
//! m, m+d, q(m+1) + (q - (e-4)/2 + i)d + e/2, 0 <= i <= e-3   (m = e + 2q)
//! ```
//!
//! Both are concatenations of two arithmetic sequences with difference d.
//! This module holds the closed forms for their Apéry sets and Frobenius
//! numbers, the lemma checkers for unique expressions and excluded sums,
//! and [`verify_instance`], which bundles every check for one parameter
//! triple into a [`FamilyReport`].

use std::collections::HashSet;
use std::fmt;

use crate::error::Error;
use crate::oracle;
use crate::presentations::{factorizations, minimal_presentation, presentation_cardinality};
use crate::semigroup::{gcd, AperySet, NumericalSemigroup};

/// Which of the two constructions a parameter triple belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    S,
    T,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::S => write!(f, "S"),
            Family::T => write!(f, "T"),
        }
    }
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in family formula")
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in family formula")
}

/// Validated parameters (e, q, d) for family S, with m = e + 2q + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamsS {
    e: i64,
    q: i64,
    d: i64,
    m: i64,
}

impl ParamsS {
    /// Validate in fixed order: e, q, d, gcd. The error names the first
    /// violated constraint.
    pub fn new(e: i64, q: i64, d: i64) -> Result<Self, Error> {
        if e < 4 {
            return Err(Error::InvalidParams("e must be >= 4"));
        }
        if q < 1 {
            return Err(Error::InvalidParams("q must be >= 1"));
        }
        if d < 1 {
            return Err(Error::InvalidParams("d must be >= 1"));
        }
        let m = checked_add(e, checked_add(2 * q, 1));
        if gcd(m, d) != 1 {
            return Err(Error::InvalidParams("gcd(m, d) must be 1"));
        }
        Ok(ParamsS { e, q, d, m })
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The multiplicity m = e + 2q + 1.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// The e generators m, m+d, (q+1)m + (q+i)d for 2 <= i <= e-1.
    pub fn generator_list(&self) -> Vec<i64> {
        let ParamsS { e, q, d, m } = *self;
        let mut gens = vec![m, m + d];
        let stride = checked_mul(q + 1, m);
        for i in 2..=e - 1 {
            gens.push(checked_add(stride, checked_mul(q + i, d)));
        }
        gens
    }

    /// Build the semigroup through full minimal-generator reduction. When
    /// the generator list is indeed minimal the result carries it verbatim.
    pub fn build(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&self.generator_list())
            .expect("gcd(m, m+d) = 1 makes family S a numerical semigroup")
    }

    /// Apéry set of the family with respect to m, assembled from the three
    /// closed-form pieces
    ///
    /// ```text
    /// beta1 = { k(m+d)                        | 0 <= k <= q+1 }
    /// beta2 = { k(m+d) + (q+1)m + (q+e-1)d    | 0 <= k <= q+1 }
    /// beta3 = { (q+1)m + (q+i)d               | 2 <= i <= e-2 }
    /// ```
    ///
    /// The pieces are disjoint and fill every residue class mod m; assembly
    /// panics if that structure is ever violated.
    pub fn apery_closed_form(&self) -> AperySet {
        let ParamsS { e, q, d, m } = *self;
        let step = checked_add(m, d);
        let shift = checked_add(checked_mul(q + 1, m), checked_mul(q + e - 1, d));
        let mut values = Vec::with_capacity(m as usize);
        for k in 0..=q + 1 {
            values.push(checked_mul(k, step));
        }
        for k in 0..=q + 1 {
            values.push(checked_add(checked_mul(k, step), shift));
        }
        for i in 2..=e - 2 {
            values.push(checked_add(checked_mul(q + 1, m), checked_mul(q + i, d)));
        }
        AperySet::from_elements(m, &values)
    }

    /// Closed-form Frobenius number 4q^2 + (2e + 2d + 4)q + e(d+1) + 1.
    pub fn frobenius_closed_form(&self) -> i64 {
        let ParamsS { e, q, d, .. } = *self;
        let t1 = checked_mul(4, checked_mul(q, q));
        let t2 = checked_mul(checked_add(2 * e, checked_add(2 * d, 4)), q);
        let t3 = checked_mul(e, d + 1);
        checked_add(checked_add(t1, t2), t3) + 1
    }

    /// Excluded-sum lemma: no nonzero Apéry element alpha satisfies
    /// alpha + n_i = k(m+d) + (q+1)m + (q+e-1)d for an interior generator
    /// n_i (2 <= i <= e-2) and 1 <= k <= q.
    pub fn check_notsum(&self, gamma: &NumericalSemigroup) -> bool {
        let ParamsS { e, q, d, m } = *self;
        let ap: HashSet<i64> = apery_elements(gamma, m);
        let step = m + d;
        let shift = (q + 1) * m + (q + e - 1) * d;
        for i in 2..=e - 2 {
            let n_i = (q + 1) * m + (q + i) * d;
            for k in 1..=q {
                let alpha = k * step + shift - n_i;
                if alpha != 0 && ap.contains(&alpha) {
                    return false;
                }
            }
        }
        true
    }
}

/// Validated parameters (e, q, d) for family T, with m = e + 2q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamsT {
    e: i64,
    q: i64,
    d: i64,
    m: i64,
}

impl ParamsT {
    /// Validate in fixed order: e (bound, parity), q (parity, bounds),
    /// d (bound, parity), gcd. The generator formula divides e-4 and e by
    /// two, so odd e is rejected rather than rounded.
    pub fn new(e: i64, q: i64, d: i64) -> Result<Self, Error> {
        if e < 4 {
            return Err(Error::InvalidParams("e must be >= 4"));
        }
        if e % 2 != 0 {
            return Err(Error::InvalidParams("e must be even"));
        }
        if q % 2 != 0 {
            return Err(Error::InvalidParams("q must be even"));
        }
        if q < 2 {
            return Err(Error::InvalidParams("q must be >= 2"));
        }
        if q < e - 4 {
            return Err(Error::InvalidParams("q must be >= e - 4"));
        }
        if d < 1 {
            return Err(Error::InvalidParams("d must be >= 1"));
        }
        if d % 2 == 0 {
            return Err(Error::InvalidParams("d must be odd"));
        }
        let m = checked_add(e, 2 * q);
        if gcd(m, d) != 1 {
            return Err(Error::InvalidParams("gcd(m, d) must be 1"));
        }
        Ok(ParamsT { e, q, d, m })
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The multiplicity m = e + 2q.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// Value of the arithmetic-sequence generator with offset index i,
    /// q(m+1) + (q - (e-4)/2 + i)d + e/2.
    fn upper_generator(&self, i: i64) -> i64 {
        let ParamsT { e, q, d, m } = *self;
        let base = checked_add(checked_mul(q, m + 1), e / 2);
        checked_add(base, checked_mul(q - (e - 4) / 2 + i, d))
    }

    /// The e generators m, m+d, and the e-2 upper-sequence values.
    pub fn generator_list(&self) -> Vec<i64> {
        let mut gens = vec![self.m, self.m + self.d];
        for i in 0..=self.e - 3 {
            gens.push(self.upper_generator(i));
        }
        gens
    }

    /// Build the semigroup through full minimal-generator reduction.
    pub fn build(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&self.generator_list())
            .expect("gcd(m, m+d) = 1 makes family T a numerical semigroup")
    }

    /// Apéry set with respect to m, assembled from
    ///
    /// ```text
    /// gamma1 = { q(m+1) + (q - (e-4)/2 + k)d + e/2 | 0 <= k <= e-3 }
    /// gamma2 = { k(m+d)                            | 0 <= k <= 2q+1 }
    /// ```
    pub fn apery_closed_form(&self) -> AperySet {
        let ParamsT { e, q, d, m } = *self;
        let step = checked_add(m, d);
        let mut values = Vec::with_capacity(m as usize);
        for k in 0..=e - 3 {
            values.push(self.upper_generator(k));
        }
        for k in 0..=2 * q + 1 {
            values.push(checked_mul(k, step));
        }
        AperySet::from_elements(m, &values)
    }

    /// Largest element of the gamma1 piece (k = e-3).
    pub fn max_gamma1(&self) -> i64 {
        self.upper_generator(self.e - 3)
    }

    /// Largest element of the gamma2 piece, (2q+1)(m+d); this is the overall
    /// Apéry maximum, so the Frobenius number comes from gamma2.
    pub fn max_gamma2(&self) -> i64 {
        checked_mul(2 * self.q + 1, checked_add(self.m, self.d))
    }

    /// Closed-form Frobenius number (e + 2q + d)2q + d.
    pub fn frobenius_closed_form(&self) -> i64 {
        let ParamsT { e, q, d, .. } = *self;
        checked_add(checked_mul(checked_add(e, checked_add(2 * q, d)), 2 * q), d)
    }

    /// Excluded-sum lemma: no nonzero Apéry element beta satisfies
    /// beta + n_i = k(m+d) for an upper-sequence generator n_i and
    /// 2 <= k <= 2q.
    pub fn check_notsum(&self, gamma: &NumericalSemigroup) -> bool {
        let ParamsT { e, q, d, m } = *self;
        let ap: HashSet<i64> = apery_elements(gamma, m);
        let step = m + d;
        for i in 0..=e - 3 {
            let n_i = self.upper_generator(i);
            for k in 2..=2 * q {
                let beta = k * step - n_i;
                if beta != 0 && ap.contains(&beta) {
                    return false;
                }
            }
        }
        true
    }
}

fn apery_elements(gamma: &NumericalSemigroup, m: i64) -> HashSet<i64> {
    gamma
        .apery_set(m)
        .expect("m is a generator of the built semigroup")
        .elements()
        .iter()
        .copied()
        .collect()
}

/// Build the family-S semigroup for (e, q, d).
pub fn build_s(e: i64, q: i64, d: i64) -> Result<NumericalSemigroup, Error> {
    Ok(ParamsS::new(e, q, d)?.build())
}

/// Build the family-T semigroup for (e, q, d).
pub fn build_t(e: i64, q: i64, d: i64) -> Result<NumericalSemigroup, Error> {
    Ok(ParamsT::new(e, q, d)?.build())
}

/// Closed-form Apéry set of the family-S semigroup.
pub fn apery_closed_form_s(e: i64, q: i64, d: i64) -> Result<AperySet, Error> {
    Ok(ParamsS::new(e, q, d)?.apery_closed_form())
}

/// Closed-form Apéry set of the family-T semigroup.
pub fn apery_closed_form_t(e: i64, q: i64, d: i64) -> Result<AperySet, Error> {
    Ok(ParamsT::new(e, q, d)?.apery_closed_form())
}

/// Closed-form Frobenius number of the family-S semigroup.
pub fn frobenius_closed_form_s(e: i64, q: i64, d: i64) -> Result<i64, Error> {
    Ok(ParamsS::new(e, q, d)?.frobenius_closed_form())
}

/// Closed-form Frobenius number of the family-T semigroup.
pub fn frobenius_closed_form_t(e: i64, q: i64, d: i64) -> Result<i64, Error> {
    Ok(ParamsT::new(e, q, d)?.frobenius_closed_form())
}

/// Predicted cardinality of a minimal presentation, e(e-1)/2 - 1.
pub fn predicted_presentation_size(e: i64) -> Result<i64, Error> {
    if e < 4 {
        return Err(Error::InvalidParams("e must be >= 4"));
    }
    Ok(checked_mul(e, e - 1) / 2 - 1)
}

/// Unique-expression lemma: every Apéry element except the maximum has
/// exactly one factorization over the generators, and the maximum has at
/// least two.
pub fn check_unique_expression(gamma: &NumericalSemigroup) -> bool {
    let ap = gamma
        .apery_set(gamma.multiplicity())
        .expect("multiplicity is always a member");
    let max = ap.max();
    ap.elements().iter().all(|&w| {
        let count = factorizations(gamma, w).len();
        if w == max {
            count >= 2
        } else {
            count == 1
        }
    })
}

/// Named verdicts of [`verify_instance`], one per theorem or lemma check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    /// The closed-form generator list survives minimal reduction unchanged
    /// and has exactly e entries.
    pub minimality: bool,
    /// Closed-form Apéry set equals the round-robin and the sieve-oracle
    /// computations element-for-element.
    pub apery_match: bool,
    /// Closed-form Frobenius number equals the Apéry-based and sieve-oracle
    /// values.
    pub frobenius_match: bool,
    /// Both symmetry tests pass and the genus is exactly (F+1)/2.
    pub symmetry: bool,
    /// Presentation cardinality equals e(e-1)/2 - 1 and the emitted relation
    /// list has that many entries.
    pub mu_match: bool,
    /// Unique-expression lemma holds on the Apéry set.
    pub unique_expression: bool,
    /// Excluded-sum lemma holds.
    pub notsum: bool,
}

impl Checks {
    pub const NAMES: [&'static str; 7] = [
        "minimality",
        "apery_match",
        "frobenius_match",
        "symmetry",
        "mu_match",
        "unique_expression",
        "notsum",
    ];

    /// Verdicts paired with their names, in schema order.
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, bool)> {
        [
            ("minimality", self.minimality),
            ("apery_match", self.apery_match),
            ("frobenius_match", self.frobenius_match),
            ("symmetry", self.symmetry),
            ("mu_match", self.mu_match),
            ("unique_expression", self.unique_expression),
            ("notsum", self.notsum),
        ]
        .into_iter()
    }

    pub fn all_pass(&self) -> bool {
        self.iter().all(|(_, v)| v)
    }

    /// Name of the first failing check, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        self.iter().find(|&(_, v)| !v).map(|(name, _)| name)
    }
}

/// Full verification record for one parameter triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: Family,
    pub e: i64,
    pub q: i64,
    pub d: i64,
    pub m: i64,
    pub generators: Vec<i64>,
    pub frobenius_closed: i64,
    pub frobenius_computed: i64,
    pub genus: i64,
    pub symmetric: bool,
    pub presentation_cardinality: i64,
    pub checks: Checks,
}

/// Validated parameters of either family, for code that handles both.
#[derive(Debug, Clone, Copy)]
enum FamilyParams {
    S(ParamsS),
    T(ParamsT),
}

impl FamilyParams {
    fn new(family: Family, e: i64, q: i64, d: i64) -> Result<Self, Error> {
        Ok(match family {
            Family::S => FamilyParams::S(ParamsS::new(e, q, d)?),
            Family::T => FamilyParams::T(ParamsT::new(e, q, d)?),
        })
    }

    fn m(&self) -> i64 {
        match self {
            FamilyParams::S(p) => p.m(),
            FamilyParams::T(p) => p.m(),
        }
    }

    fn generator_list(&self) -> Vec<i64> {
        match self {
            FamilyParams::S(p) => p.generator_list(),
            FamilyParams::T(p) => p.generator_list(),
        }
    }

    fn apery_closed_form(&self) -> AperySet {
        match self {
            FamilyParams::S(p) => p.apery_closed_form(),
            FamilyParams::T(p) => p.apery_closed_form(),
        }
    }

    fn frobenius_closed_form(&self) -> i64 {
        match self {
            FamilyParams::S(p) => p.frobenius_closed_form(),
            FamilyParams::T(p) => p.frobenius_closed_form(),
        }
    }

    fn check_notsum(&self, gamma: &NumericalSemigroup) -> bool {
        match self {
            FamilyParams::S(p) => p.check_notsum(gamma),
            FamilyParams::T(p) => p.check_notsum(gamma),
        }
    }
}

/// Run every check for one parameter triple: build and reduce, compare the
/// closed-form Apéry set and Frobenius number against both the core and the
/// sieve oracle, test symmetry, count the minimal presentation, and check
/// the two lemmas.
pub fn verify_instance(family: Family, e: i64, q: i64, d: i64) -> Result<FamilyReport, Error> {
    let params = FamilyParams::new(family, e, q, d)?;
    let m = params.m();
    let list = params.generator_list();
    let closed_ap = params.apery_closed_form();
    let closed_frob = params.frobenius_closed_form();

    let gamma = NumericalSemigroup::from_generators(&list)
        .expect("gcd(m, m+d) = 1 makes the family a numerical semigroup");
    let minimality = gamma.generators() == list.as_slice() && list.len() == e as usize;

    let ap_core = gamma.apery_set(m).expect("m generates the semigroup");
    let ap_oracle = oracle::brute_apery(&gamma, m).expect("m generates the semigroup");
    let apery_match = closed_ap == ap_core && ap_core == ap_oracle;

    let frobenius_computed = gamma.frobenius();
    let frobenius_match =
        closed_frob == frobenius_computed && frobenius_computed == oracle::brute_frobenius(&gamma);

    let genus = gamma.genus_from_apery();
    let symmetric = gamma.is_symmetric();
    let symmetry =
        symmetric && oracle::brute_symmetric(&gamma) && genus == (frobenius_computed + 1) / 2;

    let mu = presentation_cardinality(&gamma) as i64;
    let predicted = predicted_presentation_size(e)?;
    let mu_match = mu == predicted && minimal_presentation(&gamma).cardinality() as i64 == mu;

    let unique_expression = check_unique_expression(&gamma);
    let notsum_ok = params.check_notsum(&gamma);

    Ok(FamilyReport {
        family,
        e,
        q,
        d,
        m,
        generators: list,
        frobenius_closed: closed_frob,
        frobenius_computed,
        genus,
        symmetric,
        presentation_cardinality: mu,
        checks: Checks {
            minimality,
            apery_match,
            frobenius_match,
            symmetry,
            mu_match,
            unique_expression,
            notsum: notsum_ok,
        },
    })
}
