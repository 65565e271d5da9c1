//! Brute-force reference implementations used to validate the core.
//!
//! Everything here runs on a forward dynamic-programming sieve over 0..=bound
//! and never touches the residue-table machinery in [`crate::semigroup`], so
//! the two sides share no code path. Performance is not a goal.

use crate::error::Error;
use crate::semigroup::{AperySet, NumericalSemigroup};

/// Membership table for 0..=bound: `table[n]` is true iff n is a sum of
/// generators.
#[derive(Debug, Clone)]
pub struct MembershipSieve {
    bound: i64,
    table: Vec<bool>,
}

impl MembershipSieve {
    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Table lookup; n < 0 is never a member. Panics beyond the bound.
    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && self.table[n as usize]
    }
}

/// Forward DP: table[0] = true, table[n] = true iff some generator g <= n
/// has table[n - g] true.
pub fn sieve(s: &NumericalSemigroup, bound: i64) -> MembershipSieve {
    assert!(bound >= 0);
    let gens = s.generators();
    let mut table = vec![false; bound as usize + 1];
    table[0] = true;
    for n in 1..=bound {
        table[n as usize] = gens
            .iter()
            .take_while(|&&g| g <= n)
            .any(|&g| table[(n - g) as usize]);
    }
    MembershipSieve { bound, table }
}

/// Sieve that provably covers every gap: the default n0*n1 bound is grown
/// until the top multiplicity-many entries are all members, after which every
/// larger integer is a member too (add copies of the smallest generator).
///
/// The n0*n1 bound alone is only guaranteed when the two smallest generators
/// are coprime; <6,10,61> has Frobenius number 75 > 60.
fn certified_sieve(s: &NumericalSemigroup) -> MembershipSieve {
    let gens = s.generators();
    let m = s.multiplicity();
    let mut bound = if gens.len() >= 2 { gens[0] * gens[1] } else { gens[0] };
    bound = bound.max(m);
    loop {
        let sv = sieve(s, bound);
        let tail_ok = (bound - m + 1..=bound).all(|n| sv.contains(n));
        if tail_ok {
            return sv;
        }
        bound = bound.checked_mul(2).expect("integer overflow in sieve bound");
    }
}

/// Largest n with table[n] false, or −1 when the table has no gaps.
pub fn brute_frobenius(s: &NumericalSemigroup) -> i64 {
    let sv = certified_sieve(s);
    (0..=sv.bound()).rev().find(|&n| !sv.contains(n)).unwrap_or(-1)
}

/// Scan n = 0..=F+a and collect n with table[n] and not table[n−a].
pub fn brute_apery(s: &NumericalSemigroup, a: i64) -> Result<AperySet, Error> {
    let sv = certified_sieve(s);
    if a <= 0 || !sv.contains(a) {
        return Err(Error::NotMember { value: a });
    }
    let f = (0..=sv.bound()).rev().find(|&n| !sv.contains(n)).unwrap_or(-1);
    let hi = f + a; // every Apéry element is at most F + a
    let sv = if hi > sv.bound() { sieve(s, hi) } else { sv };
    let values: Vec<i64> = (0..=hi)
        .filter(|&n| sv.contains(n) && !sv.contains(n - a))
        .collect();
    Ok(AperySet::from_elements(a, &values))
}

/// Mirror criterion: for every 0 <= x <= F exactly one of x, F−x is a member.
pub fn brute_symmetric(s: &NumericalSemigroup) -> bool {
    let sv = certified_sieve(s);
    let f = (0..=sv.bound()).rev().find(|&n| !sv.contains(n)).unwrap_or(-1);
    (0..=f).all(|x| sv.contains(x) != sv.contains(f - x))
}
