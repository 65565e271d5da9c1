//! Factorizations, Betti elements, and minimal presentations.
//!
//! A factorization of n over the minimal generators n_0 < ... < n_p is an
//! exponent vector (x_0, ..., x_p) with sum x_i * n_i = n. The factorization
//! graph of n has all such vectors as vertices and an edge between two
//! vectors whenever they share a nonzero coordinate. Betti elements are the
//! n whose graph is disconnected, and a minimal presentation needs exactly
//! (components − 1) relations at each Betti element, so its cardinality is
//! the sum of those deficits.
//!
//! Betti candidates are generated as g + w over generators g and Apéry
//! elements w (plus pairwise generator sums): if the graph of n is
//! disconnected, some component avoids the multiplicity m entirely (all
//! factorizations using m are pairwise adjacent), and subtracting one
//! generator of such a component lands in Ap(Γ, m). Tests guard this bound
//! with a full scan.

use std::collections::BTreeSet;
use std::fmt;

use crate::semigroup::NumericalSemigroup;

/// Exponent vector over the minimal generators; position i counts copies of
/// generator n_i. Ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    exponents: Vec<u64>,
}

impl Factorization {
    pub fn new(exponents: Vec<u64>) -> Self {
        Factorization { exponents }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Weighted sum against the generator list, overflow-checked.
    pub fn value(&self, generators: &[i64]) -> i64 {
        assert_eq!(self.exponents.len(), generators.len());
        self.exponents
            .iter()
            .zip(generators)
            .try_fold(0i64, |acc, (&x, &g)| {
                let x = i64::try_from(x).ok()?;
                acc.checked_add(x.checked_mul(g)?)
            })
            .expect("integer overflow in factorization value")
    }

    /// True when the two vectors have a common nonzero coordinate.
    pub fn shares_support(&self, other: &Factorization) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .any(|(&a, &b)| a > 0 && b > 0)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// All factorizations of n, in lexicographic order; empty iff n is not in
/// the semigroup.
///
/// Depth-first search over the generators in descending order, pruning
/// branches whose remainder would go negative.
pub fn factorizations(s: &NumericalSemigroup, n: i64) -> Vec<Factorization> {
    if n < 0 || !s.contains(n) {
        return Vec::new();
    }
    let gens = s.generators();
    let mut exps = vec![0u64; gens.len()];
    let mut out = Vec::new();
    search(gens, gens.len() - 1, n, &mut exps, &mut out);
    out.sort_unstable();
    out
}

fn search(gens: &[i64], i: usize, remaining: i64, exps: &mut Vec<u64>, out: &mut Vec<Factorization>) {
    if i == 0 {
        if remaining % gens[0] == 0 {
            exps[0] = (remaining / gens[0]) as u64;
            out.push(Factorization::new(exps.clone()));
            exps[0] = 0;
        }
        return;
    }
    let g = gens[i];
    for t in 0..=remaining / g {
        exps[i] = t as u64;
        search(gens, i - 1, remaining - t * g, exps, out);
    }
    exps[i] = 0;
}

/// The factorization graph of one element: vertices are its factorizations
/// (lexicographic order), edges join vertices sharing a nonzero coordinate.
#[derive(Debug, Clone)]
pub struct FactorizationGraph {
    element: i64,
    vertices: Vec<Factorization>,
    edges: Vec<(usize, usize)>,
}

impl FactorizationGraph {
    /// Build the graph of `n` inside `s`.
    pub fn of_element(s: &NumericalSemigroup, n: i64) -> Self {
        let vertices = factorizations(s, n);
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i].shares_support(&vertices[j]) {
                    edges.push((i, j));
                }
            }
        }
        FactorizationGraph { element: n, vertices, edges }
    }

    pub fn element(&self) -> i64 {
        self.element
    }

    pub fn vertices(&self) -> &[Factorization] {
        &self.vertices
    }

    /// Edges as index pairs (i, j) with i < j.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Connected components as sorted vertex-index lists, ordered by their
    /// smallest vertex (hence by lexicographically smallest factorization).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }
}

/// A relation of a minimal presentation: two factorizations of `element`
/// taken from different components of its factorization graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub element: i64,
    pub lhs: Factorization,
    pub rhs: Factorization,
}

/// A minimal presentation: one relation per missing connection, grouped by
/// Betti element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn cardinality(&self) -> usize {
        self.relations.len()
    }
}

/// Candidate values that can carry a Betti element: sums of one generator
/// and one Apéry element, plus pairwise generator sums.
fn betti_candidates(s: &NumericalSemigroup) -> Vec<i64> {
    let gens = s.generators();
    let ap = s
        .apery_set(s.multiplicity())
        .expect("multiplicity is always a member");
    let mut cand = BTreeSet::new();
    for &g in gens {
        for &w in ap.elements() {
            cand.insert(g.checked_add(w).expect("integer overflow in Betti candidate"));
        }
    }
    for (i, &g) in gens.iter().enumerate() {
        for &h in &gens[i..] {
            cand.insert(g.checked_add(h).expect("integer overflow in Betti candidate"));
        }
    }
    cand.into_iter().collect()
}

/// All elements whose factorization graph has at least two components,
/// in increasing order.
pub fn betti_elements(s: &NumericalSemigroup) -> Vec<i64> {
    betti_candidates(s)
        .into_iter()
        .filter(|&n| FactorizationGraph::of_element(s, n).component_count() >= 2)
        .collect()
}

/// Cardinality of a minimal presentation: sum over Betti elements of
/// (component count − 1).
pub fn presentation_cardinality(s: &NumericalSemigroup) -> usize {
    betti_candidates(s)
        .into_iter()
        .map(|n| FactorizationGraph::of_element(s, n).component_count().saturating_sub(1))
        .sum()
}

/// Construct a concrete minimal presentation.
///
/// At each Betti element the representative of a component is its
/// lexicographically smallest factorization; every component other than the
/// one holding the overall smallest contributes one relation, written with
/// the anchor representative on the right.
pub fn minimal_presentation(s: &NumericalSemigroup) -> Presentation {
    let mut relations = Vec::new();
    for n in betti_candidates(s) {
        let graph = FactorizationGraph::of_element(s, n);
        let comps = graph.components();
        if comps.len() < 2 {
            continue;
        }
        // vertices are sorted, so component 0 holds vertex 0, the overall
        // lexicographic minimum, and each component's representative is its
        // first vertex
        let anchor = graph.vertices()[comps[0][0]].clone();
        for comp in &comps[1..] {
            relations.push(Relation {
                element: n,
                lhs: graph.vertices()[comp[0]].clone(),
                rhs: anchor.clone(),
            });
        }
    }
    Presentation { relations }
}
